#pragma once

#include "linefree/algebra/elimination.hpp"
#include "linefree/algebra/matrix.hpp"
#include "linefree/algebra/modular.hpp"
#include "linefree/algebra/monomial.hpp"
#include "linefree/algebra/number.hpp"
#include "linefree/algebra/prime_field.hpp"
#include "linefree/arrangement/arrangement.hpp"
#include "linefree/arrangement/tvector.hpp"
#include "linefree/catalogue/embedded.hpp"
#include "linefree/catalogue/entry.hpp"
#include "linefree/catalogue/format.hpp"
#include "linefree/classifier/classify.hpp"
#include "linefree/classifier/quadratic.hpp"
#include "linefree/classifier/table.hpp"
#include "linefree/error.hpp"
#include "linefree/syzygy/graded.hpp"
#include "linefree/syzygy/jacobian.hpp"
#include "linefree/syzygy/polynomial.hpp"
