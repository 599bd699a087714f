#pragma once

// Verdicts free / nearly free / neither for arrangements with coordinates.
//
// The verdict comes from the generator degrees of the syzygy module. Two
// numeric criteria are recomputed independently and must agree with it:
//   free with exponents (d1, d2):  mdr (d - 1 - mdr) + tau = (d - 1)^2
//   nearly free, mdr <= d/2:       mdr is a root of the Dimca quadratic
// A disagreement is a bug and raises InternalInconsistency.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linefree/arrangement/arrangement.hpp"
#include "linefree/classifier/quadratic.hpp"
#include "linefree/error.hpp"
#include "linefree/syzygy/graded.hpp"
#include "linefree/syzygy/jacobian.hpp"

namespace linefree {

enum class Verdict { Free, NearlyFree, Neither, ScreenOnly };

enum class CriterionStatus { Holds, Fails, NotApplicable };

inline std::string to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Holds: return "holds";
    case CriterionStatus::Fails: return "fails";
    case CriterionStatus::NotApplicable: return "not applicable";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Neither;
  /// (d1, d2) for Free and NearlyFree.
  std::optional<std::pair<int, int>> exponents;
  /// Result of the combinatorial screen (the only evidence for ScreenOnly).
  bool screen_passes = false;

  long d = 0;
  long mu = 0;
  DimcaQuadratic quadratic;
  std::optional<int> mdr;
  std::optional<long> tau;
  std::optional<ResolutionShape> shape;
  std::vector<int> generator_degrees;
  /// mdr is a root of the quadratic (only meaningful for mdr <= d/2).
  CriterionStatus dimca_criterion = CriterionStatus::NotApplicable;
  /// mdr (d - 1 - mdr) + tau = (d - 1)^2.
  CriterionStatus free_identity = CriterionStatus::NotApplicable;

  /// "FREE exponents (3,3)", "NEARLY FREE exponents (2,2)", "NEITHER",
  /// "SCREEN ONLY pass".
  std::string verdict_string() const {
    auto ex = [&] {
      return " exponents (" + std::to_string(exponents->first) + "," + std::to_string(exponents->second) + ")";
    };
    switch (verdict) {
      case Verdict::Free: return "FREE" + ex();
      case Verdict::NearlyFree: return "NEARLY FREE" + ex();
      case Verdict::Neither: return "NEITHER";
      case Verdict::ScreenOnly: return std::string("SCREEN ONLY ") + (screen_passes ? "pass" : "fail");
    }
    return "?";
  }
};

struct ClassifyOptions {
  ComputeOptions compute;
  /// Largest syzygy degree searched for generators; defaults to d.
  std::optional<int> max_degree;
};

/// Without coordinates only the screen is available.
inline Classification classify(const CombinatorialProfile& p) {
  Classification c;
  c.verdict = Verdict::ScreenOnly;
  c.d = p.d;
  c.mu = p.mu;
  c.quadratic = quadratic(p);
  c.screen_passes = screen(p);
  return c;
}

inline Classification classify(const Arrangement& arr, const ClassifyOptions& opt = {}) {
  Classification c = classify(profile(arr));
  const int d = static_cast<int>(arr.size());
  const int k_max = opt.max_degree.value_or(d);
  if (k_max < d - 1) {
    throw std::invalid_argument("maximal degree " + std::to_string(k_max) + " is below d - 1 = " +
                                std::to_string(d - 1));
  }

  HomogeneousPoly f = defining_polynomial(arr);
  JacobianTriple j = jacobian(f);
  if (!euler_identity_holds(f, j)) throw InternalInconsistency("Euler identity fails for the Jacobian");

  GradedSyzygyData data = graded_syzygies(j, k_max, opt.compute);
  c.mdr = data.mdr();
  if (!c.mdr) throw InternalInconsistency("no Jacobian relation up to degree d - 1");
  const long r = *c.mdr;
  c.generator_degrees = data.generator_degrees();
  c.shape = resolution_shape(data);
  c.tau = tau_stable(j, data, opt.compute);
  if (*c.tau != c.mu) {
    throw InternalInconsistency("global Tjurina number " + std::to_string(*c.tau) +
                                " differs from total Milnor number " + std::to_string(c.mu));
  }

  if (2 * r <= d) {
    c.dimca_criterion = c.quadratic.value(r) == 0 ? CriterionStatus::Holds : CriterionStatus::Fails;
  }
  c.free_identity = r * (d - 1 - r) + *c.tau == static_cast<long>(d - 1) * (d - 1) ? CriterionStatus::Holds
                                                                                   : CriterionStatus::Fails;

  if (auto* fs = std::get_if<FreeShape>(&*c.shape)) {
    if (fs->d1 != r) throw InternalInconsistency("free: smallest exponent differs from mdr");
    if (c.free_identity != CriterionStatus::Holds) {
      throw InternalInconsistency("free shape but the tau identity fails");
    }
    if (c.dimca_criterion == CriterionStatus::Holds) {
      throw InternalInconsistency("free shape but mdr is a root of the quadratic");
    }
    c.verdict = Verdict::Free;
    c.exponents = {fs->d1, fs->d2};
  } else if (auto* ns = std::get_if<NearlyFreeShape>(&*c.shape)) {
    if (ns->d1 != r) throw InternalInconsistency("nearly free: smallest exponent differs from mdr");
    if (c.dimca_criterion == CriterionStatus::Fails) {
      throw InternalInconsistency("nearly free shape but mdr is not a root of the quadratic");
    }
    c.verdict = Verdict::NearlyFree;
    c.exponents = {ns->d1, ns->d2};
  } else {
    if (c.dimca_criterion == CriterionStatus::Holds) {
      throw InternalInconsistency("mdr is a root of the quadratic but the generators are not nearly free");
    }
    c.verdict = Verdict::Neither;
  }
  return c;
}

}  // namespace linefree
