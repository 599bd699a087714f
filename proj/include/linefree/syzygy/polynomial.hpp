#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linefree/algebra/monomial.hpp"
#include "linefree/algebra/number.hpp"

namespace linefree {

/// Homogeneous form in x, y, z. Sparse; zero coefficients are never stored.
class HomogeneousPoly {
 public:
  using Terms = std::map<Monomial, Number>;

  HomogeneousPoly() = default;
  explicit HomogeneousPoly(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static HomogeneousPoly linear(const Number& a, const Number& b, const Number& c) {
    HomogeneousPoly p(1);
    p.add_term(Monomial{{1, 0, 0}}, a);
    p.add_term(Monomial{{0, 1, 0}}, b);
    p.add_term(Monomial{{0, 0, 1}}, c);
    return p;
  }
  static HomogeneousPoly constant(const Number& c) {
    HomogeneousPoly p(0);
    p.add_term(Monomial{}, c);
    return p;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Number coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Number{} : it->second;
  }

  void add_term(const Monomial& m, const Number& c) {
    if (m.degree() != degree_) throw std::invalid_argument("monomial degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  friend HomogeneousPoly operator*(const HomogeneousPoly& p, const HomogeneousPoly& q) {
    HomogeneousPoly out(p.degree_ + q.degree_);
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) out.add_term(m1.times(m2), c1 * c2);
    return out;
  }

  HomogeneousPoly times(const Monomial& m) const {
    HomogeneousPoly out(degree_ + m.degree());
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono.times(m), c);
    return out;
  }

  HomogeneousPoly scaled(const Number& s) const {
    HomogeneousPoly out(degree_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  /// Formal partial derivative with respect to variable v (0 = x, 1 = y, 2 = z).
  HomogeneousPoly derivative(int v) const {
    HomogeneousPoly out(degree_ > 0 ? degree_ - 1 : 0);
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [m, c] : terms_) {
      int e = m.exponents[idx];
      if (e == 0) continue;
      Monomial d = m;
      --d.exponents[idx];
      out.add_term(d, c * Number(e));
    }
    return out;
  }

  /// Coefficients in the graded-lex basis of S_degree.
  std::vector<Number> dense() const {
    std::vector<Number> v(graded_dimension(degree_));
    for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
    return v;
  }

  static HomogeneousPoly from_dense(int degree, const std::vector<Number>& coeffs) {
    HomogeneousPoly p(degree);
    MonomialBasis b = monomial_basis(degree);
    for (std::size_t i = 0; i < b.size(); ++i) p.add_term(b[i], coeffs[i]);
    return p;
  }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      const auto& [m, c] = *it;
      s += "(" + c.to_string() + ")";
      if (m.degree() > 0) s += "*" + m.to_string();
    }
    return s;
  }

 private:
  int degree_ = 0;
  Terms terms_;
};

}  // namespace linefree
