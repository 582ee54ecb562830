#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schouten/rational.hpp"

namespace schouten {

// Exponent vector of a Laurent monomial; entries may be negative.
using Exponents = std::vector<int>;

// Multivariate Laurent polynomial over Rational. Terms are stored in a
// map keyed by exponent vector (lexicographic order, which also fixes the
// printing order); zero coefficients are never stored.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(int vars) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("LaurentPolynomial: need vars >= 1");
  }

  static LaurentPolynomial zero(int vars) { return LaurentPolynomial(vars); }

  static LaurentPolynomial constant(int vars, const Rational& c) {
    LaurentPolynomial p(vars);
    p.add_term(Exponents(static_cast<size_t>(vars), 0), c);
    return p;
  }

  static LaurentPolynomial one(int vars) { return constant(vars, 1); }

  // c * z^e
  static LaurentPolynomial monomial(int vars, const Exponents& e, const Rational& c) {
    LaurentPolynomial p(vars);
    p.add_term(e, c);
    return p;
  }

  // z_i, 1-based index
  static LaurentPolynomial variable(int vars, int i, int power = 1) {
    Exponents e(static_cast<size_t>(vars), 0);
    if (i < 1 || i > vars) throw std::out_of_range("variable index");
    e[static_cast<size_t>(i - 1)] = power;
    return monomial(vars, e, 1);
  }

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != static_cast<size_t>(vars_))
      throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_same_vars(b);
    LaurentPolynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) {
    LaurentPolynomial r(p.vars_);
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  // Total order (vars, then term map); lets polynomials key maps.
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    return a.terms_ < b.terms_;
  }

  // Formal partial derivative with respect to z_i (1-based); handles
  // negative exponents: z^k maps to k z^(k-1).
  LaurentPolynomial partial_derivative(int i) const {
    if (i < 1 || i > vars_) throw std::out_of_range("partial_derivative: index");
    LaurentPolynomial r(vars_);
    size_t idx = static_cast<size_t>(i - 1);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponents d(e);
      d[idx] -= 1;
      r.add_term(d, c * e[idx]);
    }
    return r;
  }

  // Units of the Laurent ring: single term with nonzero coefficient.
  bool is_unit() const { return terms_.size() == 1; }

  // Inverse of a unit c*z^a, namely (1/c)*z^(-a).
  LaurentPolynomial unit_inverse() const {
    if (!is_unit()) throw std::domain_error("unit_inverse: not a unit");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e);
    for (auto& k : inv) k = -k;
    return monomial(vars_, inv, Rational(1) / c);
  }

  // True iff the polynomial is the constant `c`.
  bool is_constant(const Rational& c) const {
    if (c == 0) return is_zero();
    if (terms_.size() != 1) return false;
    const auto& [e, tc] = *terms_.begin();
    return tc == c && std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }

  // c * z1^k1*...*zn^kn, '^' omitted for exponent 1, zero exponents omitted,
  // "c*" omitted when the monomial part is nontrivial and c = 1.
  static std::string monomial_string(const Exponents& e, const Rational& c) {
    std::ostringstream os;
    bool have_var = false;
    std::ostringstream vs;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (have_var) vs << "*";
      vs << "z" << (i + 1);
      if (e[i] != 1) vs << "^" << e[i];
      have_var = true;
    }
    if (!have_var) {
      os << to_string(c);
    } else if (c == 1) {
      os << vs.str();
    } else {
      os << to_string(c) << "*" << vs.str();
    }
    return os.str();
  }

  // Terms joined by " + " / " - " in lexicographic exponent order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        os << monomial_string(e, c);
        first = false;
      } else if (c < 0) {
        os << " - " << monomial_string(e, -c);
      } else {
        os << " + " << monomial_string(e, c);
      }
    }
    return os.str();
  }

 private:
  void check_same_vars(const LaurentPolynomial& o) const {
    if (vars_ != o.vars_)
      throw std::invalid_argument("LaurentPolynomial: variable count mismatch");
  }

  int vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace schouten
