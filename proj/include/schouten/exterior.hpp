#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schouten/laurent.hpp"

namespace schouten {

// Strictly increasing 1-based index tuple; () is the empty tuple of the
// degree-0 component.
using IndexTuple = std::vector<int>;

namespace detail {

// Merge two strictly increasing tuples, counting transpositions.
// Returns (merged tuple, sign); sign 0 when an index repeats.
inline std::pair<IndexTuple, int> merge_tuples(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return {IndexTuple{}, 0};
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return {out, sign};
}

// Sort an arbitrary tuple into strictly increasing order; sign of the
// permutation, 0 on repeats.
inline std::pair<IndexTuple, int> normalize_tuple(IndexTuple t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    size_t j = i;
    while (j > 0 && t[j] < t[j - 1]) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
      --j;
    }
    if (j > 0 && t[j] == t[j - 1]) return {IndexTuple{}, 0};
  }
  return {t, sign};
}

}  // namespace detail

struct PolyvectorTag;
struct FormTag;

// Graded element of the exterior algebra on n symbols with Laurent
// coefficients. The tag keeps multivectors (basis d/dz_i, degree -k) and
// differential forms (basis dz_i, degree +k) apart at the type level.
template <typename Tag>
class GradedElement {
 public:
  explicit GradedElement(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("GradedElement: need dim >= 1");
  }

  static GradedElement zero(int dim) { return GradedElement(dim); }

  static GradedElement scalar(int dim, const LaurentPolynomial& p) {
    GradedElement e(dim);
    e.add_component(IndexTuple{}, p);
    return e;
  }

  static GradedElement one(int dim) { return scalar(dim, LaurentPolynomial::one(dim)); }

  // p * basis(t); t need not be sorted, the permutation sign is applied.
  static GradedElement term(int dim, IndexTuple t, const LaurentPolynomial& p) {
    auto [s, sign] = detail::normalize_tuple(std::move(t));
    GradedElement e(dim);
    if (sign == 0) return e;
    e.add_component(s, sign < 0 ? -p : p);
    return e;
  }

  static GradedElement basis(int dim, IndexTuple t) {
    return term(dim, std::move(t), LaurentPolynomial::one(dim));
  }

  int dim() const { return dim_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<IndexTuple, LaurentPolynomial>& components() const { return comps_; }

  void add_component(const IndexTuple& t, const LaurentPolynomial& p) {
    if (p.vars() != dim_) throw std::invalid_argument("component variable count mismatch");
    if (p.is_zero()) return;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 1 || t[i] > dim_) throw std::out_of_range("basis index out of range");
      if (i + 1 < t.size() && t[i] >= t[i + 1])
        throw std::invalid_argument("tuple not strictly increasing");
    }
    auto it = comps_.find(t);
    if (it == comps_.end()) {
      comps_.emplace(t, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  LaurentPolynomial component(const IndexTuple& t) const {
    auto it = comps_.find(t);
    return it == comps_.end() ? LaurentPolynomial::zero(dim_) : it->second;
  }

  // True iff every stored tuple has length k.
  bool is_homogeneous(int k) const {
    for (const auto& [t, p] : comps_)
      if (static_cast<int>(t.size()) != k) return false;
    return true;
  }

  // Unsigned degree when homogeneous; -1 for 0 or inhomogeneous elements.
  int homogeneous_degree() const {
    if (comps_.empty()) return -1;
    int k = static_cast<int>(comps_.begin()->first.size());
    return is_homogeneous(k) ? k : -1;
  }

  // The sub-element of components with tuple length k.
  GradedElement graded_part(int k) const {
    GradedElement e(dim_);
    for (const auto& [t, p] : comps_)
      if (static_cast<int>(t.size()) == k) e.comps_.emplace(t, p);
    return e;
  }

  GradedElement operator-() const {
    GradedElement e(dim_);
    for (const auto& [t, p] : comps_) e.comps_.emplace(t, -p);
    return e;
  }

  GradedElement& operator+=(const GradedElement& o) {
    check_same(o);
    for (const auto& [t, p] : o.comps_) add_component(t, p);
    return *this;
  }

  GradedElement& operator-=(const GradedElement& o) {
    check_same(o);
    for (const auto& [t, p] : o.comps_) add_component(t, -p);
    return *this;
  }

  friend GradedElement operator+(GradedElement a, const GradedElement& b) {
    a += b;
    return a;
  }

  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    a -= b;
    return a;
  }

  friend GradedElement operator*(const LaurentPolynomial& p, const GradedElement& e) {
    GradedElement r(e.dim_);
    for (const auto& [t, q] : e.comps_) r.add_component(t, p * q);
    return r;
  }

  friend GradedElement operator*(const Rational& c, const GradedElement& e) {
    GradedElement r(e.dim_);
    if (c == 0) return r;
    for (const auto& [t, q] : e.comps_) r.comps_.emplace(t, c * q);
    return r;
  }

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.dim_ == b.dim_ && a.comps_ == b.comps_;
  }

  friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, p] : comps_) {
      if (!first) os << " + ";
      first = false;
      if (t.empty()) {
        os << (p.term_count() > 1 ? "(" + p.str() + ")" : p.str());
        continue;
      }
      std::string basis;
      for (size_t i = 0; i < t.size(); ++i) {
        if (i) basis += "^";
        basis += basis_symbol() + std::to_string(t[i]);
      }
      if (p.is_constant(1)) {
        os << basis;
      } else if (p.term_count() > 1) {
        os << "(" << p.str() << ")*" << basis;
      } else {
        os << p.str() << "*" << basis;
      }
    }
    return os.str();
  }

 private:
  static std::string basis_symbol();

  void check_same(const GradedElement& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }

  int dim_;
  std::map<IndexTuple, LaurentPolynomial> comps_;
};

using Multivector = GradedElement<PolyvectorTag>;
using DifferentialForm = GradedElement<FormTag>;

template <>
inline std::string GradedElement<PolyvectorTag>::basis_symbol() { return "d"; }
template <>
inline std::string GradedElement<FormTag>::basis_symbol() { return "dz"; }

// Wedge product: bilinear, concatenate-and-sort with permutation sign.
template <typename Tag>
GradedElement<Tag> wedge(const GradedElement<Tag>& a, const GradedElement<Tag>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  GradedElement<Tag> r(a.dim());
  for (const auto& [ta, pa] : a.components()) {
    for (const auto& [tb, pb] : b.components()) {
      auto [t, sign] = detail::merge_tuples(ta, tb);
      if (sign == 0) continue;
      LaurentPolynomial p = pa * pb;
      r.add_component(t, sign < 0 ? -p : p);
    }
  }
  return r;
}

// Exterior derivative; degree +1, d.d = 0.
inline DifferentialForm exterior_derivative(const DifferentialForm& w) {
  DifferentialForm r(w.dim());
  for (const auto& [t, p] : w.components()) {
    for (int i = 1; i <= w.dim(); ++i) {
      LaurentPolynomial dp = p.partial_derivative(i);
      if (dp.is_zero()) continue;
      IndexTuple u;
      u.reserve(t.size() + 1);
      u.push_back(i);
      u.insert(u.end(), t.begin(), t.end());
      auto [s, sign] = detail::normalize_tuple(std::move(u));
      if (sign == 0) continue;
      r.add_component(s, sign < 0 ? -dp : dp);
    }
  }
  return r;
}

namespace detail {

// Contraction with a single basis vector d/dz_i:
// dz_{j1}^...^dz_{jm} -> (-1)^(pos-1) with dz_i removed.
inline DifferentialForm contract_basis_vector(int i, const DifferentialForm& w) {
  DifferentialForm r(w.dim());
  for (const auto& [t, p] : w.components()) {
    for (size_t pos = 0; pos < t.size(); ++pos) {
      if (t[pos] != i) continue;
      IndexTuple u;
      u.reserve(t.size() - 1);
      for (size_t k = 0; k < t.size(); ++k)
        if (k != pos) u.push_back(t[k]);
      r.add_component(u, pos % 2 == 0 ? p : -p);
      break;
    }
  }
  return r;
}

}  // namespace detail

// Interior product. For a decomposable P = u1^...^uk the frozen convention
// is iota_P = iota_{u1} o ... o iota_{uk}: the rightmost factor contracts
// first. Coefficients of P pull out (the contraction is O-linear in P).
inline DifferentialForm interior_product(const Multivector& v, const DifferentialForm& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("interior_product: dimension mismatch");
  DifferentialForm r(w.dim());
  for (const auto& [t, p] : v.components()) {
    DifferentialForm acc = w;
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      acc = detail::contract_basis_vector(*it, acc);
    r += p * acc;
  }
  return r;
}

// Cartan formula L_v = d o iota_v + iota_v o d for a vector field v.
inline DifferentialForm lie_derivative(const Multivector& v, const DifferentialForm& w) {
  if (v.homogeneous_degree() != 1 && !v.is_zero())
    throw std::invalid_argument("lie_derivative: v must be a vector field");
  return exterior_derivative(interior_product(v, w)) +
         interior_product(v, exterior_derivative(w));
}

}  // namespace schouten
