#pragma once

#include <cstdint>
#include <vector>

#include "schouten/exterior.hpp"
#include "schouten/laurent.hpp"

namespace schouten {

// SplitMix64. Chosen over <random> engines because the byte stream must be
// identical across platforms and standard-library implementations; the
// whole algorithm is these three lines.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at the tiny ranges
  // used here and keeps the stream easy to reproduce elsewhere.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

  bool flip() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

// Small nonzero rational with numerator in [-3,3], denominator in {1,2,3}.
inline Rational random_rational(SplitMix64& rng, bool allow_zero = false) {
  for (;;) {
    int num = rng.range(-3, 3);
    if (num == 0 && !allow_zero) continue;
    int den = rng.range(1, 3);
    return Rational(num) / den;
  }
}

// Laurent polynomial with up to max_terms monomials, exponents in [-bound, bound].
inline LaurentPolynomial random_laurent(SplitMix64& rng, int vars, int max_terms = 3,
                                        int bound = 2, bool allow_zero = true) {
  LaurentPolynomial p(vars);
  int terms = rng.range(allow_zero ? 0 : 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<size_t>(vars));
    for (auto& k : e) k = rng.range(-bound, bound);
    p.add_term(e, random_rational(rng));
  }
  if (!allow_zero && p.is_zero()) {
    Exponents e(static_cast<size_t>(vars), 0);
    p.add_term(e, 1);
  }
  return p;
}

namespace detail {

inline std::vector<IndexTuple> tuples_of_length(int dim, int k) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  // simple recursive enumeration in lexicographic order
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= dim; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace detail

// Homogeneous multivector of unsigned degree k with small Laurent coefficients.
inline Multivector random_multivector(SplitMix64& rng, int dim, int k, bool allow_zero = true) {
  Multivector v(dim);
  auto tuples = detail::tuples_of_length(dim, k);
  for (const auto& t : tuples) {
    if (rng.below(2) == 0) continue;
    v.add_component(t, random_laurent(rng, dim, 2, 2));
  }
  if (!allow_zero && v.is_zero() && !tuples.empty())
    v.add_component(tuples[rng.below(tuples.size())], random_laurent(rng, dim, 2, 2, false));
  return v;
}

inline DifferentialForm random_form(SplitMix64& rng, int dim, int k, bool allow_zero = true) {
  DifferentialForm w(dim);
  auto tuples = detail::tuples_of_length(dim, k);
  for (const auto& t : tuples) {
    if (rng.below(2) == 0) continue;
    w.add_component(t, random_laurent(rng, dim, 2, 2));
  }
  if (!allow_zero && w.is_zero() && !tuples.empty())
    w.add_component(tuples[rng.below(tuples.size())], random_laurent(rng, dim, 2, 2, false));
  return w;
}

// Unit Laurent coefficient c*z^a for volume forms.
inline LaurentPolynomial random_unit(SplitMix64& rng, int vars, int bound = 1) {
  Exponents e(static_cast<size_t>(vars));
  for (auto& k : e) k = rng.range(-bound, bound);
  return LaurentPolynomial::monomial(vars, e, random_rational(rng));
}

}  // namespace schouten
