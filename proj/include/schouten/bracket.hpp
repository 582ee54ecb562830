#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schouten/exterior.hpp"
#include "schouten/random.hpp"

namespace schouten {

// Signed grading of a homogeneous multivector: tuple length k sits in
// degree -k. The sign rules below always use this signed degree.
inline int omega_degree(int unsigned_degree) { return -unsigned_degree; }

// epsilon(a,b) = (-1)^((deg a + 1)(deg b + 1)) on signed degrees;
// equivalently (-1)^((p-1)(q-1)) on unsigned degrees p, q.
inline int epsilon_sign(int deg_a, int deg_b) {
  long long e = (static_cast<long long>(deg_a) + 1) * (static_cast<long long>(deg_b) + 1);
  return (e % 2 == 0) ? 1 : -1;
}

inline int pow_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Lie bracket of vector fields, [u,v]^i = sum_j (u_j d_j v_i - v_j d_j u_i).
inline Multivector lie_bracket(const Multivector& u, const Multivector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("lie_bracket: dimension mismatch");
  if ((!u.is_zero() && u.homogeneous_degree() != 1) ||
      (!v.is_zero() && v.homogeneous_degree() != 1))
    throw std::invalid_argument("lie_bracket: inputs must be vector fields");
  Multivector r(u.dim());
  for (const auto& [tu, p] : u.components()) {
    for (const auto& [tv, q] : v.components()) {
      int i = tu[0], j = tv[0];
      r.add_component({j}, p * q.partial_derivative(i));
      r.add_component({i}, -(q * p.partial_derivative(j)));
    }
  }
  return r;
}

namespace detail {

// Schouten bracket of single terms p*d_S and q*d_T, by biderivation
// extension from the generators: [v,f] = v(f) and the Lie bracket.
inline Multivector bracket_terms(int dim, const IndexTuple& S, const LaurentPolynomial& p,
                                 const IndexTuple& T, const LaurentPolynomial& q) {
  const int k = static_cast<int>(S.size());
  const int m = static_cast<int>(T.size());
  Multivector zero = Multivector::zero(dim);

  if (k == 0 && m == 0) return zero;

  if (k == 1 && m == 0) {
    // [p d_i, q] = p * dq/dz_i
    return Multivector::scalar(dim, p * q.partial_derivative(S[0]));
  }

  if (k == 1 && m == 1) {
    int i = S[0], j = T[0];
    Multivector r(dim);
    r.add_component({j}, p * q.partial_derivative(i));
    r.add_component({i}, -(q * p.partial_derivative(j)));
    return r;
  }

  if (m >= 2) {
    // Peel the leading factor: q d_T = (q d_{j1}) ^ d_{T'} and apply
    // [a, b^c] = [a,b]^c + (-1)^((deg a + 1) deg b) b^[a,c] with b of
    // signed degree -1, so the sign is (-1)^(k+1).
    IndexTuple head{T[0]};
    IndexTuple tail(T.begin() + 1, T.end());
    LaurentPolynomial one = LaurentPolynomial::one(dim);
    Multivector left = wedge(bracket_terms(dim, S, p, head, q), Multivector::basis(dim, tail));
    Multivector right = wedge(Multivector::term(dim, head, q),
                              bracket_terms(dim, S, p, tail, one));
    int sign = pow_sign(k + 1);
    return sign > 0 ? left + right : left - right;
  }

  // k >= 2 (or k == 0) with m <= 1: swap via graded antisymmetry.
  Multivector swapped = bracket_terms(dim, T, q, S, p);
  int sign = -epsilon_sign(omega_degree(k), omega_degree(m));
  return sign > 0 ? swapped : -swapped;
}

}  // namespace detail

// Schouten bracket, extended bilinearly over components. Degree rule
// deg[a,b] = deg a + deg b + 1 in the signed grading.
inline Multivector schouten_bracket(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("schouten_bracket: dimension mismatch");
  Multivector r(a.dim());
  for (const auto& [S, p] : a.components())
    for (const auto& [T, q] : b.components())
      r += detail::bracket_terms(a.dim(), S, p, T, q);
  return r;
}

// The adjoint action ad_a(b) = [a,b] of the representation of the Schouten
// algebra on the polyvector algebra by derivations.
inline Multivector adjoint_action(const Multivector& a, const Multivector& b) {
  return schouten_bracket(a, b);
}

// Homogeneous element of the Schouten Lie algebra: Lambda^k Theta placed
// in Schouten degree -(k-1).
struct SchoutenElement {
  Multivector value;
  int schouten_degree;

  static SchoutenElement from(const Multivector& v) {
    int k = v.homogeneous_degree();
    if (k < 1) throw std::invalid_argument("SchoutenElement: need homogeneous degree >= 1");
    return SchoutenElement{v, -(k - 1)};
  }
};

// Result of one verification axiom: counterexamples hold the rendered
// inputs together with both sides of the violated identity.
struct AxiomReport {
  std::string axiom;
  int trials = 0;
  std::vector<std::string> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

namespace detail {

inline std::string counterexample_text(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << "; ";
    first = false;
    os << k << " = " << v;
  }
  return os.str();
}

}  // namespace detail

// Randomized verification of the graded Lie axioms. Deterministic for a
// fixed seed; failures are collected, never thrown. The epsilon used in
// the Jacobi weights is injectable so that a deliberately flipped sign can
// be shown to produce counterexamples.
inline std::vector<AxiomReport> verify_graded_lie(
    int n, int degree_bound, int trials, uint64_t seed,
    const std::function<int(int, int)>& jacobi_epsilon = epsilon_sign) {
  if (n < 1 || n > 3) throw std::invalid_argument("verify_graded_lie: n in {1,2,3}");
  if (degree_bound > n) throw std::invalid_argument("verify_graded_lie: degree_bound <= n");
  SplitMix64 rng(seed);

  auto rand_mv = [&](int max_deg, bool nonzero = false) {
    int k = rng.range(0, max_deg);
    return random_multivector(rng, n, k, !nonzero);
  };

  AxiomReport lie_rep{"lie-restriction", 0, {}};
  AxiomReport degree{"degree-rule", 0, {}};
  AxiomReport antisym{"antisymmetry", 0, {}};
  AxiomReport jacobi{"jacobi", 0, {}};
  AxiomReport derivation{"derivation", 0, {}};
  AxiomReport faithful{"faithfulness", 0, {}};
  AxiomReport nilpotent{"nilpotency", 0, {}};

  const int max_counterexamples = 3;
  auto note = [&](AxiomReport& r, std::vector<std::pair<std::string, std::string>> kv) {
    if (static_cast<int>(r.counterexamples.size()) < max_counterexamples)
      r.counterexamples.push_back(detail::counterexample_text(std::move(kv)));
  };

  for (int t = 0; t < trials; ++t) {
    // property 0: restriction to vector fields is the Lie bracket
    {
      Multivector u = random_multivector(rng, n, 1);
      Multivector v = random_multivector(rng, n, 1);
      ++lie_rep.trials;
      if (schouten_bracket(u, v) != lie_bracket(u, v))
        note(lie_rep, {{"u", u.str()}, {"v", v.str()}, {"schouten", schouten_bracket(u, v).str()},
                       {"lie", lie_bracket(u, v).str()}});
    }

    // property 1: the bracket of homogeneous elements of unsigned degrees
    // p, q is homogeneous of unsigned degree p + q - 1 (or zero)
    {
      int ka = rng.range(0, degree_bound), kb = rng.range(0, degree_bound);
      Multivector a = random_multivector(rng, n, ka);
      Multivector b = random_multivector(rng, n, kb);
      Multivector c = schouten_bracket(a, b);
      ++degree.trials;
      if (!c.is_zero() && c.homogeneous_degree() != ka + kb - 1)
        note(degree, {{"a", a.str()}, {"b", b.str()}, {"[a,b]", c.str()}});
    }

    // property 2: graded antisymmetry
    {
      int ka = rng.range(0, degree_bound), kb = rng.range(0, degree_bound);
      Multivector a = random_multivector(rng, n, ka);
      Multivector b = random_multivector(rng, n, kb);
      int s = epsilon_sign(omega_degree(ka), omega_degree(kb));
      Multivector lhs = schouten_bracket(a, b);
      Multivector rhs = schouten_bracket(b, a);
      rhs = s > 0 ? -rhs : rhs;
      ++antisym.trials;
      if (lhs != rhs)
        note(antisym, {{"a", a.str()}, {"b", b.str()}, {"[a,b]", lhs.str()},
                       {"-eps[b,a]", rhs.str()}});
    }

    // property 3: graded Jacobi with the cyclic epsilon weights
    {
      int ka = rng.range(0, degree_bound), kb = rng.range(0, degree_bound),
          kc = rng.range(0, degree_bound);
      Multivector a = random_multivector(rng, n, ka);
      Multivector b = random_multivector(rng, n, kb);
      Multivector c = random_multivector(rng, n, kc);
      int da = omega_degree(ka), db = omega_degree(kb), dc = omega_degree(kc);
      Multivector s1 = schouten_bracket(a, schouten_bracket(b, c));
      Multivector s2 = schouten_bracket(c, schouten_bracket(a, b));
      Multivector s3 = schouten_bracket(b, schouten_bracket(c, a));
      Multivector total =
          Rational(jacobi_epsilon(da, dc)) * s1 + Rational(jacobi_epsilon(dc, db)) * s2 +
          Rational(jacobi_epsilon(db, da)) * s3;
      ++jacobi.trials;
      if (!total.is_zero())
        note(jacobi, {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"sum", total.str()}});
    }

    // property 4: ad_a is a derivation of the wedge algebra
    {
      int ka = rng.range(0, degree_bound), kb = rng.range(0, degree_bound),
          kc = rng.range(0, degree_bound);
      Multivector a = random_multivector(rng, n, ka);
      Multivector b = random_multivector(rng, n, kb);
      Multivector c = random_multivector(rng, n, kc);
      Multivector lhs = schouten_bracket(a, wedge(b, c));
      int s = pow_sign(static_cast<long long>(omega_degree(ka) + 1) * omega_degree(kb));
      Multivector rhs = wedge(schouten_bracket(a, b), c) +
                        Rational(s) * wedge(b, schouten_bracket(a, c));
      ++derivation.trials;
      if (lhs != rhs)
        note(derivation, {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"lhs", lhs.str()},
                          {"rhs", rhs.str()}});
    }

    // faithfulness spot check over the Schouten algebra range
    {
      int k = rng.range(1, n);
      Multivector a = random_multivector(rng, n, k, false);
      ++faithful.trials;
      bool hit = false;
      for (int j = 1; j <= n && !hit; ++j) {
        Multivector zj = Multivector::scalar(n, LaurentPolynomial::variable(n, j));
        if (!schouten_bracket(a, zj).is_zero()) hit = true;
      }
      for (int j = 1; j <= n && !hit; ++j)
        if (!schouten_bracket(a, Multivector::basis(n, {j})).is_zero()) hit = true;
      if (!hit && !a.is_zero()) note(faithful, {{"a", a.str()}});
    }

    // strictly negative degrees <= -2 act nilpotently with index <= n
    if (n >= 2) {
      int k = rng.range(2, n);
      Multivector a = random_multivector(rng, n, k);
      int kb = rng.range(0, n);
      Multivector b = random_multivector(rng, n, kb);
      Multivector it = b;
      for (int step = 0; step < n + 1; ++step) it = schouten_bracket(a, it);
      ++nilpotent.trials;
      if (!it.is_zero())
        note(nilpotent, {{"a", a.str()}, {"b", b.str()}, {"iterate", it.str()}});
    }
  }

  return {lie_rep, degree, antisym, jacobi, derivation, faithful, nilpotent};
}

}  // namespace schouten
