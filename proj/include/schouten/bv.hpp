#pragma once

#include <stdexcept>

#include "schouten/bracket.hpp"
#include "schouten/exterior.hpp"

namespace schouten {

// Volume form f * dz_1^...^dz_n with f a unit of the Laurent ring, the
// algebraic form of "nowhere vanishing" on the torus model.
class VolumeForm {
 public:
  VolumeForm(int dim, LaurentPolynomial coeff) : dim_(dim), coeff_(std::move(coeff)) {
    if (coeff_.vars() != dim_) throw std::invalid_argument("VolumeForm: variable count mismatch");
    if (!coeff_.is_unit()) throw std::invalid_argument("VolumeForm: coefficient must be a unit");
  }

  static VolumeForm standard(int dim) { return VolumeForm(dim, LaurentPolynomial::one(dim)); }

  int dim() const { return dim_; }
  const LaurentPolynomial& coeff() const { return coeff_; }

  IndexTuple top_tuple() const {
    IndexTuple t(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) t[static_cast<size_t>(i)] = i + 1;
    return t;
  }

  DifferentialForm form() const {
    DifferentialForm w(dim_);
    w.add_component(top_tuple(), coeff_);
    return w;
  }

 private:
  int dim_;
  LaurentPolynomial coeff_;
};

// i_Phi(P) = iota_P Phi; sends unsigned degree k to form degree n-k.
inline DifferentialForm contract_volume(const VolumeForm& vol, const Multivector& p) {
  if (vol.dim() != p.dim()) throw std::invalid_argument("contract_volume: dimension mismatch");
  return interior_product(p, vol.form());
}

namespace detail {

// Sign s with iota_{d_S}(dz_1^...^dz_n) = s * dz_{S^c}; computed through
// the contraction itself so there is a single source of sign truth.
inline int complement_contraction_sign(int dim, const IndexTuple& s_tuple,
                                       const IndexTuple& complement) {
  DifferentialForm top(dim);
  IndexTuple all(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) all[static_cast<size_t>(i)] = i + 1;
  top.add_component(all, LaurentPolynomial::one(dim));
  DifferentialForm c = interior_product(Multivector::basis(dim, s_tuple), top);
  LaurentPolynomial coeff = c.component(complement);
  if (coeff.is_constant(1)) return 1;
  if (coeff.is_constant(-1)) return -1;
  throw std::logic_error("complement contraction did not produce a unit sign");
}

}  // namespace detail

// Inverse of i_Phi: the unique P with iota_P Phi = w. Exists because the
// coefficient of Phi is a unit; the basis system is triangular.
inline Multivector invert_contract(const VolumeForm& vol, const DifferentialForm& w) {
  if (vol.dim() != w.dim()) throw std::invalid_argument("invert_contract: dimension mismatch");
  const int n = vol.dim();
  LaurentPolynomial finv = vol.coeff().unit_inverse();
  Multivector out(n);
  for (const auto& [t, coeff] : w.components()) {
    IndexTuple comp;
    comp.reserve(static_cast<size_t>(n) - t.size());
    size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
      if (pos < t.size() && t[pos] == i) {
        ++pos;
      } else {
        comp.push_back(i);
      }
    }
    int s = detail::complement_contraction_sign(n, comp, t);
    LaurentPolynomial p = coeff * finv;
    out.add_component(comp, s < 0 ? -p : p);
  }
  return out;
}

// The operator delta = i_Phi^{-1} o d o i_Phi of degree +1 with delta^2 = 0.
// On vector fields it is the Phi-divergence.
inline Multivector bv_delta(const VolumeForm& vol, const Multivector& p) {
  return invert_contract(vol, exterior_derivative(contract_volume(vol, p)));
}

// Koszul's formula
//   [a,b] = (-1)^deg a (delta(ab) - delta(a)b - (-1)^(deg a deg b) delta(b)a)
// on homogeneous a, b (signed degrees), extended bilinearly. Must agree
// with schouten_bracket for every valid volume form.
inline Multivector koszul_bracket(const VolumeForm& vol, const Multivector& a,
                                  const Multivector& b) {
  if (a.dim() != b.dim() || a.dim() != vol.dim())
    throw std::invalid_argument("koszul_bracket: dimension mismatch");
  const int n = a.dim();
  Multivector out(n);
  for (int ka = 0; ka <= n; ++ka) {
    Multivector ah = a.graded_part(ka);
    if (ah.is_zero()) continue;
    for (int kb = 0; kb <= n; ++kb) {
      Multivector bh = b.graded_part(kb);
      if (bh.is_zero()) continue;
      int da = omega_degree(ka), db = omega_degree(kb);
      Multivector term = bv_delta(vol, wedge(ah, bh)) - wedge(bv_delta(vol, ah), bh) -
                         Rational(pow_sign(static_cast<long long>(da) * db)) *
                             wedge(bv_delta(vol, bh), ah);
      out += Rational(pow_sign(da)) * term;
    }
  }
  return out;
}

// L_v Phi = 0; for vector fields this is equivalent to bv_delta(v) = 0.
inline bool is_divergence_free(const VolumeForm& vol, const Multivector& v) {
  if (!v.is_zero() && v.homogeneous_degree() != 1)
    throw std::invalid_argument("is_divergence_free: v must be a vector field");
  return lie_derivative(v, vol.form()).is_zero();
}

// The pairing on forms corresponding to the wedge of polyvectors.
inline DifferentialForm yukawa_product(const VolumeForm& vol, const DifferentialForm& a,
                                       const DifferentialForm& b) {
  if (a.dim() != b.dim() || a.dim() != vol.dim())
    throw std::invalid_argument("yukawa_product: dimension mismatch");
  return contract_volume(vol, wedge(invert_contract(vol, a), invert_contract(vol, b)));
}

// Transport of the Schouten bracket to forms, written directly in terms of
// d and the Yukawa product with all signs resolved:
//   [alpha,beta] = (-1)^p (d(alpha*beta) - d(alpha)*beta - (-1)^(pq) d(beta)*alpha)
// where p, q are the signed degrees (form degree - n) of the preimages.
// Identical to contract_volume(schouten_bracket(preimages)).
inline DifferentialForm yukawa_bracket(const VolumeForm& vol, const DifferentialForm& a,
                                       const DifferentialForm& b) {
  if (a.dim() != b.dim() || a.dim() != vol.dim())
    throw std::invalid_argument("yukawa_bracket: dimension mismatch");
  const int n = a.dim();
  DifferentialForm out(n);
  for (int fa = 0; fa <= n; ++fa) {
    DifferentialForm ah = a.graded_part(fa);
    if (ah.is_zero()) continue;
    for (int fb = 0; fb <= n; ++fb) {
      DifferentialForm bh = b.graded_part(fb);
      if (bh.is_zero()) continue;
      long long p = fa - n, q = fb - n;
      DifferentialForm term =
          exterior_derivative(yukawa_product(vol, ah, bh)) -
          yukawa_product(vol, exterior_derivative(ah), bh) -
          Rational(pow_sign(p * q)) * yukawa_product(vol, exterior_derivative(bh), ah);
      out += Rational(pow_sign(p)) * term;
    }
  }
  return out;
}

}  // namespace schouten
