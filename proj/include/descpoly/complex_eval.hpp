#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "descpoly/exact_poly.hpp"

namespace descpoly {

/// Minimal complex value over any real type (std::complex is only
/// specified for the builtin floating types).
template <class Real>
struct Cx {
  Real re{}, im{};

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    // Smith's scheme, robust against component overflow.
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      const Real r = b.im / b.re;
      const Real den = b.re + b.im * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    const Real r = b.re / b.im;
    const Real den = b.re * r + b.im;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }
  Real norm2() const { return re * re + im * im; }
};

template <class Real>
Real cx_abs(const Cx<Real>& z) {
  using std::abs;
  using std::sqrt;
  const Real ar = abs(z.re), ai = abs(z.im);
  const Real hi = ar > ai ? ar : ai;
  const Real lo = ar > ai ? ai : ar;
  if (hi == 0) return Real(0);
  const Real q = lo / hi;
  return hi * sqrt(Real(1) + q * q);
}

/// Complex Horner value plus a rigorous-style residual bound.
struct ComplexEval {
  std::complex<double> value;
  double residual_bound;
};

/// Compensated Horner evaluation of an exact real-coefficient polynomial at
/// complex z: products and sums go through error-free transformations and
/// the accumulated correction is folded back in, so only the rounding of
/// the exact coefficients to double and a second-order term remain.  The
/// reported bound covers both.
ComplexEval eval_with_bound(const ExactPoly& p, std::complex<double> z);

}  // namespace descpoly
