#include "descpoly/complex_eval.hpp"

#include <limits>

namespace descpoly {

namespace {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double t = s - a;
  e = (a - (s - t)) + (b - t);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace

ComplexEval eval_with_bound(const ExactPoly& p, std::complex<double> z) {
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  const int d = p.degree();
  if (d < 0) return {{0.0, 0.0}, 0.0};

  const double x = z.real(), y = z.imag();
  const double az = std::abs(z);
  double sr = 0, si = 0;    // primary Horner accumulator
  double cr = 0, ci = 0;    // compensation, carried in plain arithmetic
  double ptilde = 0;        // sum |a_k| |z|^k, for the bound

  for (int k = d; k >= 0; --k) {
    const double a = p.coeff(k).convert_to<double>();
    // s <- s*z + a with error-free transformations on each component.
    double p1, e1, p2, e2, p3, e3, p4, e4;
    two_prod(sr, x, p1, e1);
    two_prod(si, y, p2, e2);
    two_prod(sr, y, p3, e3);
    two_prod(si, x, p4, e4);
    double s1, f1, s2, f2, t1, g1;
    two_sum(p1, -p2, s1, f1);
    two_sum(s1, a, s2, f2);
    two_sum(p3, p4, t1, g1);
    const double new_cr = cr * x - ci * y + (e1 - e2 + f1 + f2);
    const double new_ci = cr * y + ci * x + (e3 + e4 + g1);
    sr = s2;
    si = t1;
    cr = new_cr;
    ci = new_ci;
    ptilde = ptilde * az + std::abs(a);
  }

  const std::complex<double> value(sr + cr, si + ci);
  // Residual: rounding of the exact coefficients to double (u per term),
  // plus the second-order compensation remainder.
  const double gamma = 4 * (d + 1) * u / (1 - 4 * (d + 1) * u);
  const double bound = u * std::abs(value) + (1 + 2 * d * u) * u * ptilde +
                       2 * gamma * gamma * ptilde;
  return {value, bound};
}

}  // namespace descpoly
