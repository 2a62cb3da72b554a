#include "descpoly/basis.hpp"

#include <stdexcept>

namespace descpoly {

namespace {

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// C(n + shift, k) as an exact polynomial in n.
ExactPoly binom_poly(int shift, int k) {
  ExactPoly p = ExactPoly::constant(1);
  for (int j = 0; j < k; ++j) {
    p = p * ExactPoly(std::vector<Rat>{Rat(shift - j), 1});
  }
  p.scale(Rat(1, factorial(k)));
  return p;
}

}  // namespace

int expected_length(BasisTag basis, int m) { return basis == BasisTag::ABarBase ? m : m + 1; }

std::string basis_name(BasisTag basis) {
  switch (basis) {
    case BasisTag::ABase: return "a";
    case BasisTag::CBase: return "c";
    case BasisTag::ABarBase: return "abar";
    case BasisTag::CTildeBase: return "ctilde";
    case BasisTag::PlainBinomial: return "binomial";
    case BasisTag::Power: return "power";
  }
  throw std::logic_error("unreachable");
}

BasisTag parse_basis(const std::string& name) {
  if (name == "a") return BasisTag::ABase;
  if (name == "c") return BasisTag::CBase;
  if (name == "abar") return BasisTag::ABarBase;
  if (name == "ctilde") return BasisTag::CTildeBase;
  if (name == "binomial") return BasisTag::PlainBinomial;
  if (name == "power") return BasisTag::Power;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

CoeffVector::CoeffVector(BasisTag basis, int m, std::vector<Int> coeffs)
    : basis_(basis), m_(m) {
  coeffs_.reserve(coeffs.size());
  for (auto& c : coeffs) coeffs_.emplace_back(std::move(c));
  if (m < 0) throw std::invalid_argument("negative degree parameter");
  if (length() != expected_length(basis, m))
    throw std::invalid_argument("coefficient count does not match basis convention");
}

CoeffVector::CoeffVector(BasisTag basis, int m, std::vector<Rat> coeffs)
    : basis_(basis), m_(m), coeffs_(std::move(coeffs)) {
  if (m < 0) throw std::invalid_argument("negative degree parameter");
  if (length() != expected_length(basis, m))
    throw std::invalid_argument("coefficient count does not match basis convention");
  if (basis != BasisTag::Power) {
    for (const auto& c : coeffs_)
      if (boost::multiprecision::denominator(c) != 1)
        throw std::domain_error("non-integral coefficients in basis " + basis_name(basis));
  }
}

Int CoeffVector::int_at(int k) const {
  if (k < 0 || k >= length()) throw std::out_of_range("coefficient index out of range");
  if (boost::multiprecision::denominator(coeffs_[k]) != 1)
    throw std::domain_error("coefficient is not an integer");
  return boost::multiprecision::numerator(coeffs_[k]);
}

std::vector<Int> CoeffVector::ints() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (int k = 0; k < length(); ++k) out.push_back(int_at(k));
  return out;
}

ExactPoly basis_poly(BasisTag basis, int m, int k) {
  switch (basis) {
    case BasisTag::ABase:
      return binom_poly(-m, k);
    case BasisTag::CBase: {
      ExactPoly p = binom_poly(1, k);
      p.scale(sign_pow(m - k));
      return p;
    }
    case BasisTag::ABarBase:
      return binom_poly(k - m, k + 1);
    case BasisTag::CTildeBase:
    case BasisTag::PlainBinomial: {
      ExactPoly p = binom_poly(0, k);
      p.scale(sign_pow(m - k));
      return p;
    }
    case BasisTag::Power: {
      std::vector<Rat> c(k + 1);
      c[k] = 1;
      return ExactPoly(std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

ExactPoly to_exact_poly(const CoeffVector& v) {
  ExactPoly acc;
  for (int k = 0; k < v.length(); ++k) {
    if (v.coeffs()[k] == 0) continue;
    ExactPoly term = basis_poly(v.basis(), v.m(), k);
    term.scale(v.coeffs()[k]);
    acc += term;
  }
  return acc;
}

CoeffVector from_exact_poly(const ExactPoly& p, BasisTag target, int m) {
  if (p.degree() > m) throw std::invalid_argument("polynomial degree exceeds basis parameter");
  const int len = expected_length(target, m);
  std::vector<Rat> out(len);

  if (target == BasisTag::Power) {
    for (int k = 0; k <= p.degree(); ++k) out[k] = p.coeff(k);
    return CoeffVector(target, m, std::move(out));
  }

  // Triangular peel from the top degree.  ABarBase functions have degree
  // k+1, the others degree k; leading coefficients are +-1/k! resp. 1/(k+1)!.
  ExactPoly rest = p;
  if (target == BasisTag::ABarBase) {
    for (int k = m - 1; k >= 0; --k) {
      const Rat v = rest.coeff(k + 1) * Rat(factorial(k + 1));
      if (v != 0) {
        out[k] = v;
        ExactPoly term = basis_poly(target, m, k);
        term.scale(v);
        rest -= term;
      }
    }
    if (!rest.is_zero())
      throw std::domain_error("abar expansion requires a polynomial vanishing at n = m");
  } else {
    for (int k = m; k >= 0; --k) {
      Rat v = rest.coeff(k) * Rat(factorial(k));
      if (target != BasisTag::ABase) v *= sign_pow(m - k);
      if (v != 0) {
        out[k] = v;
        ExactPoly term = basis_poly(target, m, k);
        term.scale(v);
        rest -= term;
      }
    }
  }
  return CoeffVector(target, m, std::move(out));
}

CoeffVector convert(const CoeffVector& v, BasisTag target) {
  if (target == v.basis()) return v;
  return from_exact_poly(to_exact_poly(v), target, v.m());
}

Rat evaluate(const CoeffVector& v, const Rat& n) {
  Rat acc = 0;
  const int m = v.m();
  switch (v.basis()) {
    case BasisTag::ABase:
      for (int k = 0; k < v.length(); ++k) acc += v.coeffs()[k] * binomial_rat(n - m, k);
      break;
    case BasisTag::CBase:
      for (int k = 0; k < v.length(); ++k)
        acc += v.coeffs()[k] * sign_pow(m - k) * binomial_rat(n + 1, k);
      break;
    case BasisTag::ABarBase:
      for (int k = 0; k < v.length(); ++k)
        acc += v.coeffs()[k] * binomial_rat(n - m + k, k + 1);
      break;
    case BasisTag::CTildeBase:
    case BasisTag::PlainBinomial:
      for (int k = 0; k < v.length(); ++k)
        acc += v.coeffs()[k] * sign_pow(m - k) * binomial_rat(n, k);
      break;
    case BasisTag::Power: {
      for (int k = v.length() - 1; k >= 0; --k) acc = acc * n + v.coeffs()[k];
      break;
    }
  }
  return acc;
}

Int evaluate_int(const CoeffVector& v, const Int& n) {
  const Rat r = evaluate(v, Rat(n));
  if (boost::multiprecision::denominator(r) != 1)
    throw std::domain_error("evaluation is not an integer");
  return boost::multiprecision::numerator(r);
}

}  // namespace descpoly
