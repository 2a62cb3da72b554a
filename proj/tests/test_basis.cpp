#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "descpoly/basis.hpp"
#include "descpoly/coefficients.hpp"
#include "descpoly/complex_eval.hpp"

using namespace descpoly;

namespace {

const std::vector<BasisTag> kAllBases = {BasisTag::ABase,      BasisTag::CBase,
                                         BasisTag::ABarBase,   BasisTag::CTildeBase,
                                         BasisTag::PlainBinomial, BasisTag::Power};

CoeffVector vec(BasisTag b, int m, std::initializer_list<long> xs) {
  std::vector<Int> coeffs;
  for (long x : xs) coeffs.emplace_back(x);
  return CoeffVector(b, m, std::move(coeffs));
}

}  // namespace

TEST_CASE("length conventions and integrality") {
  CHECK_NOTHROW(vec(BasisTag::ABase, 2, {0, 2, 1}));
  CHECK_NOTHROW(vec(BasisTag::ABarBase, 2, {1, 1}));
  CHECK_THROWS_AS(vec(BasisTag::ABase, 2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(vec(BasisTag::ABarBase, 2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CoeffVector(BasisTag::CBase, 1, std::vector<Rat>{Rat(1, 2), Rat(1)}),
                  std::domain_error);
  CHECK_NOTHROW(CoeffVector(BasisTag::Power, 1, std::vector<Rat>{Rat(1, 2), Rat(1)}));
}

TEST_CASE("documented conversions") {
  // c-vector of {2} expands to (n-2)(n+1)/2.
  const CoeffVector c = vec(BasisTag::CBase, 2, {0, 1, 1});
  const CoeffVector power = convert(c, BasisTag::Power);
  CHECK(power.coeffs() == std::vector<Rat>{Rat(-1), Rat(-1, 2), Rat(1, 2)});

  const CoeffVector a = vec(BasisTag::ABase, 2, {0, 2, 1});
  CHECK(convert(a, BasisTag::ABarBase) == vec(BasisTag::ABarBase, 2, {1, 1}));
  CHECK(convert(vec(BasisTag::ABarBase, 2, {1, 1}), BasisTag::ABase) == a);

  // Zero polynomial maps to the zero vector in every basis.
  const CoeffVector zero = vec(BasisTag::CBase, 3, {0, 0, 0, 0});
  for (BasisTag b : kAllBases) {
    const CoeffVector z = convert(zero, b);
    for (const auto& e : z.coeffs()) CHECK(e == 0);
  }
}

TEST_CASE("abar expansion requires vanishing at n = m") {
  const CoeffVector one = vec(BasisTag::Power, 2, {1, 0, 0});
  CHECK_THROWS_AS(convert(one, BasisTag::ABarBase), std::domain_error);
}

TEST_CASE("documented evaluations") {
  const CoeffVector d2 = descent_poly(DescentSet({std::vector<int>{2}}));
  CHECK(evaluate_int(d2, 4) == 5);
  CHECK(evaluate_int(d2, 0) == -1);
  const CoeffVector empty = descent_poly(DescentSet());
  CHECK(evaluate_int(empty, 123) == 1);
  CHECK(evaluate(d2, Rat(1, 2)) == Rat(-9, 8));  // (n-2)(n+1)/2 at 1/2
}

TEST_CASE("conversion round-trips exactly and preserves evaluation, max(I) <= 9") {
  for (const DescentSet& I : all_descent_sets(9)) {
    const CoeffVector a = descent_poly(I);
    for (BasisTag b : kAllBases) {
      const CoeffVector v = convert(a, b);
      for (BasisTag b2 : kAllBases) {
        const CoeffVector w = convert(v, b2);
        CHECK(convert(w, b) == v);
      }
      for (int n = -9; n <= 10; ++n)  // 20 sample points
        CHECK(evaluate(v, Rat(n)) == evaluate(a, Rat(n)));
    }
  }
}

TEST_CASE("ctilde entries are the c-differences") {
  for (const DescentSet& I : all_descent_sets(9)) {
    const auto c = c_coeffs(I).ints();
    const auto ct = ctilde_coeffs(I).ints();
    const int m = I.m();
    CHECK(ct[m] == c[m]);
    for (int k = 0; k < m; ++k) CHECK(ct[k] == c[k] - c[k + 1]);
    // ctilde and the plain binomial expansion coincide entrywise.
    CHECK(convert(c_coeffs(I), BasisTag::PlainBinomial).ints() == ct);
  }
}

TEST_CASE("compensated complex evaluation stays within its residual bound") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> coord(-8.0, 8.0);
  for (const char* enc : {"2", "1,3", "1,2,3,6", "2,4,7", "1,2,3,4,5,6,7,8,9"}) {
    const ExactPoly p = to_exact_poly(descent_poly(DescentSet::parse(enc)));
    for (int trial = 0; trial < 40; ++trial) {
      const std::complex<double> z(coord(rng), coord(rng));
      const ComplexEval got = eval_with_bound(p, z);
      // Exact reference: the double z is an exact rational point.
      const Rat x(z.real()), y(z.imag());
      Rat ar = 0, ai = 0;
      for (int k = p.degree(); k >= 0; --k) {
        const Rat t = ar * x - ai * y + p.coeff(k);
        ai = ar * y + ai * x;
        ar = t;
      }
      const double err = std::abs(got.value - std::complex<double>(ar.convert_to<double>(),
                                                                   ai.convert_to<double>()));
      CHECK(err <= got.bound);
      const double scale = 1.0 + std::abs(got.value);
      CHECK(got.bound <= 1e-10 * std::max(scale, 1e6));  // bound itself stays tiny
    }
  }
}
