#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace descpoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(long n);

/// Binomial coefficient C(upper, k) for arbitrary integer upper
/// (negative upper allowed, polynomial extension); 0 for k < 0.
Int binomial(const Int& upper, long k);

/// C(upper, k) for rational upper, exact.
Rat binomial_rat(const Rat& upper, long k);

/// Least common multiple of the coefficient denominators.
Int denominator_lcm(const Rat& a, const Int& acc);

}  // namespace descpoly
