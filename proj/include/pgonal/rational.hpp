#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgonal {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(|num|, den) = 1 and den >= 1 as a class invariant,
// which is exactly the Rational contract.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

std::string to_string(const Rational& q);

/// Floor of the integer square root; n must be >= 0.
Int isqrt(const Int& n);

/// Exact n-th root of an integer if it exists (handles negative bases for odd n).
std::optional<Int> exact_nth_root(const Int& v, unsigned n);

/// Exact n-th root of a rational if it exists.
std::optional<Rational> exact_nth_root(const Rational& v, unsigned n);

bool is_prime_u64(std::uint64_t n);

/// All divisors of |n| (positive only), sorted ascending. n must be nonzero.
/// Uses trial division followed by Pollard rho for large cofactors.
std::vector<Int> positive_divisors(const Int& n);

} // namespace pgonal
