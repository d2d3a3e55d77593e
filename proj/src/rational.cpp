#include "pgonal/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <map>
#include <random>

namespace pgonal {

std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

std::optional<Int> exact_nth_root(const Int& v, unsigned n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return v;
    if (v < 0 && n % 2 == 0) return std::nullopt;
    if (v == 0) return Int(0);
    const Int a = boost::multiprecision::abs(v);
    // binary search on the root
    Int lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, n) < a) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, n) < a)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (boost::multiprecision::pow(lo, n) != a) return std::nullopt;
    return v < 0 ? Int(-lo) : lo;
}

std::optional<Rational> exact_nth_root(const Rational& v, unsigned n) {
    auto rn = exact_nth_root(num(v), n);
    if (!rn) return std::nullopt;
    auto rd = exact_nth_root(den(v), n);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(Int(n), 32);
}

namespace {

Int pollard_rho(const Int& n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        Int x = Int(rng()) % n, y = x, c = Int(rng()) % n + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(boost::multiprecision::abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (boost::multiprecision::miller_rabin_test(n, 32)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

} // namespace

std::vector<Int> positive_divisors(const Int& n) {
    if (n == 0) throw std::domain_error("divisors of zero");
    Int a = boost::multiprecision::abs(n);
    std::map<Int, unsigned> fac;
    // peel small primes first; rho only sees hard cofactors
    for (std::uint64_t p = 2; p < 20000 && a > 1; p = (p == 2) ? 3 : p + 2) {
        while (a % p == 0) {
            fac[Int(p)]++;
            a /= p;
        }
    }
    if (a > 1) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        factor_into(a, fac, rng);
    }
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace pgonal
