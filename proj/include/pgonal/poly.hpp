#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pgonal/rational.hpp"

namespace pgonal {

/// Dense univariate polynomial over Q, coefficients ascending. The zero
/// polynomial has an empty coefficient vector; everything else is kept
/// trimmed, so degree() is exact.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& a) { return Poly({a}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    /// x^k with coefficient a.
    static Poly monomial(const Rational& a, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& a) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rational operator()(const Rational& x) const;

    Poly derivative() const;
    Poly pow(unsigned e) const;

    /// Euclidean division; o must be nonzero. Returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    /// Unique interpolating polynomial through the given (x, y) pairs
    /// (x values pairwise distinct).
    static Poly interpolate(const std::vector<std::pair<Rational, Rational>>& pts);

    /// lcm of coefficient denominators and gcd of the resulting numerators:
    /// f == (g/h) * primitive_z() with primitive integer content.
    Poly primitive_z(Rational* scale = nullptr) const;

    /// Resultant with o (both nonzero), via the Sylvester determinant.
    Rational resultant(const Poly& o) const;

    bool is_squarefree() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace pgonal
