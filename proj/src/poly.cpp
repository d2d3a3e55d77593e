#include "pgonal/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace pgonal {

Poly Poly::monomial(const Rational& a, std::size_t k) {
    if (a == 0) return Poly();
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = a;
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& a) const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= a;
    return Poly(std::move(c));
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(Int(i));
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(1), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < o.degree()) return {Poly(), rem};
    std::vector<Rational> q(rem.degree() - o.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        const std::size_t shift = rem.degree() - o.degree();
        const Rational f = rem.leading() / o.leading();
        q[shift] = f;
        rem = rem - Poly::monomial(f, shift) * o;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

Poly Poly::interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
    Poly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Poly li = Poly::constant(1);
        Rational denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            li = li * Poly({-pts[j].first, Rational(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + li * (pts[i].second / denom);
    }
    return acc;
}

Poly Poly::primitive_z(Rational* scale) const {
    if (is_zero()) {
        if (scale) *scale = 1;
        return *this;
    }
    Int l(1);
    for (const auto& q : c_) l = boost::multiprecision::lcm(l, den(q));
    Int g(0);
    for (const auto& q : c_) g = boost::multiprecision::gcd(g, num(q) * (l / den(q)));
    const Rational s = Rational(g, l);
    if (scale) *scale = s;
    std::vector<Rational> c(c_);
    for (auto& x : c) x /= s;
    return Poly(std::move(c));
}

Rational Poly::resultant(const Poly& o) const {
    if (is_zero() || o.is_zero()) throw std::domain_error("resultant of zero polynomial");
    const int n = degree(), m = o.degree();
    if (n == 0) return c_[0] == 0 ? Rational(0) : boost::multiprecision::pow(Rational(c_[0]), m);
    if (m == 0) return boost::multiprecision::pow(Rational(o.c_[0]), n);
    const std::size_t size = n + m;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[r][r + k] = c_[n - k];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[m + r][r + k] = o.c_[m - k];
    // plain fraction Gaussian elimination; sizes stay <= ~48 here
    Rational det(1);
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t piv = col;
        while (piv < size && s[piv][col] == 0) ++piv;
        if (piv == size) return Rational(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        const Rational inv = Rational(1) / s[col][col];
        for (std::size_t r = col + 1; r < size; ++r) {
            if (s[r][col] == 0) continue;
            const Rational f = s[r][col] * inv;
            for (std::size_t k = col; k < size; ++k) s[r][k] -= f * s[col][k];
        }
    }
    return det;
}

bool Poly::is_squarefree() const {
    if (degree() <= 1) return !is_zero();
    return gcd(*this, derivative()).degree() == 0;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[k];
        if (a == 0) continue;
        const bool lead = out.empty();
        std::string term;
        const Rational mag = a < 0 ? Rational(-a) : a;
        if (k == 0 || mag != 1) term = to_string(mag);
        if (k > 0) {
            if (!term.empty()) term += "*";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (lead)
            out = (a < 0 ? "-" : "") + term;
        else
            out += (a < 0 ? " - " : " + ") + term;
    }
    return out;
}

} // namespace pgonal
