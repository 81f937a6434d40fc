#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "altbase/interval.hpp"
#include "altbase/rational.hpp"

namespace altbase {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree with the trailing zeros stripped. The zero polynomial
/// has an empty coefficient list and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) { trim(); }

    static Polynomial from_ints(const std::vector<long long>& cs) {
        std::vector<Rational> v;
        v.reserve(cs.size());
        for (long long c : cs) v.emplace_back(c);
        return Polynomial(std::move(v));
    }
    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    /// c * X^k
    static Polynomial monomial(size_t k, Rational c) {
        if (c.is_zero()) return Polynomial();
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    size_t size() const { return c_.size(); }

    const Rational& coeff(size_t k) const {
        static const Rational zero;
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }
    bool has_integer_coeffs() const {
        for (const auto& c : c_)
            if (!c.is_integer()) return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(v));
    }
    Polynomial operator-() const {
        std::vector<Rational> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        if (s.is_zero()) return Polynomial();
        std::vector<Rational> v(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i] * s;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// *this == q * d + r and deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
        Polynomial q;
        Polynomial r = *this;
        const int dd = d.degree();
        const Rational& lead = d.leading();
        while (!r.is_zero() && r.degree() >= dd) {
            size_t k = static_cast<size_t>(r.degree() - dd);
            Rational f = r.leading() / lead;
            Polynomial term = monomial(k, f);
            q = q + term;
            r = r - term * d;
        }
        return {std::move(q), std::move(r)};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational((long long)i);
        return Polynomial(std::move(v));
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Horner evaluation in interval arithmetic; the result encloses the
    /// exact value p(t) for every t in iv.
    Interval eval(const Interval& iv) const {
        Interval acc = Interval::point(Rational(0));
        for (size_t i = c_.size(); i-- > 0;) acc = acc * iv + c_[i];
        return acc;
    }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc(0.0, 0.0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].to_double();
        return acc;
    }
    double eval(double x) const {
        double acc = 0.0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * leading().reciprocal();
    }

    /// Scales by the lcm of coefficient denominators, then divides by the
    /// integer content and normalizes the leading coefficient to be positive.
    Polynomial primitive_integer() const {
        if (is_zero()) return *this;
        Int l = 1;
        for (const auto& c : c_) l = boost::multiprecision::lcm(l, c.den());
        std::vector<Rational> v(c_.size());
        Int content = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            Rational s = c_[i] * Rational(l);
            content = boost::multiprecision::gcd(content, s.num());
            v[i] = std::move(s);
        }
        if (content < 0) content = -content;
        Rational inv_content = Rational(Int(1), content);
        for (auto& c : v) c *= inv_content;
        Polynomial p(std::move(v));
        if (p.leading().sign() < 0) p = -p;
        return p;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].str();
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd over Q[x] by the Euclidean algorithm. gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid over Q[x]: returns (g, s, t), monic g = gcd(a, b) with
/// s*a + t*b = g.
inline std::tuple<Polynomial, Polynomial, Polynomial> poly_ext_gcd(Polynomial a,
                                                                   Polynomial b) {
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    Rational inv = a.leading().reciprocal();
    return {a * inv, s0 * inv, t0 * inv};
}

inline bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).is_constant();
}

}  // namespace altbase
