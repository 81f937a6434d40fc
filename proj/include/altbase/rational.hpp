#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "altbase/errors.hpp"

namespace altbase {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form is maintained after every operation: the denominator is
/// positive and coprime to the numerator, zero is 0/1. Equality is therefore
/// a structural check on the two integers.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Parses "p/q" or "p" (optional sign, decimal digits).
    static Rational parse(std::string_view s) {
        auto bad = [&] { throw ParseError("invalid rational: '" + std::string(s) + "'"); };
        size_t slash = s.find('/');
        std::string_view ns = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1")
                                                              : s.substr(slash + 1);
        auto parse_int = [&](std::string_view t) {
            if (t.empty()) bad();
            size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
            if (i == t.size()) bad();
            for (size_t k = i; k < t.size(); ++k)
                if (t[k] < '0' || t[k] > '9') bad();
            return Int(std::string(t));
        };
        Int n = parse_int(ns);
        Int d = parse_int(ds);
        if (d == 0) bad();
        return Rational(std::move(n), std::move(d));
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(unchecked, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZeroError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (num_ == 0) throw DivisionByZeroError("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Greatest integer n with n <= *this.
    Int floor() const {
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }
    /// Least integer n with n >= *this.
    Int ceil() const {
        Int q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    /// Always emits the explicit fraction form "p/q" (canonical, q > 0).
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};
    Rational(unchecked_t, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw DivisionByZeroError("zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

/// Structural ordering usable as a std::map key comparator. It is cheaper
/// than value comparison (no cross multiplication); not a value order.
struct RationalStructuralLess {
    bool operator()(const Rational& a, const Rational& b) const {
        if (a.num() != b.num()) return a.num() < b.num();
        return a.den() < b.den();
    }
};

inline Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.num() + b.num(), a.den() + b.den());
}

}  // namespace altbase
