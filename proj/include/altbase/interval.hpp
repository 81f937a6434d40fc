#pragma once

#include <algorithm>
#include <string>

#include "altbase/rational.hpp"

namespace altbase {

/// Closed interval with exact rational endpoints, lo <= hi. Degenerate
/// intervals (lo == hi) represent exactly-known rational values.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InvalidIsolatorError("interval endpoints out of order");
    }

    static Interval point(const Rational& x) { return Interval(x, x); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

    /// Sign of every value in the interval: +1, -1, or 0 when it straddles 0.
    int definite_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}
inline Interval operator-(const Interval& a) {
    return Interval(-a.hi, -a.lo);
}
inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}
inline Interval operator+(const Interval& a, const Rational& c) {
    return Interval(a.lo + c, a.hi + c);
}
inline Interval operator*(const Interval& a, const Rational& c) {
    return c.sign() >= 0 ? Interval(a.lo * c, a.hi * c) : Interval(a.hi * c, a.lo * c);
}

}  // namespace altbase
