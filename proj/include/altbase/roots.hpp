#pragma once

#include <utility>
#include <vector>

#include "altbase/interval.hpp"
#include "altbase/polynomial.hpp"

namespace altbase {

/// Sturm chain of p: p, p', then negated remainders until constant.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    while (true) {
        Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sturm_sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s != 0) {
            if (prev != 0 && s != prev) ++variations;
            prev = s;
        }
    }
    return variations;
}

/// Number of distinct real roots of the chain's polynomial in (a, b].
inline int sturm_count(const std::vector<Polynomial>& chain, const Rational& a,
                       const Rational& b) {
    return sturm_sign_variations(chain, a) - sturm_sign_variations(chain, b);
}

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-bound, bound).
inline Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("root bound of zero polynomial");
    Rational m;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = (p.coeff(static_cast<size_t>(i)) / p.leading()).abs();
        if (q > m) m = q;
    }
    return m + Rational(1);
}

namespace detail {

inline void isolate_rec(const Polynomial& p, const std::vector<Polynomial>& chain,
                        const Rational& lo, const Rational& hi,
                        std::vector<Interval>& out) {
    int count = sturm_count(chain, lo, hi);
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (p.eval(mid).is_zero()) {
        // mid is an exact rational root; report it as a point and carve out a
        // neighbourhood containing no other root before recursing.
        out.push_back(Interval::point(mid));
        Rational eps = (hi - lo) / Rational(4);
        while (p.eval(mid - eps).is_zero() || p.eval(mid + eps).is_zero() ||
               sturm_count(chain, mid - eps, mid + eps) != 1) {
            eps = eps / Rational(2);
        }
        isolate_rec(p, chain, lo, mid - eps, out);
        isolate_rec(p, chain, mid + eps, hi, out);
        return;
    }
    isolate_rec(p, chain, lo, mid, out);
    isolate_rec(p, chain, mid, hi, out);
}

}  // namespace detail

/// Isolates all real roots of a squarefree polynomial. Returns pairwise
/// disjoint intervals, each containing exactly one root; rational roots come
/// back as degenerate point intervals. Non-degenerate intervals have nonzero
/// polynomial sign at both endpoints.
inline std::vector<Interval> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("cannot isolate roots of 0");
    if (!is_squarefree(p))
        throw NotSquarefreeError("polynomial has repeated roots; divide by gcd(p, p') first");
    if (p.degree() == 0) return {};
    Rational bound = cauchy_root_bound(p);
    auto chain = sturm_chain(p);
    std::vector<Interval> out;
    detail::isolate_rec(p, chain, -bound, bound, out);
    // tighten each bracket so callers get usable localization, not just
    // disjointness
    Rational width(Int(1), Int(4));
    for (auto& iv : out)
        if (!iv.is_point() && iv.width() > width) iv = refine_root(p, iv, width);
    return out;
}

/// Shrinks an isolating interval of p by bisection (exact midpoint signs)
/// until its width is at most `width`. The root never escapes the interval.
inline Interval refine_root(const Polynomial& p, Interval iv, const Rational& width) {
    if (p.is_zero()) throw ZeroPolynomialError("cannot refine root of 0");
    if (iv.is_point()) {
        if (!p.eval(iv.lo).is_zero())
            throw InvalidIsolatorError("point interval is not a root");
        return iv;
    }
    int slo = p.eval(iv.lo).sign();
    int shi = p.eval(iv.hi).sign();
    if (slo == 0) return Interval::point(iv.lo);
    if (shi == 0) return Interval::point(iv.hi);
    if (slo == shi)
        throw InvalidIsolatorError("no sign change over the claimed isolating interval");
    while (iv.width() > width) {
        Rational mid = iv.midpoint();
        int sm = p.eval(mid).sign();
        if (sm == 0) return Interval::point(mid);
        if (sm == slo) {
            iv.lo = std::move(mid);
        } else {
            iv.hi = std::move(mid);
        }
    }
    return iv;
}

}  // namespace altbase
