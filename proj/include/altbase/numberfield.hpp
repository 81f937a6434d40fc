#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "altbase/numeric_roots.hpp"
#include "altbase/polynomial.hpp"
#include "altbase/roots.hpp"

namespace altbase {

/// One field monomorphism Q(delta) -> C, determined by where the generator
/// goes. Conjugate values are numeric (double precision); they feed
/// classification reports only, never exact arithmetic.
struct Embedding {
    std::complex<double> conjugate;
    bool is_identity = false;

    bool is_real() const {
        return conjugate.imag() == 0.0;
    }
};

/// The field Q(delta) = Q[X]/(P) together with a designated real root
/// delta > 1 of P, pinned by an isolating interval with rational endpoints.
///
/// Immutable after construction; always handled through shared_ptr. The
/// embedding list is computed once on first use (thread-safe).
class NumberField {
public:
    using Ptr = std::shared_ptr<const NumberField>;

    /// Validates and normalizes: clears denominators to a primitive integer
    /// polynomial, requires squarefreeness, and requires that `isolator`
    /// contains exactly one real root of the polynomial, which must be > 1.
    /// The stored isolator is refined to a tight width up front so that
    /// later sign/floor queries almost always resolve in one evaluation.
    static Ptr make(const Polynomial& minpoly, const Interval& isolator) {
        if (minpoly.is_zero() || minpoly.degree() < 1)
            throw MalformedConfigError("minimal polynomial must be nonconstant");
        Polynomial p = minpoly.primitive_integer();
        if (!is_squarefree(p))
            throw NotSquarefreeError("minimal polynomial is not squarefree");
        auto chain = sturm_chain(p);

        Interval iv = isolator;
        if (iv.is_point()) {
            if (!p.eval(iv.lo).is_zero())
                throw InvalidIsolatorError("degenerate isolator is not a root");
            if (!(iv.lo > Rational(1)))
                throw RootNotGreaterThanOneError("designated root is not > 1");
        } else {
            if (p.eval(iv.lo).is_zero() || p.eval(iv.hi).is_zero())
                throw InvalidIsolatorError("isolator endpoints must not be roots");
            if (sturm_count(chain, iv.lo, iv.hi) != 1)
                throw InvalidIsolatorError("isolator does not contain exactly one root");
            if (iv.hi <= Rational(1))
                throw RootNotGreaterThanOneError("designated root is not > 1");
            if (iv.lo < Rational(1)) {
                if (p.eval(Rational(1)).is_zero())
                    throw RootNotGreaterThanOneError("designated root equals 1");
                if (sturm_count(chain, Rational(1), iv.hi) != 1)
                    throw RootNotGreaterThanOneError("designated root is not > 1");
                iv.lo = Rational(1);
            }
            Rational target(Int(1), Int(1) << 64);
            iv = refine_root(p, iv, target);
        }
        return Ptr(new NumberField(std::move(p), std::move(iv), std::move(chain)));
    }

    const Polynomial& minpoly() const { return minpoly_; }
    int degree() const { return degree_; }
    const Interval& isolator() const { return isolator_; }

    double root_approx() const { return approx_; }

    /// True when `other` denotes the same field with the same designated
    /// root, either by identity or structurally.
    bool same_field(const NumberField& other) const {
        if (this == &other) return true;
        if (!(minpoly_ == other.minpoly_)) return false;
        if (isolator_.is_point() && other.isolator_.is_point())
            return isolator_.lo == other.isolator_.lo;
        if (isolator_.is_point()) return other.isolator_.contains(isolator_.lo);
        if (other.isolator_.is_point()) return isolator_.contains(other.isolator_.lo);
        Rational l = std::max(isolator_.lo, other.isolator_.lo);
        Rational h = std::min(isolator_.hi, other.isolator_.hi);
        if (!(l < h)) return false;
        return sturm_count(chain_, l, h) == 1;
    }

    /// True when the designated root is also a root of g (a divisor of the
    /// minimal polynomial); exact.
    bool root_satisfies(const Polynomial& g) const {
        if (g.is_zero()) return true;
        if (g.is_constant()) return false;
        if (isolator_.is_point()) return g.eval(isolator_.lo).is_zero();
        auto gchain = sturm_chain(g);
        return sturm_count(gchain, isolator_.lo, isolator_.hi) >= 1;
    }

    /// One bisection step of an enclosure of the root; exact-rational roots
    /// collapse to point intervals.
    Interval tighten(const Interval& iv) const {
        if (iv.is_point()) return iv;
        Rational mid = iv.midpoint();
        int sm = minpoly_.eval(mid).sign();
        if (sm == 0) return Interval::point(mid);
        int slo = minpoly_.eval(iv.lo).sign();
        if (sm == slo) return Interval(mid, iv.hi);
        return Interval(iv.lo, mid);
    }

    /// All embeddings of the field into C, identity first. Cached.
    const std::vector<Embedding>& embeddings() const {
        std::call_once(emb_once_, [this] {
            auto roots = numeric_roots(minpoly_);
            std::vector<Embedding> embs;
            embs.reserve(roots.size());
            size_t id_index = 0;
            double best = 1e300;
            for (size_t i = 0; i < roots.size(); ++i) {
                double d = std::abs(roots[i] - std::complex<double>(approx_, 0.0));
                if (d < best) {
                    best = d;
                    id_index = i;
                }
            }
            for (size_t i = 0; i < roots.size(); ++i)
                embs.push_back(Embedding{roots[i], i == id_index});
            std::sort(embs.begin(), embs.end(), [](const Embedding& a, const Embedding& b) {
                if (a.is_identity != b.is_identity) return a.is_identity;
                if (a.conjugate.real() != b.conjugate.real())
                    return a.conjugate.real() > b.conjugate.real();
                return a.conjugate.imag() < b.conjugate.imag();
            });
            embeddings_ = std::move(embs);
        });
        return embeddings_;
    }

private:
    NumberField(Polynomial p, Interval iv, std::vector<Polynomial> chain)
        : minpoly_(std::move(p)),
          degree_(minpoly_.degree()),
          isolator_(std::move(iv)),
          chain_(std::move(chain)),
          approx_(isolator_.midpoint().to_double()) {}

    Polynomial minpoly_;
    int degree_;
    Interval isolator_;
    std::vector<Polynomial> chain_;
    double approx_;

    mutable std::once_flag emb_once_;
    mutable std::vector<Embedding> embeddings_;
};

/// Element of Q(delta) in the power basis 1, delta, ..., delta^(n-1).
class FieldElement {
public:
    FieldElement() = default;

    FieldElement(NumberField::Ptr field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != field_->degree())
            throw MalformedConfigError("coordinate vector length must equal the field degree");
    }

    static FieldElement zero(NumberField::Ptr field) {
        return FieldElement(std::move(field),
                            std::vector<Rational>(static_cast<size_t>(field_degree(field))));
    }
    static FieldElement constant(NumberField::Ptr field, Rational c) {
        std::vector<Rational> v(static_cast<size_t>(field_degree(field)));
        v[0] = std::move(c);
        return FieldElement(std::move(field), std::move(v));
    }
    /// The designated root delta itself, reduced into the power basis.
    static FieldElement generator(NumberField::Ptr field) {
        Polynomial x = Polynomial::x();
        return from_polynomial(std::move(field), x);
    }
    /// Value of an arbitrary rational-coefficient polynomial at delta.
    static FieldElement from_polynomial(NumberField::Ptr field, const Polynomial& q) {
        const Polynomial& p = field->minpoly();
        Polynomial r = q.degree() >= p.degree() ? q.divmod(p).second : q;
        std::vector<Rational> v(static_cast<size_t>(field->degree()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = r.coeff(i);
        return FieldElement(std::move(field), std::move(v));
    }

    const NumberField::Ptr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }
    const Rational& as_rational() const {
        if (!is_rational()) throw Error("not_rational", "element is not rational");
        return coords_[0];
    }

    Polynomial as_polynomial() const { return Polynomial(coords_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        std::vector<Rational> v(a.coords_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coords_[i] + b.coords_[i];
        return FieldElement(a.field_, std::move(v));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        std::vector<Rational> v(a.coords_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coords_[i] - b.coords_[i];
        return FieldElement(a.field_, std::move(v));
    }
    FieldElement operator-() const {
        std::vector<Rational> v(coords_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
        return FieldElement(field_, std::move(v));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        Polynomial prod = a.as_polynomial() * b.as_polynomial();
        return from_polynomial(a.field_, prod);
    }
    friend FieldElement operator*(const FieldElement& a, const Rational& s) {
        std::vector<Rational> v(a.coords_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coords_[i] * s;
        return FieldElement(a.field_, std::move(v));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a * b.inverse();
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the minimal polynomial. A nonconstant gcd means the minimal
    /// polynomial is reducible, which the library surfaces explicitly.
    FieldElement inverse() const {
        if (is_zero()) throw DivisionByZeroError("field division by zero");
        auto [g, s, t] = poly_ext_gcd(as_polynomial(), field_->minpoly());
        (void)t;
        if (!g.is_constant())
            throw NotInvertibleError(
                "element shares a factor with the minimal polynomial (reducible modulus)");
        return from_polynomial(field_, s);
    }

    FieldElement pow(unsigned long long e) const {
        FieldElement base = *this;
        FieldElement acc = constant(field_, Rational(1));
        while (e > 0) {
            if (e & 1ULL) acc = acc * base;
            e >>= 1ULL;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.coords_ == b.coords_;
    }

    /// Exact sign of the real value under the identity embedding.
    int sign() const {
        if (is_zero()) return 0;
        if (is_rational()) return coords_[0].sign();
        Polynomial a = as_polynomial();
        Interval iv = field_->isolator();
        bool gcd_checked = false;
        while (true) {
            Interval v = a.eval(iv);
            int s = v.definite_sign();
            if (s != 0) return s;
            if (iv.is_point()) return a.eval(iv.lo).sign();
            if (!gcd_checked) {
                gcd_checked = true;
                Polynomial g = poly_gcd(a, field_->minpoly());
                if (!g.is_constant() && field_->root_satisfies(g)) return 0;
            }
            iv = field_->tighten(iv);
        }
    }

    /// Exact floor: the unique integer n with n <= value < n + 1. The
    /// exact-integer boundary is decided by an exact sign test, so finite
    /// greedy remainders that hit an integer terminate correctly.
    Int floor_int() const {
        if (is_rational()) return coords_[0].floor();
        Polynomial a = as_polynomial();
        Interval iv = field_->isolator();
        while (true) {
            Interval v = a.eval(iv);
            Int first = v.lo.ceil();
            Int last = v.hi.floor();
            if (last < first) return v.lo.floor();
            if (first == last) {
                FieldElement shifted = *this - constant(field_, Rational(first));
                int s = shifted.sign();
                return s >= 0 ? first : first - 1;
            }
            if (iv.is_point()) return a.eval(iv.lo).floor();
            iv = field_->tighten(iv);
        }
    }

    /// Rational interval guaranteed to contain the exact value, shrunk until
    /// its width is below `width` (or exact for rational elements).
    Interval enclosure(const Rational& width = Rational(Int(1), Int(1) << 32)) const {
        if (is_rational()) return Interval::point(coords_[0]);
        Polynomial a = as_polynomial();
        Interval iv = field_->isolator();
        Interval v = a.eval(iv);
        while (v.width() > width && !iv.is_point()) {
            iv = field_->tighten(iv);
            v = a.eval(iv);
        }
        return v;
    }

    double approx() const {
        double x = field_->root_approx();
        double acc = 0.0;
        for (size_t i = coords_.size(); i-- > 0;) acc = acc * x + coords_[i].to_double();
        return acc;
    }

private:
    static int field_degree(const NumberField::Ptr& f) {
        if (!f) throw MalformedConfigError("null field");
        return f->degree();
    }

    void check_same(const FieldElement& o) const {
        if (field_.get() == o.field_.get()) return;
        if (!field_ || !o.field_ || !field_->same_field(*o.field_))
            throw FieldMismatchError("operands belong to different number fields");
    }

    NumberField::Ptr field_;
    std::vector<Rational> coords_;
};

/// Numeric image of `a` under an embedding (Horner at the conjugate).
inline std::complex<double> embed(const FieldElement& a, const Embedding& e) {
    std::complex<double> acc(0.0, 0.0);
    const auto& c = a.coords();
    for (size_t i = c.size(); i-- > 0;) acc = acc * e.conjugate + c[i].to_double();
    return acc;
}

}  // namespace altbase
