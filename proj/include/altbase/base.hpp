#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altbase/numberfield.hpp"
#include "altbase/words.hpp"

namespace altbase {

/// An alternate base B = (beta_1, ..., beta_p): a purely periodic sequence of
/// real numbers > 1 living in a common field Q(delta), where delta is the
/// product of the betas and must be the field's designated generator.
class AlternateBase {
public:
    /// Validates: every beta_i > 1 (exact sign tests) and the product of the
    /// betas equals the field generator exactly. If the product does not
    /// generate the configured field, construction fails rather than working
    /// in a subfield.
    static AlternateBase make(NumberField::Ptr field, std::vector<FieldElement> betas) {
        if (betas.empty()) throw MalformedConfigError("base needs at least one beta");
        FieldElement one = FieldElement::constant(field, Rational(1));
        FieldElement prod = one;
        for (size_t i = 0; i < betas.size(); ++i) {
            if ((betas[i] - one).sign() <= 0)
                throw BetaNotGreaterThanOneError("beta_" + std::to_string(i + 1) +
                                                 " is not > 1");
            prod = prod * betas[i];
        }
        FieldElement gen = FieldElement::generator(field);
        if (!(prod == gen))
            throw MalformedConfigError(
                "product of betas must equal the designated field generator");
        return AlternateBase(std::move(field), std::move(betas), std::move(gen));
    }

    size_t period() const { return betas_.size(); }
    const NumberField::Ptr& field() const { return field_; }
    const std::vector<FieldElement>& betas() const { return betas_; }
    /// beta at 0-based index.
    const FieldElement& beta(size_t i) const { return betas_[i % betas_.size()]; }
    /// beta used for the (k+1)-th digit of an expansion (k is 0-based).
    const FieldElement& beta_for_step(size_t k) const { return betas_[k % betas_.size()]; }
    const FieldElement& delta() const { return delta_; }

    /// The base rotated to start at beta_i (1-based, modulo p); shift(1) is
    /// the base itself.
    AlternateBase shift(long i) const {
        size_t p = period();
        size_t k = static_cast<size_t>(((i - 1) % static_cast<long>(p) +
                                        static_cast<long>(p)) %
                                       static_cast<long>(p));
        std::vector<FieldElement> rotated;
        rotated.reserve(p);
        for (size_t j = 0; j < p; ++j) rotated.push_back(betas_[(k + j) % p]);
        return AlternateBase(field_, std::move(rotated), delta_);
    }

    /// Weight vector v: v_i = beta_{i+2} * ... * beta_p (1 for the last slot).
    /// A block of p consecutive digits (a_1, ..., a_p) has delta-digit value
    /// (a_1, ..., a_p) . v.
    std::vector<FieldElement> digit_vector() const {
        size_t p = period();
        std::vector<FieldElement> v(p, FieldElement::constant(field_, Rational(1)));
        for (size_t i = p - 1; i-- > 0;) v[i] = betas_[i + 1] * v[i + 1];
        return v;
    }

    /// Exclusive upper bound for digits at position index i (0-based): the
    /// greedy algorithm emits a_i in {0, ..., bound-1}, i.e. a_i < beta_i,
    /// with integer beta_i capped at beta_i - 1.
    Digit digit_bound(size_t i) const {
        const FieldElement& b = beta(i);
        Int f = b.floor_int();
        FieldElement fe = FieldElement::constant(field_, Rational(f));
        Int top = (b - fe).is_zero() ? f - 1 : f;
        Int bound = top + 1;
        if (bound > Int(std::numeric_limits<Digit>::max()))
            throw DigitOutOfRangeError("digit bound exceeds the supported digit range");
        return bound.convert_to<Digit>();
    }

    struct AlphabetEntry {
        FieldElement value;
        std::vector<Digit> block;  // the (a_1, ..., a_p) tuple producing value
    };

    /// The delta-digit alphabet D: all values (a_1, ..., a_p) . v with
    /// 0 <= a_i < beta_i, deduplicated and sorted ascending by exact
    /// comparison. When distinct tuples share a value, the lexicographically
    /// greatest tuple is kept as the canonical preimage.
    std::vector<AlphabetEntry> digit_alphabet() const {
        size_t p = period();
        std::vector<FieldElement> v = digit_vector();
        std::vector<Digit> bounds(p);
        for (size_t i = 0; i < p; ++i) bounds[i] = digit_bound(i);

        std::vector<AlphabetEntry> entries;
        std::vector<Digit> tuple(p, 0);
        FieldElement z = FieldElement::zero(field_);
        while (true) {
            FieldElement val = z;
            for (size_t i = 0; i < p; ++i)
                if (tuple[i] != 0) val += v[i] * Rational((long long)tuple[i]);
            entries.push_back({std::move(val), tuple});
            size_t i = p;
            while (i-- > 0) {
                if (++tuple[i] < bounds[i]) break;
                tuple[i] = 0;
                if (i == 0) goto done;
            }
        }
    done:
        std::sort(entries.begin(), entries.end(),
                  [](const AlphabetEntry& a, const AlphabetEntry& b) {
                      int s = (a.value - b.value).sign();
                      if (s != 0) return s < 0;
                      return a.block < b.block;
                  });
        std::vector<AlphabetEntry> dedup;
        for (auto& e : entries) {
            if (!dedup.empty() && (dedup.back().value - e.value).is_zero())
                dedup.back().block = e.block;  // keep the lexicographically greatest
            else
                dedup.push_back(std::move(e));
        }
        return dedup;
    }

    /// Index of a value in digit_alphabet(), if present.
    static std::optional<size_t> find_digit(const std::vector<AlphabetEntry>& alphabet,
                                            const FieldElement& value) {
        for (size_t i = 0; i < alphabet.size(); ++i)
            if ((alphabet[i].value - value).is_zero()) return i;
        return std::nullopt;
    }

private:
    AlternateBase(NumberField::Ptr field, std::vector<FieldElement> betas,
                  FieldElement delta)
        : field_(std::move(field)), betas_(std::move(betas)), delta_(std::move(delta)) {}

    NumberField::Ptr field_;
    std::vector<FieldElement> betas_;
    FieldElement delta_;
};

/// The two-base family over x^2 - (m+1)x - 1 with beta_1 = delta/(delta-1)
/// and beta_2 = delta - 1. In the power basis: beta_1 = (1 + delta)/(m+1),
/// beta_2 = delta - 1.
inline AlternateBase pp_family(long m) {
    if (m < 1) throw MalformedConfigError("family parameter m must be >= 1");
    Polynomial p = Polynomial::from_ints({-1, -(m + 1), 1});
    // p(m+1) = -(m+2) < 0 < m+1 = p(m+2), so the root > 1 is inside.
    auto field = NumberField::make(p, Interval(Rational(m + 1), Rational(m + 2)));
    Rational inv(Int(1), Int(m + 1));
    FieldElement beta1(field, {inv, inv});
    FieldElement beta2(field, {Rational(-1), Rational(1)});
    return AlternateBase::make(field, {beta1, beta2});
}

/// Single-base (p = 1) system whose only beta is the field generator.
inline AlternateBase single_base(NumberField::Ptr field) {
    FieldElement g = FieldElement::generator(field);
    return AlternateBase::make(std::move(field), {std::move(g)});
}

}  // namespace altbase
