#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "altbase/base.hpp"
#include "altbase/words.hpp"

namespace altbase {

inline constexpr std::int64_t kDefaultCap = 10000;

enum class ExpansionKind { Finite, PurelyPeriodic, EventuallyPeriodic, Truncated };

inline const char* to_string(ExpansionKind k) {
    switch (k) {
        case ExpansionKind::Finite: return "finite";
        case ExpansionKind::PurelyPeriodic: return "purely_periodic";
        case ExpansionKind::EventuallyPeriodic: return "eventually_periodic";
        case ExpansionKind::Truncated: return "truncated";
    }
    return "?";
}

struct ExpansionReport {
    DigitWord word;
    ExpansionKind kind = ExpansionKind::Finite;
    std::int64_t steps_used = 0;
    std::optional<FieldElement> remainder_at_cutoff;  // present iff Truncated

    bool closed() const { return kind != ExpansionKind::Truncated; }
};

namespace detail {

struct RemainderKey {
    std::vector<Rational> coords;
    size_t phase;

    bool operator<(const RemainderKey& o) const {
        if (phase != o.phase) return phase < o.phase;
        RationalStructuralLess less;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (less(coords[i], o.coords[i])) return true;
            if (less(o.coords[i], coords[i])) return false;
        }
        return false;
    }
};

inline Digit to_digit(const Int& n) {
    if (n < 0 || n > Int(std::numeric_limits<Digit>::max()))
        throw DigitOutOfRangeError("digit exceeds the supported range");
    return n.convert_to<Digit>();
}

/// Core greedy recurrence r_{k+1} = beta_{k+1} r_k - floor(beta_{k+1} r_k),
/// starting at r0 with the digit position phase `start_phase`. Detects exact
/// remainder/phase cycles and classifies.
inline ExpansionReport greedy_core(const AlternateBase& base, FieldElement r,
                                   std::int64_t cap, size_t start_phase) {
    const size_t p = base.period();
    std::vector<Digit> digits;
    std::map<RemainderKey, std::int64_t> seen;
    std::int64_t step = 0;
    while (step < cap) {
        if (r.is_zero()) {
            return {DigitWord(std::move(digits), {}), ExpansionKind::Finite, step,
                    std::nullopt};
        }
        size_t phase = (start_phase + static_cast<size_t>(step)) % p;
        auto [it, inserted] = seen.emplace(RemainderKey{r.coords(), phase}, step);
        if (!inserted) {
            std::int64_t cycle_start = it->second;
            std::vector<Digit> pre(digits.begin(),
                                   digits.begin() + static_cast<long>(cycle_start));
            std::vector<Digit> per(digits.begin() + static_cast<long>(cycle_start),
                                   digits.end());
            DigitWord word(std::move(pre), std::move(per));
            ExpansionKind kind = word.is_purely_periodic() ? ExpansionKind::PurelyPeriodic
                                                           : ExpansionKind::EventuallyPeriodic;
            return {std::move(word), kind, step, std::nullopt};
        }
        FieldElement t = base.beta_for_step(static_cast<size_t>(step) + start_phase) * r;
        Int a = t.floor_int();
        digits.push_back(to_digit(a));
        r = t - FieldElement::constant(base.field(), Rational(a));
        ++step;
    }
    return {DigitWord::raw_prefix(std::move(digits)), ExpansionKind::Truncated, step,
            std::move(r)};
}

}  // namespace detail

/// Greedy expansion of x in [0, 1). Early-terminates with kind Finite when
/// the remainder hits exactly zero; detects remainder cycles and returns the
/// canonical eventually periodic word; gives up with Truncated after `cap`
/// digit steps.
inline ExpansionReport greedy_expand(const AlternateBase& base, const FieldElement& x,
                                     std::int64_t cap = kDefaultCap) {
    if (cap < 1) throw OutOfRangeError("cap must be >= 1");
    if (x.sign() < 0 ||
        (x - FieldElement::constant(base.field(), Rational(1))).sign() >= 0)
        throw OutOfRangeError("greedy expansion requires 0 <= x < 1");
    return detail::greedy_core(base, x, cap, 0);
}

inline ExpansionReport greedy_expand(const AlternateBase& base, const Rational& x,
                                     std::int64_t cap = kDefaultCap) {
    return greedy_expand(base, FieldElement::constant(base.field(), x), cap);
}

/// Greedy expansion of 1 (the recurrence started at r0 = 1, so the first
/// digit may equal floor(beta_1)).
inline ExpansionReport expansion_of_one(const AlternateBase& base,
                                        std::int64_t cap = kDefaultCap) {
    if (cap < 1) throw OutOfRangeError("cap must be >= 1");
    return detail::greedy_core(base, FieldElement::constant(base.field(), Rational(1)),
                               cap, 0);
}

/// Quasi-greedy expansion of 1: the lexicographically greatest representation
/// of 1 with infinitely many nonzero digits. When the greedy expansion of 1
/// in the current shift is finite, its last digit is decremented and the
/// expansion continues in the shift advanced by the consumed length; the
/// recursion is unrolled with cycle detection on the shift index.
struct QuasiGreedyWord {
    DigitWord word;
    bool closed = false;  // false: `word` is a raw depth-bounded prefix
};

inline QuasiGreedyWord quasi_greedy_one(const AlternateBase& base,
                                        std::int64_t depth = kDefaultCap) {
    if (depth < 1) throw OutOfRangeError("depth must be >= 1");
    const size_t p = base.period();
    std::vector<Digit> acc;
    std::vector<std::int64_t> first_pos(p, -1);
    size_t shift_index = 0;  // 0-based
    while (true) {
        if (first_pos[shift_index] >= 0) {
            size_t cut = static_cast<size_t>(first_pos[shift_index]);
            std::vector<Digit> pre(acc.begin(), acc.begin() + static_cast<long>(cut));
            std::vector<Digit> per(acc.begin() + static_cast<long>(cut), acc.end());
            return {DigitWord(std::move(pre), std::move(per)), true};
        }
        first_pos[shift_index] = static_cast<std::int64_t>(acc.size());
        ExpansionReport rep =
            expansion_of_one(base.shift(static_cast<long>(shift_index) + 1), depth);
        if (rep.kind == ExpansionKind::Finite) {
            std::vector<Digit> seg = rep.word.preperiod();
            // d(1) is never empty and its last digit is >= 1
            seg.back() -= 1;
            acc.insert(acc.end(), seg.begin(), seg.end());
            shift_index = (shift_index + seg.size()) % p;
            continue;
        }
        if (rep.kind == ExpansionKind::Truncated) {
            const auto& digits = rep.word.preperiod();
            acc.insert(acc.end(), digits.begin(), digits.end());
            if (static_cast<std::int64_t>(acc.size()) > depth)
                acc.resize(static_cast<size_t>(depth));
            return {DigitWord::raw_prefix(std::move(acc)), false};
        }
        // infinite greedy expansion: the quasi-greedy word equals it
        std::vector<Digit> pre = acc;
        const auto& wpre = rep.word.preperiod();
        pre.insert(pre.end(), wpre.begin(), wpre.end());
        return {DigitWord(std::move(pre), rep.word.period()), true};
    }
}

namespace detail {

/// Pads a word so the preperiod length and period length are multiples of p
/// (and the period nonempty when the word is infinite). The stream is
/// unchanged. Returns {pre, per} as flat digit lists.
inline std::pair<std::vector<Digit>, std::vector<Digit>> block_aligned(const DigitWord& w,
                                                                       size_t p) {
    std::vector<Digit> pre = w.preperiod();
    std::vector<Digit> per = w.period();
    if (per.empty()) {
        while (pre.size() % p != 0) pre.push_back(0);
        return {std::move(pre), std::move(per)};
    }
    if (pre.size() % p != 0) {
        size_t need = p - pre.size() % p;
        for (size_t i = 0; i < need; ++i) pre.push_back(per[i % per.size()]);
        size_t rot = need % per.size();
        std::vector<Digit> rotated(per.begin() + static_cast<long>(rot), per.end());
        rotated.insert(rotated.end(), per.begin(), per.begin() + static_cast<long>(rot));
        per = std::move(rotated);
    }
    size_t s = std::lcm(per.size(), p);
    std::vector<Digit> full;
    full.reserve(s);
    while (full.size() < s) full.insert(full.end(), per.begin(), per.end());
    return {std::move(pre), std::move(full)};
}

inline void check_digit_ranges(const AlternateBase& base, const DigitWord& w) {
    const size_t p = base.period();
    std::vector<Digit> bounds(p);
    for (size_t i = 0; i < p; ++i) bounds[i] = base.digit_bound(i);
    auto fail = [](Digit d) {
        throw DigitOutOfRangeError("digit " + std::to_string(d) +
                                   " out of range for its position");
    };
    const auto& pre = w.preperiod();
    for (size_t i = 0; i < pre.size(); ++i)
        if (pre[i] < 0 || pre[i] >= bounds[i % p]) fail(pre[i]);
    const auto& per = w.period();
    if (!per.empty()) {
        // the period recurs at every phase it actually reaches in the stream
        size_t window = std::lcm(per.size(), p);
        for (size_t j = 0; j < window; ++j) {
            Digit d = per[j % per.size()];
            if (d < 0 || d >= bounds[(pre.size() + j) % p]) fail(d);
        }
    }
}

}  // namespace detail

/// Exact value of an eventually periodic word, computed in Q(delta) through
/// the block reading: with preperiod r and period s in delta-blocks,
/// x * delta^r (delta^s - 1) = (delta^s - 1) * sum d_k delta^(r-k)
///                           + sum d_(r+k) delta^(s-k).
inline FieldElement value_of(const AlternateBase& base, const DigitWord& w) {
    detail::check_digit_ranges(base, w);
    const size_t p = base.period();
    auto [pre, per] = detail::block_aligned(w, p);
    std::vector<FieldElement> v = base.digit_vector();
    auto block_value = [&](const std::vector<Digit>& digits, size_t k) {
        FieldElement d = FieldElement::zero(base.field());
        for (size_t i = 0; i < p; ++i) {
            Digit a = digits[k * p + i];
            if (a != 0) d += v[i] * Rational((long long)a);
        }
        return d;
    };
    const size_t r = pre.size() / p;
    const size_t s = per.size() / p;
    const FieldElement delta = base.delta();
    FieldElement head = FieldElement::zero(base.field());
    for (size_t k = 0; k < r; ++k)
        head += block_value(pre, k) * delta.pow(r - 1 - k);
    if (s == 0) {
        if (r == 0) return head;  // zero word
        return head / delta.pow(r);
    }
    FieldElement tail = FieldElement::zero(base.field());
    for (size_t k = 0; k < s; ++k)
        tail += block_value(per, k) * delta.pow(s - 1 - k);
    FieldElement one = FieldElement::constant(base.field(), Rational(1));
    FieldElement ds1 = delta.pow(s) - one;
    return (ds1 * head + tail) / (delta.pow(r) * ds1);
}

/// A word over the delta-digit alphabet D, block-aligned with the base.
struct DeltaDigit {
    FieldElement value;
    std::vector<Digit> block;
};
struct DeltaWord {
    std::vector<DeltaDigit> preperiod;
    std::vector<DeltaDigit> period;
};

/// Groups p consecutive digits into one delta-digit; exact and value
/// preserving. The input word is padded to block alignment first.
inline DeltaWord block_encode(const AlternateBase& base, const DigitWord& w) {
    detail::check_digit_ranges(base, w);
    const size_t p = base.period();
    auto [pre, per] = detail::block_aligned(w, p);
    std::vector<FieldElement> v = base.digit_vector();
    auto encode = [&](const std::vector<Digit>& digits) {
        std::vector<DeltaDigit> out;
        for (size_t k = 0; k * p < digits.size(); ++k) {
            FieldElement d = FieldElement::zero(base.field());
            std::vector<Digit> block(digits.begin() + static_cast<long>(k * p),
                                     digits.begin() + static_cast<long>((k + 1) * p));
            for (size_t i = 0; i < p; ++i)
                if (block[i] != 0) d += v[i] * Rational((long long)block[i]);
            out.push_back({std::move(d), std::move(block)});
        }
        return out;
    };
    return {encode(pre), encode(per)};
}

/// Inverse of block_encode: every delta-digit must belong to the alphabet D;
/// its canonical block supplies the p base digits.
inline DigitWord block_decode(const AlternateBase& base, const DeltaWord& dw) {
    auto alphabet = base.digit_alphabet();
    auto decode = [&](const std::vector<DeltaDigit>& digits) {
        std::vector<Digit> out;
        for (const auto& d : digits) {
            auto idx = AlternateBase::find_digit(alphabet, d.value);
            if (!idx)
                throw DigitNotInAlphabetError("delta-digit is not in the alphabet D");
            const auto& block = alphabet[*idx].block;
            out.insert(out.end(), block.begin(), block.end());
        }
        return out;
    };
    return DigitWord(decode(dw.preperiod), decode(dw.period));
}

/// Expansion of x >= 0 with a radix point: x is scaled by delta^-k into
/// [0, 1) with minimal k, expanded, and split after p*k digits. Leading
/// all-zero blocks of the integer part are stripped (adjusting k).
struct PointedExpansion {
    PointedWord word;
    ExpansionKind kind = ExpansionKind::Finite;
    std::int64_t scale_k = 0;  // x = delta^k * value(stream)
    std::int64_t steps_used = 0;
};

inline PointedExpansion expand_nonneg(const AlternateBase& base, const FieldElement& x,
                                      std::int64_t cap = kDefaultCap) {
    if (x.sign() < 0) throw OutOfRangeError("expand_nonneg requires x >= 0");
    const size_t p = base.period();
    const FieldElement one = FieldElement::constant(base.field(), Rational(1));
    FieldElement z = x;
    std::int64_t k = 0;
    while ((z - one).sign() >= 0) {
        z = z / base.delta();
        ++k;
    }
    ExpansionReport rep = detail::greedy_core(base, z, cap, 0);
    PointedExpansion out;
    out.kind = rep.kind;
    out.steps_used = rep.steps_used;
    std::vector<Digit> integer;
    integer.reserve(static_cast<size_t>(k) * p);
    for (size_t j = 0; j < static_cast<size_t>(k) * p; ++j)
        integer.push_back(rep.word.digit_at(j));
    DigitWord fractional;
    if (rep.kind == ExpansionKind::Truncated) {
        // keep the truncated tail verbatim; canonicalizing would drop digits
        const auto& digits = rep.word.preperiod();
        size_t cut = std::min(static_cast<size_t>(k) * p, digits.size());
        fractional = DigitWord::raw_prefix(
            std::vector<Digit>(digits.begin() + static_cast<long>(cut), digits.end()));
    } else {
        fractional = rep.word.suffix(static_cast<size_t>(k) * p);
    }
    while (k > 0) {
        bool zero_block = true;
        for (size_t i = 0; i < p && zero_block; ++i) zero_block = integer[i] == 0;
        if (!zero_block) break;
        integer.erase(integer.begin(), integer.begin() + static_cast<long>(p));
        --k;
    }
    out.word = PointedWord{std::move(integer), std::move(fractional)};
    out.scale_k = k;
    return out;
}

inline PointedExpansion expand_nonneg(const AlternateBase& base, const Rational& x,
                                      std::int64_t cap = kDefaultCap) {
    return expand_nonneg(base, FieldElement::constant(base.field(), x), cap);
}

/// Exact value of a pointed expansion: delta^k times the value of the full
/// digit stream read as a fractional word.
inline FieldElement pointed_value(const AlternateBase& base, const PointedExpansion& pe) {
    std::vector<Digit> pre = pe.word.integer_part;
    const auto& fpre = pe.word.fractional.preperiod();
    pre.insert(pre.end(), fpre.begin(), fpre.end());
    DigitWord stream(std::move(pre), pe.word.fractional.period());
    FieldElement v = value_of(base, stream);
    return v * base.delta().pow(static_cast<unsigned long long>(pe.scale_k));
}

/// True iff x >= 0 has only zeros after the radix point. Throws
/// UndecidedError when the expansion is truncated before that is settled.
inline bool is_B_integer(const AlternateBase& base, const FieldElement& x,
                         std::int64_t cap = kDefaultCap) {
    PointedExpansion pe = expand_nonneg(base, x, cap);
    if (pe.kind == ExpansionKind::Truncated) {
        // a nonzero fractional digit already emitted decides the question
        const auto& digits = pe.word.fractional.preperiod();
        for (Digit d : digits)
            if (d != 0) return false;
        throw UndecidedError("expansion truncated before the fractional part settled");
    }
    return pe.word.fractional.is_zero_word();
}

}  // namespace altbase
