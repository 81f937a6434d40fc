#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "altbase/expansion.hpp"

namespace altbase {

/// One digit pair of the two-base family written as a block: `a` is the
/// digit weighted by beta_2, `b` the unit digit. During rewriting, blocks
/// (0, d) transiently carry raw delta-digits with d up to m + 1; finished
/// words only contain alphabet blocks with a <= 1, b <= m.
struct Block {
    Digit a = 0;
    Digit b = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

inline std::string blocks_str(const std::vector<Block>& blocks) {
    std::string out;
    for (const auto& blk : blocks)
        out += "(" + std::to_string(blk.a) + "," + std::to_string(blk.b) + ")";
    return out;
}

struct RewriteStep {
    std::string rule;  // "carry", "type_a", "type_b"
    size_t position = 0;
    std::vector<Block> blocks;  // state after the application (doubled period)
};

struct PPRewriteResult {
    ExpansionReport report;       // the purely periodic base expansion
    DigitWord delta_word;         // single-base greedy expansion over delta
    std::vector<RewriteStep> trace;
    std::int64_t rewrite_steps = 0;
};

namespace detail {

/// Applies the carry rule (0, m+1)(0, 0) -> (1, 0)(1, 0) to fixpoint. Every
/// delta-digit m+1 is followed by 0, so the pair always exists.
inline void apply_carry_rule(std::vector<Block>& blocks, long m,
                             std::vector<RewriteStep>* trace, std::int64_t& steps) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < blocks.size(); ++i) {
            if (blocks[i] == Block{0, m + 1}) {
                if (!(blocks[i + 1] == Block{0, 0}))
                    throw RewriteStuckError("digit m+1 not followed by 0");
                blocks[i] = Block{1, 0};
                blocks[i + 1] = Block{1, 0};
                ++steps;
                changed = true;
                if (trace) trace->push_back({"carry", i, blocks});
            }
        }
        if (!blocks.empty() && blocks.back() == Block{0, m + 1})
            throw RewriteStuckError("digit m+1 at the period seam");
    }
}

/// Leftmost forbidden factor: Type A = (0,m)(0,b) with 1 <= b <= m,
/// Type B = (0,m)(1,0)(1,0). Returns npos when none.
inline size_t leftmost_forbidden(const std::vector<Block>& blocks, long m, int& type) {
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!(blocks[i] == Block{0, m})) continue;
        if (i + 1 < blocks.size() && blocks[i + 1].a == 0 && blocks[i + 1].b >= 1 &&
            blocks[i + 1].b <= m) {
            type = 'A';
            return i;
        }
        if (i + 2 < blocks.size() && blocks[i + 1] == Block{1, 0} &&
            blocks[i + 2] == Block{1, 0}) {
            type = 'B';
            return i;
        }
    }
    type = 0;
    return static_cast<size_t>(-1);
}

/// Progress measure for the admissibility rewriting: both rules decrease
/// 2 * #(0,m) + #(1,0) by exactly one, which bounds the loop linearly.
inline std::int64_t rewrite_measure(const std::vector<Block>& blocks, long m) {
    std::int64_t phi = 0;
    for (const auto& blk : blocks) {
        if (blk == Block{0, m}) phi += 2;
        if (blk == Block{1, 0}) phi += 1;
    }
    return phi;
}

}  // namespace detail

/// Rewrites the single-base greedy expansion of a rational x in [0, 1) over
/// delta (the root of x^2 - (m+1)x - 1) into the purely periodic expansion
/// in the two-base family, by the carry rule and the two admissibility
/// rules, applied left to right. The period is processed doubled so factors
/// crossing the period seam are seen; the result must again consist of two
/// equal halves, which close into the new period.
inline PPRewriteResult pp_rewrite(long m, const Rational& x, std::int64_t cap = kDefaultCap,
                                  bool keep_trace = false) {
    if (m < 1) throw MalformedConfigError("family parameter m must be >= 1");
    if (x.sign() < 0 || x >= Rational(1))
        throw OutOfRangeError("pp_rewrite requires 0 <= x < 1");

    PPRewriteResult result;
    if (x.is_zero()) {
        result.report = {DigitWord(), ExpansionKind::Finite, 0, std::nullopt};
        result.delta_word = DigitWord();
        return result;
    }

    AlternateBase family = pp_family(m);
    AlternateBase delta_base = single_base(family.field());
    ExpansionReport drep = greedy_expand(delta_base, x, cap);
    if (drep.kind == ExpansionKind::Truncated)
        throw PeriodDidNotCloseError("delta expansion did not close within the cap");
    if (drep.kind != ExpansionKind::PurelyPeriodic)
        throw PeriodDidNotCloseError("delta expansion of a rational must be purely periodic");
    result.delta_word = drep.word;

    const std::vector<Digit>& dd = drep.word.period();
    if (dd.back() != 0)
        throw RewriteStuckError("delta expansion period does not end in digit 0");

    // doubled period as blocks (0, d)
    std::vector<Block> blocks;
    blocks.reserve(2 * dd.size());
    for (int copy = 0; copy < 2; ++copy)
        for (Digit d : dd) blocks.push_back(Block{0, d});

    std::vector<RewriteStep>* trace = keep_trace ? &result.trace : nullptr;
    std::int64_t steps = 0;
    detail::apply_carry_rule(blocks, m, trace, steps);

    std::int64_t budget =
        static_cast<std::int64_t>(blocks.size() + 4) * static_cast<std::int64_t>(blocks.size() + 4);
    std::int64_t phi = detail::rewrite_measure(blocks, m);
    while (true) {
        int type = 0;
        size_t pos = detail::leftmost_forbidden(blocks, m, type);
        if (type == 0) break;
        if (type == 'A') {
            Digit b = blocks[pos + 1].b;
            blocks[pos] = Block{1, 0};
            blocks[pos + 1] = Block{0, b - 1};
            if (trace) trace->push_back({"type_a", pos, blocks});
        } else {
            blocks[pos] = Block{1, 0};
            blocks[pos + 1] = Block{0, m};
            blocks[pos + 2] = Block{0, 0};
            if (trace) trace->push_back({"type_b", pos, blocks});
        }
        ++steps;
        std::int64_t phi2 = detail::rewrite_measure(blocks, m);
        if (phi2 >= phi)
            throw RewriteStuckError("rewrite progress measure did not decrease");
        phi = phi2;
        if (steps > budget)
            throw RewriteStuckError("rewrite step budget exceeded");
    }
    result.rewrite_steps = steps;

    const size_t n = dd.size();
    for (size_t i = 0; i < n; ++i)
        if (!(blocks[i] == blocks[n + i]))
            throw PeriodDidNotCloseError("rewritten doubled period is not two equal halves");
    if (!(blocks[n - 1] == Block{0, 0} || blocks[n - 1] == Block{1, 0}))
        throw PeriodDidNotCloseError("rewritten period does not end in a closing block");

    std::vector<Digit> digits;
    digits.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) {
        digits.push_back(blocks[i].a);
        digits.push_back(blocks[i].b);
    }
    result.report = {DigitWord({}, std::move(digits)), ExpansionKind::PurelyPeriodic,
                     steps, std::nullopt};
    return result;
}

/// Closed form of the expansion of 1/2 in the family base shifted to start
/// at beta_2: for even m = 2k the word is k(0 0 0 k 0 k+1)^w, for odd
/// m = 2k+1 with k >= 1 it is k(0 k+1)^w.
///
/// m = 1 is special: the k >= 1 pattern would give 0(0 1)^w, which has value
/// 1/2 but is not greedy (at the second position the greedy algorithm emits
/// 1, not 0: beta_1 * sqrt(2)/2 = (1 + sqrt(2))/2 > 1). The expansion of 1/2
/// closes into the purely periodic word (0 1 0 0)^w instead, so 1/2 is not a
/// witness against pure periodicity in this one base.
inline DigitWord half_expansion_formula(long m) {
    if (m < 1) throw MalformedConfigError("family parameter m must be >= 1");
    if (m == 1) return DigitWord({}, {0, 1, 0, 0});
    long k = m / 2;
    if (m % 2 == 0)
        return DigitWord({k}, {0, 0, 0, k, 0, k + 1});
    return DigitWord({k}, {0, k + 1});
}

struct GammaScanReport {
    Rational verified_lower;  // all rationals strictly below are purely periodic
    std::optional<std::pair<Rational, ExpansionReport>> first_failure;
    std::optional<Rational> undecided_at;  // truncated before classification
    std::int64_t qmax = 0;
    std::int64_t cap = 0;
    std::int64_t scanned = 0;
};

/// All fractions in (0, 1) with denominator <= qmax, ascending (Farey order).
inline std::vector<Rational> farey_fractions(std::int64_t qmax) {
    if (qmax < 2) throw OutOfRangeError("qmax must be >= 2");
    std::vector<Rational> out;
    Int a = 0, b = 1, c = 1, d = qmax;
    while (!(c == 1 && d == 1)) {
        Int k = (Int(qmax) + b) / d;
        Int a2 = k * c - a;
        Int b2 = k * d - b;
        a = c;
        b = d;
        c = a2;
        d = b2;
        out.emplace_back(a, b);
    }
    return out;
}

/// Classifies every rational with denominator <= qmax in increasing order
/// and reports the first value whose expansion is not purely periodic, or
/// an Undecided marker at the first truncated classification. Work is
/// distributed over `threads` workers; classification is pure per rational.
inline GammaScanReport gamma_scan(const AlternateBase& base, std::int64_t qmax,
                                  std::int64_t cap = kDefaultCap, unsigned threads = 0) {
    GammaScanReport rep;
    rep.qmax = qmax;
    rep.cap = cap;
    std::vector<Rational> xs = farey_fractions(qmax);
    rep.scanned = static_cast<std::int64_t>(xs.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 16);

    std::vector<ExpansionReport> reports(xs.size());
    // stop index: no need to classify anything right of the first event
    std::atomic<size_t> stop{xs.size()};
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= xs.size() || i > stop.load()) break;
            reports[i] = greedy_expand(base, xs[i], cap);
            if (reports[i].kind != ExpansionKind::PurelyPeriodic) {
                size_t cur = stop.load();
                while (i < cur && !stop.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    rep.verified_lower = Rational(1);
    size_t first = stop.load();
    if (first < xs.size()) {
        const ExpansionReport& r = reports[first];
        rep.verified_lower = xs[first];
        if (r.kind == ExpansionKind::Truncated)
            rep.undecided_at = xs[first];
        else
            rep.first_failure = std::make_pair(xs[first], r);
    }
    return rep;
}

}  // namespace altbase
