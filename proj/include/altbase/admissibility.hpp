#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "altbase/expansion.hpp"

namespace altbase {

enum class AdmissibleVerdict { Admissible, NotAdmissible, Undecided };

inline const char* to_string(AdmissibleVerdict v) {
    switch (v) {
        case AdmissibleVerdict::Admissible: return "admissible";
        case AdmissibleVerdict::NotAdmissible: return "not_admissible";
        case AdmissibleVerdict::Undecided: return "undecided";
    }
    return "?";
}

struct AdmissibilityResult {
    AdmissibleVerdict verdict = AdmissibleVerdict::Admissible;
    std::optional<size_t> position;  // 1-based suffix start that decided
};

/// Decides whether the eventually periodic word w is the greedy expansion of
/// some x in [0, 1): every suffix must be lexicographically strictly below
/// the quasi-greedy expansion of 1 of the correspondingly shifted base.
///
/// Only finitely many (suffix, shift) pairs exist: suffix starts beyond the
/// preperiod repeat with period lcm(|period|, p), and there are only p
/// distinct quasi-greedy comparison words. When a comparison word is only
/// available as a truncated prefix, agreement through `depth` digits yields
/// Undecided rather than Admissible.
inline AdmissibilityResult is_admissible(const AlternateBase& base, const DigitWord& w,
                                         std::int64_t depth = kDefaultCap) {
    const size_t p = base.period();
    std::vector<QuasiGreedyWord> qg;
    qg.reserve(p);
    for (size_t i = 0; i < p; ++i)
        qg.push_back(quasi_greedy_one(base.shift(static_cast<long>(i) + 1), depth));

    size_t span = w.period().empty() ? std::max<size_t>(w.preperiod().size(), 1)
                                     : w.preperiod().size() + std::lcm(w.period().size(), p);
    for (size_t start = 0; start < span; ++start) {
        const QuasiGreedyWord& bound = qg[start % p];
        if (bound.closed) {
            DigitWord suffix = w.suffix(start);
            auto cmp = compare_streams(suffix, bound.word);
            if (cmp >= 0)
                return {AdmissibleVerdict::NotAdmissible, start + 1};
        } else {
            const auto& prefix = bound.word.preperiod();
            bool decided = false;
            for (size_t k = 0; k < prefix.size(); ++k) {
                Digit a = w.digit_at(start + k);
                if (a < prefix[k]) {
                    decided = true;
                    break;
                }
                if (a > prefix[k])
                    return {AdmissibleVerdict::NotAdmissible, start + 1};
            }
            if (!decided) return {AdmissibleVerdict::Undecided, start + 1};
        }
    }
    return {AdmissibleVerdict::Admissible, std::nullopt};
}

}  // namespace altbase
