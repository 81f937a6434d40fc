#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "altbase/errors.hpp"

namespace altbase {

using Digit = std::int64_t;

/// Eventually periodic digit sequence: finite preperiod followed by an
/// infinitely repeated period. An empty period means the word is finite,
/// i.e. continues with zeros forever.
///
/// Construction canonicalizes: the period is reduced to its primitive root
/// and rotated so the preperiod is as short as possible; all-zero periods
/// collapse to the finite form, finite words carry no trailing zeros.
/// Use `raw_prefix` for truncated digit streams that must not be normalized.
class DigitWord {
public:
    DigitWord() = default;

    DigitWord(std::vector<Digit> preperiod, std::vector<Digit> period)
        : pre_(std::move(preperiod)), per_(std::move(period)) {
        for (Digit d : pre_)
            if (d < 0) throw ParseError("negative digit");
        for (Digit d : per_)
            if (d < 0) throw ParseError("negative digit");
        canonicalize();
    }

    /// A finite word kept verbatim (trailing zeros preserved); used for
    /// truncated prefixes of streams whose continuation is unknown.
    static DigitWord raw_prefix(std::vector<Digit> digits) {
        DigitWord w;
        w.pre_ = std::move(digits);
        return w;
    }

    const std::vector<Digit>& preperiod() const { return pre_; }
    const std::vector<Digit>& period() const { return per_; }

    bool is_finite() const { return per_.empty(); }
    bool is_purely_periodic() const { return pre_.empty() && !per_.empty(); }
    bool is_zero_word() const { return pre_.empty() && per_.empty(); }

    /// 0-based digit of the infinite stream.
    Digit digit_at(size_t k) const {
        if (k < pre_.size()) return pre_[k];
        if (per_.empty()) return 0;
        return per_[(k - pre_.size()) % per_.size()];
    }

    /// The stream shifted left by n positions, re-canonicalized.
    DigitWord suffix(size_t n) const {
        if (n <= pre_.size())
            return DigitWord(std::vector<Digit>(pre_.begin() + static_cast<long>(n), pre_.end()),
                             per_);
        if (per_.empty()) return DigitWord();
        size_t k = (n - pre_.size()) % per_.size();
        std::vector<Digit> rotated(per_.begin() + static_cast<long>(k), per_.end());
        rotated.insert(rotated.end(), per_.begin(), per_.begin() + static_cast<long>(k));
        return DigitWord({}, std::move(rotated));
    }

    friend bool operator==(const DigitWord& a, const DigitWord& b) {
        return a.pre_ == b.pre_ && a.per_ == b.per_;
    }

    /// Exact lexicographic comparison of the two infinite digit streams.
    /// Sound for canonical (finite or eventually periodic) words.
    friend std::strong_ordering compare_streams(const DigitWord& a, const DigitWord& b) {
        size_t pa = std::max(a.pre_.size(), b.pre_.size());
        size_t la = a.per_.empty() ? 1 : a.per_.size();
        size_t lb = b.per_.empty() ? 1 : b.per_.size();
        size_t bound = pa + std::lcm(la, lb) + 1;
        for (size_t k = 0; k < bound; ++k) {
            Digit da = a.digit_at(k), db = b.digit_at(k);
            if (da != db) return da <=> db;
        }
        return std::strong_ordering::equal;
    }

    /// Renders with the CLI/JSON word syntax: comma-separated digits with the
    /// period parenthesized, e.g. "1,1", "(1,0)", "1(0,2)". The zero word
    /// renders as "0".
    std::string str() const {
        if (is_zero_word()) return "0";
        std::string out = join(pre_);
        if (!per_.empty()) out += "(" + join(per_) + ")";
        return out;
    }

    /// Parses the syntax produced by str(). Whitespace around digits is
    /// tolerated. The result is canonical.
    static DigitWord parse(std::string_view s) {
        auto bad = [&] { throw ParseError("invalid word: '" + std::string(s) + "'"); };
        std::string_view pre = s, per;
        size_t open = s.find('(');
        if (open != std::string_view::npos) {
            size_t close = s.find(')', open);
            if (close == std::string_view::npos || close != s.size() - 1 ||
                s.find('(', open + 1) != std::string_view::npos)
                bad();
            pre = s.substr(0, open);
            per = s.substr(open + 1, close - open - 1);
        }
        return DigitWord(parse_digits(pre), parse_digits(per));
    }

private:
    static std::string join(const std::vector<Digit>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
        return out;
    }

    static std::vector<Digit> parse_digits(std::string_view s) {
        std::vector<Digit> out;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        };
        skip_ws();
        if (i == s.size()) return out;
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            if (i == start) throw ParseError("invalid digit in word");
            out.push_back(std::stoll(std::string(s.substr(start, i - start))));
            skip_ws();
            if (i == s.size()) break;
            if (s[i] != ',') throw ParseError("expected ',' in word");
            ++i;
        }
        return out;
    }

    static bool all_zero(const std::vector<Digit>& v) {
        return std::all_of(v.begin(), v.end(), [](Digit d) { return d == 0; });
    }

    void canonicalize() {
        if (all_zero(per_)) per_.clear();
        if (per_.empty()) {
            while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
            return;
        }
        // primitive root of the period
        for (size_t s = 1; s <= per_.size() / 2; ++s) {
            if (per_.size() % s != 0) continue;
            bool ok = true;
            for (size_t k = s; k < per_.size() && ok; ++k) ok = per_[k] == per_[k - s];
            if (ok) {
                per_.resize(s);
                break;
            }
        }
        // absorb matching preperiod tail into the period by rotation
        while (!pre_.empty() && pre_.back() == per_.back()) {
            pre_.pop_back();
            per_.insert(per_.begin(), per_.back());
            per_.pop_back();
        }
    }

    std::vector<Digit> pre_;
    std::vector<Digit> per_;
};

/// Expansion of a number >= 1: a block-aligned integer part before the radix
/// point and a fractional tail. The integer part length is a multiple of the
/// base period.
struct PointedWord {
    std::vector<Digit> integer_part;
    DigitWord fractional;
};

}  // namespace altbase
