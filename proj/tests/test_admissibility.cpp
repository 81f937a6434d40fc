#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "altbase/admissibility.hpp"

using altbase::AdmissibleVerdict;
using altbase::AlternateBase;
using altbase::DigitWord;
using altbase::FieldElement;
using altbase::Int;
using altbase::Rational;

TEST_CASE("the worked example word is admissible") {
    AlternateBase b = altbase::pp_family(2);
    DigitWord w({}, {1, 0, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0});
    auto res = is_admissible(b, w);
    CHECK(res.verdict == AdmissibleVerdict::Admissible);
}

TEST_CASE("forbidden block pairs are rejected with a position") {
    AlternateBase b = altbase::pp_family(2);
    // block pair (0,m)(0,b) with b >= 1 at an odd block boundary: the suffix
    // starting at the digit m dominates the quasi-greedy word m,0,(0,1)
    DigitWord w({0, 2, 0, 1}, {});
    auto res = is_admissible(b, w);
    CHECK(res.verdict == AdmissibleVerdict::NotAdmissible);
    REQUIRE(res.position.has_value());
    CHECK(*res.position == 2);  // the suffix starting at the 2 decides

    // digit equal to the bound is inadmissible
    DigitWord too_big({2, 0}, {});
    CHECK(is_admissible(b, too_big).verdict == AdmissibleVerdict::NotAdmissible);
}

TEST_CASE("the zero word is admissible in any base") {
    CHECK(is_admissible(altbase::pp_family(1), DigitWord()).verdict ==
          AdmissibleVerdict::Admissible);
    CHECK(is_admissible(altbase::pp_family(3).shift(2), DigitWord()).verdict ==
          AdmissibleVerdict::Admissible);
}

TEST_CASE("greedy output is always admissible") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> den(1, 80);
    for (long m : {1L, 2L, 3L}) {
        for (long shift = 1; shift <= 2; ++shift) {
            AlternateBase b = altbase::pp_family(m).shift(shift);
            for (int i = 0; i < 40; ++i) {
                long long q = den(rng);
                long long p = static_cast<long long>(rng() % static_cast<std::uint64_t>(q));
                auto rep = greedy_expand(b, Rational(Int(p), Int(q)));
                REQUIRE(rep.closed());
                CHECK(is_admissible(b, rep.word).verdict == AdmissibleVerdict::Admissible);
            }
        }
    }
}

TEST_CASE("decreasing a digit and zeroing the tail stays admissible") {
    AlternateBase b = altbase::pp_family(2);
    auto rep = greedy_expand(b, Rational(Int(3), Int(4)));
    DigitWord w = rep.word;
    size_t span = w.period().size();
    for (size_t k = 0; k < span; ++k) {
        if (w.digit_at(k) == 0) continue;
        std::vector<altbase::Digit> prefix;
        for (size_t i = 0; i < k; ++i) prefix.push_back(w.digit_at(i));
        prefix.push_back(w.digit_at(k) - 1);
        DigitWord lowered(std::move(prefix), {});
        CHECK(is_admissible(b, lowered).verdict == AdmissibleVerdict::Admissible);
    }
}

TEST_CASE("admissible words round trip through value and greedy") {
    AlternateBase b = altbase::pp_family(2);
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int tries = 0; tries < 400 && checked < 40; ++tries) {
        size_t len = 2 * (1 + rng() % 4);
        std::vector<altbase::Digit> pre(len), per;
        for (size_t i = 0; i < len; ++i)
            pre[i] = static_cast<altbase::Digit>(rng() %
                                                 static_cast<std::uint64_t>(b.digit_bound(i)));
        bool periodic = rng() % 2 == 0;
        if (periodic) {
            per = pre;
            pre.clear();
        }
        DigitWord w(std::move(pre), std::move(per));
        if (is_admissible(b, w).verdict != AdmissibleVerdict::Admissible) continue;
        FieldElement v = value_of(b, w);
        auto rep = greedy_expand(b, v);
        REQUIRE(rep.closed());
        CHECK(rep.word == w);
        ++checked;
    }
    CHECK(checked >= 40);
}
