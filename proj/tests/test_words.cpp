#include <catch2/catch_amalgamated.hpp>

#include "altbase/words.hpp"

using altbase::Digit;
using altbase::DigitWord;

TEST_CASE("canonicalization") {
    // all-zero period collapses to the finite form
    CHECK(DigitWord({1, 2}, {0, 0}) == DigitWord({1, 2}, {}));
    // trailing zeros of finite words are stripped
    CHECK(DigitWord({1, 1, 0, 0}, {}) == DigitWord({1, 1}, {}));
    // the period is reduced to its primitive root
    CHECK(DigitWord({}, {1, 0, 1, 0}) == DigitWord({}, {1, 0}));
    // preperiod digits matching the period tail are absorbed by rotation
    DigitWord w({2, 1}, {0, 1});
    CHECK(w.preperiod() == std::vector<Digit>{2});
    CHECK(w.period() == std::vector<Digit>{1, 0});
    // m0(01) stays put, m00(10) folds onto it
    DigitWord a({3, 0}, {0, 1});
    DigitWord b({3, 0, 0}, {1, 0});
    CHECK(a == b);
    // zero word
    CHECK(DigitWord({0, 0}, {}).is_zero_word());
    CHECK(DigitWord({}, {0}).is_zero_word());
    CHECK_THROWS_AS(DigitWord({-1}, {}), altbase::ParseError);
}

TEST_CASE("stream access and suffix") {
    DigitWord w({5}, {1, 2, 3});
    CHECK(w.digit_at(0) == 5);
    CHECK(w.digit_at(1) == 1);
    CHECK(w.digit_at(4) == 1);
    CHECK(w.digit_at(6) == 3);
    DigitWord s = w.suffix(2);
    for (size_t k = 0; k < 12; ++k) CHECK(s.digit_at(k) == w.digit_at(k + 2));
    DigitWord fin({1, 2}, {});
    CHECK(fin.digit_at(7) == 0);
    CHECK(fin.suffix(2).is_zero_word());
}

TEST_CASE("rendering and parsing") {
    CHECK(DigitWord({1, 1}, {}).str() == "1,1");
    CHECK(DigitWord({}, {1, 0}).str() == "(1,0)");
    CHECK(DigitWord({1}, {0, 0, 0, 1, 0, 2}).str() == "1(0,0,0,1,0,2)");
    CHECK(DigitWord().str() == "0");

    CHECK(DigitWord::parse("1,1") == DigitWord({1, 1}, {}));
    CHECK(DigitWord::parse("(1,0,0,0,0,1,1,0,0,2,0,0)") ==
          DigitWord({}, {1, 0, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0}));
    CHECK(DigitWord::parse("1(0,2)") == DigitWord({1}, {0, 2}));
    CHECK(DigitWord::parse("0") == DigitWord());
    CHECK(DigitWord::parse(" 1 , 2 ") == DigitWord({1, 2}, {}));
    CHECK_THROWS_AS(DigitWord::parse("1,(2"), altbase::ParseError);
    CHECK_THROWS_AS(DigitWord::parse("1,a"), altbase::ParseError);
    CHECK_THROWS_AS(DigitWord::parse("(1)(2)"), altbase::ParseError);

    // round trip on canonical words
    for (const char* s : {"1,1", "(1,0)", "3,0(0,1)", "1(0,0,0,1,0,2)", "0"})
        CHECK(DigitWord::parse(s).str() == s);
}

TEST_CASE("exact stream comparison") {
    using namespace altbase;
    CHECK(compare_streams(DigitWord({}, {1, 0}), DigitWord({}, {1, 0})) ==
          std::strong_ordering::equal);
    CHECK(compare_streams(DigitWord({1, 1}, {}), DigitWord({}, {1, 0})) ==
          std::strong_ordering::greater);  // 1,1,0... > 1,0,1...
    CHECK(compare_streams(DigitWord({}, {1, 0}), DigitWord({}, {1})) ==
          std::strong_ordering::less);  // 1,0,1,0 < 1,1,1
    // streams equal although written differently
    CHECK(compare_streams(DigitWord({2, 1}, {0, 1}), DigitWord({2}, {1, 0})) ==
          std::strong_ordering::equal);
    // finite vs zero tail
    CHECK(compare_streams(DigitWord({0, 0, 1}, {}), DigitWord()) ==
          std::strong_ordering::greater);
}

TEST_CASE("raw prefixes preserve trailing zeros") {
    DigitWord raw = DigitWord::raw_prefix({1, 0, 0});
    CHECK(raw.preperiod().size() == 3);
    CHECK(raw.is_finite());
}
