#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "altbase/numberfield.hpp"

using altbase::FieldElement;
using altbase::Int;
using altbase::Interval;
using altbase::NumberField;
using altbase::Polynomial;
using altbase::Rational;

namespace {

NumberField::Ptr delta_field() {
    // x^2 - 3x - 1, root in (3, 4)
    return NumberField::make(Polynomial::from_ints({-1, -3, 1}),
                             Interval(Rational(3), Rational(4)));
}

FieldElement elem(const NumberField::Ptr& f, long long a, long long b) {
    return FieldElement(f, {Rational(a), Rational(b)});
}

FieldElement random_element(const NumberField::Ptr& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 20);
    return FieldElement(f, {Rational(Int(num(rng)), Int(den(rng))),
                            Rational(Int(num(rng)), Int(den(rng)))});
}

}  // namespace

TEST_CASE("field construction validates its inputs") {
    CHECK_THROWS_AS(NumberField::make(Polynomial::from_ints({1, 2, 1}),
                                      Interval(Rational(-2), Rational(0))),
                    altbase::NotSquarefreeError);
    // isolator containing two roots
    CHECK_THROWS_AS(NumberField::make(Polynomial::from_ints({-1, -3, 1}),
                                      Interval(Rational(-10), Rational(10))),
                    altbase::InvalidIsolatorError);
    // designated root below 1
    CHECK_THROWS_AS(NumberField::make(Polynomial::from_ints({-1, -3, 1}),
                                      Interval(Rational(-1), Rational(0))),
                    altbase::RootNotGreaterThanOneError);
    CHECK_THROWS_AS(NumberField::make(Polynomial::from_ints({-1, 1}),
                                      Interval(Rational(0), Rational(2))),
                    altbase::RootNotGreaterThanOneError);

    auto f = delta_field();
    CHECK(f->degree() == 2);
    CHECK(f->isolator().lo >= Rational(3));
    CHECK(f->isolator().hi <= Rational(4));
}

TEST_CASE("reduction modulo the minimal polynomial") {
    auto f = delta_field();
    FieldElement delta = FieldElement::generator(f);
    FieldElement d2 = delta * delta;
    // delta^2 = 3 delta + 1
    CHECK(d2 == elem(f, 1, 3));

    // 1/delta = delta - 3 because delta(delta - 3) = 1
    FieldElement one = FieldElement::constant(f, Rational(1));
    CHECK(one / delta == elem(f, -3, 1));
    CHECK((one / delta) * delta == one);
}

TEST_CASE("additive and multiplicative structure on random elements") {
    auto f = delta_field();
    std::mt19937_64 rng(11);
    FieldElement zero = FieldElement::zero(f);
    FieldElement one = FieldElement::constant(f, Rational(1));
    for (int i = 0; i < 60; ++i) {
        FieldElement a = random_element(f, rng);
        FieldElement b = random_element(f, rng);
        CHECK(a + (-a) == zero);
        CHECK(a * (b + one) == a * b + a);
        if (!b.is_zero()) {
            CHECK((one / b) * b == one);
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("division errors") {
    auto f = delta_field();
    FieldElement one = FieldElement::constant(f, Rational(1));
    CHECK_THROWS_AS(one / FieldElement::zero(f), altbase::DivisionByZeroError);

    // reducible modulus surfaces NotInvertible on division by a factor
    auto red = NumberField::make(Polynomial::from_ints({-1, 1}) *
                                     Polynomial::from_ints({-1, -3, 1}),
                                 Interval(Rational(3), Rational(4)));
    FieldElement factor(red, {Rational(-1), Rational(1), Rational(0)});  // x - 1
    CHECK_THROWS_AS(factor.inverse(), altbase::NotInvertibleError);
}

TEST_CASE("field mismatch is rejected") {
    auto f = delta_field();
    auto g = NumberField::make(Polynomial::from_ints({-1, -1, 1}),
                               Interval(Rational(1), Rational(2)));
    CHECK_THROWS_AS(FieldElement::generator(f) + FieldElement::generator(g),
                    altbase::FieldMismatchError);
    // structurally equal fields interoperate
    auto f2 = delta_field();
    CHECK(FieldElement::generator(f) == FieldElement::generator(f2));
}

TEST_CASE("exact sign of field values") {
    auto f = delta_field();
    // delta ~ 3.3027756
    CHECK(elem(f, -3, 1).sign() == 1);   // delta - 3 > 0
    CHECK(elem(f, -4, 1).sign() == -1);  // delta - 4 < 0
    CHECK(FieldElement::zero(f).sign() == 0);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        FieldElement a = random_element(f, rng);
        if (a.is_zero()) continue;
        CHECK(a.sign() * (-a).sign() == -1);
    }
    // sign agrees with rational comparison on constants
    CHECK(FieldElement::constant(f, Rational(Int(-3), Int(7))).sign() == -1);
}

TEST_CASE("exact floor of field values") {
    auto f = delta_field();
    FieldElement delta = FieldElement::generator(f);
    CHECK(delta.floor_int() == Int(3));
    CHECK(FieldElement::constant(f, Rational(Int(7), Int(2))).floor_int() == Int(3));
    // exact integer boundary: floor(delta^2 - 3 delta) = floor(1) = 1
    FieldElement one_exact = delta * delta - delta * Rational(3);
    CHECK(one_exact.floor_int() == Int(1));
    CHECK((-delta).floor_int() == Int(-4));

    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        FieldElement a = random_element(f, rng);
        Int n = a.floor_int();
        FieldElement fn = FieldElement::constant(f, Rational(n));
        FieldElement fn1 = FieldElement::constant(f, Rational(n + 1));
        CHECK((a - fn).sign() >= 0);
        CHECK((a - fn1).sign() < 0);
    }
}

TEST_CASE("embeddings and numeric consistency") {
    auto f = delta_field();
    const auto& embs = f->embeddings();
    REQUIRE(embs.size() == 2);
    CHECK(embs[0].is_identity);
    CHECK_FALSE(embs[1].is_identity);
    // conjugate is (3 - sqrt(13))/2 ~ -0.302776
    CHECK(std::abs(embs[1].conjugate.real() - (-0.30277563773199456)) < 1e-9);
    CHECK(std::abs(embs[1].conjugate.imag()) < 1e-12);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        FieldElement a = random_element(f, rng);
        FieldElement b = random_element(f, rng);
        for (const auto& e : embs) {
            auto lhs = embed(a * b, e);
            auto rhs = embed(a, e) * embed(b, e);
            CHECK(std::abs(lhs - rhs) < 1e-6);
            CHECK(std::abs(embed(a + b, e) - embed(a, e) - embed(b, e)) < 1e-9);
        }
        // identity embedding matches the exact enclosure
        auto iv = a.enclosure();
        double id = embed(a, embs[0]).real();
        CHECK(iv.lo.to_double() - 1e-9 <= id);
        CHECK(id <= iv.hi.to_double() + 1e-9);
    }
}

TEST_CASE("degree one fields behave as rationals") {
    auto f = NumberField::make(Polynomial::from_ints({-2, 1}),
                               Interval(Rational(1), Rational(3)));
    FieldElement g = FieldElement::generator(f);
    CHECK(g.is_rational());
    CHECK(g.as_rational() == Rational(2));
    CHECK(g.floor_int() == Int(2));
    CHECK(f->embeddings().size() == 1);
}
