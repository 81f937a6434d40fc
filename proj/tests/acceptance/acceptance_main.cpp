// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "altbase/altbase.hpp"

using altbase::AlternateBase;
using altbase::DigitWord;
using altbase::ExpansionKind;
using altbase::FieldElement;
using altbase::Int;
using altbase::Interval;
using altbase::NumberField;
using altbase::Polynomial;
using altbase::Rational;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (error.empty()) {
        std::cout << "[PASS] criterion " << n << ": " << name << " (" << ms << " ms)\n";
    } else {
        ++failures;
        std::cout << "[FAIL] criterion " << n << ": " << name << " -- " << error << "\n";
    }
    std::cout.flush();
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(ALTBASE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

/// Finds the first Farey rational whose expansion starts with the given
/// digit prefix (the interval of words sharing that prefix).
Rational rational_with_prefix(const AlternateBase& base, const std::vector<altbase::Digit>& prefix,
                              std::int64_t qmax) {
    for (const Rational& x : altbase::farey_fractions(qmax)) {
        auto rep = greedy_expand(base, x, 4 * altbase::kDefaultCap);
        if (!rep.closed()) continue;
        bool match = true;
        for (size_t k = 0; k < prefix.size() && match; ++k)
            match = rep.word.digit_at(k) == prefix[k];
        if (match) return x;
    }
    throw std::runtime_error("no rational with the requested expansion prefix");
}

}  // namespace

int main() {
    criterion(1, "expand pp:2 3/4 = (1,0,0,0,0,1,1,0,0,2,0,0), byte exact, < 1 s", [] {
        auto start = std::chrono::steady_clock::now();
        auto [status, out] = run_cli("expand --base pp:2 --x 3/4");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        require(status == 0, "CLI exit status " + std::to_string(status));
        auto j = nlohmann::json::parse(out);
        require(j.at("payload").at("word") == "(1,0,0,0,0,1,1,0,0,2,0,0)",
                "wrong word: " + j.at("payload").at("word").get<std::string>());
        require(j.at("payload").at("kind") == "purely_periodic", "wrong kind");
        require(secs < 1.0, "took " + std::to_string(secs) + " s");
    });

    criterion(2, "single-base greedy over x^2-3x-1 at 3/4 = (2,1,1,2,3,0)^w", [] {
        auto base = altbase::single_base(NumberField::make(
            Polynomial::from_ints({-1, -3, 1}), Interval(Rational(3), Rational(4))));
        auto rep = greedy_expand(base, Rational(Int(3), Int(4)));
        require(rep.kind == ExpansionKind::PurelyPeriodic, "not purely periodic");
        require(rep.word == DigitWord({}, {2, 1, 1, 2, 3, 0}),
                "wrong word: " + rep.word.str());
    });

    criterion(3, "expansions of 1: d(1)=1,1  d2(1)=m,0,1  d*(1)=(1,0)  d2*(1)=m,0(0,1)",
              [] {
                  for (long m = 1; m <= 8; ++m) {
                      AlternateBase b = altbase::pp_family(m);
                      auto one = expansion_of_one(b);
                      require(one.kind == ExpansionKind::Finite &&
                                  one.word == DigitWord({1, 1}, {}),
                              "d(1) wrong for m=" + std::to_string(m));
                      auto one2 = expansion_of_one(b.shift(2));
                      require(one2.kind == ExpansionKind::Finite &&
                                  one2.word == DigitWord({m, 0, 1}, {}),
                              "shifted d(1) wrong for m=" + std::to_string(m));
                      auto star = quasi_greedy_one(b);
                      require(star.closed && star.word == DigitWord({}, {1, 0}),
                              "d*(1) wrong for m=" + std::to_string(m));
                      auto star2 = quasi_greedy_one(b.shift(2));
                      require(star2.closed && star2.word == DigitWord({m, 0}, {0, 1}),
                              "shifted d*(1) wrong for m=" + std::to_string(m));
                  }
              });

    criterion(4, "closed form of the shifted expansion of 1/2 for m = 1..8", [] {
        for (long m = 1; m <= 8; ++m) {
            auto rep = greedy_expand(altbase::pp_family(m).shift(2),
                                     Rational(Int(1), Int(2)));
            require(rep.closed(), "expansion did not close");
            require(rep.word == altbase::half_expansion_formula(m),
                    "mismatch at m=" + std::to_string(m) + ": got " + rep.word.str());
        }
    });

    criterion(5, "all p/q with q <= 40 are purely periodic in pp:1..3, identity checked",
              [] {
                  auto xs = altbase::farey_fractions(40);
                  for (long m : {1L, 2L, 3L}) {
                      AlternateBase b = altbase::pp_family(m);
                      for (const Rational& x : xs) {
                          auto rep = greedy_expand(b, x);
                          require(rep.kind == ExpansionKind::PurelyPeriodic,
                                  "not purely periodic at " + x.str() +
                                      " (m=" + std::to_string(m) + ")");
                          require(altbase::pure_periodic_identity_check(b, x, rep),
                                  "identity check failed at " + x.str());
                      }
                  }
              });

    criterion(6, "gamma scan of the shifted base: first failure in [0.39, 0.44]", [] {
        AlternateBase b = altbase::pp_family(2).shift(2);
        auto rep = altbase::gamma_scan(b, 200);
        require(rep.first_failure.has_value(), "no failure found");
        require(!rep.undecided_at.has_value(), "scan hit a truncated expansion");
        const Rational& x = rep.first_failure->first;
        require(x >= Rational(Int(39), Int(100)) && x <= Rational(Int(44), Int(100)),
                "first failure at " + x.str() + " ~ " + std::to_string(x.to_double()));
        auto half = greedy_expand(b, Rational(Int(1), Int(2)));
        require(half.closed() && half.kind != ExpansionKind::PurelyPeriodic,
                "1/2 should not be purely periodic");
    });

    criterion(7, "periodicity certificate for pp:2 on a generated pair", [] {
        AlternateBase b = altbase::pp_family(2);
        // rationals from the disjoint prefix intervals 1,0,... and 0,1,...
        Rational x1 = rational_with_prefix(b, {1, 0}, 40);
        Rational x2 = rational_with_prefix(b, {0, 1}, 40);
        auto cert = altbase::periodicity_certificate(b, {x1, x2});
        require(cert.matrix_kills_v, "matrix does not annihilate v");
        require(cert.det_vanishes_at_delta, "determinant does not vanish at delta");
        require(cert.det_nonzero_poly, "determinant is the zero polynomial");
    });

    criterion(8, "property suite on 500 random rationals across pp:1..3 and shifts", [] {
        std::mt19937_64 rng(20240901);
        std::uniform_int_distribution<long long> den(2, 60);
        int total = 0;
        while (total < 500) {
            for (long m : {1L, 2L, 3L}) {
                for (long shift = 1; shift <= 2; ++shift, ++total) {
                    AlternateBase base = altbase::pp_family(m).shift(shift);
                    long long q = den(rng);
                    long long p =
                        static_cast<long long>(rng() % static_cast<std::uint64_t>(q));
                    Rational x{Int(p), Int(q)};
                    auto rep = greedy_expand(base, x);
                    require(rep.closed(), "expansion did not close at " + x.str());
                    require(is_admissible(base, rep.word).verdict ==
                                altbase::AdmissibleVerdict::Admissible,
                            "greedy output not admissible at " + x.str());
                    require(value_of(base, rep.word) ==
                                FieldElement::constant(base.field(), x),
                            "value round trip failed at " + x.str());
                    if (shift == 1) {
                        auto rw = altbase::pp_rewrite(m, x, altbase::kDefaultCap, true);
                        require(rw.report.word == rep.word,
                                "rewrite disagrees with greedy at " + x.str());
                        // exact value preservation after every rewrite step
                        FieldElement expect = FieldElement::constant(base.field(), x);
                        FieldElement beta2 = base.beta(1);
                        FieldElement delta = base.delta();
                        FieldElement one = FieldElement::constant(base.field(), Rational(1));
                        for (const auto& step : rw.trace) {
                            FieldElement acc = FieldElement::zero(base.field());
                            size_t s = step.blocks.size();
                            for (size_t k = 0; k < s; ++k) {
                                FieldElement digit =
                                    beta2 * Rational((long long)step.blocks[k].a) +
                                    FieldElement::constant(
                                        base.field(), Rational((long long)step.blocks[k].b));
                                acc += digit * delta.pow(s - 1 - k);
                            }
                            require((acc / (delta.pow(s) - one)) == expect,
                                    "rewrite step changed the value at " + x.str());
                        }
                    }
                }
            }
        }
    });

    criterion(9, "classification: pp minimal polynomials are Pisot units; Salem quartic",
              [] {
                  for (long m = 1; m <= 10; ++m) {
                      auto c = altbase::classify_delta(
                          Polynomial::from_ints({-1, -(m + 1), 1}),
                          Interval(Rational(m + 1), Rational(m + 2)));
                      require(c.is_algebraic_integer && c.is_unit,
                              "unit test failed for m=" + std::to_string(m));
                      require(c.kind == altbase::DeltaKind::Pisot, "not Pisot");
                      for (const auto& info : c.conjugates)
                          if (!info.is_identity)
                              require(info.modulus <= 0.8,
                                      "conjugate margin below 0.2 at m=" +
                                          std::to_string(m));
                  }
                  auto salem = altbase::classify_delta(
                      Polynomial::from_ints({1, -1, -1, -1, 1}),
                      Interval(Rational(1), Rational(2)));
                  require(salem.kind == altbase::DeltaKind::Salem, "not Salem");
                  require(salem.self_reciprocal, "reciprocity certificate missing");
                  bool on_circle = false;
                  for (const auto& info : salem.conjugates)
                      if (!info.is_identity && info.in_band) on_circle = true;
                  require(on_circle, "no conjugate on the unit circle");
              });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
