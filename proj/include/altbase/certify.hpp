#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "altbase/admissibility.hpp"
#include "altbase/expansion.hpp"
#include "altbase/numeric_roots.hpp"

namespace altbase {

/// Numeric band half-width around |conjugate| = 1 inside which floating
/// point cannot distinguish on-circle from near-circle conjugates.
inline constexpr double kModulusBand = 1e-8;

enum class DeltaKind { Pisot, Salem, Neither, Borderline };

inline const char* to_string(DeltaKind k) {
    switch (k) {
        case DeltaKind::Pisot: return "pisot";
        case DeltaKind::Salem: return "salem";
        case DeltaKind::Neither: return "neither";
        case DeltaKind::Borderline: return "borderline";
    }
    return "?";
}

struct ConjugateInfo {
    std::complex<double> root;
    double modulus = 0.0;
    bool in_band = false;  // | |root| - 1 | <= kModulusBand
    bool is_identity = false;
};

struct AlgebraicClassification {
    bool is_algebraic_integer = false;
    bool is_unit = false;
    DeltaKind kind = DeltaKind::Neither;
    bool self_reciprocal = false;  // exact palindromic-coefficients certificate
    int degree = 0;
    std::vector<ConjugateInfo> conjugates;  // identity first
};

/// Classifies the designated root > 1 of a squarefree integer polynomial.
/// Algebraic-integer and unit tests are exact integer tests on the primitive
/// polynomial; the Pisot/Salem verdict uses numeric conjugate moduli with a
/// tolerance band, and Salem is asserted only together with the exact
/// self-reciprocity certificate.
inline AlgebraicClassification classify_delta(const Polynomial& minpoly,
                                              const Interval& isolator) {
    auto field = NumberField::make(minpoly, isolator);  // NotSquarefree / NoRootAboveOne
    const Polynomial& p = field->minpoly();
    const int n = p.degree();

    AlgebraicClassification out;
    out.degree = n;
    out.is_algebraic_integer = p.leading() == Rational(1) || p.leading() == Rational(-1);
    Rational c0 = p.coeff(0);
    out.is_unit = out.is_algebraic_integer && (c0 == Rational(1) || c0 == Rational(-1));

    out.self_reciprocal = true;
    for (int i = 0; i <= n; ++i)
        if (!(p.coeff(static_cast<size_t>(i)) == p.coeff(static_cast<size_t>(n - i))))
            out.self_reciprocal = false;

    const auto& embs = field->embeddings();
    bool any_outside = false, any_in_band = false, all_inside = true;
    for (const auto& e : embs) {
        ConjugateInfo info;
        info.root = e.conjugate;
        info.modulus = std::abs(e.conjugate);
        info.in_band = std::abs(info.modulus - 1.0) <= kModulusBand;
        info.is_identity = e.is_identity;
        if (!e.is_identity) {
            if (info.modulus > 1.0 + kModulusBand) any_outside = true;
            if (info.in_band) any_in_band = true;
            if (info.modulus >= 1.0 - kModulusBand) all_inside = false;
        }
        out.conjugates.push_back(info);
    }

    if (any_outside) {
        out.kind = DeltaKind::Neither;
    } else if (any_in_band) {
        bool salem_certificate = out.self_reciprocal && out.is_algebraic_integer &&
                                 n % 2 == 0 && n >= 4;
        out.kind = salem_certificate ? DeltaKind::Salem : DeltaKind::Borderline;
    } else if (all_inside) {
        out.kind = out.is_algebraic_integer ? DeltaKind::Pisot : DeltaKind::Neither;
    } else {
        out.kind = DeltaKind::Borderline;
    }
    return out;
}

enum class PositivityVerdict { AllPositive, NotAllPositive, NoVerdict };

inline const char* to_string(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::AllPositive: return "all_positive";
        case PositivityVerdict::NotAllPositive: return "not_all_positive";
        case PositivityVerdict::NoVerdict: return "no_verdict";
    }
    return "?";
}

struct EmbeddingPositivity {
    Embedding embedding;
    std::vector<std::complex<double>> images;  // (psi(beta_1), ..., psi(beta_p))
    PositivityVerdict verdict = PositivityVerdict::NoVerdict;
    std::vector<bool> band_flags;  // |image| too close to 0 to trust its sign
};

/// The vector (psi(beta_1), ..., psi(beta_p)) for every embedding psi.
/// Real embeddings get an all_positive / not_all_positive verdict; complex
/// ones are reported without a verdict (positivity is a real condition).
inline std::vector<EmbeddingPositivity> positivity_report(const AlternateBase& base) {
    std::vector<EmbeddingPositivity> out;
    for (const auto& e : base.field()->embeddings()) {
        EmbeddingPositivity row;
        row.embedding = e;
        bool all_pos = true;
        for (const auto& beta : base.betas()) {
            std::complex<double> img = embed(beta, e);
            double scale = 1.0 + std::abs(img);
            row.band_flags.push_back(std::abs(img) <= kModulusBand * scale);
            if (img.real() <= 0.0) all_pos = false;
            row.images.push_back(img);
        }
        row.verdict = e.is_real()
                          ? (all_pos ? PositivityVerdict::AllPositive
                                     : PositivityVerdict::NotAllPositive)
                          : PositivityVerdict::NoVerdict;
        out.push_back(std::move(row));
    }
    return out;
}

struct PeriodicityCertificate {
    struct Input {
        Rational x;
        ExpansionReport report;
    };
    std::vector<Input> inputs;
    std::int64_t r = 0;  // common preperiod length in delta-blocks
    std::int64_t s = 0;  // common period length in delta-blocks
    std::vector<std::vector<Polynomial>> matrix;  // p x p, entries in Z[X]
    Polynomial detpoly;

    bool matrix_kills_v = false;        // M(delta) . v == 0, exact
    bool det_vanishes_at_delta = false; // detpoly(delta) == 0, exact
    bool det_nonzero_poly = false;      // detpoly != 0 as a polynomial
    bool rank_p_minus_1 = false;        // numeric rank of M(delta) == p - 1
    bool leading_minor_nonzero = false; // exact rank >= p-1 witness
    int numeric_rank = 0;
};

namespace detail {

/// Pads p expansions to a common preperiod r and period s (block counts):
/// r = max of preperiods, s = lcm of periods, both in delta-blocks.
/// Returns per-word flat digit vectors of length p*(r+s).
inline std::vector<std::vector<Digit>> common_padding(const AlternateBase& base,
                                                      const std::vector<ExpansionReport>& reps,
                                                      std::int64_t& r_out,
                                                      std::int64_t& s_out) {
    const size_t p = base.period();
    size_t r = 0, s = 1;
    std::vector<std::pair<std::vector<Digit>, std::vector<Digit>>> aligned;
    for (const auto& rep : reps) {
        auto pr = block_aligned(rep.word, p);
        if (pr.second.empty()) pr.second.assign(p, 0);  // finite: period one zero block
        r = std::max(r, pr.first.size() / p);
        s = std::lcm(s, pr.second.size() / p);
        aligned.push_back(std::move(pr));
    }
    std::vector<std::vector<Digit>> out;
    for (auto& [pre, per] : aligned) {
        std::vector<Digit> digits = pre;
        size_t have = pre.size() / p;
        // extend the preperiod with period digits, rotating the period
        size_t need = (r - have) * p;
        for (size_t i = 0; i < need; ++i) digits.push_back(per[i % per.size()]);
        size_t rot = need % per.size();
        std::vector<Digit> rper(per.begin() + static_cast<long>(rot), per.end());
        rper.insert(rper.end(), per.begin(), per.begin() + static_cast<long>(rot));
        while (digits.size() < (r + s) * p)
            digits.insert(digits.end(), rper.begin(), rper.end());
        digits.resize((r + s) * p);
        out.push_back(std::move(digits));
    }
    r_out = static_cast<std::int64_t>(r);
    s_out = static_cast<std::int64_t>(s);
    return out;
}

inline Polynomial det_poly_matrix(const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    if (n == 1) return m[0][0];
    Polynomial det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_poly_matrix(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace detail

/// Builds the p x p certificate matrix from the expansions of p rationals
/// x_j = p_j / q_j: entry (j, i) is q_j h_i^(j)(X), except the last column
/// which is q_j h_p^(j)(X) - p_j X^r (X^s - 1), where
/// h = (X^s - 1) g + f collects the preperiod (g) and period (f) digits at
/// block position i. By construction M(delta) annihilates the weight vector
/// v; a nonzero determinant polynomial vanishing at delta witnesses that
/// delta is algebraic, and rank p-1 that the betas lie in Q(delta).
inline PeriodicityCertificate periodicity_certificate(const AlternateBase& base,
                                                      const std::vector<Rational>& xs,
                                                      std::int64_t cap = kDefaultCap) {
    const size_t p = base.period();
    if (xs.size() != p)
        throw MalformedConfigError("need exactly p rationals for the certificate");

    PeriodicityCertificate cert;
    std::vector<ExpansionReport> reps;
    for (size_t j = 0; j < p; ++j) {
        if (xs[j].sign() < 0 || xs[j] >= Rational(1))
            throw OutOfRangeError("certificate rationals must lie in [0, 1)");
        ExpansionReport rep = greedy_expand(base, xs[j], cap);
        if (!rep.closed())
            throw ExpansionDidNotCloseError("expansion of x_" + std::to_string(j + 1) +
                                            " did not close within the cap");
        cert.inputs.push_back({xs[j], rep});
        reps.push_back(std::move(rep));
    }

    auto digits = detail::common_padding(base, reps, cert.r, cert.s);
    const size_t r = static_cast<size_t>(cert.r);
    const size_t s = static_cast<size_t>(cert.s);

    // X^s - 1 and X^r (X^s - 1)
    Polynomial xs1 = Polynomial::monomial(s, Rational(1)) - Polynomial::constant(1);
    Polynomial shift_rs = Polynomial::monomial(r, Rational(1)) * xs1;

    cert.matrix.assign(p, std::vector<Polynomial>(p));
    for (size_t j = 0; j < p; ++j) {
        Rational qj(xs[j].den());
        Rational pj(xs[j].num());
        for (size_t i = 0; i < p; ++i) {
            Polynomial g, f;
            for (size_t k = 1; k <= r; ++k) {
                Digit d = digits[j][(k - 1) * p + i];
                if (d != 0) g = g + Polynomial::monomial(r - k, Rational((long long)d));
            }
            for (size_t k = r + 1; k <= r + s; ++k) {
                Digit d = digits[j][(k - 1) * p + i];
                if (d != 0) f = f + Polynomial::monomial(r + s - k, Rational((long long)d));
            }
            Polynomial h = xs1 * g + f;
            cert.matrix[j][i] = h * qj;
            if (i == p - 1) cert.matrix[j][i] = cert.matrix[j][i] - shift_rs * pj;
        }
    }

    cert.detpoly = detail::det_poly_matrix(cert.matrix);
    cert.det_nonzero_poly = !cert.detpoly.is_zero();

    // exact checks in Q(delta)
    auto field = base.field();
    auto at_delta = [&](const Polynomial& q) {
        return FieldElement::from_polynomial(field, q);
    };
    std::vector<FieldElement> v = base.digit_vector();
    cert.matrix_kills_v = true;
    for (size_t j = 0; j < p; ++j) {
        FieldElement acc = FieldElement::zero(field);
        for (size_t i = 0; i < p; ++i) acc += at_delta(cert.matrix[j][i]) * v[i];
        if (!acc.is_zero()) cert.matrix_kills_v = false;
    }
    cert.det_vanishes_at_delta = at_delta(cert.detpoly).is_zero();

    if (!cert.det_nonzero_poly)
        throw DegenerateChoiceError(
            "determinant polynomial is identically zero; pick different rationals");

    // numeric rank of M(delta) with a threshold scaled by the entry
    // magnitudes before cancellation
    double delta_num = field->root_approx();
    double scale = 0.0;
    Eigen::MatrixXd md(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (size_t j = 0; j < p; ++j)
        for (size_t i = 0; i < p; ++i) {
            const Polynomial& q = cert.matrix[j][i];
            double mag = 0.0;
            for (int k = 0; k <= q.degree(); ++k)
                mag += std::abs(q.coeff(static_cast<size_t>(k)).to_double()) *
                       std::pow(std::abs(delta_num), k);
            scale = std::max(scale, mag);
            md(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
                q.eval(delta_num);
        }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(md);
    double tau = 1e-8 * std::max(scale, 1.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tau) ++rank;
    cert.numeric_rank = rank;
    cert.rank_p_minus_1 = rank == static_cast<int>(p) - 1;

    // exact cross-check: a nonsingular leading (p-1)x(p-1) minor plus the
    // vanishing determinant pin the rank at exactly p-1
    if (p == 1) {
        cert.leading_minor_nonzero = true;  // empty minor
    } else {
        std::vector<std::vector<Polynomial>> minor(p - 1, std::vector<Polynomial>(p - 1));
        for (size_t j = 0; j + 1 < p; ++j)
            for (size_t i = 0; i + 1 < p; ++i) minor[j][i] = cert.matrix[j][i];
        Polynomial mdet = detail::det_poly_matrix(minor);
        cert.leading_minor_nonzero = !at_delta(mdet).is_zero();
    }
    return cert;
}

/// Verifies the purely periodic value identity
/// x (delta^s - 1) = (f_1(delta), ..., f_p(delta)) . v exactly in Q(delta).
/// The zero word counts as one all-zero block.
inline bool pure_periodic_identity_check(const AlternateBase& base, const Rational& x,
                                         const ExpansionReport& report) {
    const size_t p = base.period();
    std::vector<Digit> period;
    if (report.kind == ExpansionKind::PurelyPeriodic) {
        auto [pre, per] = detail::block_aligned(report.word, p);
        if (!pre.empty())
            throw NotPurelyPeriodicError("purely periodic report has a preperiod");
        period = std::move(per);
    } else if (report.kind == ExpansionKind::Finite && report.word.is_zero_word() &&
               x.is_zero()) {
        period.assign(p, 0);
    } else {
        throw NotPurelyPeriodicError("report is not purely periodic");
    }
    const size_t s = period.size() / p;
    auto field = base.field();
    std::vector<FieldElement> v = base.digit_vector();
    FieldElement rhs = FieldElement::zero(field);
    const FieldElement delta = base.delta();
    for (size_t i = 0; i < p; ++i) {
        // f_i(delta) = sum_k digit(p(k-1)+i) delta^(s-k)
        FieldElement fi = FieldElement::zero(field);
        for (size_t k = 1; k <= s; ++k) {
            Digit d = period[(k - 1) * p + i];
            if (d != 0) fi += delta.pow(s - k) * Rational((long long)d);
        }
        rhs += fi * v[i];
    }
    FieldElement one = FieldElement::constant(field, Rational(1));
    FieldElement lhs = FieldElement::constant(field, x) * (delta.pow(s) - one);
    return (lhs - rhs).is_zero();
}

struct FinitenessSampleReport {
    std::int64_t samples_requested = 0;
    std::int64_t pairs_tested = 0;
    std::int64_t undecided = 0;
    std::int64_t pool_size = 0;
    struct Violation {
        FieldElement x, y;
        DigitWord word_x, word_y;
        bool subtraction = false;
        ExpansionReport result_report;
    };
    std::vector<Violation> violations;
};

/// Empirical probe of the finiteness property: samples pairs from a pool of
/// values with finite expansions (built from random admissible finite words)
/// and expands x + y and x - y whenever they land in [0, 1). Counterexamples
/// are reported; absence of violations is evidence, never a proof.
inline FinitenessSampleReport finiteness_sample_check(const AlternateBase& base,
                                                      std::int64_t samples,
                                                      std::int64_t cap = kDefaultCap,
                                                      std::uint64_t seed = 0x5eed) {
    FinitenessSampleReport rep;
    rep.samples_requested = samples;
    if (samples <= 0) return rep;

    std::mt19937_64 rng(seed);
    const size_t p = base.period();
    std::vector<Digit> bounds(p);
    for (size_t i = 0; i < p; ++i) bounds[i] = base.digit_bound(i);

    // pool of finite admissible words (hence values in Fin)
    std::vector<std::pair<FieldElement, DigitWord>> pool;
    const size_t target_pool = static_cast<size_t>(std::min<std::int64_t>(
        std::max<std::int64_t>(8, samples / 4), 64));
    std::uniform_int_distribution<size_t> len_dist(1, 3 * p);
    for (int tries = 0; tries < 4000 && pool.size() < target_pool; ++tries) {
        size_t len = len_dist(rng);
        std::vector<Digit> digits(len);
        for (size_t i = 0; i < len; ++i)
            digits[i] = static_cast<Digit>(rng() % static_cast<std::uint64_t>(bounds[i % p]));
        DigitWord w(std::move(digits), {});
        if (w.is_zero_word()) continue;
        if (is_admissible(base, w, cap).verdict != AdmissibleVerdict::Admissible) continue;
        FieldElement val = value_of(base, w);
        bool dup = false;
        for (const auto& [v0, w0] : pool) dup = dup || (v0 - val).is_zero();
        if (!dup) pool.emplace_back(std::move(val), std::move(w));
    }
    rep.pool_size = static_cast<std::int64_t>(pool.size());
    if (pool.empty()) return rep;

    FieldElement one = FieldElement::constant(base.field(), Rational(1));
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (std::int64_t n = 0; n < samples; ++n) {
        const auto& [x, wx] = pool[pick(rng)];
        const auto& [y, wy] = pool[pick(rng)];
        for (bool subtraction : {false, true}) {
            FieldElement z = subtraction ? x - y : x + y;
            if (z.sign() < 0 || (z - one).sign() >= 0) continue;
            ++rep.pairs_tested;
            ExpansionReport zrep = greedy_expand(base, z, cap);
            if (zrep.kind == ExpansionKind::Truncated) {
                ++rep.undecided;
            } else if (zrep.kind != ExpansionKind::Finite) {
                rep.violations.push_back({x, y, wx, wy, subtraction, std::move(zrep)});
            }
        }
    }
    return rep;
}

}  // namespace altbase
