#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "altbase/polynomial.hpp"

namespace altbase {

/// All complex roots of p in double precision via Aberth-Ehrlich simultaneous
/// iteration, polished with Newton steps. Accepts a root z only when
/// |p(z)| <= 1e-10 * (1 + |z|)^deg; otherwise throws RootFindingFailedError.
inline std::vector<std::complex<double>> numeric_roots(const Polynomial& poly) {
    using cd = std::complex<double>;
    if (poly.is_zero()) throw ZeroPolynomialError("numeric roots of 0");
    const int n = poly.degree();
    if (n == 0) return {};

    std::vector<cd> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = cd(poly.coeff(static_cast<size_t>(i)).to_double(), 0.0);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] /= c[static_cast<size_t>(n)];

    auto eval = [&](cd z, cd* deriv) {
        cd acc(0.0), dacc(0.0);
        for (int i = n; i >= 0; --i) {
            dacc = dacc * z + acc;
            acc = acc * z + c[static_cast<size_t>(i)];
        }
        if (deriv) *deriv = dacc;
        return acc;
    };

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<size_t>(i)]));
    radius = 1.0 + radius;

    const double pi = 3.14159265358979323846;
    std::vector<cd> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double angle = 2.0 * pi * (i + 0.354) / n + 0.7;
        z[static_cast<size_t>(i)] = std::polar(radius * 0.8, angle);
    }

    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            cd d;
            cd v = eval(z[static_cast<size_t>(i)], &d);
            if (std::abs(v) == 0.0) continue;
            cd newton = (d != cd(0.0)) ? v / d : cd(1e-3, 1e-3);
            cd sum(0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += cd(1.0) / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            cd denom = cd(1.0) - newton * sum;
            cd step = (denom != cd(0.0)) ? newton / denom : newton;
            z[static_cast<size_t>(i)] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15 * (1.0 + radius)) break;
    }

    // Newton polish against the original (unnormalized) coefficients.
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < 8; ++k) {
            cd d;
            cd v = eval(z[static_cast<size_t>(i)], &d);
            if (std::abs(d) == 0.0) break;
            cd step = v / d;
            z[static_cast<size_t>(i)] -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(z[static_cast<size_t>(i)]))) break;
        }
        // Snap near-real roots onto the real axis when that does not hurt
        // the residual; keeps conjugate bookkeeping clean downstream.
        cd zi = z[static_cast<size_t>(i)];
        if (std::abs(zi.imag()) < 1e-9 * (1.0 + std::abs(zi.real()))) {
            cd snapped(zi.real(), 0.0);
            if (std::abs(eval(snapped, nullptr)) <= 2.0 * std::abs(eval(zi, nullptr)) + 1e-300)
                z[static_cast<size_t>(i)] = snapped;
        }
    }

    for (int i = 0; i < n; ++i) {
        double zi = std::abs(z[static_cast<size_t>(i)]);
        double tol = 1e-10 * std::pow(1.0 + zi, n);
        if (std::abs(poly.eval(z[static_cast<size_t>(i)])) > tol * std::abs(poly.leading().to_double()))
            throw RootFindingFailedError("Aberth iteration did not converge to tolerance");
    }
    return z;
}

}  // namespace altbase
