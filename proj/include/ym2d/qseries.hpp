#pragma once

// Scalar special functions used by the large-rank limits and the planar /
// sphere master-field formulas: Jacobi theta, Euler phi, and the Bessel-type
// series J1 in the normalization where J1(0) = 1.

#include <cmath>
#include <stdexcept>

#include "ym2d/weights.hpp"

namespace ym2d {

// A numeric value together with a rigorous bound on the truncation error.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

// q_T = exp(-T/2)
inline double q_of_area(double T) {
    if (!(T > 0.0)) throw std::invalid_argument("q_of_area: area T must be > 0");
    return std::exp(-T / 2.0);
}

// theta(q) = sum_{n in Z} q^{n^2}. Tail after n = N is bounded by the
// geometric series 2 q^{(N+1)^2} / (1 - q^{2N+3}).
inline SeriesValue jacobi_theta(double q, double tol = 1e-14) {
    if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("jacobi_theta: need 0 <= q < 1");
    if (!(tol > 0.0)) throw std::invalid_argument("jacobi_theta: tol must be > 0");
    double s = 1.0;
    double tail = q < 1e-300 ? 0.0 : 1.0;
    for (int n = 1; n < 10000; ++n) {
        const double t = std::pow(q, double(n) * n);
        s += 2.0 * t;
        const double ratio = std::pow(q, 2.0 * n + 3.0);
        tail = 2.0 * std::pow(q, double(n + 1) * (n + 1)) / (1.0 - ratio);
        if (tail <= tol) break;
    }
    return {s, tail};
}

// phi(q) = prod_{m >= 1} (1 - q^m). The omitted factors multiply the result
// by prod_{m > M} (1 - q^m) in [1 - S, 1] with S = q^{M+1}/(1-q), so the
// truncation error is at most value * S / (1 - S).
inline SeriesValue euler_phi(double q, double tol = 1e-14) {
    if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("euler_phi: need 0 <= q < 1");
    if (!(tol > 0.0)) throw std::invalid_argument("euler_phi: tol must be > 0");
    double prod = 1.0;
    double tail = q;
    for (int m = 1; m < 100000; ++m) {
        prod *= (1.0 - std::pow(q, double(m)));
        const double S = std::pow(q, double(m + 1)) / (1.0 - q);
        if (S < 0.5) {
            tail = prod * S / (1.0 - S);
            if (tail <= tol) break;
        }
    }
    return {prod, tail};
}

// J1(x) = sum_{m>=0} (-1)^m / (m! (m+1)!) (x/2)^{2m}.
// This is the normalization with J1(0) = 1 used by the sphere master field;
// it differs from the standard Bessel J_1 by a factor 2/x.
inline SeriesValue bessel_j1_paper(double x, double tol = 1e-14) {
    if (!(tol > 0.0)) throw std::invalid_argument("bessel_j1_paper: tol must be > 0");
    if (!std::isfinite(x)) throw std::invalid_argument("bessel_j1_paper: x must be finite");
    const double y = (x / 2.0) * (x / 2.0);
    double term = 1.0, s = 1.0;
    for (int m = 0; m < 10000; ++m) {
        const double next = -term * y / (double(m + 1) * double(m + 2));
        s += next;
        term = next;
        // alternating series: once |terms| decrease, the error is bounded by
        // the first omitted term
        const double omitted = std::fabs(term) * y / (double(m + 2) * double(m + 3));
        if (omitted < std::fabs(term) && omitted <= tol) return {s, omitted};
    }
    return {s, std::fabs(term)};
}

// Large-rank limit of the torus / genus-g partition function, per family.
// g = 1:  A~ -> theta(q)/phi(q)^2,  A -> 1/phi(q)^2,  B, C, D -> 1/phi(q).
// g >= 2: A~ -> theta(q), all others -> 1.
//
// Note on D: the source table lists (1+q)/((1-q)^2 phi(q)) for D at g = 1,
// but the Casimir data force the same 1/phi(q) limit as for B and C (weights
// with nonzero last coordinate need a full-length ladder whose Casimir grows
// linearly in the rank, so they cannot survive the limit). Numerics confirm
// Z_{1,T,D_r} -> 1/phi(q_T).
inline double limit_table(Family family, int g, double T, double tol = 1e-12) {
    if (g < 1) throw std::invalid_argument("limit_table: requires genus g >= 1");
    const double q = q_of_area(T);
    if (g >= 2) {
        if (family == Family::UnitaryTilde) return jacobi_theta(q, tol).value;
        return 1.0;
    }
    const double phi = euler_phi(q, tol).value;
    switch (family) {
        case Family::UnitaryTilde: return jacobi_theta(q, tol).value / (phi * phi);
        case Family::SpecialUnitary: return 1.0 / (phi * phi);
        case Family::OddOrthogonal:
        case Family::Symplectic:
        case Family::EvenOrthogonal: return 1.0 / phi;
    }
    throw std::logic_error("limit_table: unreachable");
}

}  // namespace ym2d
