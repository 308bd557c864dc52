#pragma once

#include <vector>

#include "beamplan/bigfloat.hpp"
#include "beamplan/rational.hpp"

// Independent derivative oracle for sigma = 1: with psi = -1/(tau(1-tau))
// the jet of psi at a rational point is exact (polynomial reciprocal in
// rational arithmetic), and phi = exp(psi) follows from the first-order
// relation phi' = psi' phi without touching the power recurrence under test.
namespace beamplan::testsupport {

// Jet of psi(tau) = -1/(tau(1-tau)) at tau0, exact.
inline std::vector<Rational> psi_rational_jet(const Rational& tau0, std::size_t M) {
    // u = tau (1 - tau): [u0, 1 - 2 tau0, -1, 0, ...]
    std::vector<Rational> u(M + 1, Rational(0));
    u[0] = tau0 * (Rational(1) - tau0);
    if (M >= 1) u[1] = Rational(1) - 2 * tau0;
    if (M >= 2) u[2] = Rational(-1);

    // r = 1/u by the reciprocal recurrence r_n = -(1/u0) sum_{j>=1} u_j r_{n-j}
    std::vector<Rational> r(M + 1, Rational(0));
    r[0] = 1 / u[0];
    for (std::size_t n = 1; n <= M; ++n) {
        Rational s(0);
        for (std::size_t j = 1; j <= std::min<std::size_t>(n, 2); ++j) s += u[j] * r[n - j];
        r[n] = -s / u[0];
    }
    for (auto& v : r) v = -v;
    return r;
}

// Taylor coefficients of phi_1 at tau0 via n phi_n = sum_m psi'_m phi_{n-1-m}.
inline std::vector<BigFloat> phi1_oracle_jet(const Rational& tau0, std::size_t M,
                                             const PrecisionContext& ctx) {
    const auto psi = psi_rational_jet(tau0, M + 1);
    // psi'_m = (m+1) psi_{m+1}, still exact
    std::vector<BigFloat> dpsi;
    dpsi.reserve(M + 1);
    for (std::size_t m = 0; m <= M; ++m)
        dpsi.emplace_back(Rational(Rational(static_cast<long>(m + 1)) * psi[m + 1]), ctx);

    std::vector<BigFloat> phi(M + 1, BigFloat(ctx));
    phi[0] = exp(BigFloat(psi[0], ctx));
    for (std::size_t n = 1; n <= M; ++n) {
        BigFloat s(0.0, ctx);
        for (std::size_t m = 0; m < n; ++m) s += dpsi[m] * phi[n - 1 - m];
        s.div_si(static_cast<long>(n));
        phi[n] = s;
    }
    return phi;
}

}  // namespace beamplan::testsupport
