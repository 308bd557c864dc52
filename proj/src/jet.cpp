#include "beamplan/jet.hpp"

#include <stdexcept>

namespace beamplan {

namespace {
void require_compatible(const Jet& a, const Jet& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("jet arithmetic: order mismatch");
    if (a.center != b.center)
        throw std::invalid_argument("jet arithmetic: expansion points differ");
}
}  // namespace

Jet Jet::constant(const BigFloat& center, const BigFloat& value, std::size_t order,
                  const PrecisionContext& ctx) {
    Jet j;
    j.center = center;
    j.coeffs.assign(order + 1, BigFloat(ctx));
    j.coeffs[0] = value;
    return j;
}

Jet Jet::zero(const BigFloat& center, std::size_t order, const PrecisionContext& ctx) {
    Jet j;
    j.center = center;
    j.coeffs.assign(order + 1, BigFloat(ctx));
    return j;
}

BigFloat Jet::derivative(std::size_t m) const {
    BigFloat d = coeffs.at(m);
    for (std::size_t i = 2; i <= m; ++i) d.mul_si(static_cast<long>(i));
    return d;
}

bool Jet::all_finite() const {
    for (const auto& c : coeffs)
        if (!c.is_finite()) return false;
    return true;
}

Jet jet_add(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    Jet r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    Jet r = a;
    for (std::size_t n = 0; n < r.coeffs.size(); ++n) {
        BigFloat s = a.coeffs[0] * b.coeffs[n];
        for (std::size_t j = 1; j <= n; ++j) s += a.coeffs[j] * b.coeffs[n - j];
        r.coeffs[n] = s;
    }
    return r;
}

Jet jet_negate(const Jet& a) {
    Jet r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

Jet jet_scale(const Jet& a, const BigFloat& s) {
    Jet r = a;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

Jet jet_real_power(const Jet& g, const BigFloat& a) {
    if (g.coeffs[0].sign() <= 0)
        throw std::domain_error("jet_real_power: constant term must be positive");
    Jet h = g;
    h.coeffs[0] = pow(g.coeffs[0], a);
    const std::size_t M = g.order();
    for (std::size_t n = 1; n <= M; ++n) {
        BigFloat s = BigFloat(0.0, PrecisionContext(g.coeffs[0].precision()));
        for (std::size_t j = 1; j <= n; ++j) {
            // weight = a*j - (n - j)
            BigFloat w = a;
            w.mul_si(static_cast<long>(j));
            w -= BigFloat(static_cast<long>(n - j), PrecisionContext(w.precision()));
            s += w * g.coeffs[j] * h.coeffs[n - j];
        }
        s /= g.coeffs[0];
        s.div_si(static_cast<long>(n));
        h.coeffs[n] = s;
    }
    return h;
}

Jet jet_exp(const Jet& g) {
    Jet h = g;
    h.coeffs[0] = exp(g.coeffs[0]);
    const std::size_t M = g.order();
    for (std::size_t n = 1; n <= M; ++n) {
        BigFloat s = BigFloat(0.0, PrecisionContext(g.coeffs[0].precision()));
        for (std::size_t j = 1; j <= n; ++j) {
            BigFloat term = g.coeffs[j] * h.coeffs[n - j];
            term.mul_si(static_cast<long>(j));
            s += term;
        }
        s.div_si(static_cast<long>(n));
        h.coeffs[n] = s;
    }
    return h;
}

}  // namespace beamplan
