#pragma once

#include <cstddef>
#include <vector>

#include "beamplan/bigfloat.hpp"

namespace beamplan {

// Truncated Taylor expansion of a scalar function at a point:
// coeffs[m] = f^(m)(center) / m!.  Propagated through elementary
// operations by classical convolution-type recurrences.
struct Jet {
    BigFloat center;
    std::vector<BigFloat> coeffs;

    std::size_t order() const { return coeffs.size() - 1; }

    static Jet constant(const BigFloat& center, const BigFloat& value, std::size_t order,
                        const PrecisionContext& ctx);
    static Jet zero(const BigFloat& center, std::size_t order, const PrecisionContext& ctx);

    // m-th derivative value: coeffs[m] * m!.
    BigFloat derivative(std::size_t m) const;

    bool all_finite() const;
};

// Inputs must share center and order (checked).
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_negate(const Jet& a);
Jet jet_scale(const Jet& a, const BigFloat& s);

// h = g^a via n g_0 h_n = sum_{j=1..n} (a j - (n - j)) g_j h_{n-j}.
// Requires g_0 > 0; throws std::domain_error otherwise.
Jet jet_real_power(const Jet& g, const BigFloat& a);

// h = exp(g) via n h_n = sum_{j=1..n} j g_j h_{n-j}.
Jet jet_exp(const Jet& g);

}  // namespace beamplan
