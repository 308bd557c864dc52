#pragma once

#include <functional>
#include <stdexcept>

#include "beamplan/bigfloat.hpp"

// Central finite-difference oracles, evaluated in big-float precision so
// the truncation/roundoff balance leaves plenty of headroom below the
// tolerances they back.
namespace beamplan::testsupport {

using ScalarFn = std::function<BigFloat(const BigFloat&)>;

// Second-order central stencils for f^(m), m = 1..4.
inline BigFloat central_derivative(const ScalarFn& f, const BigFloat& x, int m,
                                   const BigFloat& h) {
    const BigFloat two(2.0, PrecisionContext(x.precision()));
    switch (m) {
        case 1:
            return (f(x + h) - f(x - h)) / (two * h);
        case 2:
            return (f(x + h) - two * f(x) + f(x - h)) / (h * h);
        case 3:
            return (f(x + two * h) - two * f(x + h) + two * f(x - h) - f(x - two * h)) /
                   (two * h * h * h);
        case 4: {
            const BigFloat four(4.0, PrecisionContext(x.precision()));
            const BigFloat six(6.0, PrecisionContext(x.precision()));
            return (f(x + two * h) - four * f(x + h) + six * f(x) - four * f(x - h) +
                    f(x - two * h)) /
                   (h * h * h * h);
        }
        default:
            throw std::invalid_argument("central_derivative: m must be 1..4");
    }
}

// Sixth-order central stencil for f''. The weights are built as exact
// ratios; rounded doubles would not sum to zero and the residue gets
// amplified by 1/h^2.
inline BigFloat central_second_derivative_o6(const ScalarFn& f, const BigFloat& x,
                                             const BigFloat& h) {
    const PrecisionContext ctx(x.precision());
    const long weight_num[] = {1, -3, 3, -49, 3, -3, 1};
    const long weight_den[] = {90, 20, 2, 18, 2, 20, 90};
    BigFloat sum(0.0, ctx);
    for (int offset = -3; offset <= 3; ++offset) {
        BigFloat xi = x + BigFloat(static_cast<long>(offset), ctx) * h;
        const BigFloat w =
            BigFloat(weight_num[offset + 3], ctx) / BigFloat(weight_den[offset + 3], ctx);
        sum += w * f(xi);
    }
    return sum / (h * h);
}

}  // namespace beamplan::testsupport
