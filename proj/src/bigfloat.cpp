#include "beamplan/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace beamplan {

std::string BigFloat::str(int digits) const {
    if (digits < 1) digits = 1;
    // %.*Rg keeps output independent of locale and precision-stable.
    const int needed = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v_);
    std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

}  // namespace beamplan
