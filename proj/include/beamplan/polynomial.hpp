#pragma once

#include <map>

#include "beamplan/rational.hpp"

namespace beamplan {

// Polynomial in the spatial variable z with exact rational coefficients,
// stored sparsely as power -> coefficient (zero coefficients dropped).
class SpatialPolynomial {
public:
    SpatialPolynomial() = default;

    void set(unsigned power, const Rational& coeff) {
        if (coeff == 0)
            coeffs_.erase(power);
        else
            coeffs_[power] = coeff;
    }

    void add(unsigned power, const Rational& coeff) {
        auto it = coeffs_.find(power);
        if (it == coeffs_.end()) {
            set(power, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Rational coeff(unsigned power) const {
        auto it = coeffs_.find(power);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return coeffs_.empty(); }

    Rational evaluate(const Rational& z) const {
        Rational sum(0);
        for (const auto& [p, c] : coeffs_) {
            Rational zp(1);
            for (unsigned i = 0; i < p; ++i) zp *= z;
            sum += c * zp;
        }
        return sum;
    }

    SpatialPolynomial derivative() const {
        SpatialPolynomial d;
        for (const auto& [p, c] : coeffs_)
            if (p > 0) d.set(p - 1, c * Rational(p));
        return d;
    }

    SpatialPolynomial derivative(unsigned order) const {
        SpatialPolynomial d = *this;
        for (unsigned i = 0; i < order; ++i) d = d.derivative();
        return d;
    }

    SpatialPolynomial operator+(const SpatialPolynomial& other) const {
        SpatialPolynomial s = *this;
        for (const auto& [p, c] : other.coeffs_) s.add(p, c);
        return s;
    }

    SpatialPolynomial operator*(const Rational& scale) const {
        SpatialPolynomial s;
        for (const auto& [p, c] : coeffs_) s.set(p, c * scale);
        return s;
    }

    bool operator==(const SpatialPolynomial& other) const { return coeffs_ == other.coeffs_; }

    const std::map<unsigned, Rational>& terms() const { return coeffs_; }

private:
    std::map<unsigned, Rational> coeffs_;
};

}  // namespace beamplan
