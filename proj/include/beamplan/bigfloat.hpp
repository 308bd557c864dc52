#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "beamplan/rational.hpp"

namespace beamplan {

// Precision of all big-float arithmetic, in mantissa bits.
struct PrecisionContext {
    long mantissa_bits = 512;

    explicit PrecisionContext(long bits = 512) : mantissa_bits(bits) {
        if (bits < 64) throw std::invalid_argument("PrecisionContext: mantissa_bits >= 64 required");
    }
};

// Value-semantic MPFR scalar. Binary operations produce results at the
// larger operand precision; rounding is always to nearest.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }

    explicit BigFloat(const PrecisionContext& ctx) { mpfr_init2(v_, ctx.mantissa_bits); mpfr_set_zero(v_, 1); }

    BigFloat(double x, const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.mantissa_bits);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    BigFloat(long x, const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.mantissa_bits);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigFloat(const Rational& q, const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.mantissa_bits);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const std::string& s, const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.mantissa_bits);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Decimal string with the given number of significant digits.
    std::string str(int digits = 17) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat& mul_si(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    BigFloat& div_si(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a);
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a);
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a);
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    // a^b for a > 0.
    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static BigFloat result_for(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_set_prec(r.v_, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        return r;
    }

    mpfr_t v_;
};

}  // namespace beamplan
