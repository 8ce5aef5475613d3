#pragma once

#include "classnum/integer.hpp"

#include <mpfr.h>

#include <string>

namespace classnum {

/*
 * Non-negative real carried at fixed binary precision.  Every arithmetic
 * step used to build it rounds upward, so the held value is a certified
 * upper bound of the exact quantity.
 */
class UpReal {
public:
    explicit UpReal(mpfr_prec_t prec = 128);
    UpReal(const UpReal& other);
    UpReal(UpReal&& other) noexcept;
    UpReal& operator=(UpReal other) noexcept;
    ~UpReal();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    double to_double() const;

    /* Smallest integer >= value. */
    Integer ceiling() const;

    /* Decimal rendering with the given number of significant digits,
     * round half to even. */
    std::string decimal(int significant_digits = 12) const;

    /* Sign of value - z. */
    int compare(const Integer& z) const;

    friend void swap(UpReal& a, UpReal& b) noexcept;

private:
    mpfr_t v_;
};

struct BoundInput {
    unsigned degree = 0;   /* m = [F:Q], >= 1 */
    Integer discriminant;  /* D_F, non-zero; sign is ignored by the bound */
};

/*
 * Geometric class-number bound
 *   H_F = 2^(m-1)/(m-1)! * sqrt(|D|) * (ln|D|)^(m-1)
 * computed with upward rounding (natural logarithm).  For m >= 2 and
 * |D| = 1 the formula degenerates to 0; `degenerate` flags that case and
 * the bound is kept at 0.
 */
struct BoundValue {
    UpReal real_value;
    Integer integer_ceiling;
    bool degenerate = false;

    explicit BoundValue(mpfr_prec_t prec = 128) : real_value(prec) {}
};

/* Throws std::invalid_argument when degree = 0 or discriminant = 0. */
BoundValue class_number_bound(const BoundInput& input, mpfr_prec_t prec = 128);

/* True when p > H_F, i.e. p lies strictly above the stored upper bound. */
bool exceeds_bound(const Integer& p, const BoundValue& bound);

} // namespace classnum
