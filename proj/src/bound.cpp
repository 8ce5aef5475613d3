#include "classnum/bound.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace classnum {

UpReal::UpReal(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

UpReal::UpReal(const UpReal& other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

UpReal::UpReal(UpReal&& other) noexcept
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

UpReal& UpReal::operator=(UpReal other) noexcept
{
    swap(*this, other);
    return *this;
}

UpReal::~UpReal() { mpfr_clear(v_); }

void swap(UpReal& a, UpReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

double UpReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

Integer UpReal::ceiling() const
{
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
    return z;
}

std::string UpReal::decimal(int significant_digits) const
{
    if (significant_digits < 1)
        throw std::invalid_argument("UpReal::decimal: need at least one digit");
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*g", significant_digits, MPFR_RNDN, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

int UpReal::compare(const Integer& z) const { return mpfr_cmp_z(v_, z.get_mpz_t()); }

BoundValue class_number_bound(const BoundInput& input, mpfr_prec_t prec)
{
    if (input.degree == 0)
        throw std::invalid_argument("class_number_bound: degree must be positive");
    if (input.discriminant == 0)
        throw std::invalid_argument("class_number_bound: discriminant must be nonzero");

    const unsigned m = input.degree;
    Integer a = abs(input.discriminant);

    BoundValue result(prec);
    mpfr_ptr h = result.real_value.raw();

    if (a == 1 && m >= 2) {
        /* (ln 1)^(m-1) = 0 annihilates the bound; flagged for the caller. */
        result.degenerate = true;
        result.integer_ceiling = 0;
        return result;
    }

    /* 2^(m-1) / (m-1)!, upward */
    mpfr_set_ui_2exp(h, 1, static_cast<mpfr_exp_t>(m - 1), MPFR_RNDU);
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), m - 1);
    mpfr_div_z(h, h, fact.get_mpz_t(), MPFR_RNDU);

    /* sqrt|D|, upward */
    UpReal root(prec);
    mpfr_set_z(root.raw(), a.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(root.raw(), root.raw(), MPFR_RNDU);
    mpfr_mul(h, h, root.raw(), MPFR_RNDU);

    /* (ln|D|)^(m-1), upward; |D| >= 1 keeps the log nonnegative, so upward
     * rounding propagates through the power. */
    if (m >= 2) {
        UpReal lg(prec);
        mpfr_set_z(lg.raw(), a.get_mpz_t(), MPFR_RNDU);
        mpfr_log(lg.raw(), lg.raw(), MPFR_RNDU);
        mpfr_pow_ui(lg.raw(), lg.raw(), m - 1, MPFR_RNDU);
        mpfr_mul(h, h, lg.raw(), MPFR_RNDU);
    }

    result.integer_ceiling = result.real_value.ceiling();
    return result;
}

bool exceeds_bound(const Integer& p, const BoundValue& bound)
{
    return bound.real_value.compare(p) < 0;
}

} // namespace classnum
