#pragma once

#include <gmpxx.h>

#include <string>

namespace classnum {

/* Arbitrary-precision integer used throughout the library. */
using Integer = mpz_class;

inline Integer to_integer(const std::string& s) { return Integer(s); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool fits_u64(const Integer& z)
{
    return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

inline unsigned long long to_u64(const Integer& z)
{
    unsigned long long r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, z.get_mpz_t());
    return r;
}

inline Integer from_u64(unsigned long long v)
{
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return z;
}

} // namespace classnum
