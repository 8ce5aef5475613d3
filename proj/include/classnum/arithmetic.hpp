#pragma once

#include "classnum/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace classnum {

/*
 * A factorization n = prod p_i^{e_i} with the p_i prime, strictly increasing
 * and every e_i >= 1.
 */
class Factorization {
public:
    using Entry = std::pair<Integer, unsigned>;

    Factorization() = default;

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /* Multiplies the represented value back together. */
    Integer product() const;

    /* Exponent of p, 0 when p does not occur. */
    unsigned exponent_of(const Integer& p) const;

    /* Inserts p^k, merging with an existing entry for p. */
    void push(const Integer& p, unsigned k = 1);

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<Entry> entries_;
};

Integer gcd(const Integer& a, const Integer& b);

/*
 * Deterministic primality test: trial division by small primes, then
 * Miller-Rabin with a fixed base set (conclusive below 2^64), then a strong
 * Lucas test for wider inputs.  Negative numbers, 0 and 1 are not prime.
 */
bool is_prime(const Integer& n);

/*
 * Complete factorization by trial division up to 10^6 followed by Brent's
 * cycle-finding variant of Pollard rho on the remaining cofactor.
 * Throws std::invalid_argument for n < 2.
 */
Factorization factor(const Integer& n);

/* Euler totient, via factor().  Throws std::invalid_argument for n < 1. */
Integer euler_phi(const Integer& n);

/* base^exp mod m.  Throws std::invalid_argument for m < 1 or exp < 0. */
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m);

/*
 * Order of p in (Z/qZ)^*.  Requires q >= 2; p with gcd(p, q) != 1 is
 * rejected with std::invalid_argument.
 */
Integer multiplicative_order(const Integer& p, const Integer& q);

/* Largest odd divisor of n (n > 0). */
Integer odd_part(const Integer& n);

} // namespace classnum
