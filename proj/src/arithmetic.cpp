#include "classnum/arithmetic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace classnum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 mr_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod_u64(u64 base, u64 exp, u64 m)
{
    u64 r = m == 1 ? 0 : 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/* Deterministic for all 64-bit inputs with the fixed base set. */
bool miller_rabin_u64(u64 n)
{
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : mr_bases) {
        if (a % n == 0)
            continue;
        u64 x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 41 * 41)
        return true;
    return miller_rabin_u64(n);
}

bool miller_rabin_mpz(const Integer& n)
{
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer x, nm1 = n - 1;
    for (u64 a : mr_bases) {
        Integer base(static_cast<unsigned long>(a));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1)
            continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/*
 * Strong Lucas probable-prime test with Selfridge's parameter choice:
 * first D in 5, -7, 9, -11, ... with (D|n) = -1, P = 1, Q = (1-D)/4.
 * Together with the Miller-Rabin pass this is a Baillie-PSW style check
 * for inputs past the deterministic 64-bit range.
 */
bool strong_lucas_mpz(const Integer& n)
{
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return false;

    long d_small = 5;
    Integer D;
    while (true) {
        D = d_small;
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == 0)
            return gcd(D, n) == n;  /* |D| >= n can only happen for tiny n */
        if (j == -1)
            break;
        d_small = d_small > 0 ? -(d_small + 2) : -(d_small - 2);
    }
    Integer Q = (1 - D) / 4;

    Integer d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    auto reduce = [&](Integer& v) {
        v %= n;
        if (v < 0)
            v += n;
    };
    /* Halve v mod the odd n. */
    auto halve = [&](Integer& v) {
        if (mpz_odd_p(v.get_mpz_t()))
            v += n;
        v >>= 1;
    };

    Integer U = 1, V = 1, Qk = Q;  /* U_1, V_1, Q^1 */
    reduce(Qk);
    long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    for (long i = bits - 2; i >= 0; --i) {
        /* (U, V)_k -> (U, V)_{2k} */
        U = U * V % n;
        V = V * V - 2 * Qk;
        reduce(V);
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            /* -> (U, V)_{2k+1} with P = 1 */
            Integer u2 = U + V;
            Integer v2 = D * U + V;
            reduce(u2);
            reduce(v2);
            halve(u2);
            halve(v2);
            U = u2;
            V = v2;
            Qk = Qk * Q % n;
            reduce(Qk);
        }
    }

    if (U == 0 || V == 0)
        return true;
    for (unsigned long i = 1; i < s; ++i) {
        V = V * V - 2 * Qk;
        reduce(V);
        if (V == 0)
            return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

constexpr u64 trial_division_limit = 1'000'000;

/* Divides out every prime factor below trial_division_limit. */
void trial_divide(Integer& n, Factorization& out)
{
    for (u64 p : {2, 3, 5}) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e)
            out.push(from_u64(p), e);
    }
    /* 6k +/- 1 wheel */
    for (u64 p = 7, step = 4; p < trial_division_limit; p += step, step = 6 - step) {
        if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0)
            return;
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
            out.push(n, 1);
            n = 1;
            return;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            out.push(from_u64(p), e);
        }
    }
}

/*
 * Brent's variant of Pollard rho with x^2 + c, deterministic parameter
 * sequence c = 1, 2, 3, ...  Returns a nontrivial factor of composite odd
 * n not divisible by 3 (retries internally until a split happens; the
 * batch size keeps gcd calls rare).
 */
u64 brent_rho_u64(u64 n)
{
    for (u64 c = 1;; ++c) {
        auto advance = [n, c](u64 v) {
            u64 t = mul_mod(v, v, n);
            u64 s = t + c;  /* wrap-safe: s - n is correct mod 2^64 either way */
            if (s < t || s >= n)
                s -= n;
            return s;
        };
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = advance(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = advance(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            /* backtrack one step at a time */
            g = 1;
            while (g == 1) {
                ys = advance(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n)
            return g;
    }
}

Integer brent_rho_mpz(const Integer& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, q = 1, g = 1, x, ys;
        u64 r = 1;
        const u64 batch = 128;
        auto advance = [&](Integer& v) {
            v = v * v % n;
            v += c;
            if (v >= n)
                v -= n;
        };
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                advance(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    advance(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                advance(ys);
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n)
            return g;
    }
}

void factor_into(Integer n, Factorization& out)
{
    std::vector<Integer> pending;
    pending.push_back(std::move(n));
    while (!pending.empty()) {
        Integer m = std::move(pending.back());
        pending.pop_back();
        if (m == 1)
            continue;
        if (is_prime(m)) {
            out.push(m, 1);
            continue;
        }
        Integer split = fits_u64(m) ? from_u64(brent_rho_u64(to_u64(m))) : brent_rho_mpz(m);
        pending.push_back(m / split);
        pending.push_back(std::move(split));
    }
}

} // namespace

Integer Factorization::product() const
{
    Integer r = 1;
    for (const auto& [p, e] : entries_) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

unsigned Factorization::exponent_of(const Integer& p) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const Entry& a, const Integer& v) { return a.first < v; });
    return it != entries_.end() && it->first == p ? it->second : 0;
}

void Factorization::push(const Integer& p, unsigned k)
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const Entry& a, const Integer& v) { return a.first < v; });
    if (it != entries_.end() && it->first == p)
        it->second += k;
    else
        entries_.insert(it, {p, k});
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    if (fits_u64(n))
        return is_prime_u64(to_u64(n));
    for (u64 p : mr_bases) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    return miller_rabin_mpz(n) && strong_lucas_mpz(n);
}

Factorization factor(const Integer& n)
{
    if (n < 2)
        throw std::invalid_argument("factor: argument must be at least 2");
    Factorization out;
    Integer m = n;
    trial_divide(m, out);
    if (m != 1)
        factor_into(std::move(m), out);
    return out;
}

Integer euler_phi(const Integer& n)
{
    if (n < 1)
        throw std::invalid_argument("euler_phi: argument must be positive");
    if (n == 1)
        return 1;
    Integer r = 1;
    for (const auto& [p, e] : factor(n)) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        r *= pe * (p - 1);
    }
    return r;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m)
{
    if (m < 1)
        throw std::invalid_argument("mod_pow: modulus must be positive");
    if (exp < 0)
        throw std::invalid_argument("mod_pow: negative exponent");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer multiplicative_order(const Integer& p, const Integer& q)
{
    if (q < 2)
        throw std::invalid_argument("multiplicative_order: modulus must be at least 2");
    if (gcd(p, q) != 1)
        throw std::invalid_argument("multiplicative_order: arguments are not coprime");
    /* The order divides phi(q); strip each prime of phi(q) as far as the
     * congruence allows. */
    Integer order = euler_phi(q);
    if (order == 1)
        return order;
    for (const auto& [f, e] : factor(order)) {
        for (unsigned i = 0; i < e; ++i) {
            Integer reduced = order / f;
            if (mod_pow(p, reduced, q) == 1)
                order = reduced;
            else
                break;
        }
    }
    return order;
}

Integer odd_part(const Integer& n)
{
    if (n < 1)
        throw std::invalid_argument("odd_part: argument must be positive");
    Integer r = n;
    mpz_tdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), mpz_scan1(r.get_mpz_t(), 0));
    return r;
}

} // namespace classnum
