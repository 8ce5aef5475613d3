#pragma once

#include "classnum/arithmetic.hpp"
#include "classnum/bound.hpp"
#include "classnum/integer.hpp"

#include <optional>
#include <string>

namespace classnum {

/* Exponent and (optional) class-group rank data for one prime p | h(L). */
struct RankData {
    Integer p;
    unsigned e_p = 1;
    std::optional<unsigned> r_p;  /* when present: 1 <= r_p <= e_p */

    /* Rank the checks run at: r_p when annotated, else e_p. */
    unsigned effective_rank() const { return r_p.value_or(e_p); }
};

enum class VerdictKind {
    Witness,               /* a shared odd prime q certifies the congruence */
    SubfieldDivisibility,  /* theorem forces p | h(K) */
    Inconclusive,          /* hypothesis not applicable (with reason) */
    Violation,             /* data contradicts a theorem (with detail) */
};

class Verdict {
public:
    static Verdict witness(const Integer& q) { return Verdict(VerdictKind::Witness, q, ""); }
    static Verdict subfield_divisibility() { return Verdict(VerdictKind::SubfieldDivisibility, 0, ""); }
    static Verdict inconclusive(std::string reason)
    {
        return Verdict(VerdictKind::Inconclusive, 0, std::move(reason));
    }
    static Verdict violation(std::string detail)
    {
        return Verdict(VerdictKind::Violation, 0, std::move(detail));
    }

    VerdictKind kind() const { return kind_; }
    bool is_witness() const { return kind_ == VerdictKind::Witness; }
    bool is_violation() const { return kind_ == VerdictKind::Violation; }

    /* Only meaningful for Witness verdicts. */
    const Integer& witness_prime() const { return q_; }

    /* Reason / detail text; empty for Witness and SubfieldDivisibility. */
    const std::string& message() const { return message_; }

    bool operator==(const Verdict& other) const
    {
        return kind_ == other.kind_ && q_ == other.q_;
    }

private:
    Verdict(VerdictKind kind, Integer q, std::string message)
        : kind_(kind), q_(std::move(q)), message_(std::move(message))
    {
    }

    VerdictKind kind_;
    Integer q_;
    std::string message_;
};

std::string to_string(VerdictKind kind);
std::string to_string(const Verdict& verdict);

/* p * prod_{i=1}^{r} (p^i - 1).  Throws std::invalid_argument for r = 0. */
Integer rank_product(const Integer& p, unsigned r);

/*
 * Smallest prime dividing gcd(rank_product(p, r), N1), or nothing when the
 * two are coprime.  N1 must be odd and >= 1.
 */
std::optional<Integer> coprimality_witness(const Integer& p, unsigned r, const Integer& N1);

/*
 * Witness search used by the record checks: scan ranks r' = 1..r in order
 * and stop at the first r' where rank_product(p, r') shares a factor with
 * N1, reporting the smallest shared prime there.  Scanning minimal ranks
 * first pins the reported witness to the congruence that actually forces
 * it (e.g. p = 11, r = 2, N1 = 75 reports q = 5 from 11 - 1, not the
 * prime 3 that only divides 11^2 - 1).
 */
struct WitnessSearch {
    Integer q;
    unsigned rank;  /* minimal witnessing rank r' */
};
std::optional<WitnessSearch> minimal_rank_witness(const Integer& p, unsigned r, const Integer& N1);

/* Full outcome of a Theorem-1 style check, beyond the bare verdict. */
struct Theorem1Result {
    Verdict verdict = Verdict::inconclusive("");
    unsigned rank_used = 1;
    std::optional<unsigned> witness_rank;
    bool rank_assumed = false;    /* no r_p annotation; ran at r = e_p */
    bool rank_uncertain = false;  /* witness only appeared above rank 1 with assumed rank */
    bool subfield_checked = false;
    bool subfield_confirmed = false;
};

/*
 * Coprimality trichotomy for p | h(L), [L:Q] = 2^a * N1:
 * Witness(q) when the rank product and N1 share a prime q; otherwise the
 * theorem forces p | h(K), reported as SubfieldDivisibility -- confirmed
 * against subfield_class_number when that value is known, Violation when
 * the known value is not divisible by p.
 * N1 must be odd and > 1.
 */
Theorem1Result analyze_theorem1(const RankData& rank, const Integer& N1,
                                const std::optional<Integer>& subfield_class_number);
Verdict check_theorem1(const RankData& rank, const Integer& N1,
                       const std::optional<Integer>& subfield_class_number);

/*
 * Odd-degree corollary: for Galois solvable L of odd degree N > 1, the rank
 * product and N cannot be coprime.  Witness(q) for the smallest shared
 * prime of gcd(rank_product(p, r), N); Violation when the gcd is 1.
 */
Verdict check_corollary_odd_degree(const RankData& rank, const Integer& N);

/*
 * Geometric congruence: when p > H_F and L/F is cyclic of odd prime degree
 * q, then q | p * (p^r - 1).  Inconclusive when p <= H_F; Witness(q) when
 * p = 0 mod q or p^r = 1 mod q; Violation otherwise.
 */
Verdict check_geometric(const Integer& p, unsigned r_p, const Integer& q,
                        const BoundValue& bound);

/*
 * Admissibility gate of the solvable (non-Galois) corollary: p > [L:K]
 * guarantees p cannot divide [M:L] for the Galois closure M, since every
 * prime divisor of [M:K] is <= [L:K].
 */
bool solvable_prime_admissible(const Integer& p, const Integer& relative_degree);

} // namespace classnum
