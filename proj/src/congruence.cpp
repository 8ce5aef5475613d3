#include "classnum/congruence.hpp"

#include <stdexcept>

namespace classnum {

namespace {

void require_odd(const Integer& n, const char* what, bool allow_one)
{
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument(std::string(what) + " must be odd and positive");
    if (!allow_one && n == 1)
        throw std::invalid_argument(std::string(what) + " must exceed 1");
}

Integer smallest_prime_divisor_of_gcd(const Integer& a, const Integer& b)
{
    Integer g = gcd(a, b);
    /* g > 1 here; its factor list is sorted ascending. */
    return factor(g).entries().front().first;
}

} // namespace

std::string to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::Witness: return "witness";
    case VerdictKind::SubfieldDivisibility: return "subfield_divisibility";
    case VerdictKind::Inconclusive: return "inconclusive";
    case VerdictKind::Violation: return "violation";
    }
    return "unknown";
}

std::string to_string(const Verdict& verdict)
{
    switch (verdict.kind()) {
    case VerdictKind::Witness:
        return "witness q=" + to_string(verdict.witness_prime());
    case VerdictKind::SubfieldDivisibility:
        return "subfield-divisibility";
    case VerdictKind::Inconclusive:
        return verdict.message().empty() ? std::string("inconclusive")
                                         : "inconclusive (" + verdict.message() + ")";
    case VerdictKind::Violation:
        return verdict.message().empty() ? std::string("violation")
                                         : "violation (" + verdict.message() + ")";
    }
    return "unknown";
}

Integer rank_product(const Integer& p, unsigned r)
{
    if (r == 0)
        throw std::invalid_argument("rank_product: rank must be positive");
    Integer result = p, power = 1;
    for (unsigned i = 1; i <= r; ++i) {
        power *= p;
        result *= power - 1;
    }
    return result;
}

std::optional<Integer> coprimality_witness(const Integer& p, unsigned r, const Integer& N1)
{
    require_odd(N1, "N1", true);
    Integer product = rank_product(p, r);
    if (gcd(product, N1) == 1)
        return std::nullopt;
    return smallest_prime_divisor_of_gcd(product, N1);
}

std::optional<WitnessSearch> minimal_rank_witness(const Integer& p, unsigned r, const Integer& N1)
{
    if (r == 0)
        throw std::invalid_argument("minimal_rank_witness: rank must be positive");
    require_odd(N1, "N1", true);
    Integer product = p, power = 1;
    for (unsigned i = 1; i <= r; ++i) {
        power *= p;
        product *= power - 1;
        if (gcd(product, N1) != 1)
            return WitnessSearch{smallest_prime_divisor_of_gcd(product, N1), i};
    }
    return std::nullopt;
}

Theorem1Result analyze_theorem1(const RankData& rank, const Integer& N1,
                                const std::optional<Integer>& subfield_class_number)
{
    if (rank.p < 2)
        throw std::invalid_argument("analyze_theorem1: p must be a prime >= 2");
    if (rank.e_p == 0)
        throw std::invalid_argument("analyze_theorem1: e_p must be positive");
    if (rank.r_p && (*rank.r_p == 0 || *rank.r_p > rank.e_p))
        throw std::invalid_argument("analyze_theorem1: need 1 <= r_p <= e_p");
    require_odd(N1, "N1", false);

    Theorem1Result out;
    out.rank_used = rank.effective_rank();
    out.rank_assumed = !rank.r_p.has_value();

    if (auto hit = minimal_rank_witness(rank.p, out.rank_used, N1)) {
        out.verdict = Verdict::witness(hit->q);
        out.witness_rank = hit->rank;
        out.rank_uncertain = out.rank_assumed && hit->rank > 1;
        return out;
    }

    /* Coprime: the theorem asserts p | h(K). */
    if (!subfield_class_number) {
        out.verdict = Verdict::subfield_divisibility();
        return out;
    }
    out.subfield_checked = true;
    if (*subfield_class_number % rank.p == 0) {
        out.subfield_confirmed = true;
        out.verdict = Verdict::subfield_divisibility();
    } else {
        out.verdict = Verdict::violation(
            "p=" + to_string(rank.p) + " does not divide the known subfield class number " +
            to_string(*subfield_class_number));
    }
    return out;
}

Verdict check_theorem1(const RankData& rank, const Integer& N1,
                       const std::optional<Integer>& subfield_class_number)
{
    return analyze_theorem1(rank, N1, subfield_class_number).verdict;
}

Verdict check_corollary_odd_degree(const RankData& rank, const Integer& N)
{
    if (rank.p < 2)
        throw std::invalid_argument("check_corollary_odd_degree: p must be a prime >= 2");
    require_odd(N, "N", false);
    if (auto q = coprimality_witness(rank.p, rank.effective_rank(), N))
        return Verdict::witness(*q);
    return Verdict::violation("rank product of p=" + to_string(rank.p) +
                              " is coprime to the odd degree " + to_string(N));
}

Verdict check_geometric(const Integer& p, unsigned r_p, const Integer& q,
                        const BoundValue& bound)
{
    if (r_p == 0)
        throw std::invalid_argument("check_geometric: rank must be positive");
    if (!exceeds_bound(p, bound))
        return Verdict::inconclusive("p <= H_F");
    if (p % q == 0)
        return Verdict::witness(q);
    if (mod_pow(p, Integer(r_p), q) == 1)
        return Verdict::witness(q);
    return Verdict::violation("p=" + to_string(p) + " exceeds H_F but p^" +
                              std::to_string(r_p) + " != 1 mod " + to_string(q));
}

bool solvable_prime_admissible(const Integer& p, const Integer& relative_degree)
{
    if (relative_degree < 1)
        throw std::invalid_argument("solvable_prime_admissible: degree must be positive");
    return p > relative_degree;
}

} // namespace classnum
