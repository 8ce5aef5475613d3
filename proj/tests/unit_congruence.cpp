#include "classnum/congruence.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace classnum;

namespace {

RankData rank_of(const Integer& p, unsigned e_p, std::optional<unsigned> r_p = std::nullopt)
{
    RankData r;
    r.p = p;
    r.e_p = e_p;
    r.r_p = r_p;
    return r;
}

} // namespace

TEST_SUITE("congruence") {

TEST_CASE("rank_product")
{
    CHECK(rank_product(3, 1) == 6);
    CHECK(rank_product(3, 3) == 1248);
    CHECK(rank_product(11, 2) == 13200);
    CHECK(rank_product(2, 1) == 2);
    CHECK_THROWS_AS(rank_product(3, 0), std::invalid_argument);
}

TEST_CASE("coprimality_witness")
{
    CHECK_FALSE(coprimality_witness(3, 1, 29).has_value());
    CHECK(coprimality_witness(59, 1, 29) == Integer(29));
    CHECK(coprimality_witness(3, 3, 65) == Integer(13));
    CHECK(coprimality_witness(7, 1, 35) == Integer(7));
    CHECK_FALSE(coprimality_witness(3, 1, 1).has_value());
    CHECK_THROWS_AS(coprimality_witness(3, 1, 30), std::invalid_argument);
}

TEST_CASE("minimal_rank_witness picks the lowest witnessing rank")
{
    auto hit = minimal_rank_witness(11, 2, 75);
    REQUIRE(hit.has_value());
    CHECK(hit->q == 5);
    CHECK(hit->rank == 1);

    auto late = minimal_rank_witness(2, 4, 5);
    REQUIRE(late.has_value());
    CHECK(late->q == 5);
    CHECK(late->rank == 4);

    auto mid = minimal_rank_witness(3, 3, 65);
    REQUIRE(mid.has_value());
    CHECK(mid->q == 13);
    CHECK(mid->rank == 3);

    CHECK_FALSE(minimal_rank_witness(3, 2, 29).has_value());
}

TEST_CASE("check_theorem1 trichotomy")
{
    auto confirmed = check_theorem1(rank_of(3, 1, 1), 29, Integer(3));
    CHECK(confirmed.kind() == VerdictKind::SubfieldDivisibility);

    auto witness7 = check_theorem1(rank_of(7, 1, 1), 35, std::nullopt);
    CHECK(witness7 == Verdict::witness(7));

    auto confirmed13 = check_theorem1(rank_of(13, 1, 1), 95, Integer(13));
    CHECK(confirmed13.kind() == VerdictKind::SubfieldDivisibility);

    auto unknown = check_theorem1(rank_of(5, 1, 1), 51, std::nullopt);
    CHECK(unknown.kind() == VerdictKind::SubfieldDivisibility);

    auto bad = check_theorem1(rank_of(5, 1, 1), 3, Integer(3));
    CHECK(bad.kind() == VerdictKind::Violation);
    CHECK(bad.message().find("does not divide") != std::string::npos);
}

TEST_CASE("analyze_theorem1 rank bookkeeping")
{
    auto known = analyze_theorem1(rank_of(3, 3, 3), 65, std::nullopt);
    CHECK(known.verdict == Verdict::witness(13));
    CHECK(known.rank_used == 3);
    CHECK(known.witness_rank == 3);
    CHECK_FALSE(known.rank_assumed);
    CHECK_FALSE(known.rank_uncertain);

    auto assumed = analyze_theorem1(rank_of(2, 4), 5, std::nullopt);
    CHECK(assumed.verdict == Verdict::witness(5));
    CHECK(assumed.rank_used == 4);
    CHECK(assumed.witness_rank == 4);
    CHECK(assumed.rank_assumed);
    CHECK(assumed.rank_uncertain);

    auto low = analyze_theorem1(rank_of(7, 2), 4281, std::nullopt);
    CHECK(low.verdict == Verdict::witness(3));
    CHECK(low.witness_rank == 1);
    CHECK(low.rank_assumed);
    CHECK_FALSE(low.rank_uncertain);

    auto checked = analyze_theorem1(rank_of(3, 1, 1), 29, Integer(3));
    CHECK(checked.subfield_checked);
    CHECK(checked.subfield_confirmed);
}

TEST_CASE("check_theorem1 input validation")
{
    CHECK_THROWS_AS(check_theorem1(rank_of(3, 1, 1), 30, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_theorem1(rank_of(3, 1, 1), 1, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_theorem1(rank_of(3, 1, 2), 29, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_theorem1(rank_of(1, 1, 1), 29, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("check_corollary_odd_degree")
{
    CHECK(check_corollary_odd_degree(rank_of(11, 1, 1), 5) == Verdict::witness(5));
    CHECK(check_corollary_odd_degree(rank_of(7, 1, 1), 3) == Verdict::witness(3));
    CHECK(check_corollary_odd_degree(rank_of(3, 1, 1), 3) == Verdict::witness(3));

    auto bad = check_corollary_odd_degree(rank_of(2, 1, 1), 5);
    CHECK(bad.kind() == VerdictKind::Violation);

    CHECK_THROWS_AS(check_corollary_odd_degree(rank_of(3, 1, 1), 6),
                    std::invalid_argument);
}

TEST_CASE("check_geometric")
{
    auto b59 = class_number_bound(BoundInput{2, -59});
    CHECK(check_geometric(233, 1, 29, b59) == Verdict::witness(29));
    CHECK(check_geometric(3, 1, 29, b59).kind() == VerdictKind::Inconclusive);

    auto unit = class_number_bound(BoundInput{1, 1});
    CHECK(check_geometric(59, 1, 29, unit) == Verdict::witness(29));
    CHECK(check_geometric(29, 1, 29, unit) == Verdict::witness(29));
    CHECK(check_geometric(7, 1, 5, unit).kind() == VerdictKind::Violation);

    /* p^r = 1 mod q asks whether ord_q(p) divides r, not merely ord <= r */
    CHECK(check_geometric(2, 4, 5, unit) == Verdict::witness(5));
    CHECK(check_geometric(2, 2, 5, unit).kind() == VerdictKind::Violation);
    CHECK(check_geometric(2, 3, 5, unit).kind() == VerdictKind::Violation);
}

TEST_CASE("solvable_prime_admissible")
{
    CHECK(solvable_prime_admissible(7, 6));
    CHECK_FALSE(solvable_prime_admissible(5, 6));
    CHECK(solvable_prime_admissible(61, 10));
    CHECK_FALSE(solvable_prime_admissible(2, 2));
    CHECK_THROWS_AS(solvable_prime_admissible(7, 0), std::invalid_argument);
}

TEST_CASE("verdict rendering")
{
    CHECK(to_string(Verdict::witness(13)) == "witness q=13");
    CHECK(to_string(Verdict::subfield_divisibility()) == "subfield-divisibility");
    CHECK(to_string(Verdict::inconclusive("p <= H_F")) == "inconclusive (p <= H_F)");
    CHECK(to_string(VerdictKind::Violation) == "violation");
    CHECK(Verdict::witness(13) == Verdict::witness(13));
    CHECK_FALSE(Verdict::witness(13) == Verdict::witness(5));
}

} // TEST_SUITE
