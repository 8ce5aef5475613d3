#include "classnum/arithmetic.hpp"
#include "classnum/bound.hpp"
#include "classnum/congruence.hpp"
#include "classnum/expression.hpp"
#include "classnum/towers.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace classnum;

namespace {

constexpr std::uint64_t seed = 0x5eed0c1a55e5ULL;

Integer random_below(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    return from_u64(std::uniform_int_distribution<std::uint64_t>(lo, hi - 1)(rng));
}

Integer random_prime(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    for (;;) {
        Integer n = random_below(rng, lo, hi);
        if (is_prime(n))
            return n;
    }
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("factorizations multiply back and are canonical")
{
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 400; ++i) {
        Integer n = random_below(rng, 2, 1'000'000'000'000ULL);
        Factorization f = factor(n);
        CHECK(f.product() == n);
        Integer last = 1;
        for (const auto& [p, e] : f) {
            CHECK(p > last);
            CHECK(is_prime(p));
            CHECK(e >= 1);
            last = p;
        }
    }
}

TEST_CASE("factor agrees with the schoolbook oracle")
{
    std::mt19937_64 rng(seed + 1);
    for (int i = 0; i < 300; ++i) {
        Integer n = random_below(rng, 2, 10'000'000);
        auto expected = testoracle::naive_factor(n);
        Factorization got = factor(n);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            CHECK(got.entries()[k].first == expected[k].first);
            CHECK(got.entries()[k].second == expected[k].second);
        }
        CHECK(is_prime(n) == testoracle::naive_is_prime(n));
    }
}

TEST_CASE("multiplicative order divides q-1 and is minimal")
{
    std::mt19937_64 rng(seed + 2);
    for (int i = 0; i < 200; ++i) {
        Integer q = random_prime(rng, 3, 50'000);
        Integer p = random_below(rng, 2, 1'000'000'000);
        if (p % q == 0)
            continue;
        Integer f = multiplicative_order(p, q);
        CHECK((q - 1) % f == 0);
        CHECK(mod_pow(p, f, q) == 1);
        for (const auto& [d, e] : factor(f))
            CHECK(mod_pow(p, f / d, q) != 1);
    }
}

TEST_CASE("order matches the brute-force oracle for small moduli")
{
    std::mt19937_64 rng(seed + 3);
    for (int i = 0; i < 150; ++i) {
        Integer q = random_prime(rng, 3, 2'000);
        Integer p = random_below(rng, 2, 10'000);
        if (p % q == 0)
            continue;
        CHECK(multiplicative_order(p, q) == testoracle::naive_order(p, q));
    }
}

TEST_CASE("witnesses are monotone in the rank")
{
    std::mt19937_64 rng(seed + 4);
    for (int i = 0; i < 300; ++i) {
        Integer p = random_prime(rng, 2, 10'000);
        Integer n1 = 2 * random_below(rng, 1, 500'000) + 1;
        if (n1 == 1)
            continue;
        unsigned r = std::uniform_int_distribution<unsigned>(1, 4)(rng);
        auto lo = coprimality_witness(p, r, n1);
        auto hi = coprimality_witness(p, r + 1, n1);
        if (lo) {
            REQUIRE(hi);
            CHECK(*hi <= *lo);           /* the gcd only grows with the rank */
            CHECK(n1 % *lo == 0);
            CHECK(is_prime(*lo));
        }
    }
}

TEST_CASE("minimal_rank_witness pinpoints the first witnessing rank")
{
    std::mt19937_64 rng(seed + 5);
    for (int i = 0; i < 300; ++i) {
        Integer p = random_prime(rng, 2, 10'000);
        Integer n1 = 2 * random_below(rng, 1, 500'000) + 1;
        if (n1 == 1)
            continue;
        unsigned r = std::uniform_int_distribution<unsigned>(1, 5)(rng);
        auto minimal = minimal_rank_witness(p, r, n1);
        auto flat = coprimality_witness(p, r, n1);
        CHECK(minimal.has_value() == flat.has_value());
        if (minimal) {
            CHECK(minimal->rank <= r);
            CHECK(coprimality_witness(p, minimal->rank, n1) == minimal->q);
            if (minimal->rank > 1)
                CHECK_FALSE(coprimality_witness(p, minimal->rank - 1, n1));
        }
    }
}

TEST_CASE("descent through a tower agrees with the flat check")
{
    std::mt19937_64 rng(seed + 6);
    const unsigned odd_primes[] = {3, 5, 7, 11, 13, 29};
    for (int i = 0; i < 300; ++i) {
        Integer base = 1u << std::uniform_int_distribution<int>(0, 4)(rng);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Integer> steps;
        Integer n1 = 1;
        for (int s = 0; s < k; ++s) {
            unsigned q = odd_primes[std::uniform_int_distribution<int>(0, 5)(rng)];
            steps.emplace_back(q);
            n1 *= q;
        }
        CyclicTower tower = make_tower(base, std::move(steps));
        Integer p = random_prime(rng, 2, 100'000);
        unsigned r = std::uniform_int_distribution<unsigned>(1, 3)(rng);

        DescentTrace trace = descend(tower, p, r);
        Verdict flat = check_theorem1(RankData{p, r, r}, n1, std::nullopt);
        CHECK(trace.final.kind() == flat.kind());
        if (trace.final.is_witness()) {
            /* the descent's witness is one of the step primes dividing n1 */
            CHECK(n1 % trace.final.witness_prime() == 0);
        }
    }
}

TEST_CASE("generated expressions round-trip through the parser")
{
    std::mt19937_64 rng(seed + 7);
    auto small = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int i = 0; i < 250; ++i) {
        int items = small(1, 4);
        std::string text;
        Integer expected = 1;
        for (int it = 0; it < items; ++it) {
            if (it)
                text += '.';
            if (small(0, 1)) {
                Integer inner = 1;
                int factors = small(1, 3);
                std::string prod;
                for (int f = 0; f < factors; ++f) {
                    if (f)
                        prod += '.';
                    int b = small(2, 13);
                    int e = small(1, 2);
                    prod += std::to_string(b);
                    if (e > 1)
                        prod += "^" + std::to_string(e);
                    for (int j = 0; j < e; ++j)
                        inner *= b;
                }
                text += "(" + prod + "+1)";
                expected *= inner + 1;
            } else {
                int b = small(2, 50);
                int e = small(1, 3);
                text += std::to_string(b);
                if (e > 1)
                    text += "^" + std::to_string(e);
                Integer v = 1;
                for (int j = 0; j < e; ++j)
                    v *= b;
                expected *= v;
            }
        }
        auto parsed = parse_class_expression(text);
        Integer product = 1;
        std::string rebuilt;
        for (const auto& item : parsed) {
            product *= item.value;
            if (!rebuilt.empty())
                rebuilt += '.';
            rebuilt += item.source_text;
        }
        CHECK(product == expected);
        CHECK(rebuilt == text);
    }
}

TEST_CASE("euler_phi is multiplicative and right on primes")
{
    std::mt19937_64 rng(seed + 8);
    for (int i = 0; i < 200; ++i) {
        Integer m = random_below(rng, 1, 1'000'000);
        Integer n = random_below(rng, 1, 1'000'000);
        if (gcd(m, n) != 1)
            continue;
        CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
    for (int i = 0; i < 50; ++i) {
        Integer p = random_prime(rng, 2, 1'000'000'000);
        CHECK(euler_phi(p) == p - 1);
    }
}

TEST_CASE("gcd divides both arguments and fully cancels")
{
    std::mt19937_64 rng(seed + 9);
    for (int i = 0; i < 300; ++i) {
        Integer a = random_below(rng, 1, 1'000'000'000'000ULL);
        Integer b = random_below(rng, 1, 1'000'000'000'000ULL);
        Integer g = gcd(a, b);
        CHECK(a % g == 0);
        CHECK(b % g == 0);
        CHECK(gcd(a / g, b / g) == 1);
    }
}

TEST_CASE("odd_part splits off exactly the 2-power")
{
    std::mt19937_64 rng(seed + 10);
    for (int i = 0; i < 300; ++i) {
        Integer n = random_below(rng, 1, 1'000'000'000'000ULL);
        Integer odd = odd_part(n);
        CHECK(odd % 2 == 1);
        Integer rest = n / odd;
        CHECK(odd * rest == n);
        while (rest % 2 == 0)
            rest /= 2;
        CHECK(rest == 1);
    }
}

TEST_CASE("bound ceiling brackets the bound")
{
    std::mt19937_64 rng(seed + 11);
    for (int i = 0; i < 100; ++i) {
        BoundInput input;
        input.degree = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        input.discriminant = random_below(rng, 2, 1'000'000);
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            input.discriminant = -input.discriminant;
        BoundValue bound = class_number_bound(input);
        CHECK_FALSE(bound.degenerate);
        CHECK(bound.real_value.compare(bound.integer_ceiling) <= 0);
        CHECK(bound.real_value.compare(bound.integer_ceiling - 1) > 0);
        CHECK(exceeds_bound(bound.integer_ceiling + 1, bound));
        CHECK_FALSE(exceeds_bound(0, bound));
    }
}

} // TEST_SUITE
