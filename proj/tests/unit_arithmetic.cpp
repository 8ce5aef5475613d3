#include "classnum/arithmetic.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <stdexcept>

using namespace classnum;

TEST_SUITE("arithmetic") {

TEST_CASE("gcd basics")
{
    CHECK(gcd(6, 29) == 1);
    CHECK(gcd(Integer(58) * 59, 29) == 29);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(Integer("28496379729272136525"), Integer("41241")) ==
          gcd(Integer("41241"), Integer("28496379729272136525")));
}

TEST_CASE("is_prime small and table values")
{
    CHECK(is_prime(233));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK(is_prime(279405653));
    CHECK(is_prime(79241));
    CHECK(is_prime(Integer("4673706701")));
    /* two table entries that look prime but are not */
    CHECK_FALSE(is_prime(Integer("3130845901")));  /* 823 * 3804187 */
    CHECK_FALSE(is_prime(Integer("474204781")));   /* 29 * 16351889 */
    CHECK_FALSE(is_prime(Integer("41241")));
}

TEST_CASE("is_prime beyond 64 bits and pseudoprime traps")
{
    CHECK(is_prime(Integer("618970019642690137449562111")));   /* 2^89 - 1 */
    CHECK(is_prime(Integer("2305843009213693951")));           /* 2^61 - 1 */
    CHECK(is_prime(Integer("18446744073709551629")));          /* first prime > 2^64 */
    CHECK_FALSE(is_prime(Integer("3825123056546413051")));     /* SPSP to bases 2..23 */
    CHECK_FALSE(is_prime(Integer("4951760154835678088235319297"))); /* M31 * M61 */
    CHECK_FALSE(is_prime(Integer("341550071728321")));
    CHECK_FALSE(is_prime(Integer("3215031751")));
    CHECK_FALSE(is_prime(Integer("3474749660383")));
}

TEST_CASE("factor table values")
{
    auto f = factor(58);
    REQUIRE(f.size() == 2);
    CHECK(f.entries()[0] == Factorization::Entry{2, 1});
    CHECK(f.entries()[1] == Factorization::Entry{29, 1});

    auto g = factor(1024);
    REQUIRE(g.size() == 1);
    CHECK(g.entries()[0] == Factorization::Entry{2, 10});

    auto h = factor(79241);
    REQUIRE(h.size() == 1);
    CHECK(h.entries()[0] == Factorization::Entry{79241, 1});

    auto k = factor(41241);
    REQUIRE(k.size() == 3);
    CHECK(k.entries()[0].first == 3);
    CHECK(k.entries()[1].first == 59);
    CHECK(k.entries()[2].first == 233);
    CHECK(k.product() == 41241);
    CHECK(k.exponent_of(59) == 1);
    CHECK(k.exponent_of(7) == 0);
}

TEST_CASE("factor large class numbers")
{
    auto f = factor(Integer("51679023"));
    REQUIRE(f.size() == 3);
    CHECK(f.entries()[0].first == 3);
    CHECK(f.entries()[1].first == 11);
    CHECK(f.entries()[2].first == 1566031);

    Integer h572("6590246292344960194209114717914077693275");
    auto g = factor(h572);
    CHECK(g.product() == h572);
    for (const auto& [p, e] : g) {
        CHECK(is_prime(p));
        CHECK(e >= 1);
    }
    CHECK(g.exponent_of(5) == 2);
    CHECK(g.exponent_of(19) == 2);
    CHECK(g.exponent_of(61) == 2);
    CHECK(g.exponent_of(16351889) == 1);
}

TEST_CASE("factor rejects units")
{
    CHECK_THROWS_AS(factor(1), std::invalid_argument);
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
    CHECK_THROWS_AS(factor(-6), std::invalid_argument);
}

TEST_CASE("factorization entries stay sorted and merged")
{
    Factorization f;
    f.push(5);
    f.push(3, 2);
    f.push(5, 1);
    REQUIRE(f.size() == 2);
    CHECK(f.entries()[0] == Factorization::Entry{3, 2});
    CHECK(f.entries()[1] == Factorization::Entry{5, 2});
    CHECK(f.product() == 225);
}

TEST_CASE("euler_phi")
{
    CHECK(euler_phi(59) == 58);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(572) == 240);
    CHECK(euler_phi(2) == 1);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("mod_pow")
{
    CHECK(mod_pow(3, 3, 13) == 1);
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(11, 1, 5) == 1);
    CHECK(mod_pow(2, 64, Integer("18446744073709551629")) ==
          Integer("18446744073709551616"));
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mod_pow(2, -1, 7), std::invalid_argument);
}

TEST_CASE("multiplicative_order")
{
    CHECK(multiplicative_order(3, 13) == 3);
    CHECK(multiplicative_order(11, 5) == 1);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 2) == 1);
    CHECK(multiplicative_order(Integer("377911"), 13) == 1);
    CHECK_THROWS_AS(multiplicative_order(26, 13), std::invalid_argument);
}

TEST_CASE("odd_part")
{
    CHECK(odd_part(240) == 15);
    CHECK(odd_part(58) == 29);
    CHECK(odd_part(1) == 1);
    CHECK(odd_part(4008) == 501);
    CHECK_THROWS_AS(odd_part(0), std::invalid_argument);
}

TEST_CASE("agreement with the naive oracle on an exhaustive small range")
{
    for (int n = 2; n < 2000; ++n) {
        CAPTURE(n);
        CHECK(is_prime(n) == testoracle::naive_is_prime(n));
        auto fast = factor(n).entries();
        auto slow = testoracle::naive_factor(n);
        CHECK(fast == slow);
    }
}

} // TEST_SUITE
