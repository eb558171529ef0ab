#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freybound/regprime.hpp"

#include "freybound/exact_arith.hpp"

using namespace freybound;

namespace {

// Independent mod-r route: for even k with 2 <= k <= r-3,
//   sum_{a=0}^{r-1} a^k = B_k * r (mod r^2),
// so B_k mod r = (power sum / r) mod r, with no rational arithmetic.
unsigned long bernoulli_mod_r(unsigned long k, unsigned long r) {
    BigInt r2 = BigInt(static_cast<long>(r)) * static_cast<long>(r);
    BigInt s = 0;
    for (unsigned long a = 1; a < r; ++a)
        s += powmod(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(k)), r2);
    s %= r2;
    if (!mpz_divisible_ui_p(s.get_mpz_t(), r))
        throw std::logic_error("bernoulli_mod_r: power sum not divisible by r");
    BigInt b = divexact(s, BigInt(static_cast<long>(r))) % static_cast<long>(r);
    return b.get_ui();
}

}  // namespace

TEST_CASE("bernoulli fixed values") {
    BernoulliTable t = bernoulli_upto(12);
    CHECK(t.at(0) == Rational(1));
    CHECK(t.at(1) == Rational(-1, 2));
    CHECK(t.at(2) == Rational(1, 6));
    CHECK(t.at(3) == Rational(0));
    CHECK(t.at(12) == Rational(BigInt(-691), BigInt(2730)));
}

TEST_CASE("von Staudt-Clausen: denominators are products of q with (q-1) | k") {
    BernoulliTable t = bernoulli_upto(60);
    for (unsigned long k = 2; k <= 60; k += 2) {
        BigInt denom = 1;
        for (unsigned long q = 2; q <= k + 1; ++q) {
            if (!is_prime(BigInt(static_cast<long>(q)))) continue;
            if (k % (q - 1) == 0) denom *= static_cast<long>(q);
        }
        CHECK(t.at(k).get_den() == denom);
    }
}

TEST_CASE("odd bernoulli numbers vanish from 3 on") {
    BernoulliTable t = bernoulli_upto(31);
    for (unsigned long k = 3; k <= 31; k += 2) CHECK(t.at(k) == Rational(0));
}

TEST_CASE("regularity fixed examples") {
    auto r5 = is_regular(5);
    CHECK(r5.regular);
    CHECK(r5.irregular_indices.empty());

    auto r37 = is_regular(37);
    CHECK_FALSE(r37.regular);
    REQUIRE(r37.irregular_indices.size() == 1);
    CHECK(r37.irregular_indices[0] == 32);

    auto r691 = is_regular(691);  // 691 divides the numerator of B_12
    CHECK_FALSE(r691.regular);
    bool has12 = false;
    for (auto k : r691.irregular_indices) has12 = has12 || (k == 12);
    CHECK(has12);

    CHECK_THROWS_AS(is_regular(9), std::invalid_argument);
    CHECK_THROWS_AS(is_regular(2), std::invalid_argument);
}

TEST_CASE("irregular primes below 100 are exactly 37, 59, 67") {
    std::vector<unsigned long> irregular;
    for (unsigned long r = 3; r < 100; ++r) {
        if (!is_prime(BigInt(static_cast<long>(r)))) continue;
        if (!is_regular(r).regular) irregular.push_back(r);
    }
    CHECK(irregular == std::vector<unsigned long>{37, 59, 67});
}

TEST_CASE("rational route agrees with the mod-r power-sum oracle") {
    BernoulliTable t = bernoulli_upto(150);
    for (unsigned long r = 5; r <= 150; ++r) {
        if (!is_prime(BigInt(static_cast<long>(r)))) continue;
        for (unsigned long k = 2; k <= r - 3; k += 2) {
            BigInt num = t.at(k).get_num() % static_cast<long>(r);
            if (num < 0) num += static_cast<long>(r);
            BigInt den = t.at(k).get_den() % static_cast<long>(r);
            // B_k mod r = num * den^-1; compare against the oracle
            BigInt lhs = num * powmod(den, BigInt(static_cast<long>(r) - 2),
                                      BigInt(static_cast<long>(r))) %
                         static_cast<long>(r);
            CHECK(lhs.get_ui() == bernoulli_mod_r(k, r));
        }
    }
}
