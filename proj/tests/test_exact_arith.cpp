#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "freybound/exact_arith.hpp"
#include "oracles.hpp"

using namespace freybound;
using freybound::testing::companion_power_sum;
using freybound::testing::random_poly;
using freybound::testing::sylvester_resultant;

TEST_CASE("resultant fixed values") {
    IntPoly f1{-1, 0, 1};  // x^2 - 1
    IntPoly g1{-2, 1};     // x - 2
    CHECK(poly_resultant(f1, g1) == 3);

    IntPoly g2{2, -3, 1};  // x^2 - 3x + 2, shared root x = 1
    CHECK(poly_resultant(f1, g2) == 0);

    IntPoly f3{-2, 0, 0, 1};  // x^3 - 2
    IntPoly g3{-3, 0, 1};     // x^2 - 3
    CHECK(poly_resultant(f3, g3) == -23);
}

TEST_CASE("resultant rejects zero input") {
    IntPoly f{1, 1};
    CHECK_THROWS_AS(poly_resultant(f, IntPoly::zero()), std::invalid_argument);
    CHECK_THROWS_AS(poly_resultant(IntPoly::zero(), f), std::invalid_argument);
}

TEST_CASE("resultant agrees with Sylvester determinant oracle") {
    std::mt19937_64 rng(20240901);
    int checked = 0;
    while (checked < 400) {
        IntPoly f = random_poly(rng, 6, 9);
        IntPoly g = random_poly(rng, 6, 9);
        CHECK(poly_resultant(f, g) == sylvester_resultant(f, g));
        ++checked;
    }
    // non-primitive and negative-leading inputs hit the content paths
    IntPoly f{-6, 0, 4, -10};
    IntPoly g{9, -3, 0, 6, 12};
    CHECK(poly_resultant(f, g) == sylvester_resultant(f, g));
}

TEST_CASE("resultant antisymmetry and multiplicativity") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 120; ++i) {
        IntPoly f = random_poly(rng, 5, 9);
        IntPoly g = random_poly(rng, 5, 9);
        IntPoly h = random_poly(rng, 3, 5);
        BigInt lhs = poly_resultant(f, g);
        BigInt rhs = poly_resultant(g, f);
        long mn = f.degree() * g.degree();
        CHECK(lhs == ((mn % 2) ? -rhs : rhs));
        CHECK(poly_resultant(f, g * h) == poly_resultant(f, g) * poly_resultant(f, h));
    }
}

TEST_CASE("discriminant fixed values") {
    CHECK(poly_discriminant(IntPoly{-1, 1, 1}) == 5);      // x^2 + x - 1
    CHECK(poly_discriminant(IntPoly{0, 0, 1}) == 0);       // x^2
    CHECK(poly_discriminant(IntPoly{-1, -2, 1, 1}) == 49); // x^3 + x^2 - 2x - 1
    CHECK(poly_discriminant(IntPoly{1, 0, 1}) == -4);      // x^2 + 1
    CHECK_THROWS_AS(poly_discriminant(IntPoly::constant(3)), std::invalid_argument);
}

TEST_CASE("discriminant of quadratics is b^2 - 4ac") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        long a = d(rng), b = d(rng), c = d(rng);
        if (a == 0) continue;
        CHECK(poly_discriminant(IntPoly{c, b, a}) == BigInt(b) * b - 4 * BigInt(a) * c);
    }
}

TEST_CASE("sturm root counting fixed values") {
    CHECK(sturm_root_count(IntPoly{-2, 0, 1}, Rational(0), Rational(2)) == 1);
    CHECK(sturm_root_count(IntPoly{1, 0, 1}, Rational(-10), Rational(10)) == 0);
    CHECK(sturm_root_count(IntPoly{-1, -2, 1, 1}, Rational(-2), Rational(2)) == 3);
}

TEST_CASE("sturm signals") {
    IntPoly f{-4, 0, 1};  // roots at +-2
    CHECK_THROWS_AS(sturm_root_count(f, Rational(2), Rational(3)), BoundaryRootError);
    CHECK_THROWS_AS(sturm_root_count(f, Rational(-3), Rational(-2)), BoundaryRootError);
    IntPoly sq{1, 2, 1};  // (x+1)^2
    CHECK_THROWS_AS(sturm_root_count(sq, Rational(-3), Rational(3)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_root_count(f, Rational(3), Rational(0)), std::invalid_argument);
}

namespace {

// numeric root count by Durand-Kerner iteration; returns -1 when the
// imaginary parts land too close to the real axis to classify safely
int numeric_real_root_count(const IntPoly& f) {
    int n = static_cast<int>(f.degree());
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(i)).get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
        return acc / c[static_cast<std::size_t>(n)];
    };
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        roots[static_cast<std::size_t>(i)] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int iter = 0; iter < 600; ++iter) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = eval(roots[static_cast<std::size_t>(i)]);
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
            roots[static_cast<std::size_t>(i)] -= num / den;
        }
    }
    int real = 0;
    for (auto& z : roots) {
        double im = std::abs(z.imag());
        if (im < 1e-9)
            ++real;
        else if (im < 1e-3)
            return -1;
    }
    return real;
}

}  // namespace

TEST_CASE("sturm count over full range matches numeric root count on random cubics") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> d(-9, 9);
    int checked = 0;
    while (checked < 60) {
        IntPoly f{d(rng), d(rng), d(rng), d(rng)};
        if (f.degree() != 3 || !is_squarefree(f)) continue;
        int numeric = numeric_real_root_count(f);
        if (numeric < 0) continue;
        SturmChain chain(f);
        CHECK(chain.count_all() == numeric);
        ++checked;
    }
}

TEST_CASE("factorize fixed values") {
    Factorization f12 = factorize(BigInt(12));
    CHECK(f12 == Factorization{{BigInt(2), 2u}, {BigInt(3), 1u}});
    CHECK(factorize(BigInt(1)).empty());
    CHECK(factorize(BigInt(-1)).empty());
    Factorization f72000 = factorize(BigInt(72000));
    CHECK(f72000 == Factorization{{BigInt(2), 6u}, {BigInt(3), 2u}, {BigInt(5), 3u}});
    CHECK_THROWS_AS(factorize(BigInt(0)), std::invalid_argument);
}

TEST_CASE("factorize round-trips and certifies primality") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(2, 1000000);
    for (int i = 0; i < 50; ++i) {
        BigInt n = BigInt(d(rng)) * d(rng);
        if (i % 7 == 0) n = -n;
        BigInt prod = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            prod *= pow_ui(p, e);
        }
        CHECK(prod == abs_of(n));
    }
    // beyond the trial bound: product of two 12-digit primes
    BigInt a = bigint_from_string("100000000003");
    BigInt b = bigint_from_string("100000000019");
    REQUIRE(is_prime(a));
    REQUIRE(is_prime(b));
    Factorization f = factorize(a * b);
    CHECK(f == Factorization{{a, 1u}, {b, 1u}});
}

TEST_CASE("miller-rabin basics") {
    CHECK(is_prime(BigInt(2)));
    CHECK(is_prime(BigInt(41)));
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK_FALSE(is_prime(BigInt(561)));        // Carmichael
    CHECK_FALSE(is_prime(BigInt(3215031751))); // strong pseudoprime to 2,3,5,7
    CHECK(is_prime(bigint_from_string("170141183460469231731687303715884105727")));  // 2^127-1
}

TEST_CASE("lucas power sums") {
    CHECK(lucas_power_sum(BigInt(2), BigInt(1), 7) == 2);
    CHECK(lucas_power_sum(BigInt(1), BigInt(2), 2) == -3);
    CHECK(lucas_power_sum(BigInt(3), BigInt(2), 3) == 9);
    CHECK(lucas_power_sum(BigInt(5), BigInt(7), 0) == 2);
    CHECK(lucas_power_sum(BigInt(5), BigInt(7), 1) == 5);
}

TEST_CASE("lucas power sum matches companion-matrix oracle") {
    for (long a = -10; a <= 10; ++a)
        for (long Q = -10; Q <= 10; ++Q)
            for (unsigned long n = 0; n <= 20; ++n)
                CHECK(lucas_power_sum(BigInt(a), BigInt(Q), n) ==
                      companion_power_sum(BigInt(a), BigInt(Q), n));
}

TEST_CASE("poly gcd and squarefree helpers") {
    IntPoly f{1, 2, 1};   // (x+1)^2
    IntPoly g{-1, 0, 1};  // (x-1)(x+1)
    IntPoly gc = poly_gcd(f, g);
    CHECK(gc == IntPoly{1, 1});
    CHECK(squarefree_part(f) == IntPoly{1, 1});
    CHECK(is_squarefree(g));
    CHECK_FALSE(is_squarefree(f));
}
