#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "qjalg/foundations.hpp"

using namespace qjalg;

namespace {

// Independent oracle: invert (e^t - 1)/t = sum t^n/(n+1)! as a power series.
std::vector<Rational> bernoulli_by_inversion(unsigned nmax)
{
    std::vector<Rational> a(nmax + 1), inv(nmax + 1);
    Rational fact = 1;
    for (unsigned n = 0; n <= nmax; ++n) {
        fact *= n + 1;
        a[n] = Rational(1) / fact;
    }
    for (unsigned n = 0; n <= nmax; ++n) {
        Rational s = n == 0 ? 1 : 0;
        for (unsigned i = 1; i <= n; ++i)
            s -= a[i] * inv[n - i];
        inv[n] = s;
    }
    std::vector<Rational> b(nmax + 1);
    Rational nf = 1;
    for (unsigned n = 0; n <= nmax; ++n) {
        if (n > 0)
            nf *= n;
        b[n] = inv[n] * nf;
    }
    return b;
}

BigInt sigma_naive(unsigned k, std::uint64_t n)
{
    BigInt s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) {
            BigInt p = 1;
            for (unsigned i = 1; i < k; ++i)
                p *= static_cast<unsigned long>(d);
            s += p;
        }
    return s;
}

}  // namespace

TEST_CASE("bernoulli examples")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli agrees with series inversion")
{
    const auto oracle = bernoulli_by_inversion(40);
    for (unsigned n = 0; n <= 40; ++n)
        CHECK_MESSAGE(bernoulli(n) == oracle[n], "n = " << n);
}

TEST_CASE("odd bernoulli numbers vanish")
{
    for (unsigned n = 3; n < 60; n += 2)
        CHECK(bernoulli(n) == 0);
}

TEST_CASE("sigma examples and errors")
{
    CHECK(sigma(2, 1) == 1);
    CHECK(sigma(2, 6) == 12);
    CHECK(sigma(4, 6) == 252);
    CHECK_THROWS_AS(sigma(2, 0), DomainError);
}

TEST_CASE("sigma agrees with naive divisor sum")
{
    for (unsigned k : {1u, 2u, 4u, 6u, 12u})
        for (std::uint64_t n = 1; n <= 150; ++n)
            CHECK(sigma(k, n) == sigma_naive(k, n));
}

TEST_CASE("sigma is multiplicative")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 400);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1)
            continue;
        for (unsigned k : {2u, 4u, 8u})
            CHECK(sigma(k, m * n) == sigma(k, m) * sigma(k, n));
    }
}

TEST_CASE("binomial examples")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("binomial agrees with Pascal triangle and is symmetric")
{
    std::vector<std::vector<BigInt>> pascal{{1}};
    for (long n = 1; n <= 60; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n + 1), 1);
        for (long k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)]
                                               + pascal.back()[static_cast<std::size_t>(k)];
        pascal.push_back(row);
    }
    for (long n = 0; n <= 60; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
}

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("rationals are canonical")
{
    const Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("rational text round trip")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("42") == 42);
    CHECK(rational_to_pq(Rational(5)) == "5/1");
    CHECK(rational_to_pq(Rational(-7, 3)) == "-7/3");
    CHECK(parse_rational(rational_to_pq(Rational(-691, 2730))) == Rational(-691, 2730));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}
