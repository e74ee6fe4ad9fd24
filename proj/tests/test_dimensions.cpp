#include <doctest.h>

#include <vector>

#include "qjalg/dimensions.hpp"

using namespace qjalg;

namespace {

// Plain nested loops over the exponents; no shared code with the library.
long count_solutions(const std::vector<int>& w, long k, std::size_t i = 0)
{
    if (i == w.size())
        return k == 0 ? 1 : 0;
    long total = 0;
    for (long x = 0; x * w[i] <= k; ++x)
        total += count_solutions(w, k - x * w[i], i + 1);
    return total;
}

std::vector<int> weights_of(DimFamily f)
{
    const auto s = family_weights(f);
    return {s.begin(), s.end()};
}

long triangles(long n)
{
    long c = 0;
    for (long a = 1; a <= n; ++a)
        for (long b = a; a + b <= n; ++b) {
            const long cc = n - a - b;
            if (cc >= b && a + b > cc)
                ++c;
        }
    return c;
}

constexpr DimFamily kFamilies[] = {DimFamily::DS, DimFamily::DS0INF, DimFamily::DSINF0, DimFamily::DSINF};

}  // namespace

TEST_CASE("family weights")
{
    CHECK(weights_of(DimFamily::DS) == std::vector<int>{2, 3, 4});
    CHECK(weights_of(DimFamily::DS0INF) == std::vector<int>{1, 2, 3, 4});
    CHECK(weights_of(DimFamily::DSINF0) == std::vector<int>{2, 2, 3, 4});
    CHECK(weights_of(DimFamily::DSINF) == std::vector<int>{1, 2, 2, 3, 4});
}

TEST_CASE("modular dimension and rounding")
{
    CHECK(modular_dim(0) == 1);
    CHECK(modular_dim(2) == 0);
    CHECK(modular_dim(12) == 2);
    CHECK(modular_dim(14) == 1);
    CHECK(modular_dim(-8) == 0);
    CHECK(nearest_int(Rational(5, 2)) == 2);
    CHECK(nearest_int(Rational(-1, 2)) == -1);
    CHECK(nearest_int(Rational(7, 3)) == 2);
    CHECK(nearest_int(Rational(8, 3)) == 3);
}

TEST_CASE("dimension examples")
{
    CHECK(dim_closed(DimFamily::DS, 12) == 7);
    CHECK(dim_closed(DimFamily::DS, 1) == 0);
    CHECK(dim_closed(DimFamily::DS0INF, 1) == 1);
    CHECK(dim_closed(DimFamily::DSINF, 0) == 1);
    const std::vector<long> ds{1, 0, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7};
    for (long k = 0; k <= 12; ++k)
        CHECK(dim_closed(DimFamily::DS, k) == ds[static_cast<std::size_t>(k)]);
    CHECK_THROWS_AS(parse_family("DX"), DomainError);
    CHECK(parse_family("ds0inf") == DimFamily::DS0INF);
}

TEST_CASE("closed forms agree with the nested-loop count")
{
    for (DimFamily f : kFamilies) {
        const auto w = weights_of(f);
        for (long k = 0; k <= 60; ++k)
            CHECK_MESSAGE(dim_closed(f, k) == count_solutions(w, k), family_name(f) << " k = " << k);
    }
}

TEST_CASE("closed forms, dynamic programming and series division agree")
{
    for (DimFamily f : kFamilies) {
        const auto s = series_coefficients(f, 400);
        for (long k = 0; k <= 400; ++k) {
            CHECK(dim_closed(f, k) == s[static_cast<std::size_t>(k)]);
            CHECK(dim_brute(f, k) == s[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("large weights stay exact")
{
    // dim grows like k^{r-1}; the closed form must not overflow.
    const std::int64_t k = 3000000;
    const BigInt d = dim_closed(DimFamily::DSINF, k);
    CHECK(d > 0);
    CHECK(dim_closed(DimFamily::DS, 1200) == series_coefficients(DimFamily::DS, 1200).back());
}

TEST_CASE("adding a generator is a running sum")
{
    // prod 1/(1-z^w) with an extra factor 1/(1-z^a): D'(k) = D'(k-a) + D(k).
    for (long k = 0; k <= 300; ++k) {
        const BigInt prev = k >= 1 ? dim_closed(DimFamily::DS0INF, k - 1) : BigInt(0);
        CHECK(dim_closed(DimFamily::DS0INF, k) == prev + dim_closed(DimFamily::DS, k));
        const BigInt prev2 = k >= 2 ? dim_closed(DimFamily::DSINF0, k - 2) : BigInt(0);
        CHECK(dim_closed(DimFamily::DSINF0, k) == prev2 + dim_closed(DimFamily::DS, k));
        const BigInt prev1 = k >= 1 ? dim_closed(DimFamily::DSINF, k - 1) : BigInt(0);
        CHECK(dim_closed(DimFamily::DSINF, k) == prev1 + dim_closed(DimFamily::DSINF0, k));
    }
}

TEST_CASE("DS is a sum of modular dimensions")
{
    // Polynomials in wp, dwp, e4: the e4-free part is graded by 2a + 3b.
    for (long k = 0; k <= 200; ++k) {
        long direct = 0;
        for (long c = 0; 4 * c <= k; ++c)
            direct += count_solutions({2, 3}, k - 4 * c);
        CHECK(dim_closed(DimFamily::DS, k) == direct);
    }
}

TEST_CASE("Alcuin sequence")
{
    const std::vector<long> first{0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7};
    for (long n = 0; n < static_cast<long>(first.size()); ++n)
        CHECK(alcuin(n) == first[static_cast<std::size_t>(n)]);
    for (long n = 0; n <= 250; ++n)
        CHECK(alcuin(n) == triangles(n));
}

TEST_CASE("negative weights are rejected")
{
    for (DimFamily f : kFamilies) {
        CHECK_THROWS_AS(dim_closed(f, -3), DomainError);
        CHECK_THROWS_AS(dim_brute(f, -1), DomainError);
    }
    CHECK_THROWS_AS(alcuin(-1), DomainError);
}
