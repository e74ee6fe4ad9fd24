#include "qjalg/dimensions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <mutex>
#include <string>

namespace qjalg {

namespace {

/// Element of Q(zeta_12) as c0 + c1 x + c2 x^2 + c3 x^3 with x^4 = x^2 - 1.
struct Cyclo12 {
    std::array<Rational, 4> c{0, 0, 0, 0};

    static Cyclo12 rational(const Rational& r)
    {
        Cyclo12 z;
        z.c[0] = r;
        return z;
    }
    /// zeta_12^p
    static Cyclo12 root(int p)
    {
        p %= 12;
        if (p < 0)
            p += 12;
        static const std::array<Cyclo12, 12> roots = [] {
            std::array<Cyclo12, 12> r;
            r[0] = rational(1);
            for (std::size_t i = 1; i < 12; ++i)
                r[i] = r[i - 1].times_x();
            return r;
        }();
        return roots[static_cast<std::size_t>(p)];
    }
    Cyclo12 scaled(const Rational& r) const
    {
        Cyclo12 z;
        for (std::size_t i = 0; i < 4; ++i)
            if (sgn(c[i]) != 0)
                z.c[i] = c[i] * r;
        return z;
    }
    /// Multiplication by x is a shift followed by x^4 = x^2 - 1.
    Cyclo12 times_x() const
    {
        Cyclo12 z;
        z.c[0] = -c[3];
        z.c[1] = c[0];
        z.c[2] = c[1] + c[3];
        z.c[3] = c[2];
        return z;
    }

    Cyclo12 operator+(const Cyclo12& o) const
    {
        Cyclo12 z;
        for (std::size_t i = 0; i < 4; ++i)
            z.c[i] = c[i] + o.c[i];
        return z;
    }
    Cyclo12 operator*(const Cyclo12& o) const
    {
        std::array<Rational, 7> full{0, 0, 0, 0, 0, 0, 0};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                full[i + j] += c[i] * o.c[j];
        for (std::size_t d = 6; d >= 4; --d) {
            full[d - 2] += full[d];
            full[d - 4] -= full[d];
            full[d] = 0;
        }
        Cyclo12 z;
        for (std::size_t i = 0; i < 4; ++i)
            z.c[i] = full[i];
        return z;
    }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

// i = zeta^3, j = exp(2 i pi / 3) = zeta^4, -1 = zeta^6.
Cyclo12 i_pow(int k) { return Cyclo12::root(3 * k); }
Cyclo12 j_pow(int k) { return Cyclo12::root(4 * k); }
Cyclo12 sign_pow(int k) { return Cyclo12::root(6 * k); }
Cyclo12 pa(int k) { return Cyclo12::rational(k % 2 == 0 ? 1 : 0); }
Cyclo12 ia(int k) { return Cyclo12::rational(k % 2 == 0 ? 0 : 1); }
Cyclo12 one_minus_j() { return Cyclo12::rational(1) + Cyclo12::rational(-1) * j_pow(1); }
Cyclo12 two_plus_j() { return Cyclo12::rational(2) + j_pow(1); }

struct QuasiTerm {
    std::vector<Rational> poly;  // coefficients of k^0, k^1, ...
    std::function<Cyclo12(int)> periodic;
};

std::vector<QuasiTerm> quasi_polynomial(DimFamily family)
{
    auto r = [](long n, long d) { return make_rational(n, d); };
    auto one = [](int) { return Cyclo12::rational(1); };
    switch (family) {
    case DimFamily::DS:
        return {
            {{r(107, 288), r(3, 16), r(1, 48)}, one},
            {{r(9, 32), r(1, 16)}, sign_pow},
            {{r(1, 8)}, [](int k) { return (pa(k) + ia(k) * i_pow(1)) * i_pow(k); }},
            {{r(1, 9)}, [](int k) { return j_pow(k) + j_pow(2 * k); }},
        };
    case DimFamily::DS0INF:
        return {
            {{r(175, 288), r(15, 32), r(5, 48), r(1, 144)}, one},
            {{r(5, 32), r(1, 32)}, sign_pow},
            {{r(1, 8)}, [](int k) { return pa(k) * i_pow(k); }},
            {{r(1, 27)}, [](int k) { return one_minus_j() * j_pow(k) + two_plus_j() * j_pow(2 * k); }},
        };
    case DimFamily::DSINF0:
        return {
            {{r(121, 288), r(55, 192), r(11, 192), r(1, 288)}, one},
            {{r(13, 32), r(11, 64), r(1, 64)}, sign_pow},
            {{r(1, 16)}, [](int k) { return (pa(k) + ia(k) * i_pow(1)) * i_pow(k); }},
            {{r(1, 27)}, [](int k) { return two_plus_j() * j_pow(k) + one_minus_j() * j_pow(2 * k); }},
        };
    case DimFamily::DSINF:
        return {
            {{r(4267, 6912), r(55, 96), r(199, 1152), r(1, 48), r(1, 1152)}, one},
            {{r(63, 256), r(3, 32), r(1, 128)}, sign_pow},
            {{r(1, 16)}, [](int k) { return pa(k) * i_pow(k); }},
            {{r(1, 27)}, [](int k) { return j_pow(k) + j_pow(2 * k); }},
        };
    }
    return {};
}

using ResiduePolys = std::array<std::vector<Rational>, 12>;

/// Collapses the periodic parts for each class of k mod 12 into one rational polynomial.
ResiduePolys residue_polynomials(DimFamily family)
{
    ResiduePolys out;
    const auto terms = quasi_polynomial(family);
    for (int residue = 0; residue < 12; ++residue) {
        std::vector<Cyclo12> acc;
        for (const auto& t : terms) {
            const Cyclo12 p = t.periodic(residue);
            if (acc.size() < t.poly.size())
                acc.resize(t.poly.size());
            for (std::size_t i = 0; i < t.poly.size(); ++i)
                acc[i] = acc[i] + p.scaled(t.poly[i]);
        }
        for (const auto& coeff : acc) {
            if (!coeff.is_rational())
                throw InconsistencyError("dimension quasi-polynomial has a non-rational periodic part");
            out[static_cast<std::size_t>(residue)].push_back(coeff.c[0]);
        }
    }
    return out;
}

const ResiduePolys& residue_table(DimFamily family)
{
    // Built on first use, one family at a time.
    switch (family) {
    case DimFamily::DS: {
        static const ResiduePolys t = residue_polynomials(DimFamily::DS);
        return t;
    }
    case DimFamily::DS0INF: {
        static const ResiduePolys t = residue_polynomials(DimFamily::DS0INF);
        return t;
    }
    case DimFamily::DSINF0: {
        static const ResiduePolys t = residue_polynomials(DimFamily::DSINF0);
        return t;
    }
    case DimFamily::DSINF: {
        static const ResiduePolys t = residue_polynomials(DimFamily::DSINF);
        return t;
    }
    }
    throw DomainError("unknown dimension family");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

std::string_view family_name(DimFamily f)
{
    switch (f) {
    case DimFamily::DS: return "DS";
    case DimFamily::DS0INF: return "DS0INF";
    case DimFamily::DSINF0: return "DSINF0";
    case DimFamily::DSINF: return "DSINF";
    }
    return "?";
}

DimFamily parse_family(std::string_view name)
{
    std::string upper;
    for (char ch : name)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (DimFamily f : {DimFamily::DS, DimFamily::DS0INF, DimFamily::DSINF0, DimFamily::DSINF})
        if (family_name(f) == upper)
            return f;
    throw DomainError("unknown dimension family '" + std::string(name) + "'");
}

std::span<const int> family_weights(DimFamily f)
{
    static constexpr std::array<int, 3> ds{2, 3, 4};
    static constexpr std::array<int, 4> ds0inf{1, 2, 3, 4};
    static constexpr std::array<int, 4> dsinf0{2, 2, 3, 4};
    static constexpr std::array<int, 5> dsinf{1, 2, 2, 3, 4};
    switch (f) {
    case DimFamily::DS: return ds;
    case DimFamily::DS0INF: return ds0inf;
    case DimFamily::DSINF0: return dsinf0;
    case DimFamily::DSINF: return dsinf;
    }
    return {};
}

std::int64_t modular_dim(std::int64_t j)
{
    const bool twelve_divides = (j - 2) % 12 == 0;
    return floor_div(j, 12) + (twelve_divides ? 0 : 1);
}

BigInt nearest_int(const Rational& x)
{
    // ceil(x - 1/2) sends n + 1/2 to n and everything else to the nearest integer
    Rational shifted = x - Rational(1, 2);
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return out;
}

BigInt dim_closed(DimFamily family, std::int64_t k)
{
    if (k < 0)
        throw DomainError("dim_closed: k must be nonnegative");
    const auto& poly = residue_table(family)[static_cast<std::size_t>(k % 12)];
    Rational value = 0;
    Rational power = 1;
    for (const auto& c : poly) {
        value += c * power;
        power *= Rational(k);
    }
    if (value.get_den() != 1)
        throw InconsistencyError("dimension formula produced a non-integer");
    return value.get_num();
}

BigInt dim_brute(DimFamily family, std::int64_t k)
{
    if (k < 0)
        throw DomainError("dim_brute: k must be nonnegative");
    static std::mutex mutex;
    static std::array<std::vector<BigInt>, 4> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto& table = tables[static_cast<std::size_t>(family)];
    if (static_cast<std::int64_t>(table.size()) <= k) {
        // Count lattice points by adding one generator weight at a time.
        const std::size_t size = static_cast<std::size_t>(std::max<std::int64_t>(k + 1, 2 * static_cast<std::int64_t>(table.size())));
        std::vector<BigInt> ways(size, 0);
        ways[0] = 1;
        for (int w : family_weights(family))
            for (std::size_t s = static_cast<std::size_t>(w); s < size; ++s)
                ways[s] += ways[s - static_cast<std::size_t>(w)];
        table = std::move(ways);
    }
    return table[static_cast<std::size_t>(k)];
}

std::vector<BigInt> series_coefficients(DimFamily family, std::int64_t kmax)
{
    if (kmax < 0)
        throw DomainError("series_coefficients: kmax must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(kmax) + 1;
    // Denominator prod (1 - z^w), truncated.
    std::vector<BigInt> denom(n, 0);
    denom[0] = 1;
    for (int w : family_weights(family))
        for (std::size_t s = n; s-- > static_cast<std::size_t>(w);)
            denom[s] -= denom[s - static_cast<std::size_t>(w)];
    // a * denom = 1 with denom[0] = 1
    std::vector<BigInt> a(n, 0);
    for (std::size_t m = 0; m < n; ++m) {
        BigInt acc = m == 0 ? 1 : 0;
        for (std::size_t i = 1; i <= m; ++i)
            if (denom[i] != 0)
                acc -= denom[i] * a[m - i];
        a[m] = acc;
    }
    return a;
}

BigInt alcuin(std::int64_t n)
{
    if (n < 0)
        throw DomainError("alcuin: n must be nonnegative");
    const std::int64_t base = n % 2 == 0 ? n : n + 3;
    return nearest_int(make_rational(BigInt(base) * BigInt(base), 48));
}

}  // namespace qjalg
