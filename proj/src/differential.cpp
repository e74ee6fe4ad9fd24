#include "qjalg/differential.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace qjalg {

namespace {

std::string lowercase(std::string_view s)
{
    std::string out;
    for (char ch : s)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    return out;
}

QJForm gen(Gen g) { return QJForm::generator(g); }

struct Tables {
    std::array<QJForm, 5> dz;
    std::array<QJForm, 5> dtau;
};

const Tables& tables()
{
    static const Tables t = [] {
        const QJForm wp = gen(Gen::WP), dwp = gen(Gen::DWP), e4 = gen(Gen::E4);
        const QJForm e1 = gen(Gen::EE1), e2 = gen(Gen::EE2);
        Tables out;
        out.dz = {
            dwp,                        // wp
            6 * wp * wp - 30 * e4,      // dz wp
            QJForm(),                   // e4
            -wp - e2,                   // E1
            QJForm(),                   // e2
        };
        out.dtau = {
            Rational(-1, 4) * e1 * dwp - Rational(1, 2) * wp * wp + Rational(1, 2) * e2 * wp + 5 * e4,
            Rational(3, 2) * (5 * e4 - wp * wp) * e1 + Rational(3, 4) * (e2 - wp) * dwp,
            Rational(-1, 10) * pow(wp, 3) + Rational(1, 40) * dwp * dwp + Rational(3, 2) * wp * e4 + e4 * e2,
            Rational(1, 4) * (e1 * e2 + wp * e1 + Rational(1, 2) * dwp),
            Rational(1, 4) * (e2 * e2 - 5 * e4),
        };
        return out;
    }();
    return t;
}

QJForm leibniz(const std::array<QJForm, 5>& images, const QJForm& f)
{
    TermAccumulator acc;
    for (const auto& [m, c] : f.terms()) {
        for (Gen g : kAllGenerators) {
            const unsigned p = m.exponent(g);
            const QJForm& image = images[static_cast<std::size_t>(g)];
            if (p == 0 || image.is_zero())
                continue;
            const Monomial rest = m.divided_by(g);
            const Rational scaled = c * p;
            for (const auto& [mi, ci] : image.terms())
                acc.add_product(rest * mi, scaled, ci);
        }
    }
    return acc.finish();
}

template <typename PerComponent>
QJForm by_weight(const QJForm& f, PerComponent&& fn)
{
    QJForm out;
    for (const auto& [k, component] : weight_components(f))
        out += fn(k, component);
    return out;
}

}  // namespace

std::string_view derivation_name(Derivation d)
{
    switch (d) {
    case Derivation::DZ: return "dz";
    case Derivation::DTAU: return "dtau";
    case Derivation::OB: return "ob";
    case Derivation::DJAC: return "d";
    case Derivation::DELTA: return "delta";
    }
    return "?";
}

std::string_view bracket_name(Bracket b)
{
    switch (b) {
    case Bracket::RC_TAU: return "rc";
    case Bracket::RC_D: return "rcd";
    case Bracket::TV: return "tv";
    }
    return "?";
}

Bracket parse_bracket(std::string_view name)
{
    const std::string s = lowercase(name);
    if (s == "rc" || s == "rc_tau")
        return Bracket::RC_TAU;
    if (s == "rcd" || s == "rc_d")
        return Bracket::RC_D;
    if (s == "tv")
        return Bracket::TV;
    throw DomainError("unknown bracket '" + std::string(name) + "'");
}

Derivation parse_derivation(std::string_view name)
{
    const std::string s = lowercase(name);
    if (s == "dz")
        return Derivation::DZ;
    if (s == "dtau")
        return Derivation::DTAU;
    if (s == "ob")
        return Derivation::OB;
    if (s == "d" || s == "djac")
        return Derivation::DJAC;
    if (s == "delta")
        return Derivation::DELTA;
    throw DomainError("unknown derivation '" + std::string(name) + "'");
}

int weight_shift(Derivation d)
{
    switch (d) {
    case Derivation::DZ: return 1;
    case Derivation::DELTA: return 0;
    default: return 2;
    }
}

int weight_shift(Bracket b, unsigned n)
{
    return (b == Bracket::TV ? 3 : 2) * static_cast<int>(n);
}

const QJForm& generator_image(Derivation d, Gen g)
{
    const auto idx = static_cast<std::size_t>(g);
    switch (d) {
    case Derivation::DZ: return tables().dz[idx];
    case Derivation::DTAU: return tables().dtau[idx];
    default: throw DomainError("generator tables exist only for DZ and DTAU");
    }
}

QJForm derive(Derivation d, const QJForm& f)
{
    switch (d) {
    case Derivation::DZ: return leibniz(tables().dz, f);
    case Derivation::DTAU: return leibniz(tables().dtau, f);
    case Derivation::OB:
        return by_weight(f, [](int k, const QJForm& fk) {
            return 4 * derive(Derivation::DTAU, fk) + gen(Gen::EE1) * derive(Derivation::DZ, fk)
                   - Rational(k) * gen(Gen::EE2) * fk;
        });
    case Derivation::DJAC:
        return by_weight(f, [](int, const QJForm& fk) {
            return derive(Derivation::DTAU, fk) + Rational(1, 4) * gen(Gen::EE1) * derive(Derivation::DZ, fk);
        });
    case Derivation::DELTA:
        return by_weight(f, [](int k, const QJForm& fk) { return make_rational(k, 2) * fk; });
    }
    return {};
}

QJForm derive_n(Derivation d, QJForm f, unsigned times)
{
    for (unsigned i = 0; i < times && !f.is_zero(); ++i)
        f = derive(d, f);
    return f;
}

namespace {

QJForm rankin_cohen_homogeneous(Derivation d, int k, const QJForm& f, int l, const QJForm& g, unsigned n)
{
    std::vector<QJForm> df{f}, dg{g};
    for (unsigned r = 1; r <= n; ++r) {
        df.push_back(derive(d, df.back()));
        dg.push_back(derive(d, dg.back()));
    }
    const long nn = static_cast<long>(n);
    QJForm out;
    for (unsigned r = 0; r <= n; ++r) {
        const long rr = static_cast<long>(r);
        Rational coeff(binomial(k + nn - 1, nn - rr) * binomial(l + nn - 1, rr));
        if (coeff == 0)
            continue;
        if (r % 2 == 1)
            coeff = -coeff;
        out += coeff * (df[r] * dg[n - r]);
    }
    return out;
}

/// mixed[i][j] = DTAU^i DZ^j f for i + j <= n
std::vector<std::vector<QJForm>> mixed_derivatives(const QJForm& f, unsigned n)
{
    std::vector<std::vector<QJForm>> grid(n + 1);
    grid[0].push_back(f);
    for (unsigned j = 1; j <= n; ++j)
        grid[0].push_back(derive(Derivation::DZ, grid[0][j - 1]));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 0; i + j <= n; ++j)
            grid[i].push_back(derive(Derivation::DTAU, grid[i - 1][j]));
    return grid;
}

QJForm transvectant(const QJForm& f, const QJForm& g, unsigned n)
{
    const auto df = mixed_derivatives(f, n);
    const auto dg = mixed_derivatives(g, n);
    QJForm out;
    for (unsigned r = 0; r <= n; ++r) {
        Rational coeff(binomial(n, r));
        if (r % 2 == 1)
            coeff = -coeff;
        out += coeff * (df[n - r][r] * dg[r][n - r]);
    }
    return out;
}

}  // namespace

QJForm bracket(Bracket b, const QJForm& f, const QJForm& g, unsigned n)
{
    if (n == 0)
        return f * g;
    if (b == Bracket::TV)
        return transvectant(f, g, n);
    const Derivation d = b == Bracket::RC_TAU ? Derivation::DTAU : Derivation::DJAC;
    QJForm out;
    const auto fc = weight_components(f);
    const auto gc = weight_components(g);
    for (const auto& [k, fk] : fc)
        for (const auto& [l, gl] : gc)
            out += rankin_cohen_homogeneous(d, k, fk, l, gl, n);
    return out;
}

QJForm transvectant_by_recurrence(const QJForm& f, const QJForm& g, unsigned n)
{
    if (n == 0)
        return f * g;
    const QJForm lhs = transvectant_by_recurrence(derive(Derivation::DTAU, f), derive(Derivation::DZ, g), n - 1);
    const QJForm rhs = transvectant_by_recurrence(derive(Derivation::DZ, f), derive(Derivation::DTAU, g), n - 1);
    return lhs - rhs;
}

namespace {

QJForm star_coefficient(Bracket b, const QJForm& f, const QJForm& g, unsigned n)
{
    QJForm term = bracket(b, f, g, n);
    if (b == Bracket::TV)
        term *= Rational(1) / Rational(factorial(n));
    return term;
}

}  // namespace

std::vector<QJForm> star_truncated(Bracket b, const QJForm& f, const QJForm& g, unsigned order)
{
    std::vector<QJForm> out;
    for (unsigned n = 0; n <= order; ++n)
        out.push_back(star_coefficient(b, f, g, n));
    return out;
}

std::pair<QJForm, QJForm> star_associator_sides(Bracket b, const QJForm& f, const QJForm& g, const QJForm& h,
                                                unsigned n)
{
    const auto fg = star_truncated(b, f, g, n);
    const auto gh = star_truncated(b, g, h, n);
    QJForm left, right;
    for (unsigned r = 0; r <= n; ++r) {
        left += star_coefficient(b, fg[r], h, n - r);
        right += star_coefficient(b, f, gh[r], n - r);
    }
    return {left, right};
}

StabilityReport check_stability(Algebra algebra, Derivation d)
{
    for (const auto& [name, generator] : algebra_generators(algebra))
        if (!member(derive(d, generator), algebra))
            return {false, name};
    return {true, std::nullopt};
}

}  // namespace qjalg
