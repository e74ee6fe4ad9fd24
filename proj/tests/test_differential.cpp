#include <doctest.h>

#include <random>

#include "qjalg/differential.hpp"
#include "qjalg/verify.hpp"

using namespace qjalg;

namespace {

const QJForm wp = QJForm::generator(Gen::WP);
const QJForm dwp = QJForm::generator(Gen::DWP);
const QJForm e4 = QJForm::generator(Gen::E4);
const QJForm e1 = QJForm::generator(Gen::EE1);
const QJForm e2 = QJForm::generator(Gen::EE2);

Rational r(long n, long d = 1) { return make_rational(n, d); }

QJForm tv(const QJForm& f, const QJForm& g, unsigned n) { return bracket(Bracket::TV, f, g, n); }

std::mt19937_64& rng()
{
    static std::mt19937_64 g(21);
    return g;
}

QJForm random_any(int max_weight = 7, int terms = 3)
{
    return random_nonzero_form(rng(), 0, max_weight, monomial_generators(Algebra::JSinf), terms);
}

}  // namespace

TEST_CASE("generator tables")
{
    CHECK(derive(Derivation::DZ, wp) == dwp);
    CHECK(derive(Derivation::DZ, dwp) == 6 * wp * wp - 30 * e4);
    CHECK(derive(Derivation::DZ, e4).is_zero());
    CHECK(derive(Derivation::DZ, e1) == -wp - e2);
    CHECK(derive(Derivation::DZ, e2).is_zero());
    CHECK(derive(Derivation::DTAU, e2) == r(1, 4) * (e2 * e2 - 5 * e4));
    CHECK_THROWS_AS(generator_image(Derivation::OB, Gen::WP), DomainError);
}

TEST_CASE("derive examples")
{
    CHECK(derive(Derivation::OB, wp) == -2 * wp * wp + 20 * e4);
    CHECK(derive(Derivation::OB, e4) == -14 * e6_form());
    CHECK(derive(Derivation::OB, e2) == -(e2 * e2) - 5 * e4);
    CHECK(derive(Derivation::DJAC, e1) == r(1, 8) * dwp);
    CHECK(derive(Derivation::DELTA, e4) == 2 * e4);
    CHECK(derive(Derivation::DELTA, e1 + e4) == r(1, 2) * e1 + 2 * e4);
    CHECK(derive_n(Derivation::DZ, wp, 2) == 6 * (wp * wp - 5 * e4));
}

TEST_CASE("per-component derivations act weight by weight")
{
    const QJForm f = e1 + e4 * e2 + wp;
    CHECK(derive(Derivation::OB, f)
          == derive(Derivation::OB, e1) + derive(Derivation::OB, e4 * e2) + derive(Derivation::OB, wp));
}

TEST_CASE("Leibniz rule for every derivation")
{
    for (int i = 0; i < 40; ++i) {
        const QJForm f = random_any(), g = random_any();
        for (Derivation d : {Derivation::DZ, Derivation::DTAU, Derivation::OB, Derivation::DJAC, Derivation::DELTA})
            CHECK(derive(d, f * g) == derive(d, f) * g + f * derive(d, g));
    }
}

TEST_CASE("dz and dtau commute; half-weight commutator")
{
    for (int i = 0; i < 40; ++i) {
        const QJForm f = random_any(9);
        CHECK(derive(Derivation::DTAU, derive(Derivation::DZ, f)) == derive(Derivation::DZ, derive(Derivation::DTAU, f)));
        for (Derivation d : {Derivation::DTAU, Derivation::DJAC}) {
            const QJForm lhs = derive(Derivation::DELTA, derive(d, f)) - derive(d, derive(Derivation::DELTA, f));
            CHECK(lhs == derive(d, f));
        }
    }
}

TEST_CASE("weight shifts")
{
    CHECK(weight_shift(Derivation::DZ) == 1);
    CHECK(weight_shift(Derivation::DTAU) == 2);
    CHECK(weight_shift(Derivation::OB) == 2);
    CHECK(weight_shift(Derivation::DJAC) == 2);
    CHECK(weight_shift(Derivation::DELTA) == 0);
    CHECK(weight_shift(Bracket::RC_TAU, 3) == 6);
    CHECK(weight_shift(Bracket::RC_D, 2) == 4);
    CHECK(weight_shift(Bracket::TV, 3) == 9);
    for (int i = 0; i < 20; ++i) {
        const QJForm f = random_any(6), g = random_any(6);
        const int k = *f.homogeneous_weight(), l = *g.homogeneous_weight();
        for (Bracket b : {Bracket::RC_TAU, Bracket::RC_D, Bracket::TV})
            for (unsigned n = 0; n <= 3; ++n) {
                const QJForm h = bracket(b, f, g, n);
                if (!h.is_zero())
                    CHECK(h.homogeneous_weight() == k + l + weight_shift(b, n));
            }
    }
}

TEST_CASE("bracket examples")
{
    for (Bracket b : {Bracket::RC_TAU, Bracket::RC_D, Bracket::TV}) {
        CHECK(bracket(b, e4, e4, 1).is_zero());
        CHECK(bracket(b, wp, e1, 0) == wp * e1);
    }
    const QJForm rc = bracket(Bracket::RC_TAU, e4, wp, 1);
    CHECK(rc == -(e4 * e1 * dwp) + r(1, 5) * pow(wp, 4) - 5 * wp * wp * e4 + 20 * e4 * e4 - r(1, 20) * wp * dwp * dwp);
    CHECK(depth_of(rc) == DepthProfile{0, 1});
    // Direct formula at n = 1: k f D g - l D f g.
    CHECK(rc == 4 * e4 * derive(Derivation::DTAU, wp) - 2 * derive(Derivation::DTAU, e4) * wp);
    const QJForm rcd = bracket(Bracket::RC_D, e4, wp, 1);
    CHECK(rcd == r(1, 5) * pow(wp, 4) - 5 * wp * wp * e4 + 20 * e4 * e4 - r(1, 20) * wp * dwp * dwp);
    CHECK(member(rcd, Algebra::JS));
    CHECK(tv(e4, e6_form(), 1).is_zero());
    CHECK(tv(e2, e1, 1) == r(1, 4) * (e2 * e2 - 5 * e4) * (-wp - e2));
    CHECK(bracket(Bracket::RC_TAU, e4, e6_form(), 1) == 21 * e6_form() * e6_form() - r(60, 7) * pow(e4, 3));
}

TEST_CASE("bracket is bilinear over weight components")
{
    const QJForm f = e1 + wp, g = e4 + e2 * e1;
    for (Bracket b : {Bracket::RC_TAU, Bracket::RC_D, Bracket::TV})
        CHECK(bracket(b, f, g, 2)
              == bracket(b, e1, e4, 2) + bracket(b, e1, e2 * e1, 2) + bracket(b, wp, e4, 2) + bracket(b, wp, e2 * e1, 2));
}

TEST_CASE("bracket symmetry")
{
    for (int i = 0; i < 20; ++i) {
        const QJForm f = random_any(6), g = random_any(6);
        for (Bracket b : {Bracket::RC_TAU, Bracket::RC_D, Bracket::TV})
            for (unsigned n = 0; n <= 4; ++n) {
                const QJForm gf = bracket(b, g, f, n);
                CHECK(bracket(b, f, g, n) == (n % 2 == 0 ? gf : -gf));
            }
    }
}

TEST_CASE("transvectant recurrence examples")
{
    CHECK(transvectant_by_recurrence(wp, e1, 0) == wp * e1);
    CHECK(transvectant_by_recurrence(e4, wp, 1) == tv(e4, wp, 1));
    CHECK(transvectant_by_recurrence(e2, e2, 3).is_zero());
    for (int i = 0; i < 10; ++i) {
        const QJForm f = random_any(5), g = random_any(5);
        for (unsigned n = 0; n <= 4; ++n)
            CHECK(transvectant_by_recurrence(f, g, n) == tv(f, g, n));
    }
}

TEST_CASE("star product coefficients")
{
    CHECK(star_truncated(Bracket::TV, wp, e1, 0) == std::vector<QJForm>{wp * e1});
    CHECK(star_truncated(Bracket::TV, wp, e1, 1) == std::vector<QJForm>{wp * e1, tv(wp, e1, 1)});
    const auto s = star_truncated(Bracket::TV, wp, e1, 3);
    CHECK(s[3] == r(1, 6) * tv(wp, e1, 3));
    CHECK(star_truncated(Bracket::RC_TAU, wp, e1, 2)[2] == bracket(Bracket::RC_TAU, wp, e1, 2));
}

TEST_CASE("associativity witness with binomial weights")
{
    // sum C(n,r) {{f,g}_r,h}_{n-r} = sum C(n,r) {f,{g,h}_r}_{n-r}, written without the star helper.
    const QJForm f = wp, g = e1, h = e2;
    for (unsigned n = 0; n <= 3; ++n) {
        QJForm left, right;
        for (unsigned k = 0; k <= n; ++k) {
            const Rational c(binomial(n, k));
            left += c * tv(tv(f, g, k), h, n - k);
            right += c * tv(f, tv(g, h, k), n - k);
        }
        CHECK(left == right);
        const auto [a, b] = star_associator_sides(Bracket::TV, f, g, h, n);
        CHECK(a == b);
        CHECK(a * Rational(factorial(n)) == left);
    }
}

TEST_CASE("star associativity needs the factorial weights")
{
    // Without 1/n! the transvectant sequence is not associative.
    bool broken = false;
    for (int i = 0; i < 10 && !broken; ++i) {
        const QJForm f = random_any(4, 2), g = random_any(4, 2), h = random_any(4, 2);
        QJForm left, right;
        for (unsigned k = 0; k <= 2; ++k) {
            left += tv(tv(f, g, k), h, 2 - k);
            right += tv(f, tv(g, h, k), 2 - k);
        }
        broken = left != right;
    }
    CHECK(broken);
}

TEST_CASE("Rankin-Cohen star products are associative to order 3")
{
    for (int i = 0; i < 6; ++i) {
        const QJForm f = random_any(5, 2), g = random_any(5, 2), h = random_any(5, 2);
        for (Bracket b : {Bracket::RC_TAU, Bracket::RC_D})
            for (unsigned n = 0; n <= 3; ++n) {
                const auto [a, c] = star_associator_sides(b, f, g, h, n);
                CHECK(a == c);
            }
    }
}

TEST_CASE("stability examples")
{
    CHECK(check_stability(Algebra::JS, Derivation::OB).closed);
    const auto js0 = check_stability(Algebra::JS0inf, Derivation::DZ);
    CHECK_FALSE(js0.closed);
    CHECK(js0.witness == "e1");
    const auto jsi0 = check_stability(Algebra::JSinf0, Derivation::DTAU);
    CHECK_FALSE(jsi0.closed);
    CHECK(jsi0.witness == "wp");
    CHECK(check_stability(Algebra::Minf, Derivation::DTAU).closed);
    CHECK(check_stability(Algebra::M, Derivation::DTAU).witness == "e4");
}

TEST_CASE("bracket stability on small samples")
{
    for (int i = 0; i < 10; ++i) {
        const QJForm f = random_nonzero_form(rng(), 0, 6, monomial_generators(Algebra::JS0inf), 2);
        const QJForm g = random_nonzero_form(rng(), 0, 6, monomial_generators(Algebra::JS0inf), 2);
        const QJForm a = random_nonzero_form(rng(), 0, 6, monomial_generators(Algebra::JS), 2);
        const QJForm b = random_nonzero_form(rng(), 0, 6, monomial_generators(Algebra::JS), 2);
        const QJForm x = random_nonzero_form(rng(), 0, 6, monomial_generators(Algebra::JSinf0), 2);
        const QJForm y = random_nonzero_form(rng(), 0, 6, monomial_generators(Algebra::JSinf0), 2);
        for (unsigned n = 1; n <= 3; ++n) {
            CHECK(member(bracket(Bracket::RC_TAU, f, g, n), Algebra::JS0inf));
            CHECK(member(bracket(Bracket::RC_D, a, b, n), Algebra::JS));
            CHECK(member(tv(x, y, n), Algebra::JSinf0));
        }
    }
}

TEST_CASE("bracket and derivation names")
{
    CHECK(parse_bracket("RC") == Bracket::RC_TAU);
    CHECK(parse_bracket("rcd") == Bracket::RC_D);
    CHECK(parse_bracket("tv") == Bracket::TV);
    CHECK(parse_derivation("d") == Derivation::DJAC);
    CHECK(bracket_name(Bracket::RC_D) == "rcd");
    CHECK_THROWS_AS(parse_bracket("moyal"), DomainError);
}
