#include <doctest.h>

#include <cmath>
#include <complex>

#include "qjalg/differential.hpp"
#include "qjalg/series.hpp"

using namespace qjalg;

namespace {

const QJForm wp = QJForm::generator(Gen::WP);
const QJForm dwp = QJForm::generator(Gen::DWP);
const QJForm e4 = QJForm::generator(Gen::E4);
const QJForm e1 = QJForm::generator(Gen::EE1);
const QJForm e2 = QJForm::generator(Gen::EE2);

// The zeta-value constant terms: e_k / pi^k at q^0 is 2 zeta(k) / pi^k.
const Rational zeta2 = Rational(1, 3), zeta4 = Rational(1, 45), zeta6 = Rational(2, 945);

}  // namespace

TEST_CASE("Eisenstein q-series")
{
    const auto e2s = eisenstein_qseries(2, 4);
    CHECK(e2s.weight() == 2);
    CHECK(e2s.coeff(0, 0) == zeta2);
    CHECK(e2s.coeff(1, 0) == -8);
    CHECK(e2s.coeff(2, 0) == -24);
    const auto e4s = eisenstein_qseries(4, 3);
    CHECK(e4s.coeff(0, 0) == zeta4);
    CHECK(e4s.coeff(1, 0) == Rational(16, 3));  // 1/45 * 240
    const auto e6s = eisenstein_qseries(6, 3);
    CHECK(e6s.coeff(0, 0) == zeta6);
    CHECK(e6s.coeff(2, 0) == zeta6 * -504 * 33);
    CHECK_THROWS_AS(eisenstein_qseries(3, 3), DomainError);
}

TEST_CASE("expand examples")
{
    const auto p = expand(wp, 1, 2);
    CHECK(p.weight() == 2);
    CHECK(p.u_val() == -2);
    CHECK(p.coeff(0, -2) == 1);
    CHECK(p.coeff(0, 0) == 0);
    CHECK(p.coeff(0, 2) == Rational(1, 15));
    const auto one = expand(QJForm(1), 3, 4);
    CHECK(one.coeff(0, 0) == 1);
    CHECK(one.coeff(1, 0) == 0);
    CHECK(one.coeff(0, 2) == 0);
    const auto z = expand(e1, 2, 3);
    CHECK(z.coeff(0, -1) == 1);
    CHECK(z.coeff(0, 1) == -zeta2);
    CHECK(z.coeff(1, 1) == 8);
    CHECK_THROWS_AS(expand(wp + e4, 2, 4), DomainError);
    CHECK(expand(QJForm(), 2, 4).is_zero());
}

TEST_CASE("Weierstrass equation vanishes on series")
{
    const QJForm ode = dwp * dwp - 4 * pow(wp, 3) + 60 * e4 * wp + 140 * e6_form();
    CHECK(ode.is_zero());
    // Check the relation from the series themselves, independent of the form algebra.
    const int q = 6, top = 14;
    const auto P = expand(wp, q, top), DP = expand(dwp, q, top);
    const auto E4 = lift_constant(eisenstein_qseries(4, q), top), E6 = lift_constant(eisenstein_qseries(6, q), top);
    const auto lhs = series_mul(DP, DP);
    const auto rhs = series_sub(series_sub(series_mul(P, series_mul(P, P)).scaled(4), series_mul(E4, P).scaled(60)),
                                E6.scaled(140));
    CHECK(series_equal(lhs, rhs, 4));
}

TEST_CASE("series arithmetic basics")
{
    const auto a = expand(e4, 3, 4), b = expand(e2 * e2, 3, 4);
    const auto s = series_add(a, b);
    CHECK(s.coeff(0, 0) == zeta4 + zeta2 * zeta2);
    CHECK(series_equal(series_sub(s, b), a, 4));
    const auto one = BigradedSeries::constant(1, 3, 4);
    CHECK(series_equal(series_mul(one, a), a, 4));
    CHECK_THROWS(series_add(a, expand(e2, 3, 4)));
}

TEST_CASE("series derivations match the generator table")
{
    const int q = 5, top = 10;
    CHECK(series_equal(series_derive(SeriesDerivation::DU, expand(e1, q, top + 1)), expand(-wp - e2, q, top), 8));
    CHECK(series_derive(SeriesDerivation::DU, expand(e1, q, top)).weight() == 2);
    const auto qe2 = series_derive(SeriesDerivation::QDQ, expand(e2, q, top));
    CHECK(qe2.weight() == 4);
    CHECK(series_equal(qe2, expand(derive(Derivation::DTAU, e2), q, top), 8));
    CHECK(series_derive(SeriesDerivation::QDQ, BigradedSeries::constant(3, q, top)).is_zero());
    for (Gen g : {Gen::WP, Gen::DWP, Gen::E4, Gen::EE1, Gen::EE2}) {
        const QJForm x = QJForm::generator(g);
        CHECK(series_equal(series_derive(SeriesDerivation::QDQ, expand(x, q, top)),
                           expand(derive(Derivation::DTAU, x), q, top), 8));
    }
}

TEST_CASE("series_equal needs a common window")
{
    const BigradedSeries a(2, 3, 0, 3), b(2, 3, 5, 9);
    CHECK_THROWS_AS(series_equal(a, b, 2), PrecisionError);
    const auto p = expand(wp, 3, 6);
    CHECK_THROWS_AS(series_equal(p, p, 20), PrecisionError);
    CHECK(series_equal(p, p, 4));
    // Different weights compare equal only when both sides vanish.
    CHECK(series_equal(BigradedSeries(2, 3, 0, 6), BigradedSeries(4, 3, 0, 6), 4));
    CHECK_FALSE(series_equal(expand(e2, 3, 6), expand(e4, 3, 6), 4));
    CHECK_THROWS_AS(p.coeff(0, 7), PrecisionError);
    CHECK(p.coeff(0, -5) == 0);
}

TEST_CASE("expand is a ring homomorphism")
{
    const int q = 4, top = 8;
    const QJForm f = wp * e1 + e2 * e1 - dwp, g = e4 + wp * wp;
    CHECK(series_equal(expand(f * g, q, top), series_mul(expand(f, q, top + 4), expand(g, q, top + 4)), 6));
    CHECK(series_equal(expand(f + 2 * e1 * e2, q, top),
                       series_add(expand(f, q, top), expand(2 * e1 * e2, q, top)), 6));
}

TEST_CASE("numeric evaluation")
{
    const std::complex<double> tau(0, 2), z(0.1, 0.05);
    const QJForm ode = dwp * dwp - 4 * pow(wp, 3) + 60 * e4 * wp;
    const auto lhs = eval_numeric(ode, tau, z, 12, 16);
    const auto rhs = eval_numeric(-140 * e6_form(), tau, z, 12, 16);
    CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(eval_numeric(QJForm(1), tau, z, 4, 4) - 1.0) < 1e-12);
    // z^2 wp -> 1 as z -> 0.
    const std::complex<double> small(1e-3, 0);
    CHECK(std::abs(small * small * eval_numeric(wp, tau, small, 8, 12) - 1.0) < 1e-5);
    // e4 at large Im tau is close to 2 zeta(4).
    const double two_zeta4 = 2 * std::pow(M_PI, 4) / 90;
    CHECK(std::abs(eval_numeric(e4, std::complex<double>(0, 6), z, 8, 8) - two_zeta4) < 1e-6);
    CHECK_THROWS_AS(eval_numeric(wp, std::complex<double>(1, -1), z, 4, 4), DomainError);
    CHECK_THROWS_AS(eval_numeric(wp, tau, 0.0, 4, 4), DomainError);
    CHECK_THROWS_AS(eval_numeric(wp, tau, 0.9, 4, 4), DomainError);
}
