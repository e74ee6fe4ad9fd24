#include "qjalg/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace qjalg {

BigradedSeries::BigradedSeries(int weight, int q_prec, int u_val, int u_max)
    : weight_(weight), q_prec_(q_prec), u_val_(u_val), u_max_(u_max)
{
    if (q_prec < 1)
        throw PrecisionError("series needs q_prec >= 1");
    if (u_max < u_val)
        throw PrecisionError("empty u-window");
    coeffs_.assign(static_cast<std::size_t>(q_prec) * static_cast<std::size_t>(u_max - u_val + 1), Rational(0));
}

BigradedSeries BigradedSeries::constant(const Rational& value, int q_prec, int u_max)
{
    BigradedSeries s(0, q_prec, 0, std::max(u_max, 0));
    s.set(0, 0, value);
    return s;
}

const Rational& BigradedSeries::coeff(int m, int n) const
{
    static const Rational zero(0);
    if (m >= 0 && m < q_prec_ && n < u_val_)
        return zero;
    if (!in_window(m, n))
        throw PrecisionError("coefficient (" + std::to_string(m) + ", " + std::to_string(n) + ") outside window");
    return coeffs_[index(m, n)];
}

void BigradedSeries::set(int m, int n, const Rational& value)
{
    if (!in_window(m, n))
        throw PrecisionError("cannot store a coefficient outside the window");
    coeffs_[index(m, n)] = value;
}

void BigradedSeries::add_to(int m, int n, const Rational& value)
{
    if (!in_window(m, n))
        throw PrecisionError("cannot store a coefficient outside the window");
    coeffs_[index(m, n)] += value;
}

bool BigradedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

BigradedSeries BigradedSeries::truncated(int q_prec, int u_max) const
{
    if (q_prec > q_prec_ || u_max > u_max_)
        throw PrecisionError("truncation cannot widen a window");
    BigradedSeries out(weight_, q_prec, u_val_, std::max(u_max, u_val_));
    for (int m = 0; m < q_prec; ++m)
        for (int n = u_val_; n <= u_max; ++n)
            out.coeffs_[out.index(m, n)] = coeffs_[index(m, n)];
    return out;
}

BigradedSeries BigradedSeries::operator-() const
{
    return scaled(-1);
}

BigradedSeries BigradedSeries::scaled(const Rational& r) const
{
    BigradedSeries out = *this;
    for (auto& c : out.coeffs_)
        c *= r;
    return out;
}

BigradedSeries series_add(const BigradedSeries& a, const BigradedSeries& b)
{
    if (a.weight() != b.weight())
        throw DomainError("series_add: weight mismatch");
    const int q_prec = std::min(a.q_prec(), b.q_prec());
    const int u_val = std::min(a.u_val(), b.u_val());
    const int u_max = std::min(a.u_max(), b.u_max());
    if (u_max < u_val)
        throw PrecisionError("series_add: disjoint windows");
    BigradedSeries out(a.weight(), q_prec, u_val, u_max);
    for (int m = 0; m < q_prec; ++m)
        for (int n = u_val; n <= u_max; ++n)
            out.coeffs_[out.index(m, n)] = a.coeff(m, n) + b.coeff(m, n);
    return out;
}

BigradedSeries series_sub(const BigradedSeries& a, const BigradedSeries& b)
{
    return series_add(a, -b);
}

BigradedSeries series_mul(const BigradedSeries& a, const BigradedSeries& b)
{
    const int q_prec = std::min(a.q_prec(), b.q_prec());
    const int u_val = a.u_val() + b.u_val();
    const int u_max = std::min(a.u_val() + b.u_max(), b.u_val() + a.u_max());
    if (u_max < u_val)
        throw PrecisionError("series_mul: empty product window");
    BigradedSeries out(a.weight() + b.weight(), q_prec, u_val, u_max);
    Rational scratch;
    for (int m1 = 0; m1 < q_prec; ++m1) {
        for (int n1 = a.u_val(); n1 <= a.u_max() && n1 + b.u_val() <= u_max; ++n1) {
            const Rational& ca = a.coeffs_[a.index(m1, n1)];
            if (sgn(ca) == 0)
                continue;
            for (int m2 = 0; m1 + m2 < q_prec; ++m2) {
                for (int n2 = b.u_val(); n2 <= b.u_max() && n1 + n2 <= u_max; ++n2) {
                    const Rational& cb = b.coeffs_[b.index(m2, n2)];
                    if (sgn(cb) == 0)
                        continue;
                    mpq_mul(scratch.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                    auto& target = out.coeffs_[out.index(m1 + m2, n1 + n2)];
                    target += scratch;
                }
            }
        }
    }
    return out;
}

BigradedSeries series_derive(SeriesDerivation which, const BigradedSeries& a)
{
    if (which == SeriesDerivation::DU) {
        BigradedSeries out(a.weight() + 1, a.q_prec(), a.u_val() - 1, a.u_max() - 1);
        for (int m = 0; m < a.q_prec(); ++m)
            for (int n = a.u_val(); n <= a.u_max(); ++n)
                if (n != 0 && sgn(a.coeff(m, n)) != 0)
                    out.set(m, n - 1, a.coeff(m, n) * n);
        return out;
    }
    BigradedSeries out(a.weight() + 2, a.q_prec(), a.u_val(), a.u_max());
    for (int m = 1; m < a.q_prec(); ++m)
        for (int n = a.u_val(); n <= a.u_max(); ++n)
            if (sgn(a.coeff(m, n)) != 0)
                out.set(m, n, a.coeff(m, n) * m);
    return out;
}

bool series_equal(const BigradedSeries& a, const BigradedSeries& b, int min_window)
{
    const int overlap = std::min(a.u_max(), b.u_max()) - std::max(a.u_val(), b.u_val()) + 1;
    if (overlap < min_window)
        throw PrecisionError("series_equal: windows overlap on " + std::to_string(std::max(overlap, 0))
                             + " u-exponents, need " + std::to_string(min_window));
    const int q_prec = std::min(a.q_prec(), b.q_prec());
    const int lo = std::min(a.u_val(), b.u_val());
    const int hi = std::min(a.u_max(), b.u_max());
    bool a_zero = true, b_zero = true, same = true;
    for (int m = 0; m < q_prec; ++m) {
        for (int n = lo; n <= hi; ++n) {
            const Rational& x = a.coeff(m, n);
            const Rational& y = b.coeff(m, n);
            a_zero = a_zero && sgn(x) == 0;
            b_zero = b_zero && sgn(y) == 0;
            same = same && x == y;
        }
    }
    if (a.weight() != b.weight())
        return a_zero && b_zero;
    return same;
}

// ---------------------------------------------------------------- expansions

BigradedSeries eisenstein_qseries(int k, int q_prec)
{
    if (k < 2 || k % 2 != 0)
        throw DomainError("eisenstein_qseries: k must be even and >= 2");
    if (q_prec < 1)
        throw DomainError("eisenstein_qseries: q_prec must be >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, BigradedSeries> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({k, q_prec});
        if (it != cache.end())
            return it->second;
    }
    const Rational bk = bernoulli(static_cast<unsigned>(k));
    BigInt two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    const Rational lead = Rational(two_k) * abs(bk) / Rational(factorial(static_cast<unsigned>(k)));
    const Rational ratio = -Rational(2 * k) / bk;
    BigradedSeries s(k, q_prec, 0, 0);
    s.set(0, 0, lead);
    for (int n = 1; n < q_prec; ++n)
        s.set(n, 0, lead * ratio * Rational(sigma(static_cast<unsigned>(k), static_cast<std::uint64_t>(n))));
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::make_pair(k, q_prec), s);
    return s;
}

BigradedSeries lift_constant(const BigradedSeries& s, int u_max)
{
    if (s.u_val() != 0 || s.u_max() != 0)
        throw DomainError("lift_constant: series must live on the window [0, 0]");
    BigradedSeries out(s.weight(), s.q_prec(), 0, std::max(u_max, 0));
    for (int m = 0; m < s.q_prec(); ++m)
        out.set(m, 0, s.coeff(m, 0));
    return out;
}

namespace {

/// wp / pi^2 = u^-2 + sum_{n>=1} (2n+1) e_{2n+2} u^{2n}
BigradedSeries wp_series(int q_prec, int top)
{
    BigradedSeries s(2, q_prec, -2, std::max(top, -2));
    s.set(0, -2, 1);
    for (int n = 1; 2 * n <= top; ++n) {
        const BigradedSeries e = eisenstein_qseries(2 * n + 2, q_prec);
        for (int m = 0; m < q_prec; ++m)
            s.set(m, 2 * n, e.coeff(m, 0) * (2 * n + 1));
    }
    return s;
}

/// E1 / pi = u^-1 - sum_{n>=0} e_{2n+2} u^{2n+1}
BigradedSeries e1_series(int q_prec, int top)
{
    BigradedSeries s(1, q_prec, -1, std::max(top, -1));
    s.set(0, -1, 1);
    for (int n = 0; 2 * n + 1 <= top; ++n) {
        const BigradedSeries e = eisenstein_qseries(2 * n + 2, q_prec);
        for (int m = 0; m < q_prec; ++m)
            s.set(m, 2 * n + 1, -e.coeff(m, 0));
    }
    return s;
}

BigradedSeries constant_in_u(int k, int q_prec, int top)
{
    return lift_constant(eisenstein_qseries(k, q_prec), top);
}

BigradedSeries generator_series(Gen g, int q_prec, int top)
{
    switch (g) {
    case Gen::WP: return wp_series(q_prec, top);
    case Gen::DWP: return series_derive(SeriesDerivation::DU, wp_series(q_prec, top + 1));
    case Gen::E4: return constant_in_u(4, q_prec, top);
    case Gen::EE1: return e1_series(q_prec, top);
    case Gen::EE2: return constant_in_u(2, q_prec, top);
    }
    throw DomainError("unknown generator");
}

int generator_valuation(Gen g)
{
    switch (g) {
    case Gen::WP: return -2;
    case Gen::DWP: return -3;
    case Gen::EE1: return -1;
    default: return 0;
    }
}

}  // namespace

BigradedSeries expand(const QJForm& f, int q_prec, int u_max)
{
    if (q_prec < 1)
        throw DomainError("expand: q_prec must be >= 1");
    if (f.is_zero())
        return BigradedSeries(0, q_prec, 0, std::max(u_max, 0));
    const auto weight = f.homogeneous_weight();
    if (!weight)
        throw DomainError("expand: form is not weight-homogeneous");

    // Generator series up to top = u_max - (lowest monomial valuation) make every
    // monomial product valid up to u_max.
    int lowest = 0;
    for (const auto& [m, c] : f.terms()) {
        int v = 0;
        for (Gen g : kAllGenerators)
            v += generator_valuation(g) * static_cast<int>(m.exponent(g));
        lowest = std::min(lowest, v);
    }
    if (u_max < lowest)
        throw PrecisionError("expand: u_max below the valuation of the form");
    const int top = u_max - lowest;

    std::map<std::pair<Gen, unsigned>, BigradedSeries> powers;
    auto power = [&](Gen g, unsigned p) -> const BigradedSeries& {
        if (auto it = powers.find({g, p}); it != powers.end())
            return it->second;
        unsigned have = 1;
        if (powers.find({g, 1}) == powers.end())
            powers.emplace(std::make_pair(g, 1u), generator_series(g, q_prec, top));
        while (powers.count({g, have + 1}))
            ++have;
        for (; have < p; ++have)
            powers.emplace(std::make_pair(g, have + 1),
                           series_mul(powers.at({g, have}), powers.at({g, 1})));
        return powers.at({g, p});
    };

    BigradedSeries out(*weight, q_prec, lowest, u_max);
    for (const auto& [m, c] : f.terms()) {
        BigradedSeries term = BigradedSeries::constant(1, q_prec, top);
        for (Gen g : kAllGenerators)
            if (const unsigned p = m.exponent(g); p > 0)
                term = series_mul(term, power(g, p));
        if (term.u_max() < u_max)
            throw InconsistencyError("expand: product window fell short of u_max");
        for (int mq = 0; mq < q_prec; ++mq)
            for (int n = term.u_val(); n <= u_max; ++n)
                if (const Rational& x = term.coeff(mq, n); sgn(x) != 0)
                    out.add_to(mq, n, x * c);
    }
    return out;
}

std::complex<double> eval_numeric(const QJForm& f, std::complex<double> tau, std::complex<double> z, int q_prec,
                                  int u_max)
{
    if (!(tau.imag() > 0))
        throw DomainError("eval_numeric: Im(tau) must be positive");
    const double bound = std::min(1.0, std::abs(tau)) / 2;
    if (!(std::abs(z) > 0) || !(std::abs(z) < bound))
        throw DomainError("eval_numeric: need 0 < |z| < min(1, |tau|)/2");
    const double pi = std::numbers::pi;
    const std::complex<double> q = std::exp(std::complex<double>(0, 2 * pi) * tau);
    const std::complex<double> u = pi * z;
    std::complex<double> total = 0;
    for (const auto& [k, component] : weight_components(f)) {
        const BigradedSeries s = expand(component, q_prec, u_max);
        std::complex<double> sum = 0;
        for (int m = 0; m < s.q_prec(); ++m)
            for (int n = s.u_val(); n <= s.u_max(); ++n)
                if (const Rational& c = s.coeff(m, n); sgn(c) != 0)
                    sum += c.get_d() * std::pow(q, m) * std::pow(u, n);
        total += std::pow(pi, k) * sum;
    }
    return total;
}

}  // namespace qjalg
