#include "qjalg/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "qjalg/dimensions.hpp"
#include "qjalg/series.hpp"

namespace qjalg {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

CheckResult timed(std::string name, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    CheckResult r;
    r.name = std::move(name);
    try {
        Outcome o = body();
        r.ok = o.ok;
        r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::string clip(std::string s)
{
    constexpr std::size_t kMax = 240;
    if (s.size() > kMax)
        s = s.substr(0, kMax) + "...";
    return s;
}

std::string show(const QJForm& f) { return clip(render(f)); }

/// Counts failures and keeps the first message.
struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first;

    void expect(bool ok, const std::function<std::string()>& why)
    {
        ++checked;
        if (!ok && failed++ == 0)
            first = why();
    }
    Outcome outcome(const std::string& what) const
    {
        if (failed == 0)
            return {true, std::to_string(checked) + " " + what};
        return {false, std::to_string(failed) + "/" + std::to_string(checked) + " failed; first: " + first};
    }
};

QJForm gen(Gen g) { return QJForm::generator(g); }

QJForm dz(const QJForm& f) { return derive(Derivation::DZ, f); }
QJForm dtau(const QJForm& f) { return derive(Derivation::DTAU, f); }
QJForm ob(const QJForm& f) { return derive(Derivation::OB, f); }

/// Q-coefficient form; zero for negative indices.
QJForm qform(const QJForm& f, int j1, int j2)
{
    if (j1 < 0 || j2 < 0)
        return {};
    return q_coefficient(f, static_cast<unsigned>(j1), static_cast<unsigned>(j2)).form;
}

int weight_or_zero(const QJForm& f) { return f.homogeneous_weight().value_or(0); }

const std::array<Gen, 5> kAll{Gen::WP, Gen::DWP, Gen::E4, Gen::EE1, Gen::EE2};
const std::array<Gen, 3> kJS{Gen::WP, Gen::DWP, Gen::E4};
const std::array<Gen, 4> kJS0inf{Gen::WP, Gen::DWP, Gen::E4, Gen::EE1};
const std::array<Gen, 4> kJSinf0{Gen::WP, Gen::DWP, Gen::E4, Gen::EE2};

// ---------------------------------------------------------------- series helpers

struct SeriesCtx {
    int q_prec;
    int top;

    BigradedSeries of(Gen g) const { return expand(gen(g), q_prec, top); }
    BigradedSeries eis(int k) const { return lift_constant(eisenstein_qseries(k, q_prec), top); }
};

BigradedSeries operator+(const BigradedSeries& a, const BigradedSeries& b) { return series_add(a, b); }
BigradedSeries operator-(const BigradedSeries& a, const BigradedSeries& b) { return series_sub(a, b); }
BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b) { return series_mul(a, b); }
BigradedSeries operator*(const Rational& r, const BigradedSeries& a) { return a.scaled(r); }
BigradedSeries du(const BigradedSeries& a) { return series_derive(SeriesDerivation::DU, a); }
BigradedSeries qdq(const BigradedSeries& a) { return series_derive(SeriesDerivation::QDQ, a); }

/// 4 qd/dq + E1 d/du - k e2 on series.
BigradedSeries ob_series(const SeriesCtx& s, const BigradedSeries& f)
{
    BigradedSeries out = Rational(4) * qdq(f) - Rational(f.weight()) * (s.eis(2) * f);
    BigradedSeries tail = s.of(Gen::EE1) * du(f);
    return out + tail;
}

bool series_matches(const BigradedSeries& lhs, const QJForm& rhs, int q_prec, int window)
{
    const BigradedSeries r = expand(rhs, q_prec, window);
    return series_equal(lhs, r, window);
}

struct Identity {
    std::string name;
    QJForm lhs;  // computed with the derivation tables
    QJForm rhs;
    std::function<BigradedSeries(const SeriesCtx&)> lhs_series;
};

std::vector<Identity> identity_battery()
{
    const QJForm wp = gen(Gen::WP), dwp = gen(Gen::DWP), e4 = gen(Gen::E4), e1 = gen(Gen::EE1),
                 e2 = gen(Gen::EE2);
    const QJForm& e6 = e6_form();
    auto r = [](long n, long d) { return make_rational(n, d); };
    std::vector<Identity> out;
    out.push_back({"-4 dtau(wp)", -4 * dtau(wp), e1 * dwp + 2 * wp * wp - 2 * e2 * wp - 20 * e4,
                   [](const SeriesCtx& s) { return Rational(-4) * qdq(s.of(Gen::WP)); }});
    out.push_back({"ob(wp)", ob(wp), -2 * (wp * wp - 10 * e4),
                   [](const SeriesCtx& s) { return ob_series(s, s.of(Gen::WP)); }});
    out.push_back({"dtau(e4) through e6", dtau(e4), e4 * e2 - r(7, 2) * e6,
                   [](const SeriesCtx& s) { return qdq(s.eis(4)); }});
    out.push_back({"dtau(e4)", dtau(e4),
                   r(-1, 10) * pow(wp, 3) + r(1, 40) * dwp * dwp + r(3, 2) * wp * e4 + e4 * e2,
                   [](const SeriesCtx& s) { return qdq(s.eis(4)); }});
    out.push_back({"dtau(e6)", dtau(e6), r(3, 2) * e6 * e2 - r(15, 7) * e4 * e4,
                   [](const SeriesCtx& s) { return qdq(s.eis(6)); }});
    out.push_back({"ob(e4) = -14 e6", ob(e4), -14 * e6,
                   [](const SeriesCtx& s) { return ob_series(s, s.eis(4)); }});
    out.push_back({"ob(e4)", ob(e4), r(-2, 5) * pow(wp, 3) + 6 * wp * e4 + r(1, 10) * dwp * dwp,
                   [](const SeriesCtx& s) { return ob_series(s, s.eis(4)); }});
    out.push_back({"dz^2(wp)", dz(dz(wp)), 6 * (wp * wp - 5 * e4),
                   [](const SeriesCtx& s) { return du(du(s.of(Gen::WP))); }});
    out.push_back({"dtau(dwp)", dtau(dwp), r(3, 2) * (5 * e4 - wp * wp) * e1 + r(3, 4) * (e2 - wp) * dwp,
                   [](const SeriesCtx& s) { return qdq(du(s.of(Gen::WP))); }});
    out.push_back({"ob(dwp)", ob(dwp), -3 * wp * dwp,
                   [](const SeriesCtx& s) { return ob_series(s, du(s.of(Gen::WP))); }});
    out.push_back({"ob(e1)", ob(e1), r(1, 2) * dwp - e1 * e2,
                   [](const SeriesCtx& s) { return ob_series(s, s.of(Gen::EE1)); }});
    out.push_back({"4 dtau(e1)", 4 * dtau(e1), e1 * e2 + wp * e1 + r(1, 2) * dwp,
                   [](const SeriesCtx& s) { return Rational(4) * qdq(s.of(Gen::EE1)); }});
    out.push_back({"ob(e2)", ob(e2), -(e2 * e2) - 5 * e4,
                   [](const SeriesCtx& s) { return ob_series(s, s.eis(2)); }});
    out.push_back({"dtau(e2)", dtau(e2), r(1, 4) * (e2 * e2 - 5 * e4),
                   [](const SeriesCtx& s) { return qdq(s.eis(2)); }});
    out.push_back({"dz(e1)", dz(e1), -wp - e2, [](const SeriesCtx& s) { return du(s.of(Gen::EE1)); }});
    out.push_back({"d(e1)", derive(Derivation::DJAC, e1), r(1, 8) * dwp, [](const SeriesCtx& s) {
                       const BigradedSeries x = s.of(Gen::EE1);
                       return qdq(x) + Rational(1, 4) * (x * du(x));
                   }});
    out.push_back({"weierstrass equation", dwp * dwp - 4 * pow(wp, 3) + 60 * e4 * wp + 140 * e6, QJForm(),
                   [](const SeriesCtx& s) {
                       const BigradedSeries p = s.of(Gen::WP);
                       const BigradedSeries dp = du(p);
                       return dp * dp - Rational(4) * (p * p * p) + Rational(60) * (s.eis(4) * p)
                              + Rational(140) * s.eis(6);
                   }});
    return out;
}

}  // namespace

// ---------------------------------------------------------------- random data

std::span<const Gen> monomial_generators(Algebra a)
{
    switch (a) {
    case Algebra::JS: return kJS;
    case Algebra::JS0inf: return kJS0inf;
    case Algebra::JSinf0: return kJSinf0;
    case Algebra::JSinf: return kAll;
    default: throw DomainError("monomial_generators: M and Minf are not monomial subalgebras");
    }
}

QJForm random_form(std::mt19937_64& rng, int weight, std::span<const Gen> allowed, int max_terms)
{
    std::vector<Monomial> basis = monomials_of_weight(weight, allowed);
    if (basis.empty())
        return {};
    std::shuffle(basis.begin(), basis.end(), rng);
    std::uniform_int_distribution<int> terms_dist(1, std::max(1, max_terms));
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 4);
    const std::size_t n = std::min<std::size_t>(basis.size(), static_cast<std::size_t>(terms_dist(rng)));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
        int num = 0;
        while (num == 0)
            num = num_dist(rng);
        terms.emplace_back(basis[i], make_rational(num, den_dist(rng)));
    }
    return QJForm::from_terms(std::move(terms));
}

QJForm random_nonzero_form(std::mt19937_64& rng, int min_weight, int max_weight, std::span<const Gen> allowed,
                           int max_terms)
{
    std::uniform_int_distribution<int> weight_dist(min_weight, max_weight);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QJForm f = random_form(rng, weight_dist(rng), allowed, max_terms);
        if (!f.is_zero())
            return f;
    }
    throw DomainError("random_nonzero_form: no nonzero weight space in range");
}

// ---------------------------------------------------------------- identities

CheckResult check_identity_battery_exact()
{
    return timed("identity battery (exact)", [] {
        Tally t;
        for (const auto& id : identity_battery())
            t.expect(id.lhs == id.rhs,
                     [&] { return id.name + ": got " + show(id.lhs) + ", expected " + show(id.rhs); });
        return t.outcome("identities hold exactly");
    });
}

CheckResult check_identity_battery_series(int q_prec, int window)
{
    return timed("identity battery (series oracle)", [=] {
        const SeriesCtx ctx{q_prec, window + 8};
        Tally t;
        for (const auto& id : identity_battery()) {
            const BigradedSeries lhs = id.lhs_series(ctx);
            bool ok;
            if (id.rhs.is_zero()) {
                ok = lhs.truncated(q_prec, std::min(lhs.u_max(), window)).is_zero()
                     && lhs.u_max() - lhs.u_val() + 1 >= window;
            } else {
                ok = series_matches(lhs, id.rhs, q_prec, window);
            }
            t.expect(ok, [&] { return id.name + " differs from its expansion"; });
        }
        return t.outcome("identities hold on q^" + std::to_string(q_prec) + ", window " + std::to_string(window));
    });
}

// ---------------------------------------------------------------- structure

std::vector<CheckResult> check_structure(const VerifyOptions& o)
{
    std::mt19937_64 rng(o.seed ^ 0x51);
    std::vector<QJForm> forms, partners;
    for (int i = 0; i < o.structure_forms; ++i) {
        forms.push_back(random_nonzero_form(rng, 0, o.structure_max_weight, kAll));
        partners.push_back(random_nonzero_form(rng, 0, o.structure_max_weight / 2, kAll, 3));
    }
    std::vector<CheckResult> out;
    out.push_back(timed("depth additivity", [&] {
        Tally t;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const auto& f = forms[i];
            const auto& g = partners[i];
            t.expect(depth_of(f * g) == depth_of(f) + depth_of(g), [&] { return show(f) + " times " + show(g); });
        }
        return t.outcome("products");
    }));
    out.push_back(timed("Q product rule", [&] {
        Tally t;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const auto& f = forms[i];
            const auto& g = partners[i];
            const QJForm fg = f * g;
            const DepthProfile d = depth_of(fg);
            for (int a = 0; a <= static_cast<int>(d.s1) + 1; ++a) {
                for (int b = 0; b <= static_cast<int>(d.s2) + 1; ++b) {
                    QJForm sum;
                    for (int al = 0; al <= a; ++al)
                        for (int ga = 0; ga <= b; ++ga)
                            sum += qform(f, al, ga) * qform(g, a - al, b - ga);
                    t.expect(qform(fg, a, b) == sum, [&] {
                        return "Q_" + std::to_string(a) + "," + std::to_string(b) + " of " + show(f) + " * " + show(g);
                    });
                }
            }
        }
        return t.outcome("coefficient identities");
    }));
    out.push_back(timed("Q of z-derivative", [&] {
        Tally t;
        for (const auto& f : forms) {
            const DepthProfile d = depth_of(f);
            const QJForm df = dz(f);
            for (int j1 = 0; j1 <= static_cast<int>(d.s1) + 1; ++j1)
                for (int j2 = 0; j2 <= static_cast<int>(d.s2) + 1; ++j2)
                    t.expect(qform(df, j1, j2) == dz(qform(f, j1, j2)) + (j2 + 1) * qform(f, j1 - 1, j2 + 1),
                             [&] { return show(f) + " at " + std::to_string(j1) + "," + std::to_string(j2); });
        }
        return t.outcome("coefficient identities");
    }));
    out.push_back(timed("Q of tau-derivative", [&] {
        Tally t;
        for (const auto& f : forms) {
            const int k = weight_or_zero(f);
            const DepthProfile d = depth_of(f);
            const QJForm df = dtau(f);
            for (int j1 = 0; j1 <= static_cast<int>(d.s1) + 1; ++j1)
                for (int j2 = 0; j2 <= static_cast<int>(d.s2) + 1; ++j2) {
                    const QJForm lhs = -4 * qform(df, j1, j2);
                    const QJForm rhs = -4 * dtau(qform(f, j1, j2)) + dz(qform(f, j1, j2 - 1))
                                       + (k - j1 + 1) * qform(f, j1 - 1, j2);
                    t.expect(lhs == rhs,
                             [&] { return show(f) + " at " + std::to_string(j1) + "," + std::to_string(j2); });
                }
        }
        return t.outcome("coefficient identities");
    }));
    out.push_back(timed("Q of Oberdieck derivative", [&] {
        Tally t;
        const QJForm e1 = gen(Gen::EE1), e2 = gen(Gen::EE2);
        for (const auto& f : forms) {
            const int k = weight_or_zero(f);
            const DepthProfile d = depth_of(f);
            const QJForm of = ob(f);
            for (int j1 = 0; j1 <= static_cast<int>(d.s1) + 1; ++j1)
                for (int j2 = 0; j2 <= static_cast<int>(d.s2) + 1; ++j2) {
                    const QJForm q = qform(f, j1, j2);
                    const QJForm rhs = 4 * dtau(q) + e1 * dz(q) - k * (e2 * q)
                                       + (j1 + j2 - 1) * qform(f, j1 - 1, j2)
                                       + (j2 + 1) * (e1 * qform(f, j1 - 1, j2 + 1));
                    t.expect(qform(of, j1, j2) == rhs,
                             [&] { return show(f) + " at " + std::to_string(j1) + "," + std::to_string(j2); });
                }
        }
        return t.outcome("coefficient identities");
    }));
    out.push_back(timed("leading Q-coefficient is a Jacobi form", [&] {
        Tally t;
        for (const auto& f : forms) {
            const int k = weight_or_zero(f);
            const DepthProfile d = depth_of(f);
            const QJForm lead = qform(f, static_cast<int>(d.s1), static_cast<int>(d.s2));
            const int expected = k - 2 * static_cast<int>(d.s1) - static_cast<int>(d.s2);
            const bool ok = lead.is_zero()
                            || (member(lead, Algebra::JS) && lead.homogeneous_weight() == expected);
            t.expect(ok, [&] { return show(f) + " gives " + show(lead); });
        }
        return t.outcome("forms");
    }));
    out.push_back(timed("Q vanishing beyond depth", [&] {
        Tally t;
        for (const auto& f : forms) {
            const DepthProfile d = depth_of(f);
            const int s1 = static_cast<int>(d.s1), s2 = static_cast<int>(d.s2);
            t.expect(qform(f, s1 + 1, 0).is_zero() && qform(f, 0, s2 + 1).is_zero()
                         && qform(f, s1 + 1, s2 + 1).is_zero(),
                     [&] { return show(f); });
        }
        return t.outcome("forms");
    }));
    return out;
}

// ---------------------------------------------------------------- stability

CheckResult check_stability_matrix()
{
    return timed("stability matrix", [] {
        struct Cell {
            Algebra algebra;
            Derivation d;
            bool closed;
            const char* witness;
        };
        const std::array<Cell, 18> cells{{
            {Algebra::M, Derivation::DZ, true, ""},        {Algebra::M, Derivation::DTAU, false, "e4"},
            {Algebra::M, Derivation::OB, true, ""},        {Algebra::JS, Derivation::DZ, true, ""},
            {Algebra::JS, Derivation::DTAU, false, "wp"},  {Algebra::JS, Derivation::OB, true, ""},
            {Algebra::Minf, Derivation::DZ, true, ""},     {Algebra::Minf, Derivation::DTAU, true, ""},
            {Algebra::Minf, Derivation::OB, true, ""},     {Algebra::JS0inf, Derivation::DZ, false, "e1"},
            {Algebra::JS0inf, Derivation::DTAU, false, "wp"}, {Algebra::JS0inf, Derivation::OB, false, "e1"},
            {Algebra::JSinf0, Derivation::DZ, true, ""},   {Algebra::JSinf0, Derivation::DTAU, false, "wp"},
            {Algebra::JSinf0, Derivation::OB, true, ""},   {Algebra::JSinf, Derivation::DZ, true, ""},
            {Algebra::JSinf, Derivation::DTAU, true, ""},  {Algebra::JSinf, Derivation::OB, true, ""},
        }};
        Tally t;
        for (const auto& c : cells) {
            const StabilityReport r = check_stability(c.algebra, c.d);
            const bool ok = r.closed == c.closed && (c.closed || r.witness == std::string(c.witness));
            t.expect(ok, [&] {
                return std::string(algebra_name(c.algebra)) + " under " + std::string(derivation_name(c.d))
                       + ": got " + (r.closed ? "closed" : "open, witness " + r.witness.value_or("?"));
            });
        }
        return t.outcome("cells match");
    });
}

std::vector<CheckResult> check_derivation_laws(const VerifyOptions& o)
{
    std::mt19937_64 rng(o.seed ^ 0xd3);
    const int n = std::max(20, o.structure_forms / 4);
    std::vector<QJForm> fs, gs;
    for (int i = 0; i < n; ++i) {
        fs.push_back(random_nonzero_form(rng, 0, 8, kAll));
        gs.push_back(random_nonzero_form(rng, 0, 6, kAll, 3));
    }
    std::vector<CheckResult> out;
    out.push_back(timed("Leibniz rule", [&] {
        Tally t;
        for (int i = 0; i < n; ++i)
            for (Derivation d : {Derivation::DZ, Derivation::DTAU, Derivation::OB, Derivation::DJAC, Derivation::DELTA})
                t.expect(derive(d, fs[i] * gs[i]) == derive(d, fs[i]) * gs[i] + fs[i] * derive(d, gs[i]), [&] {
                    return std::string(derivation_name(d)) + " on " + show(fs[i]) + " * " + show(gs[i]);
                });
        return t.outcome("products");
    }));
    out.push_back(timed("dz and dtau commute", [&] {
        Tally t;
        for (const auto& f : fs)
            t.expect(dtau(dz(f)) == dz(dtau(f)), [&] { return show(f); });
        return t.outcome("forms");
    }));
    out.push_back(timed("half-weight commutator", [&] {
        Tally t;
        for (const auto& f : fs)
            for (Derivation d : {Derivation::DTAU, Derivation::DJAC}) {
                const QJForm lhs = derive(Derivation::DELTA, derive(d, f)) - derive(d, derive(Derivation::DELTA, f));
                t.expect(lhs == derive(d, f), [&] { return std::string(derivation_name(d)) + " on " + show(f); });
            }
        return t.outcome("forms");
    }));
    out.push_back(timed("derivation weight shifts", [&] {
        Tally t;
        for (const auto& f : fs) {
            const int k = weight_or_zero(f);
            for (Derivation d : {Derivation::DZ, Derivation::DTAU, Derivation::OB, Derivation::DJAC, Derivation::DELTA}) {
                const QJForm g = derive(d, f);
                t.expect(g.is_zero() || g.homogeneous_weight() == k + weight_shift(d),
                         [&] { return std::string(derivation_name(d)) + " on " + show(f); });
            }
        }
        return t.outcome("images");
    }));
    out.push_back(timed("refined depth inclusions", [&] {
        Tally t;
        for (const auto& f : fs) {
            const DepthProfile d = depth_of(f);
            const QJForm df = dz(f), tf = dtau(f);
            for (const auto& [m, c] : df.terms()) {
                const unsigned e = m.exponent(Gen::EE2), dd = m.exponent(Gen::EE1);
                const bool ok = e <= d.s1 + 1 && dd <= d.s2 && (e <= d.s1 || dd + 1 <= d.s2);
                t.expect(ok, [&] { return "dz of " + show(f); });
            }
            for (const auto& [m, c] : tf.terms()) {
                const unsigned e = m.exponent(Gen::EE2), dd = m.exponent(Gen::EE1);
                const bool ok = (e <= d.s1 + 1 && dd <= d.s2) || (e <= d.s1 && dd <= d.s2 + 1);
                t.expect(ok, [&] { return "dtau of " + show(f); });
            }
            const QJForm of = ob(f);
            if (!of.is_zero()) {
                const DepthProfile od = depth_of(of);
                t.expect(od.s1 <= d.s1 + 1 && od.s2 <= d.s2, [&] { return "ob of " + show(f); });
            }
        }
        return t.outcome("terms");
    }));
    out.push_back(timed("Oberdieck derivation preserves JS", [&] {
        Tally t;
        std::mt19937_64 local(o.seed ^ 0x0b);
        for (int i = 0; i < n; ++i) {
            const QJForm f = random_nonzero_form(local, 0, 12, kJS);
            t.expect(member(ob(f), Algebra::JS), [&] { return show(f); });
        }
        return t.outcome("forms");
    }));
    return out;
}

// ---------------------------------------------------------------- brackets

std::vector<CheckResult> check_bracket_stability(const VerifyOptions& o)
{
    struct Case {
        const char* name;
        Bracket b;
        Algebra algebra;
    };
    const std::array<Case, 3> cases{{
        {"rc preserves JS0inf", Bracket::RC_TAU, Algebra::JS0inf},
        {"rcd preserves JS", Bracket::RC_D, Algebra::JS},
        {"tv preserves JSinf0", Bracket::TV, Algebra::JSinf0},
    }};
    std::vector<CheckResult> out;
    for (const auto& c : cases) {
        out.push_back(timed(c.name, [&] {
            std::mt19937_64 rng(o.seed ^ (0xb0 + static_cast<unsigned>(c.b)));
            Tally t;
            for (int i = 0; i < o.bracket_pairs; ++i) {
                const QJForm f = random_nonzero_form(rng, 0, o.bracket_max_weight, monomial_generators(c.algebra), 3);
                const QJForm g = random_nonzero_form(rng, 0, o.bracket_max_weight, monomial_generators(c.algebra), 3);
                for (unsigned n = 1; n <= o.bracket_max_n; ++n)
                    t.expect(member(bracket(c.b, f, g, n), c.algebra), [&] {
                        return "n=" + std::to_string(n) + " on " + show(f) + ", " + show(g);
                    });
            }
            return t.outcome("brackets");
        }));
    }
    out.push_back(timed("tv with e1 lands in JSinf0", [&] {
        std::mt19937_64 rng(o.seed ^ 0xe1);
        Tally t;
        const QJForm e1 = gen(Gen::EE1);
        for (int i = 0; i < o.bracket_pairs; ++i) {
            const QJForm f = random_nonzero_form(rng, 0, o.bracket_max_weight, kJSinf0, 3);
            for (unsigned n = 1; n <= o.bracket_max_n; ++n)
                t.expect(member(bracket(Bracket::TV, f, e1, n), Algebra::JSinf0),
                         [&] { return "n=" + std::to_string(n) + " on " + show(f); });
        }
        return t.outcome("brackets");
    }));
    return out;
}

CheckResult check_bracket_witnesses()
{
    return timed("bracket non-stability witnesses", [] {
        const QJForm wp = gen(Gen::WP), dwp = gen(Gen::DWP), e4 = gen(Gen::E4), e1 = gen(Gen::EE1),
                     e2 = gen(Gen::EE2);
        Tally t;
        const QJForm rc = bracket(Bracket::RC_TAU, e4, wp, 1);
        const QJForm rc_expected = -(e4 * e1 * dwp) + make_rational(1, 5) * pow(wp, 4) - 5 * wp * wp * e4
                                   + 20 * e4 * e4 - make_rational(1, 20) * wp * dwp * dwp;
        t.expect(rc == rc_expected, [&] { return "[e4,wp]_1 = " + show(rc); });
        t.expect(depth_of(rc) == DepthProfile{0, 1}, [] { return "[e4,wp]_1 is not of depth (0,1)"; });
        t.expect(!member(rc, Algebra::JS) && !member(rc, Algebra::JSinf0),
                 [] { return "[e4,wp]_1 stays in JS or JSinf0"; });
        const QJForm rcd = bracket(Bracket::RC_D, e4, wp, 1);
        t.expect(rcd == rc_expected + e4 * e1 * dwp && member(rcd, Algebra::JS),
                 [&] { return "<e4,wp>_1 = " + show(rcd); });
        const QJForm mixed = bracket(Bracket::RC_D, e1, e4, 1);
        t.expect(!mixed.is_zero() && depth_of(mixed).s1 == 1, [&] { return "<e1,e4>_1 = " + show(mixed); });
        const QJForm tv = bracket(Bracket::TV, e4, wp, 1);
        t.expect(!member(tv, Algebra::JS0inf), [&] { return "{e4,wp}_1 = " + show(tv); });
        for (unsigned n = 1; n <= 4; ++n)
            t.expect(bracket(Bracket::TV, e4, e6_form(), n).is_zero(),
                     [n] { return "{e4,e6}_" + std::to_string(n) + " is nonzero"; });
        const QJForm tv_e2_e1 = bracket(Bracket::TV, e2, e1, 1);
        t.expect(tv_e2_e1 == make_rational(1, 4) * (e2 * e2 - 5 * e4) * (-wp - e2),
                 [&] { return "{e2,e1}_1 = " + show(tv_e2_e1); });
        const QJForm classical = bracket(Bracket::RC_TAU, e4, e6_form(), 1);
        t.expect(classical == 21 * e6_form() * e6_form() - make_rational(60, 7) * pow(e4, 3),
                 [&] { return "[e4,e6]_1 = " + show(classical); });
        return t.outcome("witness checks");
    });
}

std::vector<CheckResult> check_bracket_laws(const VerifyOptions& o)
{
    std::vector<CheckResult> out;
    out.push_back(timed("bracket symmetry and weight shift", [&] {
        std::mt19937_64 rng(o.seed ^ 0x5a);
        Tally t;
        for (int i = 0; i < 30; ++i) {
            const QJForm f = random_nonzero_form(rng, 0, 6, kAll, 3);
            const QJForm g = random_nonzero_form(rng, 0, 6, kAll, 3);
            for (Bracket b : {Bracket::RC_TAU, Bracket::RC_D, Bracket::TV})
                for (unsigned n = 0; n <= 3; ++n) {
                    const QJForm fg = bracket(b, f, g, n);
                    const QJForm gf = bracket(b, g, f, n);
                    t.expect(fg == (n % 2 == 0 ? gf : -gf), [&] {
                        return std::string(bracket_name(b)) + " n=" + std::to_string(n) + " on " + show(f) + ", "
                               + show(g);
                    });
                    const int w = weight_or_zero(f) + weight_or_zero(g) + weight_shift(b, n);
                    t.expect(fg.is_zero() || fg.homogeneous_weight() == w,
                             [&] { return std::string(bracket_name(b)) + " weight on " + show(f); });
                }
        }
        return t.outcome("bracket pairs");
    }));
    out.push_back(timed("transvectant e1 exchange identity", [&] {
        std::mt19937_64 rng(o.seed ^ 0x1c);
        const QJForm e1 = gen(Gen::EE1);
        auto tv = [](const QJForm& a, const QJForm& b, unsigned n) { return bracket(Bracket::TV, a, b, n); };
        Tally t;
        for (int i = 0; i < 12; ++i) {
            const QJForm f = random_nonzero_form(rng, 0, 5, kAll, 2);
            const QJForm g = random_nonzero_form(rng, 0, 5, kAll, 2);
            for (unsigned n = 1; n <= 4; ++n) {
                const Rational sign = (n - 1) % 2 == 0 ? 1 : -1;
                const QJForm lhs = tv(f * e1, g, n) - tv(f, g * e1, n);
                QJForm rhs = f * tv(e1, g, n) + sign * (g * tv(e1, f, n));
                for (unsigned i2 = 1; i2 < n; ++i2) {
                    const Rational c(binomial(n, i2));
                    rhs -= c * (tv(tv(f, e1, i2), g, n - i2) + sign * tv(tv(g, e1, i2), f, n - i2));
                }
                t.expect(lhs == rhs, [&] { return "n=" + std::to_string(n) + " on " + show(f) + ", " + show(g); });
            }
        }
        return t.outcome("cases");
    }));
    out.push_back(check_classical_restriction(o));
    out.push_back(check_transvectant_recurrence(o));
    return out;
}

CheckResult check_classical_restriction(const VerifyOptions& o)
{
    return timed("rc on modular forms matches q-expansions", [&] {
        const int qp = o.q_prec;
        Tally t;
        const std::array<std::pair<int, QJForm>, 2> mf{{{4, gen(Gen::E4)}, {6, e6_form()}}};
        for (const auto& [k, f] : mf)
            for (const auto& [l, g] : mf)
                for (unsigned n = 0; n <= 3; ++n) {
                    // Classical formula evaluated directly on the q-series of e_k and e_l.
                    std::vector<BigradedSeries> df{eisenstein_qseries(k, qp)}, dg{eisenstein_qseries(l, qp)};
                    for (unsigned r = 1; r <= n; ++r) {
                        df.push_back(qdq(df.back()));
                        dg.push_back(qdq(dg.back()));
                    }
                    BigradedSeries direct(k + l + 2 * static_cast<int>(n), qp, 0, 0);
                    for (unsigned r = 0; r <= n; ++r) {
                        Rational c(binomial(k + n - 1, static_cast<long>(n - r)) * binomial(l + n - 1, r));
                        if (r % 2 == 1)
                            c = -c;
                        direct = direct + c * (df[r] * dg[n - r]);
                    }
                    const QJForm form = bracket(Bracket::RC_TAU, f, g, n);
                    const bool in_m = member(form, Algebra::M);
                    const BigradedSeries via_forms = expand(form, qp, o.window);
                    const bool same = series_equal(via_forms, lift_constant(direct, o.window), o.window);
                    t.expect(in_m && same, [&] {
                        return "[e" + std::to_string(k) + ",e" + std::to_string(l) + "]_" + std::to_string(n)
                               + (in_m ? " differs from the classical bracket" : " left M");
                    });
                }
        return t.outcome("brackets on (e4, e6)");
    });
}

CheckResult check_transvectant_recurrence(const VerifyOptions& o)
{
    return timed("transvectant recurrence", [&] {
        std::mt19937_64 rng(o.seed ^ 0x7e);
        Tally t;
        for (int i = 0; i < o.recurrence_pairs; ++i) {
            const QJForm f = random_nonzero_form(rng, 0, 6, kAll, 3);
            const QJForm g = random_nonzero_form(rng, 0, 6, kAll, 3);
            for (unsigned n = 0; n <= o.recurrence_max_n; ++n)
                t.expect(transvectant_by_recurrence(f, g, n) == bracket(Bracket::TV, f, g, n),
                         [&] { return "n=" + std::to_string(n) + " on " + show(f) + ", " + show(g); });
        }
        return t.outcome("pairs x orders");
    });
}

// ---------------------------------------------------------------- deformations

std::vector<CheckResult> check_deformations(const VerifyOptions& o)
{
    std::vector<CheckResult> out;
    for (Bracket b : {Bracket::TV, Bracket::RC_TAU, Bracket::RC_D}) {
        out.push_back(timed("star associativity (" + std::string(bracket_name(b)) + ")", [&] {
            std::mt19937_64 rng(o.seed ^ (0xa5 + static_cast<unsigned>(b)));
            Tally t;
            std::vector<std::array<QJForm, 3>> triples{
                {gen(Gen::WP), gen(Gen::EE1), gen(Gen::EE2)}};
            for (int i = 0; i < o.deformation_triples; ++i)
                triples.push_back({random_nonzero_form(rng, 0, o.deformation_max_weight, kAll, 2),
                                   random_nonzero_form(rng, 0, o.deformation_max_weight, kAll, 2),
                                   random_nonzero_form(rng, 0, o.deformation_max_weight, kAll, 2)});
            for (const auto& [f, g, h] : triples)
                for (unsigned n = 0; n <= o.deformation_order; ++n) {
                    const auto [left, right] = star_associator_sides(b, f, g, h, n);
                    t.expect(left == right, [&] {
                        return "order " + std::to_string(n) + " on " + show(f) + ", " + show(g) + ", " + show(h)
                               + "; associator " + show(left - right);
                    });
                }
            return t.outcome("triples x orders");
        }));
    }
    return out;
}

// ---------------------------------------------------------------- dimensions

CheckResult check_dimension_table()
{
    return timed("dimension table of JS", [] {
        const std::array<std::pair<int, int>, 8> table{{{0, 1}, {1, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 5}, {12, 7}}};
        Tally t;
        for (const auto& [k, d] : table)
            t.expect(dim_closed(DimFamily::DS, k) == d, [k = k] {
                return "k=" + std::to_string(k) + " gives " + dim_closed(DimFamily::DS, k).get_str();
            });
        return t.outcome("entries");
    });
}

CheckResult check_dimension_triangle(int kmax)
{
    return timed("closed form, lattice count and generating series agree", [=] {
        Tally t;
        for (DimFamily fam : {DimFamily::DS, DimFamily::DS0INF, DimFamily::DSINF0, DimFamily::DSINF}) {
            const auto series = series_coefficients(fam, kmax);
            for (int k = 0; k <= kmax; ++k) {
                const BigInt c = dim_closed(fam, k);
                t.expect(c == dim_brute(fam, k) && c == series[static_cast<std::size_t>(k)], [&] {
                    return std::string(family_name(fam)) + " k=" + std::to_string(k);
                });
            }
        }
        return t.outcome("values, k <= " + std::to_string(kmax));
    });
}

std::vector<CheckResult> check_dimension_recurrences(int kmax)
{
    auto ds = [](std::int64_t k) { return dim_closed(DimFamily::DS, k); };
    std::vector<CheckResult> out;
    out.push_back(timed("JS dimension recurrences", [=] {
        Tally t;
        for (int k = 0; k <= kmax; ++k) {
            t.expect(ds(2 * k + 3) == ds(2 * k), [k] { return "odd shift at k=" + std::to_string(k); });
            t.expect(ds(2 * k + 13) == ds(2 * k + 1) + k + 5, [k] { return "period at k=" + std::to_string(k); });
        }
        return t.outcome("values");
    }));
    out.push_back(timed("Alcuin sequence", [=] {
        Tally t;
        for (int k = 0; k <= kmax; ++k)
            t.expect(ds(k) == alcuin(k + 3), [k] { return "k=" + std::to_string(k); });
        return t.outcome("values");
    }));
    out.push_back(timed("sum of modular dimensions", [=] {
        Tally t;
        for (int k = 0; k <= kmax; ++k) {
            BigInt sum = 0;
            for (int c = 0; c <= k / 4; ++c)
                sum += modular_dim(2 * k - 8 * c);
            t.expect(sum == ds(k), [k] { return "k=" + std::to_string(k); });
        }
        return t.outcome("values");
    }));
    out.push_back(timed("compact rounded form for JS0inf", [=] {
        Tally t;
        for (int k = 0; k <= kmax; ++k) {
            const BigInt kk = k;
            const BigInt num = k % 2 == 0 ? kk * kk * kk + 15 * kk * kk + 72 * kk + 144
                                          : kk * kk * kk + 15 * kk * kk + 63 * kk + 65;
            t.expect(nearest_int(Rational(num, 144)) == dim_closed(DimFamily::DS0INF, k),
                     [k] { return "k=" + std::to_string(k); });
        }
        return t.outcome("values");
    }));
    out.push_back(timed("modular dimension periodicity", [] {
        Tally t;
        for (int j = -60; j <= 600; ++j)
            t.expect(modular_dim(j + 12) == modular_dim(j) + 1, [j] { return "j=" + std::to_string(j); });
        return t.outcome("values");
    }));
    out.push_back(timed("monomial count matches lattice count", [] {
        Tally t;
        for (DimFamily fam : {DimFamily::DS, DimFamily::DS0INF, DimFamily::DSINF0, DimFamily::DSINF}) {
            std::vector<Gen> gens;
            switch (fam) {
            case DimFamily::DS: gens.assign(kJS.begin(), kJS.end()); break;
            case DimFamily::DS0INF: gens.assign(kJS0inf.begin(), kJS0inf.end()); break;
            case DimFamily::DSINF0: gens.assign(kJSinf0.begin(), kJSinf0.end()); break;
            case DimFamily::DSINF: gens.assign(kAll.begin(), kAll.end()); break;
            }
            for (int k = 0; k <= 40; ++k)
                t.expect(BigInt(monomials_of_weight(k, gens).size()) == dim_brute(fam, k),
                         [&] { return std::string(family_name(fam)) + " k=" + std::to_string(k); });
        }
        return t.outcome("weight spaces");
    }));
    return out;
}

// ---------------------------------------------------------------- Eisenstein and oracle

std::vector<CheckResult> check_eisenstein(const VerifyOptions& o)
{
    std::vector<CheckResult> out;
    out.push_back(timed("Eisenstein reduction methods agree", [&] {
        Tally t;
        for (int k = 4; k <= o.eisenstein_max; k += 2) {
            const QJForm a = eisenstein_in_generators(k, EisensteinMethod::LAURENT);
            const QJForm b = eisenstein_in_generators(k, EisensteinMethod::GUNTHER);
            t.expect(a == b && member(a, Algebra::M), [&] { return "e" + std::to_string(k); });
        }
        const QJForm e4 = gen(Gen::E4);
        t.expect(eisenstein_in_generators(8, EisensteinMethod::LAURENT) == make_rational(3, 7) * e4 * e4,
                 [] { return "e8"; });
        t.expect(eisenstein_in_generators(10, EisensteinMethod::GUNTHER) == make_rational(5, 11) * e4 * e6_form(),
                 [] { return "e10"; });
        return t.outcome("weights");
    }));
    out.push_back(timed("reduced Eisenstein series match q-expansions", [&] {
        Tally t;
        for (int k = 4; k <= o.eisenstein_max; k += 2) {
            const BigradedSeries lhs = expand(eisenstein_in_generators(k, EisensteinMethod::LAURENT), o.q_prec, o.window);
            const BigradedSeries rhs = lift_constant(eisenstein_qseries(k, o.q_prec), o.window);
            t.expect(series_equal(lhs, rhs, o.window), [k] { return "e" + std::to_string(k); });
        }
        return t.outcome("weights");
    }));
    out.push_back(timed("Eisenstein derivative recursion on series", [&] {
        Tally t;
        auto e = [&](int k) { return eisenstein_in_generators(k, EisensteinMethod::LAURENT); };
        for (int n = 1; n <= 5; ++n) {
            const Rational a1(2 * (2 * n + 1));
            QJForm rhs = (n + 1) * (2 * n + 1) * (e(2 * n + 2) * gen(Gen::EE2)) - (n + 2) * (2 * n + 5) * e(2 * n + 4);
            for (int a = 1; a < n; ++a) {
                const int b = n - a;
                rhs += (2 * a + 1) * (a - 2 * b - 1) * (e(2 * a + 2) * e(2 * b + 2));
            }
            const BigradedSeries lhs = qdq(expand(e(2 * n + 2), o.q_prec, o.window)).scaled(a1);
            t.expect(series_equal(lhs, expand(rhs, o.q_prec, o.window), o.window),
                     [n] { return "n=" + std::to_string(n); });
        }
        return t.outcome("orders");
    }));
    return out;
}

std::vector<CheckResult> check_oracle(const VerifyOptions& o)
{
    std::mt19937_64 rng(o.seed ^ 0x0c);
    std::vector<std::pair<QJForm, QJForm>> pairs;
    for (int i = 0; i < 30; ++i)
        pairs.emplace_back(random_nonzero_form(rng, 0, 6, kAll, 3), random_nonzero_form(rng, 0, 6, kAll, 3));
    auto window_for = [&](const QJForm& f) { return std::max(o.window, 2 * weight_or_zero(f) + 4); };
    std::vector<CheckResult> out;
    out.push_back(timed("expansion is a ring homomorphism", [&] {
        Tally t;
        for (const auto& [f, g] : pairs) {
            const int w = window_for(f * g);
            const BigradedSeries sf = expand(f, o.q_prec, w + 8), sg = expand(g, o.q_prec, w + 8);
            t.expect(series_equal(series_mul(sf, sg), expand(f * g, o.q_prec, w), w),
                     [&] { return "product " + show(f) + " * " + show(g); });
            t.expect(series_equal(series_add(sf, sf.scaled(2)), expand(3 * f, o.q_prec, w), w),
                     [&] { return "sum " + show(f); });
        }
        return t.outcome("pairs");
    }));
    out.push_back(timed("derivations match series derivatives", [&] {
        Tally t;
        for (const auto& [f, g] : pairs) {
            const int w = window_for(f) + 2;
            const BigradedSeries sf = expand(f, o.q_prec, w + 1);
            t.expect(series_equal(du(sf), expand(dz(f), o.q_prec, w), w - 2), [&] { return "dz of " + show(f); });
            t.expect(series_equal(qdq(sf), expand(dtau(f), o.q_prec, w), w - 2),
                     [&] { return "dtau of " + show(f); });
        }
        return t.outcome("forms");
    }));
    out.push_back(timed("expansion parity", [&] {
        Tally t;
        for (const auto& [f, g] : pairs) {
            const int k = weight_or_zero(f);
            const BigradedSeries s = expand(f, o.q_prec, o.window);
            bool ok = true;
            for (int m = 0; m < s.q_prec(); ++m)
                for (int n = s.u_val(); n <= s.u_max(); ++n)
                    if (((n - k) % 2 + 2) % 2 != 0 && sgn(s.coeff(m, n)) != 0)
                        ok = false;
            t.expect(ok, [&] { return show(f); });
        }
        return t.outcome("forms");
    }));
    out.push_back(timed("e6 form matches its q-expansion", [&] {
        Tally t;
        t.expect(series_equal(expand(e6_form(), o.q_prec, o.window),
                              lift_constant(eisenstein_qseries(6, o.q_prec), o.window), o.window),
                 [] { return "e6"; });
        return t.outcome("forms");
    }));
    for (auto& r : check_eisenstein(o))
        out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------- suites

std::span<const std::string_view> suite_names()
{
    static constexpr std::array<std::string_view, 6> names{"identities", "stability", "brackets",
                                                           "deformations", "dimensions", "oracle"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& o)
{
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> more) {
        for (auto& r : more)
            out.push_back(std::move(r));
    };
    if (suite == "all") {
        for (std::string_view s : suite_names())
            append(run_suite(s, o));
        return out;
    }
    if (suite == "identities") {
        out.push_back(check_identity_battery_exact());
        out.push_back(check_identity_battery_series(o.q_prec, o.window));
        append(check_structure(o));
    } else if (suite == "stability") {
        out.push_back(check_stability_matrix());
        append(check_derivation_laws(o));
    } else if (suite == "brackets") {
        append(check_bracket_stability(o));
        out.push_back(check_bracket_witnesses());
        append(check_bracket_laws(o));
    } else if (suite == "deformations") {
        append(check_deformations(o));
    } else if (suite == "dimensions") {
        out.push_back(check_dimension_table());
        out.push_back(check_dimension_triangle(o.dim_kmax));
        append(check_dimension_recurrences(o.recurrence_kmax));
    } else if (suite == "oracle") {
        append(check_oracle(o));
    } else {
        throw DomainError("unknown verification suite '" + std::string(suite) + "'");
    }
    return out;
}

}  // namespace qjalg
