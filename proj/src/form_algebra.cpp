#include "qjalg/form_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qjalg {

std::string_view generator_name(Gen g)
{
    switch (g) {
    case Gen::WP: return "wp";
    case Gen::DWP: return "dwp";
    case Gen::E4: return "e4";
    case Gen::EE1: return "e1";
    case Gen::EE2: return "e2";
    }
    return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Exponents& exps)
{
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxExponent)
            throw DomainError("monomial exponent too large");
        key_ |= static_cast<std::uint64_t>(exps[i]) << (kBits * i);
    }
}

Monomial Monomial::of(Gen g, unsigned power)
{
    Exponents e{};
    e[static_cast<std::size_t>(g)] = power;
    return Monomial(e);
}

Exponents Monomial::exponents() const
{
    Exponents e{};
    for (Gen g : kAllGenerators)
        e[static_cast<std::size_t>(g)] = exponent(g);
    return e;
}

int Monomial::weight() const
{
    int w = 0;
    for (Gen g : kAllGenerators)
        w += weight_of(g) * static_cast<int>(exponent(g));
    return w;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    // Fields never carry into each other unless an exponent overflows.
    for (Gen g : kAllGenerators)
        if (exponent(g) + other.exponent(g) > kMaxExponent)
            throw DomainError("monomial exponent overflow");
    return Monomial(key_ + other.key_);
}

Monomial Monomial::divided_by(Gen g) const
{
    return Monomial(key_ - (std::uint64_t{1} << shift(g)));
}

// ---------------------------------------------------------------- QJForm

namespace {

void sort_descending(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first.key() > y.first.key(); });
}

}  // namespace

QJForm::QJForm(const Rational& constant)
{
    if (constant != 0)
        terms_.emplace_back(Monomial(), constant);
}

QJForm QJForm::generator(Gen g)
{
    return monomial(Monomial::of(g));
}

QJForm QJForm::monomial(const Monomial& m, const Rational& coeff)
{
    QJForm f;
    if (coeff != 0)
        f.terms_.emplace_back(m, coeff);
    return f;
}

QJForm QJForm::from_terms(std::vector<Term> terms)
{
    sort_descending(terms);
    QJForm f;
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().first == t.first)
            f.terms_.back().second += t.second;
        else
            f.terms_.push_back(std::move(t));
    }
    std::erase_if(f.terms_, [](const Term& t) { return t.second == 0; });
    return f;
}

std::optional<int> QJForm::homogeneous_weight() const
{
    if (terms_.empty())
        return std::nullopt;
    const int w = terms_.front().first.weight();
    for (const auto& t : terms_)
        if (t.first.weight() != w)
            return std::nullopt;
    return w;
}

bool QJForm::is_homogeneous() const
{
    return terms_.empty() || homogeneous_weight().has_value();
}

QJForm QJForm::operator-() const
{
    QJForm f = *this;
    for (auto& t : f.terms_)
        t.second = -t.second;
    return f;
}

QJForm& QJForm::operator+=(const QJForm& o)
{
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first.key() > j->first.key())) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first.key() > i->first.key()) {
            merged.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (c != 0)
                merged.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

QJForm& QJForm::operator-=(const QJForm& o)
{
    return *this += -o;
}

QJForm& QJForm::operator*=(const Rational& r)
{
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= r;
    return *this;
}

QJForm operator*(const QJForm& a, const QJForm& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    TermAccumulator acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            acc.add_product(ma * mb, ca, cb);
    return acc.finish();
}

QJForm pow(const QJForm& f, unsigned n)
{
    QJForm result(1);
    QJForm base = f;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1u;
        if (n > 0)
            base = base * base;
    }
    return result;
}

void TermAccumulator::add(const Monomial& m, const Rational& c)
{
    auto [it, inserted] = acc_.try_emplace(m.key(), c);
    if (!inserted)
        it->second += c;
}

void TermAccumulator::add_product(const Monomial& m, const Rational& a, const Rational& b)
{
    auto [it, inserted] = acc_.try_emplace(m.key());
    if (inserted) {
        mpq_mul(it->second.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    } else {
        thread_local Rational scratch;
        mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        it->second += scratch;
    }
}

QJForm TermAccumulator::finish()
{
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [key, c] : acc_) {
        if (c == 0)
            continue;
        Exponents e{};
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<unsigned>((key >> (Monomial::kBits * i)) & Monomial::kMaxExponent);
        terms.emplace_back(Monomial(e), std::move(c));
    }
    acc_.clear();
    return QJForm::from_terms(std::move(terms));
}

// ---------------------------------------------------------------- grading and depth

std::vector<std::pair<int, QJForm>> weight_components(const QJForm& f)
{
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : f.terms())
        buckets[t.first.weight()].push_back(t);
    std::vector<std::pair<int, QJForm>> out;
    for (auto& [w, terms] : buckets)
        out.emplace_back(w, QJForm::from_terms(std::move(terms)));
    return out;
}

DepthProfile depth_of(const QJForm& f)
{
    if (f.is_zero())
        throw DomainError("the zero form has no depth");
    DepthProfile d;
    d.s1 = f.terms().front().first.exponent(Gen::EE2);
    for (const auto& t : f.terms())
        d.s2 = std::max(d.s2, t.first.exponent(Gen::EE1));
    return d;
}

// ---------------------------------------------------------------- subalgebras

std::string_view algebra_name(Algebra a)
{
    switch (a) {
    case Algebra::M: return "M";
    case Algebra::Minf: return "Minf";
    case Algebra::JS: return "JS";
    case Algebra::JS0inf: return "JS0inf";
    case Algebra::JSinf0: return "JSinf0";
    case Algebra::JSinf: return "JSinf";
    }
    return "?";
}

Algebra parse_algebra(std::string_view name)
{
    std::string lower;
    for (char ch : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    for (Algebra a : {Algebra::M, Algebra::Minf, Algebra::JS, Algebra::JS0inf, Algebra::JSinf0, Algebra::JSinf}) {
        std::string candidate;
        for (char ch : algebra_name(a))
            candidate.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        if (candidate == lower)
            return a;
    }
    throw DomainError("unknown algebra '" + std::string(name) + "'");
}

std::vector<Monomial> monomials_of_weight(int weight, std::span<const Gen> allowed)
{
    std::vector<Monomial> out;
    if (weight < 0)
        return out;
    Exponents exps{};
    auto recurse = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx == allowed.size()) {
            if (remaining == 0)
                out.emplace_back(exps);
            return;
        }
        const Gen g = allowed[idx];
        const int w = weight_of(g);
        for (int p = 0; p * w <= remaining; ++p) {
            exps[static_cast<std::size_t>(g)] = static_cast<unsigned>(p);
            self(self, idx + 1, remaining - p * w);
        }
        exps[static_cast<std::size_t>(g)] = 0;
    };
    recurse(recurse, 0, weight);
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) { return x > y; });
    return out;
}

namespace {

/// Exact test of target in span(basis) by Gaussian elimination over Q.
bool in_span(const std::vector<QJForm>& basis, const QJForm& target)
{
    if (target.is_zero())
        return true;
    std::map<std::uint64_t, std::size_t> row_of;
    auto index = [&](const Monomial& m) {
        auto [it, inserted] = row_of.try_emplace(m.key(), row_of.size());
        return it->second;
    };
    for (const auto& b : basis)
        for (const auto& t : b.terms())
            index(t.first);
    for (const auto& t : target.terms())
        index(t.first);
    const std::size_t rows = row_of.size();
    const std::size_t cols = basis.size() + 1;
    std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols, 0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& t : basis[j].terms())
            mat[row_of[t.first.key()]][j] = t.second;
    for (const auto& t : target.terms())
        mat[row_of[t.first.key()]][cols - 1] = t.second;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col + 1 < cols && pivot_row < rows; ++col) {
        std::size_t p = pivot_row;
        while (p < rows && mat[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(mat[p], mat[pivot_row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || mat[r][col] == 0)
                continue;
            Rational factor = mat[r][col] / mat[pivot_row][col];
            for (std::size_t c = col; c < cols; ++c)
                mat[r][c] -= factor * mat[pivot_row][c];
        }
        ++pivot_row;
    }
    // Consistent iff no zero row has a nonzero right-hand side.
    for (std::size_t r = pivot_row; r < rows; ++r)
        if (mat[r][cols - 1] != 0)
            return false;
    return true;
}

bool in_modular_forms(const QJForm& f)
{
    for (const auto& t : f.terms())
        if (t.first.exponent(Gen::EE1) != 0 || t.first.exponent(Gen::EE2) != 0)
            return false;
    for (const auto& [w, component] : weight_components(f)) {
        std::vector<QJForm> basis;
        for (int c6 = 0; 6 * c6 <= w; ++c6) {
            if ((w - 6 * c6) % 4 != 0)
                continue;
            const unsigned c4 = static_cast<unsigned>((w - 6 * c6) / 4);
            basis.push_back(pow(QJForm::generator(Gen::E4), c4) * pow(e6_form(), static_cast<unsigned>(c6)));
        }
        if (!in_span(basis, component))
            return false;
    }
    return true;
}

}  // namespace

bool member(const QJForm& f, Algebra algebra)
{
    auto all_terms = [&](auto pred) {
        return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return pred(t.first); });
    };
    auto no_e1 = [](const Monomial& m) { return m.exponent(Gen::EE1) == 0; };
    auto no_e2 = [](const Monomial& m) { return m.exponent(Gen::EE2) == 0; };
    switch (algebra) {
    case Algebra::JSinf: return true;
    case Algebra::JS0inf: return all_terms(no_e2);
    case Algebra::JSinf0: return all_terms(no_e1);
    case Algebra::JS: return all_terms([&](const Monomial& m) { return no_e1(m) && no_e2(m); });
    case Algebra::M: return in_modular_forms(f);
    case Algebra::Minf: {
        if (!all_terms(no_e1))
            return false;
        // f = sum_e g_e e2^e with every g_e in M
        std::map<unsigned, std::vector<Term>> by_e2;
        for (const auto& [m, c] : f.terms()) {
            Monomial stripped = m;
            for (unsigned i = 0; i < m.exponent(Gen::EE2); ++i)
                stripped = stripped.divided_by(Gen::EE2);
            by_e2[m.exponent(Gen::EE2)].emplace_back(stripped, c);
        }
        for (auto& [e, terms] : by_e2)
            if (!in_modular_forms(QJForm::from_terms(std::move(terms))))
                return false;
        return true;
    }
    }
    return false;
}

const QJForm& e6_form()
{
    static const QJForm form = [] {
        const QJForm wp = QJForm::generator(Gen::WP);
        const QJForm dwp = QJForm::generator(Gen::DWP);
        const QJForm e4 = QJForm::generator(Gen::E4);
        return Rational(-1, 140) * dwp * dwp + Rational(1, 35) * pow(wp, 3) - Rational(3, 7) * wp * e4;
    }();
    return form;
}

std::vector<std::pair<std::string, QJForm>> algebra_generators(Algebra a)
{
    auto gens = [](std::initializer_list<Gen> list) {
        std::vector<std::pair<std::string, QJForm>> out;
        for (Gen g : list)
            out.emplace_back(std::string(generator_name(g)), QJForm::generator(g));
        return out;
    };
    switch (a) {
    case Algebra::M:
        return {{"e4", QJForm::generator(Gen::E4)}, {"e6", e6_form()}};
    case Algebra::Minf:
        return {{"e4", QJForm::generator(Gen::E4)}, {"e6", e6_form()}, {"e2", QJForm::generator(Gen::EE2)}};
    case Algebra::JS: return gens({Gen::WP, Gen::DWP, Gen::E4});
    case Algebra::JS0inf: return gens({Gen::WP, Gen::DWP, Gen::E4, Gen::EE1});
    case Algebra::JSinf0: return gens({Gen::WP, Gen::DWP, Gen::E4, Gen::EE2});
    case Algebra::JSinf: return gens({Gen::WP, Gen::DWP, Gen::E4, Gen::EE1, Gen::EE2});
    }
    return {};
}

// ---------------------------------------------------------------- Q-coefficients

ScaledJForm q_coefficient(const QJForm& f, unsigned j1, unsigned j2)
{
    std::vector<Term> out;
    for (const auto& [m, c] : f.terms()) {
        const unsigned e = m.exponent(Gen::EE2);
        const unsigned d = m.exponent(Gen::EE1);
        if (e < j1 || d < j2)
            continue;
        Rational coeff = c * Rational(binomial(e, j1) * binomial(d, j2));
        if (j1 % 2 == 1)
            coeff = -coeff;
        Monomial reduced = m;
        for (unsigned i = 0; i < j1; ++i)
            reduced = reduced.divided_by(Gen::EE2);
        for (unsigned i = 0; i < j2; ++i)
            reduced = reduced.divided_by(Gen::EE1);
        out.emplace_back(reduced, std::move(coeff));
    }
    ScaledJForm result{QJForm::from_terms(std::move(out)), static_cast<int>(j1 + j2)};
    if (result.form.is_zero())
        result.c_power = 0;
    return result;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string render_monomial(const Monomial& m)
{
    std::string out;
    for (Gen g : kAllGenerators) {
        const unsigned p = m.exponent(g);
        if (p == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += generator_name(g);
        if (p > 1)
            out += "^" + std::to_string(p);
    }
    return out;
}

}  // namespace

std::string render(const QJForm& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const std::string mono = render_monomial(m);
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << "*" << mono;
    }
    return os.str();
}

std::string render(const ScaledJForm& f)
{
    if (f.c_power == 0)
        return render(f.form);
    return "(" + render(f.form) + ")*c^" + std::to_string(f.c_power);
}

}  // namespace qjalg
