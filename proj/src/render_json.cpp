#include "qjalg/json_io.hpp"

namespace qjalg {

nlohmann::json form_to_json(const QJForm& f)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        const Exponents e = m.exponents();
        out.push_back({{"exponents", {e[0], e[1], e[2], e[3], e[4]}}, {"coeff", rational_to_pq(c)}});
    }
    return out;
}

QJForm form_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw DomainError("form JSON must be an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
            throw DomainError("term JSON needs \"exponents\" and \"coeff\"");
        const auto& e = t.at("exponents");
        if (!e.is_array() || e.size() != 5)
            throw DomainError("exponents must have five entries");
        Exponents exps{};
        for (std::size_t i = 0; i < 5; ++i) {
            if (!e[i].is_number_unsigned())
                throw DomainError("exponents must be nonnegative integers");
            exps[i] = e[i].get<unsigned>();
        }
        terms.emplace_back(Monomial(exps), parse_rational(t.at("coeff").get<std::string>()));
    }
    return QJForm::from_terms(std::move(terms));
}

nlohmann::json series_to_json(const BigradedSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (int m = 0; m < s.q_prec(); ++m)
        for (int n = s.u_val(); n <= s.u_max(); ++n)
            if (const Rational& c = s.coeff(m, n); sgn(c) != 0)
                coeffs.push_back({{"q", m}, {"u", n}, {"coeff", rational_to_pq(c)}});
    return {{"weight", s.weight()}, {"q_prec", s.q_prec()}, {"u_val", s.u_val()}, {"u_max", s.u_max()},
            {"coeffs", coeffs}};
}

nlohmann::json check_to_json(const CheckResult& r)
{
    return {{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}, {"seconds", r.seconds}};
}

}  // namespace qjalg
