#include "qjalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "qjalg/differential.hpp"
#include "qjalg/dimensions.hpp"
#include "qjalg/expr.hpp"
#include "qjalg/json_io.hpp"
#include "qjalg/series.hpp"
#include "qjalg/verify.hpp"

namespace qjalg {

namespace {

/// Bad names on the command line are usage errors, not evaluation failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_or(const char* name, int fallback)
{
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0')
        return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw UsageError(std::string(name) + " must be an integer");
    }
}

template <typename F>
auto as_usage(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::string depth_text(const DepthProfile& d)
{
    return "(" + std::to_string(d.s1) + "," + std::to_string(d.s2) + ")";
}

std::string u_power(int n)
{
    if (n == 0)
        return "";
    if (n == 1)
        return "u";
    return "u^" + std::to_string(n);
}

std::string series_text(const BigradedSeries& s)
{
    std::ostringstream os;
    os << "weight " << s.weight() << ", q^0..q^" << s.q_prec() - 1 << ", u^" << s.u_val() << "..u^" << s.u_max()
       << "\n";
    for (int m = 0; m < s.q_prec(); ++m) {
        std::string line;
        for (int n = s.u_val(); n <= s.u_max(); ++n) {
            const Rational& c = s.coeff(m, n);
            if (sgn(c) == 0)
                continue;
            const Rational mag = abs(c);
            line += line.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            const std::string u = u_power(n);
            if (u.empty())
                line += mag.get_str();
            else if (mag == 1)
                line += u;
            else
                line += mag.get_str() + "*" + u;
        }
        if (!line.empty())
            os << "q^" << m << ": " << line << "\n";
    }
    return os.str();
}

struct Reply {
    bool ok = true;
    nlohmann::json result = nlohmann::json::object();
    std::string text;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact algebra of index-zero singular quasi-Jacobi forms"};
    app.name("qjalg");
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print {\"ok\", \"result\", \"errors\"} JSON");

    std::string expr_a, expr_b, name_arg;
    std::vector<std::string> dim_args;
    unsigned order = 0;
    int qprec = 0, umax = 0;
    std::string suite = "all";
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* eval = app.add_subcommand("eval", "Canonical form of an expression");
    eval->add_option("expr", expr_a)->required();
    auto* weight = app.add_subcommand("weight", "Weights of the homogeneous components");
    weight->add_option("expr", expr_a)->required();
    auto* depth = app.add_subcommand("depth", "Depth (e2-degree, E1-degree)");
    depth->add_option("expr", expr_a)->required();
    auto* member_cmd = app.add_subcommand("member", "Subalgebra membership: M Minf JS JS0inf JSinf0 JSinf");
    member_cmd->add_option("algebra", name_arg)->required();
    member_cmd->add_option("expr", expr_a)->required();
    auto* dim = app.add_subcommand("dim", "dim FAMILY K, or dim table FAMILY KMAX");
    dim->add_option("args", dim_args)->required()->expected(2, 3);
    auto* expand_cmd = app.add_subcommand("expand", "Truncated expansion in q and u = pi z");
    expand_cmd->add_option("expr", expr_a)->required();
    expand_cmd->add_option("--qprec", qprec, "q-precision (default 8, or QJALG_QPREC)");
    expand_cmd->add_option("--umax", umax, "highest u-exponent (default 16, or QJALG_UMAX)");
    auto* bracket_cmd = app.add_subcommand("bracket", "bracket {rc|rcd|tv} EXPR EXPR N");
    bracket_cmd->add_option("kind", name_arg)->required();
    bracket_cmd->add_option("f", expr_a)->required();
    bracket_cmd->add_option("g", expr_b)->required();
    bracket_cmd->add_option("n", order)->required();
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "identities, stability, brackets, deformations, dimensions, oracle, all");
    verify_cmd->add_option("--seed", seed, "seed for the randomized checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    Reply reply;
    std::vector<std::string> errors;
    try {
        if (eval->parsed()) {
            const Value v = evaluate(expr_a);
            if (const auto* f = std::get_if<QJForm>(&v)) {
                reply.result = {{"form", form_to_json(*f)}, {"text", render(*f)}};
                reply.text = render(*f);
            } else {
                const auto& s = std::get<ScaledJForm>(v);
                reply.result = {{"form", form_to_json(s.form)}, {"c_power", s.c_power}, {"text", render(s)}};
                reply.text = render(s);
            }
        } else if (weight->parsed()) {
            const QJForm f = evaluate_form(expr_a);
            std::vector<int> ws;
            for (const auto& [k, c] : weight_components(f))
                ws.push_back(k);
            reply.result = {{"weights", ws}, {"homogeneous", ws.size() <= 1}};
            if (ws.empty()) {
                reply.text = "zero form (every weight)";
            } else if (ws.size() == 1) {
                reply.result["weight"] = ws[0];
                reply.text = std::to_string(ws[0]);
            } else {
                reply.text = "mixed:";
                for (int k : ws)
                    reply.text += " " + std::to_string(k);
            }
        } else if (depth->parsed()) {
            const DepthProfile d = depth_of(evaluate_form(expr_a));
            reply.result = {{"depth", {d.s1, d.s2}}};
            reply.text = depth_text(d);
        } else if (member_cmd->parsed()) {
            const Algebra a = as_usage([&] { return parse_algebra(name_arg); });
            const bool m = member(evaluate_form(expr_a), a);
            reply.result = {{"algebra", std::string(algebra_name(a))}, {"member", m}};
            reply.text = m ? "true" : "false";
        } else if (dim->parsed()) {
            auto to_k = [](const std::string& s) {
                try {
                    std::size_t used = 0;
                    const long long k = std::stoll(s, &used);
                    if (used != s.size() || k < 0)
                        throw std::invalid_argument(s);
                    return static_cast<std::int64_t>(k);
                } catch (const std::exception&) {
                    throw UsageError("expected a nonnegative integer, got '" + s + "'");
                }
            };
            if (dim_args.size() == 3) {
                if (dim_args[0] != "table")
                    throw UsageError("usage: dim FAMILY K | dim table FAMILY KMAX");
                const DimFamily fam = as_usage([&] { return parse_family(dim_args[1]); });
                const std::int64_t kmax = to_k(dim_args[2]);
                nlohmann::json rows = nlohmann::json::array();
                std::ostringstream os;
                for (std::int64_t k = 0; k <= kmax; ++k) {
                    const BigInt d = dim_closed(fam, k);
                    rows.push_back(d.fits_slong_p() ? nlohmann::json(d.get_si()) : nlohmann::json(d.get_str()));
                    os << k << " " << d.get_str() << "\n";
                }
                reply.result = {{"family", std::string(family_name(fam))}, {"kmax", kmax}, {"dims", rows}};
                reply.text = os.str();
                if (!reply.text.empty())
                    reply.text.pop_back();
            } else {
                const DimFamily fam = as_usage([&] { return parse_family(dim_args[0]); });
                const std::int64_t k = to_k(dim_args[1]);
                const BigInt d = dim_closed(fam, k);
                reply.result = {{"family", std::string(family_name(fam))},
                                {"k", k},
                                {"dim", d.fits_slong_p() ? nlohmann::json(d.get_si()) : nlohmann::json(d.get_str())}};
                reply.text = d.get_str();
            }
        } else if (expand_cmd->parsed()) {
            const int q = expand_cmd->count("--qprec") ? qprec : env_or("QJALG_QPREC", 8);
            const int u = expand_cmd->count("--umax") ? umax : env_or("QJALG_UMAX", 16);
            if (q < 1)
                throw UsageError("--qprec must be at least 1");
            const BigradedSeries s = expand(evaluate_form(expr_a), q, u);
            reply.result = series_to_json(s);
            reply.text = series_text(s);
            if (!reply.text.empty())
                reply.text.pop_back();
        } else if (bracket_cmd->parsed()) {
            const Bracket b = as_usage([&] { return parse_bracket(name_arg); });
            const QJForm f = bracket(b, evaluate_form(expr_a), evaluate_form(expr_b), order);
            reply.result = {{"bracket", std::string(bracket_name(b))}, {"n", order}, {"form", form_to_json(f)},
                            {"text", render(f)}};
            reply.text = render(f);
        } else if (verify_cmd->parsed()) {
            std::string lowered;
            for (char c : suite)
                lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            const bool known = lowered == "all"
                               || std::find(suite_names().begin(), suite_names().end(), lowered) != suite_names().end();
            if (!known)
                throw UsageError("unknown suite '" + suite + "'");
            VerifyOptions options;
            options.seed = seed;
            const auto results = run_suite(lowered, options);
            nlohmann::json checks = nlohmann::json::array();
            std::ostringstream os;
            int failed = 0;
            for (const auto& r : results) {
                checks.push_back(check_to_json(r));
                os << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
                if (!r.ok) {
                    ++failed;
                    errors.push_back(r.name + ": " + r.detail);
                }
            }
            os << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed";
            reply.ok = failed == 0;
            reply.result = {{"suite", lowered}, {"checks", checks}};
            reply.text = os.str();
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        if (json)
            out << nlohmann::json{{"ok", false}, {"result", nullptr}, {"errors", {e.what()}}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        reply.ok = false;
        reply.result = nullptr;
        errors.emplace_back(e.what());
        reply.text.clear();
    }

    if (json) {
        out << nlohmann::json{{"ok", reply.ok}, {"result", reply.result}, {"errors", errors}}.dump() << "\n";
    } else {
        if (!reply.text.empty())
            out << reply.text << "\n";
        if (!verify_cmd->parsed())
            for (const auto& e : errors)
                err << "error: " << e << "\n";
    }
    return reply.ok ? 0 : 1;
}

}  // namespace qjalg
