// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qjalg/dimensions.hpp"
#include "qjalg/verify.hpp"

using namespace qjalg;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0: untimed
    std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> one(CheckResult r) { return {std::move(r)}; }

std::vector<CheckResult> join(std::vector<CheckResult> a, const std::vector<CheckResult>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

int main()
{
    const VerifyOptions o;
    const std::vector<Criterion> criteria{
        {1, "dimension table", 1e-3, [] { return one(check_dimension_table()); }},
        {2, "oracle triangle k <= 2000", 5.0, [&] { return one(check_dimension_triangle(o.dim_kmax)); }},
        {3, "dimension recurrences k <= 500", 0, [&] { return check_dimension_recurrences(o.recurrence_kmax); }},
        {4, "identity battery (exact and series)", 2.0,
         [&] {
             return std::vector<CheckResult>{check_identity_battery_exact(),
                                             check_identity_battery_series(o.q_prec, o.window)};
         }},
        {5, "structure checks", 0, [&] { return check_structure(o); }},
        {6, "stability matrix", 0, [] { return one(check_stability_matrix()); }},
        {7, "bracket stability and witnesses", 30.0,
         [&] { return join(check_bracket_stability(o), one(check_bracket_witnesses())); }},
        {8, "formal deformations to order 4", 60.0, [&] { return check_deformations(o); }},
        {9, "Eisenstein reduction", 0, [&] { return check_eisenstein(o); }},
        {10, "classical restriction", 0, [&] { return one(check_classical_restriction(o)); }},
        {11, "transvectant recurrence", 0, [&] { return one(check_transvectant_recurrence(o)); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        std::string problem;
        try {
            results = c.run();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (const auto& r : results)
            if (!r.ok && problem.empty())
                problem = r.name + ": " + r.detail;
        if (problem.empty() && c.limit_seconds > 0 && secs > c.limit_seconds)
            problem = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
        const bool ok = problem.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %d: %s  %s (%.4f s)%s%s\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                    ok ? "" : "  ", problem.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
