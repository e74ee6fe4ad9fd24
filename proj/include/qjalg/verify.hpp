#pragma once

// Named verification batteries. Each check is deterministic for a given seed and
// reports pass/fail with a short detail line. The CLI `verify` command and the
// acceptance runner share these.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qjalg/differential.hpp"
#include "qjalg/form_algebra.hpp"

namespace qjalg {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 0x5eed2024;
    int q_prec = 8;
    int window = 16;
    int structure_forms = 200;
    int structure_max_weight = 14;
    int bracket_pairs = 100;
    unsigned bracket_max_n = 4;
    int bracket_max_weight = 10;
    int deformation_triples = 20;
    unsigned deformation_order = 4;
    int deformation_max_weight = 8;
    int recurrence_pairs = 50;
    unsigned recurrence_max_n = 5;
    int dim_kmax = 2000;
    int recurrence_kmax = 500;
    int eisenstein_max = 24;
};

/// identities, stability, brackets, deformations, dimensions, oracle
std::span<const std::string_view> suite_names();
/// Throws DomainError on an unknown suite; "all" runs every suite in order.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options = {});

// Random test data ------------------------------------------------------------

/// Generators whose polynomial ring is the given algebra (M and Minf are not monomial; rejected).
std::span<const Gen> monomial_generators(Algebra a);

/// Up to max_terms distinct monomials of the weight with small nonzero rational coefficients;
/// zero when the weight space is empty.
QJForm random_form(std::mt19937_64& rng, int weight, std::span<const Gen> allowed, int max_terms = 4);
/// Like random_form with a weight drawn from [min_weight, max_weight] whose space is nonempty.
QJForm random_nonzero_form(std::mt19937_64& rng, int min_weight, int max_weight, std::span<const Gen> allowed,
                           int max_terms = 4);

// Individual batteries ----------------------------------------------------------

CheckResult check_identity_battery_exact();
CheckResult check_identity_battery_series(int q_prec, int window);
std::vector<CheckResult> check_structure(const VerifyOptions& o);
CheckResult check_stability_matrix();
std::vector<CheckResult> check_derivation_laws(const VerifyOptions& o);
std::vector<CheckResult> check_bracket_stability(const VerifyOptions& o);
CheckResult check_bracket_witnesses();
std::vector<CheckResult> check_bracket_laws(const VerifyOptions& o);
CheckResult check_classical_restriction(const VerifyOptions& o);
CheckResult check_transvectant_recurrence(const VerifyOptions& o);
std::vector<CheckResult> check_deformations(const VerifyOptions& o);
CheckResult check_dimension_table();
CheckResult check_dimension_triangle(int kmax);
std::vector<CheckResult> check_dimension_recurrences(int kmax);
std::vector<CheckResult> check_eisenstein(const VerifyOptions& o);
std::vector<CheckResult> check_oracle(const VerifyOptions& o);

}  // namespace qjalg
