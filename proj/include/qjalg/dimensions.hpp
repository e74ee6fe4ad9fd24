#pragma once

// Dimension counts for the graded pieces of JS, JS^{0,inf}, JS^{inf,0} and JS^{inf}.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qjalg/foundations.hpp"

namespace qjalg {

enum class DimFamily { DS, DS0INF, DSINF0, DSINF };

std::string_view family_name(DimFamily f);
DimFamily parse_family(std::string_view name);

/// Generator weights counted by the family: DS (2,3,4), DS0INF (1,2,3,4), ...
std::span<const int> family_weights(DimFamily f);

/// floor(j/12) + (0 if 12 | j-2 else 1), extended verbatim to negative j.
std::int64_t modular_dim(std::int64_t j);

/// Nearest integer; exact halves round down (n + 1/2 -> n).
BigInt nearest_int(const Rational& x);

/// Quasi-polynomial closed form, evaluated through its residue class mod 12.
BigInt dim_closed(DimFamily family, std::int64_t k);

/// Number of nonnegative solutions of sum w_i x_i = k, by dynamic programming.
BigInt dim_brute(DimFamily family, std::int64_t k);

/// Coefficients 0..kmax of prod 1/(1 - z^{w_i}), by truncated series division.
std::vector<BigInt> series_coefficients(DimFamily family, std::int64_t kmax);

/// Alcuin's sequence: integer triangles of perimeter n.
BigInt alcuin(std::int64_t n);

}  // namespace qjalg
