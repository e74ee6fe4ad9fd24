#pragma once

// Derivations of JS-infinity and the bidifferential brackets built from them.
//
// DTAU is the normalized modular derivation (pi/2i) d/dtau, so that every
// generator image has rational coefficients. The Serre derivation is OB
// restricted to M and has no separate tag.

#include <optional>
#include <string>
#include <vector>

#include "qjalg/form_algebra.hpp"

namespace qjalg {

enum class Derivation { DZ, DTAU, OB, DJAC, DELTA };
enum class Bracket { RC_TAU, RC_D, TV };

std::string_view derivation_name(Derivation d);
std::string_view bracket_name(Bracket b);
/// Accepts "rc", "rcd", "tv" (and the enum spellings), case-insensitive.
Bracket parse_bracket(std::string_view name);
Derivation parse_derivation(std::string_view name);

/// Weight added by the derivation on homogeneous input.
int weight_shift(Derivation d);
/// Weight added by the n-th bracket.
int weight_shift(Bracket b, unsigned n);

/// Image of a generator under DZ or DTAU.
const QJForm& generator_image(Derivation d, Gen g);

/// DZ and DTAU act by Leibniz on the generator table; OB, DJAC and DELTA act
/// on each weight component separately (they depend on the weight).
QJForm derive(Derivation d, const QJForm& f);
QJForm derive_n(Derivation d, QJForm f, unsigned times);

/// n-th Rankin-Cohen bracket (RC_TAU with DTAU, RC_D with DJAC) or transvectant (TV).
/// Bilinear over the weight components of both arguments; n = 0 gives fg.
QJForm bracket(Bracket b, const QJForm& f, const QJForm& g, unsigned n);

/// {f,g}_{m+1} = {DTAU f, DZ g}_m - {DZ f, DTAU g}_m, starting from {f,g}_0 = fg.
QJForm transvectant_by_recurrence(const QJForm& f, const QJForm& g, unsigned n);

/// Coefficients of hbar^0 .. hbar^order of f * g. TV carries the 1/n! weights.
std::vector<QJForm> star_truncated(Bracket b, const QJForm& f, const QJForm& g, unsigned order);

/// Order-n coefficient of (f*g)*h and f*(g*h), as computed from star_truncated.
std::pair<QJForm, QJForm> star_associator_sides(Bracket b, const QJForm& f, const QJForm& g,
                                                const QJForm& h, unsigned n);

struct StabilityReport {
    bool closed = true;
    std::optional<std::string> witness;  ///< first generator whose image leaves the algebra
};

StabilityReport check_stability(Algebra algebra, Derivation d);

}  // namespace qjalg
