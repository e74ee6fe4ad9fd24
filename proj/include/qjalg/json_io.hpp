#pragma once

// JSON encodings. Coefficients travel as "p/q" strings so nothing is rounded.

#include <json.hpp>

#include "qjalg/form_algebra.hpp"
#include "qjalg/series.hpp"
#include "qjalg/verify.hpp"

namespace qjalg {

/// [{"exponents": [a,b,c,d,e], "coeff": "p/q"}, ...] in canonical term order.
nlohmann::json form_to_json(const QJForm& f);
/// Inverse of form_to_json; throws DomainError on malformed input.
QJForm form_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const BigradedSeries& s);
nlohmann::json check_to_json(const CheckResult& r);

}  // namespace qjalg
