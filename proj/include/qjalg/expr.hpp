#pragma once

// Surface syntax for forms: rational literals, the generators wp, dwp, e1, e2,
// e4 (plus e6 as sugar), + - * ^ and the calls dz, dtau, ob, d, delta, rc,
// rcd, tv, q, eis. Identifiers are case-insensitive.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qjalg/form_algebra.hpp"

namespace qjalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow, Call };
    Kind kind;
    std::size_t offset = 0;
    Rational value;             ///< Number
    std::string name;           ///< Ident (lowercased) or Call
    unsigned exponent = 0;      ///< Pow
    std::vector<ExprPtr> args;  ///< operands; integer call arguments are Number nodes
};

ExprPtr parse(std::string_view text);

/// S-expression dump used by tests: (sub (pow wp 2) (mul 5 e4)).
std::string to_sexpr(const Expr& e);

using Value = std::variant<QJForm, ScaledJForm>;

/// q(...) anywhere in the expression makes the result a ScaledJForm.
Value evaluate(const Expr& e);
Value evaluate(std::string_view text);

/// Evaluates and insists on a plain form (no q(...)).
QJForm evaluate_form(std::string_view text);

}  // namespace qjalg
