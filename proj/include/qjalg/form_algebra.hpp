#pragma once

// Polynomial model of the algebra Q[wp, dz wp, e4, E1, e2] of index-zero
// singular quasi-Jacobi forms.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qjalg/foundations.hpp"

namespace qjalg {

enum class Gen : std::uint8_t { WP = 0, DWP = 1, E4 = 2, EE1 = 3, EE2 = 4 };

inline constexpr std::array<Gen, 5> kAllGenerators{Gen::WP, Gen::DWP, Gen::E4, Gen::EE1, Gen::EE2};
inline constexpr std::array<int, 5> kGeneratorWeight{2, 3, 4, 1, 2};

constexpr int weight_of(Gen g) { return kGeneratorWeight[static_cast<std::size_t>(g)]; }

/// Surface name used by the parser and renderer ("wp", "dwp", "e4", "e1", "e2").
std::string_view generator_name(Gen g);

using Exponents = std::array<unsigned, 5>;

/// wp^a (dz wp)^b e4^c E1^d e2^e, packed so that integer order is lex order on (e, d, c, b, a).
class Monomial {
public:
    static constexpr unsigned kBits = 12;
    static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

    Monomial() = default;
    explicit Monomial(const Exponents& exps);
    static Monomial of(Gen g, unsigned power = 1);

    unsigned exponent(Gen g) const
    {
        return static_cast<unsigned>((key_ >> shift(g)) & kMaxExponent);
    }
    Exponents exponents() const;
    int weight() const;
    std::uint64_t key() const { return key_; }

    /// Throws DomainError if an exponent would overflow.
    Monomial operator*(const Monomial& other) const;
    /// Requires exponent(g) >= 1.
    Monomial divided_by(Gen g) const;

    auto operator<=>(const Monomial&) const = default;

private:
    static constexpr unsigned shift(Gen g)
    {
        // a lowest, e highest
        return kBits * static_cast<unsigned>(g);
    }
    explicit Monomial(std::uint64_t key) : key_(key) {}

    std::uint64_t key_ = 0;
};

struct DepthProfile {
    unsigned s1 = 0;  ///< modular depth (e2-degree)
    unsigned s2 = 0;  ///< elliptic depth (E1-degree)

    DepthProfile operator+(const DepthProfile& o) const { return {s1 + o.s1, s2 + o.s2}; }
    bool operator==(const DepthProfile&) const = default;
};

using Term = std::pair<Monomial, Rational>;

/// Exact polynomial in the five generators. Terms are kept in descending
/// (e, d, c, b, a) order with no zero coefficients, so equal forms compare equal
/// term by term.
class QJForm {
public:
    QJForm() = default;
    QJForm(const Rational& constant);  // NOLINT(google-explicit-constructor)
    QJForm(int constant) : QJForm(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static QJForm generator(Gen g);
    static QJForm monomial(const Monomial& m, const Rational& coeff = 1);
    /// Builds a canonical form from arbitrary (possibly repeated, possibly zero) terms.
    static QJForm from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// The common weight when the form is homogeneous (zero counts as homogeneous of any weight: nullopt).
    std::optional<int> homogeneous_weight() const;
    bool is_homogeneous() const;

    QJForm operator-() const;
    QJForm& operator+=(const QJForm& o);
    QJForm& operator-=(const QJForm& o);
    QJForm& operator*=(const Rational& r);

    friend QJForm operator+(QJForm a, const QJForm& b) { return a += b; }
    friend QJForm operator-(QJForm a, const QJForm& b) { return a -= b; }
    friend QJForm operator*(const QJForm& a, const QJForm& b);
    friend QJForm operator*(const Rational& r, QJForm f) { return f *= r; }
    friend QJForm operator*(QJForm f, const Rational& r) { return f *= r; }
    friend QJForm operator*(int r, QJForm f) { return f *= Rational(r); }
    friend QJForm operator*(QJForm f, int r) { return f *= Rational(r); }

    bool operator==(const QJForm& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

QJForm pow(const QJForm& f, unsigned n);

/// Scalar multiple and sum, named after the operations they implement.
inline QJForm scale(const Rational& r, const QJForm& f) { return r * f; }
inline QJForm add(const QJForm& f, const QJForm& g) { return f + g; }
inline QJForm mul(const QJForm& f, const QJForm& g) { return f * g; }

/// Sparse accumulator used by the Leibniz and product kernels.
class TermAccumulator {
public:
    void reserve(std::size_t n) { acc_.reserve(n); }
    void add(const Monomial& m, const Rational& c);
    void add_product(const Monomial& m, const Rational& a, const Rational& b);
    QJForm finish();

private:
    std::unordered_map<std::uint64_t, Rational> acc_;
};

/// Partition by weight, ascending; components sum back to f.
std::vector<std::pair<int, QJForm>> weight_components(const QJForm& f);

/// Bidegree in (e2, E1). Throws DomainError on the zero form.
DepthProfile depth_of(const QJForm& f);

enum class Algebra { M, Minf, JS, JS0inf, JSinf0, JSinf };

std::string_view algebra_name(Algebra a);
/// Case-insensitive; throws DomainError on unknown names.
Algebra parse_algebra(std::string_view name);

bool member(const QJForm& f, Algebra algebra);

/// e6 = -(1/140)(dz wp)^2 + (1/35) wp^3 - (3/7) wp e4.
const QJForm& e6_form();

/// A form together with the power of the formal constant c = 2 i pi multiplying it.
struct ScaledJForm {
    QJForm form;
    int c_power = 0;

    bool operator==(const ScaledJForm&) const = default;
};

/// Coefficient of X^j1 Y^j2 after e2 -> e2 - cX, E1 -> E1 + cY.
ScaledJForm q_coefficient(const QJForm& f, unsigned j1, unsigned j2);

enum class EisensteinMethod { LAURENT, GUNTHER };

/// e_{two_n} written in wp, dz wp, e4. two_n must be even and >= 4.
QJForm eisenstein_in_generators(int two_n, EisensteinMethod method);

/// All monomials of the given weight whose exponents vanish outside `allowed`.
std::vector<Monomial> monomials_of_weight(int weight, std::span<const Gen> allowed);

/// Generators spanning each subalgebra, in the order stability witnesses are searched.
/// M and Minf are reported with e6_form() standing in for e6.
std::vector<std::pair<std::string, QJForm>> algebra_generators(Algebra a);

/// Human-readable text that parse() maps back to the same form.
std::string render(const QJForm& f);
std::string render(const ScaledJForm& f);

}  // namespace qjalg
