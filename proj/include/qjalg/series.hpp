#pragma once

// Truncated bigraded series in q = exp(2 i pi tau) and u = pi z with exact
// rational coefficients. A series of weight k stands for pi^k F(q, u), which
// keeps every coefficient of the generator expansions rational.

#include <complex>
#include <stdexcept>
#include <vector>

#include "qjalg/form_algebra.hpp"

namespace qjalg {

/// Two series cannot be compared (or combined) on the requested window.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficients are known for 0 <= m < q_prec and u_val <= n <= u_max; every
/// coefficient with n < u_val is zero.
class BigradedSeries {
public:
    BigradedSeries(int weight, int q_prec, int u_val, int u_max);

    static BigradedSeries constant(const Rational& value, int q_prec, int u_max);

    int weight() const { return weight_; }
    int q_prec() const { return q_prec_; }
    int u_val() const { return u_val_; }
    int u_max() const { return u_max_; }

    /// Zero below u_val; throws PrecisionError outside the known window.
    const Rational& coeff(int m, int n) const;
    void set(int m, int n, const Rational& value);
    void add_to(int m, int n, const Rational& value);

    bool is_zero() const;
    /// Restricts the window to [u_val, u_max] and q-precision q_prec (both must shrink or stay).
    BigradedSeries truncated(int q_prec, int u_max) const;

    BigradedSeries operator-() const;
    BigradedSeries scaled(const Rational& r) const;

private:
    std::size_t index(int m, int n) const
    {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(u_max_ - u_val_ + 1)
               + static_cast<std::size_t>(n - u_val_);
    }
    bool in_window(int m, int n) const { return m >= 0 && m < q_prec_ && n >= u_val_ && n <= u_max_; }

    int weight_;
    int q_prec_;
    int u_val_;
    int u_max_;
    std::vector<Rational> coeffs_;

    friend BigradedSeries series_mul(const BigradedSeries&, const BigradedSeries&);
    friend BigradedSeries series_add(const BigradedSeries&, const BigradedSeries&);
};

/// e_k / pi^k as a q-series (k even, k >= 2).
BigradedSeries eisenstein_qseries(int k, int q_prec);

/// A series constant in u (window [0, 0]) viewed on the window [0, u_max].
BigradedSeries lift_constant(const BigradedSeries& s, int u_max);

/// Ring-homomorphic image of a homogeneous form with window top u_max.
BigradedSeries expand(const QJForm& f, int q_prec, int u_max);

/// Requires equal weights. Window: lowest u_val, lowest u_max, lowest q_prec.
BigradedSeries series_add(const BigradedSeries& a, const BigradedSeries& b);
BigradedSeries series_sub(const BigradedSeries& a, const BigradedSeries& b);
/// u_max' = min(u_valA + u_maxB, u_valB + u_maxA).
BigradedSeries series_mul(const BigradedSeries& a, const BigradedSeries& b);

enum class SeriesDerivation {
    DU,   ///< d/dz = pi d/du
    QDQ,  ///< normalized d/dtau = pi^2 q d/dq
};

BigradedSeries series_derive(SeriesDerivation which, const BigradedSeries& a);

/// Equality on the common window. Throws PrecisionError when the windows overlap
/// on fewer than min_window u-exponents.
bool series_equal(const BigradedSeries& a, const BigradedSeries& b, int min_window);

/// Approximate value of f at (tau, z) from its truncated expansion.
/// Requires Im(tau) > 0 and 0 < |z| < min(1, |tau|)/2.
std::complex<double> eval_numeric(const QJForm& f, std::complex<double> tau, std::complex<double> z, int q_prec,
                                  int u_max);

}  // namespace qjalg
