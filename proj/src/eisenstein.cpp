#include <map>
#include <mutex>

#include "qjalg/differential.hpp"
#include "qjalg/form_algebra.hpp"

namespace qjalg {

namespace {

// c_n = (2n+1) e_{2n+2} are the Laurent coefficients of wp. Comparing z^{2n-2}
// in dz^2 wp = 6 wp^2 - 30 e4 gives c_n (2n(2n-1) - 12) = 6 sum_{a+b=n-1} c_a c_b.
QJForm laurent_step(std::map<int, QJForm>& known, int n)
{
    auto c = [&](int m) { return Rational(2 * m + 1) * known.at(2 * m + 2); };
    QJForm sum;
    for (int a = 1; a <= n - 2; ++a)
        sum += c(a) * c(n - 1 - a);
    const Rational denom = Rational(2 * n * (2 * n - 1) - 12) * Rational(2 * n + 1);
    return Rational(6) / denom * sum;
}

// Solves the z^{2n} coefficient of -4 dtau wp = E1 dz wp + 2 wp^2 - 2 e2 wp - 20 e4
// for e_{2n+4}.
QJForm gunther_step(std::map<int, QJForm>& known, int n)
{
    const QJForm& top = known.at(2 * n + 2);
    QJForm rhs = Rational((n + 1) * (2 * n + 1)) * top * QJForm::generator(Gen::EE2);
    for (int a = 1; a <= n - 1; ++a) {
        const int b = n - a;
        rhs += Rational((2 * a + 1) * (a - 2 * b - 1)) * known.at(2 * a + 2) * known.at(2 * b + 2);
    }
    rhs -= Rational(2 * (2 * n + 1)) * derive(Derivation::DTAU, top);
    QJForm result = Rational(1, (n + 2) * (2 * n + 5)) * rhs;
    if (!member(result, Algebra::JS))
        throw InconsistencyError("Gunther recursion left e2 or E1 terms in e_" + std::to_string(2 * n + 4));
    return result;
}

}  // namespace

QJForm eisenstein_in_generators(int two_n, EisensteinMethod method)
{
    if (two_n < 4 || two_n % 2 != 0)
        throw DomainError("eisenstein_in_generators: weight must be even and >= 4");

    static std::mutex mutex;
    static std::map<int, QJForm> laurent{{4, QJForm::generator(Gen::E4)}, {6, e6_form()}};
    static std::map<int, QJForm> gunther{{4, QJForm::generator(Gen::E4)}};

    std::lock_guard<std::mutex> lock(mutex);
    if (method == EisensteinMethod::LAURENT) {
        while (laurent.rbegin()->first < two_n) {
            const int next = laurent.rbegin()->first + 2;
            laurent.emplace(next, laurent_step(laurent, next / 2 - 1));
        }
        return laurent.at(two_n);
    }
    while (gunther.rbegin()->first < two_n) {
        const int next = gunther.rbegin()->first + 2;
        gunther.emplace(next, gunther_step(gunther, next / 2 - 2));
    }
    return gunther.at(two_n);
}

}  // namespace qjalg
