#include "qjalg/foundations.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qjalg {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text)
{
    auto is_digits = [](const std::string& s) {
        if (s.empty())
            return false;
        for (char ch : s)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw DomainError("malformed rational '" + text + "'");
    BigInt n(num), d(den);
    if (d == 0)
        throw DomainError("malformed rational '" + text + "': zero denominator");
    return make_rational(negative ? BigInt(-n) : n, d);
}

std::string rational_to_pq(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational bernoulli(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    while (cache.size() <= n) {
        const long m = static_cast<long>(cache.size());
        Rational acc = 0;
        for (long k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[static_cast<std::size_t>(k)];
        Rational bm = -acc / Rational(m + 1);
        bm.canonicalize();
        cache.push_back(bm);
    }
    return cache[n];
}

BigInt sigma(unsigned k, std::uint64_t n)
{
    if (n == 0)
        throw DomainError("sigma: n must be positive");
    if (k == 0)
        throw DomainError("sigma: k must be positive");
    static std::mutex mutex;
    static std::map<std::pair<unsigned, std::uint64_t>, BigInt> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({k, n});
        if (it != cache.end())
            return it->second;
    }
    BigInt total = 0;
    auto power = [k](std::uint64_t d) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k - 1);
        return p;
    };
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        total += power(d);
        if (d != n / d)
            total += power(n / d);
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::make_pair(k, n), total);
    return total;
}

BigInt binomial(long n, long k)
{
    if (n < 0)
        throw DomainError("binomial: n must be nonnegative");
    if (k < 0 || k > n)
        return 0;
    static std::mutex mutex;
    static std::map<std::pair<long, long>, BigInt> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end())
        return it->second;
    BigInt value;
    mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    cache.emplace(std::make_pair(n, k), value);
    return value;
}

BigInt factorial(unsigned n)
{
    BigInt value;
    mpz_fac_ui(value.get_mpz_t(), n);
    return value;
}

}  // namespace qjalg
