#include <bellforge/arith.hpp>
#include <bellforge/support.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bellforge
{

namespace
{

bool is_integer_literal(std::string_view text, bool allow_sign)
{
    if (!text.empty() && allow_sign && (text.front() == '-' || text.front() == '+'))
        text.remove_prefix(1);
    return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer ui_pow(const Integer& base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text, true))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const Integer num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text));
    if (slash == std::string_view::npos)
        return Rational(num);
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, false))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return make_rational(num, Integer(std::string(den_text)));
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Factorization factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be >= 1");
    Factorization out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2))
    {
        unsigned b = 0;
        while (n % p == 0)
        {
            n /= p;
            ++b;
        }
        if (b > 0)
            out.push_back({p, b});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d <= n / d; ++d)
    {
        if (n % d != 0)
            continue;
        low.push_back(d);
        if (d != n / d)
            high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Integer sigma(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("sigma: n must be >= 1");
    Integer total = 0;
    for (std::uint64_t d = 1; d <= n / d; ++d)
    {
        if (n % d != 0)
            continue;
        total += d;
        if (d != n / d)
            total += n / d;
    }
    return total;
}

Integer binomial(std::uint64_t a, std::uint64_t b)
{
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    Integer out = 1;
    // out stays C(a-b+i, i) after step i, so each division is exact.
    for (std::uint64_t i = 1; i <= b; ++i)
    {
        out *= Integer(static_cast<unsigned long>(a - b + i));
        mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return out;
}

Integer factorial(std::uint64_t n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer sigma_via_factorization(const Factorization& factors)
{
    Integer product = 1;
    for (const auto& [prime, exponent] : factors)
    {
        const Integer p(static_cast<unsigned long>(prime));
        const Integer p1 = p + 1;
        Integer inner = 0;
        for (unsigned k = 0; k <= exponent / 2; ++k)
        {
            Integer term = binomial(exponent - k, k) * ui_pow(p, k) * ui_pow(p1, exponent - 2 * k);
            if (k % 2 == 0)
                inner += term;
            else
                inner -= term;
        }
        product *= inner;
    }
    return product;
}

Integer restricted_divisor_sum(std::uint64_t n, const SupportSet& support)
{
    if (n == 0)
        throw std::invalid_argument("restricted_divisor_sum: n must be >= 1");
    switch (support.kind())
    {
    case SupportSet::Kind::all:
        return sigma(n);
    case SupportSet::Kind::multiples:
    {
        const auto r = support.step();
        if (n % r != 0)
            return 0;
        return Integer(static_cast<unsigned long>(r)) * sigma(n / r);
    }
    case SupportSet::Kind::finite:
    {
        Integer total = 0;
        for (auto d : support.elements())
            if (n % d == 0)
                total += static_cast<unsigned long>(d);
        return total;
    }
    }
    return 0;
}

unsigned indicator(std::uint64_t i, std::uint64_t j)
{
    if (i == 0)
        throw std::invalid_argument("indicator: i must be >= 1");
    return j % i == 0 ? 1u : 0u;
}

} // namespace bellforge
