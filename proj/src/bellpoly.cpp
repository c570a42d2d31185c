#include <bellforge/bellpoly.hpp>

#include <stdexcept>

namespace bellforge
{

namespace
{

Rational rational_pow(const Rational& base, unsigned long e)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return make_rational(num, den);
}

std::vector<Rational> unit_sequence(std::uint32_t n)
{
    std::vector<Rational> out(n + 1, Rational(0));
    out[0] = 1;
    return out;
}

std::vector<Rational> cauchy(const std::vector<Rational>& u, const std::vector<Rational>& v, std::uint32_t n)
{
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::uint32_t i = 0; i <= n; ++i)
        for (std::uint32_t m = 0; m <= i; ++m)
            out[i] += u[m] * v[i - m];
    return out;
}

// P_n of a factor list that may have become empty; the empty product is 1.
Rational bell_P_or_unit(std::uint32_t n, std::vector<Factor> factors)
{
    if (factors.empty())
        return n == 0 ? 1 : 0;
    return bell_P(n, ProductSpec(std::move(factors)));
}

std::vector<Factor> with_exponents(const ProductSpec& base, const std::vector<long>& exps)
{
    std::vector<Factor> out;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0)
            out.emplace_back(base.factors()[i].support, base.factors()[i].z, exps[i]);
    return out;
}

} // namespace

Rational psi(std::uint64_t n, const SupportSet& support, const Rational& z)
{
    if (n == 0)
        throw std::invalid_argument("psi: n must be >= 1");
    Rational total = 0;
    for (auto d : divisors(n))
        if (support.contains(d))
            total += Rational(static_cast<unsigned long>(d)) * rational_pow(z, n / d);
    return total;
}

Rational big_psi(std::uint64_t n, const ProductSpec& spec)
{
    if (n == 0)
        throw std::invalid_argument("big_psi: n must be >= 1");
    Rational total = 0;
    for (const auto& f : spec.factors())
        total -= Rational(f.a) * psi(n, f.support, f.z);
    return total;
}

EvaluatedPsiTable::EvaluatedPsiTable(const ProductSpec& spec, std::uint32_t n) : z_scale_(1)
{
    values_.reserve(n);
    for (std::uint32_t j = 1; j <= n; ++j)
        values_.push_back(big_psi(j, spec));
    for (const auto& f : spec.factors())
        mpz_lcm(z_scale_.get_mpz_t(), z_scale_.get_mpz_t(), f.z.get_den().get_mpz_t());
}

ScaledPsi EvaluatedPsiTable::scaled(bool negate) const
{
    if (!negate)
        return scale_psi(values_, z_scale_);
    std::vector<Rational> flipped;
    flipped.reserve(values_.size());
    for (const auto& v : values_)
        flipped.push_back(-v);
    return scale_psi(flipped, z_scale_);
}

Rational bell_P(std::uint32_t n, const ProductSpec& spec, Execution exec)
{
    if (n == 0)
        return 1;
    return faa_sum(EvaluatedPsiTable(spec, n).scaled(), n, exec);
}

// (-1)^{sum k_j} prod (Psi_j/j)^{k_j} = prod (-Psi_j/j)^{k_j}, so the sign is
// folded into the weights.
Rational bell_W_explicit(std::uint32_t n, const ProductSpec& spec, Execution exec)
{
    if (n == 0)
        return 1;
    return faa_sum(EvaluatedPsiTable(spec, n).scaled(true), n, exec);
}

std::vector<Rational> bell_P_upto(std::uint32_t n, const ProductSpec& spec)
{
    const auto scaled = EvaluatedPsiTable(spec, n).scaled();
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (std::uint32_t m = 0; m <= n; ++m)
        out.push_back(faa_sum(scaled, m));
    return out;
}

std::vector<Rational> bell_W_upto(std::uint32_t n, const ProductSpec& spec)
{
    const auto scaled = EvaluatedPsiTable(spec, n).scaled(true);
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (std::uint32_t m = 0; m <= n; ++m)
        out.push_back(faa_sum(scaled, m));
    return out;
}

Rational bell_W_recursive(std::uint32_t n, const ProductSpec& spec)
{
    const auto p = bell_P_upto(n, spec);
    std::vector<Rational> w(n + 1, Rational(0));
    w[0] = 1;
    for (std::uint32_t m = 1; m <= n; ++m)
    {
        Rational acc = 0;
        for (std::uint32_t k = 0; k < m; ++k)
            acc += w[k] * p[m - k];
        w[m] = -acc;
    }
    return w[n];
}

Rational convolve_WP(std::uint32_t n, const ProductSpec& numer, const ProductSpec& denom)
{
    return ratio_faa_upto(n, RatioSpec{numer, denom})[n];
}

std::vector<Rational> ratio_faa_upto(std::uint32_t n, const RatioSpec& ratio)
{
    const auto p = ratio.numerator ? bell_P_upto(n, *ratio.numerator) : unit_sequence(n);
    const auto w = ratio.denominator ? bell_W_upto(n, *ratio.denominator) : unit_sequence(n);
    return cauchy(p, w, n);
}

std::vector<Rational> ratio_series_upto(std::uint32_t n, const RatioSpec& ratio)
{
    auto num = ratio.numerator ? expand_product(*ratio.numerator, n) : TruncatedSeries::one(n);
    if (!ratio.denominator)
        return num.coeffs();
    return series_mul(num, series_reciprocal(expand_product(*ratio.denominator, n))).coeffs();
}

IdentityCheck check_index_additivity(std::uint32_t n, const ProductSpec& base, const std::vector<long>& a,
                                     const std::vector<long>& b)
{
    const auto s = base.factors().size();
    if (a.size() != s || b.size() != s)
        throw std::invalid_argument("check_index_additivity: index vectors must match the factor count");
    std::vector<long> sum(s);
    for (std::size_t i = 0; i < s; ++i)
        sum[i] = a[i] + b[i];

    const Rational lhs = bell_P_or_unit(n, with_exponents(base, sum));
    Rational rhs = 0;
    for (std::uint32_t j = 0; j <= n; ++j)
        rhs += bell_P_or_unit(j, with_exponents(base, a)) * bell_P_or_unit(n - j, with_exponents(base, b));
    return {lhs == rhs, lhs, rhs};
}

IdentityCheck check_set_additivity(std::uint32_t n, const ProductSpec& specA, const ProductSpec& specB)
{
    const Rational lhs = bell_P(n, specA.concat(specB));
    Rational rhs = 0;
    for (std::uint32_t j = 0; j <= n; ++j)
        rhs += bell_P(j, specA) * bell_P(n - j, specB);
    return {lhs == rhs, lhs, rhs};
}

} // namespace bellforge
