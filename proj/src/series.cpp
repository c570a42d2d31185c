#include <bellforge/series.hpp>

#include <stdexcept>

namespace bellforge
{

namespace
{

void require_same_order(const TruncatedSeries& u, const TruncatedSeries& v, const char* op)
{
    if (u.order() != v.order())
        throw std::invalid_argument(std::string(op) + ": series orders differ (" + std::to_string(u.order()) +
                                    " vs " + std::to_string(v.order()) + ")");
}

// In-place multiplication by (1 - z t^m).
void mul_binomial(std::vector<Rational>& c, std::uint64_t m, const Rational& z)
{
    for (std::size_t n = c.size(); n-- > m;)
        c[n] -= z * c[n - m];
}

// In-place division by (1 - z t^m), i.e. c_n += z c_{n-m} ascending.
void div_binomial(std::vector<Rational>& c, std::uint64_t m, const Rational& z)
{
    for (std::size_t n = m; n < c.size(); ++n)
        c[n] += z * c[n - m];
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("truncated series needs at least c_0");
}

TruncatedSeries TruncatedSeries::zero(std::uint32_t order)
{
    return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(std::uint32_t order) { return constant(1, order); }

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::uint32_t order)
{
    std::vector<Rational> coeffs(order + 1, Rational(0));
    coeffs[0] = c;
    return TruncatedSeries(std::move(coeffs));
}

Factor::Factor(SupportSet support_, Rational z_, long a_) : support(std::move(support_)), z(std::move(z_)), a(a_)
{
    if (a == 0)
        throw std::invalid_argument("factor exponent a must be nonzero");
}

ProductSpec::ProductSpec(std::vector<Factor> factors) : factors_(std::move(factors))
{
    if (factors_.empty())
        throw std::invalid_argument("product spec needs at least one factor");
}

ProductSpec ProductSpec::negated() const
{
    std::vector<Factor> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_)
        out.emplace_back(f.support, f.z, -f.a);
    return ProductSpec(std::move(out));
}

ProductSpec ProductSpec::concat(const ProductSpec& other) const
{
    auto out = factors_;
    out.insert(out.end(), other.factors_.begin(), other.factors_.end());
    return ProductSpec(std::move(out));
}

std::string ProductSpec::describe() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < factors_.size(); ++i)
    {
        const auto& f = factors_[i];
        out += (i ? ", " : "") + std::string("(") + f.support.describe() + ", z=" + to_string(f.z) +
               ", a=" + std::to_string(f.a) + ")";
    }
    return out + "]";
}

TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v)
{
    require_same_order(u, v, "series_mul");
    const auto order = u.order();
    std::vector<Rational> w(order + 1, Rational(0));
    for (std::uint32_t i = 0; i <= order; ++i)
    {
        if (u[i] == 0)
            continue;
        for (std::uint32_t j = 0; i + j <= order; ++j)
            w[i + j] += u[i] * v[j];
    }
    return TruncatedSeries(std::move(w));
}

TruncatedSeries series_add(const TruncatedSeries& u, const TruncatedSeries& v)
{
    require_same_order(u, v, "series_add");
    auto w = u.coeffs();
    for (std::uint32_t i = 0; i <= u.order(); ++i)
        w[i] += v[i];
    return TruncatedSeries(std::move(w));
}

TruncatedSeries series_scale(const TruncatedSeries& u, const Rational& c)
{
    auto w = u.coeffs();
    for (auto& x : w)
        x *= c;
    return TruncatedSeries(std::move(w));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& u)
{
    if (u[0] == 0)
        throw std::domain_error("series_reciprocal: constant term is zero");
    const auto order = u.order();
    const Rational inv0 = 1 / u[0];
    std::vector<Rational> v(order + 1, Rational(0));
    v[0] = inv0;
    for (std::uint32_t n = 1; n <= order; ++n)
    {
        Rational acc = 0;
        for (std::uint32_t k = 1; k <= n; ++k)
            acc += u[k] * v[n - k];
        v[n] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries series_log(const TruncatedSeries& u)
{
    if (u[0] != 1)
        throw std::domain_error("series_log: constant term must be 1");
    const auto order = u.order();
    std::vector<Rational> g(order + 1, Rational(0));
    for (std::uint32_t n = 1; n <= order; ++n)
    {
        Rational acc = Rational(n) * u[n];
        for (std::uint32_t k = 1; k < n; ++k)
            acc -= Rational(k) * g[k] * u[n - k];
        g[n] = acc / n;
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries series_exp(const TruncatedSeries& u)
{
    if (u[0] != 0)
        throw std::domain_error("series_exp: constant term must be 0");
    const auto order = u.order();
    std::vector<Rational> e(order + 1, Rational(0));
    e[0] = 1;
    for (std::uint32_t n = 1; n <= order; ++n)
    {
        Rational acc = 0;
        for (std::uint32_t k = 1; k <= n; ++k)
            acc += Rational(k) * u[k] * e[n - k];
        e[n] = acc / n;
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries series_int_pow(const TruncatedSeries& u, long a)
{
    if (a < 0)
    {
        if (u[0] == 0)
            throw std::domain_error("series_int_pow: negative power of a series with zero constant term");
        return series_reciprocal(series_int_pow(u, -a));
    }
    auto result = TruncatedSeries::one(u.order());
    auto base = u;
    for (unsigned long e = static_cast<unsigned long>(a); e > 0; e >>= 1)
    {
        if (e & 1)
            result = series_mul(result, base);
        if (e > 1)
            base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries binomial_factor(std::uint64_t m, const Rational& z, std::uint32_t order)
{
    std::vector<Rational> c(order + 1, Rational(0));
    c[0] = 1;
    if (m <= order)
        c[m] -= z;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries expand_product(const ProductSpec& spec, std::uint32_t order)
{
    std::vector<Rational> c(order + 1, Rational(0));
    c[0] = 1;
    for (const auto& f : spec.factors())
    {
        for (auto m : f.support.members_up_to(order))
        {
            for (long i = 0; i < (f.a > 0 ? f.a : -f.a); ++i)
            {
                if (f.a > 0)
                    mul_binomial(c, m, f.z);
                else
                    div_binomial(c, m, f.z);
            }
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries expand_ratio(const ProductSpec& numerator, const ProductSpec& denominator, std::uint32_t order)
{
    return series_mul(expand_product(numerator, order), series_reciprocal(expand_product(denominator, order)));
}

const Rational& coefficient(const TruncatedSeries& u, std::uint32_t n)
{
    if (n > u.order())
        throw std::out_of_range("coefficient: index " + std::to_string(n) + " exceeds order " +
                                std::to_string(u.order()));
    return u[n];
}

} // namespace bellforge
