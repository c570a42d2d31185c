#ifndef BELLFORGE_SERIES_HPP
#define BELLFORGE_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <bellforge/arith.hpp>
#include <bellforge/support.hpp>

namespace bellforge
{

// Prefix c_0..c_N of a formal power series over the rationals. Every
// binary operation requires both operands to carry the same order N.
class TruncatedSeries
{
  public:
    /// Rejects an empty coefficient list.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries zero(std::uint32_t order);
    static TruncatedSeries one(std::uint32_t order);
    static TruncatedSeries constant(const Rational& c, std::uint32_t order);

    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Unchecked; see coefficient() for the checked accessor.
    const Rational& operator[](std::uint32_t n) const { return coeffs_[n]; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<Rational> coeffs_;
};

// (support, z, a): the factor prod_{m in support} (1 - z t^m)^a.
struct Factor
{
    SupportSet support;
    Rational z;
    long a;

    /// Rejects a == 0.
    Factor(SupportSet support, Rational z, long a);
};

// Non-empty list of factors; the product f(t, z, C, a).
class ProductSpec
{
  public:
    /// Rejects an empty list.
    explicit ProductSpec(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }

    /// Same supports and arguments with every exponent negated.
    ProductSpec negated() const;
    /// Factor list of *this followed by that of other.
    ProductSpec concat(const ProductSpec& other) const;

    std::string describe() const;

  private:
    std::vector<Factor> factors_;
};

TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries series_add(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries series_scale(const TruncatedSeries& u, const Rational& c);

/// Triangular recurrence v_n = -(1/u_0) sum_{k=1..n} u_k v_{n-k}.
/// Rejects u_0 == 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& u);

/// log u through g' = u'/u, i.e. n g_n = n u_n - sum_{k=1..n-1} k g_k u_{n-k}.
/// Rejects u_0 != 1.
TruncatedSeries series_log(const TruncatedSeries& u);

/// exp u through n e_n = sum_{k=1..n} k u_k e_{n-k}. Rejects u_0 != 0.
TruncatedSeries series_exp(const TruncatedSeries& u);

/// Binary exponentiation; negative exponents go through the reciprocal.
TruncatedSeries series_int_pow(const TruncatedSeries& u, long a);

/// The truncated series 1 - z t^m of the given order.
TruncatedSeries binomial_factor(std::uint64_t m, const Rational& z, std::uint32_t order);

/// Direct product of (1 - z t^m)^a over every factor and every support
/// member m <= N, truncated at N.
TruncatedSeries expand_product(const ProductSpec& spec, std::uint32_t order);

/// expand_product(numerator) / expand_product(denominator).
TruncatedSeries expand_ratio(const ProductSpec& numerator, const ProductSpec& denominator, std::uint32_t order);

/// Checked c_n; rejects n > order.
const Rational& coefficient(const TruncatedSeries& u, std::uint32_t n);

} // namespace bellforge

#endif
