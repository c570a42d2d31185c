#ifndef BELLFORGE_BELLPOLY_HPP
#define BELLFORGE_BELLPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <bellforge/arith.hpp>
#include <bellforge/kernels.hpp>
#include <bellforge/series.hpp>

namespace bellforge
{

/// psi_n(z) = sum over d in support with d | n of d z^(n/d). Rejects n == 0.
Rational psi(std::uint64_t n, const SupportSet& support, const Rational& z);

/// Psi_n = -sum_j a_j psi_n(z_j) over the spec's factors. Rejects n == 0.
Rational big_psi(std::uint64_t n, const ProductSpec& spec);

// Psi_1..Psi_n of one spec, evaluated once and shared by every partition
// term of the sums below.
class EvaluatedPsiTable
{
  public:
    EvaluatedPsiTable(const ProductSpec& spec, std::uint32_t n);

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& operator[](std::uint32_t j) const { return values_[j - 1]; }

    /// Psi_j Q^j with Q the lcm of the spec's z denominators.
    ScaledPsi scaled(bool negate = false) const;

  private:
    std::vector<Rational> values_;
    Integer z_scale_;
};

/// P_n(z, C, a) by the Faa di Bruno sum over pi(n); P_0 = 1.
Rational bell_P(std::uint32_t n, const ProductSpec& spec, Execution exec = Execution::parallel);

/// W_n = sum over pi(n) of (-1)^{sum k_j} prod (1/k_j!)(Psi_j/j)^{k_j},
/// Psi taken from the spec as given.
Rational bell_W_explicit(std::uint32_t n, const ProductSpec& spec, Execution exec = Execution::parallel);

/// W_0 = 1, W_n = -sum_{k<n} W_k P_{n-k}.
Rational bell_W_recursive(std::uint32_t n, const ProductSpec& spec);

/// P_0..P_n and W_0..W_n, one Faa di Bruno sum per index.
std::vector<Rational> bell_P_upto(std::uint32_t n, const ProductSpec& spec);
std::vector<Rational> bell_W_upto(std::uint32_t n, const ProductSpec& spec);

/// WP_n = sum_{m=0..n} P_m(numer) W_{n-m}(denom).
Rational convolve_WP(std::uint32_t n, const ProductSpec& numer, const ProductSpec& denom);

// numerator / denominator, either side possibly absent (constant 1).
struct RatioSpec
{
    std::optional<ProductSpec> numerator;
    std::optional<ProductSpec> denominator;
};

/// WP_0..WP_n through the P and W sequences.
std::vector<Rational> ratio_faa_upto(std::uint32_t n, const RatioSpec& ratio);
/// The same coefficients from the series oracle.
std::vector<Rational> ratio_series_upto(std::uint32_t n, const RatioSpec& ratio);

struct IdentityCheck
{
    bool pass;
    Rational lhs;
    Rational rhs;
};

/// P_n(z,C,a+b) against sum_j P_j(z,C,a) P_{n-j}(z,C,b). `base` supplies
/// supports and arguments; a and b replace its exponents and must match its
/// length. A factor whose a_j + b_j vanishes drops out of the left side.
IdentityCheck check_index_additivity(std::uint32_t n, const ProductSpec& base, const std::vector<long>& a,
                                     const std::vector<long>& b);

/// P_n(z, A+B, a+b) (concatenated factor list) against
/// sum_j P_j(z,A,a) P_{n-j}(z,B,b).
IdentityCheck check_set_additivity(std::uint32_t n, const ProductSpec& specA, const ProductSpec& specB);

} // namespace bellforge

#endif
