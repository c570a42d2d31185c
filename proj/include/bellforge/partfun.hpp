#ifndef BELLFORGE_PARTFUN_HPP
#define BELLFORGE_PARTFUN_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <bellforge/arith.hpp>
#include <bellforge/bellpoly.hpp>

namespace bellforge
{

// Raised when a quantity that must be a nonnegative integer comes out of the
// exact computation as something else.
class InconsistencyError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

Integer require_natural(const Rational& value, const std::string& what);

// The *_upto sequences below take values for n <= faa_limit from the Faa di
// Bruno sums and the rest from the series engine; p(100) is about 1.9e8
// partitions, so enumerating pi(n) stops being practical somewhere past 60.
// The single-index functions always use the Faa di Bruno sum.
inline constexpr std::uint32_t default_faa_limit = 60;

namespace specs
{
/// prod (1 - t^m), all m >= 1.
ProductSpec euler();
/// prod (1 - t^m)(1 - t^{2m}).
ProductSpec cubic();
/// (1 - t^{3m})^3 (1 - t^{6m})^3 over (1 - t^m)^4 (1 - t^{2m})^4.
RatioSpec chan();
/// (1 - t^{4m}) over (1 - t^m)^2 (1 - t^{2m}).
RatioSpec overcubic();
/// (1 - t^{3m})^6 (1 - t^{4m})^3 over (1 - t^m)^8 (1 - t^{2m})^3.
RatioSpec kim();
/// (1 - t^{2m})^2 over (1 - t^m).
RatioSpec psi_theta();
/// (1 - t^{2m})^5 over (1 - t^m)^2 (1 - t^{4m})^2.
RatioSpec phi_theta();
/// prod over d in parts of (1 - t^d).
ProductSpec restricted(std::span<const std::uint64_t> parts);
} // namespace specs

/// Faa di Bruno sum with weights sigma(j)/j.
Integer partition_p(std::uint32_t n);
std::vector<Integer> partition_p_upto(std::uint32_t n, std::uint32_t faa_limit = default_faa_limit);

/// Weights d_S(j)/j with S the given parts. Rejects an empty or invalid list.
Integer restricted_W(std::uint32_t n, std::span<const std::uint64_t> parts);
std::vector<Integer> restricted_W_upto(std::uint32_t n, std::span<const std::uint64_t> parts,
                                       std::uint32_t faa_limit = default_faa_limit);

/// Cubic partitions: even parts in two colours.
Integer cubic_a(std::uint32_t n);
std::vector<Integer> cubic_a_upto(std::uint32_t n, std::uint32_t faa_limit = default_faa_limit);

/// 3 [t^n] of the Chan quotient, from the series engine alone.
Integer chan_rhs(std::uint32_t n);
std::vector<Integer> chan_rhs_upto(std::uint32_t n);

/// Overcubic partitions through the WP convolution.
Integer overcubic_abar(std::uint32_t n);
std::vector<Integer> overcubic_abar_upto(std::uint32_t n, std::uint32_t faa_limit = default_faa_limit);

/// 6 [t^n] of the Kim quotient, from the series engine alone.
Integer kim_rhs(std::uint32_t n);
std::vector<Integer> kim_rhs_upto(std::uint32_t n);

/// Coefficients of the product forms of Ramanujan's psi and phi.
Integer psi_star(std::uint32_t n);
std::vector<Integer> psi_star_upto(std::uint32_t n, std::uint32_t faa_limit = default_faa_limit);
Integer phi_star(std::uint32_t n);
std::vector<Integer> phi_star_upto(std::uint32_t n, std::uint32_t faa_limit = default_faa_limit);

// F(t) = prod(1-t^{r1 m})^a1 prod(1-t^{r2 m})^a2 / prod(1-t^{s1 m})^b1 prod(1-t^{s2 m})^b2.
// A zero exponent removes its factor.
struct FourFactorSpec
{
    std::uint64_t r1 = 1;
    long a1 = 0;
    std::uint64_t r2 = 1;
    long a2 = 0;
    std::uint64_t s1 = 1;
    long b1 = 0;
    std::uint64_t s2 = 1;
    long b2 = 0;

    /// Rejects a zero step or a negative exponent.
    RatioSpec ratio() const;
};

Rational generic_WP(std::uint32_t n, const FourFactorSpec& spec);

/// W(n, d^s) - W(n - d_s, d^s) == W(n, d^{s-1}), d_s the last entry of
/// parts; W at a negative argument is 0. Needs at least two parts.
IdentityCheck restricted_W_recursion_check(std::uint32_t n, std::span<const std::uint64_t> parts);

bool is_triangular(std::uint64_t n);
bool is_positive_square(std::uint64_t n);

} // namespace bellforge

#endif
