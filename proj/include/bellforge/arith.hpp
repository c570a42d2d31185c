#ifndef BELLFORGE_ARITH_HPP
#define BELLFORGE_ARITH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bellforge
{

// Unbounded integers and rationals. gmpxx keeps mpq_class canonical after
// every arithmetic operation (positive denominator, gcd 1); use
// make_rational() when building one from a raw numerator/denominator pair.
using Integer = mpz_class;
using Rational = mpq_class;

class SupportSet;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else
/// or on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integral(const Rational& value);

struct PrimePower
{
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; factorize(1) is empty.
using Factorization = std::vector<PrimePower>;

/// Trial division. Rejects n == 0.
Factorization factorize(std::uint64_t n);

/// Sum of divisors by enumerating d <= sqrt(n). Rejects n == 0.
Integer sigma(std::uint64_t n);

/// Product over p^b of sum_{k=0}^{floor(b/2)} (-1)^k C(b-k,k) p^k (1+p)^(b-2k).
Integer sigma_via_factorization(const Factorization& factors);

/// Exact C(a, b) by the multiplicative loop; 0 when b > a.
Integer binomial(std::uint64_t a, std::uint64_t b);

Integer factorial(std::uint64_t n);

/// Sum of the divisors of n that lie in the support.
Integer restricted_divisor_sum(std::uint64_t n, const SupportSet& support);

/// 1 if i divides j, else 0. Rejects i == 0.
unsigned indicator(std::uint64_t i, std::uint64_t j);

/// All positive divisors of n in increasing order. Rejects n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

} // namespace bellforge

#endif
