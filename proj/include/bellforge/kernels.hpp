#ifndef BELLFORGE_KERNELS_HPP
#define BELLFORGE_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <bellforge/arith.hpp>

namespace bellforge
{

// Faa di Bruno partition sums
//
//     sum over pi(n) of prod_j (1/k_j!) (psi_j / j)^{k_j}
//
// with psi[j-1] = psi_j. Two implementations are kept side by side:
//
//  * faa_sum_reference walks iter_partitions() and accumulates exact
//    rationals term by term. It is slow and exists to check the other one.
//
//  * faa_sum works in integers. With a scale Q such that psi_j Q^j is
//    integral, each term times n! Q^n is the integer
//        n! / prod(j^k_j k_j!) * prod (psi_j Q^j)^k_j,
//    built incrementally down a depth-first walk over part sizes with one
//    multiply and one exact division per chosen part. The walk is split
//    into independent subtrees (largest part, its multiplicity) that run
//    under OpenMP; partial sums are reduced in subtree order.

Rational faa_sum_reference(std::span<const Rational> psi, std::uint32_t n);

struct ScaledPsi
{
    Integer scale;              ///< Q
    std::vector<Integer> values; ///< values[j-1] = psi_j * Q^j
};

/// Scales with the given Q; throws std::domain_error if some psi_j Q^j is
/// not an integer.
ScaledPsi scale_psi(std::span<const Rational> psi, const Integer& scale);

/// Picks Q as the lcm of all denominators, which always works.
ScaledPsi scale_psi(std::span<const Rational> psi);

enum class Execution
{
    serial,
    parallel
};

/// Needs psi.values.size() >= n.
Rational faa_sum(const ScaledPsi& psi, std::uint32_t n, Execution exec = Execution::parallel);

inline Rational faa_sum(std::span<const Rational> psi, std::uint32_t n, Execution exec = Execution::parallel)
{
    return faa_sum(scale_psi(psi.first(n)), n, exec);
}

/// Number of OpenMP threads the parallel kernel would use (1 without OpenMP).
int kernel_threads();

} // namespace bellforge

#endif
