#include <bellforge/kernels.hpp>
#include <bellforge/partitions.hpp>

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellforge
{

Rational faa_sum_reference(std::span<const Rational> psi, std::uint32_t n)
{
    if (psi.size() < n)
        throw std::invalid_argument("faa_sum_reference: need psi_1..psi_n");
    Rational total = 0;
    for (const auto& pv : iter_partitions(n))
    {
        Rational term = 1;
        for (std::uint32_t j = 1; j <= n; ++j)
        {
            const auto k = pv.k(j);
            if (k == 0)
                continue;
            const Rational base = psi[j - 1] / j;
            for (std::uint32_t i = 0; i < k; ++i)
                term *= base;
            term /= Rational(factorial(k));
        }
        total += term;
    }
    return total;
}

ScaledPsi scale_psi(std::span<const Rational> psi, const Integer& scale)
{
    if (scale <= 0)
        throw std::invalid_argument("scale_psi: scale must be positive");
    ScaledPsi out{scale, {}};
    out.values.reserve(psi.size());
    Integer power = 1;
    for (const auto& value : psi)
    {
        power *= scale;
        const Rational scaled = value * Rational(power);
        if (!is_integral(scaled))
            throw std::domain_error("scale_psi: psi_j * Q^j is not an integer");
        out.values.push_back(scaled.get_num());
    }
    return out;
}

ScaledPsi scale_psi(std::span<const Rational> psi)
{
    Integer lcm = 1;
    for (const auto& value : psi)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.get_den().get_mpz_t());
    return scale_psi(psi, lcm);
}

namespace
{

// Per-call tables: pow[j][k] = w_j^k and den[j][k] = j^k k!, k <= n/j.
struct Tables
{
    std::vector<std::vector<Integer>> pow;
    std::vector<std::vector<Integer>> den;
    std::vector<bool> zero;

    Tables(const ScaledPsi& psi, std::uint32_t n) : pow(n + 1), den(n + 1), zero(n + 1, false)
    {
        for (std::uint32_t j = 1; j <= n; ++j)
        {
            const auto& w = psi.values[j - 1];
            zero[j] = (w == 0);
            const std::uint32_t kmax = n / j;
            pow[j].resize(kmax + 1);
            den[j].resize(kmax + 1);
            pow[j][0] = 1;
            den[j][0] = 1;
            for (std::uint32_t k = 1; k <= kmax; ++k)
            {
                pow[j][k] = pow[j][k - 1] * w;
                den[j][k] = den[j][k - 1] * j * k;
            }
        }
    }
};

// value' = value * pow[j][k] / den[j][k], exact.
void extend(Integer& out, const Integer& value, const Tables& t, std::uint32_t j, std::uint32_t k)
{
    mpz_mul(out.get_mpz_t(), value.get_mpz_t(), t.pow[j][k].get_mpz_t());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), t.den[j][k].get_mpz_t());
}

// Adds every completion of the current prefix using parts <= largest.
// scratch[d] is a per-depth temporary, so the walk allocates nothing.
void walk(const Tables& t, std::uint32_t largest, std::uint32_t remaining, const Integer& value, Integer& sum,
          std::vector<Integer>& scratch, std::size_t depth)
{
    if (remaining == 0)
    {
        sum += value;
        return;
    }
    if (largest == 0)
        return;
    if (largest > remaining)
        largest = remaining;
    if (largest == 1)
    {
        if (!t.zero[1])
        {
            extend(scratch[depth], value, t, 1, remaining);
            sum += scratch[depth];
        }
        return;
    }
    walk(t, largest - 1, remaining, value, sum, scratch, depth);
    if (t.zero[largest])
        return;
    for (std::uint32_t k = 1; k * largest <= remaining; ++k)
    {
        extend(scratch[depth], value, t, largest, k);
        walk(t, largest - 1, remaining - k * largest, scratch[depth], sum, scratch, depth + 1);
    }
}

struct Subtree
{
    std::uint32_t part;
    std::uint32_t multiplicity;
};

} // namespace

Rational faa_sum(const ScaledPsi& psi, std::uint32_t n, Execution exec)
{
    if (psi.values.size() < n)
        throw std::invalid_argument("faa_sum: need psi_1..psi_n");
    if (n == 0)
        return 1;

    const Tables tables(psi, n);
    const Integer n_factorial = factorial(n);

    std::vector<Subtree> subtrees;
    for (std::uint32_t j = n; j >= 1; --j)
    {
        if (tables.zero[j])
            continue;
        for (std::uint32_t k = 1; k * j <= n; ++k)
            subtrees.push_back({j, k});
    }

    std::vector<Integer> partial(subtrees.size());
    const auto count = static_cast<std::ptrdiff_t>(subtrees.size());
    const bool parallel = exec == Execution::parallel;
    (void)parallel;

#pragma omp parallel if (parallel)
    {
        std::vector<Integer> scratch(n + 1);
        Integer start;
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i)
        {
            const auto [j, k] = subtrees[static_cast<std::size_t>(i)];
            extend(start, n_factorial, tables, j, k);
            walk(tables, j - 1, n - j * k, start, partial[static_cast<std::size_t>(i)], scratch, 0);
        }
    }

    Integer total = 0;
    for (const auto& p : partial)
        total += p;

    Integer denominator = n_factorial;
    Integer q_pow;
    mpz_pow_ui(q_pow.get_mpz_t(), psi.scale.get_mpz_t(), n);
    denominator *= q_pow;
    return make_rational(total, denominator);
}

int kernel_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace bellforge
