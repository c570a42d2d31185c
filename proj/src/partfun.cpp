#include <bellforge/partfun.hpp>

#include <algorithm>
#include <cmath>

namespace bellforge
{

Integer require_natural(const Rational& value, const std::string& what)
{
    if (!is_integral(value) || value < 0)
        throw InconsistencyError(what + " evaluated to " + to_string(value) + ", not a nonnegative integer");
    return value.get_num();
}

namespace specs
{

namespace
{

Factor all(long a) { return Factor(SupportSet::all_naturals(), 1, a); }
Factor multiples(std::uint64_t r, long a) { return Factor(SupportSet::multiples_of(r), 1, a); }

} // namespace

ProductSpec euler() { return ProductSpec({all(1)}); }

ProductSpec cubic() { return ProductSpec({all(1), multiples(2, 1)}); }

RatioSpec chan()
{
    return {ProductSpec({multiples(3, 3), multiples(6, 3)}), ProductSpec({all(4), multiples(2, 4)})};
}

RatioSpec overcubic() { return {ProductSpec({multiples(4, 1)}), ProductSpec({all(2), multiples(2, 1)})}; }

RatioSpec kim()
{
    return {ProductSpec({multiples(3, 6), multiples(4, 3)}), ProductSpec({all(8), multiples(2, 3)})};
}

RatioSpec psi_theta() { return {ProductSpec({multiples(2, 2)}), ProductSpec({all(1)})}; }

RatioSpec phi_theta() { return {ProductSpec({multiples(2, 5)}), ProductSpec({all(2), multiples(4, 2)})}; }

ProductSpec restricted(std::span<const std::uint64_t> parts)
{
    std::vector<Factor> factors;
    for (auto d : parts)
        factors.emplace_back(SupportSet::finite({d}), 1, 1);
    return ProductSpec(std::move(factors));
}

} // namespace specs

namespace
{

std::vector<Integer> naturals(const std::vector<Rational>& values, const std::string& name, std::uint32_t offset = 0,
                              const Rational& factor = 1)
{
    std::vector<Integer> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out.push_back(require_natural(factor * values[i], name + "(" + std::to_string(i + offset) + ")"));
    return out;
}

std::vector<Rational> sum_sequence(std::span<const Rational> weights, std::uint32_t n)
{
    const auto scaled = scale_psi(weights.first(n), 1);
    std::vector<Rational> values;
    values.reserve(n + 1);
    for (std::uint32_t m = 0; m <= n; ++m)
        values.push_back(faa_sum(scaled, m));
    return values;
}

// Faa di Bruno values up to min(n, limit), series coefficients after that.
template <class FaaRange>
std::vector<Integer> hybrid(std::uint32_t n, std::uint32_t limit, FaaRange&& faa, const RatioSpec& ratio,
                            const std::string& name)
{
    const auto head = std::min(n, limit);
    auto values = faa(head);
    if (n > head)
    {
        const auto tail = ratio_series_upto(n, ratio);
        values.insert(values.end(), tail.begin() + head + 1, tail.end());
    }
    return naturals(values, name);
}

std::vector<Rational> sigma_weights(std::uint32_t n)
{
    std::vector<Rational> out;
    for (std::uint32_t j = 1; j <= n; ++j)
        out.emplace_back(sigma(j));
    return out;
}

std::vector<Rational> restricted_weights(std::uint32_t n, std::span<const std::uint64_t> parts)
{
    const auto support = SupportSet::finite({parts.begin(), parts.end()});
    std::vector<Rational> out;
    for (std::uint32_t j = 1; j <= n; ++j)
        out.emplace_back(restricted_divisor_sum(j, support));
    return out;
}

} // namespace

Integer partition_p(std::uint32_t n)
{
    return require_natural(faa_sum(sigma_weights(n), n), "p(" + std::to_string(n) + ")");
}

std::vector<Integer> partition_p_upto(std::uint32_t n, std::uint32_t faa_limit)
{
    return hybrid(
        n, faa_limit, [](std::uint32_t m) { return sum_sequence(sigma_weights(m), m); }, RatioSpec{std::nullopt, specs::euler()},
        "p");
}

Integer restricted_W(std::uint32_t n, std::span<const std::uint64_t> parts)
{
    return require_natural(faa_sum(restricted_weights(n, parts), n), "W(" + std::to_string(n) + ")");
}

std::vector<Integer> restricted_W_upto(std::uint32_t n, std::span<const std::uint64_t> parts, std::uint32_t faa_limit)
{
    return hybrid(
        n, faa_limit, [&](std::uint32_t m) { return sum_sequence(restricted_weights(m, parts), m); },
        RatioSpec{std::nullopt, specs::restricted(parts)}, "W");
}

Integer cubic_a(std::uint32_t n) { return require_natural(bell_W_explicit(n, specs::cubic()), "a(" + std::to_string(n) + ")"); }

std::vector<Integer> cubic_a_upto(std::uint32_t n, std::uint32_t faa_limit)
{
    return hybrid(
        n, faa_limit, [](std::uint32_t m) { return bell_W_upto(m, specs::cubic()); },
        RatioSpec{std::nullopt, specs::cubic()}, "a");
}

std::vector<Integer> chan_rhs_upto(std::uint32_t n) { return naturals(ratio_series_upto(n, specs::chan()), "chan", 0, 3); }

Integer chan_rhs(std::uint32_t n) { return chan_rhs_upto(n)[n]; }

std::vector<Integer> overcubic_abar_upto(std::uint32_t n, std::uint32_t faa_limit)
{
    return hybrid(
        n, faa_limit, [](std::uint32_t m) { return ratio_faa_upto(m, specs::overcubic()); }, specs::overcubic(), "abar");
}

Integer overcubic_abar(std::uint32_t n)
{
    return require_natural(ratio_faa_upto(n, specs::overcubic())[n], "abar(" + std::to_string(n) + ")");
}

std::vector<Integer> kim_rhs_upto(std::uint32_t n) { return naturals(ratio_series_upto(n, specs::kim()), "kim", 0, 6); }

Integer kim_rhs(std::uint32_t n) { return kim_rhs_upto(n)[n]; }

std::vector<Integer> psi_star_upto(std::uint32_t n, std::uint32_t faa_limit)
{
    return hybrid(
        n, faa_limit, [](std::uint32_t m) { return ratio_faa_upto(m, specs::psi_theta()); }, specs::psi_theta(), "psi*");
}

Integer psi_star(std::uint32_t n)
{
    return require_natural(ratio_faa_upto(n, specs::psi_theta())[n], "psi*(" + std::to_string(n) + ")");
}

std::vector<Integer> phi_star_upto(std::uint32_t n, std::uint32_t faa_limit)
{
    return hybrid(
        n, faa_limit, [](std::uint32_t m) { return ratio_faa_upto(m, specs::phi_theta()); }, specs::phi_theta(), "phi*");
}

Integer phi_star(std::uint32_t n)
{
    return require_natural(ratio_faa_upto(n, specs::phi_theta())[n], "phi*(" + std::to_string(n) + ")");
}

RatioSpec FourFactorSpec::ratio() const
{
    if (r1 == 0 || r2 == 0 || s1 == 0 || s2 == 0)
        throw std::invalid_argument("four-factor spec steps must be >= 1");
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0)
        throw std::invalid_argument("four-factor spec exponents must be >= 0");
    auto side = [](std::uint64_t u, long x, std::uint64_t v, long y) -> std::optional<ProductSpec> {
        std::vector<Factor> factors;
        if (x != 0)
            factors.emplace_back(SupportSet::multiples_of(u), 1, x);
        if (y != 0)
            factors.emplace_back(SupportSet::multiples_of(v), 1, y);
        if (factors.empty())
            return std::nullopt;
        return ProductSpec(std::move(factors));
    };
    return {side(r1, a1, r2, a2), side(s1, b1, s2, b2)};
}

Rational generic_WP(std::uint32_t n, const FourFactorSpec& spec) { return ratio_faa_upto(n, spec.ratio())[n]; }

IdentityCheck restricted_W_recursion_check(std::uint32_t n, std::span<const std::uint64_t> parts)
{
    if (parts.size() < 2)
        throw std::invalid_argument("restricted_W_recursion_check: needs at least two parts");
    const auto last = parts.back();
    const Rational full = Rational(restricted_W(n, parts));
    const Rational shifted = n >= last ? Rational(restricted_W(static_cast<std::uint32_t>(n - last), parts)) : Rational(0);
    const Rational lhs = full - shifted;
    const Rational rhs = Rational(restricted_W(n, parts.first(parts.size() - 1)));
    return {lhs == rhs, lhs, rhs};
}

bool is_triangular(std::uint64_t n)
{
    // n = k(k+1)/2  <=>  8n+1 is a perfect square.
    const std::uint64_t x = 8 * n + 1;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r * r == x;
}

bool is_positive_square(std::uint64_t n)
{
    if (n == 0)
        return false;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n;
}

} // namespace bellforge
