#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bellforge/partitions.hpp>
#include <bellforge/random_spec.hpp>
#include <bellforge/series.hpp>

#include "oracles.hpp"

#include <optional>
#include <random>

using namespace bellforge;

namespace
{

TruncatedSeries series(std::initializer_list<Rational> c) { return TruncatedSeries(std::vector<Rational>(c)); }

TruncatedSeries random_series(std::mt19937_64& rng, std::uint32_t order, std::optional<Rational> c0 = {})
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c;
    for (std::uint32_t i = 0; i <= order; ++i)
        c.push_back(make_rational(num(rng), den(rng)));
    if (c0)
        c[0] = *c0;
    else if (c[0] == 0)
        c[0] = 1;
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST_CASE("construction")
{
    CHECK(TruncatedSeries::zero(3).coeffs() == std::vector<Rational>(4, 0));
    CHECK(TruncatedSeries::one(2) == series({1, 0, 0}));
    CHECK(TruncatedSeries::one(0).order() == 0);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("series_mul")
{
    CHECK(series_mul(series({1, 1, 0, 0}), series({1, -1, 0, 0})) == series({1, 0, -1, 0}));
    CHECK(series_mul(series({3, 1, 4}), TruncatedSeries::zero(2)) == TruncatedSeries::zero(2));
    CHECK(series_mul(series({1, 1, 1}), series({1, 1, 0})) == series({1, 2, 2}));
    CHECK_THROWS_AS(series_mul(series({1, 1}), series({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("property: multiplication is commutative and associative")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i)
    {
        const auto order = static_cast<std::uint32_t>(i % 12);
        const auto u = random_series(rng, order);
        const auto v = random_series(rng, order);
        const auto w = random_series(rng, order);
        REQUIRE(series_mul(u, v) == series_mul(v, u));
        REQUIRE(series_mul(series_mul(u, v), w) == series_mul(u, series_mul(v, w)));
    }
}

TEST_CASE("series_reciprocal")
{
    CHECK(series_reciprocal(series({1, -1, 0, 0, 0, 0})) == series({1, 1, 1, 1, 1, 1}));
    CHECK(series_reciprocal(series({2})) == series({Rational(1, 2)}));
    const auto parts12 = series_mul(series({1, -1, 0, 0, 0}), series({1, 0, -1, 0, 0}));
    CHECK(series_reciprocal(parts12) == series({1, 1, 2, 2, 3}));
    CHECK_THROWS_AS(series_reciprocal(series({0, 1})), std::domain_error);

    std::mt19937_64 rng(12);
    for (std::uint32_t order = 0; order <= 16; ++order)
    {
        const auto u = random_series(rng, order);
        REQUIRE(series_mul(u, series_reciprocal(u)) == TruncatedSeries::one(order));
    }
}

TEST_CASE("series_log")
{
    CHECK(series_log(TruncatedSeries::one(5)) == TruncatedSeries::zero(5));
    CHECK(series_log(series_reciprocal(series({1, -1, 0, 0, 0}))) ==
          series({0, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4)}));
    CHECK(series_log(series({1, -1, 0, 0})) == series({0, -1, Rational(-1, 2), Rational(-1, 3)}));
    CHECK_THROWS_AS(series_log(series({2, 1})), std::domain_error);
}

TEST_CASE("series_exp")
{
    CHECK(series_exp(TruncatedSeries::zero(4)) == TruncatedSeries::one(4));
    CHECK(series_exp(series({0, 1, 0, 0})) == series({1, 1, Rational(1, 2), Rational(1, 6)}));
    CHECK_THROWS_AS(series_exp(series({1, 1})), std::domain_error);

    std::mt19937_64 rng(13);
    for (std::uint32_t order = 0; order <= 12; ++order)
    {
        const auto s = random_series(rng, order, Rational(1));
        REQUIRE(series_exp(series_log(s)) == s);
        const auto v = random_series(rng, order, Rational(0));
        REQUIRE(series_log(series_exp(v)) == v);
    }
}

TEST_CASE("series_int_pow")
{
    const auto u = series({7, 1, 2, 3});
    CHECK(series_int_pow(u, 0) == TruncatedSeries::one(3));
    CHECK(series_int_pow(series({1, -1, 0, 0}), -2) == series({1, 2, 3, 4}));
    CHECK(series_int_pow(series({1, -1, 0, 0}), 3) == series({1, -3, 3, -1}));
    CHECK(series_int_pow(u, 5) == series_mul(u, series_mul(u, series_mul(u, series_mul(u, u)))));
    CHECK(series_mul(series_int_pow(u, -3), series_int_pow(u, 3)) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(series_int_pow(series({0, 1}), -1), std::domain_error);
}

TEST_CASE("factor and spec validation")
{
    CHECK_THROWS_AS(Factor(SupportSet::all_naturals(), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec(std::vector<Factor>{}), std::invalid_argument);
    const ProductSpec spec({Factor(SupportSet::multiples_of(2), Rational(1, 2), 3)});
    CHECK(spec.negated().factors()[0].a == -3);
    CHECK(spec.concat(spec).factors().size() == 2);
}

TEST_CASE("expand_product examples")
{
    const ProductSpec euler({Factor(SupportSet::all_naturals(), 1, 1)});
    CHECK(expand_product(euler, 7) == series({1, -1, -1, 0, 0, 1, 0, 1}));
    const ProductSpec partitions({Factor(SupportSet::all_naturals(), 1, -1)});
    CHECK(expand_product(partitions, 5) == series({1, 1, 2, 3, 5, 7}));
    const ProductSpec just_two({Factor(SupportSet::finite({2}), 1, 1)});
    CHECK(expand_product(just_two, 4) == series({1, 0, -1, 0, 0}));
    // Supports beyond the order are skipped.
    const ProductSpec big({Factor(SupportSet::finite({9}), 5, 2)});
    CHECK(expand_product(big, 4) == TruncatedSeries::one(4));
    const ProductSpec geometric({Factor(SupportSet::finite({1}), Rational(1, 2), -1)});
    CHECK(expand_product(geometric, 3) == series({1, Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
}

TEST_CASE("expand_product matches integer eta-product oracle")
{
    const ProductSpec chan_like({Factor(SupportSet::multiples_of(3), 1, 3), Factor(SupportSet::all_naturals(), 1, -4),
                                 Factor(SupportSet::multiples_of(2), 1, -4)});
    const auto got = expand_product(chan_like, 40);
    const auto expected = oracle::eta_product({{3, 3}, {1, -4}, {2, -4}}, 40);
    for (std::uint32_t n = 0; n <= 40; ++n)
        REQUIRE(got[n] == Rational(expected[n]));
}

TEST_CASE("coefficient")
{
    CHECK(coefficient(TruncatedSeries::one(0), 0) == 1);
    CHECK(coefficient(series_reciprocal(series({1, -1, 0, 0, 0, 0, 0, 0, 0, 0})), 9) == 1);
    const ProductSpec partitions({Factor(SupportSet::all_naturals(), 1, -1)});
    CHECK(coefficient(expand_product(partitions, 10), 10) == 42);
    CHECK_THROWS_AS(coefficient(TruncatedSeries::one(3), 4), std::out_of_range);
}

// prod (1 - z t^m)^a = exp(-sum_k (1/k) sum a z^k t^{mk}), built straight
// from the log expansion, and also as exp of a * log of each factor.
TEST_CASE("property: exp-log route agrees with the direct product")
{
    SpecSampler sampler(99);
    for (int i = 0; i < 30; ++i)
    {
        const auto spec = sampler.product();
        const std::uint32_t order = 12;

        std::vector<Rational> g(order + 1, Rational(0));
        for (const auto& f : spec.factors())
            for (auto m : f.support.members_up_to(order))
            {
                Rational zk = 1;
                for (std::uint32_t k = 1; k * m <= order; ++k)
                {
                    zk *= f.z;
                    g[k * m] -= Rational(f.a) * zk / k;
                }
            }
        const auto direct = expand_product(spec, order);
        REQUIRE(series_exp(TruncatedSeries(g)) == direct);

        auto sum = TruncatedSeries::zero(order);
        for (const auto& f : spec.factors())
        {
            const auto single = expand_product(ProductSpec({Factor(f.support, f.z, 1)}), order);
            sum = series_add(sum, series_scale(series_log(single), f.a));
        }
        REQUIRE(series_exp(sum) == direct);
    }
}

TEST_CASE("expand_ratio is numerator times reciprocal of denominator")
{
    const ProductSpec num({Factor(SupportSet::multiples_of(2), 1, 2)});
    const ProductSpec den({Factor(SupportSet::all_naturals(), 1, 1)});
    // psi(t) = sum t^{k(k+1)/2}
    CHECK(expand_ratio(num, den, 10) == series({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
}
