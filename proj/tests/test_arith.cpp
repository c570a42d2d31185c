#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bellforge/arith.hpp>
#include <bellforge/support.hpp>

#include <random>

using namespace bellforge;

TEST_CASE("factorize")
{
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK(factorize(1024) == Factorization{{2, 10}});
    CHECK(factorize(999983ull * 999979ull) == Factorization{{999979, 1}, {999983, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    for (std::uint64_t n = 1; n <= 2000; ++n)
    {
        std::uint64_t product = 1;
        std::uint64_t previous = 0;
        for (const auto& [p, b] : factorize(n))
        {
            REQUIRE(p > previous);
            REQUIRE(factorize(p).size() == 1);
            REQUIRE(b >= 1);
            previous = p;
            for (unsigned i = 0; i < b; ++i)
                product *= p;
        }
        REQUIRE(product == n);
    }
}

TEST_CASE("sigma")
{
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(7) == 8);
    CHECK(sigma(12) == 28);
    CHECK_THROWS_AS(sigma(0), std::invalid_argument);
}

TEST_CASE("sigma via factorization")
{
    CHECK(sigma_via_factorization({}) == 1);
    CHECK(sigma_via_factorization({{2, 2}, {3, 1}}) == 28);
    CHECK(sigma_via_factorization({{5, 1}}) == 6);
    // sigma(2^40) = 2^41 - 1 exercises the binomial sum at a large exponent.
    CHECK(sigma_via_factorization({{2, 40}}) == (Integer(1) << 41) - 1);
    for (std::uint64_t n = 1; n <= 3000; ++n)
        REQUIRE(sigma_via_factorization(factorize(n)) == sigma(n));
}

TEST_CASE("binomial and factorial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(100, 50) == Integer("100891344545564193334812497256"));
    for (std::uint64_t a = 1; a <= 30; ++a)
        for (std::uint64_t b = 1; b <= a; ++b)
            REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("restricted divisor sum")
{
    CHECK(restricted_divisor_sum(6, SupportSet::all_naturals()) == 12);
    CHECK(restricted_divisor_sum(5, SupportSet::multiples_of(2)) == 0);
    CHECK(restricted_divisor_sum(4, SupportSet::multiples_of(2)) == 6);
    CHECK(restricted_divisor_sum(12, SupportSet::finite({1, 5, 6})) == 7);
    CHECK_THROWS_AS(restricted_divisor_sum(0, SupportSet::all_naturals()), std::invalid_argument);

    for (std::uint64_t n = 1; n <= 1000; ++n)
        REQUIRE(restricted_divisor_sum(n, SupportSet::multiples_of(1)) == sigma(n));
    for (std::uint64_t r = 1; r <= 6; ++r)
        for (std::uint64_t n = 1; n <= 200; ++n)
        {
            Integer brute = 0;
            for (auto d : divisors(n))
                if (d % r == 0)
                    brute += d;
            REQUIRE(restricted_divisor_sum(n, SupportSet::multiples_of(r)) == brute);
        }
}

TEST_CASE("indicator")
{
    CHECK(indicator(2, 6) == 1);
    CHECK(indicator(4, 6) == 0);
    for (std::uint64_t n = 1; n <= 50; ++n)
        CHECK(indicator(1, n) == 1);
    CHECK_THROWS_AS(indicator(0, 3), std::invalid_argument);
}

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

namespace
{

bool reduced(const Rational& q)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q.get_den() > 0 && g == 1;
}

} // namespace

TEST_CASE("property: rational arithmetic is exact and stays reduced")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 2000; ++i)
    {
        const Rational a = make_rational(num(rng), den(rng));
        const Rational c = make_rational(num(rng), den(rng));
        REQUIRE(reduced(a));
        REQUIRE((a + c) - c == a);
        REQUIRE(reduced(a + c));
        REQUIRE(reduced(a - c));
        REQUIRE(reduced(a * c));
        if (c != 0)
        {
            REQUIRE(reduced(a / c));
            REQUIRE((a / c) * c == a);
        }
        REQUIRE(parse_rational(to_string(a)) == a);
    }
}

TEST_CASE("support sets")
{
    CHECK(SupportSet::all_naturals().contains(17));
    CHECK_FALSE(SupportSet::all_naturals().contains(0));
    CHECK(SupportSet::multiples_of(3).contains(9));
    CHECK_FALSE(SupportSet::multiples_of(3).contains(10));
    CHECK(SupportSet::finite({4, 1}).elements() == std::vector<std::uint64_t>{1, 4});
    CHECK(SupportSet::multiples_of(2).members_up_to(7) == std::vector<std::uint64_t>{2, 4, 6});
    CHECK(SupportSet::finite({3, 9}).members_up_to(5) == std::vector<std::uint64_t>{3});
    CHECK_THROWS_AS(SupportSet::multiples_of(0), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet::finite({}), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet::finite({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet::finite({2, 2}), std::invalid_argument);
}
