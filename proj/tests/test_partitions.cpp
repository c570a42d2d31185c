#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bellforge/partitions.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

using namespace bellforge;

namespace
{

std::vector<std::vector<std::uint32_t>> collect(std::uint32_t n)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& pv : iter_partitions(n))
        out.push_back(pv.multiplicities);
    return out;
}

} // namespace

TEST_CASE("iter_partitions small cases")
{
    const auto zero = collect(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(collect(1) == std::vector<std::vector<std::uint32_t>>{{1}});

    // 4, 3+1, 2+2, 2+1+1, 1+1+1+1 as (k_1, k_2, k_3, k_4).
    CHECK(collect(4) == std::vector<std::vector<std::uint32_t>>{
                            {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}});
}

TEST_CASE("iter_partitions order is strictly decreasing on (k_n..k_1)")
{
    for (std::uint32_t n = 1; n <= 18; ++n)
    {
        auto all = collect(n);
        for (auto& v : all)
            std::reverse(v.begin(), v.end());
        for (std::size_t i = 1; i < all.size(); ++i)
            REQUIRE(all[i - 1] > all[i]);
    }
}

TEST_CASE("iter_partitions matches brute-force enumeration as sets")
{
    for (int n = 0; n <= 16; ++n)
    {
        std::set<std::vector<std::uint32_t>> expected;
        std::vector<int> prefix;
        oracle::partitions(n, n, prefix, [&](const std::vector<int>& parts) {
            std::vector<std::uint32_t> k(n, 0);
            for (int part : parts)
                ++k[part - 1];
            expected.insert(k);
        });
        const auto got = collect(n);
        REQUIRE(std::set<std::vector<std::uint32_t>>(got.begin(), got.end()) == expected);
        REQUIRE(got.size() == expected.size());
    }
}

TEST_CASE("every yielded vector has weight n")
{
    for (std::uint32_t n = 0; n <= 30; ++n)
        for (const auto& pv : iter_partitions(n))
        {
            REQUIRE(pv.weight() == n);
            REQUIRE(pv.multiplicities.size() == n);
        }
}

TEST_CASE("p_pentagonal")
{
    CHECK(p_pentagonal(0) == 1);
    CHECK(p_pentagonal(5) == 7);
    CHECK(p_pentagonal(10) == 42);
    CHECK(p_pentagonal(20) == 627);
    CHECK(p_pentagonal(100) == Integer("190569292"));
    CHECK(p_pentagonal(200) == Integer("3972999029388"));
    CHECK(p_pentagonal_table(30) == std::vector<Integer>([] {
              std::vector<Integer> v;
              for (std::uint32_t n = 0; n <= 30; ++n)
                  v.push_back(p_pentagonal(n));
              return v;
          }()));
    for (int n = 0; n <= 25; ++n)
        REQUIRE(p_pentagonal(n) == Integer(static_cast<unsigned long>(oracle::count_partitions(n))));
}

TEST_CASE("stream cardinality equals p(n) for n <= 40")
{
    for (std::uint32_t n = 0; n <= 40; ++n)
    {
        std::uint64_t count = 0;
        for ([[maybe_unused]] const auto& pv : iter_partitions(n))
            ++count;
        REQUIRE(Integer(static_cast<unsigned long>(count)) == p_pentagonal(n));
    }
}

TEST_CASE("p_pentagonal memo is safe under concurrent callers")
{
    std::vector<std::thread> threads;
    std::vector<Integer> results(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { results[i] = p_pentagonal(300 - 10 * i); });
    for (auto& t : threads)
        t.join();
    const auto table = p_pentagonal_table(300);
    for (int i = 0; i < 8; ++i)
        CHECK(results[i] == table[300 - 10 * i]);
}

TEST_CASE("count_exact_parts")
{
    CHECK(count_exact_parts(4, 2) == 2);
    CHECK(count_exact_parts(0, 0) == 1);
    CHECK(count_exact_parts(5, 0) == 0);
    CHECK(count_exact_parts(3, 7) == 0);
    for (std::uint32_t n = 1; n <= 20; ++n)
    {
        CHECK(count_exact_parts(n, 1) == 1);
        CHECK(count_exact_parts(n, n) == 1);
    }
    for (std::uint32_t n = 0; n <= 40; ++n)
    {
        Integer total = 0;
        for (std::uint32_t m = 0; m <= n; ++m)
            total += count_exact_parts(n, m);
        REQUIRE(total == p_pentagonal(n));
    }
    for (std::uint32_t n = 0; n <= 14; ++n)
        for (std::uint32_t m = 0; m <= n; ++m)
        {
            std::uint64_t brute = 0;
            for (const auto& pv : iter_partitions(n))
                brute += pv.part_count() == m;
            REQUIRE(count_exact_parts(n, m) == Integer(static_cast<unsigned long>(brute)));
        }
}

TEST_CASE("count_restricted_bruteforce")
{
    const std::vector<std::uint64_t> one_two{1, 2};
    const std::vector<std::uint64_t> two{2};
    const std::vector<std::uint64_t> one{1};
    CHECK(count_restricted_bruteforce(5, one_two) == 3);
    CHECK(count_restricted_bruteforce(3, two) == 0);
    CHECK(count_restricted_bruteforce(0, two) == 1);
    for (std::uint32_t n = 0; n <= 20; ++n)
        CHECK(count_restricted_bruteforce(n, one) == 1);

    for (std::uint32_t n = 0; n <= 25; ++n)
    {
        std::vector<std::uint64_t> all(std::max<std::uint32_t>(n, 1));
        std::iota(all.begin(), all.end(), 1);
        REQUIRE(count_restricted_bruteforce(n, all) == p_pentagonal(n));
    }

    const std::vector<std::uint64_t> empty;
    const std::vector<std::uint64_t> with_zero{0, 1};
    const std::vector<std::uint64_t> repeated{3, 3};
    CHECK_THROWS_AS(count_restricted_bruteforce(3, empty), std::invalid_argument);
    CHECK_THROWS_AS(count_restricted_bruteforce(3, with_zero), std::invalid_argument);
    CHECK_THROWS_AS(count_restricted_bruteforce(3, repeated), std::invalid_argument);
}
