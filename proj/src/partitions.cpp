#include <bellforge/partitions.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bellforge
{

std::uint32_t PartitionVector::part_count() const
{
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::uint32_t{0});
}

std::uint64_t PartitionVector::weight() const
{
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < multiplicities.size(); ++j)
        total += (j + 1) * std::uint64_t{multiplicities[j]};
    return total;
}

PartitionStream::iterator::iterator(std::uint32_t n) : done_(false)
{
    current_.n = n;
    current_.multiplicities.assign(n, 0);
    if (n > 0)
        current_.multiplicities[n - 1] = 1;
}

PartitionStream::iterator& PartitionStream::iterator::operator++()
{
    auto& k = current_.multiplicities;
    const std::uint32_t n = current_.n;

    // Smallest part larger than one.
    std::uint32_t j = 2;
    while (j <= n && k[j - 1] == 0)
        ++j;
    if (j > n)
    {
        done_ = true;
        return *this;
    }

    // Break one copy of j together with all the ones into parts of size
    // j-1, plus one remainder part.
    std::uint32_t rest = k[0] + j;
    k[0] = 0;
    --k[j - 1];
    k[j - 2] += rest / (j - 1);
    if (const auto r = rest % (j - 1); r > 0)
        ++k[r - 1];
    return *this;
}

namespace
{

std::mutex memo_mutex;
std::vector<Integer> memo{Integer(1)};

// Extends table (which holds p(0..size-1)) through p(n).
void extend_pentagonal(std::vector<Integer>& table, std::uint32_t n)
{
    table.reserve(n + 1);
    for (std::int64_t m = static_cast<std::int64_t>(table.size()); m <= n; ++m)
    {
        Integer value = 0;
        for (std::int64_t k = 1;; ++k)
        {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            Integer term = table[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                term += table[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1)
                value += term;
            else
                value -= term;
        }
        table.push_back(std::move(value));
    }
}

void count_leaves(std::uint32_t remaining, std::span<const std::uint64_t> parts, std::uint64_t& count)
{
    if (remaining == 0)
    {
        ++count;
        return;
    }
    if (parts.empty())
        return;
    const auto part = parts.front();
    for (std::uint64_t used = 0; used <= remaining; used += part)
        count_leaves(static_cast<std::uint32_t>(remaining - used), parts.subspan(1), count);
}

} // namespace

Integer p_pentagonal(std::uint32_t n)
{
    std::lock_guard lock(memo_mutex);
    if (memo.size() <= n)
        extend_pentagonal(memo, n);
    return memo[n];
}

std::vector<Integer> p_pentagonal_table(std::uint32_t n)
{
    std::vector<Integer> table{Integer(1)};
    extend_pentagonal(table, n);
    return table;
}

Integer count_exact_parts(std::uint32_t n, std::uint32_t m)
{
    if (m > n)
        return 0;
    // row[x] holds p_i(x) for the current i.
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i)
    {
        std::vector<Integer> next(n + 1, 0);
        for (std::uint32_t x = i; x <= n; ++x)
            next[x] = next[x - i] + row[x - 1];
        row = std::move(next);
    }
    return row[n];
}

Integer count_restricted_bruteforce(std::uint32_t n, std::span<const std::uint64_t> parts)
{
    if (parts.empty())
        throw std::invalid_argument("count_restricted_bruteforce: parts must be non-empty");
    std::vector<std::uint64_t> sorted(parts.begin(), parts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted.back() == 0)
        throw std::invalid_argument("count_restricted_bruteforce: parts must be >= 1");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("count_restricted_bruteforce: parts must be distinct");
    std::uint64_t count = 0;
    count_leaves(n, sorted, count);
    return Integer(static_cast<unsigned long>(count));
}

} // namespace bellforge
