#ifndef BELLFORGE_PARTITIONS_HPP
#define BELLFORGE_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include <bellforge/arith.hpp>

namespace bellforge
{

// Multiplicity vector (k_1, ..., k_n) with sum_j j*k_j == n. k(j) is
// 1-based; the vector is empty for n == 0.
struct PartitionVector
{
    std::uint32_t n = 0;
    std::vector<std::uint32_t> multiplicities;

    std::uint32_t k(std::uint32_t j) const { return multiplicities[j - 1]; }
    /// Total number of parts, sum_j k_j.
    std::uint32_t part_count() const;
    /// sum_j j*k_j; equals n for every vector produced by the stream.
    std::uint64_t weight() const;
};

// Stream over pi(n) in lexicographically decreasing order of
// (k_n, ..., k_1): n first, 1+1+...+1 last. Each call owns its own state.
class PartitionStream
{
  public:
    class iterator
    {
      public:
        using iterator_category = std::input_iterator_tag;
        using value_type = PartitionVector;
        using difference_type = std::ptrdiff_t;
        using pointer = const PartitionVector*;
        using reference = const PartitionVector&;

        iterator() = default;
        explicit iterator(std::uint32_t n);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

      private:
        PartitionVector current_;
        bool done_ = true;
    };

    explicit PartitionStream(std::uint32_t n) : n_(n) {}

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

  private:
    std::uint32_t n_;
};

inline PartitionStream iter_partitions(std::uint32_t n) { return PartitionStream(n); }

/// p(n) by the generalized pentagonal recurrence. Backed by a process-wide
/// memo table guarded by a mutex; results never depend on call history.
Integer p_pentagonal(std::uint32_t n);

/// p(0..n) from a fresh table, without touching the shared memo.
std::vector<Integer> p_pentagonal_table(std::uint32_t n);

/// Partitions of n into exactly m parts: p_m(n) = p_m(n-m) + p_{m-1}(n-1).
Integer count_exact_parts(std::uint32_t n, std::uint32_t m);

/// Multisets over `parts` summing to n, counted one leaf at a time.
/// Rejects an empty list, a zero part, or repeated parts.
Integer count_restricted_bruteforce(std::uint32_t n, std::span<const std::uint64_t> parts);

} // namespace bellforge

#endif
