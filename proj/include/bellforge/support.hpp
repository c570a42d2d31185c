#ifndef BELLFORGE_SUPPORT_HPP
#define BELLFORGE_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bellforge
{

// A set C_j of positive integers: every natural, every multiple of r, or an
// explicit finite set.
class SupportSet
{
  public:
    enum class Kind
    {
        all,
        multiples,
        finite
    };

    static SupportSet all_naturals();
    /// Rejects r == 0.
    static SupportSet multiples_of(std::uint64_t r);
    /// Rejects an empty list, a zero entry, or repeated entries.
    static SupportSet finite(std::vector<std::uint64_t> elements);

    Kind kind() const noexcept { return kind_; }
    /// Step of a multiples-of support; 1 for all naturals.
    std::uint64_t step() const noexcept { return step_; }
    /// Sorted elements of a finite support; empty otherwise.
    const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }

    bool contains(std::uint64_t m) const noexcept;

    /// Members m with 1 <= m <= bound, increasing.
    std::vector<std::uint64_t> members_up_to(std::uint64_t bound) const;

    std::string describe() const;

    friend bool operator==(const SupportSet&, const SupportSet&) = default;

  private:
    SupportSet(Kind kind, std::uint64_t step, std::vector<std::uint64_t> elements);

    Kind kind_;
    std::uint64_t step_;
    std::vector<std::uint64_t> elements_;
};

} // namespace bellforge

#endif
