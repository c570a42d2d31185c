#include <bellforge/support.hpp>

#include <algorithm>
#include <stdexcept>

namespace bellforge
{

SupportSet::SupportSet(Kind kind, std::uint64_t step, std::vector<std::uint64_t> elements)
    : kind_(kind), step_(step), elements_(std::move(elements))
{
}

SupportSet SupportSet::all_naturals() { return SupportSet(Kind::all, 1, {}); }

SupportSet SupportSet::multiples_of(std::uint64_t r)
{
    if (r == 0)
        throw std::invalid_argument("multiples-of support needs r >= 1");
    return SupportSet(Kind::multiples, r, {});
}

SupportSet SupportSet::finite(std::vector<std::uint64_t> elements)
{
    if (elements.empty())
        throw std::invalid_argument("finite support must be non-empty");
    std::sort(elements.begin(), elements.end());
    if (elements.front() == 0)
        throw std::invalid_argument("finite support entries must be >= 1");
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw std::invalid_argument("finite support entries must be distinct");
    return SupportSet(Kind::finite, 0, std::move(elements));
}

bool SupportSet::contains(std::uint64_t m) const noexcept
{
    if (m == 0)
        return false;
    switch (kind_)
    {
    case Kind::all:
        return true;
    case Kind::multiples:
        return m % step_ == 0;
    case Kind::finite:
        return std::binary_search(elements_.begin(), elements_.end(), m);
    }
    return false;
}

std::vector<std::uint64_t> SupportSet::members_up_to(std::uint64_t bound) const
{
    std::vector<std::uint64_t> out;
    if (kind_ == Kind::finite)
    {
        for (auto e : elements_)
            if (e <= bound)
                out.push_back(e);
        return out;
    }
    for (std::uint64_t m = step_; m <= bound; m += step_)
        out.push_back(m);
    return out;
}

std::string SupportSet::describe() const
{
    switch (kind_)
    {
    case Kind::all:
        return "all";
    case Kind::multiples:
        return "multiples(" + std::to_string(step_) + ")";
    case Kind::finite:
    {
        std::string out = "finite{";
        for (std::size_t i = 0; i < elements_.size(); ++i)
            out += (i ? "," : "") + std::to_string(elements_[i]);
        return out + "}";
    }
    }
    return {};
}

} // namespace bellforge
