#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bellforge/errata.hpp>
#include <bellforge/partfun.hpp>

using namespace bellforge;

namespace
{

const ErrataEntry& find(const std::vector<ErrataEntry>& report, const std::string& name)
{
    for (const auto& e : report)
        if (e.formula == name)
            return e;
    throw std::out_of_range(name);
}

} // namespace

TEST_CASE("report covers every printed formula")
{
    const auto report = errata_report(10);
    REQUIRE(report.size() == printed_formulas().size());
    for (const auto& e : report)
    {
        REQUIRE(e.rows.size() == 11);
        for (const auto& r : e.rows)
            REQUIRE(r.agree == (r.printed == Rational(r.engine)));
    }
}

TEST_CASE("engine column matches the engine")
{
    const auto report = errata_report(6);
    const auto& a = find(report, printed_formulas()[0].name);
    for (const auto& r : a.rows)
    {
        REQUIRE(r.engine_arg == r.n);
        REQUIRE(r.engine == cubic_a(r.n));
    }
    CHECK(a.rows[2].engine == 3);
    CHECK(a.rows[2].printed != 3);
    CHECK_FALSE(a.consistent());
}

TEST_CASE("engine arguments follow the stride")
{
    for (const auto& f : printed_formulas())
    {
        CHECK((f.stride == 1 || f.stride == 3));
        for (std::uint32_t n = 0; n <= 4; ++n)
            CHECK_NOTHROW(evaluate_printed(f, n));
    }
}
