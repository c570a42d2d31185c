#include <bellforge/errata.hpp>
#include <bellforge/kernels.hpp>
#include <bellforge/partfun.hpp>

#include <algorithm>
#include <stdexcept>

namespace bellforge
{

const std::vector<PrintedFormula>& printed_formulas()
{
    static const std::vector<PrintedFormula> table{
        {"a(n)", "cubic", 1, {-1, {{1, 1}, {1, 2}}}, 0, {1, {}}, 1, 0},
        {"a(3n+2)", "cubic", 3, {4, {{1, 1}, {1, 2}}}, 3, {-3, {{1, 3}, {1, 6}}}, 3, 2},
        {"abar(n)", "overcubic", 1, {1, {{2, 1}, {1, 2}}}, 1, {-1, {{1, 4}}}, 1, 0},
        {"abar(3n+2)", "overcubic", 6, {1, {{8, 1}, {3, 2}}}, 1, {1, {{-6, 3}, {-3, 4}}}, 3, 2},
        {"psi*(n)", "psi-star", 1, {1, {{1, 1}}}, 1, {-2, {{1, 2}}}, 1, 0},
        {"phi*(n)", "phi-star", 1, {2, {{1, 1}, {1, 4}}}, 1, {-5, {{1, 2}}}, 1, 0},
    };
    return table;
}

namespace
{

// A(0..n) for one printed partition sum.
std::vector<Rational> printed_sequence(const PrintedSum& sum, std::uint32_t n)
{
    std::vector<Rational> psi;
    for (std::uint32_t j = 1; j <= n; ++j)
    {
        Integer y = 0;
        for (const auto& [coef, r] : sum.terms)
            if (indicator(r, j))
                y += Integer(coef) * sigma(j / r);
        psi.emplace_back(Integer(sum.lambda) * y);
    }
    const auto scaled = scale_psi(psi, 1);
    std::vector<Rational> out;
    for (std::uint32_t m = 0; m <= n; ++m)
        out.push_back(faa_sum(scaled, m));
    return out;
}

std::vector<Integer> engine_sequence(const std::string& name, std::uint32_t n)
{
    if (name == "cubic")
        return cubic_a_upto(n);
    if (name == "overcubic")
        return overcubic_abar_upto(n);
    if (name == "psi-star")
        return psi_star_upto(n);
    if (name == "phi-star")
        return phi_star_upto(n);
    throw std::logic_error("unknown engine sequence " + name);
}

} // namespace

Rational evaluate_printed(const PrintedFormula& formula, std::uint32_t n)
{
    const auto a = printed_sequence(formula.a_sum, n);
    Rational value = Rational(formula.c1) * a[n];
    if (formula.c2 != 0)
    {
        const auto b = printed_sequence(formula.b_sum, n);
        Rational conv = 0;
        for (std::uint32_t m = 1; m <= n; ++m)
            conv += b[m] * a[n - m];
        value += Rational(formula.c2) * conv;
    }
    return value;
}

bool ErrataEntry::consistent() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ErrataRow& r) { return r.agree; });
}

std::vector<ErrataEntry> errata_report(std::uint32_t max_n)
{
    std::vector<ErrataEntry> out;
    for (const auto& formula : printed_formulas())
    {
        const auto engine = engine_sequence(formula.engine_name, formula.stride * max_n + formula.offset);
        ErrataEntry entry{formula.name, {}};
        for (std::uint32_t n = 0; n <= max_n; ++n)
        {
            const auto arg = formula.stride * n + formula.offset;
            auto printed = evaluate_printed(formula, n);
            const bool agree = printed == Rational(engine[arg]);
            entry.rows.push_back({n, arg, std::move(printed), engine[arg], agree});
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace bellforge
