#ifndef BELLFORGE_ERRATA_HPP
#define BELLFORGE_ERRATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <bellforge/arith.hpp>

namespace bellforge
{

// Literal transcriptions of the published closed forms for a(n), a(3n+2),
// abar(n), abar(3n+2), psi*(n) and phi*(n). Each has the shape
//
//     c1 A(n) + c2 sum_{m=1..n} B(m) A(n-m)
//
// where A and B are partition sums  sum_pi lambda^{sum k} prod (1/k!)(y_j/j)^k
// and y_j = sum_i coef_i I_{r_i}(j) sigma(j/r_i). They are evaluated exactly
// as printed and compared against the engine; they are not used anywhere
// else.

struct DivisorTerm
{
    long coef;
    std::uint64_t r;
};

struct PrintedSum
{
    long lambda;
    std::vector<DivisorTerm> terms;
};

struct PrintedFormula
{
    std::string name;
    std::string engine_name;
    long c1;
    PrintedSum a_sum;
    long c2; ///< 0 when the formula has no convolution term
    PrintedSum b_sum;
    /// Engine argument for formula index n: n, or 3n+2.
    std::uint32_t stride;
    std::uint32_t offset;
};

const std::vector<PrintedFormula>& printed_formulas();

Rational evaluate_printed(const PrintedFormula& formula, std::uint32_t n);

struct ErrataRow
{
    std::uint32_t n;
    std::uint32_t engine_arg;
    Rational printed;
    Integer engine;
    bool agree;
};

struct ErrataEntry
{
    std::string formula;
    std::vector<ErrataRow> rows;

    bool consistent() const;
};

/// One entry per printed formula, rows for n = 0..max_n.
std::vector<ErrataEntry> errata_report(std::uint32_t max_n);

} // namespace bellforge

#endif
