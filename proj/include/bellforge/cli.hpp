#ifndef BELLFORGE_CLI_HPP
#define BELLFORGE_CLI_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <bellforge/bellpoly.hpp>

namespace bellforge::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::uint32_t default_faa_cap = 60;

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// BELLFORGE_FAA_CAP, or 60 when unset. Throws UsageError on a malformed value.
std::uint32_t faa_cap();

/// Parses the ratio spec file format:
///   {"numerator":[FACTOR...], "denominator":[FACTOR...]}
///   FACTOR = {"support":{"kind":"all"} | {"kind":"multiples","r":int}
///                      | {"kind":"finite","set":[int...]},
///             "z":"p/q", "a":int}
/// An empty or missing side means the constant 1. Throws UsageError.
RatioSpec parse_ratio_spec(const std::string& text);

/// "1,2,5" -> {1,2,5}. Throws UsageError on malformed or repeated entries.
std::vector<std::uint64_t> parse_parts(const std::string& text);

struct Verdict
{
    std::string check;
    std::uint32_t n;
    bool pass;
    std::string lhs;
    std::string rhs;
};

struct SequenceReport
{
    std::string name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<std::pair<std::uint32_t, std::string>> values;
    std::vector<Verdict> verdicts;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

/// Runs one command line (without the program name). Never throws; returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bellforge::cli

#endif
