#include <bellforge/cli.hpp>
#include <bellforge/errata.hpp>
#include <bellforge/partfun.hpp>
#include <bellforge/partitions.hpp>
#include <bellforge/random_spec.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

namespace bellforge::cli
{

using nlohmann::ordered_json;

std::uint32_t faa_cap()
{
    const char* env = std::getenv("BELLFORGE_FAA_CAP");
    if (env == nullptr || *env == '\0')
        return default_faa_cap;
    std::string_view text(env);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("BELLFORGE_FAA_CAP must be a nonnegative integer, got '" + std::string(text) + "'");
    return value;
}

namespace
{

std::uint64_t positive_int(const ordered_json& node, const std::string& what)
{
    if (!node.is_number_integer() || node.get<long long>() < 1)
        throw UsageError(what + " must be a positive integer");
    return node.get<std::uint64_t>();
}

SupportSet parse_support(const ordered_json& node)
{
    if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string())
        throw UsageError("support must be an object with a string \"kind\"");
    const auto kind = node["kind"].get<std::string>();
    if (kind == "all")
        return SupportSet::all_naturals();
    if (kind == "multiples")
    {
        if (!node.contains("r"))
            throw UsageError("multiples support needs \"r\"");
        return SupportSet::multiples_of(positive_int(node["r"], "support r"));
    }
    if (kind == "finite")
    {
        if (!node.contains("set") || !node["set"].is_array())
            throw UsageError("finite support needs a \"set\" array");
        std::vector<std::uint64_t> set;
        for (const auto& e : node["set"])
            set.push_back(positive_int(e, "finite support entry"));
        return SupportSet::finite(std::move(set));
    }
    throw UsageError("unknown support kind '" + kind + "'");
}

Factor parse_factor(const ordered_json& node)
{
    if (!node.is_object())
        throw UsageError("factor must be an object");
    for (const auto& [key, value] : node.items())
        if (key != "support" && key != "z" && key != "a")
            throw UsageError("unknown factor key '" + key + "'");
    if (!node.contains("support") || !node.contains("z") || !node.contains("a"))
        throw UsageError("factor needs \"support\", \"z\" and \"a\"");
    if (!node["z"].is_string())
        throw UsageError("factor z must be a string holding an exact rational");
    if (!node["a"].is_number_integer())
        throw UsageError("factor a must be an integer");
    return Factor(parse_support(node["support"]), parse_rational(node["z"].get<std::string>()), node["a"].get<long>());
}

std::optional<ProductSpec> parse_side(const ordered_json& root, const char* key)
{
    if (!root.contains(key))
        return std::nullopt;
    const auto& list = root[key];
    if (!list.is_array())
        throw UsageError(std::string("\"") + key + "\" must be an array");
    if (list.empty())
        return std::nullopt;
    std::vector<Factor> factors;
    for (const auto& f : list)
        factors.push_back(parse_factor(f));
    return ProductSpec(std::move(factors));
}

} // namespace

RatioSpec parse_ratio_spec(const std::string& text)
{
    try
    {
        const auto root = ordered_json::parse(text);
        if (!root.is_object())
            throw UsageError("spec must be a JSON object");
        for (const auto& [key, value] : root.items())
            if (key != "numerator" && key != "denominator")
                throw UsageError("unknown spec key '" + key + "'");
        return {parse_side(root, "numerator"), parse_side(root, "denominator")};
    }
    catch (const nlohmann::json::exception& e)
    {
        throw UsageError(std::string("spec is not valid JSON: ") + e.what());
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
}

std::vector<std::uint64_t> parse_parts(const std::string& text)
{
    std::vector<std::uint64_t> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
    {
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value == 0)
            throw UsageError("malformed parts list '" + text + "'");
        parts.push_back(value);
    }
    if (parts.empty() || text.back() == ',')
        throw UsageError("malformed parts list '" + text + "'");
    auto sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw UsageError("parts list has repeated entries");
    return parts;
}

bool SequenceReport::all_pass() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

ordered_json SequenceReport::to_json() const
{
    ordered_json out;
    out["name"] = name;
    out["params"] = params;
    out["values"] = ordered_json::array();
    for (const auto& [n, value] : values)
        out["values"].push_back({{"n", n}, {"value", value}});
    out["verdicts"] = ordered_json::array();
    for (const auto& v : verdicts)
        out["verdicts"].push_back({{"check", v.check}, {"n", v.n}, {"pass", v.pass}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    out["all_pass"] = all_pass();
    return out;
}

namespace
{

Verdict verdict(std::string check, std::uint32_t n, const Rational& lhs, const Rational& rhs)
{
    return {std::move(check), n, lhs == rhs, to_string(lhs), to_string(rhs)};
}

std::string join_parts(const std::vector<std::uint64_t>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts[i]);
    return out;
}

void require_within_cap(std::uint32_t n, std::uint32_t cap, const std::string& what)
{
    if (n > cap)
        throw UsageError(what + " needs Faa di Bruno sums up to n=" + std::to_string(n) + ", above the cap of " +
                         std::to_string(cap) + " (raise BELLFORGE_FAA_CAP to allow it)");
}

void print_verdicts_csv(const SequenceReport& report, std::ostream& out)
{
    out << "check,n,pass,lhs,rhs\n";
    for (const auto& v : report.verdicts)
        out << v.check << ',' << v.n << ',' << (v.pass ? "true" : "false") << ',' << v.lhs << ',' << v.rhs << '\n';
}

void report_failures(const SequenceReport& report, std::ostream& err)
{
    for (const auto& v : report.verdicts)
        if (!v.pass)
            err << "FAIL " << v.check << " n=" << v.n << ": " << v.lhs << " != " << v.rhs << '\n';
}

// ---------------------------------------------------------------- seq

struct NamedSequence
{
    RatioSpec ratio;
    std::function<std::vector<Integer>(std::uint32_t, std::uint32_t)> faa;
};

NamedSequence named_sequence(const std::string& name, const std::vector<std::uint64_t>& parts)
{
    if (name == "p")
        return {{std::nullopt, specs::euler()}, partition_p_upto};
    if (name == "w")
        return {{std::nullopt, specs::restricted(parts)},
                [parts](std::uint32_t n, std::uint32_t limit) { return restricted_W_upto(n, parts, limit); }};
    if (name == "cubic")
        return {{std::nullopt, specs::cubic()}, cubic_a_upto};
    if (name == "overcubic")
        return {specs::overcubic(), overcubic_abar_upto};
    if (name == "psi-star")
        return {specs::psi_theta(), psi_star_upto};
    if (name == "phi-star")
        return {specs::phi_theta(), phi_star_upto};
    throw UsageError("unknown function '" + name + "'");
}

SequenceReport seq_report(const std::string& name, const std::vector<std::uint64_t>& parts, std::uint32_t max_n,
                          std::uint32_t cap)
{
    if (name == "w" && parts.empty())
        throw UsageError("seq w needs --parts d1,d2,...");
    if (name != "w" && !parts.empty())
        throw UsageError("--parts only applies to seq w");
    const auto seq = named_sequence(name, parts);

    SequenceReport report;
    report.name = name;
    report.params["function"] = name;
    report.params["max"] = max_n;
    if (!parts.empty())
        report.params["parts"] = parts;
    report.params["faa_cap"] = cap;

    const auto values = seq.faa(max_n, cap);
    const auto oracle = ratio_series_upto(max_n, seq.ratio);
    for (std::uint32_t n = 0; n <= max_n; ++n)
    {
        report.values.emplace_back(n, to_string(values[n]));
        if (n <= cap)
            report.verdicts.push_back(verdict("faa=series", n, Rational(values[n]), oracle[n]));
    }
    return report;
}

// ---------------------------------------------------------------- eval

SequenceReport eval_report(const RatioSpec& ratio, std::uint32_t max_n, const std::string& method, std::uint32_t cap)
{
    if (method != "series")
        require_within_cap(max_n, cap, "eval --method " + method);

    SequenceReport report;
    report.name = "eval";
    report.params["numerator"] = ratio.numerator ? ratio.numerator->describe() : "1";
    report.params["denominator"] = ratio.denominator ? ratio.denominator->describe() : "1";
    report.params["max"] = max_n;
    report.params["method"] = method;

    std::vector<Rational> faa, series;
    if (method != "series")
        faa = ratio_faa_upto(max_n, ratio);
    if (method != "faa")
        series = ratio_series_upto(max_n, ratio);
    for (std::uint32_t n = 0; n <= max_n; ++n)
    {
        report.values.emplace_back(n, to_string(method == "series" ? series[n] : faa[n]));
        if (method == "both")
            report.verdicts.push_back(verdict("faa=series", n, faa[n], series[n]));
    }
    return report;
}

// ---------------------------------------------------------------- verify

constexpr std::uint64_t verify_seed = 20240917;

SequenceReport verify_report(const std::string& identity, std::uint32_t max_n, std::uint32_t cap)
{
    SequenceReport report;
    report.name = identity;
    report.params["identity"] = identity;
    report.params["max"] = max_n;
    auto& out = report.verdicts;

    if (identity == "reciprocal")
    {
        require_within_cap(max_n, cap, "verify reciprocal");
        std::vector<std::pair<std::string, ProductSpec>> instances{
            {"euler", specs::euler()},
            {"cubic", specs::cubic()},
            {"overcubic-denominator", *specs::overcubic().denominator},
            {"kim-denominator", *specs::kim().denominator},
        };
        SpecSampler sampler(verify_seed);
        for (int i = 1; i <= 4; ++i)
            instances.emplace_back("random-" + std::to_string(i), sampler.product());
        report.params["instances"] = ordered_json::object();
        for (const auto& [label, spec] : instances)
        {
            report.params["instances"][label] = spec.describe();
            const auto p = bell_P_upto(max_n, spec);
            const auto w = bell_W_upto(max_n, spec);
            for (std::uint32_t n = 0; n <= max_n; ++n)
            {
                Rational lhs = 0;
                for (std::uint32_t k = 0; k <= n; ++k)
                    lhs += p[k] * w[n - k];
                out.push_back(verdict("reciprocal[" + label + "]", n, lhs, n == 0 ? 1 : 0));
            }
        }
    }
    else if (identity == "euler")
    {
        require_within_cap(max_n, cap, "verify euler");
        const auto theorem = partition_p_upto(max_n, cap);
        for (std::uint32_t n = 0; n <= max_n; ++n)
        {
            std::uint64_t count = 0;
            for ([[maybe_unused]] const auto& pv : iter_partitions(n))
                ++count;
            const Rational pentagonal(p_pentagonal(n));
            out.push_back(verdict("theorem=pentagonal", n, Rational(theorem[n]), pentagonal));
            out.push_back(verdict("pentagonal=enumerated", n, pentagonal, Rational(Integer(count))));
        }
    }
    else if (identity == "sigma")
    {
        for (std::uint32_t n = 1; n <= max_n; ++n)
            out.push_back(verdict("sigma-formula", n, Rational(sigma_via_factorization(factorize(n))), Rational(sigma(n))));
    }
    else if (identity == "chan")
    {
        require_within_cap(3 * max_n + 2, cap, "verify chan");
        const auto a = cubic_a_upto(3 * max_n + 2, cap);
        const auto rhs = chan_rhs_upto(max_n);
        for (std::uint32_t n = 0; n <= max_n; ++n)
        {
            const Integer& lhs = a[3 * n + 2];
            out.push_back(verdict("chan", n, Rational(lhs), Rational(rhs[n])));
            out.push_back(verdict("a(3n+2) mod 3", n, Rational(Integer(lhs % 3)), 0));
        }
    }
    else if (identity == "kim")
    {
        require_within_cap(3 * max_n + 2, cap, "verify kim");
        const auto a = overcubic_abar_upto(3 * max_n + 2, cap);
        const auto rhs = kim_rhs_upto(max_n);
        for (std::uint32_t n = 0; n <= max_n; ++n)
        {
            const Integer& lhs = a[3 * n + 2];
            out.push_back(verdict("kim", n, Rational(lhs), Rational(rhs[n])));
            out.push_back(verdict("abar(3n+2) mod 6", n, Rational(Integer(lhs % 6)), 0));
        }
    }
    else if (identity == "additivity-index")
    {
        require_within_cap(max_n, cap, "verify additivity-index");
        SpecSampler sampler(verify_seed);
        for (std::uint32_t n = 0; n <= max_n; ++n)
            for (int i = 1; i <= 3; ++i)
            {
                const auto base = sampler.product();
                const auto a = sampler.exponents(base.factors().size());
                const auto b = sampler.exponents(base.factors().size());
                const auto check = check_index_additivity(n, base, a, b);
                out.push_back(verdict("additivity-index#" + std::to_string(i), n, check.lhs, check.rhs));
            }
    }
    else if (identity == "additivity-set")
    {
        require_within_cap(max_n, cap, "verify additivity-set");
        SpecSampler sampler(verify_seed);
        for (std::uint32_t n = 0; n <= max_n; ++n)
            for (int i = 1; i <= 3; ++i)
            {
                const auto [a, b] = sampler.disjoint_pair();
                const auto check = check_set_additivity(n, a, b);
                out.push_back(verdict("additivity-set#" + std::to_string(i), n, check.lhs, check.rhs));
            }
    }
    else if (identity == "restricted-recursion")
    {
        require_within_cap(max_n, cap, "verify restricted-recursion");
        std::vector<std::vector<std::uint64_t>> lists{{1, 2}, {1, 2, 3}, {2, 3, 5}};
        SpecSampler sampler(verify_seed);
        for (int i = 0; i < 3; ++i)
            lists.push_back(sampler.part_list(8, 2));
        for (const auto& d : lists)
            for (std::uint32_t n = 0; n <= max_n; ++n)
            {
                const auto check = restricted_W_recursion_check(n, d);
                out.push_back(verdict("recursion[" + join_parts(d) + "]", n, check.lhs, check.rhs));
            }
    }
    else if (identity == "theta")
    {
        const auto psi = psi_star_upto(max_n, cap);
        const auto phi = phi_star_upto(max_n, cap);
        const auto psi_series = ratio_series_upto(max_n, specs::psi_theta());
        const auto phi_series = ratio_series_upto(max_n, specs::phi_theta());
        for (std::uint32_t n = 0; n <= max_n; ++n)
        {
            out.push_back(verdict("psi*=triangular", n, Rational(psi[n]), is_triangular(n) ? 1 : 0));
            out.push_back(verdict("phi*=squares", n, Rational(phi[n]), n == 0 ? 1 : (is_positive_square(n) ? 2 : 0)));
            if (n <= cap)
            {
                out.push_back(verdict("psi* faa=series", n, Rational(psi[n]), psi_series[n]));
                out.push_back(verdict("phi* faa=series", n, Rational(phi[n]), phi_series[n]));
            }
        }
    }
    else
    {
        throw UsageError("unknown identity '" + identity + "'");
    }
    return report;
}

// ---------------------------------------------------------------- bench

template <class F>
double best_ms(unsigned repeat, F&& body)
{
    double best = 0;
    for (unsigned r = 0; r < repeat; ++r)
    {
        const auto start = std::chrono::steady_clock::now();
        body();
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        if (r == 0 || elapsed.count() < best)
            best = elapsed.count();
    }
    return best;
}

int run_bench(std::uint32_t max_n, unsigned repeat, std::uint32_t cap, std::ostream& out, std::ostream& err)
{
    require_within_cap(max_n, cap, "bench");
    if (repeat == 0)
        throw UsageError("--repeat must be >= 1");
    constexpr std::uint32_t bucket_width = 10;
    out << "n_lo,n_hi,theorem_ms,pentagonal_ms,series_ms,agree\n";
    bool all_agree = true;
    for (std::uint32_t lo = 0; lo <= max_n; lo += bucket_width)
    {
        const std::uint32_t hi = std::min(max_n, lo + bucket_width - 1);
        std::vector<Integer> by_theorem, by_pentagonal;
        std::vector<Rational> by_series;
        const double t_theorem = best_ms(repeat, [&] {
            by_theorem.clear();
            for (std::uint32_t n = lo; n <= hi; ++n)
                by_theorem.push_back(partition_p(n));
        });
        const double t_pentagonal = best_ms(repeat, [&] {
            by_pentagonal.clear();
            for (std::uint32_t n = lo; n <= hi; ++n)
                by_pentagonal.push_back(p_pentagonal_table(n).back());
        });
        const double t_series = best_ms(repeat, [&] {
            by_series.clear();
            for (std::uint32_t n = lo; n <= hi; ++n)
                by_series.push_back(coefficient(series_reciprocal(expand_product(specs::euler(), n)), n));
        });
        bool agree = true;
        for (std::size_t i = 0; i < by_theorem.size(); ++i)
        {
            const bool ok = by_theorem[i] == by_pentagonal[i] && Rational(by_theorem[i]) == by_series[i];
            if (!ok)
                err << "disagreement at n=" << lo + i << ": theorem=" << by_theorem[i] << " pentagonal=" << by_pentagonal[i]
                    << " series=" << to_string(by_series[i]) << '\n';
            agree = agree && ok;
        }
        all_agree = all_agree && agree;
        out << lo << ',' << hi << ',' << std::fixed << std::setprecision(3) << t_theorem << ',' << t_pentagonal << ','
            << t_series << ',' << (agree ? "true" : "false") << '\n';
        out.unsetf(std::ios::floatfield);
    }
    return all_agree ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- errata

int run_errata(std::uint32_t max_n, const std::string& format, std::ostream& out)
{
    const auto entries = errata_report(max_n);
    if (format == "json")
    {
        ordered_json doc;
        doc["name"] = "printed-formula-errata";
        doc["params"] = {{"max", max_n}};
        doc["formulas"] = ordered_json::array();
        for (const auto& e : entries)
        {
            ordered_json rows = ordered_json::array();
            for (const auto& r : e.rows)
                rows.push_back({{"n", r.n},
                                {"engine_arg", r.engine_arg},
                                {"printed", to_string(r.printed)},
                                {"engine", to_string(r.engine)},
                                {"agree", r.agree}});
            doc["formulas"].push_back({{"formula", e.formula}, {"consistent", e.consistent()}, {"rows", rows}});
        }
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    out << "formula,n,engine_arg,printed,engine,agree\n";
    for (const auto& e : entries)
        for (const auto& r : e.rows)
            out << e.formula << ',' << r.n << ',' << r.engine_arg << ',' << to_string(r.printed) << ','
                << to_string(r.engine) << ',' << (r.agree ? "true" : "false") << '\n';
    return exit_ok;
}

int emit(const SequenceReport& report, const std::string& format, std::ostream& out, std::ostream& err,
         bool verdicts_in_csv)
{
    if (format == "json")
        out << report.to_json().dump(2) << '\n';
    else if (verdicts_in_csv)
        print_verdicts_csv(report, out);
    else
    {
        out << "n,value\n";
        for (const auto& [n, value] : report.values)
            out << n << ',' << value << '\n';
    }
    report_failures(report, err);
    return report.all_pass() ? exit_ok : exit_failure;
}

int emit_eval_both(const SequenceReport& report, std::ostream& out, std::ostream& err)
{
    out << "n,faa,series,agree\n";
    for (const auto& v : report.verdicts)
        out << v.n << ',' << v.lhs << ',' << v.rhs << ',' << (v.pass ? "true" : "false") << '\n';
    report_failures(report, err);
    return report.all_pass() ? exit_ok : exit_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Bell partition polynomials, their reciprocals, and the partition functions built on them",
                 "bellforge"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json"};

    auto* seq = app.add_subcommand("seq", "Print a named sequence for n = 0..max");
    std::string seq_name, seq_parts, seq_format = "csv";
    std::uint32_t seq_max = 0;
    seq->add_option("function", seq_name, "p | w | cubic | overcubic | psi-star | phi-star")
        ->required()
        ->check(CLI::IsMember({"p", "w", "cubic", "overcubic", "psi-star", "phi-star"}));
    seq->add_option("--max", seq_max, "Largest n")->required();
    seq->add_option("--parts", seq_parts, "Part sizes for w, e.g. 1,2,5");
    seq->add_option("--format", seq_format, "csv | json")->check(CLI::IsMember(formats));

    auto* eval = app.add_subcommand("eval", "Coefficients of a numerator/denominator product spec");
    std::string eval_spec, eval_method = "both", eval_format = "csv";
    std::uint32_t eval_max = 0;
    eval->add_option("--spec", eval_spec, "JSON spec file")->required();
    eval->add_option("--max", eval_max, "Largest n")->required();
    eval->add_option("--method", eval_method, "faa | series | both")->check(CLI::IsMember({"faa", "series", "both"}));
    eval->add_option("--format", eval_format, "csv | json")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Check an identity for n = 0..max");
    std::string verify_name, verify_format = "csv";
    std::uint32_t verify_max = 0;
    verify->add_option("identity", verify_name)
        ->required()
        ->check(CLI::IsMember({"reciprocal", "euler", "sigma", "chan", "kim", "additivity-index", "additivity-set",
                               "restricted-recursion", "theta"}));
    verify->add_option("--max", verify_max, "Largest n")->required();
    verify->add_option("--format", verify_format, "csv | json")->check(CLI::IsMember(formats));

    auto* bench = app.add_subcommand("bench", "Time the three p(n) algorithms");
    std::uint32_t bench_max = 0;
    unsigned bench_repeat = 3;
    bench->add_option("--max", bench_max, "Largest n")->required();
    bench->add_option("--repeat", bench_repeat, "Repetitions per bucket (best time is reported)");

    auto* errata = app.add_subcommand("errata", "Compare the printed closed forms with the engine");
    std::uint32_t errata_max = 10;
    std::string errata_format = "csv";
    errata->add_option("--max", errata_max, "Largest formula index n");
    errata->add_option("--format", errata_format, "csv | json")->check(CLI::IsMember(formats));

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        const auto cap = faa_cap();
        if (*seq)
        {
            const auto parts = seq_parts.empty() ? std::vector<std::uint64_t>{} : parse_parts(seq_parts);
            return emit(seq_report(seq_name, parts, seq_max, cap), seq_format, out, err, false);
        }
        if (*eval)
        {
            std::ifstream file(eval_spec);
            if (!file)
                throw UsageError("cannot read spec file '" + eval_spec + "'");
            std::stringstream buffer;
            buffer << file.rdbuf();
            const auto report = eval_report(parse_ratio_spec(buffer.str()), eval_max, eval_method, cap);
            if (eval_method == "both" && eval_format == "csv")
                return emit_eval_both(report, out, err);
            return emit(report, eval_format, out, err, false);
        }
        if (*verify)
            return emit(verify_report(verify_name, verify_max, cap), verify_format, out, err, true);
        if (*bench)
            return run_bench(bench_max, bench_repeat, cap, out, err);
        if (*errata)
            return run_errata(errata_max, errata_format, out);
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace bellforge::cli
