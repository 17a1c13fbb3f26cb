#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "carrylab/bounds.hpp"
#include "carrylab/carry.hpp"
#include "carrylab/extremal.hpp"
#include "carrylab/report.hpp"

// Exit codes: 0 success (and no violations), 1 a verification sweep found
// violations, 2 usage or configuration errors.

namespace cl = carrylab;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    int workers = 1;
    std::string format = "human";
    std::string checkpoint;
    std::uint64_t budget = 100'000'000;
    bool force_sample = false;
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

cl::RunConfig make_config(const GlobalOpts& g, const std::string& command,
                          ordered_json arguments) {
    cl::RunConfig config;
    config.command = command;
    config.arguments = std::move(arguments);
    config.seed = g.seed;
    config.workers = g.workers;
    config.format = g.format;
    config.checkpoint_path = g.checkpoint;
    config.budget = g.budget;
    config.force_sample = g.force_sample;
    return config;
}

void print_kv(std::ostream& out, const char* key, const std::string& value) {
    out << key;
    for (std::size_t i = std::char_traits<char>::length(key); i < 24; ++i) out << ' ';
    out << value << "\n";
}

std::string set_human(const std::vector<cl::Int>& elements) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < elements.size(); ++i) out << (i ? "," : "") << elements[i];
    out << "}";
    return out.str();
}

std::string domain_human(const cl::Domain& domain) {
    return domain.is_modular() ? "Z_" + domain.q.str() : "Z";
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const GlobalOpts& g, const std::vector<std::string>& tokens) {
    const auto start = std::chrono::steady_clock::now();
    std::string literal;
    for (const std::string& tok : tokens) {
        if (!literal.empty()) literal += ' ';
        literal += tok;
    }
    const cl::DigitalSet set = cl::parse_set_literal(literal);
    const cl::CarryReport carries = cl::carry_report(set);
    const cl::ElementSet elems = cl::ElementSet::of(set);
    const cl::SumsetProfile profile = cl::rep_function(elems, elems);
    const cl::StructureClass for_c1 = cl::classify_structure(set, cl::ClassifyPurpose::ForC1);
    const cl::StructureClass for_c2 = cl::classify_structure(set, cl::ClassifyPurpose::ForC2);

    const cl::RunConfig config = make_config(g, "analyze", {{"literal", set.literal()}});
    ordered_json result = {
        {"set", cl::digital_set_to_json(set)},
        {"m", cl::int_to_json(set.m())},
        {"domain", set.domain().is_modular() ? ordered_json(cl::int_to_json(set.domain().q))
                                             : ordered_json("Z")},
        {"carries", cl::carry_report_to_json(carries)},
        {"sumset", {{"distinct_sums", profile.counts.size()},
                    {"ordered_pairs", cl::int_to_json(profile.total)}}},
        {"structure_c1", cl::structure_to_string(for_c1)},
        {"structure_c2", cl::structure_to_string(for_c2)}};

    if (g.format == "json") {
        std::cout << cl::make_report("analyze", config, result, seconds_since(start)).dump(2)
                  << "\n";
    } else if (g.format == "csv") {
        std::cout << "field,value\n";
        std::cout << "literal," << set.literal() << "\n";
        std::cout << "c1," << carries.c1 << "\n";
        std::cout << "carry_count," << carries.carry_count << "\n";
        std::cout << "c2," << cl::rat_num(carries.c2) << "/" << cl::rat_den(carries.c2) << "\n";
        std::cout << "distinct_sums," << profile.counts.size() << "\n";
        std::cout << "structure_c1," << cl::structure_to_string(for_c1) << "\n";
        std::cout << "structure_c2," << cl::structure_to_string(for_c2) << "\n";
    } else {
        std::vector<cl::Int> carry_list(carries.carry_set.begin(), carries.carry_set.end());
        print_kv(std::cout, "set", set.literal());
        print_kv(std::cout, "domain", domain_human(set.domain()));
        print_kv(std::cout, "carry set", set_human(carry_list));
        print_kv(std::cout, "distinct carries (c1)", carries.c1.str());
        print_kv(std::cout, "carrying pairs",
                 carries.carry_count.str() + " of " + cl::Int(set.m() * set.m()).str());
        print_kv(std::cout, "carry frequency (c2)", cl::rat_human(carries.c2));
        print_kv(std::cout, "distinct sums", std::to_string(profile.counts.size()));
        print_kv(std::cout, "structure for c1", cl::structure_to_string(for_c1));
        print_kv(std::cout, "structure for c2", cl::structure_to_string(for_c2));
    }
    return 0;
}

// ---- search ----------------------------------------------------------------

int cmd_search(const GlobalOpts& g, const std::vector<std::string>& kv_tokens,
               const std::string& stat, bool exhaustive, std::uint64_t samples,
               std::uint64_t restarts, const std::string& reduction_name,
               std::size_t witness_cap) {
    const auto start = std::chrono::steady_clock::now();
    cl::Int q = -1, m = -1;
    for (const std::string& tok : kv_tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw cl::Error(cl::Errc::ParseError, "expected q=N or m=N, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const cl::Int value(tok.substr(eq + 1));
        if (key == "q")
            q = value;
        else if (key == "m")
            m = value;
        else
            throw cl::Error(cl::Errc::ParseError, "unknown search parameter '" + key + "'");
    }
    if (q < 0 || m < 0)
        throw cl::Error(cl::Errc::BadArgument, "search requires both q=N and m=N");
    if (static_cast<int>(exhaustive) + static_cast<int>(samples > 0) +
            static_cast<int>(restarts > 0) >
        1)
        throw cl::Error(cl::Errc::BadArgument,
                        "choose one of --exhaustive, --samples, --restarts");

    cl::SearchMode mode = cl::SearchMode::exhaustive();
    if (samples > 0) mode = cl::SearchMode::random(samples, g.seed);
    if (restarts > 0) mode = cl::SearchMode::hill_climb(restarts, g.seed);

    cl::SearchOptions opts;
    opts.budget = g.budget;
    opts.workers = g.workers;
    opts.checkpoint_path = g.checkpoint;
    opts.force_sample = g.force_sample;
    opts.witness_cap = witness_cap;
    if (reduction_name == "none")
        opts.reduction = cl::Reduction::None;
    else if (reduction_name == "fix-zero-rep")
        opts.reduction = cl::Reduction::FixZeroRep;
    else if (reduction_name == "dilation-canonical")
        opts.reduction = cl::Reduction::DilationCanonical;
    else
        throw cl::Error(cl::Errc::BadArgument, "unknown reduction '" + reduction_name + "'");

    ordered_json arguments = {{"q", cl::int_to_json(q)},
                              {"m", cl::int_to_json(m)},
                              {"stat", stat},
                              {"mode", restarts > 0 ? "hill-climb"
                                       : samples > 0 ? "random"
                                                     : "exhaustive"},
                              {"samples", samples},
                              {"restarts", restarts},
                              {"reduction", reduction_name},
                              {"witness_cap", witness_cap}};
    const cl::RunConfig config = make_config(g, "search", std::move(arguments));

    ordered_json result;
    std::string min_text;
    std::vector<cl::DigitalSet> witnesses;
    const cl::SearchWitnesses* base = nullptr;
    cl::MinC2Result c2_result;
    cl::MinC1Result c1_result;
    const cl::ClassifyPurpose purpose =
        stat == "c1" ? cl::ClassifyPurpose::ForC1 : cl::ClassifyPurpose::ForC2;
    if (stat == "c2") {
        c2_result = cl::min_c2(q, m, mode, opts);
        result = cl::search_result_to_json(c2_result);
        min_text = cl::rat_human(c2_result.min);
        base = &c2_result;
    } else if (stat == "c1") {
        c1_result = cl::min_c1(q, m, mode, opts);
        result = cl::search_result_to_json(c1_result);
        min_text = c1_result.min.str();
        base = &c1_result;
    } else {
        throw cl::Error(cl::Errc::BadArgument, "--stat must be c1 or c2");
    }

    if (g.format == "json") {
        std::cout << cl::make_report("search", config, result, seconds_since(start)).dump(2)
                  << "\n";
    } else if (g.format == "csv") {
        std::cout << "statistic,min,minimizer_total,candidates_examined,space_size,certified\n";
        std::cout << stat << "," << result.at("min").dump() << "," << base->minimizer_total << ","
                  << base->candidates_examined << "," << base->space_size << ","
                  << (base->certified ? "true" : "false") << "\n";
    } else {
        print_kv(std::cout, ("minimum " + stat).c_str(), min_text);
        print_kv(std::cout, "minimizers",
                 std::to_string(base->minimizer_total) + " set(s), " +
                     std::to_string(base->witnesses.size()) + " canonical class(es)");
        for (const cl::DigitalSet& w : base->witnesses) {
            std::cout << "  " << set_human(w.elements()) << "  "
                      << cl::structure_to_string(cl::classify_structure(w, purpose)) << "\n";
        }
        print_kv(std::cout, "examined",
                 std::to_string(base->candidates_examined) + " of " + base->space_size.str() +
                     (base->certified ? " (certified)" : " (not certified)"));
        for (const std::string& w : base->warnings) std::cout << "warning: " << w << "\n";
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const GlobalOpts& g, const std::string& theorem, const cl::VerifyParams& params,
               std::size_t witness_cap) {
    const auto start = std::chrono::steady_clock::now();
    cl::VerifyOptions opts;
    opts.budget = g.budget;
    opts.workers = g.workers;
    opts.seed = g.seed;
    opts.checkpoint_path = g.checkpoint;
    opts.witness_cap = witness_cap;

    const cl::VerificationReport report = cl::verify_theorem(theorem, params, opts);

    ordered_json arguments = {{"theorem", theorem}};
    arguments["parameters"] = report.parameters;
    if (params.samples > 0) arguments["samples"] = params.samples;
    arguments["witness_cap"] = witness_cap;
    const cl::RunConfig config = make_config(g, "verify", std::move(arguments));

    if (g.format == "json") {
        std::cout << cl::make_report("verify", config, cl::verification_report_to_json(report),
                                     seconds_since(start))
                         .dump(2)
                  << "\n";
    } else if (g.format == "csv") {
        std::cout << "theorem,mode,candidates_examined,violation_count,equality_count,passed\n";
        std::cout << theorem << "," << report.mode << "," << report.candidates_examined << ","
                  << report.violation_count << "," << report.equality_count << ","
                  << (report.passed() ? "true" : "false") << "\n";
    } else {
        print_kv(std::cout, "theorem", report.theorem_id);
        print_kv(std::cout, "parameters", report.parameters.dump());
        print_kv(std::cout, "mode", report.mode);
        print_kv(std::cout, "candidates examined", std::to_string(report.candidates_examined));
        print_kv(std::cout, "violations", std::to_string(report.violation_count));
        print_kv(std::cout, "equality cases", std::to_string(report.equality_count));
        if (report.min_observed)
            print_kv(std::cout, "min observed", cl::rat_human(*report.min_observed));
        print_kv(std::cout, "details", report.details.dump());
        for (const std::string& w : report.warnings) std::cout << "warning: " << w << "\n";
        if (!report.passed() && !report.violations.empty())
            std::cout << "first violations:\n" << report.violations.dump(2) << "\n";
        print_kv(std::cout, "result", report.passed() ? "PASS" : "FAIL");
    }
    return report.passed() ? 0 : 1;
}

// ---- bounds ----------------------------------------------------------------

int cmd_bounds(const GlobalOpts& g, const std::vector<std::int64_t>& ms) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<cl::Int> m_values(ms.begin(), ms.end());
    const std::vector<cl::MuTableRow> rows = cl::mu_table(m_values);

    if (g.format == "json") {
        ordered_json arguments = {{"m", ms}};
        const cl::RunConfig config = make_config(g, "bounds", std::move(arguments));
        ordered_json table = ordered_json::array();
        for (const cl::MuTableRow& row : rows)
            table.push_back({{"m", cl::int_to_json(row.m)},
                             {"mu", cl::rat_to_json(row.mu)},
                             {"interval_ratio", cl::rat_to_json(row.interval_ratio)},
                             {"gap", cl::rat_to_json(row.gap)}});
        std::cout << cl::make_report("bounds", config, {{"rows", std::move(table)}},
                                     seconds_since(start))
                         .dump(2)
                  << "\n";
    } else if (g.format == "csv") {
        std::cout << cl::mu_table_csv(rows);
    } else {
        for (const cl::MuTableRow& row : rows) {
            std::cout << "m = " << row.m << ": mu = " << cl::rat_human(row.mu)
                      << ", interval ratio = " << cl::rat_human(row.interval_ratio)
                      << ", gap to 1/4 = " << cl::rat_human(row.gap) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact carry statistics for digital sets"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for sampled sweeps")->capture_default_str();
    app.add_option("--workers", g.workers, "parallel sweep workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--checkpoint", g.checkpoint, "checkpoint file for resumable sweeps");
    app.add_option("--budget", g.budget, "max candidates for exhaustive sweeps")
        ->capture_default_str();
    app.add_flag("--force-sample", g.force_sample,
                 "fall back to random sampling when a search exceeds the budget");

    auto* analyze = app.add_subcommand("analyze", "exact statistics of one digital set");
    analyze->fallthrough();
    std::vector<std::string> analyze_tokens;
    analyze->add_option("set", analyze_tokens, "set literal, e.g. q=9 m=3 A=8,0,1")
        ->required()
        ->expected(-1);

    auto* search = app.add_subcommand("search", "minimize a carry statistic over digital sets");
    search->fallthrough();
    std::vector<std::string> search_tokens;
    std::string stat = "c2";
    bool exhaustive = false;
    std::uint64_t samples = 0, restarts = 0;
    std::string reduction = "none";
    std::size_t search_cap = 4096;
    search->add_option("space", search_tokens, "q=N m=N")->required()->expected(-1);
    search->add_option("--stat", stat, "statistic to minimize")
        ->check(CLI::IsMember({"c1", "c2"}))
        ->capture_default_str();
    search->add_flag("--exhaustive", exhaustive, "sweep the whole space (default)");
    search->add_option("--samples", samples, "random search with this many draws");
    search->add_option("--restarts", restarts, "hill climb with this many restarts");
    search->add_option("--reduction", reduction, "enumeration reduction")
        ->check(CLI::IsMember({"none", "fix-zero-rep", "dilation-canonical"}))
        ->capture_default_str();
    search->add_option("--witness-cap", search_cap, "max stored minimizers")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "sweep one theorem's claim");
    verify->fallthrough();
    std::string theorem;
    std::int64_t v_q = 0, v_m = 0, v_p = 0, v_window = 0;
    unsigned v_alpha = 0, v_beta = 0;
    std::uint64_t v_samples = 0;
    std::size_t verify_cap = 256;
    verify->add_option("theorem", theorem, "theorem id; see --list")->required();
    auto* oq = verify->add_option("--q", v_q, "modulus");
    auto* om = verify->add_option("--m", v_m, "digit count");
    auto* op = verify->add_option("--p", v_p, "prime");
    auto* oa = verify->add_option("--alpha", v_alpha, "prime exponent of m");
    auto* ob = verify->add_option("--beta", v_beta, "prime exponent of q");
    auto* ow = verify->add_option("--window", v_window, "integer-case digit window");
    verify->add_option("--samples", v_samples, "sampled pair sweep with this many draws");
    verify->add_option("--witness-cap", verify_cap, "max stored witnesses")
        ->capture_default_str();

    auto* list = app.add_subcommand("list-theorems", "print the available theorem ids");

    auto* bounds = app.add_subcommand("bounds", "closed-form lower-bound table");
    bounds->fallthrough();
    std::vector<std::int64_t> bound_ms;
    bounds->add_option("m", bound_ms, "moduli")->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(g, analyze_tokens);
        if (*search)
            return cmd_search(g, search_tokens, stat, exhaustive, samples, restarts, reduction,
                              search_cap);
        if (*verify) {
            cl::VerifyParams params;
            if (oq->count()) params.q = cl::Int(v_q);
            if (om->count()) params.m = cl::Int(v_m);
            if (op->count()) params.p = cl::Int(v_p);
            if (oa->count()) params.alpha = v_alpha;
            if (ob->count()) params.beta = v_beta;
            if (ow->count()) params.window = cl::Int(v_window);
            params.samples = v_samples;
            return cmd_verify(g, theorem, params, verify_cap);
        }
        if (*list) {
            for (const std::string& id : cl::theorem_ids()) std::cout << id << "\n";
            return 0;
        }
        if (*bounds) return cmd_bounds(g, bound_ms);
    } catch (const cl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
