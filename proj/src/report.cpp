#include "carrylab/report.hpp"

#include <limits>

#include "carrylab/pollard.hpp"

namespace carrylab {

namespace {

using nlohmann::ordered_json;

bool fits_i64(const Int& v) {
    return v >= Int(std::numeric_limits<std::int64_t>::min()) &&
           v <= Int(std::numeric_limits<std::int64_t>::max());
}

[[noreturn]] void invalid(const std::string& what) {
    throw Error(Errc::BadArgument, "report failed re-validation: " + what);
}

}  // namespace

ordered_json int_to_json(const Int& v) {
    if (fits_i64(v)) return to_i64(v);
    return v.str();
}

Int int_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error(Errc::ParseError, "expected an integer or a decimal string");
}

ordered_json rat_to_json(const Rat& v) {
    return ordered_json{{"num", int_to_json(rat_num(v))}, {"den", int_to_json(rat_den(v))}};
}

Rat rat_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(Errc::ParseError, "a rational serializes as {\"num\", \"den\"}");
    const Int num = int_from_json(j.at("num"));
    const Int den = int_from_json(j.at("den"));
    if (den == 0) throw Error(Errc::ParseError, "rational with zero denominator");
    return Rat(num, den);
}

std::string rat_human(const Rat& v) {
    if (rat_den(v) == 1) return rat_num(v).str();
    return rat_num(v).str() + "/" + rat_den(v).str() + " (≈ " + dec_approx(v) + ")";
}

ordered_json run_config_to_json(const RunConfig& config) {
    return ordered_json{{"command", config.command},
                        {"arguments", config.arguments},
                        {"seed", config.seed},
                        {"workers", config.workers},
                        {"format", config.format},
                        {"checkpoint_path", config.checkpoint_path},
                        {"budget", config.budget},
                        {"force_sample", config.force_sample}};
}

RunConfig run_config_from_json(const ordered_json& j) {
    RunConfig config;
    config.command = j.at("command").get<std::string>();
    config.arguments = j.value("arguments", ordered_json::object());
    config.seed = j.value("seed", std::uint64_t{0});
    config.workers = j.value("workers", 1);
    config.format = j.value("format", std::string("human"));
    config.checkpoint_path = j.value("checkpoint_path", std::string());
    config.budget = j.value("budget", std::uint64_t{100'000'000});
    config.force_sample = j.value("force_sample", false);
    return config;
}

ordered_json element_set_to_json(const ElementSet& a) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : a.elements) arr.push_back(int_to_json(x));
    return arr;
}

ordered_json digital_set_to_json(const DigitalSet& a) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : a.elements()) arr.push_back(int_to_json(x));
    return arr;
}

ordered_json carry_report_to_json(const CarryReport& report) {
    ordered_json carries = ordered_json::array();
    for (const Int& c : report.carry_set) carries.push_back(int_to_json(c));
    return ordered_json{{"carry_set", std::move(carries)},
                        {"c1", int_to_json(report.c1)},
                        {"carry_count", int_to_json(report.carry_count)},
                        {"c2", rat_to_json(report.c2)}};
}

namespace {

ordered_json search_base_json(const SearchWitnesses& s) {
    ordered_json minimizers = ordered_json::array();
    for (const DigitalSet& a : s.minimizers) minimizers.push_back(digital_set_to_json(a));
    ordered_json witnesses = ordered_json::array();
    for (const DigitalSet& a : s.witnesses) witnesses.push_back(digital_set_to_json(a));
    return ordered_json{{"minimizer_total", s.minimizer_total},
                        {"minimizers", std::move(minimizers)},
                        {"witnesses", std::move(witnesses)},
                        {"candidates_examined", s.candidates_examined},
                        {"space_size", int_to_json(s.space_size)},
                        {"certified", s.certified},
                        {"truncated", s.truncated},
                        {"warnings", s.warnings}};
}

}  // namespace

ordered_json search_result_to_json(const MinC2Result& result) {
    ordered_json out{{"statistic", "c2"}, {"min", rat_to_json(result.min)}};
    out.update(search_base_json(result));
    return out;
}

ordered_json search_result_to_json(const MinC1Result& result) {
    ordered_json out{{"statistic", "c1"}, {"min", int_to_json(result.min)}};
    out.update(search_base_json(result));
    return out;
}

ordered_json verification_report_to_json(const VerificationReport& report) {
    return ordered_json{
        {"theorem_id", report.theorem_id},
        {"parameters", report.parameters},
        {"mode", report.mode},
        {"candidates_examined", report.candidates_examined},
        {"seed", report.seed},
        {"passed", report.passed()},
        {"violation_count", report.violation_count},
        {"violations", report.violations},
        {"equality_count", report.equality_count},
        {"equality_witnesses", report.equality_witnesses},
        {"min_observed",
         report.min_observed ? rat_to_json(*report.min_observed) : ordered_json(nullptr)},
        {"details", report.details},
        {"warnings", report.warnings}};
}

namespace {

std::vector<Int> elements_from_json(const ordered_json& arr) {
    std::vector<Int> out;
    for (const auto& x : arr) out.push_back(int_from_json(x));
    return out;
}

// Recomputes a stored witness through the exact layer. Pair and subset
// witnesses replay the layered sum; set witnesses replay the carry counts.
void revalidate_witness(const VerificationReport& r, const ordered_json& w) {
    if (w.contains("a") && w.contains("b")) {
        const Int q = int_from_json(r.parameters.at("q"));
        const Domain domain = Domain::modular(q);
        const ElementSet a = ElementSet::of(elements_from_json(w.at("a")), domain);
        const ElementSet b = ElementSet::of(elements_from_json(w.at("b")), domain);
        const Int t = int_from_json(w.at("t"));
        const Int sum = int_from_json(w.at("sum"));
        if (pollard_sum(a, b, t) != sum) invalid("stored layered sum does not reproduce");
        if (r.theorem_id == "thm22" || r.theorem_id == "thm23") {
            Int threshold;
            if (r.details.contains("t_low") && Int(r.details.at("t_low").get<std::int64_t>()) == t)
                threshold = int_from_json(r.details.at("threshold_low"));
            else if (r.details.contains("t_high") &&
                     Int(r.details.at("t_high").get<std::int64_t>()) == t)
                threshold = int_from_json(r.details.at("threshold_high"));
            else
                invalid("witness layer count matches no recorded threshold");
            if (sum != threshold) invalid("equality witness does not meet its threshold");
        } else {
            const Int bound =
                t * std::min(q, Int(a.size()) + Int(b.size()) - t);
            if (sum != bound) invalid("equality witness does not meet the layered bound");
        }
        return;
    }
    if (w.contains("set")) {
        const bool modular = r.parameters.contains("q");
        const Int m = int_from_json(r.parameters.at("m"));
        const Domain domain = modular ? Domain::modular(int_from_json(r.parameters.at("q")))
                                      : Domain::integers();
        const DigitalSet a = DigitalSet::validate(elements_from_json(w.at("set")), domain, m);
        const CarryReport report = carry_report(a);
        if (w.contains("carry_count") &&
            report.carry_count != int_from_json(w.at("carry_count")))
            invalid("stored carry count does not reproduce");
        if (w.contains("distinct_carries") &&
            report.c1 != int_from_json(w.at("distinct_carries")))
            invalid("stored distinct-carry count does not reproduce");
        return;
    }
    // Structural entries (plain reasons) carry no recomputable payload.
}

}  // namespace

VerificationReport verification_report_from_json(const ordered_json& body) {
    VerificationReport r;
    r.theorem_id = body.at("theorem_id").get<std::string>();
    bool known = false;
    for (const std::string& id : theorem_ids()) known = known || id == r.theorem_id;
    if (!known) throw Error(Errc::UnknownTheorem, "unknown theorem id '" + r.theorem_id + "'");
    r.parameters = body.at("parameters");
    r.mode = body.at("mode").get<std::string>();
    r.candidates_examined = body.at("candidates_examined").get<std::uint64_t>();
    r.seed = body.at("seed").get<std::uint64_t>();
    r.violation_count = body.at("violation_count").get<std::uint64_t>();
    r.violations = body.at("violations");
    r.equality_count = body.at("equality_count").get<std::uint64_t>();
    r.equality_witnesses = body.at("equality_witnesses");
    if (!body.at("min_observed").is_null()) r.min_observed = rat_from_json(body.at("min_observed"));
    r.details = body.at("details");
    r.warnings = body.at("warnings").get<std::vector<std::string>>();
    if (body.at("passed").get<bool>() != r.passed())
        invalid("pass flag contradicts the violation count");

    for (const auto& w : r.equality_witnesses) revalidate_witness(r, w);
    for (const auto& v : r.violations)
        if (v.contains("set") && !v.contains("reason")) revalidate_witness(r, v);
    return r;
}

ordered_json make_report(const std::string& kind, const RunConfig& config, ordered_json result,
                         double elapsed_seconds) {
    return ordered_json{{"format_version", kReportFormatVersion},
                        {"kind", kind},
                        {"config", run_config_to_json(config)},
                        {"result", std::move(result)},
                        {"elapsed_seconds", elapsed_seconds}};
}

}  // namespace carrylab
