#pragma once

#include <string>

#include "carrylab/carry.hpp"
#include "carrylab/extremal.hpp"
#include "json.hpp"

// JSON serialization of results and the self-describing report envelope.
// Number policy: integers render as JSON numbers when they fit in int64 and
// as decimal strings otherwise; rationals always render as {"num", "den"}
// objects under the same rule, already in lowest terms. Reports embed the
// full run configuration and a format-version string, and the elapsed-time
// field is the envelope's final key so that reports from identical
// configurations are byte-identical up to that one field.

namespace carrylab {

inline constexpr const char* kReportFormatVersion = "carrylab-report/1";

nlohmann::ordered_json int_to_json(const Int& v);
Int int_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json rat_to_json(const Rat& v);
Rat rat_from_json(const nlohmann::ordered_json& j);

// "num/den (≈ decimal)" for proper fractions, plain digits for integers. The
// decimal is marked approximate; the fraction is the authoritative value.
std::string rat_human(const Rat& v);

struct RunConfig {
    std::string command;  // analyze | search | verify | bounds
    nlohmann::ordered_json arguments = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;
    int workers = 1;
    std::string format = "human";  // human | json | csv
    std::string checkpoint_path;
    std::uint64_t budget = 100'000'000;
    bool force_sample = false;
};

nlohmann::ordered_json run_config_to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json element_set_to_json(const ElementSet& a);
nlohmann::ordered_json digital_set_to_json(const DigitalSet& a);

nlohmann::ordered_json carry_report_to_json(const CarryReport& report);

nlohmann::ordered_json search_result_to_json(const MinC2Result& result);
nlohmann::ordered_json search_result_to_json(const MinC1Result& result);

// Body serialization of a theorem sweep; elapsed time lives only in the
// envelope, so two runs of the same configuration serialize identically.
nlohmann::ordered_json verification_report_to_json(const VerificationReport& report);

// Parses a serialized verification body and re-validates it: every stored
// equality witness and violation is recomputed through the exact layer and
// must reproduce its recorded value. Tampered or stale reports throw
// Errc::BadArgument.
VerificationReport verification_report_from_json(const nlohmann::ordered_json& body);

nlohmann::ordered_json make_report(const std::string& kind, const RunConfig& config,
                                   nlohmann::ordered_json result, double elapsed_seconds);

}  // namespace carrylab
