#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "msearch/analysis.hpp"
#include "msearch/strategies.hpp"
#include "msearch/trajectory.hpp"

namespace msearch {

// A record in a trace file could not be parsed or failed validation.
struct parse_error : std::runtime_error {
    parse_error(int record_, const std::string& what_)
        : std::runtime_error("record " + std::to_string(record_) + ": " + what_),
          record(record_) {}
    int record;
};

// Trace file header: the parameters that generated the trace. Rebuilding from
// them reproduces the segment records bit-identically under the same build.
struct TraceHeader {
    int p = 1;
    Variant variant = Variant::odd_optimal;
    double a = 0;
    std::optional<double> r;
    std::optional<double> eps;
    int rounds = 0;

    StrategyParams to_params() const;
    static TraceHeader from_params(const StrategyParams& params, int rounds);
};

struct TraceFile {
    TraceHeader header;
    Trajectory trajectory;
};

// JSON-lines trace format: one header object, then one object per segment in
// seq order with fields {seq, t0, t1, x0, x1, search}. Doubles are written in
// shortest round-trip form.
std::string trace_to_jsonl(const TraceHeader& header, const Trajectory& traj);
TraceFile trace_from_jsonl(const std::string& text);

void write_trace(const std::filesystem::path& path, const TraceHeader& header,
                 const Trajectory& traj);
TraceFile load_trace(const std::filesystem::path& path);

// Single-document JSON report of a CR evaluation.
std::string report_to_json(const CrReport& report);
void write_report(const std::filesystem::path& path, const CrReport& report);

// CSV of optimal ratios, one row per p, header "p,parity,cr", ratios rounded
// half away from zero to five decimals.
std::string table_to_csv(int p_max);

// Parameter summary {p, cr, a, r?, bracket?} with full double precision.
std::string params_to_json(int p, std::optional<double> eps);

std::string audit_to_json(const WitnessSequences& w, const AuditReport& odd_bound,
                          const AuditReport& min_growth, bool odd_bound_applies,
                          double claimed_cr);

}  // namespace msearch
