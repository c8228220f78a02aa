#include "msearch/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "msearch/solver.hpp"

namespace msearch {

using nlohmann::json;

StrategyParams TraceHeader::to_params() const {
    StrategyParams params;
    params.p = p;
    params.variant = variant;
    params.a = a;
    params.r = r.value_or(0.0);
    params.eps = eps.value_or(0.0);
    const bool odd = variant == Variant::odd_optimal || variant == Variant::practical_odd;
    params.c = odd ? odd_optimal(p).cr : even_optimal(p).c_star;
    return params;
}

TraceHeader TraceHeader::from_params(const StrategyParams& params, int rounds) {
    TraceHeader h;
    h.p = params.p;
    h.variant = params.variant;
    h.a = params.a;
    if (!params.odd()) h.r = params.r;
    if (params.practical()) h.eps = params.eps;
    h.rounds = rounds;
    return h;
}

namespace {

json search_to_json(const Search& s) {
    switch (s.kind) {
        case SearchKind::mode: return s.mode;
        case SearchKind::all_modes: return "all";
        case SearchKind::none: return "none";
    }
    throw std::logic_error("search_to_json: unknown kind");
}

Search search_from_json(const json& j) {
    if (j.is_number_integer()) return Search::single(j.get<int>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "all") return Search::all();
        if (s == "none") return Search::none_();
    }
    throw std::invalid_argument("search annotation must be a mode index, \"all\" or \"none\"");
}

json header_to_json(const TraceHeader& h) {
    json j{{"p", h.p}, {"variant", to_string(h.variant)}, {"a", h.a}, {"rounds", h.rounds}};
    if (h.r) j["r"] = *h.r;
    if (h.eps) j["eps"] = *h.eps;
    return j;
}

TraceHeader header_from_json(const json& j) {
    TraceHeader h;
    h.p = j.at("p").get<int>();
    h.variant = variant_from_string(j.at("variant").get<std::string>());
    h.a = j.at("a").get<double>();
    h.rounds = j.at("rounds").get<int>();
    if (j.contains("r")) h.r = j.at("r").get<double>();
    if (j.contains("eps")) h.eps = j.at("eps").get<double>();
    return h;
}

}  // namespace

std::string trace_to_jsonl(const TraceHeader& header, const Trajectory& traj) {
    std::ostringstream out;
    out << header_to_json(header).dump() << '\n';
    int seq = 0;
    for (const auto& s : traj.segments()) {
        const json j{{"seq", seq++},   {"t0", s.t_start}, {"t1", s.t_end},
                     {"x0", s.x_start}, {"x1", s.x_end},  {"search", search_to_json(s.search)}};
        out << j.dump() << '\n';
    }
    return out.str();
}

TraceFile trace_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int record = 0;
    TraceHeader header;
    bool have_header = false;
    std::vector<MotionSegment> segments;
    while (std::getline(in, line)) {
        if (line.empty()) {
            ++record;
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw parse_error(record, e.what());
        }
        try {
            if (!have_header) {
                header = header_from_json(j);
                have_header = true;
            } else {
                MotionSegment s;
                const int seq = j.at("seq").get<int>();
                if (seq != static_cast<int>(segments.size()))
                    throw std::invalid_argument("segment out of sequence");
                s.t_start = j.at("t0").get<double>();
                s.t_end = j.at("t1").get<double>();
                s.x_start = j.at("x0").get<double>();
                s.x_end = j.at("x1").get<double>();
                s.search = search_from_json(j.at("search"));
                segments.push_back(s);
            }
        } catch (const json::exception& e) {
            throw parse_error(record, e.what());
        } catch (const std::invalid_argument& e) {
            throw parse_error(record, e.what());
        }
        ++record;
    }
    if (!have_header) throw parse_error(0, "missing trace header");
    try {
        return {header, Trajectory(header.p, std::move(segments))};
    } catch (const std::invalid_argument& e) {
        throw parse_error(record, e.what());
    }
}

void write_trace(const std::filesystem::path& path, const TraceHeader& header,
                 const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << trace_to_jsonl(header, traj);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

TraceFile load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return trace_from_jsonl(buf.str());
}

std::string report_to_json(const CrReport& report) {
    json targets = json::array();
    for (const auto& t : report.targets)
        targets.push_back({{"x", t.x}, {"T", t.T}, {"cr", t.cr}});
    const json j{{"p", report.params.p},
                 {"variant", to_string(report.params.variant)},
                 {"cr_analytic", report.analytic_limit},
                 {"cr_empirical", report.empirical_sup},
                 {"rounds", report.rounds_used},
                 {"targets", targets}};
    return j.dump(2) + "\n";
}

void write_report(const std::filesystem::path& path, const CrReport& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << report_to_json(report);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string table_to_csv(int p_max) {
    std::ostringstream out;
    out << "p,parity,cr\n";
    char buf[64];
    for (const auto& row : cr_table(p_max)) {
        std::snprintf(buf, sizeof buf, "%d,%s,%.5f\n", row.p, row.odd ? "odd" : "even", row.cr);
        out << buf;
    }
    return out.str();
}

std::string params_to_json(int p, std::optional<double> eps) {
    json j;
    j["p"] = p;
    if (p % 2 == 1) {
        const OptimalOdd opt = odd_optimal(p);
        j["cr"] = opt.cr;
        j["a"] = opt.a;
    } else {
        const OptimalEven opt = even_optimal(p);
        j["cr"] = opt.c_star;
        j["a"] = opt.a;
        j["r"] = opt.r;
        j["bracket"] = {opt.bracket.first, opt.bracket.second};
    }
    if (eps) {
        j["eps"] = *eps;
        j["cr_practical"] = j["cr"].get<double>() + *eps;
    }
    return j.dump(2) + "\n";
}

namespace {

json audit_report_to_json(const AuditReport& rep) {
    json margins = json::array();
    for (const auto& m : rep.margins) margins.push_back({{"index", m.index}, {"margin", m.margin}});
    return json{{"pass", rep.pass}, {"first_violation", rep.first_violation}, {"margins", margins}};
}

}  // namespace

std::string audit_to_json(const WitnessSequences& w, const AuditReport& odd_bound,
                          const AuditReport& min_growth, bool odd_bound_applies,
                          double claimed_cr) {
    json j;
    j["claimed_cr"] = claimed_cr;
    j["periods"] = w.horizon;
    j["x"] = w.x;
    j["t"] = w.t;
    if (odd_bound_applies) j["odd_lower_bound"] = audit_report_to_json(odd_bound);
    j["min_growth"] = audit_report_to_json(min_growth);
    j["pass"] = (!odd_bound_applies || odd_bound.pass) && min_growth.pass;
    return j.dump(2) + "\n";
}

}  // namespace msearch
