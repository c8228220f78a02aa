#include "msearch/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace msearch {

namespace {

double round_time_factor(const StrategyParams& params) {
    const double a2 = params.a * params.a;
    if (params.odd()) return (params.p + 1) * (a2 - 1) + 2;
    return 2 + (params.p + 2 * params.r) * (a2 - 1);
}

double split_point(const StrategyParams& params, int round) {
    const double a2 = params.a * params.a;
    return std::pow(params.a, round - 1) * (params.r * (a2 - 1) + 1);
}

}  // namespace

std::vector<double> worst_case_targets(const StrategyParams& params, int rounds, double eta) {
    if (rounds < 2) throw std::invalid_argument("worst_case_targets: rounds must be >= 2");
    if (eta <= 0) throw std::invalid_argument("worst_case_targets: eta must be > 0");
    std::vector<double> targets;
    for (int i = 0; i < rounds; ++i) {
        const double dir = i % 2 == 0 ? 1.0 : -1.0;
        const double boundary = std::max(std::pow(params.a, i - 1), 1.0);
        targets.push_back(dir * boundary * (1 + eta));
        if (!params.odd()) {
            // Phase-2 split point; below 1 it is explored for free, and with
            // an empty phase 2 (r = 1) nothing lies just past it this round.
            const double m = split_point(params, i);
            if (m >= 1 && m * (1 + eta) < std::pow(params.a, i + 1))
                targets.push_back(dir * m * (1 + eta));
        }
    }
    return targets;
}

std::vector<double> grid_targets(const StrategyParams& params, int rounds, int per_round) {
    if (rounds < 1 || per_round < 1)
        throw std::invalid_argument("grid_targets: rounds and per_round must be >= 1");
    std::vector<double> targets;
    targets.reserve(static_cast<std::size_t>(rounds) * per_round);
    for (int i = 0; i < rounds; ++i) {
        const double dir = i % 2 == 0 ? 1.0 : -1.0;
        const double lo = std::max(std::pow(params.a, i - 1), 1.0);
        const double hi = std::pow(params.a, i + 1);
        if (hi <= lo) continue;
        for (int j = 0; j < per_round; ++j) {
            const double x = lo + (j + 0.5) * (hi - lo) / per_round;
            targets.push_back(dir * x);
        }
    }
    return targets;
}

CrReport empirical_cr(const Trajectory& traj, const StrategyParams& params,
                      std::vector<double> targets) {
    std::sort(targets.begin(), targets.end());
    CrReport report;
    report.params = params;
    report.analytic_limit = analytic_cr_limit(params);
    report.targets.reserve(targets.size());
    for (const double x : targets) {
        TargetRatio tr;
        tr.x = x;
        if (std::abs(x) < 1) {
            tr.T = 0;
            tr.cr = 0;
        } else {
            const auto T = exploration_time(traj, x);
            if (!T) throw insufficient_horizon(x);
            tr.T = *T;
            tr.cr = *T / std::abs(x);
        }
        report.empirical_sup = std::max(report.empirical_sup, tr.cr);
        report.targets.push_back(tr);
    }
    return report;
}

double analytic_cr_limit(const StrategyParams& params) {
    const double a = params.a;
    double limit;
    if (params.odd()) {
        limit = 1 + round_time_factor(params) / (a - 1);
    } else {
        const double phase1 = 1 + 2 / (a - 1) + (params.p + 2 * params.r) * (a + 1);
        const double phase2 = (a / (a - 1)) * params.p * (a * a - 1) /
                                  (params.r * (a * a - 1) + 1) +
                              2 * a / (a - 1) - 1;
        limit = std::max(phase1, phase2);
    }
    return params.practical() ? limit + params.eps : limit;
}

std::vector<double> cr_convergence_series(const StrategyParams& params, int rounds) {
    if (rounds < 1) throw std::invalid_argument("cr_convergence_series: rounds must be >= 1");
    const double k = round_time_factor(params);
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(rounds));
    for (int i = 1; i <= rounds; ++i)
        series.push_back(1 + (1 - std::pow(params.a, -i)) * k / (params.a - 1));
    return series;
}

RoundRatioSeries replay_round_ratios(const Trajectory& traj, const StrategyParams& params,
                                     int rounds) {
    RoundRatioSeries out;
    for (int i = 1; i < rounds; ++i) {
        const int dir = i % 2 == 0 ? 1 : -1;
        const double boundary = std::pow(params.a, i - 1);
        const auto t = exploration_time_beyond(traj, dir * boundary, dir);
        if (!t) break;
        out.phase1.push_back({i, boundary, *t / boundary});
    }
    if (!params.odd() && params.r < 1) {
        for (int i = 0; i < rounds; ++i) {
            const int dir = i % 2 == 0 ? 1 : -1;
            const double m = split_point(params, i);
            if (m < 1) continue;
            const auto t = exploration_time_beyond(traj, dir * m, dir);
            if (!t) break;
            out.phase2.push_back({i, m, *t / m});
        }
    }
    return out;
}

WitnessSequences extract_witness(const Trajectory& traj, double horizon_time) {
    if (horizon_time < 0 || horizon_time > traj.duration())
        throw std::invalid_argument("extract_witness: horizon outside trajectory span");
    const auto cross = first_unit_crossing(traj);
    if (!cross || cross->first > horizon_time)
        throw invalid_trace("extract_witness: trajectory never reaches |x| = 1");
    const auto [t0, d0] = *cross;

    WitnessSequences w;
    w.x = {1.0, -1.0};
    w.t = {t0};
    double t_cur = t0;
    for (int i = 0;; ++i) {
        // Period i grows side d0*(-1)^i; it ends when the opposite side grows.
        const int dir_next = d0 * ((i + 1) % 2 == 0 ? 1 : -1);
        const int dir_cur = d0 * (i % 2 == 0 ? 1 : -1);
        const IslandSnapshot at_start = coverage_islands(traj, t_cur);
        const double opp_end = dir_next > 0 ? at_start.pos_end : at_start.neg_end;
        const auto t_next_opt = exploration_time_beyond(traj, opp_end, dir_next);
        if (!t_next_opt || *t_next_opt > horizon_time) break;
        const double t_next = *t_next_opt;
        if (!(t_next > t_cur))
            throw invalid_trace("extract_witness: island growth not time-ordered");
        if (t_next - t_cur < 2 - 1e-9)
            throw invalid_trace("extract_witness: period shorter than the forced (-1,1) traverse");

        const IslandSnapshot at_end = coverage_islands(traj, t_next);
        const double end_cur = dir_cur > 0 ? at_end.pos_end : at_end.neg_end;
        // The endpoint must have settled before the opposite side starts
        // growing; otherwise side attribution is ambiguous.
        const IslandSnapshot probe = coverage_islands(traj, std::max(t_cur, t_next - 1));
        const double probe_cur = dir_cur > 0 ? probe.pos_end : probe.neg_end;
        if (std::abs(end_cur - probe_cur) > 1e-9 * std::max(1.0, std::abs(end_cur)))
            throw invalid_trace("extract_witness: ambiguous growth-side attribution");

        const double xi = d0 * end_cur;  // mirrored so period 0 is positive
        if (!(std::abs(xi) > std::abs(w.x[static_cast<std::size_t>(i)])))
            throw invalid_trace("extract_witness: island endpoint did not grow over x_{i-2}");
        w.x.push_back(xi);
        w.t.push_back(t_next);
        w.horizon = i + 1;
        t_cur = t_next;
    }
    return w;
}

namespace {

void validate_witness(const WitnessSequences& w, const char* who) {
    if (w.horizon < 0 || w.x.size() != static_cast<std::size_t>(w.horizon) + 2 ||
        w.t.size() != static_cast<std::size_t>(w.horizon) + 1)
        throw std::invalid_argument(std::string(who) + ": inconsistent witness lengths");
    if (w.x[0] != 1.0 || w.x[1] != -1.0)
        throw std::invalid_argument(std::string(who) + ": witness must be seeded with 1, -1");
    for (int i = 0; i < w.horizon; ++i) {
        const double xi = w.x_at(i);
        if ((i % 2 == 0) != (xi > 0))
            throw std::invalid_argument(std::string(who) + ": witness signs must alternate");
    }
}

}  // namespace

AuditReport audit_odd_lower_bound(const WitnessSequences& w, int p) {
    if (p < 1 || p % 2 != 1)
        throw std::invalid_argument("audit_odd_lower_bound: p must be odd");
    validate_witness(w, "audit_odd_lower_bound");
    AuditReport report;
    double retread = 0;  // running sum of |x_j| + |x_{j-1}| over periods 0..i+1
    for (int j = 0; j <= std::min(1, w.horizon - 1); ++j)
        retread += std::abs(w.x_at(j)) + std::abs(w.x_at(j - 1));
    for (int i = 0; i + 2 <= w.horizon; ++i) {
        // Fully exploring out to x_{i+1} and x_i costs p times the island
        // length beyond the free (-1,1); on top of that every period retreads
        // the previous island plus the freshly explored stretch once.
        const double productive =
            p * (std::abs(w.x_at(i + 1)) + std::abs(w.x_at(i)) - 2);
        const double bound = productive + retread;
        const double t = w.t_at(i + 2);
        const double margin = t - bound;
        report.margins.push_back({i, margin});
        if (margin < -1e-9 * std::max(1.0, std::abs(t)) && report.first_violation < 0) {
            report.pass = false;
            report.first_violation = i;
        }
        if (i + 3 <= w.horizon)
            retread += std::abs(w.x_at(i + 2)) + std::abs(w.x_at(i + 1));
    }
    return report;
}

AuditReport audit_min_growth(const WitnessSequences& w, double claimed_cr) {
    if (!(claimed_cr > 2))
        throw std::invalid_argument("audit_min_growth: claimed ratio must exceed 2");
    validate_witness(w, "audit_min_growth");
    AuditReport report;
    const double base = claimed_cr / (claimed_cr - 2);
    double bound = 2 / claimed_cr;
    for (int i = 0; i < w.horizon; ++i) {
        const double margin = std::abs(w.x_at(i)) - bound;
        report.margins.push_back({i, margin});
        if (margin < -1e-12 * std::max(1.0, bound) && report.first_violation < 0) {
            report.pass = false;
            report.first_violation = i;
        }
        bound *= base;
    }
    return report;
}

std::optional<int> recurrence_collapse(double a_coef, double b_coef, double y0, double y1,
                                       int max_steps) {
    if (!(a_coef > 0) || !(b_coef > 0))
        throw std::invalid_argument("recurrence_collapse: coefficients must be positive");
    if (!(y0 > 0) || !(y1 > 0))
        throw std::invalid_argument("recurrence_collapse: seeds must be positive");
    if (max_steps < 2) throw std::invalid_argument("recurrence_collapse: max_steps must be >= 2");
    double prev = y0, cur = y1;
    for (int i = 2; i <= max_steps; ++i) {
        double next = a_coef * cur - b_coef * prev;
        if (next <= 0) return i;
        // The recurrence is homogeneous, so rescaling keeps it out of overflow.
        if (next > 1e100) {
            cur /= next;
            next = 1;
        }
        prev = cur;
        cur = next;
    }
    return std::nullopt;
}

}  // namespace msearch
