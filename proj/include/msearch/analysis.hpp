#pragma once

#include <optional>
#include <vector>

#include "msearch/coverage.hpp"
#include "msearch/strategies.hpp"

namespace msearch {

// A target asked of empirical_cr that is not explored within the trajectory
// horizon.
struct insufficient_horizon : std::runtime_error {
    explicit insufficient_horizon(double target_)
        : std::runtime_error("target " + std::to_string(target_) +
                             " not explored within the trajectory horizon"),
          target(target_) {}
    double target;
};

struct TargetRatio {
    double x = 0;
    double T = 0;
    double cr = 0;
};

struct CrReport {
    StrategyParams params;
    std::vector<TargetRatio> targets;  // sorted by coordinate
    double empirical_sup = 0;
    double analytic_limit = 0;
    int rounds_used = 0;
};

// The per-period island-growth record of a trajectory: alternating furthest
// endpoints x_i (seeded with x_{-2} = 1, x_{-1} = -1) and the period boundary
// times t_i. Only complete periods are kept.
struct WitnessSequences {
    std::vector<double> x;  // x[i + 2] holds x_i, starting at i = -2
    std::vector<double> t;  // t[i] holds t_i
    int horizon = 0;        // complete periods extracted

    double x_at(int i) const { return x.at(static_cast<std::size_t>(i + 2)); }
    double t_at(int i) const { return t.at(static_cast<std::size_t>(i)); }
};

struct IndexMargin {
    int index = 0;
    double margin = 0;  // slack of the checked inequality; negative = violated
};

struct AuditReport {
    bool pass = true;
    int first_violation = -1;
    std::vector<IndexMargin> margins;
};

struct RoundRatio {
    int round = 0;
    double boundary = 0;  // coordinate whose right-limit ratio is reported
    double ratio = 0;
};

struct RoundRatioSeries {
    std::vector<RoundRatio> phase1;  // interval-start boundaries
    std::vector<RoundRatio> phase2;  // even variants: the phase-2 split points
};

// Targets realizing each round's worst ratio in the limit: just past the
// previous boundary in the round's direction, plus the phase-2 split point
// for even variants. eta is the relative offset.
std::vector<double> worst_case_targets(const StrategyParams& params, int rounds,
                                       double eta = 1e-9);

// Uniform per-round grid over the freshly explored intervals; a safety net
// around the critical-target family.
std::vector<double> grid_targets(const StrategyParams& params, int rounds, int per_round);

// Replays exploration times for the given targets and reports per-target
// ratios plus their supremum. Throws insufficient_horizon naming the first
// target the trajectory never explores.
CrReport empirical_cr(const Trajectory& traj, const StrategyParams& params,
                      std::vector<double> targets);

// Limiting worst-case ratio of the strategy: the closed form for odd
// variants, the max of the phase-1/phase-2 limits for even ones, plus eps
// for practical variants.
double analytic_cr_limit(const StrategyParams& params);

// Worst ratio attained in each round (entry 0 is round 1); increases towards
// analytic_cr_limit.
std::vector<double> cr_convergence_series(const StrategyParams& params, int rounds);

// Exact per-round worst ratios recovered from the trajectory itself via
// right-limit exploration times at the round boundaries.
RoundRatioSeries replay_round_ratios(const Trajectory& traj, const StrategyParams& params,
                                     int rounds);

// Splits the trajectory into island-growth periods and returns the witness
// sequences. Rejects traces that never reach |x| = 1, violate the forced
// (-1, 1) traverse between periods, or leave the growth side ambiguous.
WitnessSequences extract_witness(const Trajectory& traj, double horizon_time);

// Necessary condition on odd-p witnesses: each period-boundary time must
// cover the productive exploration time plus every period's retreading.
AuditReport audit_odd_lower_bound(const WitnessSequences& w, int p);

// Necessary condition on any witness claiming ratio c: island endpoints must
// grow at least geometrically, |x_i| >= (2/c) (c/(c-2))^i.
AuditReport audit_min_growth(const WitnessSequences& w, double claimed_cr);

// Iterates y_{i+2} = a y_{i+1} - b y_i from positive seeds and returns the
// first index where the sequence leaves the positive range, or nullopt if it
// survives max_steps. With a^2 - 4b < 0 every positive seed pair collapses.
std::optional<int> recurrence_collapse(double a_coef, double b_coef, double y0, double y1,
                                       int max_steps);

}  // namespace msearch
