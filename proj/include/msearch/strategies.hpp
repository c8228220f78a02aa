#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msearch/trajectory.hpp"

namespace msearch {

enum class Variant : std::uint8_t {
    odd_optimal,
    even_optimal,
    practical_odd,
    practical_even,
};

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// Parameters of a round strategy. Odd variants use only a; even variants add
// the split coefficient r; practical variants add the approximation margin
// eps and the target ratio c passed into the compliant schedule.
struct StrategyParams {
    int p = 1;
    Variant variant = Variant::odd_optimal;
    double a = 0;
    double r = 0;
    double eps = 0;
    double c = 0;

    bool odd() const {
        return variant == Variant::odd_optimal || variant == Variant::practical_odd;
    }
    bool practical() const {
        return variant == Variant::practical_odd || variant == Variant::practical_even;
    }
};

// Optimal parameters for the given variant; eps is required for practical
// variants and ignored otherwise.
StrategyParams make_params(int p, Variant v, std::optional<double> eps = std::nullopt);

// Geometric cell partition used by one compliant thorough-search call.
struct CompliantPlan {
    double x_init = 0;
    double delta = 0;
    int p_prime = 0;
    double first_width = 0;
    double ratio = 0;            // width growth factor per cell
    std::vector<double> widths;  // sums to delta; last cell possibly short
    int n = 0;
};

// Explores the cell of length delta adjacent to x_init (away from the
// origin) in all p modes with alternating full-length passes. Odd p finishes
// on the far side, even p back at x_init. Elapsed time is p*delta.
void cell_search(TrajectoryBuilder& b, double x_init, double delta, int p);

// Cell-by-cell sweep with fixed cell size s (last cell clipped); even p
// transits across each finished cell. Elapsed p*delta (odd) or (p+1)*delta
// (even); ends on the far side for both parities.
void discrete_thorough_search(TrajectoryBuilder& b, double x_init, double delta, double s, int p);

// Limiting sweep: a single all-mode segment of length delta at speed 1/p'
// ending on the far side. Same elapsed time as the discrete form.
void thorough_search(TrajectoryBuilder& b, double x_init, double delta, int p);

// Geometric width schedule that keeps every covered point within c + eps of
// its distance-proportional budget, assuming the call starts no later than
// c*|x_init|.
CompliantPlan compliant_plan(double x_init, double delta, int p, double c, double eps);

// Executes the plan: cell searches over the scheduled widths (plus even-p
// transits). Same elapsed time and final position as thorough_search.
void compliant_thorough_search(TrajectoryBuilder& b, double x_init, double delta, int p, double c,
                               double eps);

// Round strategy for odd p: per round i, transit to (-1)^i a^(i-1), thorough
// search over a^(i+1) - a^(i-1), return to the origin.
Trajectory odd_search(int p, double a, int round_limit);

// Round strategy for even p: per round, thorough search of the first r
// fraction of the new interval, then the remainder as a single cell, then
// return.
Trajectory even_search(int p, double a, double r, int round_limit);

// Optimal-parameter strategy with every thorough search replaced by its
// compliant counterpart (finite direction changes), costing at most eps
// extra competitive ratio.
Trajectory practical_search(int p, double eps, int round_limit);

Trajectory build_strategy(const StrategyParams& params, int round_limit);

// Cell-search calls the strategy makes in the given round (constant across
// rounds for a fixed variant).
int cells_per_round(const StrategyParams& params);

}  // namespace msearch
