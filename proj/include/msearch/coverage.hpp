#pragma once

#include <optional>
#include <vector>

#include "msearch/trajectory.hpp"

namespace msearch {

struct Interval {
    double lo = 0;
    double hi = 0;
    bool operator==(const Interval&) const = default;
};

// Fully-explored regions of the line at a fixed time. `islands` lists every
// maximal interval explored in all p modes (plus the definitional (-1, 1));
// the one containing the origin is the central island with signed endpoints
// neg_end <= -1 and pos_end >= 1.
struct IslandSnapshot {
    double t = 0;
    double neg_end = -1;
    double pos_end = 1;
    std::vector<Interval> islands;
};

// Searcher position at time t by linear interpolation.
// Throws std::out_of_range outside [0, duration].
double position_at(const Trajectory& traj, double t);

// Earliest time a segment searching mode k (or all modes) passes through x,
// or nullopt if x is never covered in that mode within the horizon.
std::optional<double> mode_cover_time(const Trajectory& traj, double x, int k);

// Time by which x is explored in every mode: 0 for |x| < 1 by convention,
// otherwise the max of the per-mode cover times; nullopt if any mode never
// reaches x.
std::optional<double> exploration_time(const Trajectory& traj, double x);

// Limit of exploration_time(x + dir*eps) as eps -> 0+. This is the time at
// which the explored region first extends past x on the given side: crossing
// times are exact, so island-growth instants are recovered without sampling.
// dir must be +1 or -1. nullopt if the region never grows past x.
std::optional<double> exploration_time_beyond(const Trajectory& traj, double x, int dir);

// All maximal fully-explored intervals at time t.
// Throws std::out_of_range outside [0, duration].
IslandSnapshot coverage_islands(const Trajectory& traj, double t);

// First time |position| reaches 1, and the sign of the side where it happens.
std::optional<std::pair<double, int>> first_unit_crossing(const Trajectory& traj);

}  // namespace msearch
