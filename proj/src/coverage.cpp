#include "msearch/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace msearch {

namespace {

// Time at which a segment's position equals x. Caller guarantees x lies in
// the segment's spatial extent.
double crossing_time(const MotionSegment& s, double x) {
    const double dx = s.x_end - s.x_start;
    if (dx == 0) return s.t_start;
    const double lambda = (x - s.x_start) / dx;
    return s.t_start + lambda * (s.t_end - s.t_start);
}

// Spatial extent of a segment truncated at time t (t >= t_start).
Interval extent_until(const MotionSegment& s, double t) {
    double xt;
    if (t >= s.t_end) {
        xt = s.x_end;
    } else {
        const double lambda = (t - s.t_start) / (s.t_end - s.t_start);
        xt = s.x_start + lambda * (s.x_end - s.x_start);
    }
    return {std::min(s.x_start, xt), std::max(s.x_start, xt)};
}

// Union of closed intervals. Endpoints produced by the strategy builders
// repeat exactly, but accumulated cell boundaries can drift by an ulp, so
// merging tolerates a tiny relative gap.
std::vector<Interval> merge_union(std::vector<Interval> v) {
    if (v.empty()) return v;
    std::sort(v.begin(), v.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.push_back(v.front());
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double gap_tol = 1e-12 * std::max({1.0, std::abs(v[i].lo), std::abs(out.back().hi)});
        if (v[i].lo <= out.back().hi + gap_tol) {
            out.back().hi = std::max(out.back().hi, v[i].hi);
        } else {
            out.push_back(v[i]);
        }
    }
    return out;
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double lo = std::max(a[i].lo, b[j].lo);
        const double hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (a[i].hi < b[j].hi) ++i;
        else ++j;
    }
    return out;
}

}  // namespace

double position_at(const Trajectory& traj, double t) {
    if (t < 0 || t > traj.duration())
        throw std::out_of_range("position_at: time outside trajectory span");
    if (traj.empty()) return 0.0;
    const auto segs = traj.segments();
    auto it = std::upper_bound(segs.begin(), segs.end(), t,
                               [](double v, const MotionSegment& s) { return v < s.t_end; });
    if (it == segs.end()) return segs.back().x_end;
    const double lambda = (t - it->t_start) / (it->t_end - it->t_start);
    return it->x_start + lambda * (it->x_end - it->x_start);
}

std::optional<double> mode_cover_time(const Trajectory& traj, double x, int k) {
    if (k < 0 || k >= traj.modes())
        throw std::invalid_argument("mode_cover_time: mode out of range");
    // Segments are time-ordered, so the first one containing x yields the
    // earliest crossing.
    for (const auto& s : traj.segments()) {
        if (!s.search.covers(k)) continue;
        if (x < s.lo() || x > s.hi()) continue;
        return crossing_time(s, x);
    }
    return std::nullopt;
}

std::optional<double> exploration_time(const Trajectory& traj, double x) {
    if (std::abs(x) < 1) return 0.0;
    const int p = traj.modes();
    int found = 0;
    std::vector<double> first(static_cast<std::size_t>(p), -1.0);
    for (const auto& s : traj.segments()) {
        if (s.search.kind == SearchKind::none) continue;
        if (x < s.lo() || x > s.hi()) continue;
        const double tc = crossing_time(s, x);
        if (s.search.kind == SearchKind::all_modes) {
            for (int k = 0; k < p; ++k) {
                if (first[k] < 0) {
                    first[k] = tc;
                    ++found;
                }
            }
        } else if (first[s.search.mode] < 0) {
            first[s.search.mode] = tc;
            ++found;
        }
        if (found == p) break;
    }
    if (found < p) return std::nullopt;
    return *std::max_element(first.begin(), first.end());
}

std::optional<double> exploration_time_beyond(const Trajectory& traj, double x, int dir) {
    if (dir != 1 && dir != -1)
        throw std::invalid_argument("exploration_time_beyond: dir must be +1 or -1");
    const int p = traj.modes();
    int found = 0;
    std::vector<double> first(static_cast<std::size_t>(p), -1.0);
    for (const auto& s : traj.segments()) {
        if (s.search.kind == SearchKind::none) continue;
        // Qualifies only if it covers a one-sided neighborhood beyond x; the
        // limiting crossing time is then the crossing time of x itself.
        const bool covers_beyond = dir > 0 ? (s.lo() <= x && s.hi() > x)
                                           : (s.hi() >= x && s.lo() < x);
        if (!covers_beyond) continue;
        const double tc = crossing_time(s, x);
        if (s.search.kind == SearchKind::all_modes) {
            for (int k = 0; k < p; ++k) {
                if (first[k] < 0) {
                    first[k] = tc;
                    ++found;
                }
            }
        } else if (first[s.search.mode] < 0) {
            first[s.search.mode] = tc;
            ++found;
        }
        if (found == p) break;
    }
    if (found < p) return std::nullopt;
    return *std::max_element(first.begin(), first.end());
}

IslandSnapshot coverage_islands(const Trajectory& traj, double t) {
    if (t < 0 || t > traj.duration())
        throw std::out_of_range("coverage_islands: time outside trajectory span");
    const int p = traj.modes();
    std::vector<std::vector<Interval>> per_mode(static_cast<std::size_t>(p));
    for (const auto& s : traj.segments()) {
        if (s.t_start > t) break;
        if (s.search.kind == SearchKind::none) continue;
        const Interval ext = extent_until(s, t);
        if (s.search.kind == SearchKind::all_modes) {
            for (auto& m : per_mode) m.push_back(ext);
        } else {
            per_mode[s.search.mode].push_back(ext);
        }
    }
    std::vector<Interval> explored = merge_union(std::move(per_mode[0]));
    for (int k = 1; k < p; ++k)
        explored = intersect(explored, merge_union(std::move(per_mode[k])));
    explored.push_back({-1.0, 1.0});  // |x| < 1 explored by definition
    explored = merge_union(std::move(explored));

    IslandSnapshot snap;
    snap.t = t;
    snap.islands = std::move(explored);
    for (const auto& isl : snap.islands) {
        if (isl.lo <= 0 && 0 <= isl.hi) {
            snap.neg_end = isl.lo;
            snap.pos_end = isl.hi;
            break;
        }
    }
    return snap;
}

std::optional<std::pair<double, int>> first_unit_crossing(const Trajectory& traj) {
    for (const auto& s : traj.segments()) {
        const bool hits_pos = s.lo() <= 1.0 && s.hi() >= 1.0;
        const bool hits_neg = s.lo() <= -1.0 && s.hi() >= -1.0;
        if (!hits_pos && !hits_neg) continue;
        const double tp = hits_pos ? crossing_time(s, 1.0) : std::numeric_limits<double>::infinity();
        const double tn = hits_neg ? crossing_time(s, -1.0) : std::numeric_limits<double>::infinity();
        return tp <= tn ? std::make_pair(tp, 1) : std::make_pair(tn, -1);
    }
    return std::nullopt;
}

}  // namespace msearch
