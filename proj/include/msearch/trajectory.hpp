#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msearch {

// Raised when a trace cannot be interpreted as a valid searcher motion
// (discontinuities, speed violations, or ambiguous structure during analysis).
struct invalid_trace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SearchKind : std::uint8_t {
    mode,       // searching in a single mode while moving at speed 1
    all_modes,  // idealized sweep covering every mode at reduced speed
    none        // transit, no coverage
};

// Which detection channels a segment contributes coverage to.
struct Search {
    SearchKind kind = SearchKind::none;
    int mode = -1;  // valid only when kind == SearchKind::mode

    static Search single(int k) { return {SearchKind::mode, k}; }
    static Search all() { return {SearchKind::all_modes, -1}; }
    static Search none_() { return {SearchKind::none, -1}; }

    bool covers(int k) const {
        return kind == SearchKind::all_modes || (kind == SearchKind::mode && mode == k);
    }
    bool operator==(const Search&) const = default;
};

// One piece of straight-line motion with a coverage annotation.
// Single-mode and transit segments move at speed 1; all-mode sweeps move at
// speed 1/p for odd p and 1/(p+1) for even p (the number of passes the sweep
// stands in for).
struct MotionSegment {
    double t_start = 0;
    double t_end = 0;
    double x_start = 0;
    double x_end = 0;
    Search search;

    double duration() const { return t_end - t_start; }
    double lo() const { return x_start < x_end ? x_start : x_end; }
    double hi() const { return x_start < x_end ? x_end : x_start; }
    bool operator==(const MotionSegment&) const = default;
};

// Effective pass count of an all-mode sweep: p for odd p, p+1 for even p.
inline int sweep_passes(int p) { return (p % 2 == 1) ? p : p + 1; }

// Immutable time-stamped piecewise-linear motion starting at the origin at
// time 0. Queries are read-only and safe to run concurrently.
class Trajectory {
public:
    Trajectory(int p, std::vector<MotionSegment> segments);

    int modes() const { return p_; }
    double duration() const { return segments_.empty() ? 0.0 : segments_.back().t_end; }
    std::span<const MotionSegment> segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }

private:
    int p_;
    std::vector<MotionSegment> segments_;
};

// Incrementally assembles a Trajectory. Keeps time and position contiguous by
// construction; target coordinates are stored exactly as given so coverage
// boundaries shared between calls compare equal.
class TrajectoryBuilder {
public:
    explicit TrajectoryBuilder(int p);

    int modes() const { return p_; }
    double time() const { return t_; }
    double position() const { return x_; }

    // Transit at speed 1 with no coverage. No-op when already at x.
    void transit_to(double x);
    // Single-mode pass at speed 1.
    void pass_to(double x, int mode);
    // All-mode sweep at speed 1/sweep_passes(p).
    void sweep_to(double x);

    Trajectory finish();

private:
    void append(double x, Search s, double speed);

    int p_;
    double t_ = 0;
    double x_ = 0;
    std::vector<MotionSegment> segments_;
};

}  // namespace msearch
