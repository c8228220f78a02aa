#include "msearch/trajectory.hpp"

#include <cmath>
#include <utility>

namespace msearch {

namespace {

constexpr double kRelTol = 1e-9;

bool close(double a, double b, double scale) {
    return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(scale)});
}

void validate(int p, const std::vector<MotionSegment>& segs) {
    if (p < 1) throw std::invalid_argument("trajectory: mode count must be >= 1");
    double t = 0, x = 0;
    int idx = 0;
    for (const auto& s : segs) {
        const std::string at = "segment " + std::to_string(idx);
        if (!(s.t_end > s.t_start))
            throw std::invalid_argument("trajectory: " + at + ": t_end must exceed t_start");
        if (!close(s.t_start, t, t))
            throw std::invalid_argument("trajectory: " + at + ": time gap");
        if (!close(s.x_start, x, x))
            throw std::invalid_argument("trajectory: " + at + ": position discontinuity");
        const double dist = std::abs(s.x_end - s.x_start);
        const double dt = s.t_end - s.t_start;
        // Audited traces may move slower than the speed limit; sweeps may not
        // exceed 1/p' or they would cover modes faster than p' passes allow.
        const double limit = s.search.kind == SearchKind::all_modes ? dt / sweep_passes(p) : dt;
        if (dist > limit * (1 + kRelTol))
            throw std::invalid_argument("trajectory: " + at + ": speed limit exceeded");
        if (s.search.kind == SearchKind::mode && (s.search.mode < 0 || s.search.mode >= p))
            throw std::invalid_argument("trajectory: " + at + ": search mode out of range");
        t = s.t_end;
        x = s.x_end;
        ++idx;
    }
    if (!segs.empty() && segs.front().t_start != 0)
        throw std::invalid_argument("trajectory: first segment must start at t = 0");
    if (!segs.empty() && segs.front().x_start != 0)
        throw std::invalid_argument("trajectory: first segment must start at the origin");
}

}  // namespace

Trajectory::Trajectory(int p, std::vector<MotionSegment> segments)
    : p_(p), segments_(std::move(segments)) {
    validate(p_, segments_);
}

TrajectoryBuilder::TrajectoryBuilder(int p) : p_(p) {
    if (p < 1) throw std::invalid_argument("trajectory builder: mode count must be >= 1");
}

void TrajectoryBuilder::append(double x, Search s, double speed) {
    const double dist = std::abs(x - x_);
    if (dist == 0) return;
    MotionSegment seg;
    seg.t_start = t_;
    seg.t_end = t_ + dist / speed;
    seg.x_start = x_;
    seg.x_end = x;
    seg.search = s;
    segments_.push_back(seg);
    t_ = seg.t_end;
    x_ = x;
}

void TrajectoryBuilder::transit_to(double x) { append(x, Search::none_(), 1.0); }

void TrajectoryBuilder::pass_to(double x, int mode) {
    if (mode < 0 || mode >= p_) throw std::invalid_argument("pass_to: mode out of range");
    append(x, Search::single(mode), 1.0);
}

void TrajectoryBuilder::sweep_to(double x) {
    append(x, Search::all(), 1.0 / sweep_passes(p_));
}

Trajectory TrajectoryBuilder::finish() { return Trajectory(p_, std::move(segments_)); }

}  // namespace msearch
