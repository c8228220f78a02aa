#include "msearch/strategies.hpp"

#include <cmath>
#include <stdexcept>

#include "msearch/solver.hpp"

namespace msearch {

namespace {

double sign_of(double x) { return x < 0 ? -1.0 : 1.0; }

void require_at(const TrajectoryBuilder& b, double x_init, const char* who) {
    const double tol = 1e-9 * std::max(1.0, std::abs(x_init));
    if (std::abs(b.position() - x_init) > tol)
        throw std::invalid_argument(std::string(who) + ": searcher is not at x_init");
}

void require_modes(const TrajectoryBuilder& b, int p, const char* who) {
    if (p != b.modes())
        throw std::invalid_argument(std::string(who) + ": p does not match the trajectory");
}

// Cell and interval boundaries are passed as exact coordinates, not as
// (start, length) pairs, so that coverage endpoints shared between rounds
// compare bit-identically in later queries.

void cell_between(TrajectoryBuilder& b, double near_edge, double far_edge, int p) {
    for (int k = 0; k < p; ++k) b.pass_to(k % 2 == 0 ? far_edge : near_edge, k);
}

void compliant_between(TrajectoryBuilder& b, double from, double to, int p, double c,
                       double eps) {
    const CompliantPlan plan = compliant_plan(from, std::abs(to - from), p, c, eps);
    const double dir = sign_of(from);
    double prev = from;
    double covered = 0;
    for (int j = 0; j < plan.n; ++j) {
        double bound;
        if (j + 1 == plan.n) {
            bound = to;
        } else {
            covered += plan.widths[static_cast<std::size_t>(j)];
            bound = from + covered * dir;
        }
        cell_between(b, prev, bound, p);
        if (p % 2 == 0) b.transit_to(bound);
        prev = bound;
    }
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::odd_optimal: return "odd_optimal";
        case Variant::even_optimal: return "even_optimal";
        case Variant::practical_odd: return "practical_odd";
        case Variant::practical_even: return "practical_even";
    }
    throw std::logic_error("to_string: unknown variant");
}

Variant variant_from_string(const std::string& s) {
    if (s == "odd_optimal") return Variant::odd_optimal;
    if (s == "even_optimal") return Variant::even_optimal;
    if (s == "practical_odd") return Variant::practical_odd;
    if (s == "practical_even") return Variant::practical_even;
    throw std::invalid_argument("unknown strategy variant: " + s);
}

StrategyParams make_params(int p, Variant v, std::optional<double> eps) {
    StrategyParams params;
    params.p = p;
    params.variant = v;
    const bool odd = v == Variant::odd_optimal || v == Variant::practical_odd;
    if (odd) {
        const OptimalOdd opt = odd_optimal(p);
        params.a = opt.a;
        params.c = opt.cr;
    } else {
        const OptimalEven opt = even_optimal(p);
        params.a = opt.a;
        params.r = opt.r;
        params.c = opt.c_star;
    }
    if (v == Variant::practical_odd || v == Variant::practical_even) {
        if (!eps || *eps <= 0)
            throw std::invalid_argument("make_params: practical variants require eps > 0");
        params.eps = *eps;
    }
    return params;
}

void cell_search(TrajectoryBuilder& b, double x_init, double delta, int p) {
    if (delta <= 0) throw std::invalid_argument("cell_search: delta must be > 0");
    require_modes(b, p, "cell_search");
    require_at(b, x_init, "cell_search");
    cell_between(b, b.position(), x_init + delta * sign_of(x_init), p);
}

void discrete_thorough_search(TrajectoryBuilder& b, double x_init, double delta, double s, int p) {
    if (delta <= 0) throw std::invalid_argument("discrete_thorough_search: delta must be > 0");
    if (s <= 0) throw std::invalid_argument("discrete_thorough_search: cell size must be > 0");
    require_modes(b, p, "discrete_thorough_search");
    require_at(b, x_init, "discrete_thorough_search");
    const double dir = sign_of(x_init);
    const double far = x_init + delta * dir;
    double prev = b.position();
    double covered = 0;
    for (;;) {
        const double remaining = delta - covered;
        if (remaining <= delta * 1e-12) break;
        const double dx = std::min(s, remaining);
        const bool last = dx >= remaining * (1 - 1e-12);
        const double bound = last ? far : x_init + (covered + dx) * dir;
        cell_between(b, prev, bound, p);
        if (p % 2 == 0) b.transit_to(bound);
        prev = bound;
        covered += dx;
        if (last) break;
    }
}

void thorough_search(TrajectoryBuilder& b, double x_init, double delta, int p) {
    if (delta <= 0) throw std::invalid_argument("thorough_search: delta must be > 0");
    require_modes(b, p, "thorough_search");
    require_at(b, x_init, "thorough_search");
    b.sweep_to(x_init + delta * sign_of(x_init));
}

CompliantPlan compliant_plan(double x_init, double delta, int p, double c, double eps) {
    if (delta <= 0) throw std::invalid_argument("compliant_plan: delta must be > 0");
    if (eps <= 0) throw std::invalid_argument("compliant_plan: eps must be > 0");
    if (x_init == 0) throw std::invalid_argument("compliant_plan: x_init must be nonzero");
    if (p < 1) throw std::invalid_argument("compliant_plan: p must be >= 1");
    CompliantPlan plan;
    plan.x_init = x_init;
    plan.delta = delta;
    plan.p_prime = sweep_passes(p);
    if (plan.p_prime == 1) {
        // One pass explores everything it crosses; a single cell does.
        plan.first_width = delta;
        plan.ratio = 1;
        plan.widths = {delta};
        plan.n = 1;
        return plan;
    }
    if (c + eps <= plan.p_prime)
        throw std::invalid_argument("compliant_plan: schedule would not grow (c + eps <= p')");
    plan.first_width = eps * std::abs(x_init) / (plan.p_prime - 1);
    plan.ratio = (c + eps - 1) / (plan.p_prime - 1);
    plan.n = compliant_cell_count(p, c, eps, std::abs(x_init), delta);
    plan.widths.reserve(static_cast<std::size_t>(plan.n));
    double width = plan.first_width;
    double covered = 0;
    for (int i = 0; i + 1 < plan.n; ++i) {
        plan.widths.push_back(width);
        covered += width;
        width *= plan.ratio;
    }
    const double last = delta - covered;
    if (!(last > 0) || last > width * (1 + 1e-9))
        throw std::logic_error("compliant_plan: cell count inconsistent with width schedule");
    plan.widths.push_back(last);
    return plan;
}

void compliant_thorough_search(TrajectoryBuilder& b, double x_init, double delta, int p, double c,
                               double eps) {
    require_modes(b, p, "compliant_thorough_search");
    require_at(b, x_init, "compliant_thorough_search");
    compliant_between(b, x_init, x_init + delta * sign_of(x_init), p, c, eps);
}

Trajectory odd_search(int p, double a, int round_limit) {
    if (p < 1 || p % 2 != 1) throw std::invalid_argument("odd_search: p must be odd");
    if (a <= 1) throw std::invalid_argument("odd_search: growth factor must exceed 1");
    if (round_limit < 1) throw std::invalid_argument("odd_search: round_limit must be >= 1");
    TrajectoryBuilder b(p);
    for (int i = 0; i < round_limit; ++i) {
        const double sign = i % 2 == 0 ? 1.0 : -1.0;
        const double inner = std::pow(a, i - 1);
        const double outer = std::pow(a, i + 1);
        b.transit_to(sign * inner);
        b.sweep_to(sign * outer);
        b.transit_to(0.0);
    }
    return b.finish();
}

Trajectory even_search(int p, double a, double r, int round_limit) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("even_search: p must be even");
    if (a <= 1) throw std::invalid_argument("even_search: growth factor must exceed 1");
    if (r < 0 || r > 1) throw std::invalid_argument("even_search: r must lie in [0, 1]");
    if (round_limit < 1) throw std::invalid_argument("even_search: round_limit must be >= 1");
    TrajectoryBuilder b(p);
    for (int i = 0; i < round_limit; ++i) {
        const double sign = i % 2 == 0 ? 1.0 : -1.0;
        const double inner = std::pow(a, i - 1);
        const double outer = std::pow(a, i + 1);
        const double mid = inner * (r * (a * a - 1) + 1);
        b.transit_to(sign * inner);
        if (r > 0) b.sweep_to(sign * mid);
        if (r < 1) cell_between(b, sign * mid, sign * outer, p);
        b.transit_to(0.0);
    }
    return b.finish();
}

Trajectory practical_search(int p, double eps, int round_limit) {
    if (eps <= 0) throw std::invalid_argument("practical_search: eps must be > 0");
    if (round_limit < 1) throw std::invalid_argument("practical_search: round_limit must be >= 1");
    TrajectoryBuilder b(p);
    if (p % 2 == 1) {
        const OptimalOdd opt = odd_optimal(p);
        for (int i = 0; i < round_limit; ++i) {
            const double sign = i % 2 == 0 ? 1.0 : -1.0;
            const double inner = std::pow(opt.a, i - 1);
            const double outer = std::pow(opt.a, i + 1);
            b.transit_to(sign * inner);
            compliant_between(b, sign * inner, sign * outer, p, opt.cr, eps);
            b.transit_to(0.0);
        }
    } else {
        const OptimalEven opt = even_optimal(p);
        for (int i = 0; i < round_limit; ++i) {
            const double sign = i % 2 == 0 ? 1.0 : -1.0;
            const double inner = std::pow(opt.a, i - 1);
            const double outer = std::pow(opt.a, i + 1);
            const double mid = inner * (opt.r * (opt.a * opt.a - 1) + 1);
            b.transit_to(sign * inner);
            if (opt.r > 0) compliant_between(b, sign * inner, sign * mid, p, opt.c_star, eps);
            if (opt.r < 1) cell_between(b, sign * mid, sign * outer, p);
            b.transit_to(0.0);
        }
    }
    return b.finish();
}

Trajectory build_strategy(const StrategyParams& params, int round_limit) {
    switch (params.variant) {
        case Variant::odd_optimal: return odd_search(params.p, params.a, round_limit);
        case Variant::even_optimal:
            return even_search(params.p, params.a, params.r, round_limit);
        case Variant::practical_odd:
        case Variant::practical_even:
            return practical_search(params.p, params.eps, round_limit);
    }
    throw std::logic_error("build_strategy: unknown variant");
}

int cells_per_round(const StrategyParams& params) {
    switch (params.variant) {
        case Variant::odd_optimal: return 0;
        case Variant::even_optimal: return 1;
        case Variant::practical_odd:
            // delta/|x_init| = a^2 - 1 every round, so the count is constant.
            return compliant_cell_count(params.p, params.c, params.eps, 1.0,
                                        params.a * params.a - 1);
        case Variant::practical_even:
            return compliant_cell_count(params.p, params.c, params.eps, 1.0,
                                        params.r * (params.a * params.a - 1));
    }
    throw std::logic_error("cells_per_round: unknown variant");
}

}  // namespace msearch
