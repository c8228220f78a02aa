#include "msearch/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace msearch {

namespace {

void require_even(int p, const char* who) {
    if (p < 2 || p % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": p must be even and >= 2");
}

void require_odd(int p, const char* who) {
    if (p < 1 || p % 2 != 1)
        throw std::invalid_argument(std::string(who) + ": p must be odd and >= 1");
}

}  // namespace

double discriminant_poly(int p, double c) {
    const double u = c - 1;
    const double v = c + 1;
    return u * u * u * u - 4.0 * p * v * v * (c - p - 1);
}

double discriminant_poly_expanded(int p, double c) {
    const double pd = p;
    return c * c * c * c - 4 * (pd + 1) * c * c * c + (4 * pd * (pd - 1) + 6) * c * c +
           4 * (2 * pd - 1) * (pd + 1) * c + (2 * pd + 1) * (2 * pd + 1);
}

std::pair<double, double> even_bracket(int p) {
    require_even(p, "even_bracket");
    return {2.0 * p + 3 + std::sqrt(8.0 * (p - 1)), 2.0 * p + 3 + std::sqrt(8.0 * p)};
}

SignChangeReport sign_change_audit(int p, double grid_step) {
    require_even(p, "sign_change_audit");
    if (grid_step <= 0) throw std::invalid_argument("sign_change_audit: grid_step must be > 0");
    const double lo = 2.0 * p + 1 + std::sqrt(8.0 * p);
    const double hi = even_bracket(p).second + 10.0;
    SignChangeReport rep;
    double prev = discriminant_poly(p, lo);
    for (double c = lo + grid_step; c <= hi + grid_step; c += grid_step) {
        const double cur = discriminant_poly(p, c);
        if (prev < 0 && cur >= 0) {
            ++rep.neg_to_pos;
            rep.transition_lo = c - grid_step;
            rep.transition_hi = c;
        } else if (prev >= 0 && cur < 0) {
            ++rep.pos_to_neg;
        }
        prev = cur;
    }
    rep.pass = rep.neg_to_pos == 1 && rep.pos_to_neg == 0;
    return rep;
}

OptimalOdd odd_optimal(int p) {
    require_odd(p, "odd_optimal");
    OptimalOdd out;
    out.p = p;
    out.a = 1.0 + std::sqrt(2.0 / (p + 1));
    out.cr = 2.0 * p + 3 + std::sqrt(8.0 * (p + 1));
    return out;
}

OptimalEven even_optimal(int p, double tol) {
    require_even(p, "even_optimal");
    if (tol <= 0) throw std::invalid_argument("even_optimal: tol must be > 0");
    auto [lo, hi] = even_bracket(p);
    if (!(discriminant_poly(p, lo) <= 0 && discriminant_poly(p, hi) >= 0))
        throw std::logic_error("even_optimal: bracket does not straddle the root");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bisected to ulp resolution
        if (discriminant_poly(p, mid) < 0) lo = mid;
        else hi = mid;
    }
    OptimalEven out;
    out.p = p;
    out.bracket = even_bracket(p);
    out.c_star = 0.5 * (lo + hi);
    const double c = out.c_star;
    out.a = (c - 1) * (c - 1) / (2.0 * p * (c + 1));
    const double a = out.a;
    const double q = p * (a * a - 1) + 2;
    out.r = (std::sqrt(q * q + 8.0 * p * (a * a - 1) * (a - 1)) - 2) / (4 * (a * a - 1)) -
            p / 4.0;
    if (out.r < -1e-12 || out.r > 1 + 1e-12)
        throw std::logic_error("even_optimal: split coefficient out of [0, 1]");
    out.r = std::clamp(out.r, 0.0, 1.0);
    return out;
}

double lower_bound_floor(int p) {
    if (p < 1) throw std::invalid_argument("lower_bound_floor: p must be >= 1");
    if (p % 2 == 1) return 2.0 * p + 3 + std::sqrt(8.0 * (p + 1));
    return 2.0 * p + 1 + std::sqrt(8.0 * p);
}

int compliant_cell_count(int p, double c, double eps, double x_init_abs, double delta) {
    if (p < 1) throw std::invalid_argument("compliant_cell_count: p must be >= 1");
    if (delta <= 0) throw std::invalid_argument("compliant_cell_count: delta must be > 0");
    if (eps <= 0) throw std::invalid_argument("compliant_cell_count: eps must be > 0");
    if (x_init_abs <= 0)
        throw std::invalid_argument("compliant_cell_count: x_init_abs must be > 0");
    const int pp = p % 2 == 1 ? p : p + 1;
    if (pp == 1) return 1;  // single pass already explores everything it crosses
    if (c + eps <= pp)
        throw std::invalid_argument("compliant_cell_count: schedule would not grow (c + eps <= p')");
    const double b = (c + eps - 1) / (pp - 1);
    const double arg = 1.0 + (c + eps - pp) * delta / (eps * x_init_abs);
    const int n = static_cast<int>(std::ceil(std::log(arg) / std::log(b)));
    return n < 1 ? 1 : n;
}

double optimal_cr(int p) {
    if (p < 1) throw std::invalid_argument("optimal_cr: p must be >= 1");
    return p % 2 == 1 ? odd_optimal(p).cr : even_optimal(p).c_star;
}

std::vector<TableRow> cr_table(int p_max) {
    if (p_max < 1) throw std::invalid_argument("cr_table: p_max must be >= 1");
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(p_max));
    for (int p = 1; p <= p_max; ++p)
        rows.push_back({p, p % 2 == 1, round_half_away(optimal_cr(p), 5)});
    return rows;
}

double round_half_away(double v, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    return (v < 0 ? -1.0 : 1.0) * std::floor(std::abs(v) * scale + 0.5) / scale;
}

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
    if (!(lo < hi) || tol <= 0)
        throw std::invalid_argument("golden_section_minimize: bad interval or tolerance");
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace msearch
