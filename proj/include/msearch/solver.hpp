#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace msearch {

// Optimal parameters for the odd-p round strategy.
struct OptimalOdd {
    int p = 1;
    double a = 0;   // growth factor 1 + sqrt(2/(p+1))
    double cr = 0;  // 2p + 3 + sqrt(8(p+1))
};

// Optimal parameters for the even-p round strategy. c_star is the unique root
// of the discriminant polynomial above the parity floor.
struct OptimalEven {
    int p = 2;
    double c_star = 0;
    double a = 0;
    double r = 0;
    std::pair<double, double> bracket{0, 0};
};

struct SignChangeReport {
    bool pass = false;
    int neg_to_pos = 0;
    int pos_to_neg = 0;
    double transition_lo = 0;  // grid cell bracketing the transition
    double transition_hi = 0;
};

// D_p(c) = (c-1)^4 - 4p(c+1)^2(c-p-1), evaluated in factored form.
double discriminant_poly(int p, double c);

// Fully expanded evaluation of the same polynomial; kept as an independent
// route for cross-checking the factored form.
double discriminant_poly_expanded(int p, double c);

// Closed-form root bracket [2p+3+sqrt(8(p-1)), 2p+3+sqrt(8p)] for even p,
// with D_p(lo) <= 0 <= D_p(hi).
std::pair<double, double> even_bracket(int p);

// Scans D_p over [2p+1+sqrt(8p), bracket hi + 10] and reports the sign
// transitions found; passes iff there is exactly one, negative to positive.
SignChangeReport sign_change_audit(int p, double grid_step);

OptimalOdd odd_optimal(int p);

// Bisection on the guaranteed bracket until the interval is <= tol.
OptimalEven even_optimal(int p, double tol = 1e-12);

// Coarse floor on any strategy's competitive ratio: the odd closed form for
// odd p, and the odd bound at p-1 modes for even p.
double lower_bound_floor(int p);

// Number of cells a geometric compliant schedule uses to cover delta starting
// at distance x_init_abs. The degenerate single-mode case is one cell.
int compliant_cell_count(int p, double c, double eps, double x_init_abs, double delta);

// Optimal competitive ratio for any p >= 1 (closed form or root-finding by
// parity). Used by the table command.
double optimal_cr(int p);

struct TableRow {
    int p = 0;
    bool odd = false;
    double cr = 0;
};
std::vector<TableRow> cr_table(int p_max);

// Rounds half away from zero to `decimals` places.
double round_half_away(double v, int decimals);

// Golden-section minimizer for a unimodal function on [lo, hi].
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

}  // namespace msearch
