#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "msearch/solver.hpp"

using namespace msearch;

TEST_CASE("discriminant polynomial values") {
    CHECK(discriminant_poly(2, 11.0) == 784.0);
    CHECK(discriminant_poly_expanded(2, 11.0) == 784.0);
    CHECK(discriminant_poly(2, 9.0) == -704.0);
    // Closed form at the lower bracket endpoint.
    const double lo2 = 7 + std::sqrt(8.0);
    CHECK(discriminant_poly(2, lo2) ==
          doctest::Approx(-16 * (7 + 4 * std::sqrt(2.0) + 8)).epsilon(1e-12));
}

TEST_CASE("factored and expanded evaluation agree") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> cd(5.0, 80.0);
    for (int p = 2; p <= 16; p += 2) {
        for (int trial = 0; trial < 50; ++trial) {
            const double c = cd(rng);
            const double f = discriminant_poly(p, c);
            const double e = discriminant_poly_expanded(p, c);
            CHECK(f == doctest::Approx(e).epsilon(1e-9));
        }
    }
}

TEST_CASE("bracket straddles the root with closed-form endpoint values") {
    for (int p = 2; p <= 64; p += 2) {
        const auto [lo, hi] = even_bracket(p);
        CHECK(discriminant_poly(p, lo) < 0);
        CHECK(discriminant_poly(p, hi) > 0);
        const double hi_closed =
            16 * (1 + 4 * std::sqrt(2.0 * p) + 8 * p + 4 * p * std::sqrt(2.0 * p) + 2.0 * p * p);
        CHECK(discriminant_poly(p, hi) == doctest::Approx(hi_closed).epsilon(1e-6));
    }
}

TEST_CASE("the polynomial is negative at the parity floor") {
    for (int p = 2; p <= 16; p += 2) {
        const double floor = 2.0 * p + 1 + std::sqrt(8.0 * p);
        const double closed = 16 * std::pow(p, 1.5) *
                              (-p * std::sqrt(8.0) - 5 * std::sqrt(static_cast<double>(p)) -
                               std::sqrt(8.0));
        CHECK(discriminant_poly(p, floor) == doctest::Approx(closed).epsilon(1e-9));
        CHECK(discriminant_poly(p, floor) < 0);
    }
}

TEST_CASE("sign change audit finds exactly one transition") {
    for (int p : {2, 4, 16}) {
        const SignChangeReport rep = sign_change_audit(p, 1e-3);
        CHECK(rep.pass);
        CHECK(rep.neg_to_pos == 1);
        CHECK(rep.pos_to_neg == 0);
    }
    const SignChangeReport p4 = sign_change_audit(4, 1e-3);
    CHECK(p4.transition_lo <= 16.08120);
    CHECK(p4.transition_hi >= 16.08119);
    const SignChangeReport p16 = sign_change_audit(16, 1e-3);
    CHECK(p16.transition_lo <= 45.98516);
    CHECK(p16.transition_hi >= 45.98515);
}

TEST_CASE("odd optimum closed forms") {
    const OptimalOdd p1 = odd_optimal(1);
    CHECK(p1.cr == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(p1.a == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(odd_optimal(3).cr == doctest::Approx(14.65685).epsilon(1e-6));
    CHECK(odd_optimal(7).cr == 25.0);
    CHECK_THROWS_AS(odd_optimal(2), std::invalid_argument);
}

TEST_CASE("even optimum root finding") {
    const OptimalEven p2 = even_optimal(2, 1e-9);
    CHECK(p2.c_star == doctest::Approx(10.27303).epsilon(5e-7));
    CHECK(p2.a == doctest::Approx(1.9069649495).epsilon(1e-9));
    CHECK(p2.r == doctest::Approx(0.2156792184).epsilon(1e-8));
    CHECK(p2.bracket.first <= p2.c_star);
    CHECK(p2.c_star <= p2.bracket.second);
    // Cross-check against the phase-1 limit the parameters are tuned for.
    const double phase1 = 1 + 2 / (p2.a - 1) + (2 + 2 * p2.r) * (p2.a + 1);
    CHECK(phase1 == doctest::Approx(p2.c_star).epsilon(1e-6));

    CHECK(even_optimal(10).c_star == doctest::Approx(31.54214).epsilon(5e-7));
    CHECK_THROWS_AS(even_optimal(3), std::invalid_argument);
}

TEST_CASE("root residual and quadratic consistency at the optimum") {
    for (int p = 2; p <= 16; p += 2) {
        const OptimalEven opt = even_optimal(p);
        // Residual scaled by a derivative estimate around the root.
        const double h = 1e-6;
        const double dp =
            (discriminant_poly(p, opt.c_star + h) - discriminant_poly(p, opt.c_star - h)) / (2 * h);
        CHECK(std::abs(discriminant_poly(p, opt.c_star)) <= 1e-6 * std::abs(dp) + 1e-6);
        // The growth factor solves the round quadratic whose discriminant
        // vanishes at c*.
        const double c = opt.c_star, a = opt.a;
        const double residual =
            p * (c + 1) * a * a - (c - 1) * (c - 1) * a + (c + 1) * (c - 1 - p);
        CHECK(std::abs(residual) <= 1e-6 * p * (c + 1) * a * a);
    }
}

TEST_CASE("parity floor") {
    CHECK(lower_bound_floor(1) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(lower_bound_floor(2) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(lower_bound_floor(3) == doctest::Approx(14.65685).epsilon(1e-6));
}

TEST_CASE("compliant cell count") {
    CHECK(compliant_cell_count(3, 14.65685, 0.1, 1.0, 8.0) == 4);
    CHECK(compliant_cell_count(3, 14.65685, 1e9, 1.0, 8.0) == 1);
    CHECK(compliant_cell_count(1, 9.0, 0.1, 1.0, 8.0) == 1);
    CHECK_THROWS_AS(compliant_cell_count(3, 2.0, 0.5, 1.0, 8.0), std::invalid_argument);

    SUBCASE("stays under the odd strategy ceiling") {
        for (int p : {3, 5, 7, 9}) {
            const OptimalOdd opt = odd_optimal(p);
            for (double eps : {0.5, 0.1, 0.01}) {
                const int n = compliant_cell_count(p, opt.cr, eps, 1.0, opt.a * opt.a - 1);
                const int ceiling =
                    static_cast<int>(std::ceil(std::log(4 + 18.0 * p / eps) / std::log(2.0)));
                CHECK(n <= ceiling);
            }
        }
    }
}

TEST_CASE("ratios increase with p and interleave by parity") {
    double prev = 0;
    for (int p = 1; p <= 16; ++p) {
        const double cr = optimal_cr(p);
        CHECK(cr > prev);
        prev = cr;
    }
    for (int p = 2; p <= 16; p += 2) {
        CHECK(optimal_cr(p) > optimal_cr(p - 1));
        CHECK(optimal_cr(p) < optimal_cr(p + 1));
    }
}

TEST_CASE("table rows round half away from zero to five decimals") {
    const auto rows = cr_table(16);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].cr == 9.0);
    CHECK(rows[7].cr == doctest::Approx(26.55911).epsilon(1e-12));
    CHECK(rows[14].cr == doctest::Approx(44.31371).epsilon(1e-12));
    CHECK(round_half_away(0.123455, 5) == doctest::Approx(0.12346).epsilon(1e-12));
    CHECK(round_half_away(-0.123455, 5) == doctest::Approx(-0.12346).epsilon(1e-12));
}

TEST_CASE("golden section minimizer") {
    const double x = golden_section_minimize([](double v) { return (v - 2) * (v - 2); }, 0.0, 5.0,
                                             1e-10);
    CHECK(x == doctest::Approx(2.0).epsilon(1e-8));
}
