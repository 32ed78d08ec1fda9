#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "test_util.hpp"
#include "vtc/gamma_solver.hpp"
#include "vtc/linear_reference.hpp"

using namespace vtc;

namespace {

MarketParams reference_market() {
    return MarketParams{0.011, 25.0,
                        VtcModel{0.3, 1.0 / 261.0,
                                 PiecewiseLinearCost{0.02, 0.3, 0.05, 0.1}}};
}

// constant-coefficient model, beta(H) = lambda H on H >= 0
MarketParams leland_market(double r = 0.011) {
    return MarketParams{r, 25.0, LelandConstModel{0.3, 0.85935}};
}

}  // namespace

TEST_CASE("initial condition mass, peak and tails") {
    const GridSpec grid;
    const MarketParams market = reference_market();
    const auto h0 = initial_condition(grid, market);

    double mass = 0.0;
    for (double v : h0) mass += v;
    mass *= grid.h();
    CHECK(mass == doctest::Approx(1.0).epsilon(2e-3));

    const double sigma0 = base_sigma(market.model);
    const double peak = *std::max_element(h0.begin(), h0.end());
    CHECK(peak == doctest::Approx(1.0 / (sigma0 * std::sqrt(2.0 * M_PI *
                                                            grid.tau_star)))
                      .epsilon(1e-2));
    const auto peak_idx =
        std::max_element(h0.begin(), h0.end()) - h0.begin();
    CHECK(std::fabs(grid.x(int(peak_idx) - grid.n)) < 2.0 * grid.h());

    CHECK(h0.front() == 0.0);
    CHECK(h0.back() == 0.0);
    CHECK(h0[1] < 1e-12);
    CHECK(h0[h0.size() - 2] < 1e-12);
}

TEST_CASE("initial condition equals the linear Gamma kernel at tau*") {
    const GridSpec grid;
    const MarketParams market = reference_market();
    const double sigma0 = base_sigma(market.model);
    const auto h0 = initial_condition(grid, market);
    const BSInputs in{0.0, market.E, market.r, sigma0, grid.tau_star};
    for (int i = -grid.n + 1; i < grid.n; ++i)
        CHECK(h0[i + grid.n] ==
              doctest::Approx(bs_gamma_kernel(in, grid.x(i))).epsilon(1e-12));
}

TEST_CASE("zero is a fixed point of the step") {
    const GridSpec grid{1.0, 20, 10, 1.0, 0.005};
    const MarketParams market = leland_market();
    const std::vector<double> zero(grid.num_points(), 0.0);
    const auto next = step(zero, grid, market);
    for (double v : next) CHECK(v == 0.0);
}

TEST_CASE("step coefficients: rows sum to one") {
    const GridSpec grid{1.0, 10, 5, 1.0, 0.01};
    const MarketParams market = reference_market();
    const auto h0 = initial_condition(grid, market);
    Tridiag m;
    std::vector<double> rhs;
    assemble_step(h0, grid, market, m, rhs);
    const int n = grid.n;
    const double diff = grid.k() / (grid.h() * grid.h());
    const double conv = grid.k() / (2.0 * grid.h()) * market.r;
    for (int p = 0; p < 2 * n - 1; ++p) {
        const int i = p - n + 1;
        const double a = -diff * beta_prime(market.model, h0[i - 1 + n]) + conv;
        const double c = -diff * beta_prime(market.model, h0[i + n]) - conv;
        CHECK(m.diag[p] == 1.0 - (a + c));  // exact, by construction
    }
}

TEST_CASE("one step matches a dense assembly of the same scheme") {
    const GridSpec grid{1.5, 30, 50, 0.5, 0.01};
    const MarketParams market = leland_market();
    const auto h0 = initial_condition(grid, market);
    const auto next = step(h0, grid, market);

    // dense re-assembly, independent of Tridiag/thomas_solve
    const int n = grid.n;
    const int rows = 2 * n - 1;
    const double diff = grid.k() / (grid.h() * grid.h());
    const double conv = grid.k() / (2.0 * grid.h()) * market.r;
    std::vector<std::vector<double>> dense(rows,
                                           std::vector<double>(rows, 0.0));
    std::vector<double> rhs(rows);
    for (int p = 0; p < rows; ++p) {
        const int i = p - n + 1;
        const double a = -diff * beta_prime(market.model, h0[i - 1 + n]) + conv;
        const double c = -diff * beta_prime(market.model, h0[i + n]) - conv;
        dense[p][p] = 1.0 - (a + c);
        if (p > 0) dense[p][p - 1] = a;
        if (p + 1 < rows) dense[p][p + 1] = c;
        rhs[p] = h0[i + n] + (grid.k() / grid.h()) *
                                 (beta(market.model, h0[i + n]) -
                                  beta(market.model, h0[i - 1 + n]));
    }
    const auto ref = testutil::dense_solve(dense, rhs);
    for (int p = 0; p < rows; ++p)
        CHECK(next[p + 1] == doctest::Approx(ref[p]).epsilon(1e-12));
    CHECK(next.front() == 0.0);
    CHECK(next.back() == 0.0);
}

TEST_CASE("discrete comparison principle on the reference configuration") {
    const GridSpec grid;
    const MarketParams market = reference_market();
    const GammaSolution sol = solve(grid, market);

    const double max_h0 =
        *std::max_element(sol.levels[0].begin(), sol.levels[0].end());
    for (int j = 0; j <= grid.m; ++j) {
        for (int i = -grid.n; i <= grid.n; ++i) {
            CHECK(sol.at(j, i) >= -1e-8 * max_h0);
            CHECK(sol.at(j, i) <= (1.0 + 1e-8) * max_h0);
        }
    }
    CHECK_FALSE(sol.negative_warning);
}

TEST_CASE("terminal profile has a single interior maximum") {
    const GridSpec grid;
    const GammaSolution sol = solve(grid, reference_market());
    const auto& last = sol.levels.back();
    const auto peak = std::max_element(last.begin(), last.end());
    CHECK(peak != last.begin());
    CHECK(peak != last.end() - 1);
    // increasing up to the peak, decreasing after (tiny tolerance for
    // flat tails)
    const double tol = 1e-12;
    for (auto it = last.begin() + 1; it <= peak; ++it)
        CHECK(*it >= *(it - 1) - tol);
    for (auto it = peak + 1; it != last.end(); ++it)
        CHECK(*it <= *(it - 1) + tol);
}

TEST_CASE("mass conservation with r=0 and linear beta") {
    GridSpec grid{2.5, 150, 100, 0.4, 0.005};
    const MarketParams market = leland_market(0.0);
    const GammaSolution sol = solve(grid, market);
    auto mass = [&](const std::vector<double>& lvl) {
        double s = 0.0;
        for (double v : lvl) s += v;
        return s * grid.h();
    };
    const double m0 = mass(sol.levels.front());
    const double mT = mass(sol.levels.back());
    CHECK(std::fabs(mT - m0) < 1e-10);
}

TEST_CASE("constant-volatility solve approximates the linear Gamma solution") {
    // kappa = 0: the VTC model degenerates to constant costs, beta linear
    GridSpec grid;
    MarketParams market{0.011, 25.0,
                        VtcModel{0.3, 1.0 / 261.0, ConstantCost{0.02}}};
    const GammaSolution sol = solve(grid, market);
    const double sigma_c = std::sqrt(sigma_bounds(market.model).first);

    // exact solution of the constant-coefficient Gamma equation started from
    // the smoothed Dirac: a Gaussian whose variance grows by 2*a per unit
    // time and whose center drifts left at rate a + r
    const double sig0 = base_sigma(market.model);
    const double a = 0.5 * sigma_c * sigma_c;
    const double x0 = -(market.r - 0.5 * sig0 * sig0) * grid.tau_star;
    double max_err = 0.0, max_h = 0.0;
    for (int i = -grid.n; i <= grid.n; ++i) {
        const double s =
            std::sqrt(sig0 * sig0 * grid.tau_star + 2.0 * a * grid.T);
        const double center = x0 - (a + market.r) * grid.T;
        const double exact =
            normal_pdf((grid.x(i) - center) / s) / s;
        max_err = std::max(max_err, std::fabs(sol.at(grid.m, i) - exact));
        max_h = std::max(max_h, exact);
    }
    CHECK(max_err < 2e-2 * max_h);
}

TEST_CASE("self-convergence under grid refinement") {
    // terminal profiles on three nested grids; the scheme is first order in
    // time, so successive doublings should roughly halve the difference
    const MarketParams market = reference_market();
    double peak = 0.0;
    auto diff_to_double = [&](int n, int m) {
        GridSpec coarse{2.5, n, m, 1.0, 0.005};
        GridSpec fine{2.5, 2 * n, 2 * m, 1.0, 0.005};
        const GammaSolution sc = solve(coarse, market);
        const GammaSolution sf = solve(fine, market);
        double max_diff = 0.0;
        for (int i = -n; i <= n; ++i) {
            const double vf = sf.at(2 * m, 2 * i);
            max_diff = std::max(max_diff, std::fabs(sc.at(m, i) - vf));
            peak = std::max(peak, std::fabs(vf));
        }
        return max_diff;
    };
    const double d1 = diff_to_double(125, 100);
    const double d2 = diff_to_double(250, 200);
    CHECK(d1 < 0.1 * peak);   // within 10% of the peak height
    CHECK(d2 < 0.65 * d1);    // and shrinking under refinement
}

TEST_CASE("grid and market validation") {
    GridSpec bad;
    bad.n = 1;
    CHECK_THROWS_AS(validate(bad), ValidationError);
    GridSpec bad2;
    bad2.tau_star = 2.0;  // >= T
    CHECK_THROWS_AS(validate(bad2), ValidationError);
    MarketParams mp = reference_market();
    mp.E = -1.0;
    CHECK_THROWS_AS(validate(mp), ValidationError);
}
