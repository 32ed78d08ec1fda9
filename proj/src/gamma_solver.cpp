#include "vtc/gamma_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace vtc {

void validate(const GridSpec& g) {
    if (g.L <= 0.0) throw ValidationError("grid: L must be > 0");
    if (g.n < 2) throw ValidationError("grid: n must be >= 2");
    if (g.m < 1) throw ValidationError("grid: m must be >= 1");
    if (g.T <= 0.0) throw ValidationError("grid: T must be > 0");
    if (g.tau_star <= 0.0 || g.tau_star >= g.T)
        throw ValidationError("grid: need 0 < tau_star < T");
}

void validate(const MarketParams& p) {
    if (p.r < 0.0) throw ValidationError("market: r must be >= 0");
    if (p.E <= 0.0) throw ValidationError("market: E must be > 0");
    validate(p.model);
}

std::vector<double> initial_condition(const GridSpec& grid,
                                      const MarketParams& market) {
    // smooth the Dirac payoff Gamma with the classical lognormal kernel at
    // the underlying volatility; this is the convention the reference price
    // table is built on
    const double sigma0 = base_sigma(market.model);
    const double ts = grid.tau_star;
    const double denom = sigma0 * std::sqrt(ts);
    std::vector<double> h0(grid.num_points(), 0.0);
    for (int i = -grid.n + 1; i < grid.n; ++i) {
        const double d =
            (grid.x(i) + (market.r - 0.5 * sigma0 * sigma0) * ts) / denom;
        h0[i + grid.n] = normal_pdf(d) / denom;
    }
    return h0;
}

void assemble_step(const std::vector<double>& h_prev, const GridSpec& grid,
                   const MarketParams& market, Tridiag& matrix,
                   std::vector<double>& rhs) {
    const int n = grid.n;
    const double h = grid.h();
    const double k = grid.k();
    const double diff = k / (h * h);
    const double conv = k / (2.0 * h) * market.r;
    const int rows = 2 * n - 1;

    matrix.sub.assign(rows - 1, 0.0);
    matrix.diag.assign(rows, 0.0);
    matrix.sup.assign(rows - 1, 0.0);
    rhs.assign(rows, 0.0);

    for (int p = 0; p < rows; ++p) {
        const int i = p - n + 1;
        const double hp_im1 = h_prev[i - 1 + n];
        const double hp_i = h_prev[i + n];
        const double bp_im1 = beta_prime(market.model, hp_im1);
        const double bp_i = beta_prime(market.model, hp_i);

        const double a = -diff * bp_im1 + conv;
        const double c = -diff * bp_i - conv;
        const double b = 1.0 - (a + c);
        rhs[p] = hp_i +
                 (k / h) * (beta(market.model, hp_i) - beta(market.model, hp_im1));

        // strict dominance is guaranteed when the convection part does not
        // outweigh the frozen diffusion coefficients
        if (conv <= diff * std::min(bp_im1, bp_i) &&
            std::fabs(b) < std::fabs(a) + std::fabs(c))
            throw std::logic_error("assemble_step: diagonal dominance lost");

        matrix.diag[p] = b;
        if (p > 0) matrix.sub[p - 1] = a;
        if (p + 1 < rows) matrix.sup[p] = c;
    }
}

std::vector<double> step(const std::vector<double>& h_prev,
                         const GridSpec& grid, const MarketParams& market) {
    Tridiag matrix;
    std::vector<double> rhs;
    assemble_step(h_prev, grid, market, matrix, rhs);
    const std::vector<double> interior = thomas_solve(matrix, rhs);

    std::vector<double> next(grid.num_points(), 0.0);
    std::copy(interior.begin(), interior.end(), next.begin() + 1);
    return next;
}

GammaSolution solve(const GridSpec& grid, const MarketParams& market) {
    validate(grid);
    validate(market);

    GammaSolution sol;
    sol.grid = grid;
    sol.levels.reserve(grid.m + 1);
    sol.levels.push_back(initial_condition(grid, market));
    const double max_h0 =
        *std::max_element(sol.levels[0].begin(), sol.levels[0].end());

    double min_value = 0.0;
    for (int j = 1; j <= grid.m; ++j) {
        sol.levels.push_back(step(sol.levels.back(), grid, market));
        min_value = std::min(
            min_value,
            *std::min_element(sol.levels.back().begin(), sol.levels.back().end()));
    }
    sol.min_value = min_value;
    // negative values are reported, never clipped
    sol.negative_warning = min_value < -1e-8 * max_h0;
    return sol;
}

}  // namespace vtc
