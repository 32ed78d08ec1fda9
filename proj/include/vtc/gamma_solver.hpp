#pragma once

#include <vector>

#include "vtc/beta_model.hpp"
#include "vtc/numerics.hpp"

namespace vtc {

// Uniform grid on (-L, L) x (0, T]: x_i = i*h for i = -n..n with h = L/n,
// time levels tau_j = j*k with k = T/m. tau_star smooths the Dirac initial
// condition; level j approximates H(., tau_star + j*k).
struct GridSpec {
    double L = 2.5;
    int n = 250;
    int m = 200;
    double T = 1.0;
    double tau_star = 0.005;

    double h() const { return L / n; }
    double k() const { return T / m; }
    int num_points() const { return 2 * n + 1; }
    double x(int i) const { return i * h(); }  // i in [-n, n]
};

void validate(const GridSpec& g);

struct MarketParams {
    double r = 0.011;  // risk-free rate
    double E = 25.0;   // strike / numeraire
    BetaModel model;
};

void validate(const MarketParams& p);

// H over all grid points and time levels; levels[j][i + n] is H at (x_i, tau_j).
struct GammaSolution {
    GridSpec grid;
    std::vector<std::vector<double>> levels;

    double at(int j, int i) const { return levels[j][i + grid.n]; }
    // True if some level dipped below -1e-8 * max H^0.
    bool negative_warning = false;
    double min_value = 0.0;
};

// Smoothed Dirac initial condition H^0_i = f(d_i)/(sigma_0 sqrt(tau*)),
// sigma_0 = the model's underlying volatility; endpoints zero.
std::vector<double> initial_condition(const GridSpec& grid,
                                      const MarketParams& market);

// One semi-implicit step: beta and beta' frozen at the previous level, one
// tridiagonal solve for the interior, Dirichlet zero at +-L.
std::vector<double> step(const std::vector<double>& h_prev,
                         const GridSpec& grid, const MarketParams& market);

// Assembles the interior tridiagonal system of one step; exposed for the
// dense-oracle tests.
void assemble_step(const std::vector<double>& h_prev, const GridSpec& grid,
                   const MarketParams& market, Tridiag& matrix,
                   std::vector<double>& rhs);

// Marches m steps from the initial condition, recording every level.
GammaSolution solve(const GridSpec& grid, const MarketParams& market);

}  // namespace vtc
