#pragma once

#include <vector>

#include "vtc/gamma_solver.hpp"
#include "vtc/linear_reference.hpp"

namespace vtc {

enum class OptionKind { Call, Put };

struct OptionContract {
    OptionKind kind = OptionKind::Call;
    double E = 25.0;
    double T = 1.0;
    double r = 0.011;
};

// Prices and deltas sampled on a (spot, time) grid; values[j][s] belongs to
// times[j] and spots[s].
struct PriceSurface {
    std::vector<double> times;
    std::vector<double> spots;
    std::vector<std::vector<double>> values;
    std::vector<std::vector<double>> deltas;
};

// Rectangle-rule reconstruction V(S, T - tau_j) = h * sum (S - E e^{x_i})^+ H_i^j
// (call), payoff kernel flipped for puts.
double reconstruct_price(const GammaSolution& sol, const OptionContract& c,
                         double S, int j);

// Delta from the cumulative sum a + h * sum_{x_i <= ln(S/E)} H_i^j with
// a = 0 (call) / -1 (put).
double reconstruct_delta(const GammaSolution& sol, const OptionContract& c,
                         double S, int j);

PriceSurface price_surface(const GammaSolution& sol, const OptionContract& c,
                           const std::vector<double>& spots,
                           const std::vector<int>& time_levels);

// One row of the three-way comparison against the constant-volatility band.
struct BoundsRow {
    double S;
    double v_sigma_max;
    double v_vtc;
    double v_sigma_min;
    bool violates_lower;  // v_vtc < v_sigma_min - tol
    bool violates_upper;  // v_vtc > v_sigma_max + tol
};

// Closed-form sigma_min/sigma_max prices next to the nonlinear price at
// t = 0 for each spot; VTC model required. Violation flags use the given
// tolerance (discretization-level crossings do occur near the band edge).
std::vector<BoundsRow> bounds_report(const GridSpec& grid,
                                     const MarketParams& market,
                                     const OptionContract& c,
                                     const std::vector<double>& spots,
                                     double tol = 0.01);

}  // namespace vtc
