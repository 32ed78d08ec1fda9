#include "vtc/pricing.hpp"

#include <cmath>

namespace vtc {

double reconstruct_price(const GammaSolution& sol, const OptionContract& c,
                         double S, int j) {
    const GridSpec& g = sol.grid;
    const double h = g.h();
    double sum = 0.0;
    for (int i = -g.n; i <= g.n; ++i) {
        const double strike_term = c.E * std::exp(g.x(i));
        const double payoff = (c.kind == OptionKind::Call)
                                  ? std::max(S - strike_term, 0.0)
                                  : std::max(strike_term - S, 0.0);
        sum += payoff * sol.at(j, i);
    }
    return h * sum;
}

double reconstruct_delta(const GammaSolution& sol, const OptionContract& c,
                         double S, int j) {
    const GridSpec& g = sol.grid;
    const double x_cut = std::log(S / c.E);
    double sum = 0.0;
    for (int i = -g.n; i <= g.n; ++i) {
        if (g.x(i) > x_cut) break;
        sum += sol.at(j, i);
    }
    const double a = (c.kind == OptionKind::Call) ? 0.0 : -1.0;
    return a + g.h() * sum;
}

PriceSurface price_surface(const GammaSolution& sol, const OptionContract& c,
                           const std::vector<double>& spots,
                           const std::vector<int>& time_levels) {
    PriceSurface surf;
    surf.spots = spots;
    for (int j : time_levels) {
        surf.times.push_back(c.T - j * sol.grid.k());
        std::vector<double> row_v, row_d;
        row_v.reserve(spots.size());
        row_d.reserve(spots.size());
        for (double s : spots) {
            row_v.push_back(reconstruct_price(sol, c, s, j));
            row_d.push_back(reconstruct_delta(sol, c, s, j));
        }
        surf.values.push_back(std::move(row_v));
        surf.deltas.push_back(std::move(row_d));
    }
    return surf;
}

std::vector<BoundsRow> bounds_report(const GridSpec& grid,
                                     const MarketParams& market,
                                     const OptionContract& c,
                                     const std::vector<double>& spots,
                                     double tol) {
    const auto [sig_min_sq, sig_max_sq] = sigma_bounds(market.model);
    const GammaSolution sol = solve(grid, market);

    std::vector<BoundsRow> rows;
    rows.reserve(spots.size());
    for (double S : spots) {
        BoundsRow row;
        row.S = S;
        const BSInputs lo{S, c.E, c.r, std::sqrt(sig_min_sq), c.T};
        const BSInputs hi{S, c.E, c.r, std::sqrt(sig_max_sq), c.T};
        row.v_sigma_min =
            (c.kind == OptionKind::Call) ? bs_call(lo) : bs_put(lo);
        row.v_sigma_max =
            (c.kind == OptionKind::Call) ? bs_call(hi) : bs_put(hi);
        row.v_vtc = reconstruct_price(sol, c, S, grid.m);
        row.violates_lower = row.v_vtc < row.v_sigma_min - tol;
        row.violates_upper = row.v_vtc > row.v_sigma_max + tol;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace vtc
