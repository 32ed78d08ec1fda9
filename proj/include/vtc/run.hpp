#pragma once

#include <string>
#include <vector>

#include "vtc/config.hpp"

namespace vtc {

// Flat numeric table, the common shape of every subcommand's output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// C and Ctilde tabulated over a volume grid (columns xi, C, C_tilde).
Table run_costfn(const RunConfig& cfg);

// beta and beta' tabulated over H (columns H, beta, beta_prime).
Table run_betafn(const RunConfig& cfg);

// One time level of the Gamma solution (columns x, H), or the full surface
// (columns j, tau, x, H) when level < 0.
Table run_gamma(const RunConfig& cfg, int level);

// Price/delta samples (columns S, t, V, delta); linear=true swaps in the
// closed-form constant-volatility price.
Table run_price(const RunConfig& cfg, bool linear);

// Three-way bound comparison at t=0 (columns S, V_sigma_max, V_vtc,
// V_sigma_min); spots at the Table-1 moneyness ratios of E.
Table run_bounds(const RunConfig& cfg);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Renders with 6-decimal alignment for terminal display.
std::string to_text(const Table& t);

void write_table(const Table& t, const RunConfig& cfg,
                 const std::string& default_stem);

}  // namespace vtc
