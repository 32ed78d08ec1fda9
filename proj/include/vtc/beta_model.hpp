#pragma once

#include <utility>
#include <variant>

#include "vtc/cost_model.hpp"

namespace vtc {

// Diffusion function beta(H) = (1/2) sigma_hat(H)^2 H for each volatility
// model, with H = S * d^2V/dS^2.

// Variable transaction costs: sigma_hat^2 depends on the mean value
// modification of the cost function at the traded volume sigma*sqrt(dt)*|H|.
struct VtcModel {
    double sigma;      // annualized volatility
    double dt;         // rebalancing interval, years
    CostFunction cost;
};

// Leland: sigma_hat^2 = sigma^2 (1 - Le*sgn(H)).
struct LelandConstModel {
    double sigma;
    double le;
};

// Risk adjusted pricing methodology: sigma_hat^2 = sigma^2 (1 - mu H^{1/3}),
// H >= 0.
struct RapmModel {
    double sigma;
    double mu;
};

// Bakstein-Howison liquidity model; sigma_hat^2 quadratic in H.
struct BaksteinHowisonModel {
    double sigma;
    double lambda;     // market depth
    double gamma_bar;  // relative bid-ask spread
    double alpha;      // price transform, in [0,1]
};

using BetaModel =
    std::variant<VtcModel, LelandConstModel, RapmModel, BaksteinHowisonModel>;

void validate(const BetaModel& m);

// Leland numbers (Le, Le_lower) of a VTC model, from the cost bounds C0 and
// C0_floor. Throws VariantMismatch otherwise.
std::pair<double, double> leland_numbers(const BetaModel& m);

// Volatility band (sigma_min^2, sigma_max^2) = (sigma^2(1-Le), sigma^2(1-Le_lower))
// of a VTC model. Throws VariantMismatch otherwise.
std::pair<double, double> sigma_bounds(const BetaModel& m);

double beta(const BetaModel& m, double h);

// Analytic derivative d beta/dH; at H=0 the right limit.
double beta_prime(const BetaModel& m, double h);

// sigma_hat(0+)^2 = 2 beta'(0+), the effective volatility at vanishing Gamma.
double sigma_hat0_sq(const BetaModel& m);

// The underlying asset volatility sigma of any model variant; feeds the
// initial-condition smoothing.
double base_sigma(const BetaModel& m);

}  // namespace vtc
