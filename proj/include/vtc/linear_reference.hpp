#pragma once

namespace vtc {

// Closed-form linear Black-Scholes with constant volatility; supplies the
// sigma_min/sigma_max price bounds and solver validation references.

struct BSInputs {
    double S;
    double E;
    double r;
    double sigma;
    double tau;  // time to expiry
};

double bs_call(const BSInputs& in);
double bs_put(const BSInputs& in);

// S * d^2V/dS^2 of the linear model in log-moneyness coordinates,
// f(d)/(sigma sqrt(tau)) with d = (x + (r - sigma^2/2) tau)/(sigma sqrt(tau)).
// Coincides with the smoothed initial condition at tau = tau_star.
double bs_gamma_kernel(const BSInputs& in, double x);

}  // namespace vtc
