#pragma once

#include <variant>

#include "vtc/errors.hpp"

namespace vtc {

// Transaction-cost rules C(xi), cost per unit dollar traded as a function
// of the traded volume xi >= 0.

struct ConstantCost {
    double c0;
};

// C(xi) = c0 - kappa*xi; may go negative for xi > c0/kappa (kept as-is).
struct LinearCost {
    double c0;
    double kappa;
};

// C0 for xi <= xi_minus, linear ramp down to c_floor() at xi_plus, flat
// after. xi_plus may be +infinity.
struct PiecewiseLinearCost {
    double c0;
    double kappa;
    double xi_minus;
    double xi_plus;

    double c_floor() const;
};

// C(xi) = c0 * exp(-kappa*xi).
struct ExponentialCost {
    double c0;
    double kappa;
};

using CostFunction =
    std::variant<ConstantCost, LinearCost, PiecewiseLinearCost, ExponentialCost>;

// Throws ValidationError when parameters violate the variant's constraints
// (c0 > 0, kappa >= 0, 0 <= xi_minus < xi_plus, positive cost floor).
void validate(const CostFunction& c);

// Upper bound C0 and lower bound of C over [0, inf).
double cost_upper(const CostFunction& c);
double cost_lower(const CostFunction& c);

// Pointwise C(xi).
double eval_cost(const CostFunction& c, double xi);

// Mean value modification: the Gaussian-volume average
//   Ctilde(xi) = int_0^inf C(xi*x) x e^{-x^2/2} dx,
// evaluated through the per-variant closed form.
double mean_value_modification(const CostFunction& c, double xi);

// Same quantity by direct adaptive quadrature; independent of the closed
// forms, used as their oracle.
double mean_value_modification_quadrature(const CostFunction& c, double xi,
                                          double tol = 1e-10);

// d/dxi Ctilde(xi), xi > 0, analytic per variant.
double mean_value_modification_derivative(const CostFunction& c, double xi);

}  // namespace vtc
