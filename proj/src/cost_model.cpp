#include "vtc/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vtc/numerics.hpp"

namespace vtc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrtHalfPi = std::sqrt(M_PI / 2.0);

// int_a^b e^{-x^2/2} dx via erf.
double gauss_integral(double a, double b) {
    const double s = 1.0 / std::sqrt(2.0);
    const double eb = std::isinf(b) ? 1.0 : erf(b * s);
    return kSqrtHalfPi * (eb - erf(a * s));
}

}  // namespace

double PiecewiseLinearCost::c_floor() const {
    if (std::isinf(xi_plus)) return -kInf;
    return c0 - kappa * (xi_plus - xi_minus);
}

void validate(const CostFunction& c) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if (v.c0 <= 0.0) throw ValidationError("cost: C0 must be > 0");
            if constexpr (!std::is_same_v<T, ConstantCost>) {
                if (v.kappa < 0.0)
                    throw ValidationError("cost: kappa must be >= 0");
            }
            if constexpr (std::is_same_v<T, PiecewiseLinearCost>) {
                if (v.xi_minus < 0.0 || !(v.xi_minus < v.xi_plus))
                    throw ValidationError(
                        "cost: need 0 <= xi_minus < xi_plus");
                if (!std::isinf(v.xi_plus) && v.c_floor() <= 0.0)
                    throw ValidationError(
                        "cost: floor C0 - kappa*(xi_plus - xi_minus) must be > 0");
            }
        },
        c);
}

double cost_upper(const CostFunction& c) {
    return std::visit([](const auto& v) { return v.c0; }, c);
}

double cost_lower(const CostFunction& c) {
    struct Visitor {
        double operator()(const ConstantCost& v) const { return v.c0; }
        double operator()(const LinearCost&) const { return -kInf; }
        double operator()(const PiecewiseLinearCost& v) const {
            return v.c_floor();
        }
        double operator()(const ExponentialCost&) const { return 0.0; }
    };
    return std::visit(Visitor{}, c);
}

double eval_cost(const CostFunction& c, double xi) {
    struct Visitor {
        double xi;
        double operator()(const ConstantCost& v) const { return v.c0; }
        double operator()(const LinearCost& v) const {
            return v.c0 - v.kappa * xi;
        }
        double operator()(const PiecewiseLinearCost& v) const {
            if (xi <= v.xi_minus) return v.c0;
            if (xi >= v.xi_plus) return v.c_floor();
            return v.c0 - v.kappa * (xi - v.xi_minus);
        }
        double operator()(const ExponentialCost& v) const {
            return v.c0 * std::exp(-v.kappa * xi);
        }
    };
    return std::visit(Visitor{xi}, c);
}

double mean_value_modification(const CostFunction& c, double xi) {
    struct Visitor {
        double xi;
        double operator()(const ConstantCost& v) const { return v.c0; }
        double operator()(const LinearCost& v) const {
            return v.c0 - v.kappa * xi * kSqrtHalfPi;
        }
        double operator()(const PiecewiseLinearCost& v) const {
            if (xi == 0.0) return v.c0;  // both integration limits -> inf
            return v.c0 -
                   v.kappa * xi * gauss_integral(v.xi_minus / xi, v.xi_plus / xi);
        }
        double operator()(const ExponentialCost& v) const {
            const double y = std::sqrt(2.0) * v.kappa * xi;
            return v.c0 * (1.0 - 0.5 * std::sqrt(M_PI) * y * erfcx(0.5 * y));
        }
    };
    return std::visit(Visitor{xi}, c);
}

double mean_value_modification_quadrature(const CostFunction& c, double xi,
                                          double tol) {
    // e^{-x^2/2} is below underflow well before x = 40, so the infinite
    // upper limit is truncated there.
    auto f = [&](double x) {
        return eval_cost(c, xi * x) * x * std::exp(-0.5 * x * x);
    };
    // split where the integrand has structure the 15-point rule cannot see
    // from [0, 40] alone: piecewise kinks, and the e^{-kappa xi x} boundary
    // layer of the exponential cost, both of which collapse toward x = 0 as
    // xi grows
    std::vector<double> pts = {0.0};
    if (const auto* pw = std::get_if<PiecewiseLinearCost>(&c); pw && xi > 0.0)
        for (double knot : {pw->xi_minus / xi, pw->xi_plus / xi})
            if (std::isfinite(knot) && knot > 0.0 && knot < 40.0)
                pts.push_back(knot);
    if (const auto* ec = std::get_if<ExponentialCost>(&c);
        ec && ec->kappa * xi > 0.0)
        for (double scale : {1.0, 10.0, 100.0}) {
            const double knot = scale / (ec->kappa * xi);
            if (knot < 40.0) pts.push_back(knot);
        }
    pts.push_back(40.0);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        total += integrate(f, pts[i - 1], pts[i], tol);
    return total;
}

double mean_value_modification_derivative(const CostFunction& c, double xi) {
    struct Visitor {
        double xi;
        double operator()(const ConstantCost&) const { return 0.0; }
        double operator()(const LinearCost& v) const {
            return -v.kappa * kSqrtHalfPi;
        }
        double operator()(const PiecewiseLinearCost& v) const {
            // Ctilde = C0 - kappa*xi*G(xi), G(xi) = int_{xi-/xi}^{xi+/xi};
            // xi*G'(xi) = (xi_- e^{-(xi_-/xi)^2/2} - xi_+ e^{-(xi_+/xi)^2/2})/xi
            const double a = v.xi_minus / xi;
            const double g = gauss_integral(a, v.xi_plus / xi);
            double xi_gp = v.xi_minus * std::exp(-0.5 * a * a) / xi;
            if (!std::isinf(v.xi_plus)) {
                const double b = v.xi_plus / xi;
                xi_gp -= v.xi_plus * std::exp(-0.5 * b * b) / xi;
            }
            return -v.kappa * (g + xi_gp);
        }
        double operator()(const ExponentialCost& v) const {
            const double y = std::sqrt(2.0) * v.kappa * xi;
            const double gp =
                (1.0 + 0.5 * y * y) * erfcx(0.5 * y) - y / std::sqrt(M_PI);
            return -v.c0 * std::sqrt(2.0) * v.kappa * 0.5 * std::sqrt(M_PI) * gp;
        }
    };
    return std::visit(Visitor{xi}, c);
}

}  // namespace vtc
