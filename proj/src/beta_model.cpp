#include "vtc/beta_model.hpp"

#include <cmath>

namespace vtc {

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / M_PI);

const VtcModel* as_vtc(const BetaModel& m) {
    return std::get_if<VtcModel>(&m);
}

double sgn_right(double h) { return h < 0.0 ? -1.0 : 1.0; }

}  // namespace

void validate(const BetaModel& m) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if (v.sigma <= 0.0)
                throw ValidationError("model: sigma must be > 0");
            if constexpr (std::is_same_v<T, VtcModel>) {
                if (v.dt <= 0.0)
                    throw ValidationError("model: dt must be > 0");
                validate(v.cost);
            } else if constexpr (std::is_same_v<T, LelandConstModel>) {
                if (v.le < 0.0 || v.le >= 1.0)
                    throw ValidationError("model: need 0 <= Le < 1");
            } else if constexpr (std::is_same_v<T, RapmModel>) {
                if (v.mu < 0.0) throw ValidationError("model: mu must be >= 0");
            } else if constexpr (std::is_same_v<T, BaksteinHowisonModel>) {
                if (v.alpha < 0.0 || v.alpha > 1.0)
                    throw ValidationError("model: need 0 <= alpha <= 1");
            }
        },
        m);
    if (const VtcModel* v = as_vtc(m)) {
        const double le = leland_numbers(m).first;
        if (le >= 1.0)
            throw ValidationError(
                "model: Le = " + std::to_string(le) +
                " >= 1 breaks parabolicity; decrease C0 or dt");
        (void)v;
    }
}

std::pair<double, double> leland_numbers(const BetaModel& m) {
    const VtcModel* v = as_vtc(m);
    if (!v) throw VariantMismatch("leland_numbers: VTC model required");
    const double scale = kSqrt2OverPi / (v->sigma * std::sqrt(v->dt));
    return {scale * cost_upper(v->cost), scale * cost_lower(v->cost)};
}

std::pair<double, double> sigma_bounds(const BetaModel& m) {
    const VtcModel* v = as_vtc(m);
    if (!v) throw VariantMismatch("sigma_bounds: VTC model required");
    const auto [le, le_lower] = leland_numbers(m);
    const double s2 = v->sigma * v->sigma;
    return {s2 * (1.0 - le), s2 * (1.0 - le_lower)};
}

double beta(const BetaModel& m, double h) {
    struct Visitor {
        double h;
        double operator()(const VtcModel& v) const {
            if (h == 0.0) return 0.0;
            const double sdt = v.sigma * std::sqrt(v.dt);
            const double xi = sdt * std::fabs(h);
            const double ctil = mean_value_modification(v.cost, xi);
            const double s2 = v.sigma * v.sigma;
            return 0.5 * s2 * (1.0 - kSqrt2OverPi * ctil * sgn_right(h) / sdt) *
                   h;
        }
        double operator()(const LelandConstModel& v) const {
            return 0.5 * v.sigma * v.sigma * (1.0 - v.le * sgn_right(h)) * h;
        }
        double operator()(const RapmModel& v) const {
            if (h < 0.0)
                throw DomainError("beta: RAPM model requires H >= 0");
            return 0.5 * v.sigma * v.sigma * (1.0 - v.mu * std::cbrt(h)) * h;
        }
        double operator()(const BaksteinHowisonModel& v) const {
            const double s = sgn_right(h);
            const double one_ma2 = (1.0 - v.alpha) * (1.0 - v.alpha);
            const double g = v.gamma_bar;
            const double sig_hat2 =
                1.0 + g * g * one_ma2 + 2.0 * v.lambda * h +
                v.lambda * v.lambda * one_ma2 * h * h +
                2.0 * kSqrt2OverPi * g * s +
                2.0 * kSqrt2OverPi * v.lambda * one_ma2 * g * std::fabs(h);
            return 0.5 * v.sigma * v.sigma * sig_hat2 * h;
        }
    };
    return std::visit(Visitor{h}, m);
}

double beta_prime(const BetaModel& m, double h) {
    struct Visitor {
        double h;
        double operator()(const VtcModel& v) const {
            const double sdt = v.sigma * std::sqrt(v.dt);
            const double xi = sdt * std::fabs(h);
            double bracket = mean_value_modification(v.cost, xi);
            if (xi > 0.0)
                bracket += xi * mean_value_modification_derivative(v.cost, xi);
            const double s2 = v.sigma * v.sigma;
            return 0.5 * s2 *
                   (1.0 - kSqrt2OverPi * bracket * sgn_right(h) / sdt);
        }
        double operator()(const LelandConstModel& v) const {
            return 0.5 * v.sigma * v.sigma * (1.0 - v.le * sgn_right(h));
        }
        double operator()(const RapmModel& v) const {
            if (h < 0.0)
                throw DomainError("beta_prime: RAPM model requires H >= 0");
            return 0.5 * v.sigma * v.sigma *
                   (1.0 - (4.0 / 3.0) * v.mu * std::cbrt(h));
        }
        double operator()(const BaksteinHowisonModel& v) const {
            const double s = sgn_right(h);
            const double one_ma2 = (1.0 - v.alpha) * (1.0 - v.alpha);
            const double g = v.gamma_bar;
            return 0.5 * v.sigma * v.sigma *
                   (1.0 + g * g * one_ma2 + 2.0 * kSqrt2OverPi * g * s +
                    (4.0 * v.lambda +
                     4.0 * kSqrt2OverPi * v.lambda * one_ma2 * g * s) *
                        h +
                    3.0 * v.lambda * v.lambda * one_ma2 * h * h);
        }
    };
    return std::visit(Visitor{h}, m);
}

double sigma_hat0_sq(const BetaModel& m) { return 2.0 * beta_prime(m, 0.0); }

double base_sigma(const BetaModel& m) {
    return std::visit([](const auto& v) { return v.sigma; }, m);
}

}  // namespace vtc
