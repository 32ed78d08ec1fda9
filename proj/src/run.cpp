#include "vtc/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vtc {

namespace {

std::string fmt_real(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Range covering the interesting part of each cost function's graph.
double default_xi_max(const CostFunction& c) {
    struct Visitor {
        double operator()(const ConstantCost&) const { return 1.0; }
        double operator()(const LinearCost& v) const { return v.c0 / v.kappa; }
        double operator()(const PiecewiseLinearCost& v) const {
            return std::isinf(v.xi_plus) ? 4.0 * v.xi_minus + 1.0
                                         : 2.0 * v.xi_plus;
        }
        double operator()(const ExponentialCost& v) const {
            return 4.0 / v.kappa;
        }
    };
    return std::visit(Visitor{}, c);
}

std::vector<double> default_spots(double strike) {
    // Table-1 moneyness ratios
    return {0.8 * strike, 0.92 * strike, strike, 1.12 * strike, 1.2 * strike};
}

}  // namespace

Table run_costfn(const RunConfig& cfg) {
    const VtcModel* vm = std::get_if<VtcModel>(&cfg.market.model);
    if (!vm)
        throw VariantMismatch("costfn: config must select the vtc model");
    const CostFunction& cost = vm->cost;

    Table t;
    t.columns = {"xi", "C", "C_tilde"};
    const int points = 200;
    const double xi_max = default_xi_max(cost);
    for (int i = 0; i <= points; ++i) {
        const double xi = xi_max * i / points;
        t.rows.push_back(
            {xi, eval_cost(cost, xi), mean_value_modification(cost, xi)});
    }
    return t;
}

Table run_betafn(const RunConfig& cfg) {
    Table t;
    t.columns = {"H", "beta", "beta_prime"};
    const int points = 400;
    const double h_max = 20.0;
    for (int i = 0; i <= points; ++i) {
        const double h = h_max * i / points;
        t.rows.push_back({h, beta(cfg.market.model, h),
                          beta_prime(cfg.market.model, h)});
    }
    return t;
}

Table run_gamma(const RunConfig& cfg, int level) {
    const GammaSolution sol = solve(cfg.grid, cfg.market);
    Table t;
    if (level >= 0) {
        if (level > cfg.grid.m)
            throw ValidationError("gamma: level exceeds m");
        t.columns = {"x", "H"};
        for (int i = -cfg.grid.n; i <= cfg.grid.n; ++i)
            t.rows.push_back({cfg.grid.x(i), sol.at(level, i)});
    } else {
        t.columns = {"j", "tau", "x", "H"};
        for (int j = 0; j <= cfg.grid.m; ++j)
            for (int i = -cfg.grid.n; i <= cfg.grid.n; ++i)
                t.rows.push_back({double(j), j * cfg.grid.k(), cfg.grid.x(i),
                                  sol.at(j, i)});
    }
    return t;
}

Table run_price(const RunConfig& cfg, bool linear) {
    Table t;
    t.columns = {"S", "t", "V", "delta"};

    std::vector<double> spots;
    for (int i = 0; i <= 60; ++i)
        spots.push_back(cfg.market.E * (0.4 + 1.2 * i / 60.0));
    const int m = cfg.grid.m;
    const std::vector<int> levels = {m, 2 * m / 3, m / 3, 0};

    if (linear) {
        const double sigma0 = std::sqrt(sigma_hat0_sq(cfg.market.model));
        for (int j : levels) {
            const double tau = cfg.grid.T * j / m;
            const double tt = cfg.contract.T - tau;
            for (double s : spots) {
                const BSInputs in{s, cfg.contract.E, cfg.contract.r, sigma0,
                                  tau};
                const double v = (cfg.contract.kind == OptionKind::Call)
                                     ? bs_call(in)
                                     : bs_put(in);
                const double eps = 1e-4 * s;
                const BSInputs up{s + eps, cfg.contract.E, cfg.contract.r,
                                  sigma0, tau};
                const BSInputs dn{s - eps, cfg.contract.E, cfg.contract.r,
                                  sigma0, tau};
                const double vu = (cfg.contract.kind == OptionKind::Call)
                                      ? bs_call(up)
                                      : bs_put(up);
                const double vd = (cfg.contract.kind == OptionKind::Call)
                                      ? bs_call(dn)
                                      : bs_put(dn);
                t.rows.push_back({s, tt, v, (vu - vd) / (2.0 * eps)});
            }
        }
        return t;
    }

    const GammaSolution sol = solve(cfg.grid, cfg.market);
    const PriceSurface surf = price_surface(sol, cfg.contract, spots, levels);
    for (std::size_t jr = 0; jr < surf.times.size(); ++jr)
        for (std::size_t sr = 0; sr < spots.size(); ++sr)
            t.rows.push_back({spots[sr], surf.times[jr], surf.values[jr][sr],
                              surf.deltas[jr][sr]});
    return t;
}

Table run_bounds(const RunConfig& cfg) {
    const std::vector<BoundsRow> rows = bounds_report(
        cfg.grid, cfg.market, cfg.contract, default_spots(cfg.market.E));
    Table t;
    t.columns = {"S", "V_sigma_max", "V_vtc", "V_sigma_min"};
    for (const BoundsRow& r : rows)
        t.rows.push_back({r.S, r.v_sigma_max, r.v_vtc, r.v_sigma_min});
    return t;
}

std::string to_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << fmt_real(row[c], "%.17g");
        out << "\n";
    }
    return out.str();
}

std::string to_json(const Table& t) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out << (c ? ", " : "") << '"' << t.columns[c]
                << "\": " << fmt_real(t.rows[r][c], "%.17g");
        }
        out << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
}

std::string to_text(const Table& t) {
    std::ostringstream out;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "  " : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "  " : "") << fmt_real(row[c], "%12.6f");
        out << "\n";
    }
    return out.str();
}

void write_table(const Table& t, const RunConfig& cfg,
                 const std::string& default_stem) {
    const bool json = cfg.format == OutputFormat::Json;
    std::string path = cfg.out_path;
    if (path.empty()) path = default_stem + (json ? ".json" : ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write output file: " + path);
    f << (json ? to_json(t) : to_csv(t));
}

}  // namespace vtc
