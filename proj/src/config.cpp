#include "vtc/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace vtc {

namespace {

struct CostStaging {
    std::string type = "piecewise";
    double c0 = 0.02;
    double kappa = 0.3;
    double xi_minus = 0.05;
    double xi_plus = 0.1;
};

struct ModelStaging {
    std::string type = "vtc";
    double sigma = 0.3;
    double dt = 1.0 / 261.0;
    double le = 0.0;
    double mu = 0.0;
    double lambda = 0.0;
    double gamma_bar = 0.0;
    double alpha = 0.0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v, int line) {
    if (v == "inf" || v == "+inf")
        return std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + v + "'");
    }
    if (pos != v.size())
        throw ParseError(line, "trailing characters in number '" + v + "'");
    return x;
}

int parse_int(const std::string& v, int line) {
    std::size_t pos = 0;
    int x;
    try {
        x = std::stoi(v, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw ParseError(line, "trailing characters in integer '" + v + "'");
    return x;
}

CostFunction build_cost(const CostStaging& s) {
    if (s.type == "constant") return ConstantCost{s.c0};
    if (s.type == "linear") return LinearCost{s.c0, s.kappa};
    if (s.type == "piecewise")
        return PiecewiseLinearCost{s.c0, s.kappa, s.xi_minus, s.xi_plus};
    if (s.type == "exponential") return ExponentialCost{s.c0, s.kappa};
    throw ValidationError("costs: unknown type '" + s.type + "'");
}

BetaModel build_model(const ModelStaging& s, const CostFunction& cost) {
    if (s.type == "vtc") return VtcModel{s.sigma, s.dt, cost};
    if (s.type == "leland") return LelandConstModel{s.sigma, s.le};
    if (s.type == "rapm") return RapmModel{s.sigma, s.mu};
    if (s.type == "bakstein_howison")
        return BaksteinHowisonModel{s.sigma, s.lambda, s.gamma_bar, s.alpha};
    throw ValidationError("model: unknown type '" + s.type + "'");
}

}  // namespace

RunConfig default_config() { return parse_config(""); }

RunConfig parse_config(const std::string& text) {
    CostStaging cost;
    ModelStaging model;
    GridSpec grid;
    double r = 0.011;
    double strike = 25.0;
    std::string kind = "call";
    std::string out_path;
    std::string format = "csv";

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "costs" && section != "model" && section != "grid" &&
                section != "market" && section != "option" &&
                section != "output")
                throw ParseError(lineno, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (section.empty())
            throw ParseError(lineno, "key '" + key + "' outside any section");

        if (section == "costs") {
            if (key == "type") cost.type = val;
            else if (key == "C0") cost.c0 = parse_real(val, lineno);
            else if (key == "kappa") cost.kappa = parse_real(val, lineno);
            else if (key == "xi_minus") cost.xi_minus = parse_real(val, lineno);
            else if (key == "xi_plus") cost.xi_plus = parse_real(val, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [costs]");
        } else if (section == "model") {
            if (key == "type") model.type = val;
            else if (key == "sigma") model.sigma = parse_real(val, lineno);
            else if (key == "dt") model.dt = parse_real(val, lineno);
            else if (key == "Le") model.le = parse_real(val, lineno);
            else if (key == "mu") model.mu = parse_real(val, lineno);
            else if (key == "lambda") model.lambda = parse_real(val, lineno);
            else if (key == "gamma_bar") model.gamma_bar = parse_real(val, lineno);
            else if (key == "alpha") model.alpha = parse_real(val, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [model]");
        } else if (section == "grid") {
            if (key == "L") grid.L = parse_real(val, lineno);
            else if (key == "n") grid.n = parse_int(val, lineno);
            else if (key == "m") grid.m = parse_int(val, lineno);
            else if (key == "T") grid.T = parse_real(val, lineno);
            else if (key == "tau_star") grid.tau_star = parse_real(val, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [grid]");
        } else if (section == "market") {
            if (key == "r") r = parse_real(val, lineno);
            else if (key == "E") strike = parse_real(val, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [market]");
        } else if (section == "option") {
            if (key == "kind") kind = val;
            else throw ParseError(lineno, "unknown key '" + key + "' in [option]");
        } else {  // output
            if (key == "path") out_path = val;
            else if (key == "format") format = val;
            else throw ParseError(lineno, "unknown key '" + key + "' in [output]");
        }
    }

    RunConfig cfg;
    cfg.grid = grid;
    cfg.market.r = r;
    cfg.market.E = strike;
    cfg.market.model = build_model(model, build_cost(cost));
    if (kind == "call") cfg.contract.kind = OptionKind::Call;
    else if (kind == "put") cfg.contract.kind = OptionKind::Put;
    else throw ValidationError("option: kind must be call or put");
    cfg.contract.E = strike;
    cfg.contract.T = grid.T;
    cfg.contract.r = r;
    cfg.out_path = out_path;
    if (format == "csv") cfg.format = OutputFormat::Csv;
    else if (format == "json") cfg.format = OutputFormat::Json;
    else throw ValidationError("output: format must be csv or json");

    validate(cfg.grid);
    validate(cfg.market);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace vtc
