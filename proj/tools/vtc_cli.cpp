#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vtc/run.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string format;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config", args.config_path,
                    "key=value config file (defaults used when omitted)");
    cmd->add_option("--out", args.out_path, "output file path");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

vtc::RunConfig make_config(const CommonArgs& args) {
    vtc::RunConfig cfg = args.config_path.empty()
                             ? vtc::default_config()
                             : vtc::load_config_file(args.config_path);
    if (!args.out_path.empty()) cfg.out_path = args.out_path;
    if (args.format == "csv") cfg.format = vtc::OutputFormat::Csv;
    if (args.format == "json") cfg.format = vtc::OutputFormat::Json;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Nonlinear Black-Scholes option pricing under variable transaction "
        "costs"};
    app.require_subcommand(1);

    CommonArgs price_args, gamma_args, costfn_args, betafn_args, bounds_args;
    std::string price_model = "nonlinear";
    int gamma_level = -2;  // -2: default (terminal), -1: full surface

    CLI::App* price = app.add_subcommand("price", "price/delta samples (S,t,V,delta)");
    add_common(price, price_args);
    price->add_option("--model", price_model, "nonlinear or linear")
        ->check(CLI::IsMember({"nonlinear", "linear"}));

    CLI::App* gamma = app.add_subcommand("gamma", "Gamma solution H(x,tau)");
    add_common(gamma, gamma_args);
    gamma->add_option("--level", gamma_level,
                      "time level j to dump (-1 for the full surface; "
                      "default: terminal level m)");

    CLI::App* costfn = app.add_subcommand(
        "costfn", "tabulate C(xi) and its mean value modification");
    add_common(costfn, costfn_args);

    CLI::App* betafn = app.add_subcommand("betafn", "tabulate beta(H)");
    add_common(betafn, betafn_args);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "nonlinear price vs the sigma_min/sigma_max band");
    add_common(bounds, bounds_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (price->parsed()) {
            const vtc::RunConfig cfg = make_config(price_args);
            vtc::write_table(vtc::run_price(cfg, price_model == "linear"), cfg,
                             "price");
        } else if (gamma->parsed()) {
            const vtc::RunConfig cfg = make_config(gamma_args);
            const int level = (gamma_level == -2) ? cfg.grid.m : gamma_level;
            vtc::write_table(vtc::run_gamma(cfg, level), cfg, "gamma");
        } else if (costfn->parsed()) {
            const vtc::RunConfig cfg = make_config(costfn_args);
            vtc::write_table(vtc::run_costfn(cfg), cfg, "costfn");
        } else if (betafn->parsed()) {
            const vtc::RunConfig cfg = make_config(betafn_args);
            vtc::write_table(vtc::run_betafn(cfg), cfg, "betafn");
        } else if (bounds->parsed()) {
            const vtc::RunConfig cfg = make_config(bounds_args);
            const vtc::Table t = vtc::run_bounds(cfg);
            vtc::write_table(t, cfg, "bounds");
            std::cout << vtc::to_text(t);
        }
    } catch (const vtc::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const vtc::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const vtc::VariantMismatch& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
