#pragma once

#include <string>

#include "vtc/pricing.hpp"

namespace vtc {

enum class OutputFormat { Csv, Json };

// Everything a run needs, parsed from the key=value config. Defaults
// reproduce the reference parameter set (piecewise costs, C0=0.02,
// kappa=0.3, xi-=0.05, xi+=0.1, sigma=0.3, dt=1/261, r=0.011, E=25,
// L=2.5, n=250, m=200, T=1, tau*=0.005).
struct RunConfig {
    GridSpec grid;
    MarketParams market;
    OptionContract contract;
    std::string out_path;
    OutputFormat format = OutputFormat::Csv;
};

RunConfig default_config();

// Parses the sectioned key=value format ([costs], [model], [grid],
// [market], [option], [output]); '#' starts a comment. Unknown sections or
// keys raise ParseError with the line number; invariant violations raise
// ValidationError.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace vtc
