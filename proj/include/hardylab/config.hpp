#pragma once

#include <istream>
#include <string>

#include "hardylab/weights.hpp"

namespace hardylab {

enum class OutputFormat { Csv, Json };

/// Defaults shared by every CLI subcommand. Loaded from a key=value file and
/// then overridden by explicit flags.
struct RunConfig {
    WeightMode mode = WeightMode::Sigmoid;
    double step = 0.0;  ///< 0: pick by height (0.01 below t = 1000, 0.005 above)
    double tol = 1e-10;
    double eps = 1e-6;  ///< even-zero threshold
    std::string cache_dir = ".hardylab-cache";
    OutputFormat format = OutputFormat::Csv;
    unsigned workers = 0;  ///< 0: hardware concurrency
};

/// Parses `key = value` lines; '#' starts a comment. Unknown keys and bad
/// values throw DomainError naming the line.
/// Keys: mode, step, tol, eps, cache_dir, format, workers.
RunConfig parse_run_config(std::istream& in, RunConfig base = {});

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);

}  // namespace hardylab
