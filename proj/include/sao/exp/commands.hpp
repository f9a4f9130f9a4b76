#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sao/exp/config.hpp"
#include "sao/exp/output.hpp"

namespace sao::exp {

const std::vector<std::string>& subcommands();

/// Runs one pipeline and returns its tables and diagnostics. Timestamps are
/// filled in; nothing is written to disk.
RunRecord run_command(std::string_view subcommand, const ExperimentConfig& config);

}  // namespace sao::exp
