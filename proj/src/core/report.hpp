#pragma once

#include <string>
#include <string_view>

#include "core/ns_lattice.hpp"

namespace ruled {

enum class Format { Text, JsonLines };

// exit codes shared by the commands and the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesisFailed = 2;
inline constexpr int kExitAuditFailed = 3;
inline constexpr int kExitInputError = 4;

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

CommandResult cmd_surface_check(std::string_view config_text);
CommandResult cmd_polarize(std::string_view config_text);
CommandResult cmd_reduce(std::string_view config_text, Format fmt);
CommandResult cmd_report(std::string_view config_text, Format fmt);
CommandResult cmd_strata(Int rank, Int d, Int min_part, Format fmt);

}  // namespace ruled
