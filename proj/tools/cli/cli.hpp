#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iqconc::cli {

enum class Command {
  kBasesVerify,
  kBasesStats,
  kAssist,
  kAssistOptimize,
  kSwapSweep,
  kSwapCrossover,
  kSwapOutcomes,
  kPercThreshold,
  kPercCurve,
  kReportTable1,
};

enum class OutputFormat { kCsv, kJson, kText };

std::string_view to_label(Command c);
std::string_view to_label(OutputFormat f);

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerification = 2,
  kExitIo = 3,
};

// Bad flag, bad value, unknown config key. The message names the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::kReportTable1;
  // Every parameter the command accepts, with defaults filled in. Values are
  // kept as text and converted by the command.
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 42;
  std::optional<std::string> output_path;
  OutputFormat output_format = OutputFormat::kJson;
  unsigned workers = 1;
};

// Arguments exclude the program name. `env_seed` stands in for IQCONC_SEED.
RunConfig parse_args(const std::vector<std::string>& args,
                     const std::optional<std::string>& env_seed);
RunConfig parse_args(const std::vector<std::string>& args);

// Runs the command and writes its output to config.output_path, or to `out`
// when no path is set. Diagnostics go to `err`.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace iqconc::cli
