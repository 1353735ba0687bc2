#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/cli.hpp"
#include "json.hpp"

namespace iqconc::cli {

using Json = nlohmann::ordered_json;

enum class ParamKind { kNumber, kInteger, kText };

struct ParamSpec {
  std::string_view name;
  ParamKind kind;
  std::string_view default_value;  // empty: no default
  std::string_view help;
};

struct CommandSpec {
  Command command;
  std::string_view group;
  std::string_view name;  // empty for a group-level command
  std::string_view help;
  OutputFormat default_format;
  std::vector<OutputFormat> formats;
  std::vector<ParamSpec> params;
};

const std::vector<CommandSpec>& command_specs();
const CommandSpec& spec_for(Command c);

double parse_number(std::string_view flag, std::string_view text);
long long parse_integer(std::string_view flag, std::string_view text);

// The parameter echo: seed plus every parameter, numbers as JSON numbers.
Json parameter_echo(const RunConfig& config);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
  std::vector<std::string> trailer;  // extra "# ..." lines after the rows
};

struct CommandOutput {
  Json results = Json::object();
  std::optional<Table> table;
  bool verified = true;
};

CommandOutput execute(const RunConfig& config);

}  // namespace iqconc::cli
