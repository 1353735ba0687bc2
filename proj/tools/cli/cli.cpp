#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "iqconc/errors.hpp"
#include "iqconc/parallel.hpp"

#ifndef IQCONC_VERSION
#define IQCONC_VERSION "0.0.0"
#endif

namespace iqconc::cli {

namespace {

class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kGlobalKeys[] = {"seed", "format", "out", "workers"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot read '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw UsageError("--config: line " + std::to_string(lineno) + ": expected key = value");
    kv[trim(std::string_view(body).substr(0, eq))] = trim(std::string_view(body).substr(eq + 1));
  }
  return kv;
}

OutputFormat format_from_label(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  if (s == "text") return OutputFormat::kText;
  throw UsageError("--format: expected csv, json or text, got '" + s + "'");
}

std::uint64_t parse_seed(std::string_view where, const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw UsageError(std::string(where) + ": invalid seed '" + text + "'");
  return v;
}

std::string format_number(const Json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_text(std::ostream& os, const std::string& prefix, const Json& v) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items())
      write_text(os, prefix.empty() ? k : prefix + "." + k, child);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      write_text(os, prefix + "[" + std::to_string(i) + "]", v[i]);
  } else {
    os << prefix << ": " << format_number(v) << '\n';
  }
}

void render(std::ostream& os, const RunConfig& config, const CommandOutput& output,
            long long elapsed_ms) {
  const auto& spec = spec_for(config.command);
  Json header = {{"tool_version", IQCONC_VERSION},
                 {"command", to_label(config.command)},
                 {"parameters", parameter_echo(config)}};
  switch (config.output_format) {
    case OutputFormat::kJson: {
      Json env = header;
      env["results"] = output.results;
      env["elapsed_ms"] = elapsed_ms;
      os << env.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      if (!output.table) throw UsageError("--format: csv not available for " + std::string(to_label(spec.command)));
      const auto& t = *output.table;
      os << "# " << header.dump() << '\n';
      for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
      }
      for (const auto& line : t.trailer) os << "# " << line << '\n';
      break;
    }
    case OutputFormat::kText: {
      os << "# " << header.dump() << '\n';
      write_text(os, "", output.results);
      break;
    }
  }
}

}  // namespace

std::string_view to_label(Command c) {
  switch (c) {
    case Command::kBasesVerify: return "bases-verify";
    case Command::kBasesStats: return "bases-stats";
    case Command::kAssist: return "assist";
    case Command::kAssistOptimize: return "assist-optimize";
    case Command::kSwapSweep: return "swap-sweep";
    case Command::kSwapCrossover: return "swap-crossover";
    case Command::kSwapOutcomes: return "swap-outcomes";
    case Command::kPercThreshold: return "perc-threshold";
    case Command::kPercCurve: return "perc-curve";
    case Command::kReportTable1: return "report-table1";
  }
  return "?";
}

std::string_view to_label(OutputFormat f) {
  switch (f) {
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kText: return "text";
  }
  return "?";
}

RunConfig parse_args(const std::vector<std::string>& args,
                     const std::optional<std::string>& env_seed) {
  CLI::App app{"iqconc: entanglement concentration, swapping and percolation tools"};
  app.require_subcommand(1, 1);
  std::string seed_text, out_path, format_text, config_path;
  unsigned workers = 0;
  auto* seed_opt = app.add_option("--seed", seed_text, "64-bit seed (default $IQCONC_SEED, else 42)");
  auto* out_opt = app.add_option("--out", out_path, "output file (default stdout)");
  auto* format_opt = app.add_option("--format", format_text, "csv, json or text");
  auto* workers_opt = app.add_option("--workers", workers, "worker threads (default: all cores)");
  app.add_option("--config", config_path, "key = value file; flags take precedence");

  struct Leaf {
    const CommandSpec* spec;
    CLI::App* app;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<Leaf> leaves;
  std::map<std::string, CLI::App*> groups;
  // Values live in a map keyed by "<command>/<param>"; std::map nodes are stable.
  std::map<std::string, std::string> storage;

  for (const auto& spec : command_specs()) {
    const std::string group(spec.group);
    CLI::App* parent = nullptr;
    if (auto it = groups.find(group); it != groups.end()) {
      parent = it->second;
    } else {
      parent = app.add_subcommand(group);
      parent->fallthrough();
      groups[group] = parent;
    }
    CLI::App* target = parent;
    if (!spec.name.empty()) {
      target = parent->add_subcommand(std::string(spec.name), std::string(spec.help));
      target->fallthrough();
    } else {
      target->description(std::string(spec.help));
    }
    Leaf leaf{&spec, target, {}};
    for (const auto& ps : spec.params) {
      std::string& slot = storage[std::string(to_label(spec.command)) + "/" + std::string(ps.name)];
      std::string help(ps.help);
      if (!ps.default_value.empty()) help += " [" + std::string(ps.default_value) + "]";
      leaf.options[std::string(ps.name)] = target->add_option("--" + std::string(ps.name), slot, help);
    }
    leaves.push_back(std::move(leaf));
  }
  for (auto& [name, group] : groups) {
    const bool has_own = std::any_of(leaves.begin(), leaves.end(), [&](const Leaf& l) {
      return l.app == group;
    });
    group->require_subcommand(has_own ? 0 : 1, 1);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const Leaf* chosen = nullptr;
  for (const auto& leaf : leaves) {
    if (!leaf.app->parsed()) continue;
    if (!leaf.spec->name.empty() || leaf.app->get_subcommands().empty()) {
      if (!chosen || !leaf.spec->name.empty()) chosen = &leaf;
    }
  }
  if (!chosen) throw UsageError("no command given");
  const auto& spec = *chosen->spec;

  std::map<std::string, std::string> file_values;
  if (!config_path.empty()) {
    file_values = read_config_file(config_path);
    for (const auto& [key, value] : file_values) {
      const bool global = std::find(std::begin(kGlobalKeys), std::end(kGlobalKeys), key) !=
                          std::end(kGlobalKeys);
      const bool local = chosen->options.count(key) > 0;
      if (!global && !local)
        throw UsageError("--config: unknown key '" + key + "' for " + std::string(to_label(spec.command)));
    }
  }
  auto from_file = [&](const std::string& key) -> std::optional<std::string> {
    if (auto it = file_values.find(key); it != file_values.end()) return it->second;
    return std::nullopt;
  };

  RunConfig config;
  config.command = spec.command;
  for (const auto& ps : spec.params) {
    const std::string name(ps.name);
    std::optional<std::string> value;
    if (chosen->options.at(name)->count() > 0)
      value = storage[std::string(to_label(spec.command)) + "/" + name];
    else if (auto v = from_file(name))
      value = *v;
    else if (!ps.default_value.empty())
      value = std::string(ps.default_value);
    if (!value) continue;
    const std::string flag = "--" + name;
    if (ps.kind == ParamKind::kNumber) parse_number(flag, *value);
    if (ps.kind == ParamKind::kInteger) parse_integer(flag, *value);
    config.parameters[name] = *value;
  }

  if (seed_opt->count() > 0)
    config.seed = parse_seed("--seed", seed_text);
  else if (auto v = from_file("seed"))
    config.seed = parse_seed("--config seed", *v);
  else if (env_seed && !env_seed->empty())
    config.seed = parse_seed("IQCONC_SEED", *env_seed);

  if (format_opt->count() > 0)
    config.output_format = format_from_label(format_text);
  else if (auto v = from_file("format"))
    config.output_format = format_from_label(*v);
  else
    config.output_format = spec.default_format;
  if (std::find(spec.formats.begin(), spec.formats.end(), config.output_format) == spec.formats.end())
    throw UsageError("--format: " + std::string(to_label(config.output_format)) +
                     " is not available for " + std::string(to_label(spec.command)));

  if (out_opt->count() > 0)
    config.output_path = out_path;
  else if (auto v = from_file("out"))
    config.output_path = *v;

  if (workers_opt->count() == 0) {
    if (auto v = from_file("workers")) {
      const long long w = parse_integer("--config workers", *v);
      if (w < 0) throw UsageError("--config workers: must be >= 0");
      workers = static_cast<unsigned>(w);
    }
  }
  config.workers = workers == 0 ? Executor::hardware().workers() : workers;
  return config;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  const char* env = std::getenv("IQCONC_SEED");
  return parse_args(args, env ? std::optional<std::string>(env) : std::nullopt);
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CommandOutput output;
  const auto start = std::chrono::steady_clock::now();
  try {
    output = execute(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedPartitionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitVerification;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  std::ostringstream buffer;
  try {
    render(buffer, config, output, static_cast<long long>(elapsed));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << *config.output_path << "' for writing\n";
      return kExitIo;
    }
    file << buffer.str();
    file.flush();
    if (!file) {
      err << "error: failed writing '" << *config.output_path << "'\n";
      return kExitIo;
    }
  } else {
    out << buffer.str();
  }

  if (!output.verified) {
    err << "verification failed for " << to_label(config.command) << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }
  return dispatch(config, out, err);
}

}  // namespace iqconc::cli
