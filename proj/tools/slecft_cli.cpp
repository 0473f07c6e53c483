#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "slecft/geom/operator_table.hpp"
#include "slecft/report/report.hpp"
#include "slecft/report/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using slecft::report::ConfigError;
using slecft::report::Report;
using slecft::report::RunConfig;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

// Every RunConfig key is reachable as a flag; flags win over the config file.
const Flag kFlags[] = {
    {"--max-mode", "max_mode", "largest |n| for mode sweeps"},
    {"--max-degree", "max_degree", "weighted degree cap for test monomials"},
    {"--max-index", "max_index", "coordinate index cap for operator checks"},
    {"--level", "level", "Gram / Kac level"},
    {"--max-level", "max_level", "largest level for Gram and duality checks"},
    {"--rank-level", "rank_level", "largest level for rank checks"},
    {"--kappa", "kappa", "kappa as an exact rational p/q"},
    {"--lambda", "lambda", "weight as an exact rational p/q"},
    {"--tolerance", "tolerance", "relative tolerance for numeric checks"},
    {"--seed", "seed", "base seed for SLE sampling"},
    {"--cache-dir", "cache_dir", "operator cache directory"},
    {"--format", "format", "json or text"},
    {"--output", "output", "write the report to this file"},
    {"--csv", "csv", "CSV export path (bubble-limit, loewner-demo)"},
    {"--q", "q", "annulus modulus"},
    {"--dtheta", "dtheta", "angular offset for kernel limits"},
    {"--x0", "x0", "centre of the removed disc"},
    {"--radius", "radius", "radius of the removed disc"},
    {"--theta", "theta", "boundary angle for the bubble mass"},
    {"--t-max", "t_max", "Loewner time horizon"},
    {"--dt", "dt", "Loewner grid step"},
    {"--sle-runs", "sle_runs", "number of SLE samples"},
    {"--sle-dt", "sle_dt", "grid step for SLE variance samples"},
    {"--extra-order", "extra_order", "extra series order for order-independence checks"},
};

// Converts flag text to the JSON type of the config default.
json typed(const json& like, const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    if (like.is_number_unsigned()) {
      auto v = std::stoull(text, &used);
      if (used == text.size()) return v;
    } else if (like.is_number_integer()) {
      auto v = std::stoll(text, &used);
      if (used == text.size()) return v;
    } else if (like.is_number_float()) {
      auto v = std::stod(text, &used);
      if (used == text.size()) return v;
    } else {
      return text;
    }
  } catch (const std::exception&) {
  }
  throw ConfigError("invalid value '" + text + "' for " + key);
}

fs::path default_cache_dir() {
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "slecft";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "slecft";
  return fs::path(".slecft-cache");
}

void emit(const Report& rep, const RunConfig& cfg) {
  std::string text = cfg.format == "text" ? rep.to_text() : rep.to_json().dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ConfigError("cannot write " + cfg.output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slecft: exact Virasoro / SLE verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  app.add_option("--config", config_file, "JSON config file (flat keys, see README)");
  std::map<std::string, std::string> overrides;
  for (const Flag& f : kFlags)
    app.add_option_function<std::string>(f.name, [&overrides, key = std::string(f.key)](const std::string& v) { overrides[key] = v; },
                                         f.help);

  std::string command;
  for (auto& name : slecft::report::command_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " suite");
    sub->callback([&command, name] { command = name; });
  }
  auto* cache = app.add_subcommand("cache", "manage the operator cache");
  cache->require_subcommand(1);
  std::string cache_op;
  for (const char* op : {"warm", "clear", "stat"}) {
    auto* sub = cache->add_subcommand(op, std::string(op) + " the operator cache");
    sub->fallthrough();
    sub->callback([&cache_op, op] { cache_op = op; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  RunConfig cfg;
  fs::path cache_dir;
  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw ConfigError("cannot read config file " + config_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ConfigError("config file " + config_file + " is not valid JSON: " + e.what());
      }
      RunConfig::merge(cfg, j);
    }
    if (const char* env = std::getenv("SLECFT_CACHE_DIR"); env && *env) cfg.cache_dir = env;
    json defaults = cfg.to_json();
    json flags = json::object();
    for (auto& [key, text] : overrides) flags[key] = typed(defaults.at(key), key, text);
    RunConfig::merge(cfg, flags);
    cfg.validate();
    cache_dir = cfg.cache_dir.empty() ? default_cache_dir() : fs::path(cfg.cache_dir);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Report rep = [&] {
      if (!cache_op.empty()) {
        if (cache_op == "warm") return slecft::report::cache_warm(cfg, cache_dir);
        if (cache_op == "clear") return slecft::report::cache_clear(cache_dir);
        return slecft::report::cache_stat(cache_dir);
      }
      slecft::geom::OperatorTable table;
      auto loaded = slecft::report::load_cache(table, cache_dir);
      if (!loaded.warning.empty()) std::cerr << "warning: " << loaded.warning << "\n";
      return slecft::report::run_command(command, cfg, table);
    }();
    if (rep.extra().contains("warning")) std::cerr << "warning: " << rep.extra()["warning"].get<std::string>() << "\n";
    emit(rep, cfg);
    return rep.ok() ? kExitPass : kExitFail;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const slecft::report::UnknownCommand& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
