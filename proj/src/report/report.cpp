#include "slecft/report/report.hpp"

#include <cmath>
#include <sstream>

#include "slecft/symbolic/rational.hpp"

namespace slecft::report {

using nlohmann::json;

void RunConfig::validate() const {
  auto nonneg = [](const char* key, long v) {
    if (v < 0) throw ConfigError(std::string(key) + " must be >= 0");
  };
  nonneg("max_mode", max_mode);
  nonneg("max_degree", max_degree);
  nonneg("max_index", max_index);
  nonneg("level", level);
  nonneg("max_level", max_level);
  nonneg("rank_level", rank_level);
  nonneg("sle_runs", sle_runs);
  nonneg("extra_order", extra_order);
  for (auto [key, text] : {std::pair{"kappa", &kappa}, std::pair{"lambda", &lambda}}) {
    try {
      sym::parse_rational(*text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
  }
  if (sym::parse_rational(kappa) <= 0) throw ConfigError("kappa must be positive");
  if (format != "json" && format != "text") throw ConfigError("format must be json or text");
  if (!(tolerance > 0)) throw ConfigError("tolerance must be positive");
  if (!(dt > 0) || !(sle_dt > 0) || !(t_max >= 0)) throw ConfigError("need dt > 0, sle_dt > 0, t_max >= 0");
  if (!(q > 0 && q <= 0.99)) throw ConfigError("q must lie in (0, 0.99]");
  if (!(radius > 0) || !(std::abs(x0) + radius < 1)) throw ConfigError("need radius > 0 and |x0| + radius < 1");
  if (!(dtheta > 0)) throw ConfigError("dtheta must be positive");
}

json RunConfig::to_json() const {
  return {{"max_mode", max_mode},   {"max_degree", max_degree}, {"max_index", max_index},
          {"level", level},         {"max_level", max_level},   {"rank_level", rank_level},
          {"kappa", kappa},         {"lambda", lambda},         {"tolerance", tolerance},
          {"seed", seed},           {"cache_dir", cache_dir},   {"format", format},
          {"output", output},       {"csv", csv},               {"q", q},
          {"dtheta", dtheta},       {"x0", x0},                 {"radius", radius},
          {"theta", theta},         {"t_max", t_max},           {"dt", dt},
          {"sle_runs", sle_runs},   {"sle_dt", sle_dt},         {"extra_order", extra_order}};
}

void RunConfig::merge(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  json current = cfg.to_json();
  for (auto& [key, value] : j.items()) {
    if (!current.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    // Rationals may be given as numbers in JSON; keep them exact as text.
    if ((key == "kappa" || key == "lambda") && value.is_number_integer())
      current[key] = std::to_string(value.get<long>());
    else
      current[key] = value;
  }
  try {
    cfg.max_mode = current["max_mode"].get<int>();
    cfg.max_degree = current["max_degree"].get<int>();
    cfg.max_index = current["max_index"].get<int>();
    cfg.level = current["level"].get<int>();
    cfg.max_level = current["max_level"].get<int>();
    cfg.rank_level = current["rank_level"].get<int>();
    cfg.kappa = current["kappa"].get<std::string>();
    cfg.lambda = current["lambda"].get<std::string>();
    cfg.tolerance = current["tolerance"].get<double>();
    cfg.seed = current["seed"].get<std::uint64_t>();
    cfg.cache_dir = current["cache_dir"].get<std::string>();
    cfg.format = current["format"].get<std::string>();
    cfg.output = current["output"].get<std::string>();
    cfg.csv = current["csv"].get<std::string>();
    cfg.q = current["q"].get<double>();
    cfg.dtheta = current["dtheta"].get<double>();
    cfg.x0 = current["x0"].get<double>();
    cfg.radius = current["radius"].get<double>();
    cfg.theta = current["theta"].get<double>();
    cfg.t_max = current["t_max"].get<double>();
    cfg.dt = current["dt"].get<double>();
    cfg.sle_runs = current["sle_runs"].get<int>();
    cfg.sle_dt = current["sle_dt"].get<double>();
    cfg.extra_order = current["extra_order"].get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config value has the wrong type: ") + e.what());
  }
}

std::string to_string(Status s) { return s == Status::Pass ? "pass" : "fail"; }

Report::Report(std::string suite, json parameters) : suite_(std::move(suite)), parameters_(std::move(parameters)) {}

CheckRecord& Report::add(CheckRecord rec) {
  checks_.push_back(std::move(rec));
  return checks_.back();
}

CheckRecord& Report::run(const std::string& name, const std::function<CheckRecord()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord rec;
  try {
    rec = fn();
  } catch (const std::exception& e) {
    rec = fail(name, std::string("exception: ") + e.what());
  }
  if (rec.name.empty()) rec.name = name;
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return add(std::move(rec));
}

void Report::absorb(const Report& other) {
  for (auto& c : other.checks_) {
    CheckRecord copy = c;
    copy.name = other.suite_ + "/" + c.name;
    checks_.push_back(std::move(copy));
  }
}

bool Report::ok() const {
  for (auto& c : checks_)
    if (c.status == Status::Fail) return false;
  return true;
}

json Report::to_json() const {
  json checks = json::array();
  for (auto& c : checks_) {
    json rec = {{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}, {"seconds", c.seconds}};
    if (!c.data.empty()) rec["data"] = c.data;
    checks.push_back(std::move(rec));
  }
  json out = {{"schema_version", kSchemaVersion},
              {"suite", suite_},
              {"parameters", parameters_},
              {"checks", std::move(checks)},
              {"status", ok() ? "pass" : "fail"}};
  if (!extra_.empty()) out["results"] = extra_;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << suite_ << ": " << (ok() ? "PASS" : "FAIL") << '\n';
  for (auto& c : checks_) {
    os << "  [" << (c.status == Status::Pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.witness.empty()) os << " - " << c.witness;
    os << '\n';
  }
  if (!extra_.empty()) os << extra_.dump(2) << '\n';
  return os.str();
}

CheckRecord pass(std::string name, std::string witness) { return {std::move(name), Status::Pass, std::move(witness)}; }

CheckRecord fail(std::string name, std::string witness) { return {std::move(name), Status::Fail, std::move(witness)}; }

CheckRecord verdict(std::string name, bool ok, std::string witness) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness)};
}

}  // namespace slecft::report
