#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slecft::report {

inline constexpr int kSchemaVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One flat namespace; keys match the long CLI flags with '-' replaced by '_'.
struct RunConfig {
  int max_mode = 4;
  int max_degree = 6;
  int max_index = 8;
  int level = 2;
  int max_level = 5;
  int rank_level = 4;
  std::string kappa = "3";
  std::string lambda = "1/3";
  double tolerance = 1e-4;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string format = "json";
  std::string output;
  std::string csv;
  // numeric suites
  double q = 0.3;
  double dtheta = 1e-3;
  double x0 = 0.3;
  double radius = 0.2;
  double theta = 0.7;
  double t_max = 1.0;
  double dt = 1e-4;
  int sle_runs = 10000;
  double sle_dt = 0.01;
  int extra_order = 4;

  // Throws ConfigError on negative caps, bad rationals or unknown formats.
  void validate() const;
  nlohmann::json to_json() const;
  // Unknown keys raise ConfigError.
  static void merge(RunConfig& cfg, const nlohmann::json& j);
};

enum class Status { Pass, Fail };

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
  double seconds = 0;
  nlohmann::json data = nlohmann::json::object();
};

class Report {
 public:
  Report(std::string suite, nlohmann::json parameters);

  CheckRecord& add(CheckRecord rec);
  // Times fn; an exception becomes a failing record carrying its message.
  CheckRecord& run(const std::string& name, const std::function<CheckRecord()>& fn);
  void absorb(const Report& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  nlohmann::json& extra() { return extra_; }
  bool ok() const;
  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  nlohmann::json parameters_;
  nlohmann::json extra_ = nlohmann::json::object();
  std::vector<CheckRecord> checks_;
};

CheckRecord pass(std::string name, std::string witness = {});
CheckRecord fail(std::string name, std::string witness);
CheckRecord verdict(std::string name, bool ok, std::string witness);

std::string to_string(Status s);

}  // namespace slecft::report
