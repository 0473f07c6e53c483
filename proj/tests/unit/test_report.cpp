#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "slecft/geom/operator_table.hpp"
#include "slecft/report/report.hpp"
#include "slecft/report/suites.hpp"

using namespace slecft;
using namespace slecft::report;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("slecft_report_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const CheckRecord& find(const Report& r, const std::string& name) {
  for (auto& c : r.checks())
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

}  // namespace

TEST(RunConfig, DefaultsValidateAndRoundTrip) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  RunConfig copy;
  copy.max_mode = 1;
  RunConfig::merge(copy, cfg.to_json());
  EXPECT_EQ(copy.to_json(), cfg.to_json());
}

TEST(RunConfig, MergeOverridesAndRejects) {
  RunConfig cfg;
  RunConfig::merge(cfg, json{{"kappa", 4}, {"lambda", "-1/2"}, {"seed", 9}, {"q", 0.5}});
  EXPECT_EQ(cfg.kappa, "4");
  EXPECT_EQ(cfg.lambda, "-1/2");
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_DOUBLE_EQ(cfg.q, 0.5);
  EXPECT_THROW(RunConfig::merge(cfg, json{{"no_such_key", 1}}), ConfigError);
  EXPECT_THROW(RunConfig::merge(cfg, json{{"max_mode", "four"}}), ConfigError);
  EXPECT_THROW(RunConfig::merge(cfg, json::array()), ConfigError);
}

TEST(RunConfig, ValidateRejectsBadValues) {
  auto bad = [](json j) {
    RunConfig cfg;
    RunConfig::merge(cfg, j);
    return cfg;
  };
  EXPECT_THROW(bad({{"max_mode", -1}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"kappa", "x/y"}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"kappa", "-3"}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"lambda", "1/0"}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"format", "xml"}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"q", 1.5}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"x0", 0.9}, {"radius", 0.2}}).validate(), ConfigError);
  EXPECT_THROW(bad({{"tolerance", 0.0}}).validate(), ConfigError);
}

TEST(Report, JsonShapeAndStatus) {
  Report rep("demo", {{"p", 1}});
  rep.add(pass("a", "fine"));
  EXPECT_TRUE(rep.ok());
  rep.run("b", []() -> CheckRecord { throw std::runtime_error("boom"); });
  EXPECT_FALSE(rep.ok());
  rep.extra()["value"] = 3;
  json j = rep.to_json();
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["parameters"]["p"], 1);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["results"]["value"], 3);
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["name"], "b");
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_NE(j["checks"][1]["witness"].get<std::string>().find("boom"), std::string::npos);
  EXPECT_NE(rep.to_text().find("FAIL"), std::string::npos);

  Report outer("all", json::object());
  outer.absorb(rep);
  EXPECT_EQ(outer.checks().front().name, "demo/a");
  EXPECT_FALSE(outer.ok());
}

TEST(Suites, KacRootsAtKappaThree) {
  RunConfig cfg;
  geom::OperatorTable t;
  Report r = run_command("kac", cfg, t);
  EXPECT_TRUE(r.ok());
  json roots = r.to_json()["results"]["roots"];
  std::set<std::string> got(roots.begin(), roots.end());
  EXPECT_EQ(got, (std::set<std::string>{"0", "1/16", "1/2"}));
  EXPECT_EQ(r.to_json()["results"]["central_charge"], "1/2");
}

TEST(Suites, UnknownCommand) {
  RunConfig cfg;
  geom::OperatorTable t;
  EXPECT_THROW(run_command("nope", cfg, t), UnknownCommand);
  EXPECT_EQ(command_names().size(), 9u);
}

TEST(Suites, GramAndSingular) {
  RunConfig cfg;
  geom::OperatorTable t;
  EXPECT_TRUE(run_command("gram", cfg, t).ok());
  RunConfig::merge(cfg, json{{"lambda", "1/2"}});
  Report singular_gram = run_command("gram", cfg, t);
  EXPECT_TRUE(singular_gram.ok());
  EXPECT_TRUE(find(singular_gram, "B B^-1 = I").data["singular"].get<bool>());
  EXPECT_TRUE(run_command("singular", cfg, t).ok());
}

TEST(Suites, NumericSuitesPassAndFailHonestly) {
  RunConfig cfg;
  geom::OperatorTable t;
  EXPECT_TRUE(run_command("reflection", cfg, t).ok());
  EXPECT_TRUE(run_command("bubble-limit", cfg, t).ok());
  RunConfig strict = cfg;
  strict.tolerance = 1e-12;
  EXPECT_FALSE(run_command("bubble-limit", strict, t).ok());
}

TEST(Suites, QuickCriteria) {
  RunConfig cfg;
  geom::OperatorTable t;
  for (int i : {2, 3, 4, 6, 9, 10}) {
    CheckRecord rec = criterion(i, cfg, t);
    EXPECT_EQ(rec.status, Status::Pass) << i << ": " << rec.witness;
  }
  EXPECT_THROW(criterion(13, cfg, t), std::out_of_range);
}

TEST(Cache, WarmStatClearAndCorruptFile) {
  fs::path dir = scratch("cache");
  RunConfig cfg;
  cfg.max_mode = 2;
  cfg.max_index = 4;
  Report warm = cache_warm(cfg, dir);
  EXPECT_TRUE(warm.ok());
  fs::path file = geom::operator_cache_file(dir);
  ASSERT_TRUE(fs::exists(file));

  Report stat = cache_stat(dir);
  json js = stat.to_json()["results"];
  EXPECT_TRUE(js["present"].get<bool>());
  EXPECT_EQ(js["operators"].size(), 10u);

  geom::OperatorTable t;
  CacheLoad l = load_cache(t, dir);
  EXPECT_TRUE(l.loaded);
  EXPECT_TRUE(l.warning.empty());
  EXPECT_EQ(t.size(), 10u);

  { std::ofstream(file) << "corrupt"; }
  geom::OperatorTable u;
  CacheLoad bad = load_cache(u, dir);
  EXPECT_FALSE(bad.loaded);
  EXPECT_FALSE(bad.warning.empty());
  EXPECT_TRUE(fs::exists(file));  // only rebuilt by an explicit warm
  Report rewarm = cache_warm(cfg, dir);
  EXPECT_TRUE(rewarm.ok());
  EXPECT_TRUE(rewarm.extra().contains("warning"));
  EXPECT_TRUE(load_cache(u, dir).loaded);

  { std::ofstream(dir / "unrelated.txt") << "keep me"; }
  EXPECT_TRUE(cache_clear(dir).ok());
  EXPECT_FALSE(fs::exists(file));
  EXPECT_TRUE(fs::exists(dir / "unrelated.txt"));
  fs::remove_all(dir);
}
