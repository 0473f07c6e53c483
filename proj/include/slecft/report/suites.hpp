#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "slecft/geom/operator_table.hpp"
#include "slecft/report/report.hpp"

namespace slecft::report {

class UnknownCommand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& command_names();

// Runs one named suite. The table may be pre-loaded from a cache.
Report run_command(const std::string& command, const RunConfig& cfg, geom::OperatorTable& table);

Report verify_commutators(const RunConfig& cfg, geom::OperatorTable& table);
Report gram(const RunConfig& cfg, geom::OperatorTable& table);
Report kac(const RunConfig& cfg);
Report singular(const RunConfig& cfg, geom::OperatorTable& table);
Report operators(const RunConfig& cfg, geom::OperatorTable& table);
Report reflection(const RunConfig& cfg);
Report bubble_limit(const RunConfig& cfg);
Report loewner_demo(const RunConfig& cfg);
// Acceptance criteria 1..12 at the configured caps.
Report report_all(const RunConfig& cfg, geom::OperatorTable& table);
CheckRecord criterion(int index, const RunConfig& cfg, geom::OperatorTable& table);

// Operator-table cache.
struct CacheLoad {
  bool loaded = false;
  std::string warning;  // set when a corrupt file was discarded
};
CacheLoad load_cache(geom::OperatorTable& table, const std::filesystem::path& dir);
Report cache_warm(const RunConfig& cfg, const std::filesystem::path& dir);
Report cache_stat(const std::filesystem::path& dir);
Report cache_clear(const std::filesystem::path& dir);

}  // namespace slecft::report
