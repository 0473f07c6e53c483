#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "slecft/geom/builders.hpp"
#include "slecft/geom/operator_table.hpp"
#include "slecft/symbolic/binary_io.hpp"

using namespace slecft;
using namespace slecft::geom;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("slecft_table_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_all(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << s;
}

}  // namespace

TEST(OperatorTable, GrowsOnDemand) {
  OperatorTable t;
  EXPECT_EQ(t.get(Family::L, -2, 3).max_index, 3);
  EXPECT_EQ(t.size(), 1u);
  DiffOperator big = t.get(Family::L, -2, 5);
  EXPECT_GE(big.max_index, 5);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(first_difference(big, build_L(-2, 5), 5), "");
  // applying to a state with a high coordinate grows the operator
  StatePoly s = StatePoly::monomial(sym::Monomial(Generator::a(7)));
  t.apply(Family::L, 1, s);
  EXPECT_GE(t.get(Family::L, 1, 0).max_index, 7);
  t.clear();
  EXPECT_EQ(t.size(), 0u);
}

TEST(OperatorTable, RecursionRouteMatchesResidueRoute) {
  OperatorTable res(NegativeModeRoute::Residue), rec(NegativeModeRoute::Recursion);
  for (int n = -5; n <= -3; ++n) {
    DiffOperator a = res.get(Family::L, n, 4), b = rec.get(Family::L, n, 4);
    EXPECT_EQ(first_difference(a, b, 4), "") << n;
    EXPECT_EQ(b.provenance.route, BuildRoute::Recursion);
    EXPECT_EQ(first_difference(res.get(Family::Lbar, n, 4), rec.get(Family::Lbar, n, 4), 4), "") << n;
  }
}

TEST(OperatorTable, CacheRoundTrip) {
  fs::path dir = scratch("roundtrip");
  OperatorTable t;
  for (int n = -3; n <= 3; ++n) {
    t.get(Family::L, n, 4);
    t.get(Family::Lbar, n, 4);
  }
  fs::path file = operator_cache_file(dir);
  t.save(file);
  OperatorTable u;
  ASSERT_TRUE(u.load(file));
  EXPECT_EQ(u.size(), t.size());
  for (int n = -3; n <= 3; ++n) EXPECT_EQ(u.get(Family::L, n, 4), t.get(Family::L, n, 4)) << n;
  fs::remove_all(dir);
}

TEST(OperatorTable, MissingStaleAndForeignCaches) {
  fs::path dir = scratch("stale");
  OperatorTable t;
  EXPECT_FALSE(t.load(dir / "absent.slcf"));

  OperatorTable src;
  src.get(Family::L, -2, 3);
  fs::path file = operator_cache_file(dir);
  src.save(file);

  // other negative-mode route
  OperatorTable rec(NegativeModeRoute::Recursion);
  EXPECT_FALSE(rec.load(file));
  EXPECT_EQ(rec.size(), 0u);

  // other format version
  std::string bytes = read_all(file);
  bytes[4] = static_cast<char>(sym::kCacheFormatVersion + 1);
  write_all(file, bytes);
  EXPECT_FALSE(t.load(file));
  EXPECT_EQ(t.size(), 0u);
  fs::remove_all(dir);
}

TEST(OperatorTable, CorruptCacheThrowsAndLeavesTableUntouched) {
  fs::path dir = scratch("corrupt");
  OperatorTable src;
  src.get(Family::L, 2, 3);
  fs::path file = operator_cache_file(dir);
  src.save(file);
  std::string good = read_all(file);

  OperatorTable t;
  t.get(Family::L, 0, 2);
  write_all(file, "garbage");
  EXPECT_THROW(t.load(file), sym::FormatError);
  write_all(file, good.substr(0, good.size() / 2));
  EXPECT_THROW(t.load(file), sym::FormatError);
  write_all(file, good + "x");
  EXPECT_THROW(t.load(file), sym::FormatError);
  EXPECT_EQ(t.size(), 1u);
  fs::remove_all(dir);
}

TEST(OperatorTable, ConcurrentLookups) {
  OperatorTable t;
  std::vector<std::thread> workers;
  std::vector<DiffOperator> got(6);
  for (int i = 0; i < 6; ++i)
    workers.emplace_back([&, i] { got[static_cast<std::size_t>(i)] = t.get(Family::L, -3, 3 + i % 2); });
  for (auto& w : workers) w.join();
  for (auto& op : got) EXPECT_EQ(first_difference(op, build_L(-3, 3), 3), "");
  EXPECT_EQ(t.size(), 1u);
}
