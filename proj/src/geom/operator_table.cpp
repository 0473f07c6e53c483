#include "slecft/geom/operator_table.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "slecft/geom/builders.hpp"
#include "slecft/symbolic/binary_io.hpp"

namespace slecft::geom {

DiffOperator OperatorTable::build(Family f, int mode, int max_index) const {
  DiffOperator op;
  if (mode <= -3 && route_ == NegativeModeRoute::Recursion)
    op = build_by_recursion(mode, max_index);
  else
    op = build_L(mode, max_index);
  return f == Family::L ? op : mirrored(op);
}

DiffOperator OperatorTable::get(Family f, int mode, int min_index) {
  min_index = std::max(min_index, 1);
  const auto key = std::make_pair(static_cast<int>(f), mode);
  {
    std::shared_lock lock(mu_);
    auto it = ops_.find(key);
    if (it != ops_.end() && it->second.max_index >= min_index) return it->second;
  }
  DiffOperator op = build(f, mode, min_index);
  std::unique_lock lock(mu_);
  auto it = ops_.find(key);
  if (it == ops_.end() || it->second.max_index < op.max_index) ops_[key] = op;
  return ops_[key];
}

StatePoly OperatorTable::apply(Family f, int mode, const StatePoly& s) {
  int need = static_cast<int>(s.poly.max_coordinate_index());
  return geom::apply(get(f, mode, need), s);
}

std::vector<OperatorTable::Entry> OperatorTable::entries() const {
  std::shared_lock lock(mu_);
  std::vector<Entry> out;
  for (auto& [key, op] : ops_) out.push_back({op.family, op.mode, op.max_index, op.provenance});
  return out;
}

std::size_t OperatorTable::size() const {
  std::shared_lock lock(mu_);
  return ops_.size();
}

void OperatorTable::clear() {
  std::unique_lock lock(mu_);
  ops_.clear();
}

void OperatorTable::save(const std::filesystem::path& file) const {
  sym::BinaryWriter w;
  w.header(sym::RecordKind::OperatorTable);
  std::shared_lock lock(mu_);
  w.u8(static_cast<std::uint8_t>(route_));
  w.u32(static_cast<std::uint32_t>(ops_.size()));
  for (auto& [key, op] : ops_) {
    w.u8(static_cast<std::uint8_t>(op.family));
    w.i32(op.mode);
    w.i32(op.max_index);
    w.u8(static_cast<std::uint8_t>(op.provenance.route));
    w.i32(op.provenance.series_order);
    w.poly(op.e);
    w.poly(op.scalar);
    w.u32(static_cast<std::uint32_t>(op.derivations.size()));
    for (auto& [k, c] : op.derivations) {
      w.u32(k);
      w.poly(c);
    }
  }
  lock.unlock();
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
  }
  std::filesystem::rename(tmp, file);
}

bool OperatorTable::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string data = ss.str();
  sym::BinaryReader r(data);
  try {
    r.header(sym::RecordKind::OperatorTable);
  } catch (const sym::VersionMismatch&) {
    return false;
  }
  std::map<std::pair<int, int>, DiffOperator> loaded;
  auto route = r.u8();
  if (route > 1) throw sym::FormatError("bad route tag in operator cache");
  if (static_cast<NegativeModeRoute>(route) != route_) return false;
  auto count = r.u32();
  for (std::uint32_t i = 0; i < count; ++i) {
    DiffOperator op;
    auto fam = r.u8();
    if (fam > 1) throw sym::FormatError("bad family tag in operator cache");
    op.family = static_cast<Family>(fam);
    op.mode = r.i32();
    op.max_index = r.i32();
    auto pr = r.u8();
    if (pr > 4) throw sym::FormatError("bad provenance tag in operator cache");
    op.provenance.route = static_cast<BuildRoute>(pr);
    op.provenance.series_order = r.i32();
    op.e = r.poly();
    op.scalar = r.poly();
    auto nd = r.u32();
    for (std::uint32_t d = 0; d < nd; ++d) {
      auto k = r.u32();
      if ((k >> 24) > 1) throw sym::FormatError("bad derivation key in operator cache");
      op.derivations[k] = r.poly();
    }
    loaded[{static_cast<int>(op.family), op.mode}] = std::move(op);
  }
  if (!r.at_end()) throw sym::FormatError("trailing bytes in operator cache");
  std::unique_lock lock(mu_);
  for (auto& [key, op] : loaded) {
    auto it = ops_.find(key);
    if (it == ops_.end() || it->second.max_index < op.max_index) ops_[key] = std::move(op);
  }
  return true;
}

std::filesystem::path operator_cache_file(const std::filesystem::path& dir) { return dir / "operators.slcf"; }

}  // namespace slecft::geom
