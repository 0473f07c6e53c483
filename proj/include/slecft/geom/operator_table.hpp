#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "slecft/geom/diff_operator.hpp"

namespace slecft::geom {

enum class NegativeModeRoute { Residue, Recursion };

// Lazily built L_n / Lbar_n, grown on demand when a larger index range is
// requested. Lookups take a shared lock; construction happens outside it.
class OperatorTable {
 public:
  explicit OperatorTable(NegativeModeRoute route = NegativeModeRoute::Residue) : route_(route) {}

  // Operator with max_index >= min_index (built or grown if needed).
  DiffOperator get(Family f, int mode, int min_index);
  // Applies the operator, growing it to the state's coordinate range.
  StatePoly apply(Family f, int mode, const StatePoly& s);

  struct Entry {
    Family family;
    int mode;
    int max_index;
    Provenance provenance;
  };
  std::vector<Entry> entries() const;
  std::size_t size() const;
  void clear();
  NegativeModeRoute route() const { return route_; }

  // Versioned binary cache. load() returns false (and leaves the table
  // untouched) for a missing file, a stale format version or a cache built
  // with the other negative-mode route; it throws
  // sym::FormatError for a corrupt file.
  void save(const std::filesystem::path& file) const;
  bool load(const std::filesystem::path& file);

 private:
  DiffOperator build(Family f, int mode, int max_index) const;
  NegativeModeRoute route_;
  mutable std::shared_mutex mu_;
  std::map<std::pair<int, int>, DiffOperator> ops_;  // (family, mode)
};

// Default file name inside a cache directory.
std::filesystem::path operator_cache_file(const std::filesystem::path& dir);

}  // namespace slecft::geom
