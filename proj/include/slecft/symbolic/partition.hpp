#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace slecft::sym {

// Integer partition stored as multiplicities: mult()[m-1] = k_m.
class Partition {
 public:
  Partition() = default;
  static Partition from_multiplicities(std::vector<std::uint32_t> k);
  // Parts in any order, e.g. {2, 1, 1}.
  static Partition from_parts(const std::vector<int>& parts);

  const std::vector<std::uint32_t>& mult() const { return k_; }
  std::uint32_t multiplicity(int m) const;
  int weight() const { return weight_; }
  bool empty() const { return k_.empty(); }
  int largest_part() const { return static_cast<int>(k_.size()); }
  // Parts in non-increasing order.
  std::vector<int> parts() const;

  // "[2,1]" style multiplicity listing; "[]" for the empty partition.
  std::string to_string() const;

  auto operator<=>(const Partition& o) const { return k_ <=> o.k_; }
  bool operator==(const Partition& o) const { return k_ == o.k_; }

 private:
  std::vector<std::uint32_t> k_;
  int weight_ = 0;
};

// All partitions of N, ordered by descending lexicographic comparison of the
// multiplicity vectors (k_1, k_2, ...). N = 2 gives [(1,1), (2)].
std::vector<Partition> partitions_of(int N);

}  // namespace slecft::sym
