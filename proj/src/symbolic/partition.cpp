#include "slecft/symbolic/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace slecft::sym {

Partition Partition::from_multiplicities(std::vector<std::uint32_t> k) {
  while (!k.empty() && k.back() == 0) k.pop_back();
  Partition p;
  p.k_ = std::move(k);
  for (std::size_t m = 0; m < p.k_.size(); ++m) p.weight_ += static_cast<int>((m + 1) * p.k_[m]);
  return p;
}

Partition Partition::from_parts(const std::vector<int>& parts) {
  std::vector<std::uint32_t> k;
  for (int part : parts) {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (k.size() < static_cast<std::size_t>(part)) k.resize(static_cast<std::size_t>(part), 0);
    ++k[static_cast<std::size_t>(part - 1)];
  }
  return from_multiplicities(std::move(k));
}

std::uint32_t Partition::multiplicity(int m) const {
  if (m < 1 || static_cast<std::size_t>(m) > k_.size()) return 0;
  return k_[static_cast<std::size_t>(m - 1)];
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (int m = static_cast<int>(k_.size()); m >= 1; --m)
    for (std::uint32_t r = 0; r < k_[static_cast<std::size_t>(m - 1)]; ++r) out.push_back(m);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t m = 0; m < k_.size(); ++m) {
    if (m) s += ",";
    s += std::to_string(k_[m]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int N) {
  if (N < 0) throw std::invalid_argument("partitions_of: N must be >= 0");
  std::vector<Partition> out;
  std::vector<std::uint32_t> k(static_cast<std::size_t>(N), 0);
  // Enumerate k_1 from high to low, then k_2, ...: this yields the descending
  // lexicographic order directly.
  std::function<void(int, int)> rec = [&](int m, int remaining) {
    if (remaining == 0) {
      out.push_back(Partition::from_multiplicities(k));
      return;
    }
    if (m > N) return;
    for (int km = remaining / m; km >= 0; --km) {
      k[static_cast<std::size_t>(m - 1)] = static_cast<std::uint32_t>(km);
      rec(m + 1, remaining - km * m);
    }
    k[static_cast<std::size_t>(m - 1)] = 0;
  };
  rec(1, N);
  return out;
}

}  // namespace slecft::sym
