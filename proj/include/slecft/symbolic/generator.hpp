#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace slecft::sym {

enum class GenKind : std::uint8_t { A = 0, ABAR = 1, LAMBDA = 2, CC = 3 };

// One polynomial variable. The packed key orders A(1) < A(2) < ... < ABAR(1) < ...
// < LAMBDA < CC, which is the variable order used by the monomial ordering.
class Generator {
 public:
  static Generator a(std::uint32_t m);
  static Generator abar(std::uint32_t m);
  static Generator lambda() { return Generator(GenKind::LAMBDA, 0); }
  static Generator cc() { return Generator(GenKind::CC, 0); }
  static Generator from_key(std::uint32_t key);
  // "a3", "abar3", "lambda", "c"
  static Generator parse(std::string_view name);

  GenKind kind() const { return static_cast<GenKind>(key_ >> 24); }
  std::uint32_t index() const { return key_ & 0xFFFFFFu; }
  std::uint32_t key() const { return key_; }
  bool is_coordinate() const { return kind() == GenKind::A || kind() == GenKind::ABAR; }
  // a_m <-> abar_m; lambda and c are fixed.
  Generator mirrored() const;
  std::string name() const;

  auto operator<=>(const Generator&) const = default;

 private:
  Generator(GenKind k, std::uint32_t idx) : key_((static_cast<std::uint32_t>(k) << 24) | idx) {}
  std::uint32_t key_;
};

inline std::uint32_t mirror_key(std::uint32_t key) {
  auto kind = key >> 24;
  if (kind == 0) return key | (1u << 24);
  if (kind == 1) return key & 0xFFFFFFu;
  return key;
}

}  // namespace slecft::sym
