#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slecft/symbolic/coeff_poly.hpp"

namespace slecft::sym {

// Cache files start with "SLCF", a format version byte and a record kind byte.
inline constexpr std::string_view kCacheMagic = "SLCF";
inline constexpr std::uint8_t kCacheFormatVersion = 1;

enum class RecordKind : std::uint8_t { Poly = 1, OperatorTable = 2 };

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VersionMismatch : public FormatError {
 public:
  using FormatError::FormatError;
};

class BinaryWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v);
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void str(std::string_view s);
  void rational(const Rational& r);
  void poly(const CoeffPoly& p);
  void header(RecordKind kind);

  const std::string& bytes() const { return buf_; }

 private:
  std::string buf_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::string_view data) : data_(data) {}
  std::uint8_t u8();
  std::uint32_t u32();
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  std::string str();
  Rational rational();
  CoeffPoly poly();
  // Throws FormatError on bad magic, VersionMismatch on another version,
  // FormatError when the kind differs from expected.
  void header(RecordKind expected);
  bool at_end() const { return pos_ == data_.size(); }

 private:
  std::string_view take(std::size_t n);
  std::string_view data_;
  std::size_t pos_ = 0;
};

std::string serialize_poly(const CoeffPoly& p);
CoeffPoly deserialize_poly(std::string_view bytes);

}  // namespace slecft::sym
