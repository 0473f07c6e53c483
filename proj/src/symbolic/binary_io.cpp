#include "slecft/symbolic/binary_io.hpp"

namespace slecft::sym {

void BinaryWriter::u32(std::uint32_t v) {
  for (int k = 0; k < 4; ++k) buf_.push_back(static_cast<char>((v >> (8 * k)) & 0xFFu));
}

void BinaryWriter::str(std::string_view s) {
  u32(static_cast<std::uint32_t>(s.size()));
  buf_.append(s);
}

void BinaryWriter::rational(const Rational& r) {
  str(r.get_num().get_str(16));
  str(r.get_den().get_str(16));
}

void BinaryWriter::poly(const CoeffPoly& p) {
  u32(static_cast<std::uint32_t>(p.size()));
  for (auto& t : p.terms()) {
    u32(static_cast<std::uint32_t>(t.mono.powers().size()));
    for (auto& v : t.mono.powers()) {
      u32(v.key);
      u32(v.exp);
    }
    rational(t.coef);
  }
}

void BinaryWriter::header(RecordKind kind) {
  buf_.append(kCacheMagic);
  u8(kCacheFormatVersion);
  u8(static_cast<std::uint8_t>(kind));
}

std::string_view BinaryReader::take(std::size_t n) {
  if (data_.size() - pos_ < n) throw FormatError("truncated cache record");
  auto s = data_.substr(pos_, n);
  pos_ += n;
  return s;
}

std::uint8_t BinaryReader::u8() { return static_cast<std::uint8_t>(take(1)[0]); }

std::uint32_t BinaryReader::u32() {
  auto s = take(4);
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[static_cast<std::size_t>(k)])) << (8 * k);
  return v;
}

std::string BinaryReader::str() {
  auto n = u32();
  return std::string(take(n));
}

Rational BinaryReader::rational() {
  std::string num = str(), den = str();
  Rational r;
  try {
    r = Rational(Integer(num, 16), Integer(den, 16));
  } catch (const std::invalid_argument&) {
    throw FormatError("bad rational in cache record");
  }
  if (r.get_den() == 0) throw FormatError("zero denominator in cache record");
  r.canonicalize();
  return r;
}

CoeffPoly BinaryReader::poly() {
  auto nterms = u32();
  std::vector<Term> terms;
  terms.reserve(nterms);
  for (std::uint32_t t = 0; t < nterms; ++t) {
    auto nv = u32();
    Monomial m;
    for (std::uint32_t k = 0; k < nv; ++k) {
      auto key = u32();
      auto exp = u32();
      try {
        m = m * Monomial(Generator::from_key(key), exp);
      } catch (const std::invalid_argument&) {
        throw FormatError("bad generator key in cache record");
      }
    }
    terms.push_back({m, rational()});
  }
  return CoeffPoly::from_terms(std::move(terms));
}

void BinaryReader::header(RecordKind expected) {
  if (take(kCacheMagic.size()) != kCacheMagic) throw FormatError("bad cache magic");
  auto version = u8();
  if (version != kCacheFormatVersion)
    throw VersionMismatch("cache format version " + std::to_string(version) + " (expected " +
                          std::to_string(kCacheFormatVersion) + ")");
  if (u8() != static_cast<std::uint8_t>(expected)) throw FormatError("unexpected cache record kind");
}

std::string serialize_poly(const CoeffPoly& p) {
  BinaryWriter w;
  w.header(RecordKind::Poly);
  w.poly(p);
  return w.bytes();
}

CoeffPoly deserialize_poly(std::string_view bytes) {
  BinaryReader r(bytes);
  r.header(RecordKind::Poly);
  CoeffPoly p = r.poly();
  if (!r.at_end()) throw FormatError("trailing bytes after polynomial record");
  return p;
}

}  // namespace slecft::sym
