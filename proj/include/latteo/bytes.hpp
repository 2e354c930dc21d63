#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latteo {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

// Single error type for the whole stack. Messages carry the stable phrases
// callers and tests match on ("access denied", "integrity failure", ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(BytesView b) {
  return std::string(b.begin(), b.end());
}

inline Bytes concat(BytesView a, BytesView b) {
  Bytes out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string hex(BytesView b);

// Constant-pattern search used by transcript inspection in tests.
inline bool contains(BytesView haystack, BytesView needle) {
  if (needle.empty() || haystack.size() < needle.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::memcmp(haystack.data() + i, needle.data(), needle.size()) == 0) return true;
  }
  return false;
}

// Big-endian writer for canonical protocol encodings. Multi-byte integers are
// network order; variable fields are u32-length-prefixed.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v) {
    buf_.push_back(v);
    return *this;
  }
  ByteWriter& u16(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    buf_.push_back(static_cast<std::uint8_t>(v));
    return *this;
  }
  ByteWriter& u32(std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
    return *this;
  }
  ByteWriter& u64(std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
    return *this;
  }
  ByteWriter& raw(BytesView b) {
    buf_.insert(buf_.end(), b.begin(), b.end());
    return *this;
  }
  // u32 length prefix + raw bytes
  ByteWriter& var(BytesView b) {
    u32(static_cast<std::uint32_t>(b.size()));
    return raw(b);
  }
  ByteWriter& var(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    buf_.insert(buf_.end(), s.begin(), s.end());
    return *this;
  }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(BytesView b) : data_(b) {}

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
    pos_ += 8;
    return v;
  }
  Bytes raw(std::size_t n) {
    need(n);
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
  }
  Bytes var() {
    std::uint32_t n = u32();
    return raw(n);
  }
  std::string var_str() {
    Bytes b = var();
    return std::string(b.begin(), b.end());
  }
  Bytes rest() { return raw(data_.size() - pos_); }
  bool done() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }
  void expect_done() const {
    if (!done()) throw Error("decode failure: trailing bytes");
  }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > data_.size()) throw Error("decode failure: truncated input");
  }
  BytesView data_;
  std::size_t pos_ = 0;
};

// Weight vectors and dataset files use [u32 count][little-endian f64 ...].
Bytes encode_weights(std::span<const double> w);
std::vector<double> decode_weights(BytesView b);

}  // namespace latteo
