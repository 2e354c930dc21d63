#include "latteo/bytes.hpp"

#include <bit>

namespace latteo {

std::string hex(BytesView b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (std::uint8_t byte : b) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

Bytes encode_weights(std::span<const double> w) {
  Bytes out;
  out.reserve(4 + w.size() * 8);
  std::uint32_t n = static_cast<std::uint32_t>(w.size());
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
  for (double v : w) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  }
  return out;
}

std::vector<double> decode_weights(BytesView b) {
  if (b.size() < 4) throw Error("decode failure: weight vector truncated");
  std::uint32_t n = 0;
  for (int i = 3; i >= 0; --i) n = (n << 8) | b[i];
  if (b.size() != 4 + static_cast<std::size_t>(n) * 8)
    throw Error("decode failure: weight vector length mismatch");
  std::vector<double> out(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[4 + j * 8 + i];
    out[j] = std::bit_cast<double>(bits);
  }
  return out;
}

}  // namespace latteo
