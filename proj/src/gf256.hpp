#pragma once

#include <array>
#include <cstdint>

// GF(2^8) arithmetic with the AES reduction polynomial x^8+x^4+x^3+x+1,
// used for byte-wise Shamir sharing at THRESHOLD policy nodes.
namespace latteo::gf256 {

struct Tables {
  std::array<std::uint8_t, 256> log{};
  std::array<std::uint8_t, 512> exp{};
  constexpr Tables() {
    std::uint16_t x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[i] = static_cast<std::uint8_t>(x);
      log[x] = static_cast<std::uint8_t>(i);
      x <<= 1;
      if (x & 0x100) x ^= 0x11b;
    }
    for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
  }
};

inline constexpr Tables kTables{};

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  return kTables.exp[kTables.log[a] + kTables.log[b]];
}

inline std::uint8_t inv(std::uint8_t a) {
  // a != 0 required
  return kTables.exp[255 - kTables.log[a]];
}

inline std::uint8_t div(std::uint8_t a, std::uint8_t b) { return mul(a, inv(b)); }

// Evaluate polynomial with coefficients c[0..deg] (c[0] = constant term) at x.
inline std::uint8_t poly_eval(const std::uint8_t* coeff, std::size_t n, std::uint8_t x) {
  std::uint8_t acc = 0;
  for (std::size_t i = n; i-- > 0;) acc = static_cast<std::uint8_t>(mul(acc, x) ^ coeff[i]);
  return acc;
}

// Lagrange interpolation at x = 0 given k points (x_i, y_i), x_i distinct, nonzero.
inline std::uint8_t interpolate_at_zero(const std::uint8_t* xs, const std::uint8_t* ys,
                                        std::size_t k) {
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint8_t num = 1, den = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      num = mul(num, xs[j]);
      den = mul(den, static_cast<std::uint8_t>(xs[j] ^ xs[i]));
    }
    acc ^= mul(ys[i], div(num, den));
  }
  return acc;
}

}  // namespace latteo::gf256
