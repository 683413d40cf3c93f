#pragma once

// Quadratic-residue tables shared by the scalar square tests and the
// vectorized pair filter, plus the 64-bit integer square-root fast path.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>

namespace sqdiff::residue {

inline constexpr std::uint32_t kModuli[4] = {64, 63, 65, 11};

template <std::uint32_t M>
consteval std::array<bool, M> square_table() {
  std::array<bool, M> t{};
  for (std::uint32_t r = 0; r < M; ++r) t[(r * r) % M] = true;
  return t;
}

inline constexpr auto kSquares64 = square_table<64>();
inline constexpr auto kSquares63 = square_table<63>();
inline constexpr auto kSquares65 = square_table<65>();
inline constexpr auto kSquares11 = square_table<11>();

/// 128-bit membership bitmap of the squares mod M, byte i holding residues
/// 8i..8i+7 (bit j <-> residue 8i+j). Layout used by the byte-shuffle kernels.
template <std::uint32_t M>
consteval std::array<std::uint8_t, 16> square_bitmap() {
  std::array<std::uint8_t, 16> b{};
  const auto t = square_table<M>();
  for (std::uint32_t r = 0; r < M; ++r)
    if (t[r]) b[r / 8] = static_cast<std::uint8_t>(b[r / 8] | (1u << (r % 8)));
  return b;
}

// 45045 = 63 * 65 * 11
inline bool passes(std::uint64_t n) noexcept {
  if (!kSquares64[n & 63]) return false;
  const auto r = static_cast<std::uint32_t>(n % 45045);
  return kSquares63[r % 63] && kSquares65[r % 65] && kSquares11[r % 11];
}

}  // namespace sqdiff::residue

namespace sqdiff {

/// floor(sqrt(n)) by Newton iteration from an over-estimate; integer only.
constexpr std::uint64_t isqrt_u64(std::uint64_t n) noexcept {
  if (n < 2) return n;
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);  // x >= sqrt(n)
  for (;;) {
    const std::uint64_t y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

/// Root of n when n is a perfect square. No residue prefilter.
constexpr std::optional<std::uint64_t> exact_sqrt_u64_plain(std::uint64_t n) noexcept {
  const std::uint64_t r = isqrt_u64(n);
  if (r * r == n) return r;
  return std::nullopt;
}

/// Root of n when n is a perfect square, rejecting most non-squares by residue.
inline std::optional<std::uint64_t> exact_sqrt_u64(std::uint64_t n) noexcept {
  if (!residue::passes(n)) return std::nullopt;
  return exact_sqrt_u64_plain(n);
}

}  // namespace sqdiff
