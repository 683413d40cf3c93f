// AArch64 variant; NEON is part of the base ISA there.

#include <arm_neon.h>

#include "sqdiff/simd/pair_filter.hpp"
#include "sqdiff/square_filter.hpp"

namespace sqdiff::simd {

namespace {

inline uint8x16_t lookup(uint8x16_t bitmap, uint8x16_t bit_of, uint8x16_t d) {
  const uint8x16_t byte = vqtbl1q_u8(bitmap, vshrq_n_u8(d, 3));
  const uint8x16_t bit = vqtbl1q_u8(bit_of, vandq_u8(d, vdupq_n_u8(7)));
  return vtstq_u8(byte, bit);
}

inline uint8x16_t sub_mod(uint8x16_t y, uint8x16_t z, uint8x16_t m) {
  const uint8x16_t d = vsubq_u8(y, z);
  const uint8x16_t wrapped = vcltq_u8(y, z);
  return vaddq_u8(d, vandq_u8(wrapped, m));
}

}  // namespace

std::size_t pair_filter_neon(Residue4 y, ResidueView z, std::uint32_t* out) {
  static constexpr auto bm64 = residue::square_bitmap<64>();
  static constexpr auto bm63 = residue::square_bitmap<63>();
  static constexpr auto bm65 = residue::square_bitmap<65>();
  static constexpr auto bm11 = residue::square_bitmap<11>();
  static constexpr std::uint8_t bits[16] = {1, 2, 4, 8, 16, 32, 64, 128, 0, 0, 0, 0, 0, 0, 0, 0};

  const uint8x16_t t64 = vld1q_u8(bm64.data());
  const uint8x16_t t63 = vld1q_u8(bm63.data());
  const uint8x16_t t65 = vld1q_u8(bm65.data());
  const uint8x16_t t11 = vld1q_u8(bm11.data());
  const uint8x16_t bit_of = vld1q_u8(bits);

  std::size_t n = 0;
  std::size_t j = 0;
  for (; j + 16 <= z.size; j += 16) {
    const uint8x16_t d64 = vandq_u8(vsubq_u8(vdupq_n_u8(y.m64), vld1q_u8(z.m64 + j)), vdupq_n_u8(63));
    uint8x16_t ok = lookup(t64, bit_of, d64);
    ok = vandq_u8(ok, lookup(t63, bit_of, sub_mod(vdupq_n_u8(y.m63), vld1q_u8(z.m63 + j), vdupq_n_u8(63))));
    ok = vandq_u8(ok, lookup(t65, bit_of, sub_mod(vdupq_n_u8(y.m65), vld1q_u8(z.m65 + j), vdupq_n_u8(65))));
    ok = vandq_u8(ok, lookup(t11, bit_of, sub_mod(vdupq_n_u8(y.m11), vld1q_u8(z.m11 + j), vdupq_n_u8(11))));
    if (vmaxvq_u8(ok) == 0) continue;
    std::uint8_t lanes[16];
    vst1q_u8(lanes, ok);
    for (std::size_t k = 0; k < 16; ++k)
      if (lanes[k]) out[n++] = static_cast<std::uint32_t>(j + k);
  }
  if (j < z.size) {
    const ResidueView rest{z.m64 + j, z.m63 + j, z.m65 + j, z.m11 + j, z.size - j};
    const std::size_t k = pair_filter_scalar(y, rest, out + n);
    for (std::size_t i = 0; i < k; ++i) out[n + i] += static_cast<std::uint32_t>(j);
    n += k;
  }
  return n;
}

}  // namespace sqdiff::simd
