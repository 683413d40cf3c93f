// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "sqdiff/simd/pair_filter.hpp"
#include "sqdiff/square_filter.hpp"

namespace sqdiff::simd {

namespace {

inline __m256i load_bitmap(const std::array<std::uint8_t, 16>& bm) {
  return _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(bm.data())));
}

// 0xFF in each lane whose residue d (0..127) is set in the bitmap.
inline __m256i lookup(__m256i bitmap, __m256i bit_of, __m256i d) {
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(d, 3), _mm256_set1_epi8(0x0F));
  const __m256i lo = _mm256_and_si256(d, _mm256_set1_epi8(0x07));
  const __m256i byte = _mm256_shuffle_epi8(bitmap, hi);
  const __m256i bit = _mm256_shuffle_epi8(bit_of, lo);
  return _mm256_cmpeq_epi8(_mm256_and_si256(byte, bit), bit);
}

// (y - z) mod m for residues in [0, m), m <= 127, as signed bytes.
inline __m256i sub_mod(__m256i y, __m256i z, __m256i m) {
  const __m256i d = _mm256_sub_epi8(y, z);
  const __m256i neg = _mm256_cmpgt_epi8(_mm256_setzero_si256(), d);
  return _mm256_add_epi8(d, _mm256_and_si256(neg, m));
}

}  // namespace

std::size_t pair_filter_avx2(Residue4 y, ResidueView z, std::uint32_t* out) {
  static constexpr auto bm64 = residue::square_bitmap<64>();
  static constexpr auto bm63 = residue::square_bitmap<63>();
  static constexpr auto bm65 = residue::square_bitmap<65>();
  static constexpr auto bm11 = residue::square_bitmap<11>();

  const __m256i t64 = load_bitmap(bm64);
  const __m256i t63 = load_bitmap(bm63);
  const __m256i t65 = load_bitmap(bm65);
  const __m256i t11 = load_bitmap(bm11);
  const __m256i bit_of = _mm256_setr_epi8(1, 2, 4, 8, 16, 32, 64, -128, 0, 0, 0, 0, 0, 0, 0, 0,
                                          1, 2, 4, 8, 16, 32, 64, -128, 0, 0, 0, 0, 0, 0, 0, 0);
  const __m256i y64 = _mm256_set1_epi8(static_cast<char>(y.m64));
  const __m256i y63 = _mm256_set1_epi8(static_cast<char>(y.m63));
  const __m256i y65 = _mm256_set1_epi8(static_cast<char>(y.m65));
  const __m256i y11 = _mm256_set1_epi8(static_cast<char>(y.m11));
  const __m256i c63 = _mm256_set1_epi8(63);
  const __m256i c65 = _mm256_set1_epi8(65);
  const __m256i c11 = _mm256_set1_epi8(11);

  std::size_t n = 0;
  std::size_t j = 0;
  for (; j + 32 <= z.size; j += 32) {
    const auto ld = [j](const std::uint8_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j)); };
    const __m256i d64 = _mm256_and_si256(_mm256_sub_epi8(y64, ld(z.m64)), c63);
    __m256i ok = lookup(t64, bit_of, d64);
    ok = _mm256_and_si256(ok, lookup(t63, bit_of, sub_mod(y63, ld(z.m63), c63)));
    ok = _mm256_and_si256(ok, lookup(t65, bit_of, sub_mod(y65, ld(z.m65), c65)));
    ok = _mm256_and_si256(ok, lookup(t11, bit_of, sub_mod(y11, ld(z.m11), c11)));
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(ok));
    while (mask != 0) {
      out[n++] = static_cast<std::uint32_t>(j + static_cast<std::size_t>(__builtin_ctz(mask)));
      mask &= mask - 1;
    }
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
