#include "sqdiff/simd/pair_filter.hpp"
#include "sqdiff/square_filter.hpp"

namespace sqdiff::simd {

namespace {

inline unsigned sub_mod(unsigned a, unsigned b, unsigned m) { return a >= b ? a - b : a + m - b; }

}  // namespace

std::size_t pair_filter_scalar(Residue4 y, ResidueView z, std::uint32_t* out) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < z.size; ++j) {
    const bool keep = residue::kSquares64[(y.m64 - z.m64[j]) & 63u] &&
                      residue::kSquares63[sub_mod(y.m63, z.m63[j], 63)] &&
                      residue::kSquares65[sub_mod(y.m65, z.m65[j], 65)] &&
                      residue::kSquares11[sub_mod(y.m11, z.m11[j], 11)];
    if (keep) out[n++] = static_cast<std::uint32_t>(j);
  }
  return n;
}

}  // namespace sqdiff::simd
