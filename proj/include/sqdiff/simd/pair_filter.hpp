#pragma once

// Residue prefilter for the all-pairs test "is y^2 - z^2 a square?" over the
// legs of one hypotenuse.
//
// Each leg carries the residues of leg^2 modulo 64, 63, 65 and 11 (one byte
// per modulus, structure-of-arrays). For a fixed y, a candidate z survives
// iff (y^2 - z^2) mod M is a quadratic residue for every M. Survivors still
// need an exact square-root check; rejected candidates are certainly not
// squares.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sqdiff::simd {

struct LegResidues {
  std::vector<std::uint8_t> m64, m63, m65, m11;

  void clear() { m64.clear(); m63.clear(); m65.clear(); m11.clear(); }
  void push(std::uint64_t leg_squared) {
    m64.push_back(static_cast<std::uint8_t>(leg_squared & 63));
    m63.push_back(static_cast<std::uint8_t>(leg_squared % 63));
    m65.push_back(static_cast<std::uint8_t>(leg_squared % 65));
    m11.push_back(static_cast<std::uint8_t>(leg_squared % 11));
  }
  std::size_t size() const noexcept { return m64.size(); }
};

struct ResidueView {
  const std::uint8_t* m64;
  const std::uint8_t* m63;
  const std::uint8_t* m65;
  const std::uint8_t* m11;
  std::size_t size;

  /// The candidates [first, size) of `legs`.
  static ResidueView tail(const LegResidues& legs, std::size_t first) {
    return {legs.m64.data() + first, legs.m63.data() + first, legs.m65.data() + first,
            legs.m11.data() + first, legs.size() - first};
  }
};

struct Residue4 {
  std::uint8_t m64, m63, m65, m11;

  static Residue4 at(const LegResidues& legs, std::size_t i) {
    return {legs.m64[i], legs.m63[i], legs.m65[i], legs.m11[i]};
  }
};

/// Writes the indices j (ascending) of candidates that may make y^2 - z_j^2 a
/// square into `out`, which must hold at least `z.size` entries. Returns the
/// number written.
using PairFilterFn = std::size_t (*)(Residue4 y, ResidueView z, std::uint32_t* out);

std::size_t pair_filter_scalar(Residue4 y, ResidueView z, std::uint32_t* out);
#if defined(SQDIFF_HAVE_AVX2)
std::size_t pair_filter_avx2(Residue4 y, ResidueView z, std::uint32_t* out);
#endif
#if defined(SQDIFF_HAVE_NEON)
std::size_t pair_filter_neon(Residue4 y, ResidueView z, std::uint32_t* out);
#endif

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant, unless SQDIFF_SIMD=scalar|avx2|neon overrides it.
Isa selected_isa();

PairFilterFn pair_filter_for(Isa isa);

/// Runtime-dispatched entry point.
std::size_t pair_filter(Residue4 y, ResidueView z, std::uint32_t* out);

}  // namespace sqdiff::simd
