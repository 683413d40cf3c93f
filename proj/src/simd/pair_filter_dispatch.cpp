#include <cstdlib>
#include <string>

#include "sqdiff/errors.hpp"
#include "sqdiff/simd/pair_filter.hpp"

namespace sqdiff::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(SQDIFF_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(SQDIFF_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

PairFilterFn pair_filter_for(Isa isa) {
  if (!isa_available(isa))
    throw Error(ErrorKind::Config, "isa", std::string(isa_name(isa)) + " kernel not available on this build/CPU");
  switch (isa) {
#if defined(SQDIFF_HAVE_AVX2)
    case Isa::Avx2: return &pair_filter_avx2;
#endif
#if defined(SQDIFF_HAVE_NEON)
    case Isa::Neon: return &pair_filter_neon;
#endif
    default: return &pair_filter_scalar;
  }
}

Isa selected_isa() {
  if (const char* env = std::getenv("SQDIFF_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (want == isa_name(isa) && isa_available(isa)) return isa;
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

std::size_t pair_filter(Residue4 y, ResidueView z, std::uint32_t* out) {
  static const PairFilterFn fn = pair_filter_for(selected_isa());
  return fn(y, z, out);
}

}  // namespace sqdiff::simd
