#include <initializer_list>

#include "ssf/simd/gf2_kernels.hpp"

namespace ssf::simd {

#if defined(SSF_HAVE_AVX2)
const Gf2Kernels& avx2_kernels();
#endif
#if defined(SSF_HAVE_NEON)
const Gf2Kernels& neon_kernels();
#endif

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

const Gf2Kernels* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_kernels();
    case Isa::Avx2:
#if defined(SSF_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
      return nullptr;
    case Isa::Neon:
#if defined(SSF_HAVE_NEON)
      return &neon_kernels();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const Gf2Kernels& active_kernels() {
  static const Gf2Kernels& chosen = [] () -> const Gf2Kernels& {
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
      if (const auto* k = kernels_for(isa)) return *k;
    }
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace ssf::simd
