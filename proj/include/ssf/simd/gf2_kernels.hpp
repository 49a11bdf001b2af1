#pragma once

#include <cstddef>
#include <cstdint>

// Bit-row kernels for GF(2) elimination. Each ISA provides the same table of
// functions; the scalar table is the reference the others are tested against.

namespace ssf::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

struct Gf2Kernels {
  Isa isa;
  // dst[i] ^= src[i] for i < words
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // true iff every word is zero
  bool (*is_zero)(const std::uint64_t* row, std::size_t words);
  // index of the lowest set bit at or after bit `from`, or words*64 if none
  std::size_t (*find_set)(const std::uint64_t* row, std::size_t words, std::size_t from);
};

const Gf2Kernels& scalar_kernels();

/// The table for `isa`, or nullptr when it is not compiled in or the CPU lacks it.
const Gf2Kernels* kernels_for(Isa isa);

/// Best table for this CPU, chosen once on first use.
const Gf2Kernels& active_kernels();

}  // namespace ssf::simd
