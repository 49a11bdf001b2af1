#include <bit>

#include "ssf/simd/gf2_kernels.hpp"

namespace ssf::simd {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool is_zero(const std::uint64_t* row, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (row[i]) return false;
  return true;
}

std::size_t find_set(const std::uint64_t* row, std::size_t words, std::size_t from) {
  std::size_t w = from / 64;
  if (w >= words) return words * 64;
  std::uint64_t cur = row[w] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (cur) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words) return words * 64;
    cur = row[w];
  }
}

}  // namespace

const Gf2Kernels& scalar_kernels() {
  static constexpr Gf2Kernels k{Isa::Scalar, &xor_into, &is_zero, &find_set};
  return k;
}

}  // namespace ssf::simd
