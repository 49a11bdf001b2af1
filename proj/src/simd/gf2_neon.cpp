#include <arm_neon.h>

#include <bit>

#include "ssf/simd/gf2_kernels.hpp"

namespace ssf::simd {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

bool is_zero(const std::uint64_t* row, std::size_t words) {
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= words; i += 2) acc = vorrq_u64(acc, vld1q_u64(row + i));
  if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0) return false;
  for (; i < words; ++i)
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

const Gf2Kernels& neon_kernels() {
  static constexpr Gf2Kernels k{Isa::Neon, &xor_into, &is_zero, &find_set};
  return k;
}

}  // namespace ssf::simd
