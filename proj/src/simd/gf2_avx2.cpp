// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "ssf/simd/gf2_kernels.hpp"

namespace ssf::simd {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 8 <= words; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    const __m256i a0 = _mm256_loadu_si256(d);
    const __m256i a1 = _mm256_loadu_si256(d + 1);
    const __m256i b0 = _mm256_loadu_si256(s);
    const __m256i b1 = _mm256_loadu_si256(s + 1);
    _mm256_storeu_si256(d, _mm256_xor_si256(a0, b0));
    _mm256_storeu_si256(d + 1, _mm256_xor_si256(a1, b1));
  }
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

bool is_zero(const std::uint64_t* row, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i)));
  }
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < words; ++i)
    if (row[i]) return false;
  return true;
}

std::size_t find_set(const std::uint64_t* row, std::size_t words, std::size_t from) {
  std::size_t w = from / 64;
  if (w >= words) return words * 64;
  const std::uint64_t head = row[w] & (~std::uint64_t{0} << (from % 64));
  if (head) return w * 64 + static_cast<std::size_t>(std::countr_zero(head));
  ++w;
  // Skip zero blocks four words at a time.
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
    if (!_mm256_testz_si256(v, v)) break;
  }
  for (; w < words; ++w)
    if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
  return words * 64;
}

}  // namespace

const Gf2Kernels& avx2_kernels() {
  static constexpr Gf2Kernels k{Isa::Avx2, &xor_into, &is_zero, &find_set};
  return k;
}

}  // namespace ssf::simd
