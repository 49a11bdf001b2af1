#include "ssf/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ssf {

bool BitVector::is_zero() const noexcept {
  return simd::active_kernels().is_zero(words_.data(), words_.size());
}

std::size_t BitVector::first_set() const noexcept {
  const auto pos = simd::active_kernels().find_set(words_.data(), words_.size(), 0);
  return std::min(pos, bits_);
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.bits_ != bits_) throw std::invalid_argument("bit vector length mismatch");
  simd::active_kernels().xor_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

bool BitVector::lex_less(const BitVector& o) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const auto diff = words_[w] ^ o.words_[w];
    if (diff) {
      const auto bit = std::countr_zero(diff);
      return ((o.words_[w] >> bit) & 1u) != 0;
    }
  }
  return false;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) noexcept {
  const auto mask = std::uint64_t{1} << (c % 64);
  if (v) row_ptr(r)[c / 64] |= mask;
  else row_ptr(r)[c / 64] &= ~mask;
}

void GF2Matrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.words().begin(), v.words().end(), row_ptr(r));
}

BitVector GF2Matrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy(row_ptr(r), row_ptr(r) + stride_, v.words().begin());
  return v;
}

std::vector<std::size_t> GF2Matrix::rref(const simd::Gf2Kernels& k) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const auto word = c / 64;
    const auto mask = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < rows_ && !(row_ptr(p)[word] & mask)) ++p;
    if (p == rows_) continue;
    if (p != rank) std::swap_ranges(row_ptr(p), row_ptr(p) + stride_, row_ptr(rank));
    const auto* pivot_row = row_ptr(rank);
    // The pivot row is zero before column c.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && (row_ptr(r)[word] & mask)) {
        k.xor_into(row_ptr(r) + word, pivot_row + word, stride_ - word);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::size_t GF2Matrix::rank() const {
  GF2Matrix copy = *this;
  return copy.rref().size();
}

std::vector<BitVector> GF2Matrix::kernel_basis() const {
  GF2Matrix reduced = *this;
  const auto pivots = reduced.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols_);
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (reduced.get(i, free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVector GF2Matrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w) acc ^= row_ptr(r)[w] & v.words()[w];
    out.set(r, std::popcount(acc) & 1u);
  }
  return out;
}

BitVector Gf2Subspace::reduce(BitVector v) const {
  if (v.size() != bits_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool Gf2Subspace::insert(const BitVector& v) {
  BitVector r = reduce(v);
  if (r.is_zero()) return false;
  const auto p = r.first_set();
  for (auto& b : basis_) {
    if (b.get(p)) b ^= r;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

}  // namespace ssf
