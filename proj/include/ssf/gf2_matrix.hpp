#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssf/simd/gf2_kernels.hpp"

namespace ssf {

/// A fixed-length vector over GF(2). Bit 0 is the lexicographically leading
/// position: comparisons look at the lowest differing index first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const auto mask = std::uint64_t{1} << (i % 64);
    if (v) words_[i / 64] |= mask;
    else words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool is_zero() const noexcept;
  std::size_t first_set() const noexcept;  // size() when zero
  std::size_t popcount() const noexcept;

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& o) const = default;

  /// Lexicographic order with bit 0 most significant, 0 < 1.
  bool lex_less(const BitVector& o) const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2).
class GF2Matrix {
 public:
  GF2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (row_ptr(r)[c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept;
  void flip(std::size_t r, std::size_t c) noexcept {
    row_ptr(r)[c / 64] ^= std::uint64_t{1} << (c % 64);
  }
  void set_row(std::size_t r, const BitVector& v);
  BitVector row(std::size_t r) const;

  /// In-place reduced row echelon form; returns the pivot column of each
  /// nonzero row, in row order. Rows beyond the rank are zero afterwards.
  std::vector<std::size_t> rref(const simd::Gf2Kernels& k = simd::active_kernels());

  std::size_t rank() const;

  /// Basis of {v : M v = 0}, one vector per free column (free bit set, ascending).
  std::vector<BitVector> kernel_basis() const;

  /// M v over GF(2).
  BitVector apply(const BitVector& v) const;

  bool operator==(const GF2Matrix& o) const = default;

 private:
  std::uint64_t* row_ptr(std::size_t r) noexcept { return data_.data() + r * stride_; }
  const std::uint64_t* row_ptr(std::size_t r) const noexcept { return data_.data() + r * stride_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> data_;
};

/// A subspace kept as a fully reduced echelon basis: each basis vector has a
/// distinct leading bit and every other basis vector is zero there.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(std::size_t bits) : bits_(bits) {}

  std::size_t ambient_dim() const noexcept { return bits_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }

  /// v reduced against the basis. This is the lexicographically least element of v + span.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

  /// Adds v; returns false if v was already in the span.
  bool insert(const BitVector& v);

 private:
  std::size_t bits_;
  std::vector<BitVector> basis_;  // sorted by leading bit
  std::vector<std::size_t> pivots_;
};

}  // namespace ssf
