#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace codedcache {

/// Dense matrix over GF(2), one bit row per equation.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * words_, words_}; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// Row-reduced echelon form of a GF(2) matrix, used for span membership.
class Gf2Basis {
 public:
  /// Eliminates a copy of `m`.
  explicit Gf2Basis(BitMatrix m);

  std::size_t rank() const noexcept { return pivots_.size(); }
  /// Whether the unit vector e_col lies in the row space.
  bool spans_unit(std::size_t col) const;
  /// Whether `vec` (cols() bits) lies in the row space.
  bool spans(std::span<const std::uint64_t> vec) const;

 private:
  BitMatrix m_;
  std::vector<std::size_t> pivots_;        // pivot column of reduced row i
  std::vector<std::int64_t> pivot_row_;    // per column: reduced row or -1
};

}  // namespace codedcache
