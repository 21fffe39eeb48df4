#include "codedcache/gf2.hpp"

#include <bit>
#include <utility>

#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

namespace {

std::int64_t lowest_bit(std::span<const std::uint64_t> row) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] != 0) return static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(row[w])));
  }
  return -1;
}

}  // namespace

// Rows are reduced in insertion order against earlier pivots, so reduced row i
// is zero at the pivot columns of rows 0..i-1. That is enough for in-order
// span tests.
Gf2Basis::Gf2Basis(BitMatrix m) : m_(std::move(m)), pivot_row_(m_.cols(), -1) {
  std::size_t kept = 0;
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    auto row = m_.row(r);
    for (std::size_t i = 0; i < kept; ++i) {
      const std::size_t c = pivots_[i];
      if ((row[c / 64] >> (c % 64)) & 1u) simd::xor_words(row, m_.row(i));
    }
    const std::int64_t pivot = lowest_bit(row);
    if (pivot < 0) continue;
    if (kept != r) {
      auto dst = m_.row(kept);
      std::copy(row.begin(), row.end(), dst.begin());
    }
    pivot_row_[static_cast<std::size_t>(pivot)] = static_cast<std::int64_t>(kept);
    pivots_.push_back(static_cast<std::size_t>(pivot));
    ++kept;
  }
}

bool Gf2Basis::spans(std::span<const std::uint64_t> vec) const {
  std::vector<std::uint64_t> v(vec.begin(), vec.end());
  v.resize(m_.words_per_row(), 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if ((v[c / 64] >> (c % 64)) & 1u) simd::xor_words(v, m_.row(i));
  }
  for (std::uint64_t w : v) {
    if (w != 0) return false;
  }
  return true;
}

bool Gf2Basis::spans_unit(std::size_t col) const {
  if (col >= m_.cols()) return false;
  std::vector<std::uint64_t> v(m_.words_per_row(), 0);
  v[col / 64] = std::uint64_t{1} << (col % 64);
  return spans(v);
}

}  // namespace codedcache
