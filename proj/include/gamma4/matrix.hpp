#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gamma4/error.hpp"

namespace gamma4 {

using Int = std::int64_t;

// Overflow-checked arithmetic. Every entry of every matrix in this library goes
// through these; a silent wrap would corrupt an obstruction.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

/// Narrow a 128-bit intermediate back to Int, throwing if it does not fit.
Int narrow(__int128 v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool is_symmetric() const noexcept;

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  IntMatrix transposed() const;
  IntMatrix negated() const;
  /// Drop row k and column k.
  IntMatrix without(std::size_t k) const;
  /// Leading k x k block.
  IntMatrix leading(std::size_t k) const;
  /// Block-diagonal sum [[*this, 0], [0, other]].
  IntMatrix direct_sum(const IntMatrix& other) const;
  /// Symmetric conjugation P^T * this * P by the signed permutation sending
  /// basis vector i to signs[i] * e_{perm[i]}.
  IntMatrix conjugated(std::span<const std::size_t> perm, std::span<const int> signs) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::vector<std::vector<Int>> to_rows() const;
  /// One row per line, entries separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Parse whitespace-separated integer rows; blank lines and '#' comments are skipped.
IntMatrix parse_matrix(std::string_view text);

}  // namespace gamma4
