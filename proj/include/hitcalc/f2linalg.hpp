#pragma once

// Bit-packed linear algebra over F2.
//
// Conventions:
//  * Matrices are stored by rows; row operations are word-wise XOR.
//  * Echelon forms are fully reduced. Pivot choice is deterministic: columns
//    are scanned left to right and the lowest-index row carrying a 1 in the
//    current column becomes the pivot row.
//  * kernel(M) is the column kernel {v : M v = 0}.
//  * solve(M, b) uses row combinations: x^T M = b.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hitcalc {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const auto bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const noexcept;
  std::size_t count() const noexcept;
  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  // Dot product over F2.
  bool dot(const BitVector& other) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(std::size_t cols) : cols_(cols) {}
  F2Matrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(std::size_t cols, std::vector<BitVector> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  std::span<const BitVector> row_span() const noexcept { return rows_; }

  bool at(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  void append_row(BitVector row);

  F2Matrix transpose() const;
  // M v, with v indexed by columns.
  BitVector apply(const BitVector& v) const;
  // x^T M, with x indexed by rows.
  BitVector combine_rows(const BitVector& x) const;
  F2Matrix operator*(const F2Matrix& other) const;
  F2Matrix& operator+=(const F2Matrix& other);

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Reduced row echelon form: the nonzero rows only, ordered by pivot column.
struct Echelon {
  F2Matrix rows;
  std::vector<std::size_t> pivots;
  // When requested, transform.row(r) records which original rows sum to
  // rows.row(r).
  std::optional<F2Matrix> transform;

  std::size_t rank() const noexcept { return pivots.size(); }

  // Clears every pivot column of v. If `combo` is given (size = number of
  // original rows, transform required), XORs in the original rows used.
  void reduce(BitVector& v, BitVector* combo = nullptr) const;
};

Echelon rref(const F2Matrix& m, bool track_transform = false);
std::size_t rank(const F2Matrix& m);

std::optional<BitVector> solve(const F2Matrix& m, const BitVector& b);
// `e` must carry a transform.
std::optional<BitVector> solve(const Echelon& e, const BitVector& b);

std::vector<BitVector> kernel(const F2Matrix& m);

// A subspace of F2^ambient given by a spanning set.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<BitVector> basis;

  std::size_t dim() const;
  // Canonical basis: the reduced echelon rows.
  Subspace canonical() const;
  bool contains(const BitVector& v) const;
};

Subspace intersect(std::span<const Subspace> spaces);

}  // namespace hitcalc
