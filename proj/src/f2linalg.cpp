#include "hitcalc/f2linalg.hpp"

#include <algorithm>
#include <bit>

#include "hitcalc/error.hpp"

namespace hitcalc {

namespace {

void check_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + ": dimension mismatch (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  for (;;) {
    if (w) {
      auto idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return idx < size_ ? idx : size_;
    }
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_size(size_, other.size_, "BitVector xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  check_size(size_, other.size_, "BitVector dot");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
  for (const auto& r : rows) check_size(cols, r.size(), "F2Matrix row");
  F2Matrix m(cols);
  m.rows_ = std::move(rows);
  return m;
}

void F2Matrix::append_row(BitVector row) {
  check_size(cols_, row.size(), "F2Matrix row");
  rows_.push_back(std::move(row));
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = rows_[r].find_next(0); c < cols_;
         c = rows_[r].find_next(c + 1))
      t.set(c, r);
  return t;
}

BitVector F2Matrix::apply(const BitVector& v) const {
  check_size(cols_, v.size(), "F2Matrix apply");
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].dot(v)) out.set(r);
  return out;
}

BitVector F2Matrix::combine_rows(const BitVector& x) const {
  check_size(rows_.size(), x.size(), "F2Matrix combine_rows");
  BitVector out(cols_);
  for (std::size_t r = x.find_next(0); r < x.size(); r = x.find_next(r + 1))
    out ^= rows_[r];
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  check_size(cols_, other.rows(), "F2Matrix product");
  F2Matrix out(other.cols());
  for (const auto& r : rows_) out.append_row(other.combine_rows(r));
  return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other) {
  check_size(cols_, other.cols_, "F2Matrix sum");
  check_size(rows_.size(), other.rows_.size(), "F2Matrix sum");
  for (std::size_t r = 0; r < rows_.size(); ++r) rows_[r] ^= other.rows_[r];
  return *this;
}

void Echelon::reduce(BitVector& v, BitVector* combo) const {
  check_size(rows.cols(), v.size(), "Echelon reduce");
  if (combo && !transform)
    throw Error(ErrorCode::invalid_argument,
                "Echelon::reduce: no transform recorded");
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (!v.test(pivots[r])) continue;
    v ^= rows.row(r);
    if (combo) *combo ^= transform->row(r);
  }
}

Echelon rref(const F2Matrix& m, bool track_transform) {
  std::vector<BitVector> work(m.row_span().begin(), m.row_span().end());
  std::vector<BitVector> trans;
  if (track_transform) {
    trans.reserve(work.size());
    for (std::size_t r = 0; r < work.size(); ++r)
      trans.push_back(BitVector::unit(work.size(), r));
  }

  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < work.size(); ++col) {
    const std::size_t word = col >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    std::size_t r = pivot_row;
    while (r < work.size() && !(work[r].words()[word] & bit)) ++r;
    if (r == work.size()) continue;
    if (r != pivot_row) {
      std::swap(work[r], work[pivot_row]);
      if (track_transform) std::swap(trans[r], trans[pivot_row]);
    }
    const BitVector& p = work[pivot_row];
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == pivot_row || !(work[i].words()[word] & bit)) continue;
      // Bits left of `word` are already zero in the pivot row.
      auto dst = work[i].words();
      auto src = p.words();
      for (std::size_t w = word; w < dst.size(); ++w) dst[w] ^= src[w];
      if (track_transform) trans[i] ^= trans[pivot_row];
    }
    pivots.push_back(col);
    ++pivot_row;
  }

  work.resize(pivot_row);
  Echelon e{F2Matrix::from_rows(m.cols(), std::move(work)), std::move(pivots),
            std::nullopt};
  if (track_transform) {
    trans.resize(pivot_row);
    e.transform = F2Matrix::from_rows(m.rows(), std::move(trans));
  }
  return e;
}

std::size_t rank(const F2Matrix& m) { return rref(m).rank(); }

std::optional<BitVector> solve(const Echelon& e, const BitVector& b) {
  if (!e.transform)
    throw Error(ErrorCode::invalid_argument, "solve: no transform recorded");
  BitVector residual = b;
  BitVector combo(e.transform->cols());
  e.reduce(residual, &combo);
  if (!residual.is_zero()) return std::nullopt;
  return combo;
}

std::optional<BitVector> solve(const F2Matrix& m, const BitVector& b) {
  check_size(m.cols(), b.size(), "solve");
  return solve(rref(m, true), b);
}

std::vector<BitVector> kernel(const F2Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (e.rows.at(r, f)) v.set(e.pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t Subspace::dim() const {
  return rank(F2Matrix::from_rows(ambient, basis));
}

Subspace Subspace::canonical() const {
  auto e = rref(F2Matrix::from_rows(ambient, basis));
  return Subspace{ambient, std::vector<BitVector>(e.rows.row_span().begin(),
                                                  e.rows.row_span().end())};
}

bool Subspace::contains(const BitVector& v) const {
  check_size(ambient, v.size(), "Subspace contains");
  auto e = rref(F2Matrix::from_rows(ambient, basis));
  BitVector w = v;
  e.reduce(w);
  return w.is_zero();
}

namespace {

// Zassenhaus: rows [u | u] and [w | 0]; echelon rows whose left half vanishes
// carry a basis of U ∩ W in their right half.
Subspace intersect_pair(const Subspace& u, const Subspace& w) {
  const std::size_t n = u.ambient;
  F2Matrix m(2 * n);
  auto widen = [&](const BitVector& v, bool duplicate) {
    BitVector out(2 * n);
    for (std::size_t i = v.find_next(0); i < n; i = v.find_next(i + 1)) {
      out.set(i);
      if (duplicate) out.set(n + i);
    }
    return out;
  };
  for (const auto& v : u.basis) m.append_row(widen(v, true));
  for (const auto& v : w.basis) m.append_row(widen(v, false));
  const Echelon e = rref(m);
  Subspace out{n, {}};
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] < n) continue;
    BitVector v(n);
    const auto& row = e.rows.row(r);
    for (std::size_t i = row.find_next(n); i < 2 * n; i = row.find_next(i + 1))
      v.set(i - n);
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Subspace intersect(std::span<const Subspace> spaces) {
  if (spaces.empty())
    throw Error(ErrorCode::invalid_argument, "intersect: no subspaces given");
  const std::size_t n = spaces.front().ambient;
  for (const auto& s : spaces) {
    check_size(n, s.ambient, "intersect");
    for (const auto& v : s.basis) check_size(n, v.size(), "intersect basis");
  }
  Subspace acc = spaces.front().canonical();
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    if (acc.basis.empty()) break;
    acc = intersect_pair(acc, spaces[i]).canonical();
  }
  return acc;
}

}  // namespace hitcalc
