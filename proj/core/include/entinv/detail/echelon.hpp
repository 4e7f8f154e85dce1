#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace entinv::detail {

/// Raised by the int64 echelon when an intermediate value does not fit.
struct Overflow : std::exception {
  const char* what() const noexcept override { return "int64 overflow in echelon"; }
};

inline std::int64_t mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t ab, cd, r;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &r)) {
    throw Overflow();
  }
  return r;
}
inline mpz_class mul_sub(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  return a * b - c * d;
}

inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Overflow();
  return std::gcd(a, b);
}
inline mpz_class abs_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Incremental fraction-free row echelon form over the integers. Rows are kept
/// primitive (content 1) and sorted by pivot column; only rank and the row
/// space are meaningful.
template <class Int>
class Echelon {
 public:
  explicit Echelon(std::size_t cols = 0) { reset(cols); }

  void reset(std::size_t cols) {
    cols_ = cols;
    rank_ = 0;
    data_.resize(cols * cols);
    pivots_.resize(cols);
    scratch_.resize(cols);
  }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == cols_; }
  const Int* row(std::size_t r) const { return data_.data() + r * cols_; }

  /// Buffer for the next candidate row; fill it, then call insert_scratch().
  Int* scratch() { return scratch_.data(); }

  /// Reduces the scratch row against the stored rows; stores it if independent.
  bool insert_scratch() {
    if (rank_ == cols_) return false;
    Int* v = scratch_.data();
    for (std::size_t r = 0; r < rank_; ++r) {
      const std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      const Int* u = row(r);
      const Int a = u[p];
      const Int b = v[p];
      for (std::size_t c = 0; c < cols_; ++c) v[c] = mul_sub(v[c], a, u[c], b);
      normalize(v);
    }
    std::size_t p = 0;
    while (p < cols_ && v[p] == 0) ++p;
    if (p == cols_) return false;
    normalize(v);
    // Insert keeping pivots ascending.
    std::size_t at = rank_;
    while (at > 0 && pivots_[at - 1] > p) --at;
    for (std::size_t r = rank_; r > at; --r) {
      pivots_[r] = pivots_[r - 1];
      std::copy(row(r - 1), row(r - 1) + cols_, data_.data() + r * cols_);
    }
    pivots_[at] = p;
    std::copy(v, v + cols_, data_.data() + at * cols_);
    ++rank_;
    return true;
  }

 private:
  void normalize(Int* v) {
    Int g = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) {
        g = abs_gcd(g, v[c]);
        if (g == 1) return;
      }
    }
    if (g > 1) {
      for (std::size_t c = 0; c < cols_; ++c) v[c] /= g;
    }
  }

  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
  std::vector<Int> data_;
  std::vector<std::size_t> pivots_;
  std::vector<Int> scratch_;
};

}  // namespace entinv::detail
