#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "entinv/rational.hpp"

namespace entinv {

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors; all must share one length.
  static Mat from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<Rational>& entries() const { return entries_; }

  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Stacks matrices vertically. Throws ColumnMismatch when column counts differ.
Mat vstack(std::span<const Mat> parts);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row-echelon form (zero rows kept at the bottom).
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
Rational determinant(const Mat& m);

/// A linear subspace of Q^ambient_dim, stored as an RREF basis so that equal
/// subspaces compare equal entry by entry.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `generators`.
  static Subspace span_of(const Mat& generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  bool contains(std::span<const Rational> vector) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Mat basis_;
};

Subspace nullspace(const Mat& m);

/// Intersection of the nullspaces of all matrices, computed as the nullspace of
/// their vertical stack. Throws EmptyFamily / ColumnMismatch.
Subspace kernel_intersection(std::span<const Mat> ms);

/// Complement under the standard coordinate dot product.
Subspace orthogonal_complement(const Subspace& s);

/// span{ b (x) e_k : b in basis(s), 0 <= k < d }, with b's index most significant.
Subspace kronecker_subspace(const Subspace& s, std::size_t d);

/// Column space of m as a subspace of Q^rows.
Subspace column_space(const Mat& m);

}  // namespace entinv
