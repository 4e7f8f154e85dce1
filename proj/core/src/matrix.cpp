#include "entinv/matrix.hpp"

#include <algorithm>

#include "entinv/errors.hpp"

namespace entinv {

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ColumnMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ColumnMismatch("row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product dimension mismatch");
  Mat p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
      }
    }
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Mat vstack(std::span<const Mat> parts) {
  if (parts.empty()) return {};
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const Mat& p : parts) {
    if (p.cols() != cols) throw ColumnMismatch("vstack: column counts differ");
    rows += p.rows();
  }
  Mat out(rows, cols);
  std::size_t at = 0;
  for (const Mat& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r, ++at) {
      std::copy(p.row(r).begin(), p.row(r).end(), out.row(at).begin());
    }
  }
  return out;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}, 0};
  Mat& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));
    }
    const Rational inv = a(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(lead, k).is_zero()) a(r, k) -= f * a(lead, k);
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Rational determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(pivot, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

Subspace Subspace::span_of(const Mat& generators) {
  Subspace s(generators.cols());
  RrefResult r = rref(generators);
  Mat basis(r.rank, generators.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), basis.row(i).begin());
  }
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return span_of(Mat::identity(ambient_dim)); }

bool Subspace::contains(std::span<const Rational> vector) const {
  if (vector.size() != ambient_dim_) throw ColumnMismatch("vector length differs from ambient dimension");
  Mat g(dim() + 1, ambient_dim_);
  for (std::size_t r = 0; r < dim(); ++r) std::copy(basis_.row(r).begin(), basis_.row(r).end(), g.row(r).begin());
  std::copy(vector.begin(), vector.end(), g.row(dim()).begin());
  return rank(g) == dim();
}

Subspace nullspace(const Mat& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Mat gens(cols - r.rank, cols);
  std::size_t at = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    gens(at, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) gens(at, r.pivots[i]) = -r.reduced(i, f);
    ++at;
  }
  return Subspace::span_of(gens);
}

Subspace kernel_intersection(std::span<const Mat> ms) {
  if (ms.empty()) throw EmptyFamily("kernel_intersection of an empty list");
  return nullspace(vstack(ms));
}

Subspace orthogonal_complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return nullspace(s.basis());
}

Subspace kronecker_subspace(const Subspace& s, std::size_t d) {
  if (d == 0) throw InvalidArgument("kronecker_subspace with d = 0");
  const std::size_t n = s.ambient_dim();
  Mat gens(s.dim() * d, n * d);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < n; ++i) gens(b * d + k, i * d + k) = s.basis()(b, i);
    }
  }
  return Subspace::span_of(gens);
}

Subspace column_space(const Mat& m) { return Subspace::span_of(m.transpose()); }

}  // namespace entinv
