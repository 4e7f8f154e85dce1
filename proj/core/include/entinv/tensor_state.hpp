#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "entinv/matrix.hpp"
#include "entinv/rational.hpp"

namespace entinv {

/// Subset of the subsystem index set I = {1..n}; subsystem i is bit (i-1).
using Subset = std::uint32_t;

constexpr Subset subset_bit(int subsystem) { return Subset{1} << (subsystem - 1); }

/// Dimension vector (d_1, ..., d_n) with n >= 2 and every d_i >= 2.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> dims);

  int arity() const { return static_cast<int>(dims_.size()); }
  std::size_t dim(int subsystem) const { return dims_[subsystem - 1]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const { return total_; }
  Subset full_set() const { return (Subset{1} << dims_.size()) - 1; }
  /// Product of d_i over i in `s` (1 for the empty set).
  std::size_t dim_of(Subset s) const;

  friend bool operator==(const Shape& a, const Shape& b) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// 1-based indices (j_1, ..., j_n).
using MultiIndex = std::vector<std::size_t>;

/// Row-major linearization, j_1 most significant.
std::size_t linear_index(const Shape& shape, const MultiIndex& index);
MultiIndex multi_index(const Shape& shape, std::size_t linear);

/// Sparse tensor with exact coefficients, keyed by linear index.
class State {
 public:
  State() = default;
  explicit State(Shape shape) : shape_(std::move(shape)) {}

  const Shape& shape() const { return shape_; }
  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at a multi-index (0 when absent).
  Rational at(const MultiIndex& index) const;
  Rational at_linear(std::size_t linear) const;

  /// Adds `c` to the coefficient at `index`; zero results are erased.
  void add(const MultiIndex& index, const Rational& c);
  void add_linear(std::size_t linear, const Rational& c);

  static State from_dense(const Shape& shape, const std::vector<Rational>& coeffs);
  std::vector<Rational> to_dense() const;

  State scaled(const Rational& c) const;

  friend bool operator==(const State& a, const State& b) = default;

 private:
  Shape shape_;
  std::map<std::size_t, Rational> terms_;
};

/// Group element (g_1, ..., g_n) of the local transformation group.
struct LocalTransform {
  std::vector<Mat> factors;

  static LocalTransform identity(const Shape& shape);
  bool invertible() const;
};

/// Matrix of f_J: rows over V_J, columns over V_{I\J}, both row-major in ascending subsystem order.
Mat flatten(const State& v, Subset j);

/// Matrix of the extended map: rows (j,k) over V_{I\J}^2, columns over the full V index.
Mat extended_flatten(const State& v, Subset j);

/// For each (J-index i, rest-index k) pair, in row-major (i,k) order, the full V index.
/// Maps the Kronecker ordering used by kronecker_subspace onto V's own ordering.
std::vector<std::size_t> split_positions(const Shape& shape, Subset j);

/// Reorders coordinates: result coordinate positions[t] receives input coordinate t.
Subspace permute_coordinates(const Subspace& s, const std::vector<std::size_t>& positions);

State apply_local(const State& v, const LocalTransform& g);

/// sigma[i-1] is the image of subsystem i (1-based). Moves subsystem i to slot sigma(i).
State permute_subsystems(const State& v, const std::vector<int>& sigma);

struct FactorPair {
  std::vector<Rational> j_part;
  std::vector<Rational> rest_part;
};

/// Rank decomposition of flatten(v, J) into r = rank outer products.
std::vector<FactorPair> two_factor_decomposition(const State& v, Subset j);

/// Either an explicit set of coefficients or numerators in [lo, hi] over denominators 1..max_den.
struct CoeffSpec {
  struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t max_den = 1;
  };
  std::variant<std::vector<Rational>, Range> source;

  static CoeffSpec set(std::vector<Rational> values) { return {std::move(values)}; }
  static CoeffSpec range(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 1) {
    return {Range{lo, hi, max_den}};
  }
  /// Uniform integers in [-9, 9].
  static CoeffSpec generic() { return range(-9, 9, 1); }

  void validate() const;
  std::string describe() const;
};

State random_state(const Shape& shape, const CoeffSpec& spec, std::uint64_t seed);

/// Random invertible local transform with integer entries in [-bound, bound].
LocalTransform random_local_transform(const Shape& shape, std::uint64_t seed, std::int64_t bound = 3);

}  // namespace entinv
