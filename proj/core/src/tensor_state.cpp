#include "entinv/tensor_state.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "entinv/detail/random.hpp"
#include "entinv/errors.hpp"

namespace entinv {

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) throw InvalidShape("a shape needs at least two subsystems");
  if (dims_.size() > 16) throw InvalidShape("too many subsystems");
  for (std::size_t d : dims_) {
    if (d < 2) throw InvalidShape("every subsystem dimension must be at least 2");
    total_ *= d;
  }
}

std::size_t Shape::dim_of(Subset s) const {
  std::size_t p = 1;
  for (int i = 1; i <= arity(); ++i) {
    if (s & subset_bit(i)) p *= dim(i);
  }
  return p;
}

std::size_t linear_index(const Shape& shape, const MultiIndex& index) {
  if (index.size() != shape.dims().size()) throw ArityMismatch("multi-index length differs from arity");
  std::size_t linear = 0;
  for (int i = 1; i <= shape.arity(); ++i) {
    const std::size_t j = index[i - 1];
    if (j < 1 || j > shape.dim(i)) throw IndexOutOfRange("index outside subsystem dimension");
    linear = linear * shape.dim(i) + (j - 1);
  }
  return linear;
}

MultiIndex multi_index(const Shape& shape, std::size_t linear) {
  MultiIndex index(shape.dims().size());
  for (int i = shape.arity(); i >= 1; --i) {
    index[i - 1] = linear % shape.dim(i) + 1;
    linear /= shape.dim(i);
  }
  return index;
}

Rational State::at(const MultiIndex& index) const { return at_linear(linear_index(shape_, index)); }

Rational State::at_linear(std::size_t linear) const {
  auto it = terms_.find(linear);
  return it == terms_.end() ? Rational() : it->second;
}

void State::add(const MultiIndex& index, const Rational& c) { add_linear(linear_index(shape_, index), c); }

void State::add_linear(std::size_t linear, const Rational& c) {
  if (linear >= shape_.total_dim()) throw IndexOutOfRange("linear index outside state");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(linear, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

State State::from_dense(const Shape& shape, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != shape.total_dim()) throw ShapeMismatch("dense vector length differs from dim V");
  State v(shape);
  for (std::size_t i = 0; i < coeffs.size(); ++i) v.add_linear(i, coeffs[i]);
  return v;
}

std::vector<Rational> State::to_dense() const {
  std::vector<Rational> out(shape_.total_dim());
  for (const auto& [k, c] : terms_) out[k] = c;
  return out;
}

State State::scaled(const Rational& c) const {
  State out(shape_);
  if (c.is_zero()) return out;
  for (const auto& [k, x] : terms_) out.terms_.emplace(k, x * c);
  return out;
}

LocalTransform LocalTransform::identity(const Shape& shape) {
  LocalTransform g;
  for (std::size_t d : shape.dims()) g.factors.push_back(Mat::identity(d));
  return g;
}

bool LocalTransform::invertible() const {
  return std::all_of(factors.begin(), factors.end(), [](const Mat& m) {
    return m.rows() == m.cols() && !determinant(m).is_zero();
  });
}

namespace {

void check_proper(const Shape& shape, Subset j) {
  if (j == 0 || (j & shape.full_set()) == shape.full_set() || (j & ~shape.full_set()) != 0) {
    throw BadSubset("J must be a nonempty proper subset of I");
  }
}

// Splits a full linear index into (J-part, rest-part) row-major indices.
std::pair<std::size_t, std::size_t> split_index(const Shape& shape, Subset j, std::size_t linear) {
  const MultiIndex idx = multi_index(shape, linear);
  std::size_t a = 0;
  std::size_t b = 0;
  for (int i = 1; i <= shape.arity(); ++i) {
    if (j & subset_bit(i)) {
      a = a * shape.dim(i) + idx[i - 1] - 1;
    } else {
      b = b * shape.dim(i) + idx[i - 1] - 1;
    }
  }
  return {a, b};
}

}  // namespace

Mat flatten(const State& v, Subset j) {
  const Shape& shape = v.shape();
  check_proper(shape, j);
  Mat m(shape.dim_of(j), shape.dim_of(shape.full_set() & ~j));
  for (const auto& [k, c] : v.terms()) {
    auto [r, col] = split_index(shape, j, k);
    m(r, col) = c;
  }
  return m;
}

std::vector<std::size_t> split_positions(const Shape& shape, Subset j) {
  check_proper(shape, j);
  const std::size_t rest = shape.dim_of(shape.full_set() & ~j);
  std::vector<std::size_t> pos(shape.total_dim());
  for (std::size_t full = 0; full < shape.total_dim(); ++full) {
    auto [a, b] = split_index(shape, j, full);
    pos[a * rest + b] = full;
  }
  return pos;
}

Mat extended_flatten(const State& v, Subset j) {
  const Shape& shape = v.shape();
  check_proper(shape, j);
  const std::size_t rest = shape.dim_of(shape.full_set() & ~j);
  const std::vector<std::size_t> pos = split_positions(shape, j);
  Mat m(rest * rest, shape.total_dim());
  for (const auto& [k, c] : v.terms()) {
    auto [i, jj] = split_index(shape, j, k);
    for (std::size_t kk = 0; kk < rest; ++kk) m(jj * rest + kk, pos[i * rest + kk]) = c;
  }
  return m;
}

Subspace permute_coordinates(const Subspace& s, const std::vector<std::size_t>& positions) {
  if (positions.size() != s.ambient_dim()) throw ColumnMismatch("permutation length differs from ambient dimension");
  Mat g(s.dim(), s.ambient_dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t t = 0; t < s.ambient_dim(); ++t) g(r, positions[t]) = s.basis()(r, t);
  }
  return Subspace::span_of(g);
}

State apply_local(const State& v, const LocalTransform& g) {
  const Shape& shape = v.shape();
  if (g.factors.size() != shape.dims().size()) throw ShapeMismatch("one factor per subsystem expected");
  for (int i = 1; i <= shape.arity(); ++i) {
    const Mat& f = g.factors[i - 1];
    if (f.rows() != shape.dim(i) || f.cols() != shape.dim(i)) throw ShapeMismatch("factor size differs from subsystem dimension");
  }
  std::vector<Rational> cur = v.to_dense();
  // Contract one mode at a time: stride is the product of dims after the mode.
  std::size_t stride = shape.total_dim();
  for (int i = 1; i <= shape.arity(); ++i) {
    const std::size_t d = shape.dim(i);
    stride /= d;
    const Mat& f = g.factors[i - 1];
    std::vector<Rational> next(cur.size());
    for (std::size_t base = 0; base < cur.size(); ++base) {
      if ((base / stride) % d != 0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& x = cur[base + k * stride];
        if (x.is_zero()) continue;
        for (std::size_t jj = 0; jj < d; ++jj) {
          if (!f(k, jj).is_zero()) next[base + jj * stride] += x * f(k, jj);
        }
      }
    }
    cur = std::move(next);
  }
  return State::from_dense(shape, cur);
}

State permute_subsystems(const State& v, const std::vector<int>& sigma) {
  const Shape& shape = v.shape();
  const int n = shape.arity();
  if (static_cast<int>(sigma.size()) != n) throw ArityMismatch("permutation length differs from arity");
  std::vector<bool> seen(n, false);
  for (int s : sigma) {
    if (s < 1 || s > n || seen[s - 1]) throw InvalidArgument("not a permutation of I");
    seen[s - 1] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (shape.dim(sigma[i - 1]) != shape.dim(i)) throw ShapeNotPermutable("permutation does not preserve the shape");
  }
  State out(shape);
  for (const auto& [k, c] : v.terms()) {
    const MultiIndex idx = multi_index(shape, k);
    MultiIndex moved(n);
    for (int i = 1; i <= n; ++i) moved[sigma[i - 1] - 1] = idx[i - 1];
    out.add(moved, c);
  }
  return out;
}

std::vector<FactorPair> two_factor_decomposition(const State& v, Subset j) {
  check_proper(v.shape(), j);
  if (v.is_zero()) throw ZeroState("cannot decompose the zero state");
  const Mat f = flatten(v, j);
  const RrefResult r = rref(f);
  // f = C * R with R the nonzero RREF rows and C the pivot columns of f.
  std::vector<FactorPair> pairs;
  for (std::size_t t = 0; t < r.rank; ++t) {
    FactorPair p;
    p.j_part.resize(f.rows());
    for (std::size_t row = 0; row < f.rows(); ++row) p.j_part[row] = f(row, r.pivots[t]);
    p.rest_part.assign(r.reduced.row(t).begin(), r.reduced.row(t).end());
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void CoeffSpec::validate() const {
  if (const auto* set = std::get_if<std::vector<Rational>>(&source)) {
    if (set->empty()) throw InvalidArgument("empty coefficient set");
  } else {
    const auto& r = std::get<Range>(source);
    if (r.lo > r.hi) throw InvalidArgument("empty coefficient range");
    if (r.max_den < 1) throw InvalidArgument("denominator bound must be positive");
  }
}

std::string CoeffSpec::describe() const {
  std::ostringstream os;
  if (const auto* set = std::get_if<std::vector<Rational>>(&source)) {
    os << '{';
    for (std::size_t i = 0; i < set->size(); ++i) os << (i ? "," : "") << (*set)[i];
    os << '}';
  } else {
    const auto& r = std::get<Range>(source);
    os << '[' << r.lo << ',' << r.hi << ']';
    if (r.max_den > 1) os << "/[1," << r.max_den << ']';
  }
  return os.str();
}

State random_state(const Shape& shape, const CoeffSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  State v(shape);
  for (std::size_t k = 0; k < shape.total_dim(); ++k) {
    if (const auto* set = std::get_if<std::vector<Rational>>(&spec.source)) {
      v.add_linear(k, (*set)[detail::uniform_below(rng, set->size())]);
    } else {
      const auto& r = std::get<CoeffSpec::Range>(spec.source);
      const std::int64_t num = detail::uniform_in(rng, r.lo, r.hi);
      const std::int64_t den = r.max_den > 1 ? detail::uniform_in(rng, 1, r.max_den) : 1;
      v.add_linear(k, Rational(BigInt(std::to_string(num)), BigInt(std::to_string(den))));
    }
  }
  return v;
}

LocalTransform random_local_transform(const Shape& shape, std::uint64_t seed, std::int64_t bound) {
  std::mt19937_64 rng(seed);
  LocalTransform g;
  for (std::size_t d : shape.dims()) {
    Mat m(d, d);
    do {
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = Rational(static_cast<long long>(detail::uniform_in(rng, -bound, bound)));
    } while (determinant(m).is_zero());
    g.factors.push_back(std::move(m));
  }
  return g;
}

}  // namespace entinv
