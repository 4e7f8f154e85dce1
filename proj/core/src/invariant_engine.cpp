#include "entinv/invariant_engine.hpp"

#include <algorithm>
#include <functional>

#include "entinv/detail/echelon.hpp"
#include "entinv/errors.hpp"

namespace entinv {

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

Signature Signature::permuted(const std::vector<std::size_t>& perm) const {
  Signature out;
  out.values.resize(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out.values[perm[k]] = values[k];
  return out;
}

std::size_t SignatureHash::operator()(const Signature& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : s.values) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

namespace {

struct SubsetPlan {
  Subset j = 0;
  std::size_t dim_j = 0;
  std::size_t dim_rest = 0;
  std::vector<std::size_t> pos;  // (i, k) row-major -> full index
};

struct FamilyPlan {
  std::vector<std::size_t> members;  // indices into the subset plans
  std::size_t divisor = 1;           // dim V over the complement of the union
};

template <class Int>
struct Workspace {
  std::vector<detail::Echelon<Int>> per_subset;
  detail::Echelon<Int> big;
  std::vector<Int> coeffs;
};

}  // namespace

struct SignatureEngine::Impl {
  Shape shape;
  GeneratingSet r;
  std::vector<SubsetPlan> subsets;
  std::vector<FamilyPlan> families;
  Workspace<std::int64_t> small;
  Workspace<mpz_class> wide;

  Impl(const Shape& s, const GeneratingSet& gs) : shape(s), r(gs) {
    if (r.arity != shape.arity()) throw ArityMismatch("generating set arity differs from the shape's");
    const Subset full = shape.full_set();
    for (const auto& q : r.families) {
      if (q.size() == 0) throw EmptyFamily("family without members");
      FamilyPlan fp;
      for (Subset j : q.members()) {
        auto it = std::find_if(subsets.begin(), subsets.end(), [j](const SubsetPlan& p) { return p.j == j; });
        if (it == subsets.end()) {
          SubsetPlan p;
          p.j = j;
          p.dim_j = shape.dim_of(j);
          p.dim_rest = shape.dim_of(full & ~j);
          p.pos = split_positions(shape, j);
          subsets.push_back(std::move(p));
          it = subsets.end() - 1;
        }
        fp.members.push_back(static_cast<std::size_t>(it - subsets.begin()));
      }
      fp.divisor = shape.dim_of(full & ~q.union_set());
      families.push_back(std::move(fp));
    }
    init(small);
    init(wide);
  }

  template <class Int>
  void init(Workspace<Int>& w) {
    for (const auto& p : subsets) w.per_subset.emplace_back(p.dim_j);
    w.big.reset(shape.total_dim());
    w.coeffs.assign(shape.total_dim(), Int(0));
  }

  template <class Int>
  std::vector<std::size_t> nullities(Workspace<Int>& w) {
    const std::size_t dim_v = shape.total_dim();
    const Int* a = w.coeffs.data();
    // Basis of the column space of each flattening f_J.
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const SubsetPlan& p = subsets[s];
      auto& e = w.per_subset[s];
      e.reset(p.dim_j);
      for (std::size_t k = 0; k < p.dim_rest && !e.full(); ++k) {
        Int* row = e.scratch();
        for (std::size_t i = 0; i < p.dim_j; ++i) row[i] = a[p.pos[i * p.dim_rest + k]];
        e.insert_scratch();
      }
    }
    std::vector<std::size_t> out;
    out.reserve(families.size());
    for (const FamilyPlan& f : families) {
      if (f.members.size() == 1) {
        const SubsetPlan& p = subsets[f.members[0]];
        out.push_back((p.dim_j - w.per_subset[f.members[0]].rank()) * p.dim_rest);
        continue;
      }
      // The row space of the extended map is spanned by c (x) e_k for c in the column space.
      auto& big = w.big;
      big.reset(dim_v);
      for (std::size_t m : f.members) {
        const SubsetPlan& p = subsets[m];
        const auto& e = w.per_subset[m];
        for (std::size_t b = 0; b < e.rank() && !big.full(); ++b) {
          const Int* basis = e.row(b);
          for (std::size_t k = 0; k < p.dim_rest && !big.full(); ++k) {
            Int* row = big.scratch();
            std::fill(row, row + dim_v, Int(0));
            for (std::size_t i = 0; i < p.dim_j; ++i) row[p.pos[i * p.dim_rest + k]] = basis[i];
            big.insert_scratch();
          }
        }
      }
      out.push_back(dim_v - big.rank());
    }
    return out;
  }

  std::vector<std::size_t> nullities_of(const State& v) {
    if (!(v.shape() == shape)) throw ShapeMismatch("state shape differs from the engine's");
    // Clear denominators: scaling does not change any kernel.
    BigInt den = 1;
    for (const auto& [k, c] : v.terms()) den = lcm(den, c.denominator());
    bool fits = true;
    std::fill(small.coeffs.begin(), small.coeffs.end(), 0);
    std::fill(wide.coeffs.begin(), wide.coeffs.end(), 0);
    for (const auto& [k, c] : v.terms()) {
      const BigInt x = c.numerator() * (den / c.denominator());
      wide.coeffs[k] = x;
      fits = fits && to_int64(x, small.coeffs[k]);
    }
    if (fits) {
      try {
        return nullities(small);
      } catch (const detail::Overflow&) {
      }
    }
    return nullities(wide);
  }

  std::vector<std::size_t> nullities_of(const std::int64_t* coeffs) {
    std::copy(coeffs, coeffs + shape.total_dim(), small.coeffs.begin());
    try {
      return nullities(small);
    } catch (const detail::Overflow&) {
      for (std::size_t k = 0; k < shape.total_dim(); ++k) wide.coeffs[k] = mpz_class(std::to_string(coeffs[k]));
      return nullities(wide);
    }
  }

  Signature convert(const std::vector<std::size_t>& n) const {
    Signature s;
    s.values.reserve(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
      const std::size_t d = families[k].divisor;
      if (n[k] % d != 0) throw DivisibilityViolation("nullity of " + r.families[k].to_string() + " not divisible");
      s.values.push_back(static_cast<int>(n[k] / d));
    }
    return s;
  }
};

SignatureEngine::SignatureEngine(const Shape& shape, const GeneratingSet& r)
    : impl_(std::make_unique<Impl>(shape, r)) {}
SignatureEngine::~SignatureEngine() = default;
SignatureEngine::SignatureEngine(SignatureEngine&&) noexcept = default;
SignatureEngine& SignatureEngine::operator=(SignatureEngine&&) noexcept = default;

const Shape& SignatureEngine::shape() const { return impl_->shape; }
const GeneratingSet& SignatureEngine::generating_set() const { return impl_->r; }

Signature SignatureEngine::operator()(const State& v) { return impl_->convert(impl_->nullities_of(v)); }

Signature SignatureEngine::from_dense(const std::int64_t* coeffs) {
  return impl_->convert(impl_->nullities_of(coeffs));
}

std::vector<std::size_t> SignatureEngine::nullities(const State& v) { return impl_->nullities_of(v); }

namespace {

GeneratingSet single(const SubsetFamily& q) {
  if (q.size() == 0) throw EmptyFamily("family without members");
  return GeneratingSet{q.arity(), {q}, {q.to_string()}};
}

}  // namespace

std::size_t family_nullity(const State& v, const SubsetFamily& q) {
  if (q.arity() != v.shape().arity()) throw ArityMismatch("family arity differs from the state's");
  return SignatureEngine(v.shape(), single(q)).nullities(v)[0];
}

std::size_t family_nullity_reference(const State& v, const SubsetFamily& q) {
  if (q.size() == 0) throw EmptyFamily("family without members");
  if (q.arity() != v.shape().arity()) throw ArityMismatch("family arity differs from the state's");
  std::vector<Mat> ms;
  for (Subset j : q.members()) ms.push_back(extended_flatten(v, j));
  return kernel_intersection(ms).dim();
}

std::size_t m_value(const State& v, const SubsetFamily& q) {
  if (q.arity() != v.shape().arity()) throw ArityMismatch("family arity differs from the state's");
  return static_cast<std::size_t>(SignatureEngine(v.shape(), single(q))(v).values[0]);
}

Signature signature(const State& v, const GeneratingSet& r) {
  if (r.arity != v.shape().arity()) throw ArityMismatch("generating set arity differs from the state's");
  return SignatureEngine(v.shape(), r)(v);
}

}  // namespace entinv
