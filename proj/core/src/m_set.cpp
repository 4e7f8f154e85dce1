#include <algorithm>
#include <random>
#include <set>

#include "entinv/detail/random.hpp"
#include "entinv/errors.hpp"
#include "entinv/explorer.hpp"

namespace entinv {

namespace {

// States supported on the block [1..k1]x[1..k2]x[1..k3] of a small core shape.
// Whatever the ambient dimensions, m only depends on the state inside the block.
class BlockSearch {
 public:
  explicit BlockSearch(const std::array<int, 3>& k)
      : k_(k),
        core_({static_cast<std::size_t>(std::max(k[0], 2)), static_cast<std::size_t>(std::max(k[1], 2)),
               static_cast<std::size_t>(std::max(k[2], 2))}),
        engine_(core_, canonical_generating_set(3)),
        dense_(core_.total_dim(), 0) {
    for (int a = 0; a < k[0]; ++a)
      for (int b = 0; b < k[1]; ++b)
        for (int c = 0; c < k[2]; ++c) slots_.push_back(linear_index(core_, {std::size_t(a + 1), std::size_t(b + 1), std::size_t(c + 1)}));
  }

  std::size_t block_size() const { return slots_.size(); }

  /// coeffs[i] goes to the i-th block slot.
  void visit(const std::vector<std::int64_t>& coeffs) {
    for (std::size_t i = 0; i < slots_.size(); ++i) dense_[slots_[i]] = coeffs[i];
    const Signature s = engine_.from_dense(dense_.data());
    for (int i = 0; i < 3; ++i)
      if (s[i] != static_cast<int>(core_.dim(i + 1)) - k_[i]) return;
    long m = s[3] - static_cast<long>(core_.total_dim());
    for (int i = 0; i < 3; ++i) m += static_cast<long>(k_[i]) * static_cast<long>(core_.dim(i + 1));
    found_.insert(static_cast<int>(m));
  }

  const std::set<int>& found() const { return found_; }

 private:
  std::array<int, 3> k_;
  Shape core_;
  SignatureEngine engine_;
  std::vector<std::int64_t> dense_;
  std::vector<std::size_t> slots_;
  std::set<int> found_;
};

void exhaustive_binary(BlockSearch& search) {
  const std::size_t b = search.block_size();
  std::vector<std::int64_t> coeffs(b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
    for (std::size_t i = 0; i < b; ++i) coeffs[i] = (mask >> i) & 1;
    search.visit(coeffs);
  }
}

// {0,1} states containing the first slot, by increasing number of further terms.
// Local permutations move any term to the first slot, so nothing is lost by fixing it.
// Ranks k need at least max(k) terms, so smaller states are skipped.
void sparse_binary(BlockSearch& search, std::size_t min_terms, std::uint64_t budget) {
  const std::size_t b = search.block_size();
  std::vector<std::int64_t> coeffs(b, 0);
  coeffs[0] = 1;
  std::uint64_t spent = 0;
  long double choose = 1;  // C(b-1, extra)
  for (std::size_t extra = 0; extra < b; ++extra) {
    if (extra > 0) choose = choose * static_cast<long double>(b - extra) / static_cast<long double>(extra);
    if (extra + 1 < min_terms) continue;
    if (static_cast<long double>(spent) + choose > static_cast<long double>(budget)) break;
    spent += static_cast<std::uint64_t>(choose);
    std::vector<std::size_t> pos(extra);
    for (std::size_t i = 0; i < extra; ++i) pos[i] = i + 1;
    while (true) {
      for (std::size_t p : pos) coeffs[p] = 1;
      search.visit(coeffs);
      for (std::size_t p : pos) coeffs[p] = 0;
      std::size_t i = extra;
      while (i > 0 && pos[i - 1] == b - extra + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < extra; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
}

// Dense generic draws reach the generic stratum; sparse signed draws with
// varying density reach degenerate ones that need a -1.
void random_states(BlockSearch& search, std::uint64_t trials, std::uint64_t seed) {
  const std::size_t b = search.block_size();
  std::vector<std::int64_t> coeffs(b);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(detail::derive_seed(seed, t));
    if (t % 2 == 0) {
      for (auto& x : coeffs) x = detail::uniform_in(rng, -3, 3);
    } else {
      const std::uint64_t keep = 1 + detail::uniform_below(rng, 4);  // nonzero with probability keep/5
      for (auto& x : coeffs) x = detail::uniform_below(rng, 5) < keep ? detail::uniform_in(rng, -1, 2) : 0;
    }
    search.visit(coeffs);
  }
}

}  // namespace

MSet m_set(const std::array<std::size_t, 3>& dims, const std::array<int, 3>& k, const MSetOptions& options) {
  for (int i = 0; i < 3; ++i) {
    if (k[i] < 1 || static_cast<std::size_t>(k[i]) > dims[i]) throw InvalidArgument("need 1 <= k_i <= d_i");
  }
  for (int i = 0; i < 3; ++i) {
    if (k[i] > k[(i + 1) % 3] * k[(i + 2) % 3]) throw Unsupported("no state has these flattening ranks");
  }
  // M is symmetric in k, so the search always runs on the sorted triple.
  std::array<int, 3> sorted = k;
  std::sort(sorted.begin(), sorted.end());
  BlockSearch search(sorted);
  if (search.block_size() <= 20) {
    exhaustive_binary(search);
  } else {
    sparse_binary(search, static_cast<std::size_t>(sorted[2]), options.sparse_budget);
  }
  random_states(search, options.random_trials, options.seed);
  return MSet{k, std::vector<int>(search.found().begin(), search.found().end())};
}

}  // namespace entinv
