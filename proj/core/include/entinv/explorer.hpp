#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "entinv/generating_set.hpp"
#include "entinv/invariant_engine.hpp"
#include "entinv/tensor_state.hpp"

namespace entinv {

struct SignatureHit {
  Signature signature;
  State representative;  // fewest terms, then earliest in search order
  std::uint64_t hits = 0;
};

struct SearchReport {
  Shape shape;
  std::string coeff_spec;
  std::vector<SignatureHit> signatures;  // ascending by signature
  std::uint64_t total_states_examined = 0;
  std::optional<std::uint64_t> seed;

  const SignatureHit* find(const Signature& s) const;
};

struct EnumerationOptions {
  /// When nonzero, only states with at most this many nonzero coefficients are visited.
  std::size_t max_terms = 0;
  unsigned workers = 1;
  /// Permits more than 2^30 candidates.
  bool allow_large = false;
};

/// Number of candidate states the enumeration would visit.
long double enumeration_size(const Shape& shape, std::size_t coeff_count, bool has_zero, std::size_t max_terms);

/// Visits every assignment of coefficients to the dim V slots, or every assignment
/// with at most max_terms nonzero slots. Search order is an odometer over the
/// sorted coefficients with the first slot turning fastest. Results do not depend
/// on the worker count.
SearchReport enumerate_signatures(const Shape& shape, const std::vector<Rational>& coeffs, const GeneratingSet& r,
                                  const EnumerationOptions& options = {});

/// Samples `trials` random states (trial t uses a seed derived from (seed, t)) and
/// reports the signatures that are not in `known`.
SearchReport monte_carlo_search(const Shape& shape, std::uint64_t trials, std::uint64_t seed, const CoeffSpec& spec,
                                const GeneratingSet& r, const std::set<Signature>& known, unsigned workers = 1);

/// |C''| for supported shapes: two subsystems, three subsystems covered by the
/// built-in atlases or the M-set table, and four qubits. Throws Unsupported otherwise.
std::size_t class_count(const Shape& shape);

struct MSet {
  std::array<int, 3> k;
  std::vector<int> values;
};

struct MSetOptions {
  /// Upper bound on states visited by the sparse {0,1} stage.
  std::uint64_t sparse_budget = 2'000'000;
  std::uint64_t random_trials = 3000;
  std::uint64_t seed = 1;
};

/// Values m = ñ_{Q4} - d1 d2 d3 + k1 d1 + k2 d2 + k3 d3 over the classes found whose
/// flattenings have ranks (k1, k2, k3). Found by search, so a subset of the true set.
MSet m_set(const std::array<std::size_t, 3>& dims, const std::array<int, 3>& k, const MSetOptions& options = {});

}  // namespace entinv
