#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "entinv/generating_set.hpp"
#include "entinv/tensor_state.hpp"

namespace entinv {

/// Ordered tuple (m_Q(v))_{Q in R}.
struct Signature {
  std::vector<int> values;

  std::size_t size() const { return values.size(); }
  int operator[](std::size_t k) const { return values[k]; }
  /// Comma-joined values, e.g. "0,0,1,5".
  std::string to_string() const;
  /// Entries moved by an induced family permutation: out[perm[k]] = values[k].
  Signature permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept;
};

/// dim of the intersection of the extended kernels over Q (fast integer route).
std::size_t family_nullity(const State& v, const SubsetFamily& q);

/// Same quantity computed literally: nullspace of the stacked extended flattenings.
std::size_t family_nullity_reference(const State& v, const SubsetFamily& q);

/// family_nullity, divided by dim V over the complement of Q's union when that is nonempty.
std::size_t m_value(const State& v, const SubsetFamily& q);

Signature signature(const State& v, const GeneratingSet& r);

/// Reusable evaluator for one shape and generating set. Holds scratch buffers,
/// so one instance must not be shared between threads.
class SignatureEngine {
 public:
  SignatureEngine(const Shape& shape, const GeneratingSet& r);
  ~SignatureEngine();
  SignatureEngine(SignatureEngine&&) noexcept;
  SignatureEngine& operator=(SignatureEngine&&) noexcept;

  const Shape& shape() const;
  const GeneratingSet& generating_set() const;

  Signature operator()(const State& v);
  /// Signature of the state with the given integer coefficients in row-major order.
  Signature from_dense(const std::int64_t* coeffs);

  /// ñ_Q for each family, before the m_Q conversion.
  std::vector<std::size_t> nullities(const State& v);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace entinv
