#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "entinv/tensor_state.hpp"

namespace entinv {

/// All 2^n - 2 nonempty proper subsets of {1..n}, ascending by bitmask.
std::vector<Subset> proper_subsets(int n);

/// Members of `s` as 1-based subsystem numbers, ascending.
std::vector<int> subset_members(Subset s);
std::string subset_to_string(Subset s);

/// Image of a subset under sigma (sigma[i-1] is the image of subsystem i).
Subset permute_subset(Subset s, const std::vector<int>& sigma);

/// A set Q of nonempty proper subsets of I, kept sorted by bitmask.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  /// Validates members against arity n and sorts them. Throws BadSubset.
  SubsetFamily(int n, std::vector<Subset> members);

  int arity() const { return n_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  Subset union_set() const;

  SubsetFamily permuted(const std::vector<int>& sigma) const;
  /// e.g. "{{1,2},{1,3},{2,3}}".
  std::string to_string() const;

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) = default;
  friend auto operator<=>(const SubsetFamily& a, const SubsetFamily& b) {
    return a.members_ <=> b.members_;
  }

 private:
  int n_ = 0;
  std::vector<Subset> members_;
};

/// Ordered list R of families indexing a signature.
struct GeneratingSet {
  int arity = 0;
  std::vector<SubsetFamily> families;
  std::vector<std::string> labels;

  std::size_t size() const { return families.size(); }
  /// Position of `q` in the list, or npos.
  std::size_t find(const SubsetFamily& q) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// perm[k] = position of sigma(families[k]). Throws InvalidArgument if R is not closed under sigma.
  std::vector<std::size_t> induced_permutation(const std::vector<int>& sigma) const;
};

/// The independent families used for the published tables: n = 2, 3, 4.
GeneratingSet canonical_generating_set(int n);

/// Iterates the dependent-invariant removal steps to a fixpoint, then drops
/// transpose-dual singleton families. Supports 2 <= n <= 5.
GeneratingSet reduce_generating_set(int n);

/// Same reduction, starting from an explicit collection of families encoded as
/// bit sets over proper subsets (bit s set <=> subset s is a member).
GeneratingSet reduce_generating_set_from(int n, const std::vector<std::uint64_t>& start);

/// All antichains of proper subsets (including the empty one), encoded as above.
std::vector<std::uint64_t> proper_subset_antichains(int n);

/// All permutations of {1..n} preserving the shape's dimension vector, identity first.
std::vector<std::vector<int>> shape_symmetries(const Shape& shape);

}  // namespace entinv
