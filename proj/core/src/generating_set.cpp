#include "entinv/generating_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "entinv/errors.hpp"

namespace entinv {

std::vector<Subset> proper_subsets(int n) {
  if (n < 2 || n > 16) throw UnsupportedArity("proper_subsets needs 2 <= n <= 16");
  std::vector<Subset> out;
  const Subset full = (Subset{1} << n) - 1;
  for (Subset s = 1; s < full; ++s) out.push_back(s);
  return out;
}

std::vector<int> subset_members(Subset s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

std::string subset_to_string(Subset s) {
  std::string out = "{";
  const auto m = subset_members(s);
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "}";
}

Subset permute_subset(Subset s, const std::vector<int>& sigma) {
  Subset out = 0;
  for (int i : subset_members(s)) out |= subset_bit(sigma.at(i - 1));
  return out;
}

SubsetFamily::SubsetFamily(int n, std::vector<Subset> members) : n_(n), members_(std::move(members)) {
  if (n < 2 || n > 16) throw UnsupportedArity("family arity out of range");
  const Subset full = (Subset{1} << n) - 1;
  for (Subset s : members_) {
    if (s == 0 || s >= full) throw BadSubset("family members must be nonempty proper subsets");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw BadSubset("repeated family member");
  }
}

Subset SubsetFamily::union_set() const {
  return std::accumulate(members_.begin(), members_.end(), Subset{0}, std::bit_or<>());
}

SubsetFamily SubsetFamily::permuted(const std::vector<int>& sigma) const {
  std::vector<Subset> m;
  for (Subset s : members_) m.push_back(permute_subset(s, sigma));
  return SubsetFamily(n_, std::move(m));
}

std::string SubsetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) out += (i ? "," : "") + subset_to_string(members_[i]);
  return out + "}";
}

std::size_t GeneratingSet::find(const SubsetFamily& q) const {
  auto it = std::find(families.begin(), families.end(), q);
  return it == families.end() ? npos : static_cast<std::size_t>(it - families.begin());
}

std::vector<std::size_t> GeneratingSet::induced_permutation(const std::vector<int>& sigma) const {
  std::vector<std::size_t> perm;
  for (const auto& q : families) {
    const std::size_t at = find(q.permuted(sigma));
    if (at == npos) throw InvalidArgument("generating set is not closed under the permutation");
    perm.push_back(at);
  }
  return perm;
}

namespace {

Subset parse_digits(const char* digits) {
  Subset s = 0;
  for (const char* p = digits; *p; ++p) s |= subset_bit(*p - '0');
  return s;
}

GeneratingSet from_table(int n, std::initializer_list<std::initializer_list<const char*>> table) {
  GeneratingSet r;
  r.arity = n;
  for (const auto& row : table) {
    std::vector<Subset> m;
    for (const char* d : row) m.push_back(parse_digits(d));
    r.families.emplace_back(n, std::move(m));
    r.labels.push_back("Q" + std::to_string(r.families.size()));
  }
  return r;
}

}  // namespace

GeneratingSet canonical_generating_set(int n) {
  switch (n) {
    case 2:
      return from_table(2, {{"1"}});
    case 3:
      return from_table(3, {{"1"}, {"2"}, {"3"}, {"12", "13", "23"}});
    case 4:
      return from_table(4, {
                               {"1"},
                               {"2"},
                               {"3"},
                               {"4"},
                               {"12", "13", "23"},
                               {"12", "14", "24"},
                               {"13", "14", "34"},
                               {"23", "24", "34"},
                               {"12", "134", "234"},
                               {"13", "124", "234"},
                               {"14", "123", "234"},
                               {"23", "124", "134"},
                               {"24", "123", "134"},
                               {"34", "123", "124"},
                               {"12", "13", "14", "234"},
                               {"12", "23", "24", "134"},
                               {"13", "23", "34", "124"},
                               {"14", "24", "34", "123"},
                               {"123", "124", "134", "234"},
                           });
    default:
      throw UnsupportedArity("canonical generating sets exist for n = 2, 3, 4 only");
  }
}

namespace {

// Families are bit sets over proper subsets: bit s stands for subset s.
using FamilyBits = std::uint64_t;

FamilyBits maximal_members(FamilyBits x) {
  FamilyBits out = x;
  for (FamilyBits a = x; a; a &= a - 1) {
    const Subset s = static_cast<Subset>(std::countr_zero(a));
    for (FamilyBits b = x; b; b &= b - 1) {
      const Subset t = static_cast<Subset>(std::countr_zero(b));
      if (s != t && (s & t) == s) {
        out &= ~(FamilyBits{1} << s);
        break;
      }
    }
  }
  return out;
}

bool has_disjoint_pair(FamilyBits x) {
  for (FamilyBits a = x; a; a &= a - 1) {
    const Subset s = static_cast<Subset>(std::countr_zero(a));
    for (FamilyBits b = a & (a - 1); b; b &= b - 1) {
      if ((s & static_cast<Subset>(std::countr_zero(b))) == 0) return true;
    }
  }
  return false;
}

std::vector<Subset> members_of(FamilyBits x) {
  std::vector<Subset> m;
  for (; x; x &= x - 1) m.push_back(static_cast<Subset>(std::countr_zero(x)));
  return m;
}

}  // namespace

std::vector<std::uint64_t> proper_subset_antichains(int n) {
  if (n < 2 || n > 5) throw UnsupportedArity("antichain enumeration supports 2 <= n <= 5");
  const std::vector<Subset> subsets = proper_subsets(n);
  std::vector<FamilyBits> out;
  // Depth-first over subsets in ascending order, adding only incomparable ones.
  std::vector<std::pair<std::size_t, FamilyBits>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [next, fam] = stack.back();
    stack.pop_back();
    out.push_back(fam);
    for (std::size_t i = next; i < subsets.size(); ++i) {
      const Subset s = subsets[i];
      bool ok = true;
      for (FamilyBits b = fam; b && ok; b &= b - 1) {
        const Subset t = static_cast<Subset>(std::countr_zero(b));
        if ((s & t) == s || (s & t) == t) ok = false;
      }
      if (ok) stack.emplace_back(i + 1, fam | (FamilyBits{1} << s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratingSet reduce_generating_set_from(int n, const std::vector<std::uint64_t>& start) {
  if (n < 2 || n > 5) throw UnsupportedArity("reduce_generating_set supports 2 <= n <= 5");
  std::set<FamilyBits> r(start.begin(), start.end());
  for (bool changed = true; changed;) {
    changed = false;
    // Step 1: drop members contained in another member of the same family.
    std::set<FamilyBits> r1;
    for (FamilyBits x : r) r1.insert(maximal_members(x));
    // Step 2: drop families with two disjoint members.
    std::erase_if(r1, [](FamilyBits x) { return has_disjoint_pair(x); });
    // Step 3: drop families strictly contained in another family.
    std::set<FamilyBits> r3;
    for (FamilyBits x : r1) {
      bool contained = false;
      for (FamilyBits y : r1) {
        if (y != x && (x & y) == x) {
          contained = true;
          break;
        }
      }
      if (!contained) r3.insert(x);
    }
    changed = r3 != r;
    r = std::move(r3);
  }

  std::vector<SubsetFamily> fams;
  for (FamilyBits x : r) fams.emplace_back(n, members_of(x));
  std::sort(fams.begin(), fams.end());

  // Transpose duals: {{I\J}} carries the same information as {{J}}.
  const Subset full = (Subset{1} << n) - 1;
  std::vector<SubsetFamily> kept;
  for (const auto& q : fams) {
    if (q.size() == 1) {
      const Subset j = q.members()[0];
      const Subset dual = full & ~j;
      const SubsetFamily dual_family(n, {dual});
      if (dual < j && std::find(fams.begin(), fams.end(), dual_family) != fams.end()) continue;
    }
    kept.push_back(q);
  }

  GeneratingSet out;
  out.arity = n;
  out.families = std::move(kept);
  for (const auto& q : out.families) out.labels.push_back(q.to_string());
  return out;
}

GeneratingSet reduce_generating_set(int n) {
  if (n < 2 || n > 5) throw UnsupportedArity("reduce_generating_set supports 2 <= n <= 5");
  if (n <= 4) {
    const std::size_t count = (std::size_t{1} << n) - 2;
    std::vector<std::uint64_t> all;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << count); ++x) all.push_back(x << 1);
    return reduce_generating_set_from(n, all);
  }
  // For n = 5 the full power set is out of reach; the antichains are exactly
  // what step 1 leaves behind, so seeding with them gives the same fixpoint.
  return reduce_generating_set_from(n, proper_subset_antichains(n));
}

std::vector<std::vector<int>> shape_symmetries(const Shape& shape) {
  std::vector<int> sigma(shape.arity());
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 1; i <= shape.arity(); ++i) ok = ok && shape.dim(sigma[i - 1]) == shape.dim(i);
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace entinv
