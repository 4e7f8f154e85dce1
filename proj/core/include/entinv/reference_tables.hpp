#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace entinv::tables {

/// value(d) = constant + slope * d.
struct AffineEntry {
  int constant = 0;
  int slope = 0;
  int at(int d) const { return constant + slope * d; }
};

/// Class of the (2,2,d) or (2,3,d) family, with its signature affine in d.
struct ParametricRow {
  std::string_view label;
  std::array<AffineEntry, 4> signature;
  std::string_view representative;
};

const std::vector<ParametricRow>& family_22d();
const std::vector<ParametricRow>& family_23d();

/// Four-qubit class; an empty representative marks the one-parameter family C33.
struct FourQubitRow {
  std::string_view label;
  std::array<int, 19> signature;
  std::string_view representative;
};

const std::vector<FourQubitRow>& four_qubit_rows();

/// Representative of C33 for parameter c; throws InvalidArgument for c in {-2,-1,0,1}.
std::string c33_representative_text(long c_num, long c_den = 1);

/// Classes grouped by subsystem permutations, with the operator producing them from [1,...,1].
struct OrbitGroup {
  std::vector<std::string> labels;
  std::string_view expression;
};

const std::vector<OrbitGroup>& orbit_groups_222();
const std::vector<OrbitGroup>& orbit_groups_2222();

/// Four-qubit classes reachable with {0,1} coefficients, and those needing -1 as well.
const std::vector<std::string>& binary_classes_2222();
const std::vector<std::string>& signed_classes_2222();

struct MSetEntry {
  std::array<int, 3> k;
  std::vector<int> values;
};

/// M_{k1,k2,k3} for sorted k1 <= k2 <= k3.
const std::vector<MSetEntry>& m_set_table();

struct ClassCountEntry {
  std::array<int, 3> dims;
  int count;
  bool holds_for_larger_d;  // the count is stable for every larger last dimension
};

const std::vector<ClassCountEntry>& class_count_table();

/// Zero patterns of h (bit strings, '1' = nonzero). Variant 0 is the unprimed
/// row; further variants are the primed sub-rows of a split class.
struct PatternRow {
  std::string_view label;
  std::vector<std::string_view> variants;
};

const std::vector<PatternRow>& three_qubit_patterns();
const std::vector<PatternRow>& four_qubit_patterns();

/// Classes (with primes for variants) sharing one zero pattern of h_1..h_7.
struct PatternGroup {
  std::string_view pattern;
  std::vector<std::string> members;
};

const std::vector<PatternGroup>& four_qubit_pattern_groups();

/// "C47''" -> {"C47", 2}.
std::pair<std::string, int> split_primes(const std::string& member);

}  // namespace entinv::tables
