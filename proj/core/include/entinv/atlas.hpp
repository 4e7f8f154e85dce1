#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entinv/generating_set.hpp"
#include "entinv/invariant_engine.hpp"
#include "entinv/tensor_state.hpp"

namespace entinv {

struct ClassRecord {
  std::string label;
  Signature signature;
  std::string representative;  // state text grammar
  std::size_t orbit_id = 0;
};

/// A concrete classification table for one shape, with the canonical generating set.
struct Atlas {
  Shape shape;
  std::string family;  // "(2,2,d)", "(2,3,d)" or "(2,2,2,2)"
  GeneratingSet generating_set;
  std::vector<ClassRecord> records;
  std::size_t orbit_count = 0;

  const ClassRecord* find(const Signature& s) const;
  const ClassRecord* find_label(const std::string& label) const;
};

/// Shapes (2,2,d), (2,3,d) for d >= 2, and (2,2,2,2). Throws Unsupported otherwise.
Atlas builtin_atlas(const Shape& shape);

/// Parameter used for the C33 representative stored in the four-qubit atlas.
constexpr long kDefaultC33Parameter = 2;

/// Groups of record indices related by a dimension-preserving subsystem permutation.
std::vector<std::vector<std::size_t>> orbits(const Atlas& atlas);

struct Classification {
  std::optional<ClassRecord> record;  // empty when the signature is not in the atlas
  Signature signature;
};

/// Computes the signature and looks it up in the built-in atlas for the state's shape.
Classification classify(const State& v);
Classification classify(const State& v, const Atlas& atlas);

}  // namespace entinv
