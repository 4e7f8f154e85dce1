#pragma once

#include <string>
#include <vector>

#include "entinv/rational.hpp"
#include "entinv/tensor_state.hpp"

namespace entinv {

/// Values h_1..h_4 (three qubits) or h_1..h_7 (four qubits).
struct HVector {
  std::vector<Rational> values;
};

/// Entrywise zero test: true marks a nonzero value.
struct ZeroPattern {
  std::vector<bool> nonzero;

  /// '0' for zero and '1' for nonzero, e.g. "1110001".
  std::string to_string() const;
  static ZeroPattern parse(const std::string& bits);
  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
  friend auto operator<=>(const ZeroPattern&, const ZeroPattern&) = default;
};

/// h_1..h_3 as quadratic forms and h_4 = Cayley's 2x2x2 hyperdeterminant. Shape (2,2,2).
HVector h_three_qubits(const State& v);

/// h_1 (quadratic), h_2..h_4 (4x4 determinants), h_5..h_7 (3x3 determinants of
/// quadratic entries). Shape (2,2,2,2).
HVector h_four_qubits(const State& v);

/// h_2+h_3+h_4 = 0, h_1h_2-h_6+h_7 = 0, h_1h_3-h_7+h_5 = 0, h_1h_4-h_5+h_6 = 0.
bool check_relations(const HVector& h);

ZeroPattern zero_pattern(const HVector& h);

}  // namespace entinv
