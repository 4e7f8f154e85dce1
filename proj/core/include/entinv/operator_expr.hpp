#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "entinv/rational.hpp"
#include "entinv/tensor_state.hpp"

namespace entinv {

/// Polynomial in commuting involutions a_1..a_n (a_i a_i = 1). A monomial is
/// the set of flipped subsystems, stored as a Subset bitmask.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  static OperatorExpr constant(const Rational& c);
  static OperatorExpr flip(int subsystem);

  /// Parses e.g. "1+a_i*(a_j+a_k)" or "(1+a1 a2)(1+a3 a4)". Index letters
  /// i, j, k, l are bound to binding[0..3]; the symbol c takes the value `c`.
  static OperatorExpr parse(std::string_view text, const std::vector<int>& binding = {},
                            const Rational& c = Rational(2));

  const std::map<Subset, Rational>& terms() const { return terms_; }
  /// Highest subsystem index used by any monomial (0 for constants).
  int max_subsystem() const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  OperatorExpr operator-() const;

  std::string to_string() const;
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  void add(Subset m, const Rational& c);
  std::map<Subset, Rational> terms_;
};

/// Applies the expression to [1,...,1]. Requires every dimension to be 2.
State rep_from_operator(const OperatorExpr& expr, const Shape& shape);

}  // namespace entinv
