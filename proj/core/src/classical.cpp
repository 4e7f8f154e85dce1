#include "entinv/classical.hpp"

#include <array>

#include "entinv/errors.hpp"
#include "entinv/matrix.hpp"

namespace entinv {

std::string ZeroPattern::to_string() const {
  std::string out;
  for (bool b : nonzero) out += b ? '1' : '0';
  return out;
}

ZeroPattern ZeroPattern::parse(const std::string& bits) {
  ZeroPattern p;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw SyntaxError("zero pattern must consist of 0 and 1");
    p.nonzero.push_back(ch == '1');
  }
  return p;
}

HVector h_three_qubits(const State& v) {
  if (!(v.shape() == Shape({2, 2, 2}))) throw ShapeMismatch("h_three_qubits needs shape (2,2,2)");
  auto V = [&v](std::size_t a, std::size_t b, std::size_t c) { return v.at({a, b, c}); };
  HVector h;
  h.values.push_back(V(1, 1, 1) * V(1, 2, 2) - V(1, 1, 2) * V(1, 2, 1) + V(2, 1, 1) * V(2, 2, 2) - V(2, 1, 2) * V(2, 2, 1));
  h.values.push_back(V(1, 1, 1) * V(2, 1, 2) - V(1, 1, 2) * V(2, 1, 1) + V(1, 2, 1) * V(2, 2, 2) - V(1, 2, 2) * V(2, 2, 1));
  h.values.push_back(V(1, 1, 1) * V(2, 2, 1) - V(1, 2, 1) * V(2, 1, 1) + V(1, 1, 2) * V(2, 2, 2) - V(1, 2, 2) * V(2, 1, 2));
  // Cayley hyperdeterminant; a[x][y][z] = v_{x+1,y+1,z+1}.
  const Rational a000 = V(1, 1, 1), a001 = V(1, 1, 2), a010 = V(1, 2, 1), a011 = V(1, 2, 2);
  const Rational a100 = V(2, 1, 1), a101 = V(2, 1, 2), a110 = V(2, 2, 1), a111 = V(2, 2, 2);
  Rational det = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                 a100 * a100 * a011 * a011;
  det -= Rational(2) * (a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                        a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101);
  det += Rational(4) * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111);
  h.values.push_back(det);
  return h;
}

namespace {

Rational det3(const Rational (&m)[3][3]) {
  Mat a(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = m[i][j];
  return determinant(a);
}

}  // namespace

HVector h_four_qubits(const State& v) {
  if (!(v.shape() == Shape({2, 2, 2, 2}))) throw ShapeMismatch("h_four_qubits needs shape (2,2,2,2)");
  auto V = [&v](std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return v.at({a, b, c, d}); };
  using Cell = std::array<std::size_t, 4>;
  auto det4 = [&V](const std::array<std::array<Cell, 4>, 4>& cells) {
    Mat m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Cell& c = cells[i][j];
        m(i, j) = V(c[0], c[1], c[2], c[3]);
      }
    return determinant(m);
  };

  HVector h;
  h.values.push_back(V(1, 1, 1, 1) * V(2, 2, 2, 2) - V(1, 1, 1, 2) * V(2, 2, 2, 1) - V(1, 1, 2, 1) * V(2, 2, 1, 2) +
                     V(1, 1, 2, 2) * V(2, 2, 1, 1) - V(1, 2, 1, 1) * V(2, 1, 2, 2) + V(1, 2, 1, 2) * V(2, 1, 2, 1) +
                     V(1, 2, 2, 1) * V(2, 1, 1, 2) - V(1, 2, 2, 2) * V(2, 1, 1, 1));
  h.values.push_back(det4({{{{{1, 1, 1, 1}, {1, 2, 1, 1}, {2, 1, 1, 1}, {2, 2, 1, 1}}},
                            {{{1, 1, 1, 2}, {1, 2, 1, 2}, {2, 1, 1, 2}, {2, 2, 1, 2}}},
                            {{{1, 1, 2, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}, {2, 2, 2, 1}}},
                            {{{1, 1, 2, 2}, {1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 2, 2}}}}}));
  h.values.push_back(det4({{{{{1, 1, 1, 1}, {2, 1, 1, 1}, {1, 1, 2, 1}, {2, 1, 2, 1}}},
                            {{{1, 1, 1, 2}, {2, 1, 1, 2}, {1, 1, 2, 2}, {2, 1, 2, 2}}},
                            {{{1, 2, 1, 1}, {2, 2, 1, 1}, {1, 2, 2, 1}, {2, 2, 2, 1}}},
                            {{{1, 2, 1, 2}, {2, 2, 1, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}}}}}));
  h.values.push_back(det4({{{{{1, 1, 1, 1}, {1, 1, 1, 2}, {2, 1, 1, 1}, {2, 1, 1, 2}}},
                            {{{1, 1, 2, 1}, {1, 1, 2, 2}, {2, 1, 2, 1}, {2, 1, 2, 2}}},
                            {{{1, 2, 1, 1}, {1, 2, 1, 2}, {2, 2, 1, 1}, {2, 2, 1, 2}}},
                            {{{1, 2, 2, 1}, {1, 2, 2, 2}, {2, 2, 2, 1}, {2, 2, 2, 2}}}}}));

  const Rational h5m[3][3] = {
      {
      -V(1,1,1,2) * V(1,1,2,1) + V(1,1,1,1) * V(1,1,2,2),
      V(1,1,2,2) * V(1,2,1,1) - V(1,1,2,1) * V(1,2,1,2) - V(1,1,1,2) * V(1,2,2,1) + V(1,1,1,1) * V(1,2,2,2),
      -V(1,2,1,2) * V(1,2,2,1) + V(1,2,1,1) * V(1,2,2,2)},
      {
      V(1,1,2,2) * V(2,1,1,1) - V(1,1,2,1) * V(2,1,1,2) - V(1,1,1,2) * V(2,1,2,1) + V(1,1,1,1) * V(2,1,2,2),
      V(1,2,2,2) * V(2,1,1,1) - V(1,2,2,1) * V(2,1,1,2) - V(1,2,1,2) * V(2,1,2,1) + V(1,2,1,1) * V(2,1,2,2) + V(1,1,2,2) * V(2,2,1,1) - V(1,1,2,1) * V(2,2,1,2) - V(1,1,1,2) * V(2,2,2,1) + V(1,1,1,1) * V(2,2,2,2),
      V(1,2,2,2) * V(2,2,1,1) - V(1,2,2,1) * V(2,2,1,2) - V(1,2,1,2) * V(2,2,2,1) + V(1,2,1,1) * V(2,2,2,2)},
      {
      -V(2,1,1,2) * V(2,1,2,1) + V(2,1,1,1) * V(2,1,2,2),
      V(2,1,2,2) * V(2,2,1,1) - V(2,1,2,1) * V(2,2,1,2) - V(2,1,1,2) * V(2,2,2,1) + V(2,1,1,1) * V(2,2,2,2),
      -V(2,2,1,2) * V(2,2,2,1) + V(2,2,1,1) * V(2,2,2,2)},
  };
  const Rational h6m[3][3] = {
      {
      -V(1,1,1,2) * V(1,2,1,1) + V(1,1,1,1) * V(1,2,1,2),
      -V(1,1,2,2) * V(1,2,1,1) + V(1,1,2,1) * V(1,2,1,2) - V(1,1,1,2) * V(1,2,2,1) + V(1,1,1,1) * V(1,2,2,2),
      -V(1,1,2,2) * V(1,2,2,1) + V(1,1,2,1) * V(1,2,2,2)},
      {
      V(1,2,1,2) * V(2,1,1,1) - V(1,2,1,1) * V(2,1,1,2) - V(1,1,1,2) * V(2,2,1,1) + V(1,1,1,1) * V(2,2,1,2),
      V(1,2,2,2) * V(2,1,1,1) - V(1,2,2,1) * V(2,1,1,2) + V(1,2,1,2) * V(2,1,2,1) - V(1,2,1,1) * V(2,1,2,2) - V(1,1,2,2) * V(2,2,1,1) + V(1,1,2,1) * V(2,2,1,2) - V(1,1,1,2) * V(2,2,2,1) + V(1,1,1,1) * V(2,2,2,2),
      V(1,2,2,2) * V(2,1,2,1) - V(1,2,2,1) * V(2,1,2,2) - V(1,1,2,2) * V(2,2,2,1) + V(1,1,2,1) * V(2,2,2,2)},
      {
      -V(2,1,1,2) * V(2,2,1,1) + V(2,1,1,1) * V(2,2,1,2),
      -V(2,1,2,2) * V(2,2,1,1) + V(2,1,2,1) * V(2,2,1,2) - V(2,1,1,2) * V(2,2,2,1) + V(2,1,1,1) * V(2,2,2,2),
      -V(2,1,2,2) * V(2,2,2,1) + V(2,1,2,1) * V(2,2,2,2)},
  };
  const Rational h7m[3][3] = {
      {
      -V(1,1,2,1) * V(1,2,1,1) + V(1,1,1,1) * V(1,2,2,1),
      -V(1,1,2,2) * V(1,2,1,1) - V(1,1,2,1) * V(1,2,1,2) + V(1,1,1,2) * V(1,2,2,1) + V(1,1,1,1) * V(1,2,2,2),
      -V(1,1,2,2) * V(1,2,1,2) + V(1,1,1,2) * V(1,2,2,2)},
      {
      V(1,2,2,1) * V(2,1,1,1) - V(1,2,1,1) * V(2,1,2,1) - V(1,1,2,1) * V(2,2,1,1) + V(1,1,1,1) * V(2,2,2,1),
      V(1,2,2,2) * V(2,1,1,1) + V(1,2,2,1) * V(2,1,1,2) - V(1,2,1,2) * V(2,1,2,1) - V(1,2,1,1) * V(2,1,2,2) - V(1,1,2,2) * V(2,2,1,1) - V(1,1,2,1) * V(2,2,1,2) + V(1,1,1,2) * V(2,2,2,1) + V(1,1,1,1) * V(2,2,2,2),
      V(1,2,2,2) * V(2,1,1,2) - V(1,2,1,2) * V(2,1,2,2) - V(1,1,2,2) * V(2,2,1,2) + V(1,1,1,2) * V(2,2,2,2)},
      {
      -V(2,1,2,1) * V(2,2,1,1) + V(2,1,1,1) * V(2,2,2,1),
      -V(2,1,2,2) * V(2,2,1,1) - V(2,1,2,1) * V(2,2,1,2) + V(2,1,1,2) * V(2,2,2,1) + V(2,1,1,1) * V(2,2,2,2),
      -V(2,1,2,2) * V(2,2,1,2) + V(2,1,1,2) * V(2,2,2,2)},
  };

  h.values.push_back(det3(h5m));
  h.values.push_back(det3(h6m));
  h.values.push_back(det3(h7m));
  return h;
}

bool check_relations(const HVector& h) {
  if (h.values.size() != 7) return false;
  const auto& x = h.values;
  return (x[1] + x[2] + x[3]).is_zero() && (x[0] * x[1] - x[5] + x[6]).is_zero() &&
         (x[0] * x[2] - x[6] + x[4]).is_zero() && (x[0] * x[3] - x[4] + x[5]).is_zero();
}

ZeroPattern zero_pattern(const HVector& h) {
  ZeroPattern p;
  for (const Rational& x : h.values) p.nonzero.push_back(!x.is_zero());
  return p;
}

}  // namespace entinv
