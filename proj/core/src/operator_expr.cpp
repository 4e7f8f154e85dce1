#include "entinv/operator_expr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "entinv/errors.hpp"
#include "entinv/generating_set.hpp"

namespace entinv {

OperatorExpr OperatorExpr::constant(const Rational& c) {
  OperatorExpr e;
  e.add(0, c);
  return e;
}

OperatorExpr OperatorExpr::flip(int subsystem) {
  if (subsystem < 1 || subsystem > 16) throw InvalidArgument("flip index out of range");
  OperatorExpr e;
  e.add(subset_bit(subsystem), 1);
  return e;
}

void OperatorExpr::add(Subset m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int OperatorExpr::max_subsystem() const {
  Subset all = 0;
  for (const auto& [m, c] : terms_) all |= m;
  return static_cast<int>(std::bit_width(all));
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma ^ mb, ca * cb);
  return out;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c;
    if (c.sign() < 0) {
      out += '-';
      mag = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    std::string mono;
    for (int i : subset_members(m)) mono += (mono.empty() ? "" : "*") + std::string("a") + std::to_string(i);
    if (mono.empty()) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + '*';
      out += mono;
    }
  }
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<int>& binding, const Rational& c) : binding_(binding), c_(c) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  OperatorExpr run() {
    if (s_.empty()) fail("empty operator expression");
    OperatorExpr e = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

  OperatorExpr expr() {
    OperatorExpr acc;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    acc = negative ? -term() : term();
    while (peek() == '+' || peek() == '-') {
      const bool minus = s_[pos_++] == '-';
      if (minus) {
        acc -= term();
      } else {
        acc += term();
      }
    }
    return acc;
  }

  OperatorExpr term() {
    OperatorExpr acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (peek() == '(' || peek() == 'a' || peek() == 'c' || std::isdigit(static_cast<unsigned char>(peek()))) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  OperatorExpr factor() {
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      OperatorExpr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (ch == 'c') {
      ++pos_;
      return OperatorExpr::constant(c_);
    }
    if (ch == 'a') {
      ++pos_;
      if (peek() == '_') ++pos_;
      const char idx = peek();
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(idx)) && idx != '0') return OperatorExpr::flip(idx - '0');
      static const std::string letters = "ijkl";
      const auto at = letters.find(idx);
      if (idx == '\0' || at == std::string::npos) fail("expected subsystem index after 'a'");
      if (at >= binding_.size()) throw InvalidArgument(std::string("index letter '") + idx + "' is not bound");
      return OperatorExpr::flip(binding_[at]);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string lit;
      while (std::isdigit(static_cast<unsigned char>(peek()))) lit += s_[pos_++];
      if (peek() == '/') {
        lit += s_[pos_++];
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) lit += s_[pos_++];
      }
      return OperatorExpr::constant(Rational::parse(lit));
    }
    fail("expected a factor");
  }

  std::string s_;
  std::size_t pos_ = 0;
  const std::vector<int>& binding_;
  Rational c_;
};

}  // namespace

OperatorExpr OperatorExpr::parse(std::string_view text, const std::vector<int>& binding, const Rational& c) {
  return ExprParser(text, binding, c).run();
}

State rep_from_operator(const OperatorExpr& expr, const Shape& shape) {
  if (std::any_of(shape.dims().begin(), shape.dims().end(), [](std::size_t d) { return d != 2; })) {
    throw NonQubitShape("flip operators act on qubit subsystems only");
  }
  if (expr.max_subsystem() > shape.arity()) throw ArityMismatch("operator refers to a missing subsystem");
  State v(shape);
  for (const auto& [m, c] : expr.terms()) {
    MultiIndex idx(shape.dims().size(), 1);
    for (int i : subset_members(m)) idx[i - 1] = 2;
    v.add(idx, c);
  }
  return v;
}

}  // namespace entinv
