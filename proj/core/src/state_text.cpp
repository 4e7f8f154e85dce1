#include "entinv/state_text.hpp"

#include <cctype>

#include "entinv/errors.hpp"

namespace entinv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  State run(const Shape& shape) {
    if (s_.empty()) fail("empty state text");
    State v(shape);
    if (s_ == "0") return v;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    term(v, shape, negative);
    while (pos_ < s_.size()) {
      const char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      term(v, shape, op == '-');
    }
    return v;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  void term(State& v, const Shape& shape, bool negative) {
    Rational coeff = 1;
    if (peek() != '[') {
      std::string lit = digits();
      if (peek() == '/') {
        ++pos_;
        lit += '/' + digits();
      }
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
      coeff = Rational::parse(lit);
    }
    if (peek() != '[') fail("expected '['");
    ++pos_;
    MultiIndex idx;
    for (;;) {
      const std::string d = digits();
      if (d.size() > 9) throw IndexOutOfRange("index too large");
      idx.push_back(std::stoul(d));
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    if (idx.size() != shape.dims().size()) throw ArityMismatch("term has " + std::to_string(idx.size()) + " indices");
    v.add(idx, negative ? -coeff : coeff);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

State parse_state(std::string_view text, const Shape& shape) { return Parser(text).run(shape); }

std::string render_state(const State& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    Rational mag = c;
    if (c.sign() < 0) {
      out += '-';
      mag = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (mag != Rational(1)) out += mag.to_string() + '*';
    out += '[';
    const MultiIndex idx = multi_index(v.shape(), k);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(idx[i]);
    }
    out += ']';
  }
  return out;
}

}  // namespace entinv
