#include "entinv/rational.hpp"

#include <limits>

#include "entinv/errors.hpp"

namespace entinv {

Rational::Rational(long long value) {
  if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
    value_ = static_cast<long>(value);
  } else {
    value_ = mpq_class(std::to_string(value));
  }
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw SyntaxError("empty rational literal");
  const auto slash = s.find('/');
  auto check_digits = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false)) {
    throw SyntaxError("malformed rational literal '" + s + "'");
  }
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw DivisionByZero("rational literal with zero denominator");
  return Rational(BigInt(num), d);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool to_int64(const BigInt& value, std::int64_t& out) {
  if (!value.fits_slong_p()) return false;
  out = value.get_si();
  return true;
}

}  // namespace entinv
