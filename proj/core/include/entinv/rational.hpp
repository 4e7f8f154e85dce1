#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace entinv {

using BigInt = mpz_class;

/// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Converts to int64 if the value is an integer that fits; returns false otherwise.
bool to_int64(const BigInt& value, std::int64_t& out);

}  // namespace entinv

template <>
struct std::hash<entinv::Rational> {
  std::size_t operator()(const entinv::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
