#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace circortho {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always normalized: denominator > 0 and
// gcd(|numerator|, denominator) == 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // implicit on purpose
  Rational(BigInt num, BigInt den);            // throws std::domain_error on den == 0

  // Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view s);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  // "p/q" with "/q" omitted when the denominator is 1.
  std::string str() const;

  // Correctly rounded to within a few ulp (numerator and denominator are
  // each converted with <= 1 ulp error before the division).
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

// Exact square root of a non-negative rational: present iff numerator and
// denominator are both perfect integer squares. Throws std::domain_error
// for negative input.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace circortho
