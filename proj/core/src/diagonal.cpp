#include "circortho/diagonal.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace circortho {

DiagonalValue DiagonalValue::from_d_squared(Rational d2) {
  if (d2.is_negative()) throw std::domain_error("DiagonalValue: d^2 must be non-negative");
  auto root = exact_sqrt(d2);
  return DiagonalValue(std::move(d2), std::move(root));
}

DiagonalValue DiagonalValue::from_exact(const Rational& d) {
  if (d.is_negative()) throw std::domain_error("DiagonalValue: d must be non-negative");
  return DiagonalValue(d * d, d);
}

double DiagonalValue::approx() const {
  if (exact_) return exact_->to_double();
  return std::sqrt(d_squared_.to_double());
}

namespace {

// v = a^2 * b with b square-free; returns (a, b). Requires v >= 1.
std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t v) {
  std::uint64_t a = 1, b = 1;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) a *= p;
    if (e % 2) b *= p;
  }
  b *= v;  // leftover prime
  return {a, b};
}

// "a√b" with "a" omitted when 1 (unless b is 1) and "√b" omitted when b is 1.
std::string surd_part(std::uint64_t a, std::uint64_t b) {
  if (b == 1) return std::to_string(a);
  std::string s = a == 1 ? std::string() : std::to_string(a);
  s += "√";
  s += std::to_string(b);
  return s;
}

}  // namespace

std::string DiagonalValue::surd() const {
  if (exact_) return exact_->str();
  const BigInt& p = d_squared_.numerator();
  const BigInt& q = d_squared_.denominator();
  if (p > BigInt(INT64_MAX) || q > BigInt(INT64_MAX))
    return "√(" + d_squared_.str() + ")";
  auto [an, bn] = square_free_split(p.convert_to<std::uint64_t>());
  auto [ad, bd] = square_free_split(q.convert_to<std::uint64_t>());
  std::string num = surd_part(an, bn);
  std::string den = surd_part(ad, bd);
  if (den == "1") return num;
  if (bd == 1) return num + "/" + den;
  return num + "/(" + den + ")";
}

}  // namespace circortho
