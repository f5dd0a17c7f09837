#pragma once

#include <optional>
#include <string>

#include "circortho/rational.hpp"

namespace circortho {

// The diagonal value d of a generator, stored exactly as d^2. The search
// derives d^2 as a rational while d itself is often a surd, so all exact
// comparisons go through d^2; the rational root is kept alongside when it
// exists.
class DiagonalValue {
 public:
  DiagonalValue() : DiagonalValue(from_d_squared(Rational(0))) {}

  // Throws std::domain_error when d2 < 0.
  static DiagonalValue from_d_squared(Rational d2);
  // Throws std::domain_error when d < 0.
  static DiagonalValue from_exact(const Rational& d);

  const Rational& d_squared() const { return d_squared_; }
  // Present iff d^2 is the square of a rational; always >= 0.
  const std::optional<Rational>& exact() const { return exact_; }

  // sqrt(d_squared) as a double, within a few machine epsilons relative.
  double approx() const;

  // Exact display: "5/2", "0", "1/(2√2)", "3√3/(2√5)". Falls back to
  // "√(p/q)" when the square-free split would need factoring beyond 63-bit
  // integers.
  std::string surd() const;

  friend bool operator==(const DiagonalValue& a, const DiagonalValue& b) {
    return a.d_squared_ == b.d_squared_;
  }

 private:
  explicit DiagonalValue(Rational d2, std::optional<Rational> exact)
      : d_squared_(std::move(d2)), exact_(std::move(exact)) {}

  Rational d_squared_;
  std::optional<Rational> exact_;
};

}  // namespace circortho
