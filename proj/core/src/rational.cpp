#include "circortho/rational.hpp"

#include <stdexcept>

namespace circortho {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view p = s.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_int(p) || !is_int(q))
    throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(s) + "'");
  return Rational(BigInt(std::string(p)), BigInt(std::string(q)));
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::optional<BigInt> integer_sqrt_exact(const BigInt& v) {
  BigInt r = mp::sqrt(v);  // floor square root
  if (r * r == v) return r;
  return std::nullopt;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.is_negative()) throw std::domain_error("exact_sqrt: negative input");
  auto n = integer_sqrt_exact(q.numerator());
  if (!n) return std::nullopt;
  auto d = integer_sqrt_exact(q.denominator());
  if (!d) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

}  // namespace circortho
