#include "circortho/feasibility.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "circortho/spectral.hpp"

namespace circortho::feasibility {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

namespace {

std::string factorization_str(std::uint64_t v) {
  if (v == 1) return "1";
  std::string s;
  for (auto [p, e] : factorize(v)) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

int num_prime_factors_with_multiplicity(std::uint64_t v) {
  int total = 0;
  for (auto [p, e] : factorize(v)) total += e;
  return total;
}

bool is_prime_power(std::uint64_t v) {  // p^m with m >= 1
  return v >= 2 && factorize(v).size() == 1;
}

std::optional<std::int64_t> integer_sqrt_exact(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r == v) return r;
  return std::nullopt;
}

}  // namespace

std::vector<EvenOrderCandidate> even_order_candidates(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("even_order_candidates: n must be even and >= 2");
  std::vector<EvenOrderCandidate> out;
  // k <= n / (2 sqrt(n-1))  <=>  4 k^2 (n-1) <= n^2
  for (std::int64_t k = 1; 4 * k * k * (n - 1) <= static_cast<std::int64_t>(n) * n; ++k) {
    Rational d2 = Rational(static_cast<long long>(n) * n, 4 * k * k) - Rational(n - 1);
    auto d = DiagonalValue::from_d_squared(std::move(d2));
    bool rational = d.exact().has_value();
    out.push_back(EvenOrderCandidate{static_cast<int>(k), std::move(d), rational});
  }
  return out;
}

FilterVerdict integer_d_filter(int n, std::int64_t d) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("integer_d_filter: n must be even and >= 2");
  if (d < 0) throw std::domain_error("integer_d_filter: d must be non-negative");

  FilterVerdict v;
  auto violate = [&](const char* id, std::string text) {
    v.allowed = false;
    v.reasons.emplace_back(id, std::move(text));
  };

  const std::int64_t half = n / 2;
  const std::int64_t d2 = d * d;
  v.derived["n_half_factorization"] = factorization_str(static_cast<std::uint64_t>(half));

  auto ell = integer_sqrt_exact(d2 + n - 1);
  if (ell) {
    v.derived["ell"] = std::to_string(*ell);
    if (half % *ell == 0) v.derived["k"] = std::to_string(half / *ell);
  }

  // P3.3i: ell = sqrt(d^2+n-1) must be an integer
  if (!ell) {
    violate("P3.3i", "d^2+n-1 = " + std::to_string(d2 + n - 1) + " is not a perfect square");
  } else {
    // P3.3ii: ell | n/2
    if (half % *ell != 0)
      violate("P3.3ii", "ell = " + std::to_string(*ell) + " does not divide n/2 = " +
                            std::to_string(half));
    // P3.3iii: ell | d^2-1, and 2*ell | d^2-1 for odd d
    if ((d2 - 1) % *ell != 0)
      violate("P3.3iii", "ell = " + std::to_string(*ell) + " does not divide d^2-1 = " +
                             std::to_string(d2 - 1));
    else if (d % 2 == 1 && (d2 - 1) % (2 * *ell) != 0)
      violate("P3.3iii", "d odd but 2*ell = " + std::to_string(2 * *ell) +
                             " does not divide d^2-1 = " + std::to_string(d2 - 1));
  }
  // P3.3iv: n-1 prime forces the trivial diagonal
  if (is_prime(static_cast<std::uint64_t>(n - 1)) && d != half - 1)
    violate("P3.3iv", "n-1 = " + std::to_string(n - 1) + " is prime, so d must be n/2-1 = " +
                          std::to_string(half - 1));
  // C3.6: n/2 prime forces n = 2d+2
  if (is_prime(static_cast<std::uint64_t>(half)) && n != 2 * d + 2)
    violate("C3.6", "n/2 = " + std::to_string(half) + " is prime, so n must equal 2d+2");
  // P3.7: n/2 a product of two primes forces n = 2d+2
  if (num_prime_factors_with_multiplicity(static_cast<std::uint64_t>(half)) == 2 &&
      n != 2 * d + 2)
    violate("P3.7", "n/2 = " + std::to_string(half) + " is a product of two primes, so n must equal 2d+2");
  // P3.8: n/2 a prime power and d >= 2 forces n = 2d+2
  if (is_prime_power(static_cast<std::uint64_t>(half)) && d >= 2 && n != 2 * d + 2)
    violate("P3.8", "n/2 = " + std::to_string(half) + " is a prime power and d >= 2, so n must equal 2d+2");
  // C3.4: conference case exists only at n = 2
  if (d == 0 && n != 2) violate("C3.4", "d = 0 requires n = 2");
  // C3.5: Hadamard case requires n a square of an even integer
  if (d == 1) {
    auto r = integer_sqrt_exact(n);
    if (!r || *r % 2 != 0) violate("C3.5", "d = 1 requires n to be a square of an even integer");
  }
  return v;
}

std::vector<int> admissible_even_orders(std::int64_t d, int n_max) {
  if (n_max < 2) throw std::domain_error("admissible_even_orders: n_max must be >= 2");
  std::vector<int> out;
  for (int n = 2; n <= n_max; n += 2)
    if (integer_d_filter(n, d).allowed) out.push_back(n);
  return out;
}

Generator trivial_construction(int n, int nu) {
  if (n < 2) throw std::invalid_argument("trivial_construction: n must be >= 2");
  if (nu < 0 || nu >= n) throw std::invalid_argument("trivial_construction: nu must be in [0, n)");
  const auto w = spectral::roots_of_unity(n);
  std::vector<Complex> e(static_cast<size_t>(n));
  e[0] = Complex(n / 2.0 - 1.0, 0.0);
  for (int j = 1; j < n; ++j)
    e[static_cast<size_t>(j)] =
        -w[static_cast<size_t>((static_cast<long long>(j) * nu) % n)];
  return Generator(std::move(e));
}

namespace {

Generator quaternary_generator(const Rational& d, int n, int which) {
  const double dv = d.to_double();
  std::vector<Complex> e(static_cast<size_t>(n));
  e[0] = Complex(dv, 0.0);
  static const Complex cycle_pos[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};  // i, 1, -i, -1
  for (int j = 1; j < n; ++j) {
    Complex c;
    switch (which) {
      case 0: c = Complex(-1, 0); break;                     // all minus
      case 1: c = Complex(j % 2 ? 1 : -1, 0); break;         // alternating 1,-1,...,1
      case 2: c = cycle_pos[(j - 1) % 4]; break;             // d, i, 1, -i, -1, ...
      default: c = std::conj(cycle_pos[(j - 1) % 4]); break; // conjugate form
    }
    e[static_cast<size_t>(j)] = c;
  }
  return Generator(std::move(e));
}

}  // namespace

std::vector<QuaternaryForm> quaternary_forms(const Rational& d) {
  std::vector<QuaternaryForm> out;
  Rational twice = d * Rational(2);
  if (d.is_negative() || !twice.is_integer()) return out;
  const auto n = static_cast<int>(twice.numerator().convert_to<std::int64_t>() + 2);
  if (d.is_integer()) {
    bool odd = (d.numerator() % 2) != 0;
    out.push_back({quaternary_generator(d, n, 0), d, false});
    out.push_back({quaternary_generator(d, n, 1), d, false});
    if (odd) {
      out.push_back({quaternary_generator(d, n, 2), d, true});
      out.push_back({quaternary_generator(d, n, 3), d, true});
    }
  } else {
    out.push_back({quaternary_generator(d, n, 0), d, false});
  }
  return out;
}

std::vector<QuaternaryForm> quaternary_forms(const DiagonalValue& d) {
  if (!d.exact()) return {};
  return quaternary_forms(*d.exact());
}

namespace {

struct Gaussian {
  std::int64_t re = 0, im = 0;
  friend Gaussian operator+(Gaussian a, Gaussian b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian conj() const { return {re, -im}; }
};

const Gaussian kUnits[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

}  // namespace

std::vector<QuaternarySolution> quaternary_oracle(int n) {
  if (n < 2 || n > 12) throw std::domain_error("quaternary_oracle: n must be in [2, 12]");
  const int half = (n - 1) / 2;
  const bool has_mid = n % 2 == 0;
  std::vector<QuaternarySolution> out;

  std::vector<Gaussian> c(static_cast<size_t>(n));  // c[0] is symbolic, left unused
  std::uint64_t total = 1;
  for (int i = 0; i < half; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int j = 1; j <= half; ++j) {
      c[static_cast<size_t>(j)] = kUnits[rest % 4];
      c[static_cast<size_t>(n - j)] = kUnits[rest % 4].conj();
      rest /= 4;
    }
    for (int mid = 0; mid < (has_mid ? 2 : 1); ++mid) {
      if (has_mid) c[static_cast<size_t>(n / 2)] = kUnits[mid];  // 1 or -1, real

      // <row_0, row_k> = 2 d c_k + sum_{j != 0,k} c_j conj(c_{j-k});
      // every equation must share the root d = -b_k * conj(2 c_k) / 4.
      std::optional<Rational> d;
      bool ok = true;
      for (int k = 1; k < n && ok; ++k) {
        Gaussian b{0, 0};
        for (int j = 1; j < n; ++j) {
          if (j == k) continue;
          b = b + c[static_cast<size_t>(j)] * c[static_cast<size_t>(((j - k) % n + n) % n)].conj();
        }
        Gaussian a = c[static_cast<size_t>(k)];  // half of the coefficient 2 c_k
        Gaussian num = Gaussian{-b.re, -b.im} * a.conj();
        if (num.im != 0) {
          ok = false;
          break;
        }
        Rational dk(num.re, 2);  // (-b conj(a)) / (2 |a|^2) with |a|^2 = 1
        if (dk.is_negative()) {
          ok = false;
          break;
        }
        if (!d)
          d = dk;
        else if (!(*d == dk))
          ok = false;
      }
      if (!ok || !d) continue;

      std::vector<Complex> e(static_cast<size_t>(n));
      e[0] = Complex(d->to_double(), 0.0);
      for (int j = 1; j < n; ++j)
        e[static_cast<size_t>(j)] = Complex(static_cast<double>(c[static_cast<size_t>(j)].re),
                                            static_cast<double>(c[static_cast<size_t>(j)].im));
      out.push_back(QuaternarySolution{*d, Generator(std::move(e))});
    }
  }
  return out;
}

}  // namespace circortho::feasibility
