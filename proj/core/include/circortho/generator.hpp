#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace circortho {

using Complex = std::complex<double>;

// First row (c_0, ..., c_{n-1}) of a circulant matrix; entries[0] is the
// diagonal value. Row i of the full matrix is entries[(j - i) mod n] at
// column j.
struct Generator {
  int n = 0;
  std::vector<Complex> entries;

  Generator() = default;
  explicit Generator(std::vector<Complex> e) : n(static_cast<int>(e.size())), entries(std::move(e)) {
    if (n < 1) throw std::invalid_argument("Generator: order must be >= 1");
  }

  Complex diag() const { return entries[0]; }

  bool finite() const {
    for (const Complex& c : entries)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.n == b.n && a.entries == b.entries;
  }
};

inline Generator circ(std::initializer_list<Complex> e) {
  return Generator(std::vector<Complex>(e));
}

}  // namespace circortho
