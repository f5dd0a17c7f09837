#include "circortho/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circortho::spectral {

std::vector<Complex> roots_of_unity(int n) {
  std::vector<Complex> w(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t)
    w[static_cast<size_t>(t)] = std::polar(1.0, 2.0 * std::numbers::pi * t / n);
  // pin the exactly representable values
  w[0] = Complex(1.0, 0.0);
  if (n % 2 == 0) w[static_cast<size_t>(n / 2)] = Complex(-1.0, 0.0);
  if (n % 4 == 0) {
    w[static_cast<size_t>(n / 4)] = Complex(0.0, 1.0);
    w[static_cast<size_t>(3 * n / 4)] = Complex(0.0, -1.0);
  }
  return w;
}

std::vector<Complex> eigenvalues(const Generator& g) {
  const int n = g.n;
  const auto w = roots_of_unity(n);
  std::vector<Complex> lam(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n; ++j)
      acc += g.entries[static_cast<size_t>(j)] * w[static_cast<size_t>((j * k) % n)];
    lam[static_cast<size_t>(k)] = acc;
  }
  return lam;
}

Generator generator_from_eigenvalues(std::span<const Complex> lambdas) {
  const int n = static_cast<int>(lambdas.size());
  if (n < 1) throw std::invalid_argument("generator_from_eigenvalues: empty spectrum");
  const auto w = roots_of_unity(n);
  std::vector<Complex> c(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      int idx = (n - (j * k) % n) % n;  // omega^{-jk}
      acc += lambdas[static_cast<size_t>(k)] * w[static_cast<size_t>(idx)];
    }
    c[static_cast<size_t>(j)] = acc / static_cast<double>(n);
  }
  return Generator(std::move(c));
}

double gram_residual_rows(const Generator& g, double target) {
  const int n = g.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Complex ip(0.0, 0.0);
      for (int j = 0; j < n; ++j) {
        const Complex& a = g.entries[static_cast<size_t>(((j - i) % n + n) % n)];
        const Complex& b = g.entries[static_cast<size_t>(((j - k) % n + n) % n)];
        ip += a * std::conj(b);
      }
      if (i == k) ip -= target;
      worst = std::max(worst, std::abs(ip));
    }
  }
  return worst;
}

double gram_residual_spectral(const Generator& g, double target) {
  double worst = 0.0;
  for (const Complex& lam : eigenvalues(g))
    worst = std::max(worst, std::abs(std::norm(lam) - target));
  return worst;
}

VerificationReport verify_conditions(const Generator& g, const DiagonalValue& d, double tol) {
  if (tol <= 0) throw std::invalid_argument("verify_conditions: tol must be positive");
  if (g.n != static_cast<int>(g.entries.size()))
    throw std::invalid_argument("verify_conditions: order does not match entry count");

  const double target = d.d_squared().to_double() + (g.n - 1);

  VerificationReport rep;
  rep.tol = tol;
  rep.gram_residual =
      g.n <= 64 ? gram_residual_rows(g, target) : gram_residual_spectral(g, target);
  for (int j = 1; j < g.n; ++j)
    rep.unimodularity_residual = std::max(
        rep.unimodularity_residual, std::abs(std::abs(g.entries[static_cast<size_t>(j)]) - 1.0));
  rep.diagonal_residual = std::abs(g.entries[0] - Complex(d.approx(), 0.0));
  rep.hermitian = is_hermitian(g, tol);
  rep.passes = rep.gram_residual <= tol && rep.unimodularity_residual <= tol &&
               rep.diagonal_residual <= tol;
  return rep;
}

bool is_hermitian(const Generator& g, double tol) {
  if (std::abs(g.entries[0].imag()) > tol) return false;
  for (int j = 1; j < g.n; ++j) {
    const Complex& a = g.entries[static_cast<size_t>(j)];
    const Complex& b = g.entries[static_cast<size_t>(g.n - j)];
    if (std::abs(a - std::conj(b)) > tol) return false;
  }
  return true;
}

Complex autocorrelation(std::span<const Complex> a, int shift) {
  const int n = static_cast<int>(a.size());
  if (shift < 0 || shift >= n)
    throw std::domain_error("autocorrelation: shift out of [0, n)");
  Complex acc(0.0, 0.0);
  for (int i = 0; i < n; ++i)
    acc += a[static_cast<size_t>(i)] * std::conj(a[static_cast<size_t>((i + shift) % n)]);
  return acc;
}

}  // namespace circortho::spectral
