#include "circortho/mub.hpp"

#include <cmath>

#include "circortho/feasibility.hpp"
#include "circortho/spectral.hpp"

namespace circortho::mub {

Basis Basis::identity(int n) {
  Basis b;
  b.n = n;
  b.col_major.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Complex(0.0, 0.0));
  for (int j = 0; j < n; ++j)
    b.col_major[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
        Complex(1.0, 0.0);
  return b;
}

namespace {

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace

double Basis::gram_residual() const {
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Complex ip = inner(column(j), column(k));
      if (j == k) ip -= 1.0;
      worst = std::max(worst, std::abs(ip));
    }
  return worst;
}

Basis fourier_basis(int n) {
  if (n < 2) throw std::domain_error("fourier_basis: n must be >= 2");
  const auto w = spectral::roots_of_unity(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Basis b;
  b.n = n;
  b.col_major.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      b.col_major[static_cast<size_t>(k) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
          scale * w[static_cast<size_t>((j * k) % n)];
  return b;
}

Basis normalize_circulant(const Generator& g, double tol) {
  const int n = g.n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Basis b;
  b.n = n;
  b.col_major.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  // C[i][j] = c_{(j-i) mod n}
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      b.col_major[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(i)] =
          scale * g.entries[static_cast<size_t>(((j - i) % n + n) % n)];
  double residual = b.gram_residual();
  if (residual > tol)
    throw MubError("normalize_circulant: scaled matrix is not unitary (Gram residual " +
                       std::to_string(residual) + ")",
                   -1, -1, residual);
  return b;
}

double unbiased_residual(const Basis& a, const Basis& b) {
  if (a.n != b.n) throw std::domain_error("unbiased: dimension mismatch");
  const double want = 1.0 / a.n;
  double worst = 0.0;
  for (int j = 0; j < a.n; ++j)
    for (int k = 0; k < b.n; ++k)
      worst = std::max(worst, std::abs(std::norm(inner(a.column(j), b.column(k))) - want));
  return worst;
}

bool unbiased(const Basis& a, const Basis& b, double tol) {
  return unbiased_residual(a, b) <= tol;
}

std::array<Basis, 3> assemble_triple(const Generator& g, double tol) {
  std::array<Basis, 3> triple = {Basis::identity(g.n), fourier_basis(g.n),
                                 normalize_circulant(g, tol)};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      double residual = unbiased_residual(triple[static_cast<size_t>(a)],
                                          triple[static_cast<size_t>(b)]);
      if (residual > tol)
        throw MubError("assemble_triple: bases " + std::to_string(a) + " and " +
                           std::to_string(b) + " are not unbiased (residual " +
                           std::to_string(residual) + ")",
                       a, b, residual);
    }
  return triple;
}

Basis xz_eigenbasis(int n) {
  if (!feasibility::is_prime(static_cast<std::uint64_t>(n)))
    throw std::domain_error("xz_eigenbasis: n must be prime");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Basis b;
  b.n = n;
  b.col_major.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  if (n == 2) {
    // XZ = ((0,-1),(1,0)); eigenvectors need the half-turn phase i
    b.col_major = {scale * Complex(1, 0), scale * Complex(0, -1),
                   scale * Complex(1, 0), scale * Complex(0, 1)};
    return b;
  }
  const auto w = spectral::roots_of_unity(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // s_k = k + (k+1) + ... + (n-1), reduced mod n
      long long s_k = (static_cast<long long>(n - 1 + k) * (n - k) / 2) % n;
      int e = static_cast<int>(((static_cast<long long>(j) * k + s_k) % n + n) % n);
      b.col_major[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(k)] =
          scale * std::conj(w[static_cast<size_t>(e)]);  // w^{-jk - s_k}
    }
  return b;
}

double xz_eigenvector_residual(const Basis& b) {
  const int n = b.n;
  const auto w = spectral::roots_of_unity(n);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    auto v = b.column(j);
    // (XZ v)_i = w^{i-1} v_{i-1 mod n}
    std::vector<Complex> xz(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      int prev = ((i - 1) % n + n) % n;
      xz[static_cast<size_t>(i)] = w[static_cast<size_t>(prev)] * v[static_cast<size_t>(prev)];
    }
    Complex mu = xz[0] / v[0];
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(xz[static_cast<size_t>(i)] - mu * v[static_cast<size_t>(i)]));
  }
  return worst;
}

}  // namespace circortho::mub
