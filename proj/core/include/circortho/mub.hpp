#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circortho/generator.hpp"

namespace circortho::mub {

// Orthonormal basis of C^n, stored column-major.
struct Basis {
  int n = 0;
  std::vector<Complex> col_major;  // column j occupies [j*n, (j+1)*n)

  static Basis identity(int n);

  std::span<const Complex> column(int j) const {
    return {col_major.data() + static_cast<size_t>(j) * static_cast<size_t>(n),
            static_cast<size_t>(n)};
  }

  // max |G - I| deviation of the Gram matrix of the columns
  double gram_residual() const;
};

class MubError : public std::runtime_error {
 public:
  MubError(std::string what, int first, int second, double residual)
      : std::runtime_error(std::move(what)), first(first), second(second), residual(residual) {}
  int first;        // index of the first offending basis (or column)
  int second;       // index of the second
  double residual;
};

// Columns v_k = (1/sqrt(n)) (1, w^k, ..., w^{(n-1)k}).
Basis fourier_basis(int n);

// The circulant matrix of g scaled by 1/sqrt(n). Requires all entries
// unimodular with CC* = nI (the d^2 = 1 case up to diagonal phase;
// non-Hermitian generators are fine). Throws MubError carrying the Gram
// residual when the scaled matrix is not unitary within tol.
Basis normalize_circulant(const Generator& g, double tol = 1e-9);

double unbiased_residual(const Basis& a, const Basis& b);

// True iff | |<a_j, b_k>|^2 - 1/n | <= tol for every column pair.
// Throws std::domain_error on dimension mismatch.
bool unbiased(const Basis& a, const Basis& b, double tol);

// (identity, Fourier, normalized circulant), verified pairwise unbiased at
// tol; throws MubError naming the failing pair otherwise.
std::array<Basis, 3> assemble_triple(const Generator& g, double tol = 1e-9);

// Eigenbasis of the unitary XZ (X the cyclic shift, Z = diag(w^j)) for
// prime n. For odd primes column j has components
// (1/sqrt(n)) w^{-jk - s_k} with s_k = k + (k+1) + ... + (n-1);
// for n = 2 the eigenvectors are (1, -i)/sqrt(2), (1, i)/sqrt(2), since no
// integer-exponent phase vector is an XZ eigenvector there. Throws
// std::domain_error for composite n.
Basis xz_eigenbasis(int n);

// max over columns of |XZ v - mu v| with mu read off the first component
double xz_eigenvector_residual(const Basis& b);

}  // namespace circortho::mub
