#pragma once

#include <span>
#include <vector>

#include "circortho/diagonal.hpp"
#include "circortho/generator.hpp"

namespace circortho::spectral {

// Outcome of checking a generator against the defining conditions
// c_0 = d >= 0, |c_j| = 1 off the diagonal, CC* = (d^2 + n - 1) I.
struct VerificationReport {
  double gram_residual = 0.0;           // max |CC* - (d^2+n-1)I| deviation
  double unimodularity_residual = 0.0;  // max_{j>=1} | |c_j| - 1 |
  double diagonal_residual = 0.0;       // |c_0 - d|
  bool hermitian = false;
  bool passes = false;  // all three residuals <= tol
  double tol = 0.0;     // tolerance the report was produced with
};

// Table of the n-th roots of unity; element t is e^{2*pi*i*t/n}. Powers
// omega^{jk} are looked up at (j*k) mod n so the trig argument never
// accumulates phase error from large exponents.
std::vector<Complex> roots_of_unity(int n);

// lambda_k = sum_j c_j omega^{jk}, k = 0..n-1. Direct O(n^2) evaluation.
std::vector<Complex> eigenvalues(const Generator& g);

// Inverse transform c_j = (1/n) sum_k lambda_k omega^{-jk}.
Generator generator_from_eigenvalues(std::span<const Complex> lambdas);

// Gram deviation via explicit row inner products: max over row pairs of
// |<r_i, r_k> - target * delta_{ik}|.
double gram_residual_rows(const Generator& g, double target);

// Gram deviation via the spectrum: max_k | |lambda_k|^2 - target |.
double gram_residual_spectral(const Generator& g, double target);

// Fills every residual of the report. The gram path is explicit row inner
// products for n <= 64 and the spectral criterion for larger orders.
// Throws std::invalid_argument when g.n mismatches the entry count.
VerificationReport verify_conditions(const Generator& g, const DiagonalValue& d, double tol);

// True iff |c_j - conj(c_{n-j})| <= tol for j = 1..n-1 and |Im c_0| <= tol.
bool is_hermitian(const Generator& g, double tol);

// theta_a(shift) = sum_i a_i * conj(a_{(i+shift) mod n}).
// Throws std::domain_error when shift is outside [0, n).
Complex autocorrelation(std::span<const Complex> a, int shift);

}  // namespace circortho::spectral
