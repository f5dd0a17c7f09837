#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "circortho/diagonal.hpp"
#include "circortho/generator.hpp"
#include "circortho/rational.hpp"

namespace circortho::feasibility {

// One admissible (k, d) pair for an even order: sqrt(d^2+n-1) = n/(2k)
// forces d^2 = (n/2k)^2 - n + 1. Irrational d is excluded outright for
// even orders.
struct EvenOrderCandidate {
  int k = 0;
  DiagonalValue d;
  bool rational = false;  // d itself is rational (not just d^2)
};

// All k with 1 <= k <= n/(2*sqrt(n-1)), increasing k.
// Throws std::domain_error for odd or n < 2.
std::vector<EvenOrderCandidate> even_order_candidates(int n);

struct FilterVerdict {
  bool allowed = true;
  // (rule id, human-readable rule text); every violated rule is reported
  std::vector<std::pair<std::string, std::string>> reasons;
  std::map<std::string, std::string> derived;  // "ell", "k", "n_half_factorization"
};

// Admissibility of an even order n for an integer diagonal d: ell
// integrality and divisibility rules, the prime / semiprime / prime-power
// half-order collapses to n = 2d+2, and the d = 0 / d = 1 special cases.
FilterVerdict integer_d_filter(int n, std::int64_t d);

// Even n <= n_max passing integer_d_filter, increasing.
std::vector<int> admissible_even_orders(std::int64_t d, int n_max);

// circ_n(n/2 - 1, -w^nu, -w^{2 nu}, ..., -w^{(n-1) nu}): a Hermitian
// solution with d = n/2 - 1 that exists for every n >= 2 and nu in Z_n.
Generator trivial_construction(int n, int nu);

// A generator with off-diagonal entries restricted to 4th roots of unity.
// `conjectural` marks the complex odd-d forms: they satisfy the defining
// conditions unconditionally, but their listing as the complete odd-d
// family holds only if the generalized circulant Hadamard conjecture is
// true.
struct QuaternaryForm {
  Generator gen;
  Rational d;
  bool conjectural = false;
};

// The forms of order 2d+2 realized for a given d with 2d a non-negative
// integer (empty otherwise): all-minus plus alternating for integer d,
// all-minus alone for half-integer d, and for odd d additionally the two
// conjugate period-4 forms (d, i, 1, -i, -1, ...).
std::vector<QuaternaryForm> quaternary_forms(const Rational& d);
std::vector<QuaternaryForm> quaternary_forms(const DiagonalValue& d);

struct QuaternarySolution {
  Rational d;
  Generator gen;
};

// Brute-force enumeration of all Hermitian generators with off-diagonal
// entries in {1,-1,i,-i}: each row-0/row-k inner product is affine in the
// free diagonal d, so the pattern is kept exactly when the equations share
// a common root d >= 0. Exact Gaussian-integer arithmetic throughout.
// Throws std::domain_error for n outside [2, 12].
std::vector<QuaternarySolution> quaternary_oracle(int n);

// Small deterministic number theory used by the filters (trial division;
// in-scope n stays far below 10^6).
bool is_prime(std::uint64_t v);
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t v);

}  // namespace circortho::feasibility
