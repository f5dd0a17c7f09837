#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circortho/diagonal.hpp"
#include "circortho/generator.hpp"
#include "circortho/spectral.hpp"

namespace circortho::search {

// Assignment of +-sqrt(d^2+n-1) to the n circulant eigenvalues. Bit k of
// minus_mask is set when lambda_k carries the minus sign.
struct SignPattern {
  int n = 0;
  std::uint32_t minus_mask = 0;
  int nu = 0;  // count of +1 signs; 2*nu >= n so that d >= 0

  int t() const { return 2 * nu - n; }
  std::vector<int> signs() const;
};

// All sign patterns sharing t = 2*nu - n. The trace identity
// t * sqrt(d^2+n-1) = n*d pins d^2 = t^2 (n-1) / (n^2 - t^2).
struct SpectrumClass {
  int n = 0;
  int t = 0;
  DiagonalValue d;
};

struct Solution {
  Generator generator;
  DiagonalValue d;
  SignPattern pattern;
  spectral::VerificationReport residuals;
  std::vector<std::uint8_t> canonical_key;
};

// Classes for every t with 0 <= t < n and t = n (mod 2), increasing t.
// Throws std::domain_error for n < 2.
std::vector<SpectrumClass> spectrum_classes(int n);

struct SearchOptions {
  double tol = 1e-9;
  std::optional<DiagonalValue> restrict_d;
  unsigned workers = 1;  // 0 = hardware concurrency
};

struct ClassStats {
  int t = 0;
  Rational d_squared;
  std::uint64_t patterns = 0;   // sign patterns enumerated
  std::uint64_t passing = 0;    // patterns passing verification
  std::uint64_t solutions = 0;  // orbit representatives kept
};

struct SearchResult {
  std::vector<Solution> solutions;  // (d^2 descending, canonical_key ascending)
  std::vector<ClassStats> stats;
  bool restrict_matched = true;  // false when restrict_d named no class
};

// Exhaustive spectral search over sign patterns for 2 <= n <= 26: every
// pattern is mapped through the inverse transform and kept when the
// resulting generator satisfies the conditions at tol. Results are
// deduplicated under sign-pattern rotation and global conjugation.
// Deterministic: output is byte-for-byte identical across runs and worker
// counts. Throws std::domain_error for n outside [2, 26].
SearchResult search_order(int n, const SearchOptions& opts = {});

// Orbit-invariant fingerprint: each entry's phase is quantized to 1e-6
// turns and the lexicographic minimum over the 2n-element symmetry orbit
// (n rotations x conjugation) is serialized big-endian. Rotating the sign
// pattern by s multiplies c_j by omega^{js}, so equal keys identify
// equivalent solutions.
std::vector<std::uint8_t> canonical_key(const Generator& g);

std::string key_hex(std::span<const std::uint8_t> key);

}  // namespace circortho::search
