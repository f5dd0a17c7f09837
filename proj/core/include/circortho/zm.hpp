#pragma once

#include <vector>

namespace circortho::zm {

// Circulant generator over Z_m with off-diagonal entries congruent to +-1.
// Elements are stored as canonical representatives 0..m-1; the diagonal d
// is exempt from the +-1 constraint.
struct ZmGenerator {
  int m = 2;
  int n = 2;
  int d = 0;
  std::vector<int> offdiag;  // length n-1, each 1 or m-1 (mod m)

  // Validates the entry convention; throws std::invalid_argument.
  static ZmGenerator make(int m, int n, int d, std::vector<int> offdiag);

  int entry(int j) const { return j == 0 ? d : offdiag[static_cast<size_t>(j - 1)]; }
  bool symmetric() const;  // c_k == c_{n-k} for all k

  // (m-d, -c_1, ..., -c_{n-1}): satisfies the conditions whenever the
  // original does.
  ZmGenerator negated() const;

  friend bool operator==(const ZmGenerator& a, const ZmGenerator& b) = default;
};

// C C^T = (d^2+n-1) I over Z_m, checked by exact modular arithmetic on the
// first row of the product (the product of circulants is circulant).
bool verify_zm(const ZmGenerator& g);

// For symmetric generators the orthogonality congruences for
// k = 1..ceil(n/2)+1 imply the rest; this checks only that prefix.
bool verify_zm_symmetric_prefix(const ZmGenerator& g);

// false iff m is even and n is odd (the excluded combination); the
// converse does not hold.
bool parity_filter(int m, int n);

// All d in Z_m with 2d = n-2 (mod m); each circ_n(d,-1,...,-1) then
// satisfies the conditions over Z_m.
std::vector<int> all_minus_family(int m, int n);

// All d in Z_m satisfying both 2d = -n+2 and 2d = n-6 (mod m), for the
// generator with a single +1 at position n/2 and -1 elsewhere. Requires
// even n >= 4 (the shape needs a row besides k = n/2); throws
// std::domain_error otherwise. Empty when the pair is inconsistent,
// i.e. unless m | 2n-8.
std::vector<int> one_plus_family(int m, int n);

ZmGenerator all_minus_generator(int m, int n, int d);
ZmGenerator one_plus_generator(int m, int n, int d);

// Orders n <= n_max on which one_plus_family can be non-empty. Congruence
// solutions with odd n are reported separately instead of being emitted.
struct OnePlusOrders {
  std::vector<int> orders;
  std::vector<int> skipped_odd;
};
OnePlusOrders one_plus_orders(int m, int n_max);

// Exhaustive search over d in Z_m and +-1 off-diagonal assignments
// (c_k = c_{n-k} when symmetric_only). Cost guards: n <= 24 symmetric,
// n <= 16 general; throws std::domain_error beyond them. Deterministic
// order: d ascending, then pattern code ascending.
std::vector<ZmGenerator> search_zm(int m, int n, bool symmetric_only);

}  // namespace circortho::zm
