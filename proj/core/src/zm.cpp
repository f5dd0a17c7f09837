#include "circortho/zm.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace circortho::zm {

namespace {

int mod(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

// Solutions of 2x = a (mod m), ascending. Either empty, one, or two.
std::vector<int> solve_twice(int a, int m) {
  a = mod(a, m);
  std::vector<int> out;
  if (m % 2 == 1) {
    // 2 is invertible; 2 * (m+1)/2 = m+1 = 1 (mod m)
    out.push_back(mod(static_cast<long long>(a) * ((m + 1) / 2), m));
  } else if (a % 2 == 0) {
    int x0 = mod(a / 2, m / 2);
    out.push_back(x0);
    out.push_back(x0 + m / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ZmGenerator ZmGenerator::make(int m, int n, int d, std::vector<int> offdiag) {
  if (m < 2) throw std::invalid_argument("ZmGenerator: modulus must be >= 2");
  if (n < 2) throw std::invalid_argument("ZmGenerator: order must be >= 2");
  if (static_cast<int>(offdiag.size()) != n - 1)
    throw std::invalid_argument("ZmGenerator: off-diagonal must have n-1 entries");
  for (int& c : offdiag) {
    c = mod(c, m);
    if (c != 1 % m && c != (m - 1) % m)
      throw std::invalid_argument("ZmGenerator: off-diagonal entries must be +-1 (mod m)");
  }
  return ZmGenerator{m, n, mod(d, m), std::move(offdiag)};
}

bool ZmGenerator::symmetric() const {
  for (int k = 1; k < n; ++k)
    if (entry(k) != entry(n - k)) return false;
  return true;
}

ZmGenerator ZmGenerator::negated() const {
  std::vector<int> neg(offdiag.size());
  for (size_t i = 0; i < offdiag.size(); ++i) neg[i] = mod(-offdiag[i], m);
  return ZmGenerator{m, n, mod(-d, m), std::move(neg)};
}

namespace {

bool row_products_vanish(const ZmGenerator& g, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    long long acc = 0;
    for (int j = 0; j < g.n; ++j)
      acc += static_cast<long long>(g.entry(j)) * g.entry(((j - k) % g.n + g.n) % g.n);
    if (mod(acc, g.m) != 0) return false;
  }
  return true;
}

}  // namespace

bool verify_zm(const ZmGenerator& g) {
  long long diag = 0;
  for (int j = 0; j < g.n; ++j)
    diag += static_cast<long long>(g.entry(j)) * g.entry(j);
  long long target = static_cast<long long>(g.d) * g.d + g.n - 1;
  if (mod(diag - target, g.m) != 0) return false;
  return row_products_vanish(g, g.n - 1);
}

bool verify_zm_symmetric_prefix(const ZmGenerator& g) {
  int k_max = std::min((g.n + 1) / 2 + 1, g.n - 1);
  return row_products_vanish(g, k_max);
}

bool parity_filter(int m, int n) {
  if (m < 2 || n < 2) throw std::domain_error("parity_filter: m, n must be >= 2");
  return !(m % 2 == 0 && n % 2 == 1);
}

std::vector<int> all_minus_family(int m, int n) {
  if (m < 2 || n < 2) throw std::domain_error("all_minus_family: m, n must be >= 2");
  return solve_twice(n - 2, m);
}

std::vector<int> one_plus_family(int m, int n) {
  if (m < 2) throw std::domain_error("one_plus_family: m must be >= 2");
  if (n % 2 != 0 || n < 4)
    throw std::domain_error("one_plus_family: n must be even and >= 4");
  // 2d = -n+2 and 2d = n-6 are simultaneously solvable iff m | 2n-8
  if (mod(2LL * n - 8, m) != 0) return {};
  return solve_twice(n - 6, m);
}

ZmGenerator all_minus_generator(int m, int n, int d) {
  return ZmGenerator::make(m, n, d, std::vector<int>(static_cast<size_t>(n - 1), m - 1));
}

ZmGenerator one_plus_generator(int m, int n, int d) {
  if (n % 2 != 0 || n < 4)
    throw std::domain_error("one_plus_generator: n must be even and >= 4");
  std::vector<int> off(static_cast<size_t>(n - 1), m - 1);
  off[static_cast<size_t>(n / 2 - 1)] = 1 % m;
  return ZmGenerator::make(m, n, d, std::move(off));
}

OnePlusOrders one_plus_orders(int m, int n_max) {
  OnePlusOrders out;
  for (int n = 4; n <= n_max; ++n) {
    if (mod(2LL * n - 8, m) != 0) continue;
    if (n % 2 == 0)
      out.orders.push_back(n);
    else
      out.skipped_odd.push_back(n);
  }
  return out;
}

std::vector<ZmGenerator> search_zm(int m, int n, bool symmetric_only) {
  if (m < 2 || n < 2) throw std::domain_error("search_zm: m, n must be >= 2");
  if (n > (symmetric_only ? 24 : 16))
    throw std::domain_error("search_zm: order exceeds the cost guard");

  // positions whose sign is free; the rest mirror them
  const int free_count = symmetric_only ? n / 2 : n - 1;
  const bool collapsed = (m == 2);  // 1 = -1 (mod 2): a single assignment
  const std::uint64_t total = collapsed ? 1 : (std::uint64_t{1} << free_count);

  auto scan_d = [&](int d) {
    std::vector<ZmGenerator> found;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<int> off(static_cast<size_t>(n - 1), 1 % m);
      if (symmetric_only) {
        for (int k = 1; k <= n / 2; ++k) {
          int val = (code >> (k - 1)) & 1 ? m - 1 : 1 % m;
          off[static_cast<size_t>(k - 1)] = val;
          off[static_cast<size_t>(n - k - 1)] = val;
        }
      } else {
        for (int k = 1; k < n; ++k)
          off[static_cast<size_t>(k - 1)] = (code >> (k - 1)) & 1 ? m - 1 : 1 % m;
      }
      ZmGenerator g{m, n, d, std::move(off)};
      if (verify_zm(g)) found.push_back(std::move(g));
    }
    return found;
  };

  // independent scans per diagonal value, merged in ascending d order
  std::vector<std::future<std::vector<ZmGenerator>>> futures;
  futures.reserve(static_cast<size_t>(m));
  for (int d = 0; d < m; ++d)
    futures.push_back(std::async(std::launch::async, scan_d, d));
  std::vector<ZmGenerator> out;
  for (auto& f : futures)
    for (auto& g : f.get()) out.push_back(std::move(g));
  return out;
}

}  // namespace circortho::zm
