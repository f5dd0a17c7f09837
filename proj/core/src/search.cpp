#include "circortho/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace circortho::search {

namespace {

constexpr int kMaxOrder = 26;

// binomial[n][k] for n <= kMaxOrder
std::uint64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxOrder + 1>, kMaxOrder + 1> t{};
    for (int i = 0; i <= kMaxOrder; ++i) {
      t[static_cast<size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
            (j <= i - 1 ? t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : 0);
    }
    return t;
  }();
  if (k < 0 || k > n) return 0;
  return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// rank-th k-subset of {0..n-1} in colexicographic (= ascending mask) order
std::uint32_t unrank_colex(int n, int k, std::uint64_t rank) {
  std::uint32_t mask = 0;
  int hi = n;
  for (int i = k; i >= 1; --i) {
    int v = hi - 1;
    while (v >= i - 1 && binomial(v, i) > rank) --v;
    mask |= std::uint32_t{1} << v;
    rank -= binomial(v, i);
    hi = v;
  }
  return mask;
}

// next k-subset mask in ascending numeric order (Gosper)
std::uint32_t next_mask(std::uint32_t m) {
  std::uint32_t u = m & (~m + 1);
  std::uint32_t v = m + u;
  return v | (((m ^ v) / u) >> 2);
}

double quantize_turns(double phase_turns) {
  double y = phase_turns - std::floor(phase_turns);
  long long q = std::llround(y * 1e6);
  return static_cast<double>(q % 1000000);
}

struct Candidate {
  Rational d_squared;
  Solution sol;
};

// Fast membership test: for a real spectrum +-ell the inverse transform
// gives c_j = -(2*ell/n) * sum_{k in minus} omega^{-jk} for j >= 1, and
// c_{n-j} = conj(c_j), so only j = 1..n/2 need checking. The final verdict
// is always re-derived through the reference inverse-DFT path; the fast
// check runs with a slightly slacker bound so it can never reject a
// pattern the reference path would accept.
class ClassScanner {
 public:
  ClassScanner(int n, const SpectrumClass& cls, double tol)
      : n_(n),
        cls_(cls),
        tol_(tol),
        fast_tol_(tol * (1.0 + 1e-3) + 1e-12),
        roots_(spectral::roots_of_unity(n)),
        ell_(std::sqrt((cls.d.d_squared() + Rational(n - 1)).to_double())) {}

  std::uint64_t scan(std::uint64_t lo, std::uint64_t hi, std::vector<Candidate>& out) const {
    const int minus_count = (n_ - cls_.t) / 2;
    std::uint64_t enumerated = 0;
    std::uint32_t mask = unrank_colex(n_, minus_count, lo);
    std::array<int, kMaxOrder> minus_pos{};
    for (std::uint64_t r = lo; r < hi; ++r, mask = next_mask(mask)) {
      ++enumerated;
      int cnt = 0;
      for (int k = 0; k < n_; ++k)
        if (mask & (std::uint32_t{1} << k)) minus_pos[static_cast<size_t>(cnt++)] = k;
      if (fast_accept(minus_pos.data(), cnt)) emit(mask, out);
    }
    return enumerated;
  }

 private:
  bool fast_accept(const int* minus_pos, int cnt) const {
    const double scale = 2.0 * ell_ / n_;
    for (int j = 1; j <= n_ / 2; ++j) {
      Complex acc(0.0, 0.0);
      for (int i = 0; i < cnt; ++i) {
        int idx = (n_ - (j * minus_pos[i]) % n_) % n_;
        acc += roots_[static_cast<size_t>(idx)];
      }
      if (std::abs(std::abs(acc) * scale - 1.0) > fast_tol_) return false;
    }
    return true;
  }

  void emit(std::uint32_t mask, std::vector<Candidate>& out) const {
    std::vector<Complex> lam(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k)
      lam[static_cast<size_t>(k)] =
          Complex(mask & (std::uint32_t{1} << k) ? -ell_ : ell_, 0.0);
    Generator g = spectral::generator_from_eigenvalues(lam);
    auto rep = spectral::verify_conditions(g, cls_.d, tol_);
    if (!rep.passes) return;
    Solution sol;
    sol.generator = std::move(g);
    sol.d = cls_.d;
    sol.pattern = SignPattern{n_, mask, (n_ + cls_.t) / 2};
    sol.residuals = rep;
    sol.canonical_key = canonical_key(sol.generator);
    out.push_back(Candidate{cls_.d.d_squared(), std::move(sol)});
  }

  int n_;
  SpectrumClass cls_;
  double tol_;
  double fast_tol_;
  std::vector<Complex> roots_;
  double ell_;
};

}  // namespace

std::vector<int> SignPattern::signs() const {
  std::vector<int> s(static_cast<size_t>(n), 1);
  for (int k = 0; k < n; ++k)
    if (minus_mask & (std::uint32_t{1} << k)) s[static_cast<size_t>(k)] = -1;
  return s;
}

std::vector<SpectrumClass> spectrum_classes(int n) {
  if (n < 2) throw std::domain_error("spectrum_classes: n must be >= 2");
  std::vector<SpectrumClass> out;
  for (int t = n % 2; t < n; t += 2) {
    Rational d2 = Rational(static_cast<long long>(t) * t * (n - 1)) /
                  Rational(static_cast<long long>(n) * n - static_cast<long long>(t) * t);
    out.push_back(SpectrumClass{n, t, DiagonalValue::from_d_squared(std::move(d2))});
  }
  return out;
}

std::vector<std::uint8_t> canonical_key(const Generator& g) {
  const int n = g.n;
  std::vector<double> phase(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Complex& c = g.entries[static_cast<size_t>(j)];
    phase[static_cast<size_t>(j)] = std::atan2(c.imag(), c.real()) / (2.0 * std::numbers::pi);
  }
  std::vector<double> best, cur(static_cast<size_t>(n));
  for (int conj = 0; conj < 2; ++conj) {
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) {
        double p = conj ? -phase[static_cast<size_t>(j)] : phase[static_cast<size_t>(j)];
        p += static_cast<double>((static_cast<long long>(j) * r) % n) / n;
        cur[static_cast<size_t>(j)] = quantize_turns(p);
      }
      if (best.empty() || std::lexicographical_compare(cur.begin(), cur.end(),
                                                       best.begin(), best.end()))
        best = cur;
    }
  }
  std::vector<std::uint8_t> key;
  key.reserve(static_cast<size_t>(n) * 4);
  for (double v : best) {
    auto q = static_cast<std::uint32_t>(v);
    key.push_back(static_cast<std::uint8_t>(q >> 24));
    key.push_back(static_cast<std::uint8_t>(q >> 16));
    key.push_back(static_cast<std::uint8_t>(q >> 8));
    key.push_back(static_cast<std::uint8_t>(q));
  }
  return key;
}

std::string key_hex(std::span<const std::uint8_t> key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (std::uint8_t b : key) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

SearchResult search_order(int n, const SearchOptions& opts) {
  if (n < 2 || n > kMaxOrder)
    throw std::domain_error("search_order: n must be in [2, 26]");
  if (opts.tol <= 0) throw std::domain_error("search_order: tol must be positive");

  unsigned workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;

  SearchResult result;
  std::vector<Candidate> candidates;

  bool matched = !opts.restrict_d.has_value();
  for (const SpectrumClass& cls : spectrum_classes(n)) {
    if (opts.restrict_d && !(cls.d == *opts.restrict_d)) continue;
    matched = true;

    const int minus_count = (n - cls.t) / 2;
    const std::uint64_t total = binomial(n, minus_count);
    ClassScanner scanner(n, cls, opts.tol);

    ClassStats stats;
    stats.t = cls.t;
    stats.d_squared = cls.d.d_squared();

    unsigned nw = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
    std::vector<std::vector<Candidate>> chunk_out(nw);
    std::vector<std::uint64_t> chunk_count(nw, 0);
    if (nw <= 1) {
      chunk_count[0] = scanner.scan(0, total, chunk_out[0]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (unsigned w = 0; w < nw; ++w) {
        std::uint64_t lo = total * w / nw;
        std::uint64_t hi = total * (w + 1) / nw;
        pool.emplace_back([&, w, lo, hi] { chunk_count[w] = scanner.scan(lo, hi, chunk_out[w]); });
      }
      for (auto& th : pool) th.join();
    }
    for (unsigned w = 0; w < nw; ++w) {
      stats.patterns += chunk_count[w];
      stats.passing += chunk_out[w].size();
      for (auto& c : chunk_out[w]) candidates.push_back(std::move(c));
    }
    result.stats.push_back(std::move(stats));
  }
  result.restrict_matched = matched;

  // d^2 descending, then key, then mask: the per-orbit representative kept
  // is the pattern with the smallest mask, independent of worker layout.
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.d_squared != b.d_squared) return a.d_squared > b.d_squared;
    if (a.sol.canonical_key != b.sol.canonical_key)
      return a.sol.canonical_key < b.sol.canonical_key;
    return a.sol.pattern.minus_mask < b.sol.pattern.minus_mask;
  });
  for (auto& c : candidates) {
    if (!result.solutions.empty()) {
      const Solution& prev = result.solutions.back();
      if (prev.d.d_squared() == c.d_squared && prev.canonical_key == c.sol.canonical_key)
        continue;
    }
    for (auto& st : result.stats)
      if (st.d_squared == c.d_squared) ++st.solutions;
    result.solutions.push_back(std::move(c.sol));
  }
  return result;
}

}  // namespace circortho::search
