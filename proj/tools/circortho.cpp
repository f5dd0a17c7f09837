// circortho: construct, search, verify, and classify circulant matrices
// with orthogonal rows, constant diagonal, and unimodular off-diagonal
// entries; over C, over 4th roots of unity, and over Z_m; plus assembly of
// mutually unbiased basis triples from the unimodular-diagonal case.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circortho/catalog.hpp"
#include "circortho/feasibility.hpp"
#include "circortho/mub.hpp"
#include "circortho/search.hpp"
#include "circortho/spectral.hpp"
#include "circortho/zm.hpp"

namespace {

using namespace circortho;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoFailure = 3;
constexpr int kExitParseFailure = 4;

double default_tol(double fallback) {
  if (const char* env = std::getenv("CIRCORTHO_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
    std::cerr << "warning: ignoring malformed CIRCORTHO_TOL='" << env << "'\n";
  }
  return fallback;
}

// SOURCE_DATE_EPOCH makes the stamp (and therefore the whole catalog
// output) reproducible.
std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env) t = static_cast<std::time_t>(v);
  }
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_complex(const Complex& c) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", c.real(), c.imag());
  return buf;
}

std::string fmt_generator(const Generator& g) {
  std::string out = "(";
  for (int j = 0; j < g.n; ++j) {
    if (j) out += ", ";
    const Complex& c = g.entries[static_cast<size_t>(j)];
    if (c.imag() == 0.0)
      out += fmt(c.real());
    else
      out += fmt_complex(c);
  }
  return out + ")";
}

int write_records(const std::vector<catalog::CatalogRecord>& recs, const std::string& path,
                  const std::string& format) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      return kExitIoFailure;
    }
    out = &file;
  }
  if (format == "csv")
    catalog::write_csv(*out, recs);
  else
    catalog::write_jsonl(*out, recs);
  out->flush();
  if (!*out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return kExitIoFailure;
  }
  return kExitPass;
}

catalog::CatalogRecord complex_record(catalog::Kind kind, const Generator& g,
                                      const DiagonalValue& d,
                                      const spectral::VerificationReport& rep,
                                      std::string provenance) {
  catalog::CatalogRecord rec;
  rec.kind = kind;
  rec.n = g.n;
  rec.d_squared = d.d_squared();
  rec.generator = g.entries;
  rec.residuals = rep;
  rec.provenance = std::move(provenance);
  rec.canonical_key = search::key_hex(search::canonical_key(g));
  return rec;
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  double tol = 0;
  unsigned workers = 0;
  std::string out;
  std::string format = "jsonl";
  std::string d2;
  std::string d;
  bool quiet = false;
  bool stats = false;
};

int cmd_search(const SearchArgs& a) {
  search::SearchOptions opts;
  opts.tol = a.tol > 0 ? a.tol : default_tol(1e-9);
  opts.workers = a.workers;
  if (!a.d2.empty())
    opts.restrict_d = DiagonalValue::from_d_squared(Rational::parse(a.d2));
  else if (!a.d.empty()) {
    Rational dr = Rational::parse(a.d);
    opts.restrict_d = DiagonalValue::from_d_squared(dr * dr);
  }

  auto result = search::search_order(a.n, opts);
  if (!result.restrict_matched)
    std::cerr << "note: the requested diagonal names no spectrum class at n = " << a.n << "\n";

  std::string prov = "circortho search --n " + std::to_string(a.n) + " --tol ";
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", opts.tol);
    prov += buf;
  }
  if (opts.restrict_d) prov += " --d2 " + opts.restrict_d->d_squared().str();
  prov += " | " + timestamp();

  std::vector<catalog::CatalogRecord> recs;
  recs.reserve(result.solutions.size());
  for (const auto& sol : result.solutions) {
    auto rec = complex_record(catalog::Kind::complex_field, sol.generator, sol.d,
                              sol.residuals, prov);
    rec.canonical_key = search::key_hex(sol.canonical_key);
    recs.push_back(std::move(rec));
  }

  if (!a.quiet) {
    // distinct diagonals, d^2 descending (solutions are already sorted)
    std::vector<DiagonalValue> ds;
    for (const auto& sol : result.solutions)
      if (ds.empty() || !(ds.back() == sol.d)) ds.push_back(sol.d);
    std::string row;
    for (const auto& d : ds) {
      if (!row.empty()) row += ", ";
      row += d.surd() + " (" + fmt(d.approx()) + ")";
    }
    std::cout << " n | d\n---+---\n " << a.n << " | " << row << "\n";
  }
  if (a.stats) {
    for (const auto& st : result.stats)
      std::cout << "class t=" << st.t << " d^2=" << st.d_squared.str()
                << ": patterns=" << st.patterns << " passing=" << st.passing
                << " solutions=" << st.solutions << "\n";
  }
  if (!a.out.empty()) return write_records(recs, a.out, a.format);
  return kExitPass;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  double tol = 0;
  std::string format = "auto";
};

void verify_record(const catalog::CatalogRecord& rec, double tol_override, int index,
                   bool& all_pass) {
  double tol = tol_override > 0 ? tol_override : rec.residuals.tol;
  if (tol <= 0) tol = 1e-9;
  bool pass = false;
  std::ostringstream detail;
  switch (rec.kind) {
    case catalog::Kind::complex_field:
    case catalog::Kind::quaternary: {
      auto d = DiagonalValue::from_d_squared(rec.d_squared);
      auto rep = spectral::verify_conditions(rec.complex_generator(), d, tol);
      pass = rep.passes;
      detail << "gram=" << rep.gram_residual << " unimod=" << rep.unimodularity_residual
             << " diag=" << rep.diagonal_residual;
      break;
    }
    case catalog::Kind::zm: {
      const auto& ints = std::get<std::vector<int>>(rec.generator);
      std::vector<int> off(ints.begin() + 1, ints.end());
      auto g = zm::ZmGenerator::make(rec.m.value(), rec.n, ints.front(), std::move(off));
      pass = zm::verify_zm(g);
      detail << "modular residual " << (pass ? "0" : "nonzero");
      break;
    }
    case catalog::Kind::mub: {
      try {
        mub::assemble_triple(rec.complex_generator(), tol);
        pass = true;
        detail << "triple pairwise unbiased within " << tol;
      } catch (const mub::MubError& e) {
        pass = false;
        detail << e.what();
      }
      break;
    }
  }
  std::cout << "record " << index << ": kind=" << catalog::kind_name(rec.kind)
            << " n=" << rec.n << " d^2=" << rec.d_squared.str() << " " << detail.str() << " "
            << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) all_pass = false;
}

int cmd_verify(const VerifyArgs& a) {
  std::ifstream in(a.file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << a.file << "'\n";
    return kExitIoFailure;
  }
  bool jsonl = a.format == "jsonl" || (a.format == "auto" && catalog::looks_like_jsonl(in));
  bool all_pass = true;
  try {
    if (jsonl) {
      auto recs = catalog::read_jsonl(in);
      int index = 0;
      for (const auto& rec : recs) verify_record(rec, a.tol, ++index, all_pass);
      if (recs.empty()) std::cerr << "warning: no records in '" << a.file << "'\n";
    } else {
      double tol = a.tol > 0 ? a.tol : default_tol(1e-4);
      auto blocks = catalog::parse_generator_text(in);
      for (const auto& b : blocks) {
        auto rep = spectral::verify_conditions(b.gen, b.d, tol);
        std::cout << "n=" << b.n << " d=" << b.d.surd() << " gram=" << rep.gram_residual
                  << " unimod=" << rep.unimodularity_residual
                  << " diag=" << rep.diagonal_residual << " "
                  << (rep.passes ? "PASS" : "FAIL") << "\n";
        if (!rep.passes) all_pass = false;
      }
      if (blocks.empty()) std::cerr << "warning: no generator blocks in '" << a.file << "'\n";
    }
  } catch (const catalog::ParseError& e) {
    std::cerr << "parse error at line " << e.line << ": " << e.what() << "\n";
    return kExitParseFailure;
  }
  return all_pass ? kExitPass : kExitVerifyFailure;
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string n_spec;
  std::string d;
  int n_max = 0;
  std::string format = "table";
};

struct CandidateStatus {
  feasibility::EvenOrderCandidate cand;
  std::string status;  // "exists", "open", "excluded"
  std::vector<std::string> rule_ids;
  feasibility::FilterVerdict verdict;
};

std::vector<CandidateStatus> classify_order(int n) {
  std::vector<CandidateStatus> out;
  for (auto& cand : feasibility::even_order_candidates(n)) {
    CandidateStatus cs{cand, "open", {}, {}};
    if (!cand.rational) {
      cs.status = "excluded";
      cs.verdict.allowed = false;
      cs.verdict.reasons.emplace_back("P3.2ii", "d must be rational for even orders");
    } else if (cand.d.exact()->is_integer()) {
      cs.verdict = feasibility::integer_d_filter(
          n, cand.d.exact()->numerator().convert_to<std::int64_t>());
      if (!cs.verdict.allowed) cs.status = "excluded";
    }
    for (const auto& r : cs.verdict.reasons) cs.rule_ids.push_back(r.first);
    if (cs.status != "excluded" && cand.d.exact() &&
        *cand.d.exact() == Rational(n / 2 - 1))
      cs.status = "exists";
    out.push_back(std::move(cs));
  }
  return out;
}

int cmd_classify(const ClassifyArgs& a) {
  if (a.n_spec.empty() == a.d.empty()) {
    std::cerr << "error: supply exactly one of --n or --d\n";
    return kExitBadArguments;
  }

  if (!a.d.empty()) {
    Rational d = Rational::parse(a.d);
    int n_max = a.n_max > 0 ? a.n_max : 300;
    std::vector<std::pair<int, std::string>> rows;
    if (d.is_integer()) {
      for (int n : feasibility::admissible_even_orders(
               d.numerator().convert_to<std::int64_t>(), n_max))
        rows.emplace_back(n, Rational(n) == d * 2 + Rational(2) ? "exists" : "open");
    } else {
      // non-integer rational d: match it against the per-order candidates
      for (int n = 2; n <= n_max; n += 2)
        for (const auto& cs : classify_order(n))
          if (cs.cand.rational && *cs.cand.d.exact() == d && cs.status != "excluded")
            rows.emplace_back(n, cs.status);
    }
    std::string line;
    for (const auto& [n, status] : rows) {
      if (!line.empty()) line += "; ";
      line += std::to_string(n) + ": " + status;
    }
    std::cout << "d = " << d.str() << ", even n <= " << n_max << ": "
              << (line.empty() ? "none" : line) << "\n";
    return kExitPass;
  }

  int lo = 0, hi = 0;
  auto dots = a.n_spec.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(a.n_spec);
    } else {
      lo = std::stoi(a.n_spec.substr(0, dots));
      hi = std::stoi(a.n_spec.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "error: malformed --n '" << a.n_spec << "'\n";
    return kExitBadArguments;
  }
  if (lo < 2 || hi < lo) {
    std::cerr << "error: bad order range\n";
    return kExitBadArguments;
  }

  if (lo == hi) {
    int n = lo;
    if (n % 2 != 0) {
      std::cout << "n = " << n
                << " is odd: no even-order constraints apply; run 'circortho search --n "
                << n << "'\n";
      return kExitPass;
    }
    auto rows = classify_order(n);
    if (a.format == "json") {
      for (const auto& cs : rows)
        std::cout << "{\"n\": " << n << ", \"k\": " << cs.cand.k
                  << ", \"d\": " << catalog::diagonal_to_json(cs.cand.d) << ", \"status\": \""
                  << cs.status << "\", \"verdict\": " << catalog::verdict_to_json(cs.verdict)
                  << "}\n";
      return kExitPass;
    }
    std::vector<std::string> allowed;
    for (const auto& cs : rows) {
      std::cout << " k=" << cs.cand.k << "  d=" << cs.cand.d.surd() << " ("
                << fmt(cs.cand.d.approx()) << ")  " << cs.status;
      if (!cs.rule_ids.empty()) {
        std::cout << " [";
        for (size_t i = 0; i < cs.rule_ids.size(); ++i)
          std::cout << (i ? ", " : "") << cs.rule_ids[i];
        std::cout << "]";
      }
      std::cout << "\n";
      if (cs.status != "excluded") allowed.push_back(cs.cand.d.surd());
    }
    std::cout << "n = " << n << ": ";
    if (allowed.empty()) {
      std::cout << "no admissible d\n";
    } else if (allowed.size() == 1) {
      std::cout << "d = " << allowed.front() << " only\n";
    } else {
      std::cout << "d ∈ {";
      for (size_t i = 0; i < allowed.size(); ++i) std::cout << (i ? ", " : "") << allowed[i];
      std::cout << "}\n";
    }
    return kExitPass;
  }

  // range: report the non-trivial rational survivors (the open exceptions)
  std::cout << " n | d\n---+---\n";
  int count = 0;
  for (int n = lo + (lo % 2); n <= hi; n += 2) {
    for (const auto& cs : classify_order(n)) {
      if (cs.status == "excluded") continue;
      if (*cs.cand.d.exact() == Rational(n / 2 - 1)) continue;
      std::cout << " " << n << " | " << cs.cand.d.surd() << "\n";
      ++count;
    }
  }
  std::cout << count << " open exception(s) for n in {" << lo << ".." << hi << "}\n";
  return kExitPass;
}

// --- construct ----------------------------------------------------------------

struct ConstructArgs {
  bool trivial = false;
  bool quaternary = false;
  int n = 0;
  int nu = 0;
  std::string d;
  double tol = 0;
  std::string out;
  std::string format = "jsonl";
};

int cmd_construct(const ConstructArgs& a) {
  double tol = a.tol > 0 ? a.tol : default_tol(1e-9);
  std::vector<catalog::CatalogRecord> recs;
  if (a.trivial == a.quaternary) {
    std::cerr << "error: supply exactly one of --trivial or --quaternary\n";
    return kExitBadArguments;
  }
  if (a.trivial) {
    if (a.n < 2) {
      std::cerr << "error: --trivial needs --n >= 2\n";
      return kExitBadArguments;
    }
    auto g = feasibility::trivial_construction(a.n, a.nu);
    auto d = DiagonalValue::from_d_squared(Rational((a.n - 2) * (a.n - 2), 4));
    auto rep = spectral::verify_conditions(g, d, tol);
    std::cout << "circ_" << a.n << fmt_generator(g) << "  d = " << d.surd() << "  "
              << (rep.passes ? "PASS" : "FAIL") << "\n";
    recs.push_back(complex_record(catalog::Kind::complex_field, g, d, rep,
                                  "circortho construct --trivial --n " + std::to_string(a.n) +
                                      " --nu " + std::to_string(a.nu) + " | " + timestamp()));
    if (!rep.passes) return kExitVerifyFailure;
  } else {
    if (a.d.empty()) {
      std::cerr << "error: --quaternary needs --d\n";
      return kExitBadArguments;
    }
    Rational d = Rational::parse(a.d);
    auto forms = feasibility::quaternary_forms(d);
    if (forms.empty())
      std::cout << "no quaternary forms: 2d must be a non-negative integer\n";
    for (const auto& f : forms) {
      auto dv = DiagonalValue::from_d_squared(d * d);
      auto rep = spectral::verify_conditions(f.gen, dv, tol);
      std::cout << "circ_" << f.gen.n << fmt_generator(f.gen)
                << (f.conjectural ? "  [complete only under the generalized circulant "
                                    "Hadamard conjecture]"
                                  : "")
                << "  " << (rep.passes ? "PASS" : "FAIL") << "\n";
      auto rec = complex_record(catalog::Kind::quaternary, f.gen, dv, rep,
                                "circortho construct --quaternary --d " + d.str() + " | " +
                                    timestamp());
      rec.conjectural = f.conjectural;
      recs.push_back(std::move(rec));
      if (!rep.passes) return kExitVerifyFailure;
    }
  }
  if (!a.out.empty()) return write_records(recs, a.out, a.format);
  return kExitPass;
}

// --- zm -----------------------------------------------------------------------

struct ZmArgs {
  std::string family;
  bool do_search = false;
  bool symmetric = false;
  int m = 0;
  int n = 0;
  int n_max = 0;
  std::string out;
  std::string format = "jsonl";
};

catalog::CatalogRecord zm_record(const zm::ZmGenerator& g, std::string provenance) {
  catalog::CatalogRecord rec;
  rec.kind = catalog::Kind::zm;
  rec.n = g.n;
  rec.m = g.m;
  rec.d_squared = Rational(static_cast<long long>(g.d) * g.d);
  std::vector<int> ints;
  ints.push_back(g.d);
  ints.insert(ints.end(), g.offdiag.begin(), g.offdiag.end());
  rec.generator = std::move(ints);
  rec.residuals.passes = zm::verify_zm(g);
  rec.residuals.hermitian = g.symmetric();
  rec.provenance = std::move(provenance);
  std::string key;
  for (int j = 0; j < g.n; ++j) key += std::to_string(g.entry(j)) + ".";
  rec.canonical_key = key;
  return rec;
}

int cmd_zm(const ZmArgs& a) {
  if (a.m < 2) {
    std::cerr << "error: --m must be >= 2\n";
    return kExitBadArguments;
  }
  if (a.family.empty() == !a.do_search) {
    std::cerr << "error: supply exactly one of --family or --search\n";
    return kExitBadArguments;
  }
  std::vector<catalog::CatalogRecord> recs;
  std::string stamp = timestamp();

  if (a.do_search) {
    if (a.n < 2) {
      std::cerr << "error: --search needs --n >= 2\n";
      return kExitBadArguments;
    }
    auto found = zm::search_zm(a.m, a.n, a.symmetric);
    std::cout << found.size() << " solution(s) over Z_" << a.m << " at n = " << a.n
              << (a.symmetric ? " (symmetric only)" : "") << "\n";
    for (const auto& g : found) {
      std::cout << "  d=" << g.d << " offdiag=(";
      for (size_t i = 0; i < g.offdiag.size(); ++i)
        std::cout << (i ? "," : "") << g.offdiag[i];
      std::cout << ")\n";
      recs.push_back(zm_record(g, "circortho zm --search --m " + std::to_string(a.m) +
                                      " --n " + std::to_string(a.n) +
                                      (a.symmetric ? " --symmetric" : "") + " | " + stamp));
    }
  } else {
    if (a.family != "all-minus" && a.family != "one-plus") {
      std::cerr << "error: --family must be all-minus or one-plus\n";
      return kExitBadArguments;
    }
    const bool one_plus = a.family == "one-plus";
    std::vector<int> orders;
    if (a.n_max > 0) {
      if (one_plus) {
        auto o = zm::one_plus_orders(a.m, a.n_max);
        orders = o.orders;
        if (!o.skipped_odd.empty()) {
          std::cout << "skipped odd congruence orders:";
          for (int n : o.skipped_odd) std::cout << " " << n;
          std::cout << "\n";
        }
      } else {
        for (int n = 2; n <= a.n_max; ++n)
          if (!zm::all_minus_family(a.m, n).empty()) orders.push_back(n);
      }
    } else {
      if (a.n < 2) {
        std::cerr << "error: --family needs --n or --n-max\n";
        return kExitBadArguments;
      }
      orders.push_back(a.n);
    }
    for (int n : orders) {
      auto ds = one_plus ? zm::one_plus_family(a.m, n) : zm::all_minus_family(a.m, n);
      std::cout << "m=" << a.m << " n=" << n << ": d ∈ {";
      for (size_t i = 0; i < ds.size(); ++i) std::cout << (i ? ", " : "") << ds[i];
      std::cout << "}\n";
      for (int d : ds) {
        auto g = one_plus ? zm::one_plus_generator(a.m, n, d)
                          : zm::all_minus_generator(a.m, n, d);
        if (!zm::verify_zm(g)) {
          std::cerr << "internal error: family generator failed verification\n";
          return kExitVerifyFailure;
        }
        recs.push_back(zm_record(g, "circortho zm --family " + a.family + " --m " +
                                        std::to_string(a.m) + " --n " + std::to_string(n) +
                                        " | " + stamp));
      }
    }
  }
  if (!a.out.empty()) return write_records(recs, a.out, a.format);
  return kExitPass;
}

// --- mub ------------------------------------------------------------------------

struct MubArgs {
  int n = 0;
  std::string generator;
  bool xz = false;
  double tol = 0;
  std::string out;
  std::string format = "jsonl";
};

Complex parse_mub_entry(std::string token, int n) {
  // strip whitespace; allow w / w^k / -w^k on top of the usual literals
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  bool neg = !s.empty() && s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  if (!body.empty() && body[0] == 'w') {
    int power = 1;
    if (body.size() > 1) {
      if (body[1] != '^') throw std::invalid_argument("malformed root token '" + token + "'");
      power = std::stoi(body.substr(2));
    }
    auto w = spectral::roots_of_unity(n);
    Complex v = w[static_cast<size_t>(((power % n) + n) % n)];
    return neg ? -v : v;
  }
  return catalog::parse_complex_literal(token);
}

int cmd_mub(const MubArgs& a) {
  if (a.n < 2) {
    std::cerr << "error: --n must be >= 2\n";
    return kExitBadArguments;
  }
  double tol = a.tol > 0 ? a.tol : default_tol(1e-9);
  std::string stamp = timestamp();

  if (a.xz) {
    auto b = mub::xz_eigenbasis(a.n);
    double eig = mub::xz_eigenvector_residual(b);
    double ub_id = mub::unbiased_residual(mub::Basis::identity(a.n), b);
    double ub_f = mub::unbiased_residual(mub::fourier_basis(a.n), b);
    bool pass = eig <= tol && ub_id <= tol && ub_f <= tol;
    std::cout << "xz eigenbasis n=" << a.n << ": eigenvector residual " << eig
              << ", unbiased-to-identity " << ub_id << ", unbiased-to-fourier " << ub_f
              << " " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitPass : kExitVerifyFailure;
  }

  if (a.generator.empty()) {
    std::cerr << "error: supply --generator or --xz\n";
    return kExitBadArguments;
  }
  std::vector<Complex> entries;
  std::stringstream ss(a.generator);
  std::string token;
  while (std::getline(ss, token, ',')) entries.push_back(parse_mub_entry(token, a.n));
  if (static_cast<int>(entries.size()) != a.n) {
    std::cerr << "error: expected " << a.n << " generator entries, got " << entries.size()
              << "\n";
    return kExitBadArguments;
  }
  Generator g(std::move(entries));
  try {
    auto triple = mub::assemble_triple(g, tol);
    std::cout << "triple verified: pairwise unbiased within " << tol << " (n = " << a.n
              << ")\n";
    catalog::CatalogRecord rec;
    rec.kind = catalog::Kind::mub;
    rec.n = a.n;
    rec.d_squared = Rational(1);
    rec.generator = g.entries;
    rec.residuals.tol = tol;
    rec.residuals.passes = true;
    rec.residuals.hermitian = spectral::is_hermitian(g, tol);
    rec.residuals.gram_residual = triple[2].gram_residual();
    rec.provenance = "circortho mub --n " + std::to_string(a.n) + " --generator " +
                     a.generator + " | " + stamp;
    rec.canonical_key = search::key_hex(search::canonical_key(g));
    std::vector<std::vector<Complex>> bases;
    for (const auto& b : triple) bases.push_back(b.col_major);
    rec.bases = std::move(bases);
    if (!a.out.empty()) return write_records({rec}, a.out, a.format);
    return kExitPass;
  } catch (const mub::MubError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circulant matrices with orthogonal rows: search, verification,\n"
               "number-theoretic classification, finite-ring families, and MUB triples"};
  app.require_subcommand(1);

  SearchArgs sa;
  auto* s = app.add_subcommand("search", "exhaustive spectral search at one order");
  s->add_option("--n", sa.n, "order (2..26)")->required();
  s->add_option("--tol", sa.tol, "verification tolerance (default 1e-9 or CIRCORTHO_TOL)");
  s->add_option("--workers", sa.workers, "worker threads (default: hardware concurrency)");
  s->add_option("--out", sa.out, "write catalog records here ('-' for stdout)");
  s->add_option("--format", sa.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  s->add_option("--d2", sa.d2, "restrict to the class with this exact d^2 (p/q)");
  s->add_option("--d", sa.d, "restrict to the class with this exact rational d (p/q)");
  s->add_flag("--quiet", sa.quiet, "suppress the summary table");
  s->add_flag("--stats", sa.stats, "print per-class enumeration counts");

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "re-verify a catalog or generator text file");
  v->add_option("file", va.file, "JSONL catalog or generator text")->required();
  v->add_option("--tol", va.tol, "tolerance override (default: recorded / 1e-4 for text)");
  v->add_option("--format", va.format, "auto, jsonl, or text")
      ->check(CLI::IsMember({"auto", "jsonl", "text"}));

  ClassifyArgs ca;
  auto* c = app.add_subcommand("classify", "number-theoretic admissibility of (n, d) pairs");
  c->add_option("--n", ca.n_spec, "even order or inclusive range 'lo..hi'");
  c->add_option("--d", ca.d, "rational diagonal to scan orders for");
  c->add_option("--n-max", ca.n_max, "largest order scanned with --d (default 300)");
  c->add_option("--format", ca.format, "table or json (single order only)")
      ->check(CLI::IsMember({"table", "json"}));

  ConstructArgs na;
  auto* t = app.add_subcommand("construct", "emit the closed-form generators");
  t->add_flag("--trivial", na.trivial, "d = n/2 - 1 construction");
  t->add_flag("--quaternary", na.quaternary, "4th-roots-of-unity forms for a given d");
  t->add_option("--n", na.n, "order (with --trivial)");
  t->add_option("--nu", na.nu, "phase index in Z_n (with --trivial)");
  t->add_option("--d", na.d, "diagonal as p/q (with --quaternary)");
  t->add_option("--tol", na.tol, "verification tolerance");
  t->add_option("--out", na.out, "write catalog records here");
  t->add_option("--format", na.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  ZmArgs za;
  auto* z = app.add_subcommand("zm", "families and brute-force search over Z_m");
  z->add_option("--m", za.m, "modulus")->required();
  z->add_option("--family", za.family, "all-minus or one-plus");
  z->add_flag("--search", za.do_search, "exhaustive +-1 search");
  z->add_flag("--symmetric", za.symmetric, "restrict the search to symmetric generators");
  z->add_option("--n", za.n, "order");
  z->add_option("--n-max", za.n_max, "enumerate family orders up to this bound");
  z->add_option("--out", za.out, "write catalog records here");
  z->add_option("--format", za.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  MubArgs ma;
  auto* mu = app.add_subcommand("mub", "assemble and verify mutually unbiased bases");
  mu->add_option("--n", ma.n, "dimension")->required();
  mu->add_option("--generator", ma.generator,
                 "comma-separated entries; tokens: w, w^k, i, -i, reals, a+bi");
  mu->add_flag("--xz", ma.xz, "use the XZ eigenbasis (prime n)");
  mu->add_option("--tol", ma.tol, "tolerance (default 1e-9 or CIRCORTHO_TOL)");
  mu->add_option("--out", ma.out, "write catalog records here");
  mu->add_option("--format", ma.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    if (s->parsed()) return cmd_search(sa);
    if (v->parsed()) return cmd_verify(va);
    if (c->parsed()) return cmd_classify(ca);
    if (t->parsed()) return cmd_construct(na);
    if (z->parsed()) return cmd_zm(za);
    if (mu->parsed()) return cmd_mub(ma);
  } catch (const catalog::ParseError& e) {
    std::cerr << "parse error at line " << e.line << ": " << e.what() << "\n";
    return kExitParseFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitBadArguments;
}
