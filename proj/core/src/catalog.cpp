#include "circortho/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace circortho::catalog {

using nlohmann::json;

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::complex_field: return "complex";
    case Kind::quaternary: return "quaternary";
    case Kind::zm: return "zm";
    case Kind::mub: return "mub";
  }
  return "complex";
}

Kind kind_from_name(const std::string& name) {
  if (name == "complex") return Kind::complex_field;
  if (name == "quaternary") return Kind::quaternary;
  if (name == "zm") return Kind::zm;
  if (name == "mub") return Kind::mub;
  throw std::invalid_argument("unknown record kind '" + name + "'");
}

Generator CatalogRecord::complex_generator() const {
  const auto* entries = std::get_if<std::vector<Complex>>(&generator);
  if (!entries) throw std::logic_error("record does not hold a complex generator");
  return Generator(*entries);
}

namespace {

json complex_seq_to_json(const std::vector<Complex>& v) {
  json arr = json::array();
  for (const Complex& c : v) arr.push_back(json::array({c.real(), c.imag()}));
  return arr;
}

std::vector<Complex> complex_seq_from_json(const json& arr) {
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& e : arr)
    out.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return out;
}

}  // namespace

std::string to_json_line(const CatalogRecord& rec) {
  json j;
  j["schema_version"] = rec.schema_version;
  j["kind"] = kind_name(rec.kind);
  j["n"] = rec.n;
  if (rec.m) j["m"] = *rec.m;
  j["d_squared"] = rec.d_squared.str();
  if (const auto* ints = std::get_if<std::vector<int>>(&rec.generator))
    j["generator"] = *ints;
  else
    j["generator"] = complex_seq_to_json(std::get<std::vector<Complex>>(rec.generator));
  j["residuals"] = {{"gram_residual", rec.residuals.gram_residual},
                    {"unimodularity_residual", rec.residuals.unimodularity_residual},
                    {"diagonal_residual", rec.residuals.diagonal_residual},
                    {"hermitian", rec.residuals.hermitian},
                    {"passes", rec.residuals.passes},
                    {"tol", rec.residuals.tol}};
  j["provenance"] = rec.provenance;
  j["canonical_key"] = rec.canonical_key;
  if (rec.conjectural) j["conjectural"] = *rec.conjectural;
  if (rec.bases) {
    json bs = json::array();
    for (const auto& b : *rec.bases) bs.push_back(complex_seq_to_json(b));
    j["bases"] = bs;
  }
  return j.dump();
}

CatalogRecord from_json_line(const std::string& line, int line_number) {
  json j;
  try {
    j = json::parse(line);
    CatalogRecord rec;
    rec.schema_version = j.at("schema_version").get<int>();
    rec.kind = kind_from_name(j.at("kind").get<std::string>());
    rec.n = j.at("n").get<int>();
    if (j.contains("m")) rec.m = j["m"].get<int>();
    rec.d_squared = Rational::parse(j.at("d_squared").get<std::string>());
    if (rec.kind == Kind::zm)
      rec.generator = j.at("generator").get<std::vector<int>>();
    else
      rec.generator = complex_seq_from_json(j.at("generator"));
    const json& r = j.at("residuals");
    rec.residuals.gram_residual = r.at("gram_residual").get<double>();
    rec.residuals.unimodularity_residual = r.at("unimodularity_residual").get<double>();
    rec.residuals.diagonal_residual = r.at("diagonal_residual").get<double>();
    rec.residuals.hermitian = r.at("hermitian").get<bool>();
    rec.residuals.passes = r.at("passes").get<bool>();
    rec.residuals.tol = r.at("tol").get<double>();
    rec.provenance = j.at("provenance").get<std::string>();
    rec.canonical_key = j.at("canonical_key").get<std::string>();
    if (j.contains("conjectural")) rec.conjectural = j["conjectural"].get<bool>();
    if (j.contains("bases")) {
      std::vector<std::vector<Complex>> bases;
      for (const auto& b : j["bases"]) bases.push_back(complex_seq_from_json(b));
      rec.bases = std::move(bases);
    }
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog record: ") + e.what(), line_number);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("catalog record: ") + e.what(), line_number);
  }
}

void write_jsonl(std::ostream& out, const std::vector<CatalogRecord>& recs) {
  for (const auto& rec : recs) out << to_json_line(rec) << "\n";
}

std::vector<CatalogRecord> read_jsonl(std::istream& in) {
  std::vector<CatalogRecord> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_json_line(line, line_number));
  }
  return out;
}

namespace {

std::string complex_literal(const Complex& c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<CatalogRecord>& recs) {
  out << "schema_version,kind,n,m,d_squared,passes,gram_residual,unimodularity_residual,"
         "diagonal_residual,hermitian,tol,canonical_key,generator\n";
  for (const auto& rec : recs) {
    out << rec.schema_version << ',' << kind_name(rec.kind) << ',' << rec.n << ','
        << (rec.m ? std::to_string(*rec.m) : "") << ',' << rec.d_squared.str() << ','
        << (rec.residuals.passes ? "true" : "false") << ',' << rec.residuals.gram_residual
        << ',' << rec.residuals.unimodularity_residual << ',' << rec.residuals.diagonal_residual
        << ',' << (rec.residuals.hermitian ? "true" : "false") << ',' << rec.residuals.tol << ','
        << rec.canonical_key << ',';
    if (const auto* ints = std::get_if<std::vector<int>>(&rec.generator)) {
      for (size_t i = 0; i < ints->size(); ++i)
        out << (i ? ";" : "") << (*ints)[i];
    } else {
      const auto& cs = std::get<std::vector<Complex>>(rec.generator);
      for (size_t i = 0; i < cs.size(); ++i)
        out << (i ? ";" : "") << complex_literal(cs[i]);
    }
    out << "\n";
  }
}

std::string verdict_to_json(const feasibility::FilterVerdict& v) {
  json j;
  j["allowed"] = v.allowed;
  json reasons = json::array();
  for (const auto& [rule, detail] : v.reasons)
    reasons.push_back({{"rule", rule}, {"detail", detail}});
  j["reasons"] = reasons;
  j["derived"] = v.derived;
  return j.dump();
}

std::string diagonal_to_json(const DiagonalValue& d) {
  json j;
  j["d_squared"] = d.d_squared().str();
  j["d_exact"] = d.exact() ? json(d.exact()->str()) : json(nullptr);
  return j.dump();
}

DiagonalValue diagonal_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    auto d = DiagonalValue::from_d_squared(Rational::parse(j.at("d_squared").get<std::string>()));
    if (!j.at("d_exact").is_null()) {
      Rational stated = Rational::parse(j["d_exact"].get<std::string>());
      if (!d.exact() || !(*d.exact() == stated))
        throw ParseError("d_exact disagrees with d_squared", 0);
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("diagonal: ") + e.what(), 0);
  }
}

// --- text ingestion --------------------------------------------------------

namespace {

std::string strip_ws(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// consumes an unsigned integer from s at pos
std::optional<long long> eat_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return std::nullopt;
  return std::stoll(s.substr(start, pos - start));
}

// consumes "√" (UTF-8) or "sqrt" at pos
bool eat_radical(const std::string& s, size_t& pos) {
  static const std::string utf8_root = "√";
  if (s.compare(pos, utf8_root.size(), utf8_root) == 0) {
    pos += utf8_root.size();
    return true;
  }
  if (s.compare(pos, 4, "sqrt") == 0) {
    pos += 4;
    return true;
  }
  return false;
}

}  // namespace

DiagonalValue parse_surd(std::string_view text) {
  const std::string s = strip_ws(text);
  size_t pos = 0;
  auto fail = [&]() -> DiagonalValue {
    throw std::invalid_argument("parse_surd: malformed surd '" + std::string(text) + "'");
  };

  auto p = eat_int(s, pos);
  if (!p) return fail();
  if (pos == s.size()) return DiagonalValue::from_exact(Rational(*p));
  if (s[pos] != '/') return fail();
  ++pos;

  bool parens = pos < s.size() && s[pos] == '(';
  if (parens) ++pos;
  long long q = 1, r = 1;
  auto qv = eat_int(s, pos);
  if (qv) q = *qv;
  if (qv && pos < s.size() && s[pos] == '*') ++pos;
  if (pos < s.size() && eat_radical(s, pos)) {
    bool inner = pos < s.size() && s[pos] == '(';
    if (inner) ++pos;
    auto rv = eat_int(s, pos);
    if (!rv) return fail();
    r = *rv;
    if (inner) {
      if (pos >= s.size() || s[pos] != ')') return fail();
      ++pos;
    }
  } else if (!qv) {
    return fail();
  }
  if (parens) {
    if (pos >= s.size() || s[pos] != ')') return fail();
    ++pos;
  }
  if (pos != s.size()) return fail();
  // d = p / (q sqrt(r))  =>  d^2 = p^2 / (q^2 r)
  Rational d2(BigInt(*p) * BigInt(*p), BigInt(q) * BigInt(q) * BigInt(r));
  return DiagonalValue::from_d_squared(std::move(d2));
}

Complex parse_complex_literal(std::string_view text) {
  const std::string s = strip_ws(text);
  if (s.empty()) throw std::invalid_argument("parse_complex_literal: empty literal");

  // surd form (contains a radical, or p/q without 'i' and without '.')
  if (s.find('i') == std::string::npos &&
      (s.find("√") != std::string::npos || s.find("sqrt") != std::string::npos ||
       (s.find('/') != std::string::npos && s.find('.') == std::string::npos))) {
    return Complex(parse_surd(s).approx(), 0.0);
  }

  // split into real part and imaginary part at the last top-level +/-
  // (skipping a leading sign and exponent signs)
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }

  auto parse_real = [](const std::string& t) {
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing characters in number '" + t + "'");
    return v;
  };
  auto parse_imag_coeff = [&](std::string t) {  // "...i" with optional bare sign
    t.pop_back();                               // trailing 'i'
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };

  try {
    if (s.back() == 'i') {
      if (split == std::string::npos)  // pure imaginary
        return Complex(0.0, parse_imag_coeff(s));
      return Complex(parse_real(s.substr(0, split)), parse_imag_coeff(s.substr(split)));
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
      throw std::invalid_argument("imaginary unit must be trailing");
    return Complex(parse_real(s), 0.0);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_complex_literal: malformed literal '" +
                                std::string(text) + "'");
  }
}

namespace {

// header "n = <int>, d = <surd>"
std::optional<std::pair<int, DiagonalValue>> try_parse_header(const std::string& line) {
  const std::string s = strip_ws(line);
  if (s.compare(0, 2, "n=") != 0) return std::nullopt;
  size_t comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  if (s.compare(comma + 1, 2, "d=") != 0) return std::nullopt;
  try {
    int n = std::stoi(s.substr(2, comma - 2));
    DiagonalValue d = parse_surd(s.substr(comma + 3));
    return std::make_pair(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<TextBlock> parse_generator_text(std::istream& in) {
  std::vector<TextBlock> blocks;
  std::optional<std::pair<int, DiagonalValue>> header;
  int header_line = 0;
  std::string pending;  // accumulated entry text of the current block

  std::string line;
  int line_number = 0;

  auto flush = [&]() {
    if (!header) {
      if (pending.find_first_not_of(", \t") != std::string::npos)
        throw ParseError("generator entries before any 'n = ..., d = ...' header", line_number);
      return;
    }
    auto [n, d] = *header;
    std::vector<Complex> entries;
    std::stringstream ss(pending);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      try {
        entries.push_back(parse_complex_literal(token));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), header_line);
      }
    }
    if (static_cast<int>(entries.size()) == n - 1) {
      entries.insert(entries.begin(), Complex(d.approx(), 0.0));
    } else if (static_cast<int>(entries.size()) == n) {
      if (std::abs(entries.front() - Complex(d.approx(), 0.0)) > 1e-9)
        throw ParseError("first generator entry disagrees with the stated d", header_line);
    } else {
      throw ParseError("expected " + std::to_string(n) + " generator entries, found " +
                           std::to_string(entries.size()),
                       header_line);
    }
    blocks.push_back(TextBlock{n, d, Generator(std::move(entries)), header_line});
    header.reset();
    pending.clear();
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (auto h = try_parse_header(line)) {
      flush();
      header = std::move(h);
      header_line = line_number;
      continue;
    }
    if (!header)
      throw ParseError("expected 'n = ..., d = ...' header", line_number);
    pending += line;
    pending += '\n';
  }
  flush();
  return blocks;
}

bool looks_like_jsonl(std::istream& in) {
  auto pos = in.tellg();
  char c = 0;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) break;
  }
  in.clear();
  in.seekg(pos);
  return c == '{';
}

}  // namespace circortho::catalog
