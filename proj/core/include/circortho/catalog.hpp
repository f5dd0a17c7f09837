#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "circortho/diagonal.hpp"
#include "circortho/feasibility.hpp"
#include "circortho/generator.hpp"
#include "circortho/spectral.hpp"

namespace circortho::catalog {

enum class Kind { complex_field, quaternary, zm, mub };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

// One persisted result. Serialized as a single JSON object per line with
// keys sorted; every record re-verifies on load at its recorded tolerance.
struct CatalogRecord {
  int schema_version = 1;
  Kind kind = Kind::complex_field;
  int n = 0;
  std::optional<int> m;  // modulus, zm records only
  Rational d_squared;
  // complex entries as [re, im] pairs, or plain integers for zm records
  std::variant<std::vector<Complex>, std::vector<int>> generator;
  spectral::VerificationReport residuals;
  std::string provenance;  // command + parameters + timestamp
  std::string canonical_key;  // hex
  std::optional<bool> conjectural;            // quaternary records
  std::optional<std::vector<std::vector<Complex>>> bases;  // mub: column-major

  Generator complex_generator() const;  // throws when the record is a zm record
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line) : std::runtime_error(what), line(line) {}
  int line;
};

std::string to_json_line(const CatalogRecord& rec);
CatalogRecord from_json_line(const std::string& line, int line_number = 0);

void write_jsonl(std::ostream& out, const std::vector<CatalogRecord>& recs);
std::vector<CatalogRecord> read_jsonl(std::istream& in);

// Flat CSV rendering of the same records (header + one row per record;
// complex sequences are ';'-joined "re+imi" literals).
void write_csv(std::ostream& out, const std::vector<CatalogRecord>& recs);

// {"allowed": ..., "reasons": [{"rule": "P3.3i", "detail": ...}, ...],
//  "derived": {"ell": ..., "k": ..., "n_half_factorization": ...}}
std::string verdict_to_json(const feasibility::FilterVerdict& v);

// {"d_squared": "p/q", "d_exact": "p/q" | null}
std::string diagonal_to_json(const DiagonalValue& d);
DiagonalValue diagonal_from_json(const std::string& text);

// --- text ingestion -------------------------------------------------------

// "p", "p/q" or "p/(q√r)" ("sqrt" accepted for the radical); returns the
// value as an exact DiagonalValue (d^2 = p^2 / (q^2 r)).
DiagonalValue parse_surd(std::string_view text);

// Complex literal: "a + b i" / "a - b i" with arbitrary whitespace, plain
// reals, "i"/"-i", pure imaginaries, or a surd (taken as a real value).
Complex parse_complex_literal(std::string_view text);

// Block of the 6-decimal text format: a header "n = <int>, d = <surd>"
// followed by the comma-separated generator entries (the diagonal surd may
// be repeated as the first entry).
struct TextBlock {
  int n = 0;
  DiagonalValue d;
  Generator gen;
  int header_line = 0;
};

// Parses every block in the stream; throws ParseError with the offending
// line number.
std::vector<TextBlock> parse_generator_text(std::istream& in);

// true when the payload looks like a JSONL catalog rather than the text
// format (first non-space byte is '{')
bool looks_like_jsonl(std::istream& in);

}  // namespace circortho::catalog
