#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "circortho/catalog.hpp"
#include "circortho/feasibility.hpp"
#include "circortho/search.hpp"
#include "circortho/zm.hpp"

using namespace circortho;
using namespace circortho::catalog;

TEST_CASE("surd parsing") {
  CHECK(parse_surd("5/2").d_squared() == Rational(25, 4));
  CHECK(parse_surd("7").d_squared() == Rational(49));
  CHECK(parse_surd("1/(2√2)").d_squared() == Rational(1, 8));
  CHECK(parse_surd("5/(2√3)").d_squared() == Rational(25, 12));
  CHECK(parse_surd("1/(2 sqrt 5)").d_squared() == Rational(1, 20));
  CHECK(parse_surd("1/(2*sqrt(2))").d_squared() == Rational(1, 8));
  CHECK(parse_surd("11/4").d_squared() == Rational(121, 16));
  CHECK(parse_surd("0").d_squared() == Rational(0));
  CHECK_THROWS_AS(parse_surd("x/(2√2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_surd("1/(2√2"), std::invalid_argument);
}

TEST_CASE("complex literal parsing") {
  CHECK(std::abs(parse_complex_literal("0.833289 - 0.552838 i") -
                 Complex(0.833289, -0.552838)) < 1e-15);
  CHECK(std::abs(parse_complex_literal("-0.00724338 + 0.999974 i") -
                 Complex(-0.00724338, 0.999974)) < 1e-15);
  CHECK(std::abs(parse_complex_literal("-0.5") - Complex(-0.5, 0)) < 1e-15);
  CHECK(std::abs(parse_complex_literal("i") - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(parse_complex_literal("-i") - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(parse_complex_literal("2i") - Complex(0, 2)) < 1e-15);
  CHECK(std::abs(parse_complex_literal("1e-3 + 2e-4 i") - Complex(1e-3, 2e-4)) < 1e-18);
  CHECK(std::abs(parse_complex_literal("1/(2√2)") -
                 Complex(0.35355339059327373, 0)) < 1e-15);
  CHECK_THROWS_AS(parse_complex_literal("foo"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_literal(""), std::invalid_argument);
}

TEST_CASE("record round trip") {
  auto r = search::search_order(4);
  REQUIRE(!r.solutions.empty());
  const auto& sol = r.solutions.front();

  CatalogRecord rec;
  rec.kind = Kind::complex_field;
  rec.n = 4;
  rec.d_squared = sol.d.d_squared();
  rec.generator = sol.generator.entries;
  rec.residuals = sol.residuals;
  rec.provenance = "search --n 4 --tol 1e-09 | 2000-01-01T00:00:00Z";
  rec.canonical_key = search::key_hex(sol.canonical_key);

  std::string line = to_json_line(rec);
  CatalogRecord back = from_json_line(line);
  CHECK(back.kind == Kind::complex_field);
  CHECK(back.n == 4);
  CHECK(back.d_squared == rec.d_squared);
  CHECK(back.canonical_key == rec.canonical_key);
  CHECK(back.residuals.tol == rec.residuals.tol);
  CHECK(back.complex_generator() == sol.generator);
  // byte-stable serialization
  CHECK(to_json_line(back) == line);
}

TEST_CASE("zm records hold integer generators") {
  CatalogRecord rec;
  rec.kind = Kind::zm;
  rec.n = 4;
  rec.m = 3;
  rec.d_squared = Rational(4);
  rec.generator = std::vector<int>{2, 1, 1, 1};
  rec.residuals.passes = true;
  rec.provenance = "zm --search --m 3 --n 4";
  rec.canonical_key = "";

  CatalogRecord back = from_json_line(to_json_line(rec));
  CHECK(back.m.value() == 3);
  CHECK(std::get<std::vector<int>>(back.generator) == std::vector<int>{2, 1, 1, 1});
  CHECK_THROWS_AS(back.complex_generator(), std::logic_error);
}

TEST_CASE("jsonl stream round trip") {
  auto r = search::search_order(6);
  std::vector<CatalogRecord> recs;
  for (const auto& sol : r.solutions) {
    CatalogRecord rec;
    rec.kind = Kind::complex_field;
    rec.n = 6;
    rec.d_squared = sol.d.d_squared();
    rec.generator = sol.generator.entries;
    rec.residuals = sol.residuals;
    rec.provenance = "search --n 6";
    rec.canonical_key = search::key_hex(sol.canonical_key);
    recs.push_back(std::move(rec));
  }
  std::stringstream ss;
  write_jsonl(ss, recs);
  auto back = read_jsonl(ss);
  REQUIRE(back.size() == recs.size());
  for (size_t i = 0; i < recs.size(); ++i)
    CHECK(to_json_line(back[i]) == to_json_line(recs[i]));
}

TEST_CASE("parse failures carry line numbers") {
  std::stringstream ss("{\"schema_version\":1}\n");
  CHECK_THROWS_AS(read_jsonl(ss), ParseError);
  std::stringstream ss2("\n\nnot json\n");
  try {
    read_jsonl(ss2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("csv rendering") {
  CatalogRecord rec;
  rec.kind = Kind::zm;
  rec.n = 4;
  rec.m = 3;
  rec.d_squared = Rational(4);
  rec.generator = std::vector<int>{2, 1, 1, 1};
  rec.residuals.passes = true;
  rec.canonical_key = "ab";
  std::stringstream ss;
  write_csv(ss, {rec});
  std::string text = ss.str();
  CHECK(text.find("zm,4,3,4,true") != std::string::npos);
  CHECK(text.find("2;1;1;1") != std::string::npos);
}

TEST_CASE("text block ingestion") {
  std::stringstream ss(
      "n = 4, d = 1\n"
      "1, i, 1, -i\n"
      "\n"
      "n = 2, d = 0\n"
      "-1\n");
  auto blocks = parse_generator_text(ss);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].n == 4);
  CHECK(blocks[0].d.d_squared() == Rational(1));
  CHECK(blocks[0].gen == circ({{1, 0}, {0, 1}, {1, 0}, {0, -1}}));
  // n-1 entries: the stated d is prepended as the diagonal
  CHECK(blocks[1].n == 2);
  CHECK(blocks[1].gen == circ({0, -1}));
}

TEST_CASE("text ingestion failures") {
  std::stringstream missing_header("1, 2, 3\n");
  CHECK_THROWS_AS(parse_generator_text(missing_header), ParseError);

  std::stringstream wrong_count("n = 4, d = 1\n1, i\n");
  CHECK_THROWS_AS(parse_generator_text(wrong_count), ParseError);

  std::stringstream diag_mismatch("n = 2, d = 1\n0.5, -1\n");
  CHECK_THROWS_AS(parse_generator_text(diag_mismatch), ParseError);
}

TEST_CASE("the six reference blocks ingest and verify at 1e-4") {
  std::ifstream in(std::string(CIRCORTHO_TEST_DATA_DIR) + "/appendix.txt");
  REQUIRE(in.good());
  auto blocks = parse_generator_text(in);
  REQUIRE(blocks.size() == 6);
  int want_n[] = {7, 11, 13, 15, 19, 21};
  Rational want_d2[] = {Rational(1, 8),  Rational(1, 12), Rational(25, 12),
                        Rational(1, 16), Rational(1, 20), Rational(121, 16)};
  for (size_t i = 0; i < 6; ++i) {
    CHECK(blocks[i].n == want_n[i]);
    CHECK(blocks[i].d.d_squared() == want_d2[i]);
    auto rep = spectral::verify_conditions(blocks[i].gen, blocks[i].d, 1e-4);
    CHECK(rep.passes);
    CHECK(rep.hermitian);
    // 6-decimal inputs sit far inside the 1e-4 budget
    CHECK(rep.gram_residual < 5e-5);
  }
}

TEST_CASE("filter verdicts serialize with their rule identifiers") {
  auto v = feasibility::integer_d_filter(12, 0);
  std::string json = verdict_to_json(v);
  CHECK(json.find("\"allowed\":false") != std::string::npos);
  CHECK(json.find("\"rule\":\"C3.4\"") != std::string::npos);
  CHECK(json.find("\"n_half_factorization\"") != std::string::npos);

  auto ok = feasibility::integer_d_filter(210, 4);
  std::string okj = verdict_to_json(ok);
  CHECK(okj.find("\"allowed\":true") != std::string::npos);
  CHECK(okj.find("\"ell\":\"15\"") != std::string::npos);
  CHECK(okj.find("\"k\":\"7\"") != std::string::npos);
}

TEST_CASE("diagonal json round trip") {
  auto surd = DiagonalValue::from_d_squared(Rational(1, 8));
  CHECK(diagonal_to_json(surd) == "{\"d_exact\":null,\"d_squared\":\"1/8\"}");
  auto rational = DiagonalValue::from_d_squared(Rational(25, 4));
  CHECK(diagonal_to_json(rational) == "{\"d_exact\":\"5/2\",\"d_squared\":\"25/4\"}");
  for (const auto& d : {surd, rational})
    CHECK(diagonal_from_json(diagonal_to_json(d)) == d);
  CHECK_THROWS_AS(diagonal_from_json("{\"d_squared\":\"1/8\",\"d_exact\":\"1/2\"}"),
                  ParseError);
}

TEST_CASE("format detection") {
  std::stringstream j("  {\"kind\": \"complex\"}\n");
  CHECK(looks_like_jsonl(j));
  std::stringstream t("n = 7, d = 1/(2√2)\n");
  CHECK(!looks_like_jsonl(t));
  // detection must not consume the stream
  std::string first;
  std::getline(t, first);
  CHECK(first.find("n = 7") == 0);
}
