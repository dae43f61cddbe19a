#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "phisoft/io.hpp"
#include "phisoft/laws.hpp"

using namespace phisoft;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::parse_error;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const std::filesystem::path data_dir{PHISOFT_DATA_DIR};

}  // namespace

TEST_CASE("parse the shipped CSV tables") {
  CHECK(equals(io::load_table(data_dir / "table1.csv"), fixtures::set1()));
  CHECK(equals(io::load_table(data_dir / "table2.csv"), fixtures::set2()));
}

TEST_CASE("CSV grammar") {
  SUBCASE("quoted and parenthesized cells, spaces, blank lines, CRLF") {
    const auto s = io::parse_csv("id , s1 ,s2\r\n\r\np1, \" 0.7 , 0.2 \" , ( 0.1,0.3 )\r\n__f__,\"0.5,0.4\",(1,0)\r\n");
    CHECK(s.cell("p1", "s1") == make_pfn(0.7, 0.2));
    CHECK(s.cell("p1", "s2") == make_pfn(0.1, 0.3));
    CHECK(s.parameters()[1].importance == make_pfn(1.0, 0.0));
  }
  SUBCASE("no trailing newline") {
    CHECK_NOTHROW((void)io::parse_csv("id,s1\np1,\"0.1,0.1\"\n__f__,\"0.2,0.2\""));
  }
  SUBCASE("header-only input") {
    const auto what = message_of([] { (void)io::parse_csv("id,s1,s2\n"); });
    CHECK(what.find("ParseError") != std::string::npos);
    CHECK(what.find("no alternatives") != std::string::npos);
  }
  SUBCASE("empty input") { CHECK(kind_of([] { (void)io::parse_csv(""); }) == ErrorKind::parse_error); }
  SUBCASE("invalid cell names its coordinates") {
    const auto text = "id,s1,s2\np1,\"0.1,0.1\",\"0.9,0.9\"\n__f__,\"0.2,0.2\",\"0.2,0.2\"\n";
    CHECK(kind_of([&] { (void)io::parse_csv(text); }) == ErrorKind::invalid_pfn);
    const auto what = message_of([&] { (void)io::parse_csv(text); });
    CHECK(what.find("line 2") != std::string::npos);
    CHECK(what.find("column 14") != std::string::npos);
    CHECK(what.find("(p1, s2)") != std::string::npos);
  }
  SUBCASE("malformed number carries line and column") {
    const auto what = message_of([] { (void)io::parse_csv("id,s1\np1,\"0.1,x\"\n__f__,\"0.2,0.2\"\n"); });
    CHECK(what.find("ParseError: line 2, column 4") != std::string::npos);
  }
  SUBCASE("ragged row") {
    CHECK(kind_of([] { (void)io::parse_csv("id,s1,s2\np1,\"0.1,0.1\"\n__f__,\"0.2,0.2\",\"0.2,0.2\"\n"); }) ==
          ErrorKind::parse_error);
  }
  SUBCASE("missing importance row") {
    CHECK(message_of([] { (void)io::parse_csv("id,s1\np1,\"0.1,0.1\"\n"); }).find("__f__") != std::string::npos);
  }
  SUBCASE("importance row must be last") {
    CHECK(kind_of([] { (void)io::parse_csv("id,s1\n__f__,\"0.2,0.2\"\np1,\"0.1,0.1\"\n"); }) ==
          ErrorKind::parse_error);
  }
  SUBCASE("header must start with id") {
    CHECK(kind_of([] { (void)io::parse_csv("name,s1\np1,\"0.1,0.1\"\n__f__,\"0.2,0.2\"\n"); }) ==
          ErrorKind::parse_error);
  }
  SUBCASE("unterminated quote") {
    CHECK(kind_of([] { (void)io::parse_csv("id,s1\np1,\"0.1,0.1\n__f__,\"0.2,0.2\"\n"); }) ==
          ErrorKind::parse_error);
  }
  SUBCASE("duplicate alternative") {
    CHECK(kind_of([] { (void)io::parse_csv("id,s1\np1,\"0.1,0.1\"\np1,\"0.1,0.1\"\n__f__,\"0.2,0.2\"\n"); }) ==
          ErrorKind::duplicate_id);
  }
}

TEST_CASE("emit_csv writes the canonical form") {
  const auto text = io::emit_csv(fixtures::set1());
  CHECK(text.substr(0, text.find('\n')) == "id,s1,s3,s5,s6");
  CHECK(text.find("p3,\"0.5,0.4\",\"0.9,0.2\",\"0.6,0.4\",\"0.6,0.5\"\n") != std::string::npos);
  CHECK(text.find("__f__,\"0.5,0.4\",\"0.7,0.2\",\"0.3,0.6\",\"0.6,0.3\"\n") != std::string::npos);
}

TEST_CASE("JSON round trip of the second table") {
  const PhiSoftSet y = fixtures::set2();
  const std::string text = io::emit_json(y);
  const PhiSoftSet back = io::parse_json(text);
  CHECK(equals(back, y));
  CHECK(back.universe() == y.universe());
  CHECK((back.membership() == y.membership()).all());
  CHECK((back.nonmembership() == y.nonmembership()).all());
  CHECK(io::emit_json(back) == text);
  CHECK(text.find("\"importance\": {\n        \"m\": 0.1,") != std::string::npos);
}

TEST_CASE("JSON schema errors name the path") {
  CHECK(kind_of([] { (void)io::parse_json("{\"universe\": [\"p1\"], \"parameters\": []}"); }) ==
        ErrorKind::schema_error);
  CHECK(message_of([] { (void)io::parse_json("{\"universe\": [\"p1\"], \"parameters\": []}"); }).find("$.cells") !=
        std::string::npos);
  CHECK(message_of([] {
          (void)io::parse_json(R"({"universe": ["p1"], "parameters": [{"name": "s1", "importance": {"m": "x", "n": 0}}], "cells": []})");
        }).find("$.parameters[0].importance.m") != std::string::npos);
  CHECK(message_of([] { (void)io::parse_json(R"({"universe": [1], "parameters": [], "cells": []})"); })
            .find("$.universe[0]") != std::string::npos);
  CHECK(kind_of([] { (void)io::parse_json("[1,2]"); }) == ErrorKind::schema_error);
  CHECK(kind_of([] { (void)io::parse_json("{not json"); }) == ErrorKind::parse_error);
}

TEST_CASE("JSON with missing cells") {
  CHECK(kind_of([] {
          (void)io::parse_json(
              R"({"universe": ["p1"], "parameters": [{"name": "s1", "importance": {"m": 0.5, "n": 0.4}}], "cells": []})");
        }) == ErrorKind::missing_cell);
}

TEST_CASE("parse_table sniffs the format") {
  const PhiSoftSet y = fixtures::set2();
  CHECK(equals(io::parse_table(io::emit_json(y)), y));
  CHECK(equals(io::parse_table(io::emit_csv(y)), y));
}

TEST_CASE("CSV and JSON agree on random tables") {
  laws::Generator g(99);
  for (int i = 0; i < 200; ++i) {
    const PhiSoftSet s = g.soft_set();
    const PhiSoftSet from_csv = io::parse_csv(io::emit_csv(s));
    const PhiSoftSet from_json = io::parse_json(io::emit_json(from_csv));
    REQUIRE(equals(from_csv, s));
    REQUIRE(equals(from_json, from_csv));
    // Shortest round-trip text keeps every bit.
    REQUIRE((from_json.membership() == s.membership()).all());
    REQUIRE(io::emit_csv(io::parse_csv(io::emit_csv(from_json))) == io::emit_csv(s));
  }
}

TEST_CASE("save and load through files") {
  const auto dir = std::filesystem::temp_directory_path() / "phisoft_io_test";
  std::filesystem::create_directories(dir);
  const PhiSoftSet x = fixtures::set1();
  io::save_table(x, dir / "x.json");
  io::save_table(x, dir / "x.csv");
  CHECK(io::read_file(dir / "x.json").front() == '{');
  CHECK(equals(io::load_table(dir / "x.json"), x));
  CHECK(equals(io::load_table(dir / "x.csv"), x));
  CHECK(kind_of([&] { (void)io::load_table(dir / "missing.csv"); }) == ErrorKind::parse_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report rendering") {
  const DecisionReport r = decide(fixtures::set1(), fixtures::set2());
  const std::string table = io::render_report(r);
  CHECK(table ==
        "id   APFDV m   APFDV n        ES        SF        AF  rank\n"
        "p1    0.5172    0.6436    0.4266   -0.1467    0.6816     3\n"
        "p2    0.3596    0.5273    0.4256   -0.1487    0.4074     4\n"
        "p3    0.5154    0.4359    0.5378    0.0756    0.4557     2\n"
        "p4    0.5553    0.3648    0.5876    0.1753    0.4414     1\n"
        "\n"
        "p4 > p3 > p1 > p2\n"
        "optimal: p4\n");
  CHECK(io::render_report(r) == table);

  const std::string weights = io::render_weights(r.weights);
  CHECK(weights == "0.21001927\n0.12524085\n0.27938343\n0.14065511\n0.24470135\n");

  const std::string json = io::emit_json(r);
  CHECK(json.find("\"ranking\": [\n    \"p4\",\n    \"p3\",\n    \"p1\",\n    \"p2\"\n  ]") != std::string::npos);
  CHECK(json.find("\"combine\": \"eintersect\"") != std::string::npos);
  CHECK(json.find("\"weights\"") != std::string::npos);
  CHECK(json.find("\"measures\"") != std::string::npos);
  // The report's table part parses back to the combined set.
  CHECK(equals(io::parse_json(json), r.combined));
}
