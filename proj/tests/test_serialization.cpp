#include "doctest.h"
#include "test_support.hpp"

#include "json.hpp"

#include <sstream>

using namespace hns;
using namespace hns::testing;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> markdown_cells(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line.substr(1));
  while (std::getline(in, cell, '|')) {
    const auto b = cell.find_first_not_of(' ');
    const auto e = cell.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

TEST_SUITE("serialization") {
  TEST_CASE("rational text") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(to_string(make_rational(3, 1)) == "3");
    CHECK(to_string(make_rational(1, -2)) == "-1/2");
    CHECK(parse_rational("1/2") == half);
    CHECK(parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("1") == 1);
    for (const char* bad : {"2/4", "1/1", "1/0", "0/1", "-0", "+1", " 1", "1/", "/2", "a", "", "01", "1/-2", "1.5"})
      CHECK_THROWS_AS_MESSAGE(parse_rational(bad), ParseError, bad);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("markdown cells") {
    const FiniteHNS g2 = build_quotient_system(2);
    CHECK(markdown_cells(lines_of(serialize(g2, Format::markdown).payload)[2])[1] == "e_1");
    CHECK(format_cell(vec({half, 0, half})) == "1/2(e_1+e_3)");
    CHECK(format_cell(vec({0, 1, 0})) == "e_2");
    CHECK(format_cell(vec({0, 0, 0})) == "0");
    CHECK(format_cell(vec({make_rational(1, 3), 0, make_rational(-2, 3)})) == "1/3*e_1+-2/3*e_3");
    CHECK(format_cell(vec({1, half, 0})) == "e_1+1/2*e_2");
  }

  TEST_CASE("markdown layout") {
    const std::string md = serialize(build_quotient_system(3), Format::markdown).payload;
    CHECK(md ==
          "| e_1 | e_2 | e_3 |\n"
          "| --- | --- | --- |\n"
          "| e_2 | 1/2(e_1+e_3) | 1/2(e_1+e_2) |\n"
          "| e_3 | 1/2(e_1+e_2) | 1/2(e_1+e_2) |\n");
    CHECK(serialize(build_quotient_system(1), Format::markdown).payload == "| e_1 |\n| --- |\n");
  }

  TEST_CASE("markdown matches golden files transcribed from the published tables") {
    for (int m = 2; m <= 6; ++m) {
      const std::string golden = read_file(golden_path("table_dim" + std::to_string(m) + ".md"));
      CHECK_MESSAGE(serialize(build_quotient_system(m), Format::markdown).payload == golden, "M = " << m);
      CHECK(parse_markdown(golden) == build_quotient_system(m));
    }
  }

  TEST_CASE("json layout") {
    const TableDocument doc = serialize(build_quotient_system(3), Format::json);
    CHECK(doc.dimension == 3);
    CHECK(doc.format == Format::json);
    CHECK(doc.payload.back() == '\n');
    const auto j = nlohmann::json::parse(doc.payload);
    CHECK(j["dimension"] == 3);
    CHECK(j["constants"][1][1][0] == "1/2");
    CHECK(j["constants"][1][1][1] == "0");
    CHECK(j["constants"][0][2][2] == "1");
    CHECK(doc.payload.rfind("{\"dimension\":3,\"constants\":", 0) == 0);
  }

  TEST_CASE("csv layout") {
    const std::string csv = serialize(build_quotient_system(4), Format::csv).payload;
    const auto lines = lines_of(csv);
    CHECK(std::find(lines.begin(), lines.end(), "3,3,1,1") != lines.end());
    CHECK(std::find(lines.begin(), lines.end(), "2,2,1,1/2") != lines.end());
    CHECK(lines.front() == "1,1,1,1");
    CHECK(std::is_sorted(lines.begin(), lines.end(), [](const std::string& a, const std::string& b) {
      int ai, aj, ak, bi, bj, bk;
      std::sscanf(a.c_str(), "%d,%d,%d", &ai, &aj, &ak);
      std::sscanf(b.c_str(), "%d,%d,%d", &bi, &bj, &bk);
      return std::tie(ai, aj, ak) < std::tie(bi, bj, bk);
    }));
    CHECK(serialize(build_quotient_system(12), Format::csv).payload.find("10,12,") != std::string::npos);
  }

  TEST_CASE("round trips in every format") {
    for (int m = 1; m <= 12; ++m) {
      const FiniteHNS sys = build_quotient_system(m);
      for (Format f : {Format::markdown, Format::csv, Format::json}) {
        const TableDocument doc = serialize(sys, f);
        CHECK_MESSAGE(parse(doc) == sys, "M = " << m << " " << to_string(f));
      }
      // csv and json carry the same tensor
      CHECK(parse_csv(serialize(sys, Format::csv).payload) == parse_json(serialize(sys, Format::json).payload));
    }

    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
      // arbitrary unital tensors, including negative and non-dyadic entries
      const int m = 1 + static_cast<int>(rng() % 5);
      FiniteHNS sys = build_quotient_system(m);
      for (int s = 0; s < 6 && m > 1; ++s) {
        const int i = 2 + static_cast<int>(rng() % (m - 1)), j = 2 + static_cast<int>(rng() % (m - 1));
        const int k = 1 + static_cast<int>(rng() % m);
        sys = sys.with_constant(basis(i), basis(j), basis(k), rng() % 3 == 0 ? Rational(0) : random_rational(rng));
      }
      for (Format f : {Format::markdown, Format::csv, Format::json}) CHECK(parse(serialize(sys, f)) == sys);
    }
  }

  TEST_CASE("parse_json rejects bad input") {
    const std::string good = serialize(build_quotient_system(2), Format::json).payload;
    CHECK(parse_json(good) == build_quotient_system(2));

    auto with = [&](auto edit) {
      auto j = nlohmann::json::parse(good);
      edit(j);
      return j.dump();
    };
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["constants"][0][0][0] = "0"; })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["constants"][1][1][0] = "2/4"; })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["constants"][1][1][0] = 1; })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["dimension"] = 3; })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["dimension"] = 0; })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["dimension"] = "2"; })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j["constants"][1].erase(1); })), ParseError);
    CHECK_THROWS_AS(parse_json(with([](auto& j) { j.erase("constants"); })), ParseError);
    CHECK_THROWS_AS(parse_json("{not json"), ParseError);
    CHECK_THROWS_AS(parse_json("[]"), ParseError);
  }

  TEST_CASE("parse_csv and parse_markdown reject bad input") {
    CHECK_THROWS_AS(parse_csv(""), ParseError);
    CHECK_THROWS_AS(parse_csv("1,1,1,1\n1,1,1,1\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,1,1,0\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,1,1\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("0,1,1,1\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("1,2,2,1\n"), ParseError);  // e_2 . e_1 missing
    CHECK(parse_csv("1,1,1,1\n") == build_quotient_system(1));

    CHECK_THROWS_AS(parse_markdown("| e_1 |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_2 | e_3 |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_2 | 1/2(e_2+e_1) |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_2 |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| e_2 | e_1 |\n| e_2 | e_1 |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_2 | e_2+e_1 |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_2 | 1*e_1 |\n"), ParseError);
    CHECK_THROWS_AS(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_1 | e_1 |\n"), ParseError);
    CHECK(parse_markdown("| e_1 | e_2 |\n| --- | --- |\n| e_2 | e_1 |\n") == build_quotient_system(2));
  }

  TEST_CASE("document dimension must match the payload") {
    TableDocument doc = serialize(build_quotient_system(3), Format::csv);
    doc.dimension = 4;
    CHECK_THROWS_AS(parse(doc), ParseError);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_FALSE(parse_format("xml").has_value());
  }
}
