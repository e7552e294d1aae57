#include "hns/serialization.hpp"

#include "hns/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>
#include <vector>

namespace hns {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::markdown: return "markdown";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "unknown";
}

namespace {

using Slices = std::vector<RationalMatrix>;

Slices zero_slices(int m) { return Slices(m, RationalMatrix::Zero(m, m)); }

FiniteHNS assemble(Slices slices, const char* format) {
  try {
    return FiniteHNS(std::move(slices));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(format) + ": " + e.what());
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_label(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 1 || text.front() == '0')
    throw ParseError(std::string(what) + ": bad basis label \"" + std::string(text) + "\"");
  return value;
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::string line = "|";
  for (const auto& c : cells) line += " " + c + " |";
  return line + "\n";
}

// --- markdown ---------------------------------------------------------------

RationalVector parse_cell(std::string_view cell, int m) {
  static const std::regex halves(R"(1/2\(e_([1-9][0-9]*)\+e_([1-9][0-9]*)\))");
  static const std::regex term(R"((?:(-?[0-9]+(?:/[0-9]+)?)\*)?e_([1-9][0-9]*))");
  const std::string text(cell);
  RationalVector row = RationalVector::Zero(m);
  auto slot = [&](const std::string& label) -> Rational& {
    const int k = parse_label(label, "markdown");
    if (k > m) throw ParseError("markdown: e_" + label + " outside 1.." + std::to_string(m));
    return row(k - 1);
  };

  if (text == "0") return row;
  std::smatch match;
  if (std::regex_match(text, match, halves)) {
    const int a = parse_label(match[1].str(), "markdown");
    const int b = parse_label(match[2].str(), "markdown");
    if (a >= b) throw ParseError("markdown: cell \"" + text + "\" must list e_a before e_b, a < b");
    slot(match[1].str()) = Rational(1, 2);
    slot(match[2].str()) = Rational(1, 2);
    return row;
  }

  int previous = 0;
  std::string_view rest = cell;
  while (true) {
    const auto plus = rest.find('+');
    const std::string piece(rest.substr(0, plus));
    if (!std::regex_match(piece, match, term))
      throw ParseError("markdown: unrecognised cell \"" + text + "\"");
    const int k = parse_label(match[2].str(), "markdown");
    if (k <= previous) throw ParseError("markdown: terms of \"" + text + "\" are not ascending");
    previous = k;
    Rational coeff(1);
    if (match[1].matched) {
      coeff = parse_rational(match[1].str());
      if (coeff == 0 || coeff == 1)
        throw ParseError("markdown: redundant coefficient in \"" + text + "\"");
    }
    slot(match[2].str()) = coeff;
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return row;
}

std::string render_markdown(const FiniteHNS& sys) {
  const int m = sys.dimension();
  std::string out;
  for (int i = 1; i <= m; ++i) {
    std::vector<std::string> cells;
    for (int j = 1; j <= m; ++j) cells.push_back(format_cell(sys.product(basis(i), basis(j))));
    out += markdown_row(cells);
    if (i == 1) out += markdown_row(std::vector<std::string>(m, "---"));
  }
  return out;
}

std::vector<std::string_view> split_markdown_row(std::string_view line) {
  line = trim(line);
  if (line.size() < 2 || line.front() != '|' || line.back() != '|')
    throw ParseError("markdown: row \"" + std::string(line) + "\" is not pipe-delimited");
  line = line.substr(1, line.size() - 2);
  std::vector<std::string_view> cells;
  while (true) {
    const auto bar = line.find('|');
    cells.push_back(trim(line.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    line.remove_prefix(bar + 1);
  }
  return cells;
}

// --- csv --------------------------------------------------------------------

std::string render_csv(const FiniteHNS& sys) {
  const int m = sys.dimension();
  std::string out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        const Rational& c = sys.constant(basis(i), basis(j), basis(k));
        if (c == 0) continue;
        out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
               to_string(c) + "\n";
      }
  return out;
}

// --- json -------------------------------------------------------------------

std::string render_json(const FiniteHNS& sys) {
  const int m = sys.dimension();
  nlohmann::ordered_json constants = nlohmann::ordered_json::array();
  for (int i = 1; i <= m; ++i) {
    auto plane = nlohmann::ordered_json::array();
    for (int j = 1; j <= m; ++j) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 1; k <= m; ++k) row.push_back(to_string(sys.constant(basis(i), basis(j), basis(k))));
      plane.push_back(std::move(row));
    }
    constants.push_back(std::move(plane));
  }
  nlohmann::ordered_json doc;
  doc["dimension"] = m;
  doc["constants"] = std::move(constants);
  return doc.dump() + "\n";
}

}  // namespace

std::string format_cell(const RationalVector& row) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < row.size(); ++k)
    if (row(k) != 0) support.push_back(k);
  if (support.empty()) return "0";
  const Rational half(1, 2);
  if (support.size() == 2 && row(support[0]) == half && row(support[1]) == half)
    return "1/2(e_" + std::to_string(support[0] + 1) + "+e_" + std::to_string(support[1] + 1) + ")";
  std::string out;
  for (Eigen::Index k : support) {
    if (!out.empty()) out += '+';
    if (row(k) != 1) out += to_string(row(k)) + "*";
    out += "e_" + std::to_string(k + 1);
  }
  return out;
}

TableDocument serialize(const FiniteHNS& sys, Format format) {
  switch (format) {
    case Format::markdown: return {sys.dimension(), format, render_markdown(sys)};
    case Format::csv: return {sys.dimension(), format, render_csv(sys)};
    case Format::json: return {sys.dimension(), format, render_json(sys)};
  }
  throw PreconditionError("serialize: unknown format");
}

FiniteHNS parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("constants"))
    throw ParseError("json: expected an object with \"dimension\" and \"constants\"");
  const auto& dim = doc["dimension"];
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 4096)
    throw ParseError("json: \"dimension\" must be a positive integer");
  const int m = dim.get<int>();

  auto require_array = [m](const nlohmann::json& node, const std::string& where) {
    if (!node.is_array() || static_cast<int>(node.size()) != m)
      throw ParseError("json: " + where + " must be an array of length " + std::to_string(m));
  };
  const auto& constants = doc["constants"];
  require_array(constants, "constants");
  Slices slices = zero_slices(m);
  for (int i = 0; i < m; ++i) {
    const std::string at_i = "constants[" + std::to_string(i) + "]";
    require_array(constants[i], at_i);
    for (int j = 0; j < m; ++j) {
      const std::string at_ij = at_i + "[" + std::to_string(j) + "]";
      require_array(constants[i][j], at_ij);
      for (int k = 0; k < m; ++k) {
        const auto& cell = constants[i][j][k];
        const std::string where = at_ij + "[" + std::to_string(k) + "]";
        if (!cell.is_string()) throw ParseError("json: " + where + " must be a rational string");
        try {
          slices[i](k, j) = parse_rational(cell.get<std::string>());
        } catch (const ParseError& e) {
          throw ParseError("json: " + where + ": " + e.what());
        }
      }
    }
  }
  return assemble(std::move(slices), "json");
}

FiniteHNS parse_csv(std::string_view text) {
  static const std::regex line_re(R"(([0-9]+),([0-9]+),([0-9]+),([^,]+))");
  std::map<std::tuple<int, int, int>, Rational> entries;
  int m = 0;
  for (std::string_view raw : split_lines(text)) {
    const std::string line(trim(raw));
    std::smatch match;
    if (!std::regex_match(line, match, line_re))
      throw ParseError("csv: malformed line \"" + line + "\"");
    const int i = parse_label(match[1].str(), "csv");
    const int j = parse_label(match[2].str(), "csv");
    const int k = parse_label(match[3].str(), "csv");
    const Rational value = parse_rational(match[4].str());
    if (value == 0) throw ParseError("csv: explicit zero in line \"" + line + "\"");
    if (!entries.emplace(std::tuple{i, j, k}, value).second)
      throw ParseError("csv: duplicate entry \"" + line + "\"");
    m = std::max({m, i, j, k});
  }
  if (m == 0) throw ParseError("csv: empty table");
  Slices slices = zero_slices(m);
  for (const auto& [key, value] : entries) {
    const auto [i, j, k] = key;
    slices[i - 1](k - 1, j - 1) = value;
  }
  return assemble(std::move(slices), "csv");
}

FiniteHNS parse_markdown(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) throw ParseError("markdown: need a unit row and a separator row");
  const auto first = split_markdown_row(lines[0]);
  const int m = static_cast<int>(first.size());
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError("markdown: expected " + std::to_string(m) + " rows plus a separator");
  for (auto cell : split_markdown_row(lines[1]))
    if (cell.size() < 3 || cell.find_first_not_of("-:") != std::string_view::npos)
      throw ParseError("markdown: second line must be the separator row");

  Slices slices = zero_slices(m);
  for (int i = 0; i < m; ++i) {
    const auto cells = split_markdown_row(lines[i == 0 ? 0 : i + 1]);
    if (static_cast<int>(cells.size()) != m)
      throw ParseError("markdown: row " + std::to_string(i + 1) + " has " +
                       std::to_string(cells.size()) + " cells, expected " + std::to_string(m));
    for (int j = 0; j < m; ++j) slices[i].col(j) = parse_cell(cells[j], m);
  }
  return assemble(std::move(slices), "markdown");
}

FiniteHNS parse(const TableDocument& doc) {
  FiniteHNS sys = [&] {
    switch (doc.format) {
      case Format::markdown: return parse_markdown(doc.payload);
      case Format::csv: return parse_csv(doc.payload);
      case Format::json: return parse_json(doc.payload);
    }
    throw ParseError("unknown format");
  }();
  if (sys.dimension() != doc.dimension)
    throw ParseError("document declares dimension " + std::to_string(doc.dimension) +
                     " but its payload has dimension " + std::to_string(sys.dimension()));
  return sys;
}

}  // namespace hns
