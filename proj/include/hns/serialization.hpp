#ifndef HNS_SERIALIZATION_HPP
#define HNS_SERIALIZATION_HPP

#include "hns/finite_system.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hns {

enum class Format { markdown, csv, json };

std::optional<Format> parse_format(std::string_view name);
std::string_view to_string(Format format);

struct TableDocument {
  int dimension;
  Format format;
  std::string payload;
};

/// Renders a multiplication table.
///
/// markdown: one pipe-delimited row per e_i, cell j holding e_i . e_j; the
///   first row doubles as the header since it is the unit row. Cells are
///   "e_k", "1/2(e_a+e_b)" with a < b, "0", or for any other row the
///   general form "c*e_k" terms joined by '+', coefficient omitted when 1.
/// csv: "i,j,k,value" for every nonzero C[i][j][k], ascending (i, j, k).
/// json: {"dimension": M, "constants": M x M x M array of rational strings},
///   constants[i][j][k] being C[i+1][j+1][k+1].
/// Every payload ends with a newline.
TableDocument serialize(const FiniteHNS& sys, Format format);

/// Renders a single table cell (the markdown cell grammar above).
std::string format_cell(const RationalVector& row);

/// Inverse of the corresponding serialize branch. All throw ParseError on
/// malformed input, including a tensor in which e_1 is not the unit.
FiniteHNS parse_json(std::string_view text);
FiniteHNS parse_csv(std::string_view text);
FiniteHNS parse_markdown(std::string_view text);
FiniteHNS parse(const TableDocument& doc);

}  // namespace hns

#endif  // HNS_SERIALIZATION_HPP
