#pragma once

#include <cctype>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/matrix.hpp"
#include "openbook/seifert.hpp"

namespace openbook {

struct SeifertFile {
  SeifertData data;
  std::string name;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace((unsigned char)c)) return false;
  return true;
}

inline Int parse_int(const std::string& tok, std::size_t line_no, std::size_t col) {
  std::size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (i == tok.size()) throw ParseError(line_no, col, "expected an integer");
  for (; i < tok.size(); ++i)
    if (!std::isdigit((unsigned char)tok[i]))
      throw ParseError(line_no, col + i, "invalid character in integer");
  return Int(tok);
}

}  // namespace detail

// Input document: `n = <int>` on the first significant line, optionally
// `name = <text>`, then the matrix rows as space-separated integers.
// `#` starts a comment; blank lines are ignored. No rows means mu = 0.
inline SeifertFile parse_seifert_stream(std::istream& in) {
  std::string name;
  std::optional<unsigned long> n;
  std::vector<std::vector<Int>> rows;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;

    std::size_t start = 0;
    while (start < line.size() && std::isspace((unsigned char)line[start])) ++start;

    std::size_t eq = line.find('=');
    if (eq != std::string::npos && !rows.empty())
      throw ParseError(line_no, eq + 1, "header field after matrix rows");
    if (eq != std::string::npos) {
      std::size_t key_end = eq;
      while (key_end > start && std::isspace((unsigned char)line[key_end - 1])) --key_end;
      const std::string key = line.substr(start, key_end - start);
      std::size_t val_start = eq + 1;
      while (val_start < line.size() && std::isspace((unsigned char)line[val_start]))
        ++val_start;
      std::size_t val_end = line.size();
      while (val_end > val_start && std::isspace((unsigned char)line[val_end - 1])) --val_end;
      const std::string value = line.substr(val_start, val_end - val_start);

      if (key == "n") {
        if (n) throw ParseError(line_no, start + 1, "duplicate field `n`");
        Int v = detail::parse_int(value, line_no, val_start + 1);
        if (v < 0) throw ParseError(line_no, val_start + 1, "n must be >= 0");
        n = v.get_ui();
      } else if (key == "name") {
        name = value;
      } else {
        throw ParseError(line_no, start + 1, "unknown field `" + key + "`");
      }
      continue;
    }

    if (!n) throw ParseError(line_no, start + 1, "first field must be `n = <int>`");
    std::vector<Int> row;
    std::size_t i = start;
    while (i < line.size()) {
      std::size_t tok_start = i;
      while (i < line.size() && !std::isspace((unsigned char)line[i])) ++i;
      row.push_back(detail::parse_int(line.substr(tok_start, i - tok_start), line_no,
                                      tok_start + 1));
      while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(line_no, start + 1, "matrix row length differs from the first row");
    rows.push_back(std::move(row));
  }

  if (!n) throw ParseError(line_no + 1, 1, "missing field `n = <int>`");
  if (!rows.empty() && rows.size() != rows.front().size())
    throw ParseError(line_no + 1, 1, "matrix is not square");

  IntMatrix l(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) l(i, j) = rows[i][j];
  return {SeifertData(std::move(l), *n), std::move(name)};
}

}  // namespace openbook
