#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "subq/errors.hpp"
#include "subq/rings/matrix.hpp"

namespace subq::rings {

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits `s` at commas that are not nested inside brackets.
inline std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '(') ++depth;
    else if (c == ']' || c == ')') --depth;
    else if (c == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

inline std::size_t parse_count(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("expected a dimension");
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad dimension '" + std::string(s) + "'");
    v = v * 10 + std::size_t(c - '0');
  }
  return v;
}
}  // namespace detail

/// Parses the matrix literal syntax produced by `format`.
template <class Ring>
Matrix<Ring> parse_matrix(const Ring& ring, std::string_view text) {
  using detail::trim;
  text = trim(text);
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    auto dims = text.substr(0, colon);
    auto body = trim(text.substr(colon + 1));
    auto x = dims.find('x');
    if (x == std::string_view::npos || body != "[]") throw ParseError("bad empty-matrix literal '" + std::string(text) + "'");
    std::size_t r = detail::parse_count(dims.substr(0, x));
    std::size_t c = detail::parse_count(dims.substr(x + 1));
    if (r != 0 && c != 0) throw ParseError("the RxC:[] form is reserved for empty matrices");
    return Matrix<Ring>(ring, r, c);
  }
  if (text.size() < 4 || text.front() != '[' || text.back() != ']')
    throw ParseError("bad matrix literal '" + std::string(text) + "'");
  auto inner = text.substr(1, text.size() - 2);
  std::vector<typename Ring::Element> entries;
  std::size_t rows = 0, cols = 0;
  for (auto row : detail::split_top_level(inner)) {
    row = trim(row);
    if (row.size() < 2 || row.front() != '[' || row.back() != ']')
      throw ParseError("bad matrix row '" + std::string(row) + "'");
    auto cells = detail::split_top_level(row.substr(1, row.size() - 2));
    if (rows == 0) cols = cells.size();
    else if (cells.size() != cols) throw ParseError("ragged matrix literal '" + std::string(text) + "'");
    for (auto cell : cells) entries.push_back(ring.parse(trim(cell)));
    ++rows;
  }
  return Matrix<Ring>(ring, rows, cols, std::move(entries));
}

}  // namespace subq::rings
