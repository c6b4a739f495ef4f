#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

// Text format:
//   line 1      k n m
//   m lines     k space-separated 1-based vertex ids
// Lines whose first non-blank character is '#' are comments; blank lines are
// ignored. Edges are re-sorted on read, so a round trip preserves the edge set
// but not the original line order.

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

inline Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!detail::next_content_line(in, line, line_no)) {
    throw Error(ErrorCode::ParseError, "missing 'k n m' header");
  }
  const auto header = detail::parse_ints(line, line_no);
  if (header.size() != 3) {
    throw Error(ErrorCode::ParseError, "header must hold exactly three integers 'k n m'");
  }
  const long long k = header[0], n = header[1], m = header[2];
  if (k < 2 || n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000) {
    throw Error(ErrorCode::ParseError, "header values out of range");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long j = 0; j < m; ++j) {
    if (!detail::next_content_line(in, line, line_no)) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(j));
    }
    const auto ids = detail::parse_ints(line, line_no);
    Edge e;
    for (long long v : ids) {
      if (v < 1 || v > n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " + std::to_string(v));
      }
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
  }
  if (detail::next_content_line(in, line, line_no)) {
    throw Error(ErrorCode::ParseError, "trailing content at line " + std::to_string(line_no));
  }
  return validate(std::move(edges), static_cast<int>(n), static_cast<int>(k));
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

inline Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_hypergraph(in);
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.k() << ' ' << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

inline std::string format_hypergraph(const Hypergraph& g) {
  std::ostringstream out;
  write_hypergraph(out, g);
  return out.str();
}

}  // namespace hypertree
