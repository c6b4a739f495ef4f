#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "hypertree/error.hpp"

namespace hypertree {

/// Vertex ids are 1-based: a hypergraph on n vertices uses 1..n.
using Vertex = int;
/// Edge ids are 0-based positions into Hypergraph::edges().
using EdgeId = std::size_t;
using Edge = std::vector<Vertex>;

/// A simple k-uniform hypergraph.
///
/// Immutable once built. Each edge is stored with its vertices in ascending
/// order and the edge list itself is kept in lexicographic order, so two
/// hypergraphs with the same edge set compare equal and edge ids are
/// reproducible.
class Hypergraph {
 public:
  Hypergraph() = default;

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Ids of the edges containing v.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(index(v)); }
  int degree(Vertex v) const { return static_cast<int>(incidence_.at(index(v)).size()); }

  std::vector<int> degrees() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = static_cast<int>(incidence_[i].size());
    return out;
  }

  int max_degree() const {
    int best = 0;
    for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
    return best;
  }

  bool contains(EdgeId e, Vertex v) const {
    const Edge& ed = edges_.at(e);
    return std::binary_search(ed.begin(), ed.end(), v);
  }

  /// Returns the image under the permutation perm, where perm[v-1] is the new id of v.
  Hypergraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Hypergraph validate(std::vector<Edge> raw_edges, int n, int k);

  std::size_t index(Vertex v) const {
    if (v < 1 || v > n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    return static_cast<std::size_t>(v - 1);
  }

  int k_ = 2;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Builds a Hypergraph on vertices 1..n with uniformity k, checking every
/// invariant. Duplicated edges are an error, never merged.
inline Hypergraph validate(std::vector<Edge> raw_edges, int n, int k) {
  if (k < 2) throw Error(ErrorCode::BadDimensions, "uniformity must be at least 2");
  if (n < 0) throw Error(ErrorCode::BadDimensions, "negative vertex count");
  for (std::size_t j = 0; j < raw_edges.size(); ++j) {
    Edge& e = raw_edges[j];
    if (static_cast<int>(e.size()) != k) {
      throw Error(ErrorCode::NonUniform, "edge " + std::to_string(j) + " has " +
                                             std::to_string(e.size()) + " vertices, expected " +
                                             std::to_string(k));
    }
    for (Vertex v : e) {
      if (v < 1 || v > n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::RepeatedVertexInEdge, "edge " + std::to_string(j));
    }
  }
  std::sort(raw_edges.begin(), raw_edges.end());
  if (std::adjacent_find(raw_edges.begin(), raw_edges.end()) != raw_edges.end()) {
    throw Error(ErrorCode::DuplicateEdge, "hypergraph must be simple");
  }

  Hypergraph g;
  g.k_ = k;
  g.n_ = n;
  g.edges_ = std::move(raw_edges);
  g.incidence_.assign(n, {});
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    for (Vertex v : g.edges_[e]) g.incidence_[v - 1].push_back(e);
  }
  return g;
}

/// Same as above with k taken from the first edge.
inline Hypergraph validate(std::vector<Edge> raw_edges, int n) {
  if (raw_edges.empty()) {
    throw Error(ErrorCode::BadDimensions, "cannot infer uniformity from an empty edge list");
  }
  const int k = static_cast<int>(raw_edges.front().size());
  return validate(std::move(raw_edges), n, k);
}

inline Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from n");
  }
  std::vector<char> seen(n_, 0);
  for (Vertex v : perm) {
    if (v < 1 || v > n_ || seen[v - 1]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[v - 1] = 1;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    Edge image;
    image.reserve(e.size());
    for (Vertex v : e) image.push_back(perm[v - 1]);
    out.push_back(std::move(image));
  }
  return validate(std::move(out), n_, k_);
}

/// Breadth-first search alternating vertices and edges.
inline bool is_connected(const Hypergraph& g) {
  const int n = g.n();
  if (n == 0) return false;
  std::vector<char> seen_v(n, 0), seen_e(g.m(), 0);
  std::queue<Vertex> frontier;
  frontier.push(1);
  seen_v[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (EdgeId e : g.incident(v)) {
      if (seen_e[e]) continue;
      seen_e[e] = 1;
      for (Vertex w : g.edge(e)) {
        if (!seen_v[w - 1]) {
          seen_v[w - 1] = 1;
          ++reached;
          frontier.push(w);
        }
      }
    }
  }
  return reached == n;
}

/// Connected and acyclic. For a connected k-uniform hypergraph acyclicity is
/// equivalent to m(k-1) = n-1.
inline bool is_supertree(const Hypergraph& g) {
  return is_connected(g) &&
         static_cast<long long>(g.m()) * (g.k() - 1) == static_cast<long long>(g.n()) - 1;
}

/// Every pair of distinct edges shares at most one vertex.
inline bool is_linear(const Hypergraph& g) {
  // Two edges sharing two vertices meet at some vertex v, so scanning the
  // edge pairs through each vertex is enough.
  for (Vertex v = 1; v <= g.n(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const Edge& ea = g.edge(inc[a]);
        const Edge& eb = g.edge(inc[b]);
        std::size_t common = 0;
        auto ia = ea.begin();
        auto ib = eb.begin();
        while (ia != ea.end() && ib != eb.end()) {
          if (*ia < *ib) {
            ++ia;
          } else if (*ib < *ia) {
            ++ib;
          } else {
            ++common;
            ++ia;
            ++ib;
          }
        }
        if (common > 1) return false;
      }
    }
  }
  return true;
}

inline bool is_regular(const Hypergraph& g) {
  if (g.n() == 0) return true;
  const int d = g.degree(1);
  for (Vertex v = 2; v <= g.n(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

/// An edge is pendent when at least k-1 of its vertices have degree one.
/// A lone edge has k such vertices and counts as pendent.
inline bool is_pendent_edge(const Hypergraph& g, EdgeId e) {
  int ones = 0;
  for (Vertex v : g.edge(e)) ones += g.degree(v) == 1 ? 1 : 0;
  return ones >= g.k() - 1;
}

inline std::vector<EdgeId> pendent_edges(const Hypergraph& g) {
  if (!is_linear(g)) throw Error(ErrorCode::NotLinear, "pendent edges need a linear hypergraph");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (is_pendent_edge(g, e)) out.push_back(e);
  }
  return out;
}

/// Row-major dense real matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// The n x m 0/1 vertex-edge incidence matrix, held as one vertex list per column.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const Hypergraph& g) : rows_(g.n()), columns_(g.edges()) {}

  std::size_t rows() const noexcept { return static_cast<std::size_t>(rows_); }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<Edge>& columns() const noexcept { return columns_; }

  /// r_ij with 1-based vertex i and 0-based edge j.
  int entry(Vertex i, EdgeId j) const {
    const Edge& c = columns_.at(j);
    return std::binary_search(c.begin(), c.end(), i) ? 1 : 0;
  }

  std::vector<int> row_sums() const {
    std::vector<int> out(rows_, 0);
    for (const Edge& c : columns_) {
      for (Vertex v : c) ++out[v - 1];
    }
    return out;
  }

  std::vector<int> col_sums() const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const Edge& c : columns_) out.push_back(static_cast<int>(c.size()));
    return out;
  }

  /// R^T R (m x m): entry (a,b) = |e_a ∩ e_b|.
  DenseMatrix edge_gram() const {
    const std::size_t m = columns_.size();
    DenseMatrix out(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<Vertex> common;
        std::set_intersection(columns_[a].begin(), columns_[a].end(), columns_[b].begin(),
                              columns_[b].end(), std::back_inserter(common));
        out(a, b) = static_cast<double>(common.size());
      }
    }
    return out;
  }

  /// R R^T (n x n): entry (i,j) = number of edges containing both i and j.
  DenseMatrix vertex_gram() const {
    DenseMatrix out(rows(), rows());
    for (const Edge& c : columns_) {
      for (Vertex i : c) {
        for (Vertex j : c) out(i - 1, j - 1) += 1.0;
      }
    }
    return out;
  }

 private:
  int rows_;
  std::vector<Edge> columns_;
};

inline IncidenceMatrix incidence_matrix(const Hypergraph& g) { return IncidenceMatrix(g); }

}  // namespace hypertree
