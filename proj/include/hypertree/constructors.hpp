#pragma once

#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

// All constructors number fresh vertices in ascending order so the output is
// reproducible byte for byte.

namespace detail {

inline int supertree_edge_count(int n, int k) {
  if (k < 2) throw Error(ErrorCode::BadDimensions, "uniformity must be at least 2");
  if (n < k || (n - 1) % (k - 1) != 0) {
    throw Error(ErrorCode::BadDimensions, "need n >= k and (n-1) divisible by (k-1); got n=" +
                                              std::to_string(n) + ", k=" + std::to_string(k));
  }
  return (n - 1) / (k - 1);
}

}  // namespace detail

/// Vertex 1 is the center; the remaining vertices are cut into consecutive
/// blocks of k-1, each joined with the center.
inline Hypergraph hyperstar(int n, int k) {
  const int m = detail::supertree_edge_count(n, k);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    Edge e{1};
    for (int j = 0; j < k - 1; ++j) e.push_back(2 + i * (k - 1) + j);
    edges.push_back(std::move(e));
  }
  return validate(std::move(edges), n, k);
}

/// Edge i covers vertices 1+i(k-1) .. 1+(i+1)(k-1).
inline Hypergraph loose_path(int n, int k) {
  const int m = detail::supertree_edge_count(n, k);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back(1 + i * (k - 1) + j);
    edges.push_back(std::move(e));
  }
  return validate(std::move(edges), n, k);
}

/// k-th power of the double star S(a,b). Vertices 1 and 2 are the ends of
/// the bridge edge; 1 carries a pendent edges and 2 carries b.
inline Hypergraph double_star(int a, int b, int k) {
  if (a < 0 || b < 0) throw Error(ErrorCode::BadDimensions, "pendent counts must be nonnegative");
  if (k < 2) throw Error(ErrorCode::BadDimensions, "uniformity must be at least 2");
  const int n = (a + b + 1) * (k - 1) + 1;
  int next = 3;
  std::vector<Edge> edges;
  Edge bridge{1, 2};
  for (int j = 0; j < k - 2; ++j) bridge.push_back(next++);
  edges.push_back(std::move(bridge));
  for (int i = 0; i < a + b; ++i) {
    Edge e{i < a ? 1 : 2};
    for (int j = 0; j < k - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return validate(std::move(edges), n, k);
}

/// Each tree edge {u,v}, taken in lexicographic order, becomes
/// {u, v, k-2 fresh vertices}. Tree nodes keep their ids.
inline Hypergraph tree_power(const OrdinaryTree& tree, int k) {
  if (k < 2) throw Error(ErrorCode::BadDimensions, "uniformity must be at least 2");
  if (tree.order() < 2) throw Error(ErrorCode::NotATree, "tree power needs at least two nodes");
  int next = tree.order() + 1;
  std::vector<Edge> edges;
  for (auto [u, v] : tree.links()) {
    Edge e{u, v};
    for (int j = 0; j < k - 2; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return validate(std::move(edges), next - 1, k);
}

inline Hypergraph tree_power(std::span<const int> parents, int k) {
  return tree_power(OrdinaryTree::from_parents(parents), k);
}

namespace detail {

inline void check_overlap(int s, int k) {
  if (k < 2) throw Error(ErrorCode::BadDimensions, "uniformity must be at least 2");
  if (s < 1 || 2 * s > k) {
    throw Error(ErrorCode::BadOverlap, "need 1 <= s <= k/2; got s=" + std::to_string(s) +
                                           ", k=" + std::to_string(k));
  }
}

}  // namespace detail

/// m edges, consecutive ones sharing exactly s vertices.
inline Hypergraph s_path(int m, int s, int k) {
  detail::check_overlap(s, k);
  if (m < 1) throw Error(ErrorCode::BadDimensions, "an s-path needs at least one edge");
  const int step = k - s;
  const int n = m * step + s;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back(1 + i * step + j);
    edges.push_back(std::move(e));
  }
  return validate(std::move(edges), n, k);
}

/// m >= 3 edges around a cycle, consecutive ones (and last with first)
/// sharing exactly s vertices.
inline Hypergraph s_cycle(int m, int s, int k) {
  detail::check_overlap(s, k);
  if (m < 3) throw Error(ErrorCode::BadDimensions, "an s-cycle needs at least three edges");
  const int step = k - s;
  const int n = m * step;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back(1 + (i * step + j) % n);
    edges.push_back(std::move(e));
  }
  return validate(std::move(edges), n, k);
}

/// The two vertex orbits of a hyperstar: the center and everything else.
inline std::vector<std::vector<Vertex>> hyperstar_orbits(int n, int k) {
  detail::supertree_edge_count(n, k);
  std::vector<Vertex> leaves;
  for (Vertex v = 2; v <= n; ++v) leaves.push_back(v);
  if (leaves.empty()) return {{1}};
  return {{1}, std::move(leaves)};
}

/// Blocks {v, n+1-v} of the end-to-end reflection of loose_path(n, k).
inline std::vector<std::vector<Vertex>> loose_path_reflection_orbits(int n, int k) {
  detail::supertree_edge_count(n, k);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 1; v <= (n + 1) / 2; ++v) {
    if (v == n + 1 - v) {
      out.push_back({v});
    } else {
      out.push_back({v, n + 1 - v});
    }
  }
  return out;
}

}  // namespace hypertree
