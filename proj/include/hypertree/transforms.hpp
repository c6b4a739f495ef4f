#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

/// Moves edge edges[i] off sources[i] and onto target.
struct EdgeMoveSpec {
  std::vector<EdgeId> edges;
  std::vector<Vertex> sources;
  Vertex target = 0;
};

/// Replaces every e_i by (e_i \ {v_i}) ∪ {u}. Vertex count, edge count and
/// uniformity are preserved; a result with a repeated edge is rejected.
inline Hypergraph move_edges(const Hypergraph& g, const EdgeMoveSpec& spec) {
  if (spec.edges.empty()) throw Error(ErrorCode::InvalidSpec, "no edges to move");
  if (spec.edges.size() != spec.sources.size()) {
    throw Error(ErrorCode::InvalidSpec, "one source vertex per moved edge");
  }
  if (spec.target < 1 || spec.target > g.n()) {
    throw Error(ErrorCode::InvalidSpec, "target vertex " + std::to_string(spec.target) + " out of range");
  }
  std::vector<char> moved(g.m(), 0);
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const EdgeId e = spec.edges[i];
    if (e >= g.m()) throw Error(ErrorCode::InvalidSpec, "edge id " + std::to_string(e) + " out of range");
    if (moved[e]) throw Error(ErrorCode::InvalidSpec, "edge id " + std::to_string(e) + " listed twice");
    moved[e] = 1;
    if (g.contains(e, spec.target)) {
      throw Error(ErrorCode::InvalidSpec, "target " + std::to_string(spec.target) + " already in edge " +
                                              std::to_string(e));
    }
    if (spec.sources[i] < 1 || spec.sources[i] > g.n() || !g.contains(e, spec.sources[i])) {
      throw Error(ErrorCode::InvalidSpec, "source " + std::to_string(spec.sources[i]) + " not in edge " +
                                              std::to_string(e));
    }
  }

  std::vector<Edge> out;
  out.reserve(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!moved[e]) out.push_back(g.edge(e));
  }
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    Edge e = g.edge(spec.edges[i]);
    std::replace(e.begin(), e.end(), spec.sources[i], spec.target);
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
  }
  std::vector<Edge> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::MultipleEdge, "moving would create a repeated edge");
  }
  return validate(std::move(out), g.n(), g.k());
}

/// The edge move that relocates every edge meeting e at a vertex other than u onto u.
inline EdgeMoveSpec release_spec(const Hypergraph& g, EdgeId e, Vertex u) {
  if (!is_linear(g)) throw Error(ErrorCode::NotLinear, "edge release needs a linear hypergraph");
  if (e >= g.m()) throw Error(ErrorCode::InvalidSpec, "edge id " + std::to_string(e) + " out of range");
  if (u < 1 || u > g.n() || !g.contains(e, u)) {
    throw Error(ErrorCode::InvalidSpec, "vertex " + std::to_string(u) + " not in edge " + std::to_string(e));
  }
  if (is_pendent_edge(g, e)) {
    throw Error(ErrorCode::PendentEdge, "edge " + std::to_string(e) + " is pendent");
  }
  EdgeMoveSpec spec;
  spec.target = u;
  for (Vertex w : g.edge(e)) {
    if (w == u) continue;
    for (EdgeId f : g.incident(w)) {
      if (f == e || g.contains(f, u)) continue;
      spec.edges.push_back(f);
      spec.sources.push_back(w);
    }
  }
  return spec;
}

inline Hypergraph edge_release(const Hypergraph& g, EdgeId e, Vertex u) {
  return move_edges(g, release_spec(g, e, u));
}

/// Releases e at the vertex of e with the largest Perron component (smallest
/// id on ties).
inline Hypergraph edge_release_best(const Hypergraph& g, EdgeId e, TensorKind kind,
                                    const SpectralOptions& opts = {}) {
  if (e >= g.m()) throw Error(ErrorCode::InvalidSpec, "edge id " + std::to_string(e) + " out of range");
  const SpectralResult r = spectral_radius(kind, g, opts);
  Vertex best = g.edge(e).front();
  for (Vertex v : g.edge(e)) {
    if (r.eigvec[v - 1] > r.eigvec[best - 1]) best = v;
  }
  return edge_release(g, e, best);
}

/// A pendent path (v0, e1, v1, ..., ep, vp) starting at `vertices[0]`.
/// vertices has length() + 1 entries.
struct PendentPath {
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(edges.size()); }
  Vertex end() const { return vertices.back(); }
};

namespace detail {

/// Walks away from `start` along `first`. Returns false if the walk leaves
/// the degree pattern of a pendent path.
inline bool walk_pendent_path(const Hypergraph& g, Vertex start, EdgeId first, PendentPath& out) {
  out = PendentPath{{}, {start}};
  Vertex prev = start;
  EdgeId e = first;
  while (true) {
    Vertex next = 0;
    Vertex leaf = 0;
    for (Vertex w : g.edge(e)) {
      if (w == prev) continue;
      const int d = g.degree(w);
      if (d == 1) {
        if (leaf == 0) leaf = w;
      } else if (d == 2 && next == 0) {
        next = w;
      } else {
        return false;
      }
    }
    out.edges.push_back(e);
    if (next == 0) {
      out.vertices.push_back(leaf);
      return true;
    }
    out.vertices.push_back(next);
    const auto inc = g.incident(next);
    const EdgeId following = inc[0] == e ? inc[1] : inc[0];
    if (following == first || g.contains(following, start)) return false;
    prev = next;
    e = following;
    if (out.edges.size() > g.m()) return false;
  }
}

inline bool is_valid_pendent_path(const Hypergraph& g, const PendentPath& p) {
  if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return false;
  for (Vertex v : p.vertices) {
    if (v < 1 || v > g.n()) return false;
  }
  for (EdgeId e : p.edges) {
    if (e >= g.m()) return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    const Vertex a = p.vertices[i];
    const Vertex b = p.vertices[i + 1];
    if (a == b || !g.contains(e, a) || !g.contains(e, b)) return false;
    for (Vertex w : g.edge(e)) {
      if (w != a && w != b && g.degree(w) != 1) return false;
    }
    const bool last = i + 1 == p.edges.size();
    if (g.degree(b) != (last ? 1 : 2)) return false;
  }
  return true;
}

}  // namespace detail

/// Pendent paths starting at v, one per incident edge that begins one,
/// longest first (then by first edge id). The end vertex is the smallest
/// degree-one vertex of the last edge.
inline std::vector<PendentPath> find_pendent_paths(const Hypergraph& g, Vertex v) {
  if (v < 1 || v > g.n()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
  std::vector<PendentPath> out;
  for (EdgeId e : g.incident(v)) {
    PendentPath p;
    if (detail::walk_pendent_path(g, v, e, p)) out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PendentPath& a, const PendentPath& b) { return a.length() > b.length(); });
  return out;
}

/// G(v;p,q) -> G(v;p+q,0): the first edge of `second` is moved from v to the
/// far end of `first`. v must carry at least one edge outside both paths;
/// otherwise the two sides are isomorphic.
inline Hypergraph total_graft(const Hypergraph& g, Vertex v, const PendentPath& first,
                              const PendentPath& second) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotPendentPaths, why); };
  if (v < 1 || v > g.n()) fail("vertex " + std::to_string(v) + " out of range");
  for (const PendentPath* p : {&first, &second}) {
    if (p->edges.empty()) fail("both paths need length at least 1");
    if (p->vertices.front() != v) fail("paths must start at vertex " + std::to_string(v));
    if (!detail::is_valid_pendent_path(g, *p)) fail("supplied path is not a pendent path");
  }
  std::set<Vertex> seen;
  for (EdgeId e : first.edges) {
    for (Vertex w : g.edge(e)) seen.insert(w);
  }
  for (EdgeId e : second.edges) {
    for (Vertex w : g.edge(e)) {
      if (w != v && seen.count(w)) fail("paths share a vertex other than the start");
    }
  }
  if (g.degree(v) < 3) fail("vertex " + std::to_string(v) + " carries no edge outside the two paths");
  return move_edges(g, EdgeMoveSpec{{second.edges.front()}, {v}, first.end()});
}

/// Picks the first discovered pendent paths of lengths p and q at v.
inline Hypergraph total_graft(const Hypergraph& g, Vertex v, int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::NotPendentPaths, "both path lengths must be at least 1");
  const auto paths = find_pendent_paths(g, v);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].length() != p) continue;
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (j != i && paths[j].length() == q) return total_graft(g, v, paths[i], paths[j]);
    }
  }
  throw Error(ErrorCode::NotPendentPaths, "no pendent paths of lengths " + std::to_string(p) + " and " +
                                              std::to_string(q) + " at vertex " + std::to_string(v));
}

/// One total graft on an ordinary tree: the link at -> second_start is
/// replaced by a link from the far end of the pendent path at -> first_start.
struct TreeGraft {
  int at = 0;
  int first_start = 0;
  int second_start = 0;
  int p = 0;
  int q = 0;

  friend bool operator==(const TreeGraft&, const TreeGraft&) = default;
};

namespace detail {

/// Nodes of the branch leaving `at` through `start`, if that branch is a
/// pendent path; empty otherwise.
inline std::vector<int> tree_pendent_branch(const OrdinaryTree& t, int at, int start) {
  std::vector<int> nodes{start};
  int prev = at;
  int cur = start;
  while (true) {
    const auto& nb = t.neighbors(cur);
    if (nb.size() == 1) return nodes;
    if (nb.size() != 2) return {};
    const int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    nodes.push_back(cur);
  }
}

}  // namespace detail

inline OrdinaryTree apply_tree_graft(const OrdinaryTree& t, const TreeGraft& g) {
  const auto first = detail::tree_pendent_branch(t, g.at, g.first_start);
  const auto second = detail::tree_pendent_branch(t, g.at, g.second_start);
  if (first.empty() || second.empty() || g.first_start == g.second_start) {
    throw Error(ErrorCode::NotPendentPaths, "graft needs two distinct pendent paths at node " +
                                                std::to_string(g.at));
  }
  if (t.degree(g.at) < 3) {
    throw Error(ErrorCode::NotPendentPaths, "node " + std::to_string(g.at) + " has degree below 3");
  }
  std::vector<OrdinaryTree::Link> links;
  for (auto [a, b] : t.links()) {
    if ((a == g.at && b == g.second_start) || (b == g.at && a == g.second_start)) continue;
    links.emplace_back(a, b);
  }
  links.emplace_back(first.back(), g.second_start);
  return OrdinaryTree::from_links(t.order(), std::move(links));
}

/// Grafts reducing t to a path: repeatedly take the degree >= 3 node u
/// furthest from node 1 (smallest id on ties) and merge its pendent paths
/// with d(u) - 2 grafts. Empty iff t is already a path.
inline std::vector<TreeGraft> graft_to_path(const OrdinaryTree& t) {
  std::vector<TreeGraft> seq;
  OrdinaryTree cur = t;
  while (!cur.is_path()) {
    const auto dist = cur.distances_from(1);
    int u = 0;
    for (int v = 1; v <= cur.order(); ++v) {
      if (cur.degree(v) >= 3 && (u == 0 || dist[v - 1] > dist[u - 1])) u = v;
    }
    std::vector<int> starts;
    for (int w : cur.neighbors(u)) {
      if (dist[w - 1] < dist[u - 1]) continue;  // branch toward the root
      starts.push_back(w);
    }
    if (u == 1) starts = cur.neighbors(u);
    const int rounds = cur.degree(u) - 2;
    for (int r = 0; r < rounds; ++r) {
      TreeGraft g;
      g.at = u;
      g.first_start = starts[0];
      g.second_start = starts[1];
      g.p = static_cast<int>(detail::tree_pendent_branch(cur, u, g.first_start).size());
      g.q = static_cast<int>(detail::tree_pendent_branch(cur, u, g.second_start).size());
      cur = apply_tree_graft(cur, g);
      seq.push_back(g);
      starts.erase(starts.begin() + 1);
    }
  }
  return seq;
}

}  // namespace hypertree
