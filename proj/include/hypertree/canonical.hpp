#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

/// Lexicographically smallest sorted edge list over the relabelings reached
/// by the search below. Two hypergraphs are isomorphic iff their canonical
/// forms are equal.
struct CanonicalForm {
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

/// Individualization-refinement search for the canonical labeling.
///
/// Colors are refined on the vertex/edge incidence structure until stable.
/// Cell splitting only uses sorted signatures, so the procedure commutes with
/// relabeling. Vertices with identical incident-edge sets are twins; a
/// transposition of twins is an automorphism fixing the current coloring, so
/// only one twin per class is individualized at each node.
class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& g) : g_(g), twin_class_(g.n()) {
    std::vector<std::pair<std::vector<EdgeId>, Vertex>> keyed;
    for (Vertex v = 1; v <= g.n(); ++v) {
      auto inc = g.incident(v);
      keyed.emplace_back(std::vector<EdgeId>(inc.begin(), inc.end()), v);
    }
    std::sort(keyed.begin(), keyed.end());
    int cls = -1;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) ++cls;
      twin_class_[keyed[i].second - 1] = cls;
    }
  }

  CanonicalForm run() {
    std::vector<int> color(g_.n(), 0);
    search(color);
    return CanonicalForm{g_.k(), g_.n(), best_};
  }

  /// Labeling that produced the canonical form: perm[v-1] is the new id of v.
  const std::vector<Vertex>& labeling() const { return best_perm_; }

 private:
  template <class T>
  static std::vector<int> rank(const std::vector<T>& sigs) {
    std::vector<T> uniq = sigs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[i]) - uniq.begin());
    }
    return out;
  }

  static int count_classes(const std::vector<int>& color) {
    std::vector<int> c = color;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<int>& color) const {
    int classes = count_classes(color);
    while (true) {
      std::vector<std::vector<int>> edge_sig(g_.m());
      for (EdgeId e = 0; e < g_.m(); ++e) {
        for (Vertex v : g_.edge(e)) edge_sig[e].push_back(color[v - 1]);
        std::sort(edge_sig[e].begin(), edge_sig[e].end());
      }
      const auto edge_color = rank(edge_sig);
      std::vector<std::pair<int, std::vector<int>>> vertex_sig(g_.n());
      for (Vertex v = 1; v <= g_.n(); ++v) {
        auto& sig = vertex_sig[v - 1];
        sig.first = color[v - 1];
        for (EdgeId e : g_.incident(v)) sig.second.push_back(edge_color[e]);
        std::sort(sig.second.begin(), sig.second.end());
      }
      color = rank(vertex_sig);
      const int now = count_classes(color);
      if (now == classes) return;
      classes = now;
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    const int n = g_.n();

    // Target cell: the smallest non-singleton cell, ties to the lowest color.
    std::vector<int> cell_size(n, 0);
    for (int c : color) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }
    if (target < 0) {
      leaf(color);
      return;
    }

    std::vector<int> tried;
    for (Vertex v = 1; v <= n; ++v) {
      if (color[v - 1] != target) continue;
      const int cls = twin_class_[v - 1];
      if (std::find(tried.begin(), tried.end(), cls) != tried.end()) continue;
      tried.push_back(cls);
      std::vector<int> child(n);
      for (Vertex w = 1; w <= n; ++w) {
        const int c = color[w - 1];
        child[w - 1] = 2 * c + ((c == target && w != v) ? 1 : 0);
      }
      search(std::move(child));
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<Edge> edges;
    edges.reserve(g_.m());
    for (const Edge& e : g_.edges()) {
      Edge image;
      for (Vertex v : e) image.push_back(color[v - 1] + 1);
      std::sort(image.begin(), image.end());
      edges.push_back(std::move(image));
    }
    std::sort(edges.begin(), edges.end());
    if (!have_best_ || edges < best_) {
      have_best_ = true;
      best_ = std::move(edges);
      best_perm_.assign(color.begin(), color.end());
      for (auto& p : best_perm_) p += 1;
    }
  }

  const Hypergraph& g_;
  std::vector<int> twin_class_;
  bool have_best_ = false;
  std::vector<Edge> best_;
  std::vector<Vertex> best_perm_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Hypergraph& g) { return detail::Canonizer(g).run(); }

/// g relabeled into its canonical numbering.
inline Hypergraph canonical_relabel(const Hypergraph& g) {
  CanonicalForm cf = canonical_form(g);
  return validate(std::move(cf.edges), cf.n, cf.k);
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.m() != b.m()) return false;
  if (a.m() == 0) return true;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hypertree
