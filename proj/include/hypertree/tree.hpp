#pragma once

#include <algorithm>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertree/error.hpp"

namespace hypertree {

/// An ordinary (2-uniform) tree on nodes 1..order.
class OrdinaryTree {
 public:
  using Link = std::pair<int, int>;

  /// parents[i] is the parent of node i+2, so the array has order-1 entries
  /// and node 1 is the root.
  static OrdinaryTree from_parents(std::span<const int> parents) {
    const int order = static_cast<int>(parents.size()) + 1;
    std::vector<Link> links;
    links.reserve(parents.size());
    for (int child = 2; child <= order; ++child) {
      const int p = parents[child - 2];
      if (p < 1 || p > order || p == child) {
        throw Error(ErrorCode::NotATree, "bad parent " + std::to_string(p) + " for node " +
                                             std::to_string(child));
      }
      links.emplace_back(p, child);
    }
    return from_links(order, std::move(links));
  }

  static OrdinaryTree from_links(int order, std::vector<Link> links) {
    if (order < 1) throw Error(ErrorCode::NotATree, "a tree needs at least one node");
    if (static_cast<int>(links.size()) != order - 1) {
      throw Error(ErrorCode::NotATree, "a tree on " + std::to_string(order) + " nodes has " +
                                           std::to_string(order - 1) + " edges");
    }
    for (auto& [a, b] : links) {
      if (a < 1 || a > order || b < 1 || b > order || a == b) {
        throw Error(ErrorCode::NotATree, "bad edge " + std::to_string(a) + "-" + std::to_string(b));
      }
      if (a > b) std::swap(a, b);
    }
    std::sort(links.begin(), links.end());
    if (std::adjacent_find(links.begin(), links.end()) != links.end()) {
      throw Error(ErrorCode::NotATree, "repeated edge");
    }
    OrdinaryTree t;
    t.order_ = order;
    t.links_ = std::move(links);
    t.adj_.assign(order, {});
    for (auto [a, b] : t.links_) {
      t.adj_[a - 1].push_back(b);
      t.adj_[b - 1].push_back(a);
    }
    for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
    const auto dist = t.distances_from(1);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
      throw Error(ErrorCode::NotATree, "edges do not connect all nodes");
    }
    return t;
  }

  int order() const noexcept { return order_; }
  /// Edges as (smaller, larger) pairs in lexicographic order.
  const std::vector<Link>& links() const noexcept { return links_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v - 1); }
  int degree(int v) const { return static_cast<int>(adj_.at(v - 1).size()); }

  /// BFS distances from root, indexed by node-1; -1 when unreachable.
  std::vector<int> distances_from(int root) const {
    std::vector<int> dist(order_, -1);
    std::queue<int> q;
    dist[root - 1] = 0;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj_[v - 1]) {
        if (dist[w - 1] < 0) {
          dist[w - 1] = dist[v - 1] + 1;
          q.push(w);
        }
      }
    }
    return dist;
  }

  /// Parent array rooted at node 1 (entry i is the parent of node i+2).
  std::vector<int> parents() const {
    std::vector<int> parent(order_, 0);
    std::vector<char> seen(order_, 0);
    std::queue<int> q;
    q.push(1);
    seen[0] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj_[v - 1]) {
        if (!seen[w - 1]) {
          seen[w - 1] = 1;
          parent[w - 1] = v;
          q.push(w);
        }
      }
    }
    return {parent.begin() + 1, parent.end()};
  }

  bool is_path() const {
    return std::all_of(adj_.begin(), adj_.end(), [](const auto& nb) { return nb.size() <= 2; });
  }

  /// Isomorphism-invariant encoding: the smallest AHU string over the tree's
  /// centers.
  std::string canonical_code() const {
    std::string best;
    for (int c : centers()) {
      std::string code = encode(c, 0);
      if (best.empty() || code < best) best = std::move(code);
    }
    return best;
  }

  friend bool operator==(const OrdinaryTree& a, const OrdinaryTree& b) {
    return a.order_ == b.order_ && a.links_ == b.links_;
  }

 private:
  std::vector<int> centers() const {
    if (order_ <= 2) {
      std::vector<int> all(order_);
      for (int i = 0; i < order_; ++i) all[i] = i + 1;
      return all;
    }
    std::vector<int> deg(order_);
    std::vector<int> layer;
    for (int v = 1; v <= order_; ++v) {
      deg[v - 1] = degree(v);
      if (deg[v - 1] == 1) layer.push_back(v);
    }
    int remaining = order_;
    while (remaining > 2) {
      remaining -= static_cast<int>(layer.size());
      std::vector<int> next;
      for (int leaf : layer) {
        for (int w : adj_[leaf - 1]) {
          if (--deg[w - 1] == 1) next.push_back(w);
        }
      }
      layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
  }

  std::string encode(int v, int parent) const {
    std::vector<std::string> children;
    for (int w : adj_[v - 1]) {
      if (w != parent) children.push_back(encode(w, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
  }

  int order_ = 0;
  std::vector<Link> links_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace hypertree
