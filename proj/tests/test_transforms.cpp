#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hypertree;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

EdgeId edge_id(const Hypergraph& g, const Edge& e) {
  const auto it = std::find(g.edges().begin(), g.edges().end(), e);
  EXPECT_NE(it, g.edges().end());
  return static_cast<EdgeId>(it - g.edges().begin());
}

const StrictnessPolicy kPolicy;

}  // namespace

TEST(MoveEdges, MovesOneEdge) {
  const auto p = loose_path(7, 3);
  const auto g = move_edges(p, {{edge_id(p, {5, 6, 7})}, {5}, 1});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2, 3}, {1, 6, 7}, {3, 4, 5}}));
  EXPECT_TRUE(is_supertree(g));
  EXPECT_EQ(g.n(), p.n());
  EXPECT_EQ(g.m(), p.m());
}

TEST(MoveEdges, RejectsBadSpecs) {
  const auto p = loose_path(7, 3);
  EXPECT_EQ(code_of([&] { move_edges(p, {{0}, {1}, 2}); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { move_edges(p, {{0}, {4}, 6}); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { move_edges(p, {{}, {}, 6}); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { move_edges(p, {{0, 0}, {1, 2}, 6}); }), ErrorCode::InvalidSpec);
  const auto g = validate({{1, 2, 3}, {2, 3, 4}}, 4, 3);
  EXPECT_EQ(code_of([&] { move_edges(g, {{1}, {4}, 1}); }), ErrorCode::MultipleEdge);
}

TEST(MoveEdges, SourcesMayRepeat) {
  const auto s = hyperstar(7, 3);
  const auto g = move_edges(s, {{1, 2}, {1, 1}, 2});
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_TRUE(isomorphic(g, s));
}

TEST(MoveEdges, PreservesSizesOnRandomSupertrees) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_supertree(2 + trial % 5, 3 + trial % 2, rng);
    std::uniform_int_distribution<int> ev(0, static_cast<int>(g.m()) - 1);
    std::uniform_int_distribution<int> vv(1, g.n());
    const EdgeId e = ev(rng);
    const Vertex src = g.edge(e)[trial % g.k()];
    const Vertex u = vv(rng);
    if (g.contains(e, u)) continue;
    try {
      const auto h = move_edges(g, {{e}, {src}, u});
      EXPECT_EQ(h.n(), g.n());
      EXPECT_EQ(h.m(), g.m());
      EXPECT_EQ(h.k(), g.k());
      if (is_connected(h)) EXPECT_TRUE(is_supertree(h));
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::MultipleEdge);
    }
  }
}

TEST(MoveEdges, PerronConditionGivesIncrease) {
  // When x_u >= x_v for every source, each radius strictly grows.
  std::mt19937 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_supertree(3 + trial % 4, 3, rng);
    for (TensorKind kind : kAllKinds) {
      const auto r = spectral_radius(kind, g);
      for (EdgeId e = 0; e < g.m(); ++e) {
        for (Vertex v : g.edge(e)) {
          for (Vertex u = 1; u <= g.n(); ++u) {
            if (g.contains(e, u) || r.eigvec[u - 1] < r.eigvec[v - 1]) continue;
            Hypergraph h = g;
            try {
              h = move_edges(g, {{e}, {v}, u});
            } catch (const Error&) {
              continue;
            }
            if (!is_connected(h)) continue;
            if (isomorphic(h, g)) continue;
            EXPECT_TRUE(kPolicy.strictly_less(r.rho, spectral_radius(kind, h).rho));
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(EdgeRelease, MiddleEdgeOfPath) {
  const auto p = loose_path(7, 3);
  const auto g = edge_release(p, edge_id(p, {3, 4, 5}), 3);
  EXPECT_EQ(g.degree(3), 3);
  EXPECT_TRUE(isomorphic(g, hyperstar(7, 3)));
}

TEST(EdgeRelease, Errors) {
  const auto s = hyperstar(7, 3);
  EXPECT_EQ(code_of([&] { edge_release(s, 0, 1); }), ErrorCode::PendentEdge);
  EXPECT_EQ(code_of([&] { edge_release(s_path(3, 2, 4), 1, 3); }), ErrorCode::NotLinear);
  EXPECT_EQ(code_of([&] { edge_release(loose_path(7, 3), 1, 1); }), ErrorCode::InvalidSpec);
}

TEST(EdgeRelease, ChoiceOfVertexDoesNotMatterUpToIsomorphism) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = oracle::random_supertree(3 + trial % 5, 3 + trial % 2, rng);
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (is_pendent_edge(g, e)) continue;
      const auto first = edge_release(g, e, g.edge(e).front());
      for (Vertex u : g.edge(e)) {
        const auto other = edge_release(g, e, u);
        EXPECT_TRUE(isomorphic(first, other));
        EXPECT_TRUE(is_supertree(other));
      }
    }
  }
}

TEST(EdgeRelease, StrictlyIncreasesAllRadii) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_supertree(3 + trial % 4, 3 + trial % 2, rng);
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (is_pendent_edge(g, e)) continue;
      for (TensorKind kind : kAllKinds) {
        const auto h = edge_release_best(g, e, kind);
        EXPECT_TRUE(kPolicy.strictly_less(spectral_radius(kind, g).rho, spectral_radius(kind, h).rho));
      }
    }
  }
}

TEST(PendentPaths, Discovery) {
  const auto s = hyperstar(7, 3);
  const auto paths = find_pendent_paths(s, 1);
  ASSERT_EQ(paths.size(), 3u);
  for (const auto& p : paths) EXPECT_EQ(p.length(), 1);

  // Spider with legs of lengths 1, 2, 3 at node 1.
  const auto spider = tree_power(std::vector<int>{1, 1, 1, 3, 4, 6}, 3);
  const auto legs = find_pendent_paths(spider, 1);
  ASSERT_EQ(legs.size(), 3u);
  EXPECT_EQ(legs[0].length(), 3);
  EXPECT_EQ(legs[1].length(), 2);
  EXPECT_EQ(legs[2].length(), 1);
  EXPECT_EQ(spider.degree(legs[0].end()), 1);
}

TEST(TotalGraft, HyperstarBecomesPathPlusEdge) {
  const auto g = total_graft(hyperstar(7, 3), 1, 1, 1);
  EXPECT_TRUE(is_supertree(g));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(isomorphic(g, loose_path(7, 3)));
}

TEST(TotalGraft, StarPowerMatchesIndependentConstruction) {
  // Star on 4 nodes: one graft gives the path on 4 nodes.
  const auto star = tree_power(std::vector<int>{1, 1, 1}, 3);
  const auto grafted = total_graft(star, 1, 1, 1);
  EXPECT_EQ(canonical_form(grafted), canonical_form(tree_power(std::vector<int>{1, 2, 3}, 3)));
  // Star on 5 nodes: one graft leaves a spider with legs 2, 1, 1.
  const auto star5 = tree_power(std::vector<int>{1, 1, 1, 1}, 3);
  EXPECT_EQ(canonical_form(total_graft(star5, 1, 1, 1)),
            canonical_form(tree_power(std::vector<int>{1, 1, 1, 2}, 3)));
}

TEST(TotalGraft, Errors) {
  const auto s = hyperstar(7, 3);
  EXPECT_EQ(code_of([&] { total_graft(s, 1, 1, 0); }), ErrorCode::NotPendentPaths);
  EXPECT_EQ(code_of([&] { total_graft(s, 1, 2, 1); }), ErrorCode::NotPendentPaths);
  // Two pendent paths and nothing else at v: the result would be isomorphic.
  EXPECT_EQ(code_of([&] { total_graft(loose_path(5, 3), 3, 1, 1); }), ErrorCode::NotPendentPaths);
  // A hand-built path that is not pendent.
  const auto p = find_pendent_paths(s, 1);
  PendentPath bogus{{p[0].edges[0]}, {1, 4}};
  EXPECT_EQ(code_of([&] { total_graft(s, 1, bogus, p[1]); }), ErrorCode::NotPendentPaths);
  EXPECT_EQ(code_of([&] { total_graft(s, 1, p[0], p[0]); }), ErrorCode::NotPendentPaths);
}

TEST(TotalGraft, BothMoveConstructionsGiveTheUngraftedShape) {
  // From G(v;p+q,0): moving e_{p+1} from v_p to v, or moving every edge at v
  // except e_1 from v to v_p, both give G(v;p,q).
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      // G is one extra edge at node 1; the long path has p+q edges.
      std::vector<int> parents{1};  // node 2: the edge of G
      int prev = 1;
      for (int i = 0; i < p + q; ++i) {
        parents.push_back(prev);
        prev = static_cast<int>(parents.size()) + 1;
      }
      const auto tree = OrdinaryTree::from_parents(parents);
      const auto joined = tree_power(tree, 3);
      // Path nodes: 1, 3, 4, ..., 3+p+q-1. v_p is node 2+p.
      const int vp = 2 + p;
      EdgeId e_next = 0, e_first = 0;
      for (EdgeId e = 0; e < joined.m(); ++e) {
        if (joined.contains(e, vp) && joined.contains(e, vp + 1)) e_next = e;
        if (joined.contains(e, 1) && joined.contains(e, 3)) e_first = e;
      }
      const auto g1 = move_edges(joined, {{e_next}, {vp}, 1});
      EdgeMoveSpec spec2{{}, {}, vp};
      for (EdgeId e : joined.incident(1)) {
        if (e == e_first) continue;
        spec2.edges.push_back(e);
        spec2.sources.push_back(1);
      }
      const auto g2 = move_edges(joined, spec2);

      std::vector<int> split{1};
      prev = 1;
      for (int i = 0; i < p; ++i) {
        split.push_back(prev);
        prev = static_cast<int>(split.size()) + 1;
      }
      prev = 1;
      for (int i = 0; i < q; ++i) {
        split.push_back(prev);
        prev = static_cast<int>(split.size()) + 1;
      }
      const auto expected = canonical_form(tree_power(split, 3));
      EXPECT_EQ(canonical_form(g1), expected) << p << "," << q;
      EXPECT_EQ(canonical_form(g2), expected) << p << "," << q;
    }
  }
}

TEST(TotalGraft, StrictlyDecreasesAllRadii) {
  std::mt19937 rng(14);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_supertree(3 + trial % 4, 3 + trial % 2, rng);
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (g.degree(v) < 3) continue;
      const auto paths = find_pendent_paths(g, v);
      if (paths.size() < 2) continue;
      const auto h = total_graft(g, v, paths[0], paths[1]);
      for (TensorKind kind : kAllKinds) {
        EXPECT_TRUE(kPolicy.strictly_less(spectral_radius(kind, h).rho, spectral_radius(kind, g).rho));
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(GraftToPath, KnownSequences) {
  EXPECT_TRUE(graft_to_path(OrdinaryTree::from_parents(std::vector<int>{1, 2, 3, 4})).empty());
  EXPECT_EQ(graft_to_path(OrdinaryTree::from_parents(std::vector<int>{1, 1, 1})).size(), 1u);
  const auto spider = OrdinaryTree::from_parents(std::vector<int>{1, 1, 1, 2, 3, 4});
  const auto seq = graft_to_path(spider);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].at, 1);
  EXPECT_EQ(seq[0].p, 2);
  EXPECT_EQ(seq[0].q, 2);
}

TEST(GraftToPath, HandSimulatedProcedure) {
  // Root 1, nodes 2 and 3 both of degree 3 at depth 1 and 2:
  //   1-2, 2-3, 3-4, 3-5, 2-6
  // The furthest degree-3 node is 3 (one graft), then 2 (one graft).
  const auto t = OrdinaryTree::from_parents(std::vector<int>{1, 2, 3, 3, 2});
  const auto seq = graft_to_path(t);
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0].at, 3);
  EXPECT_EQ(seq[1].at, 2);
}

TEST(GraftToPath, EndsAtPathWithDecreasingRadii) {
  for (int order = 4; order <= 8; ++order) {
    for (const auto& tree : enumerate_trees(order)) {
      OrdinaryTree cur = tree;
      auto prev = tree_power(cur, 3);
      for (const auto& step : graft_to_path(tree)) {
        cur = apply_tree_graft(cur, step);
        EXPECT_EQ(cur.order(), order);
        const auto next = tree_power(cur, 3);
        for (TensorKind kind : kAllKinds) {
          EXPECT_TRUE(kPolicy.strictly_less(spectral_radius(kind, next).rho, spectral_radius(kind, prev).rho));
        }
        prev = next;
      }
      EXPECT_TRUE(cur.is_path());
    }
  }
}

TEST(GraftToPath, RejectsBadTrees) {
  EXPECT_THROW(OrdinaryTree::from_links(4, {{1, 2}, {2, 3}, {1, 3}}), Error);
  EXPECT_THROW(OrdinaryTree::from_parents(std::vector<int>{1, 9}), Error);
}
