#pragma once

#include <string>
#include <vector>

#include "hypertree/hypertree.hpp"

namespace fixtures {

struct Instance {
  std::string name;
  hypertree::Hypergraph graph;
};

inline hypertree::Hypergraph single_edge(int k) {
  std::vector<hypertree::Edge> e(1);
  for (int v = 1; v <= k; ++v) e[0].push_back(v);
  return hypertree::validate(e, k, k);
}

/// A 3-uniform supertree whose middle edge meets three other edges, so it is
/// not the power of any ordinary tree.
inline hypertree::Hypergraph non_power_supertree() {
  return hypertree::validate({{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {3, 8, 9}}, 9, 3);
}

/// Connected instances shared by the bound, oracle and property checks.
inline std::vector<Instance> corpus() {
  using namespace hypertree;
  std::vector<Instance> out;
  auto add = [&](std::string name, Hypergraph g) { out.push_back({std::move(name), std::move(g)}); };
  add("single_edge_3", single_edge(3));
  add("single_edge_4", single_edge(4));
  add("hyperstar_7_3", hyperstar(7, 3));
  add("hyperstar_9_3", hyperstar(9, 3));
  add("hyperstar_13_4", hyperstar(13, 4));
  add("hyperstar_16_4", hyperstar(16, 4));
  add("loose_path_7_3", loose_path(7, 3));
  add("loose_path_9_3", loose_path(9, 3));
  add("loose_path_10_4", loose_path(10, 4));
  add("double_star_1_2_3", double_star(1, 2, 3));
  add("double_star_2_2_3", double_star(2, 2, 3));
  add("double_star_1_1_4", double_star(1, 1, 4));
  add("spider_3x2_power_3", tree_power(std::vector<int>{1, 1, 1, 2, 3, 4}, 3));
  add("non_power_supertree", non_power_supertree());
  add("s_path_3_2_4", s_path(3, 2, 4));
  add("s_path_2_2_5", s_path(2, 2, 5));
  add("s_cycle_3_1_3", s_cycle(3, 1, 3));
  add("s_cycle_4_1_4", s_cycle(4, 1, 4));
  add("s_cycle_3_2_4", s_cycle(3, 2, 4));
  add("s_cycle_4_2_4", s_cycle(4, 2, 4));
  add("s_cycle_5_1_3", s_cycle(5, 1, 3));
  return out;
}

}  // namespace fixtures
