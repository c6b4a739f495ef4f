// Prints every supertree on n vertices with k-uniform edges, ordered by the
// adjacency radius, together with all three radii.
//
//   census_demo 11 3

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "hypertree/hypertree.hpp"

using namespace hypertree;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 9;
  const int k = argc > 2 ? std::atoi(argv[2]) : 3;
  try {
    CensusOptions opts;
    opts.jobs = 0;
    const auto census = enumerate_supertrees(n, k, opts);
    std::vector<const CensusMember*> order;
    for (const auto& mem : census.members) order.push_back(&mem);
    std::sort(order.begin(), order.end(), [](auto a, auto b) {
      return a->rho(TensorKind::Adjacency) > b->rho(TensorKind::Adjacency);
    });
    std::printf("%zu supertrees with n=%d k=%d\n", order.size(), n, k);
    std::printf("%12s %12s %14s  shape\n", "adj", "q", "qstar");
    for (const auto* mem : order) {
      std::string shape = mem->is_hyperstar ? "hyperstar" : mem->is_loose_path ? "loose path"
                          : mem->is_double_star_1                           ? "double star"
                          : mem->is_tree_power                              ? "tree power"
                                                                            : "";
      std::printf("%12.8f %12.8f %14.8f  %s\n", mem->rho(TensorKind::Adjacency),
                  mem->rho(TensorKind::SignlessLaplacian), mem->rho(TensorKind::IncidenceQ), shape.c_str());
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "census_demo: %s\n", e.what());
    return 2;
  }
  return 0;
}
