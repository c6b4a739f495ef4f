#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hypertree/canonical.hpp"
#include "hypertree/constructors.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

inline constexpr int kMaxTreeOrder = 10;

/// Free trees on `order` nodes, one per isomorphism class, sorted by
/// canonical code.
inline std::vector<OrdinaryTree> enumerate_trees(int order) {
  if (order < 2) throw Error(ErrorCode::BadDimensions, "tree order must be at least 2");
  if (order > kMaxTreeOrder) {
    throw Error(ErrorCode::TooLarge, "tree order " + std::to_string(order) + " exceeds " +
                                         std::to_string(kMaxTreeOrder));
  }
  std::map<std::string, OrdinaryTree> level;
  auto seed = OrdinaryTree::from_links(2, {{1, 2}});
  level.emplace(seed.canonical_code(), seed);
  for (int size = 2; size < order; ++size) {
    std::map<std::string, OrdinaryTree> next;
    for (const auto& [code, t] : level) {
      for (int v = 1; v <= size; ++v) {
        auto links = t.links();
        links.emplace_back(v, size + 1);
        auto grown = OrdinaryTree::from_links(size + 1, std::move(links));
        next.emplace(grown.canonical_code(), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<OrdinaryTree> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

struct CensusOptions {
  int max_edges = 6;
  SpectralOptions spectral;
  /// Worker threads for the radius computations; 0 picks the hardware count.
  int jobs = 1;
};

struct CensusMember {
  Hypergraph graph;  // canonically labeled
  CanonicalForm form;
  std::array<SpectralResult, 3> radii;  // indexed like kAllKinds
  BoundsReport bounds;
  bool is_hyperstar = false;
  bool is_double_star_1 = false;  // double_star(1, m-2), only for m >= 3
  bool is_loose_path = false;
  bool is_tree_power = false;

  double rho(TensorKind kind) const { return radii[static_cast<int>(kind)].rho; }
};

struct Census {
  int n = 0;
  int k = 0;
  bool complete = false;
  std::vector<CensusMember> members;  // sorted by canonical form

  int m() const { return (n - 1) / (k - 1); }
};

namespace detail {

/// Every edge meets at most two vertices that lie in other edges.
inline bool is_tree_power_shape(const Hypergraph& g) {
  for (const Edge& e : g.edges()) {
    int core = 0;
    for (Vertex v : e) core += g.degree(v) >= 2 ? 1 : 0;
    if (core > 2) return false;
  }
  return true;
}

/// Supertrees with m edges up to isomorphism, grown one pendent edge at a
/// time from a single edge.
inline std::vector<CanonicalForm> grow_supertrees(int m, int k) {
  std::vector<Edge> seed(1);
  for (int v = 1; v <= k; ++v) seed[0].push_back(v);
  std::vector<CanonicalForm> level{canonical_form(validate(seed, k, k))};
  for (int size = 1; size < m; ++size) {
    std::vector<CanonicalForm> next;
    for (const auto& cf : level) {
      for (Vertex v = 1; v <= cf.n; ++v) {
        std::vector<Edge> edges = cf.edges;
        Edge fresh{v};
        for (int j = 1; j < k; ++j) fresh.push_back(cf.n + j);
        edges.push_back(std::move(fresh));
        next.push_back(canonical_form(validate(std::move(edges), cf.n + k - 1, k)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

/// Runs fn(i) for i in [0, count) on `jobs` threads; rethrows the first
/// exception after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// All k-uniform supertrees on n vertices up to isomorphism, each with its
/// three spectral radii, bounds and shape flags.
inline Census enumerate_supertrees(int n, int k, const CensusOptions& opts = {}) {
  const int m = detail::supertree_edge_count(n, k);
  if (m > opts.max_edges) {
    throw Error(ErrorCode::TooLarge, "census with " + std::to_string(m) + " edges exceeds the cap of " +
                                         std::to_string(opts.max_edges));
  }
  const auto forms = detail::grow_supertrees(m, k);
  const CanonicalForm star = canonical_form(hyperstar(n, k));
  const CanonicalForm path = canonical_form(loose_path(n, k));
  CanonicalForm second;
  if (m >= 3) second = canonical_form(double_star(1, m - 2, k));

  Census census;
  census.n = n;
  census.k = k;
  std::vector<std::optional<CensusMember>> slots(forms.size());
  detail::parallel_for(forms.size(), opts.jobs, [&](std::size_t i) {
    const CanonicalForm& cf = forms[i];
    CensusMember member{validate(cf.edges, cf.n, cf.k), cf, {}, {}};
    for (TensorKind kind : kAllKinds) {
      member.radii[static_cast<int>(kind)] = spectral_radius(kind, member.graph, opts.spectral);
    }
    member.bounds = bounds_report(member.graph);
    member.is_hyperstar = cf == star;
    member.is_loose_path = cf == path;
    member.is_double_star_1 = m >= 3 && cf == second;
    member.is_tree_power = detail::is_tree_power_shape(member.graph);
    slots[i] = std::move(member);
  });
  for (auto& s : slots) census.members.push_back(std::move(*s));
  census.complete = true;
  return census;
}

/// One assertion of a verification run. margin is the gap that had to be
/// positive (infinite when there was nothing to compare against).
struct Check {
  std::string name;
  std::string kind;
  bool passed = false;
  bool skipped = false;
  double margin = 0.0;
  int instance = -1;  // census index the assertion is about
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  int k = 0;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.skipped; });
  }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

namespace detail {

/// Census indices of `pool` ordered by rho, descending when `largest_first`.
inline std::vector<int> rank_by(const Census& c, TensorKind kind, std::vector<int> pool, bool largest_first) {
  std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
    return largest_first ? c.members[a].rho(kind) > c.members[b].rho(kind)
                         : c.members[a].rho(kind) < c.members[b].rho(kind);
  });
  return pool;
}

/// Gap between positions i and i+1 of a ranking (infinite past the end).
inline double gap_after(const Census& c, TensorKind kind, const std::vector<int>& order, std::size_t i) {
  if (i + 1 >= order.size()) return std::numeric_limits<double>::infinity();
  return std::abs(c.members[order[i]].rho(kind) - c.members[order[i + 1]].rho(kind));
}

}  // namespace detail

/// Extremal assertions per tensor kind: hyperstar is the unique maximizer and
/// matches its closed form; double_star(1, m-2) is the unique runner-up when
/// m >= 3; the loose path uniquely minimizes over tree powers.
inline VerificationReport verify_extremal(const Census& census, const StrictnessPolicy& policy = {}) {
  if (!census.complete) throw Error(ErrorCode::IncompleteCensus, "census is not complete");
  VerificationReport rep{census.n, census.k, {}};
  const int m = census.m();
  std::vector<int> all(census.members.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<int> powers;
  for (int i : all) {
    if (census.members[i].is_tree_power) powers.push_back(i);
  }

  for (TensorKind kind : kAllKinds) {
    const std::string kname(to_string(kind));
    const auto desc = detail::rank_by(census, kind, all, true);
    {
      Check c{"max-is-hyperstar", kname};
      const auto& top = census.members[desc[0]];
      c.instance = desc[0];
      c.margin = detail::gap_after(census, kind, desc, 0);
      const double closed = closed_form_hyperstar(kind, census.n, census.k);
      const double off = std::abs(top.rho(kind) - closed);
      c.passed = top.is_hyperstar && c.margin > policy.threshold(top.rho(kind)) && off <= 1e-7;
      c.detail = "rho=" + std::to_string(top.rho(kind)) + " closed_form_error=" + std::to_string(off);
      rep.checks.push_back(std::move(c));
    }
    {
      Check c{"second-is-double-star", kname};
      if (m < 3) {
        c.skipped = true;
        c.detail = "needs at least 3 edges";
      } else {
        c.instance = desc[1];
        c.margin = detail::gap_after(census, kind, desc, 1);
        const auto& runner = census.members[desc[1]];
        c.passed = runner.is_double_star_1 && c.margin > policy.threshold(runner.rho(kind)) &&
                   detail::gap_after(census, kind, desc, 0) > policy.threshold(runner.rho(kind));
        c.detail = "rho=" + std::to_string(runner.rho(kind));
      }
      rep.checks.push_back(std::move(c));
    }
    {
      Check c{"min-tree-power-is-loose-path", kname};
      const auto asc = detail::rank_by(census, kind, powers, false);
      c.instance = asc[0];
      c.margin = detail::gap_after(census, kind, asc, 0);
      const auto& low = census.members[asc[0]];
      c.passed = low.is_loose_path && c.margin > policy.threshold(low.rho(kind));
      c.detail = "rho=" + std::to_string(low.rho(kind));
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

/// Per-member bound assertions: the hyperstar ceilings for all three radii
/// (equality only at the hyperstar), the degree bounds on the incidence
/// radius (equality iff regular), and for k >= 3 the R R^T sandwich. The sandwich's upper side is an equality on regular members, so
/// it is asserted strict only on the others.
inline VerificationReport verify_bounds(const Census& census, const StrictnessPolicy& policy = {}) {
  if (!census.complete) throw Error(ErrorCode::IncompleteCensus, "census is not complete");
  VerificationReport rep{census.n, census.k, {}};
  const double ceil_adj = closed_form_hyperstar(TensorKind::Adjacency, census.n, census.k);
  const double ceil_sl = closed_form_hyperstar(TensorKind::SignlessLaplacian, census.n, census.k);
  const double ceil_q = closed_form_hyperstar(TensorKind::IncidenceQ, census.n, census.k);

  // a <= b, with equality exactly when `equal` holds.
  auto ordered = [&](const std::string& name, int idx, double a, double b, bool equal) {
    Check c{name, "qstar"};
    c.instance = idx;
    c.margin = b - a;
    const double thr = policy.threshold(std::max(std::abs(a), std::abs(b)));
    c.passed = equal ? std::abs(b - a) <= thr : c.margin > thr;
    c.detail = (equal ? "equality expected: " : "strict: ") + std::to_string(a) + " vs " + std::to_string(b);
    return c;
  };

  for (std::size_t i = 0; i < census.members.size(); ++i) {
    const auto& mem = census.members[i];
    const int idx = static_cast<int>(i);
    const double adj = mem.rho(TensorKind::Adjacency);
    const double qs = mem.rho(TensorKind::IncidenceQ);
    const bool regular = is_regular(mem.graph);

    Check adj_ceiling = ordered("adjacency-ceiling", idx, adj, ceil_adj, mem.is_hyperstar);
    adj_ceiling.kind = "adj";
    rep.checks.push_back(std::move(adj_ceiling));
    Check sl_ceiling =
        ordered("signless-ceiling", idx, mem.rho(TensorKind::SignlessLaplacian), ceil_sl, mem.is_hyperstar);
    sl_ceiling.kind = "q";
    rep.checks.push_back(std::move(sl_ceiling));
    rep.checks.push_back(ordered("incidence-ceiling", idx, qs, ceil_q, mem.is_hyperstar));
    rep.checks.push_back(ordered("degree-lower", idx, mem.bounds.lower_deg, qs, regular));
    rep.checks.push_back(ordered("degree-upper", idx, qs, mem.bounds.upper_deg, regular));
    if (census.k >= 3) {
      rep.checks.push_back(ordered("gram-lower", idx, mem.bounds.rho_rrt, qs, false));
      rep.checks.push_back(ordered("gram-upper", idx, qs, mem.bounds.sandwich_upper, regular));
    }
  }
  return rep;
}

}  // namespace hypertree
