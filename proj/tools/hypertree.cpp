// hypertree: construct uniform hypertrees, compute their tensor spectral
// radii, apply edge moves, and run the extremal census checks.
//
// Exit codes: 0 ok, 2 bad input or parameters, 3 disconnected input,
// 4 no convergence, 5 transform rejected, 6 a checked inequality failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypertree/hypertree.hpp"

namespace {

using hypertree::Error;
using hypertree::ErrorCode;
using hypertree::Hypergraph;
using hypertree::TensorKind;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitNoConvergence = 4;
constexpr int kExitTransform = 5;
constexpr int kExitCheckFailed = 6;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return kExitDisconnected;
    case ErrorCode::NoConvergence: return kExitNoConvergence;
    case ErrorCode::InvalidSpec:
    case ErrorCode::MultipleEdge:
    case ErrorCode::PendentEdge:
    case ErrorCode::NotPendentPaths:
    case ErrorCode::NotLinear: return kExitTransform;
    default: return kExitInput;
  }
}

/// Shortest round-trip decimal, identical to the JSON rendering.
std::string num(double x) { return Json(x).dump(); }

Hypergraph read_input(const std::string& path) {
  if (path == "-") return hypertree::read_hypergraph(std::cin);
  return hypertree::load_hypergraph(path);
}

struct RunConfig {
  double tol = 1e-10;
  long max_iter = 1'000'000;
  std::string format = "json";
  double margin_rel = 1e-8;

  hypertree::SpectralOptions spectral() const {
    hypertree::SpectralOptions o;
    o.tol = tol;
    o.max_iter = max_iter;
    return o;
  }
  hypertree::StrictnessPolicy policy() const { return {tol, margin_rel}; }
};

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "Bracket width at which the power iteration stops")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap")->check(CLI::Range(1L, 1'000'000'000L));
}

// ---- compute ---------------------------------------------------------------

Json result_json(const Hypergraph& g, TensorKind kind, const hypertree::SpectralResult& r, bool eigvec) {
  Json j;
  j["n"] = g.n();
  j["k"] = g.k();
  j["m"] = g.m();
  j["kind"] = std::string(to_string(kind));
  j["rho"] = r.rho;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  if (eigvec) j["eigvec"] = r.eigvec;
  return j;
}

void print_result(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  static const char* fields[] = {"n", "k", "m", "kind", "rho", "lower", "upper", "residual", "iterations"};
  auto cell = [&](const char* f) {
    return j[f].is_string() ? j[f].get<std::string>() : j[f].dump();
  };
  if (format == "csv") {
    std::string head, row;
    for (const char* f : fields) {
      head += std::string(head.empty() ? "" : ",") + f;
      row += std::string(row.empty() ? "" : ",") + cell(f);
    }
    std::cout << head << "\n" << row << "\n";
    if (j.contains("eigvec")) {
      std::cout << "vertex,x\n";
      for (std::size_t i = 0; i < j["eigvec"].size(); ++i) std::cout << i + 1 << "," << j["eigvec"][i].dump() << "\n";
    }
    return;
  }
  for (const char* f : fields) std::cout << f << " = " << cell(f) << "\n";
  if (j.contains("eigvec")) {
    std::cout << "eigvec =";
    for (const auto& x : j["eigvec"]) std::cout << " " << x.dump();
    std::cout << "\n";
  }
}

int cmd_compute(const std::string& path, const std::string& kind_name, bool eigvec, const RunConfig& cfg) {
  const TensorKind kind = *hypertree::parse_kind(kind_name);
  const Hypergraph g = read_input(path);
  try {
    print_result(result_json(g, kind, hypertree::spectral_radius(kind, g, cfg.spectral()), eigvec), cfg.format);
  } catch (const hypertree::NoConvergenceError& e) {
    print_result(result_json(g, kind, e.last(), eigvec), cfg.format);
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

int cmd_bounds(const std::string& path, const RunConfig& cfg) {
  const Hypergraph g = read_input(path);
  const auto b = hypertree::bounds_report(g);
  const auto r = hypertree::spectral_radius(TensorKind::IncidenceQ, g, cfg.spectral());
  Json j;
  j["n"] = g.n();
  j["k"] = g.k();
  j["m"] = g.m();
  j["regular"] = hypertree::is_regular(g);
  j["rho_qstar"] = r.rho;
  j["avg_degree"] = b.avg_degree;
  j["max_degree"] = b.max_degree;
  j["lower_deg"] = b.lower_deg;
  j["upper_deg"] = b.upper_deg;
  j["rho_rrt"] = b.rho_rrt;
  j["sandwich_upper"] = b.sandwich_upper;
  if (cfg.format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    const char* sep = cfg.format == "csv" ? "," : " = ";
    for (const auto& [key, value] : j.items()) std::cout << key << sep << value.dump() << "\n";
  }
  return kExitOk;
}

// ---- construct -------------------------------------------------------------

int cmd_construct(const std::string& family, const std::vector<int>& args, const std::string& tree) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorCode::InvalidArgument,
                  family + " takes " + std::to_string(count) + " integer parameters");
    }
  };
  std::optional<Hypergraph> g;
  if (family == "hyperstar") {
    need(2);
    g = hypertree::hyperstar(args[0], args[1]);
  } else if (family == "loosepath") {
    need(2);
    g = hypertree::loose_path(args[0], args[1]);
  } else if (family == "doublestar") {
    need(3);
    g = hypertree::double_star(args[0], args[1], args[2]);
  } else if (family == "treepower") {
    need(1);
    std::istringstream in(tree);
    std::vector<int> parents;
    for (std::string tok; in >> tok;) {
      try {
        parents.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "bad parent entry '" + tok + "'");
      }
    }
    if (parents.empty()) throw Error(ErrorCode::InvalidArgument, "treepower needs --tree");
    g = hypertree::tree_power(parents, args[0]);
  } else if (family == "spath") {
    need(3);
    g = hypertree::s_path(args[0], args[1], args[2]);
  } else if (family == "scycle") {
    need(3);
    g = hypertree::s_cycle(args[0], args[1], args[2]);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
  }
  hypertree::write_hypergraph(std::cout, *g);
  return kExitOk;
}

// ---- transform -------------------------------------------------------------

/// Parses "key=value" tokens into a map of integer lists ("e=1,2").
std::map<std::string, std::vector<long>> parse_assignments(const std::vector<std::string>& tokens) {
  std::map<std::string, std::vector<long>> out;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::InvalidArgument, "expected key=value, got '" + tok + "'");
    }
    std::vector<long> values;
    std::istringstream in(tok.substr(eq + 1));
    for (std::string part; std::getline(in, part, ',');) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != part.size()) {
        throw Error(ErrorCode::InvalidArgument, "bad integer in '" + tok + "'");
      }
      values.push_back(v);
    }
    out[tok.substr(0, eq)] = std::move(values);
  }
  return out;
}

long single(const std::map<std::string, std::vector<long>>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end() || it->second.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "expected a single value for " + key + "=");
  }
  return it->second[0];
}

/// CLI edge ids are 1-based positions in the sorted edge list.
hypertree::EdgeId edge_index(const Hypergraph& g, long id) {
  if (id < 1 || static_cast<std::size_t>(id) > g.m()) {
    throw Error(ErrorCode::InvalidSpec, "edge " + std::to_string(id) + " out of range 1.." + std::to_string(g.m()));
  }
  return static_cast<hypertree::EdgeId>(id - 1);
}

struct TransformRequest {
  std::vector<std::string> release;
  std::vector<std::string> graft;
  std::vector<std::string> move;
  bool check_monotone = false;
};

int cmd_transform(const std::string& path, const TransformRequest& req, const RunConfig& cfg) {
  const Hypergraph g = read_input(path);
  Hypergraph out = g;
  int expected_sign = 0;  // +1 radii must grow, -1 must shrink, 0 no claim
  if (!req.release.empty()) {
    const auto kv = parse_assignments(req.release);
    out = hypertree::edge_release(g, edge_index(g, single(kv, "e")), static_cast<int>(single(kv, "u")));
    expected_sign = 1;
  } else if (!req.graft.empty()) {
    const auto kv = parse_assignments(req.graft);
    out = hypertree::total_graft(g, static_cast<int>(single(kv, "v")), static_cast<int>(single(kv, "p")),
                                 static_cast<int>(single(kv, "q")));
    expected_sign = -1;
  } else {
    const auto kv = parse_assignments(req.move);
    hypertree::EdgeMoveSpec spec;
    spec.target = static_cast<int>(single(kv, "u"));
    if (!kv.count("e") || !kv.count("v")) throw Error(ErrorCode::InvalidSpec, "--move needs e=, v= and u=");
    for (long e : kv.at("e")) spec.edges.push_back(edge_index(g, e));
    for (long v : kv.at("v")) spec.sources.push_back(static_cast<int>(v));
    out = hypertree::move_edges(g, spec);
  }
  hypertree::write_hypergraph(std::cout, out);
  if (!req.check_monotone) return kExitOk;

  const auto policy = cfg.policy();
  bool ok = true;
  for (TensorKind kind : hypertree::kAllKinds) {
    const double before = hypertree::spectral_radius(kind, g, cfg.spectral()).rho;
    const double after = hypertree::spectral_radius(kind, out, cfg.spectral()).rho;
    const double margin = after - before;
    std::string verdict = "n/a";
    if (expected_sign != 0) {
      const bool good = expected_sign > 0 ? policy.strictly_less(before, after) : policy.strictly_less(after, before);
      verdict = good ? "ok" : "VIOLATED";
      ok = ok && good;
    }
    std::cout << "# " << to_string(kind) << " before=" << num(before) << " after=" << num(after)
              << " margin=" << num(margin) << " " << verdict << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- verify ----------------------------------------------------------------

Json check_json(const hypertree::Check& c) {
  Json j;
  j["name"] = c.name;
  j["kind"] = c.kind;
  j["status"] = c.skipped ? "skip" : (c.passed ? "pass" : "fail");
  j["instance"] = c.instance;
  j["margin"] = c.margin;
  j["detail"] = c.detail;
  return j;
}

Json member_json(const hypertree::CensusMember& m) {
  Json j;
  j["edges"] = m.form.edges;
  for (TensorKind kind : hypertree::kAllKinds) j[std::string(to_string(kind))] = m.rho(kind);
  j["is_hyperstar"] = m.is_hyperstar;
  j["is_double_star_1"] = m.is_double_star_1;
  j["is_loose_path"] = m.is_loose_path;
  j["is_tree_power"] = m.is_tree_power;
  return j;
}

int cmd_verify(int n, int k, int jobs, const std::string& export_path, const RunConfig& cfg) {
  hypertree::CensusOptions opts;
  opts.spectral = cfg.spectral();
  opts.jobs = jobs;
  const auto census = hypertree::enumerate_supertrees(n, k, opts);
  auto report = hypertree::verify_extremal(census, cfg.policy());
  report.append(hypertree::verify_bounds(census, cfg.policy()));

  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + export_path);
    for (const auto& m : census.members) out << member_json(m).dump() << "\n";
  }

  const bool passed = report.passed();
  if (cfg.format == "json") {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["census_size"] = census.members.size();
    j["passed"] = passed;
    j["checks"] = Json::array();
    for (const auto& c : report.checks) j["checks"].push_back(check_json(c));
    std::cout << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "name,kind,status,instance,margin\n";
    for (const auto& c : report.checks) {
      std::cout << c.name << "," << c.kind << "," << (c.skipped ? "skip" : (c.passed ? "pass" : "fail")) << ","
                << c.instance << "," << num(c.margin) << "\n";
    }
  } else {
    for (const auto& c : report.checks) {
      if (c.passed && !c.skipped) continue;
      std::cout << (c.skipped ? "SKIP " : "FAIL ") << c.name << " [" << c.kind << "] instance " << c.instance
                << " margin " << num(c.margin) << " " << c.detail << "\n";
    }
    std::cout << (passed ? "PASS" : "FAIL") << " n=" << n << " k=" << k << " census size " << census.members.size()
              << ", " << report.checks.size() << " checks\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radii of uniform hypertrees"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* compute = app.add_subcommand("compute", "Spectral radius of one tensor of a hypergraph file");
  std::string compute_path, kind_name = "adj";
  bool eigvec = false;
  compute->add_option("--kind", kind_name, "adj, q or qstar")->check(CLI::IsMember({"adj", "q", "qstar"}));
  compute->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  compute->add_flag("--eigvec", eigvec, "Also print the Perron vector");
  compute->add_option("file", compute_path, "Hypergraph file, or - for stdin")->required();
  add_run_options(compute, cfg);

  auto* bounds = app.add_subcommand("bounds", "Degree and R R^T bounds on the incidence radius");
  std::string bounds_path;
  bounds->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  bounds->add_option("file", bounds_path, "Hypergraph file, or - for stdin")->required();
  add_run_options(bounds, cfg);

  auto* construct = app.add_subcommand("construct", "Print a standard family member");
  std::string family, tree;
  std::vector<int> params;
  construct->add_option("family", family, "hyperstar|loosepath|doublestar|treepower|spath|scycle")->required();
  construct->add_option("params", params, "Integer parameters");
  construct->add_option("--tree", tree, "Parent array for treepower, e.g. \"1 1 2 2\"");

  auto* transform = app.add_subcommand("transform", "Apply an edge operation");
  std::string transform_path;
  TransformRequest req;
  auto* release = transform->add_option("--release", req.release, "e=<edge> u=<vertex>")->expected(2);
  auto* graft = transform->add_option("--graft", req.graft, "v=<vertex> p=<len> q=<len>")->expected(3);
  auto* move = transform->add_option("--move", req.move, "e=<edges> v=<sources> u=<target>")->expected(3);
  release->excludes(graft)->excludes(move);
  graft->excludes(move);
  transform->add_flag("--check-monotone", req.check_monotone, "Print radius margins before/after");
  transform->add_option("--margin-rel", cfg.margin_rel, "Relative margin for strict inequalities");
  transform->add_option("file", transform_path, "Hypergraph file, or - for stdin")->required();
  add_run_options(transform, cfg);

  auto* verify = app.add_subcommand("verify", "Enumerate supertrees and check the extremal results");
  int vn = 0, vk = 0, jobs = 1;
  std::string export_path;
  verify->add_option("--n", vn, "Vertex count")->required();
  verify->add_option("--k", vk, "Uniformity")->required();
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  verify->add_option("--export", export_path, "Write the census as JSON lines");
  verify->add_option("--margin-rel", cfg.margin_rel, "Relative margin for strict inequalities");
  add_run_options(verify, cfg);
  cfg.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (*verify && cfg.format == "json" && verify->count("--format") == 0) cfg.format = "text";

  try {
    if (*compute) return cmd_compute(compute_path, kind_name, eigvec, cfg);
    if (*bounds) return cmd_bounds(bounds_path, cfg);
    if (*construct) return cmd_construct(family, params, tree);
    if (*transform) {
      if (req.release.empty() && req.graft.empty() && req.move.empty()) {
        std::cerr << "error: one of --release, --graft, --move is required\n";
        return kExitInput;
      }
      return cmd_transform(transform_path, req, cfg);
    }
    if (*verify) return cmd_verify(vn, vk, jobs, export_path, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitInput;
}
