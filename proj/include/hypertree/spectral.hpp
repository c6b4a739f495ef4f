#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hypertree/constructors.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/tensor.hpp"

namespace hypertree {

struct SpectralOptions {
  /// Target width of the bracket [lower, upper].
  double tol = 1e-10;
  long max_iter = 1'000'000;
  /// Diagonal shift sigma: the iteration runs on T + sigma*I.
  double shift = 1.0;
};

/// Output of the power iteration.
///
/// eigvec is normalized so that sum_i eigvec_i^k = 1. lower and upper are
/// the min and max of (T x)_i / x_i^{k-1} at the returned vector, so they
/// bracket the spectral radius; rho is their midpoint.
struct SpectralResult {
  double rho = 0.0;
  std::vector<double> eigvec;
  double residual = 0.0;
  long iterations = 0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Raised when max_iter is exhausted; carries the last bracket.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(SpectralResult last)
      : Error(ErrorCode::NoConvergence,
              "bracket [" + std::to_string(last.lower) + ", " + std::to_string(last.upper) +
                  "] still open after " + std::to_string(last.iterations) + " iterations"),
        last_(std::move(last)) {}

  const SpectralResult& last() const noexcept { return last_; }

 private:
  SpectralResult last_;
};

namespace detail {

inline void normalize_k(std::vector<double>& x, int k) {
  double s = 0.0;
  for (double v : x) s += ipow(v, k);
  const double scale = std::pow(s, -1.0 / k);
  for (double& v : x) v *= scale;
}

/// Shifted higher-order power method for a weakly irreducible nonnegative
/// tensor given only through its action x -> T x^{k-1}.
template <class ApplyFn>
SpectralResult shifted_power_iteration(int k, int n, ApplyFn&& apply_fn,
                                       const SpectralOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (opts.max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");

  const double sigma = opts.shift;
  std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));
  std::vector<double> tx, y(n), xpow(n);
  SpectralResult res;

  for (long it = 1;; ++it) {
    tx = apply_fn(std::span<const double>(x));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
      xpow[i] = ipow(x[i], k - 1);
      y[i] = tx[i] + sigma * xpow[i];
      const double ratio = y[i] / xpow[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    res.lower = lo - sigma;
    res.upper = hi - sigma;
    res.rho = 0.5 * (res.lower + res.upper);
    res.iterations = it;

    const bool done = hi - lo <= opts.tol;
    if (done || it >= opts.max_iter) {
      res.residual = 0.0;
      for (int i = 0; i < n; ++i) {
        res.residual = std::max(res.residual, std::abs(tx[i] - res.rho * xpow[i]));
      }
      res.eigvec = x;
      if (!done) throw NoConvergenceError(std::move(res));
      return res;
    }

    // Rescale before taking roots so no component under- or overflows.
    const double ymax = *std::max_element(y.begin(), y.end());
    const double root = 1.0 / (k - 1);
    for (int i = 0; i < n; ++i) x[i] = std::pow(y[i] / ymax, root);
    normalize_k(x, k);
  }
}

}  // namespace detail

/// Spectral radius and Perron vector of the chosen tensor of a connected
/// hypergraph.
inline SpectralResult spectral_radius(TensorKind kind, const Hypergraph& g,
                                      const SpectralOptions& opts = {}) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "spectral radius needs a connected hypergraph");
  }
  return detail::shifted_power_iteration(
      g.k(), g.n(), [&](std::span<const double> x) { return apply(kind, g, x); }, opts);
}

/// Dominant eigenvalue of a symmetric nonnegative matrix by power iteration
/// on M + I from the all-ones vector, stopped once the Rayleigh residual
/// drops below 1e-12 relative.
inline double matrix_spectral_radius(const DenseMatrix& mat, long max_iter = 1'000'000) {
  if (mat.rows != mat.cols) throw Error(ErrorCode::NotSquare, "matrix must be square");
  const std::size_t n = mat.rows;
  if (n == 0) return 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mat(i, j) < 0.0 || mat(i, j) != mat(j, i)) {
        throw Error(ErrorCode::InvalidArgument, "matrix must be symmetric and nonnegative");
      }
    }
  }
  auto multiply = [&](const std::vector<double>& v) {
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += mat(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  };
  auto unit = [](std::vector<double>& v) {
    double s = 0.0;
    for (double a : v) s += a * a;
    s = std::sqrt(s);
    for (double& a : v) a /= s;
  };

  std::vector<double> x(n, 1.0);
  unit(x);
  for (long it = 0; it < max_iter; ++it) {
    const auto mx = multiply(x);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += x[i] * mx[i];
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += (mx[i] - lambda * x[i]) * (mx[i] - lambda * x[i]);
    if (std::sqrt(r2) <= 1e-12 * std::max(1.0, lambda)) return lambda;
    for (std::size_t i = 0; i < n; ++i) x[i] += mx[i];
    unit(x);
  }
  throw Error(ErrorCode::NoConvergence, "matrix power iteration did not converge");
}

/// Largest real root of x^k - (m-1) x^{k-1} - m, located in (m-1, m] and
/// found by bisection. 1 + alpha_star(m, k) is the signless Laplacian
/// spectral radius of the hyperstar with m edges.
inline double alpha_star(int m, int k) {
  if (m < 1 || k < 2) throw Error(ErrorCode::BadDimensions, "need m >= 1 and k >= 2");
  auto f = [&](double x) { return std::pow(x, k) - (m - 1) * std::pow(x, k - 1) - m; };
  double lo = m - 1.0;  // f(lo) = -m < 0
  double hi = m;        // f(hi) = m^{k-1} - m >= 0
  if (f(hi) == 0.0) return hi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Exact spectral radius of hyperstar(n, k):
///   adjacency  m^{1/k}
///   signless   1 + alpha_star(m, k)
///   incidence  (m^{1/(k-1)} + k - 1)^{k-1}
inline double closed_form_hyperstar(TensorKind kind, int n, int k) {
  const int m = detail::supertree_edge_count(n, k);
  switch (kind) {
    case TensorKind::Adjacency: return std::pow(m, 1.0 / k);
    case TensorKind::SignlessLaplacian: return 1.0 + alpha_star(m, k);
    case TensorKind::IncidenceQ: return std::pow(std::pow(m, 1.0 / (k - 1)) + k - 1, k - 1);
  }
  return 0.0;
}

/// Degree and R R^T bounds on the incidence Q spectral radius.
struct BoundsReport {
  double avg_degree = 0.0;      // d = k m / n
  int max_degree = 0;           // Delta
  double lower_deg = 0.0;       // k^{k-1} d
  double upper_deg = 0.0;       // k^{k-1} Delta
  double rho_rrt = 0.0;         // rho(R R^T)
  double sandwich_upper = 0.0;  // k^{k-2} rho(R R^T)
};

/// rho(R R^T) through whichever of R^T R (m x m) and R R^T (n x n) is
/// smaller; both share their nonzero spectrum.
inline double incidence_gram_radius(const Hypergraph& g) {
  const IncidenceMatrix r = incidence_matrix(g);
  return matrix_spectral_radius(r.cols() < r.rows() ? r.edge_gram() : r.vertex_gram());
}

inline BoundsReport bounds_report(const Hypergraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "bounds need a connected hypergraph");
  const int k = g.k();
  BoundsReport b;
  b.avg_degree = static_cast<double>(k) * static_cast<double>(g.m()) / g.n();
  b.max_degree = g.max_degree();
  const double kk1 = std::pow(k, k - 1);
  b.lower_deg = kk1 * b.avg_degree;
  b.upper_deg = kk1 * b.max_degree;
  b.rho_rrt = incidence_gram_radius(g);
  b.sandwich_upper = std::pow(k, k - 2) * b.rho_rrt;
  return b;
}

/// Margin demanded before a floating-point difference counts as a strict
/// inequality: max(100 tol, relative * scale).
struct StrictnessPolicy {
  double tol = 1e-10;
  double relative = 1e-8;

  double threshold(double scale) const { return std::max(100.0 * tol, relative * std::abs(scale)); }
  bool strictly_less(double a, double b) const {
    return b - a > threshold(std::max(std::abs(a), std::abs(b)));
  }
};

/// True iff the eigenvector components agree (to 1e-7 relative) inside every
/// block of the supplied vertex partition.
inline bool orbit_constancy_check(const Hypergraph& g, const std::vector<std::vector<Vertex>>& orbits,
                                  const SpectralResult& result, double rel_tol = 1e-7) {
  std::vector<int> hits(g.n(), 0);
  for (const auto& block : orbits) {
    if (block.empty()) throw Error(ErrorCode::BadPartition, "empty block");
    for (Vertex v : block) {
      if (v < 1 || v > g.n()) throw Error(ErrorCode::BadPartition, "vertex out of range");
      ++hits[v - 1];
    }
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    throw Error(ErrorCode::BadPartition, "blocks must cover every vertex exactly once");
  }
  if (static_cast<int>(result.eigvec.size()) != g.n()) {
    throw Error(ErrorCode::DimensionMismatch, "eigenvector length differs from n");
  }
  for (const auto& block : orbits) {
    const double ref = result.eigvec[block.front() - 1];
    for (Vertex v : block) {
      const double x = result.eigvec[v - 1];
      if (std::abs(x - ref) > rel_tol * std::max(std::abs(x), std::abs(ref))) return false;
    }
  }
  return true;
}

}  // namespace hypertree
