#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

/// The three order-k symmetric tensors attached to a k-uniform hypergraph.
enum class TensorKind {
  Adjacency,          // entries 1/(k-1)! on every ordering of every edge
  SignlessLaplacian,  // degree diagonal plus adjacency
  IncidenceQ,         // R I R^T: entry counts edges containing all indices
};

inline constexpr TensorKind kAllKinds[] = {TensorKind::Adjacency, TensorKind::SignlessLaplacian,
                                           TensorKind::IncidenceQ};

inline std::string_view to_string(TensorKind kind) {
  switch (kind) {
    case TensorKind::Adjacency: return "adj";
    case TensorKind::SignlessLaplacian: return "q";
    case TensorKind::IncidenceQ: return "qstar";
  }
  return "?";
}

inline std::optional<TensorKind> parse_kind(std::string_view name) {
  if (name == "adj") return TensorKind::Adjacency;
  if (name == "q") return TensorKind::SignlessLaplacian;
  if (name == "qstar") return TensorKind::IncidenceQ;
  return std::nullopt;
}

namespace detail {

/// x^p for a small nonnegative integer p by repeated multiplication, valid for
/// signed x.
inline double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

inline void check_length(const Hypergraph& g, std::size_t len) {
  if (static_cast<int>(len) != g.n()) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(len) +
                                                  " for n=" + std::to_string(g.n()));
  }
}

}  // namespace detail

/// (T x^{k-1}) evaluated edge by edge in O(mk) work.
///
/// Products over e\{i} are formed by direct multiplication rather than by
/// dividing x^e, so zero components are handled exactly.
inline std::vector<double> apply(TensorKind kind, const Hypergraph& g, std::span<const double> x) {
  detail::check_length(g, x.size());
  const int k = g.k();
  std::vector<double> out(x.size(), 0.0);
  for (const Edge& e : g.edges()) {
    if (kind == TensorKind::IncidenceQ) {
      double sum = 0.0;
      for (Vertex v : e) sum += x[v - 1];
      const double term = detail::ipow(sum, k - 1);
      for (Vertex v : e) out[v - 1] += term;
      continue;
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
      double prod = 1.0;
      for (std::size_t b = 0; b < e.size(); ++b) {
        if (b != a) prod *= x[e[b] - 1];
      }
      out[e[a] - 1] += prod;
    }
  }
  if (kind == TensorKind::SignlessLaplacian) {
    for (Vertex v = 1; v <= g.n(); ++v) {
      out[v - 1] += g.degree(v) * detail::ipow(x[v - 1], k - 1);
    }
  }
  return out;
}

/// x^T (T x^{k-1}) through the closed edge sums:
///   adjacency   sum_e k x^e
///   signless    sum_e (x^{[k]}(e) + k x^e), x^{[k]}(e) = sum_{j in e} x_j^k
///   incidence   sum_e x(e)^k,               x(e)     = sum_{j in e} x_j
inline double rayleigh(TensorKind kind, const Hypergraph& g, std::span<const double> x) {
  detail::check_length(g, x.size());
  const int k = g.k();
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if (kind == TensorKind::IncidenceQ) {
      double sum = 0.0;
      for (Vertex v : e) sum += x[v - 1];
      total += detail::ipow(sum, k);
      continue;
    }
    double prod = 1.0;
    for (Vertex v : e) prod *= x[v - 1];
    total += k * prod;
    if (kind == TensorKind::SignlessLaplacian) {
      for (Vertex v : e) total += detail::ipow(x[v - 1], k);
    }
  }
  return total;
}

struct DenseOptions {
  /// Largest number of entries dense_build will materialize.
  double max_entries = 1e7;
};

/// A fully materialized order-k, dimension-n tensor. Index tuples use 1-based
/// vertex ids; storage is row-major with the first index most significant.
class DenseTensor {
 public:
  DenseTensor(int order, int dim) : order_(order), dim_(dim) {
    std::size_t size = 1;
    for (int i = 0; i < order; ++i) size *= static_cast<std::size_t>(dim);
    data_.assign(size, 0.0);
  }

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }
  std::span<const double> data() const noexcept { return data_; }

  double at(std::span<const Vertex> idx) const { return data_[offset(idx)]; }
  double& at(std::span<const Vertex> idx) { return data_[offset(idx)]; }
  double at(std::initializer_list<Vertex> idx) const {
    return at(std::span<const Vertex>(idx.begin(), idx.size()));
  }

  /// (T x^{order-1})_i = sum over tails of T[i, tail] * prod x_tail.
  std::vector<double> contract(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from tensor dimension");
    }
    // Products of every tail tuple, built digit by digit.
    std::vector<double> tail{1.0};
    for (int level = 1; level < order_; ++level) {
      std::vector<double> next;
      next.reserve(tail.size() * dim_);
      for (double p : tail) {
        for (int j = 0; j < dim_; ++j) next.push_back(p * x[j]);
      }
      tail = std::move(next);
    }
    std::vector<double> out(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
      const double* row = data_.data() + static_cast<std::size_t>(i) * tail.size();
      double acc = 0.0;
      for (std::size_t t = 0; t < tail.size(); ++t) acc += row[t] * tail[t];
      out[i] = acc;
    }
    return out;
  }

 private:
  std::size_t offset(std::span<const Vertex> idx) const {
    if (static_cast<int>(idx.size()) != order_) {
      throw Error(ErrorCode::DimensionMismatch, "index tuple length differs from order");
    }
    std::size_t off = 0;
    for (Vertex v : idx) {
      if (v < 1 || v > dim_) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
      off = off * dim_ + static_cast<std::size_t>(v - 1);
    }
    return off;
  }

  int order_;
  int dim_;
  std::vector<double> data_;
};

namespace detail {

/// Calls f(tuple) for every tuple in items^len (with repetition).
template <class F>
void for_each_tuple(std::span<const Vertex> items, int len, std::vector<Vertex>& scratch, F&& f) {
  if (static_cast<int>(scratch.size()) == len) {
    f(std::span<const Vertex>(scratch));
    return;
  }
  for (Vertex v : items) {
    scratch.push_back(v);
    for_each_tuple(items, len, scratch, f);
    scratch.pop_back();
  }
}

}  // namespace detail

inline DenseTensor dense_build(TensorKind kind, const Hypergraph& g, const DenseOptions& opts = {}) {
  const int k = g.k();
  const int n = g.n();
  if (std::pow(static_cast<double>(n), k) > opts.max_entries) {
    throw Error(ErrorCode::TooLarge, "n^k = " + std::to_string(n) + "^" + std::to_string(k) +
                                         " exceeds the dense cap");
  }
  DenseTensor t(k, n);
  double inv_fact = 1.0;
  for (int i = 2; i < k; ++i) inv_fact /= i;

  std::vector<Vertex> scratch;
  for (const Edge& e : g.edges()) {
    if (kind == TensorKind::IncidenceQ) {
      // Every tuple drawn from e (repeats allowed) lies inside this edge.
      detail::for_each_tuple(std::span<const Vertex>(e), k, scratch,
                             [&](std::span<const Vertex> idx) { t.at(idx) += 1.0; });
      continue;
    }
    Edge perm = e;
    do {
      t.at(std::span<const Vertex>(perm)) += inv_fact;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (kind == TensorKind::SignlessLaplacian) {
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<Vertex> diag(k, v);
      t.at(std::span<const Vertex>(diag)) += g.degree(v);
    }
  }
  return t;
}

}  // namespace hypertree
