#include <gtest/gtest.h>

#include <random>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hypertree;

namespace {

std::vector<double> random_vector(int n, std::mt19937& rng, double lo = -1.0) {
  std::uniform_real_distribution<double> d(lo, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = d(rng);
  return x;
}

}  // namespace

TEST(Apply, SignlessOnAllOnesOfHyperstar) {
  const auto g = hyperstar(5, 3);
  const std::vector<double> ones(5, 1.0);
  EXPECT_EQ(apply(TensorKind::SignlessLaplacian, g, ones), (std::vector<double>{4, 2, 2, 2, 2}));
  EXPECT_EQ(apply(TensorKind::Adjacency, g, ones), (std::vector<double>{2, 1, 1, 1, 1}));
  EXPECT_EQ(apply(TensorKind::IncidenceQ, g, ones), (std::vector<double>{18, 9, 9, 9, 9}));
}

TEST(Apply, ZeroComponentsHandledExactly) {
  const auto g = loose_path(5, 3);
  const std::vector<double> x{0, 2, 3, 0, 5};
  // Vertex 1: product over {2,3}; vertex 3 gets x1 x2 + x4 x5 = 0.
  const auto y = apply(TensorKind::Adjacency, g, x);
  EXPECT_EQ(y[0], 6.0);
  EXPECT_EQ(y[2], 0.0);
}

TEST(Apply, LengthMismatch) {
  EXPECT_THROW(apply(TensorKind::Adjacency, hyperstar(5, 3), std::vector<double>(4, 1.0)), Error);
  EXPECT_THROW(rayleigh(TensorKind::Adjacency, hyperstar(5, 3), std::vector<double>(6, 1.0)), Error);
}

TEST(Apply, AgreesWithDefinitionEntrywise) {
  std::mt19937 rng(1);
  for (const auto& inst : fixtures::corpus()) {
    if (inst.graph.n() > 8) continue;
    for (TensorKind kind : kAllKinds) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto x = random_vector(inst.graph.n(), rng);
        const auto want = oracle::brute_apply(kind, inst.graph, x);
        const auto got = apply(kind, inst.graph, x);
        for (int i = 0; i < inst.graph.n(); ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << inst.name;
      }
    }
  }
}

TEST(Rayleigh, EqualsInnerProductWithApply) {
  std::mt19937 rng(2);
  for (const auto& inst : fixtures::corpus()) {
    for (TensorKind kind : kAllKinds) {
      const auto x = random_vector(inst.graph.n(), rng);
      const auto y = apply(kind, inst.graph, x);
      double dot = 0.0;
      for (int i = 0; i < inst.graph.n(); ++i) dot += x[i] * y[i];
      EXPECT_NEAR(rayleigh(kind, inst.graph, x), dot, 1e-9 * std::max(1.0, std::abs(dot))) << inst.name;
    }
  }
}

TEST(Rayleigh, IncidenceFormIsNonnegativeForEvenOrder) {
  std::mt19937 rng(4);
  for (const auto& inst : fixtures::corpus()) {
    if (inst.graph.k() % 2 != 0) continue;
    for (int trial = 0; trial < 200; ++trial) {
      EXPECT_GE(rayleigh(TensorKind::IncidenceQ, inst.graph, random_vector(inst.graph.n(), rng)), -1e-12);
    }
  }
}

TEST(DenseTensor, EntriesFollowDefinitions) {
  const auto g = hyperstar(7, 3);
  const auto a = dense_build(TensorKind::Adjacency, g);
  EXPECT_DOUBLE_EQ(a.at({1, 2, 3}), 0.5);
  EXPECT_DOUBLE_EQ(a.at({3, 1, 2}), 0.5);
  EXPECT_DOUBLE_EQ(a.at({1, 1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(a.at({2, 3, 4}), 0.0);

  const auto q = dense_build(TensorKind::SignlessLaplacian, g);
  EXPECT_DOUBLE_EQ(q.at({1, 1, 1}), 3.0);
  EXPECT_DOUBLE_EQ(q.at({2, 2, 2}), 1.0);
  EXPECT_DOUBLE_EQ(q.at({2, 1, 3}), 0.5);

  const auto s = dense_build(TensorKind::IncidenceQ, g);
  EXPECT_DOUBLE_EQ(s.at({1, 1, 1}), 3.0);
  EXPECT_DOUBLE_EQ(s.at({1, 2, 2}), 1.0);
  EXPECT_DOUBLE_EQ(s.at({1, 2, 3}), 1.0);
  EXPECT_DOUBLE_EQ(s.at({2, 4, 1}), 0.0);
}

TEST(DenseTensor, EveryEntryMatchesOracleAndIsSymmetric) {
  for (const auto& inst : fixtures::corpus()) {
    if (inst.graph.n() > 7 || inst.graph.k() > 4) continue;
    for (TensorKind kind : kAllKinds) {
      const auto t = dense_build(kind, inst.graph);
      const int n = inst.graph.n();
      const int k = inst.graph.k();
      std::vector<int> idx(k, 1);
      while (true) {
        EXPECT_DOUBLE_EQ(t.at(std::span<const int>(idx)), oracle::tensor_entry(kind, inst.graph, idx));
        std::vector<int> rev(idx.rbegin(), idx.rend());
        EXPECT_DOUBLE_EQ(t.at(std::span<const int>(idx)), t.at(std::span<const int>(rev)));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n) idx[pos--] = 1;
        if (pos < 0) break;
        ++idx[pos];
      }
    }
  }
}

TEST(DenseTensor, ContractionMatchesApply) {
  std::mt19937 rng(9);
  for (const auto& inst : fixtures::corpus()) {
    if (inst.graph.n() > 8) continue;
    for (TensorKind kind : kAllKinds) {
      const auto t = dense_build(kind, inst.graph);
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_vector(inst.graph.n(), rng);
        const auto a = apply(kind, inst.graph, x);
        const auto b = t.contract(x);
        for (int i = 0; i < inst.graph.n(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
      }
    }
  }
}

TEST(DenseTensor, CapRejectsLargeInputs) {
  try {
    dense_build(TensorKind::Adjacency, hyperstar(16, 4), DenseOptions{1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Kinds, NamesRoundTrip) {
  for (TensorKind kind : kAllKinds) EXPECT_EQ(parse_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_kind("laplacian").has_value());
}
