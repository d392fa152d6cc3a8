#include <gtest/gtest.h>

#include "gm/polys.hpp"
#include "oracles.hpp"

namespace gm {
namespace {

std::vector<Graph> connected_simple_upto(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& G : all_simple_graphs(n)) {
      if (is_connected(G)) out.push_back(G);
    }
  }
  return out;
}

TEST(KirchhoffP, Examples) {
  EXPECT_EQ(kirchhoff_P(cycle_graph(3)).to_string(), "x_0 + x_1 + x_2");
  EXPECT_TRUE(kirchhoff_P(discrete_graph(2)).is_zero());
  EXPECT_EQ(kirchhoff_P(discrete_graph(2)).to_string(), "0");
  EXPECT_EQ(kirchhoff_P(Graph(2, {{0, 1}, {0, 1}})).to_string(), "x_0 + x_1");
}

TEST(StanleyQ, Examples) {
  EXPECT_EQ(stanley_Q(cycle_graph(3)).to_string(), "x_0x_1 + x_0x_2 + x_1x_2");
  EXPECT_EQ(stanley_Q(complete_graph(2)).to_string(), "x_0");
  EXPECT_TRUE(stanley_Q(discrete_graph(2)).is_zero());
}

TEST(Laplacian, Examples) {
  const auto L = laplacian(complete_graph(2));
  EXPECT_EQ(L.at(0, 0).to_string(), "x_0");
  EXPECT_EQ(L.at(0, 1).to_string(), "-1 * x_0");
  const auto L0 = reduced_laplacian(complete_graph(2));
  ASSERT_EQ(L0.dim, 1);
  EXPECT_EQ(L0.at(0, 0).to_string(), "x_0");
  const auto Z = laplacian(discrete_graph(2));
  for (const auto& e : Z.entries) EXPECT_TRUE(e.is_zero());
  const auto C = laplacian(cycle_graph(3));
  for (int i = 0; i < 3; ++i) {
    MultilinearPoly row(3);
    for (int j = 0; j < 3; ++j) row = row + C.at(i, j);
    EXPECT_TRUE(row.is_zero());
  }
  EXPECT_THROW(laplacian(Graph(2, {{0, 1}, {0, 1}})), NotSimple);
}

TEST(SymbolicDet, Examples) {
  EXPECT_EQ(symbolic_det(reduced_laplacian(cycle_graph(3))), stanley_Q(cycle_graph(3)));
  SymbolicMatrix one(1, 1);
  one.at(0, 0).add_term(EdgeSubset{1}, 1);
  EXPECT_EQ(symbolic_det(one).to_string(), "x_0");
  const auto d = symbolic_det(reduced_laplacian(complete_graph(4)));
  EXPECT_EQ(d.size(), 16u);
  EXPECT_TRUE(d.all_coefficients_one());
  EXPECT_THROW(symbolic_det(SymbolicMatrix(9, 1)), TooLarge);
}

TEST(SymbolicDet, MatrixTreeOnAllConnectedGraphsUpTo5) {
  for (const auto& G : connected_simple_upto(5)) {
    ASSERT_EQ(symbolic_det(reduced_laplacian(G)), stanley_Q(G)) << G;
  }
}

TEST(GraphPolys, DegreesAndCoefficients) {
  for (const auto& G : connected_simple_upto(5)) {
    const auto P = kirchhoff_P(G);
    const auto Q = stanley_Q(G);
    const auto trees = spanning_trees(G).size();
    const int b1 = betti(G).b1;
    EXPECT_EQ(P.degree(), b1);
    EXPECT_EQ(Q.degree(), G.n_edges() - b1);
    EXPECT_TRUE(P.all_coefficients_one() && Q.all_coefficients_one());
    EXPECT_TRUE(P.is_homogeneous() && Q.is_homogeneous());
    EXPECT_EQ(P.size(), trees);
    EXPECT_EQ(Q.size(), trees);
  }
}

TEST(Duality, Examples) {
  EXPECT_TRUE(duality_check(cycle_graph(3)));
  EXPECT_TRUE(duality_check(complete_graph(4)));
  EXPECT_TRUE(duality_check(complete_graph(2)));
}

TEST(Duality, ComplementMonomialsOnAllConnectedGraphsUpTo5) {
  for (const auto& G : connected_simple_upto(5)) {
    ASSERT_TRUE(duality_check(G)) << G;
    const auto full = full_subset(G.n_edges()).bits;
    const auto Q = stanley_Q(G);
    const auto P = kirchhoff_P(G);
    for (const auto& [m, c] : P.terms()) EXPECT_EQ(Q.coefficient(EdgeSubset{full & ~m.bits}), c);
  }
}

TEST(Evaluate, Examples) {
  const auto F2 = make_field(2);
  const std::vector<FieldElem> ones(3, F2.one());
  EXPECT_EQ(evaluate(kirchhoff_P(cycle_graph(3)), F2, ones), F2.one());
  EXPECT_EQ(evaluate(stanley_Q(cycle_graph(3)), F2, ones), F2.one());
  const auto F5 = make_field(5);
  const auto P = kirchhoff_P(complete_graph(4));
  const std::vector<FieldElem> zeros(6, F5.zero());
  EXPECT_EQ(evaluate(P, F5, zeros), F5.zero());
  EXPECT_THROW(evaluate(P, F5, ones), LengthMismatch);
  const PolyEvaluator ev(P, F5);
  EXPECT_EQ(ev(zeros.data()), F5.zero());
}

TEST(MultilinearPoly, Arithmetic) {
  MultilinearPoly a(3), b(3);
  a.add_term(EdgeSubset{1}, 2);
  b.add_term(EdgeSubset{2}, -1);
  EXPECT_EQ((a * b).to_string(), "-2 * x_0x_1");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_EQ((a + b).degree(), 1);
  EXPECT_THROW(a * a, InternalError);
  EXPECT_THROW(a.add_term(EdgeSubset{8}, 1), BadArgs);
}

}  // namespace
}  // namespace gm
