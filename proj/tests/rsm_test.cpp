// Copyright 2026 The rsmc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsmc/rsm.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "rsmc/errors.hpp"
#include "rsmc/laplacian.hpp"
#include "support/oracles.hpp"

namespace rsmc {
namespace {

using testing::kInf;
using testing::Rng;

Eigen::Index ix(std::size_t v) { return static_cast<Eigen::Index>(v); }

void expect_matrix_near(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                        double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (std::isinf(a(i, j)) || std::isinf(b(i, j))) {
        EXPECT_EQ(a(i, j), b(i, j)) << "at (" << i << "," << j << ")";
      } else {
        EXPECT_NEAR(a(i, j), b(i, j), tol) << "at (" << i << "," << j << ")";
      }
    }
  }
}

// --- shortest distance -------------------------------------------------------

TEST(SdfMatrixTest, PathOfTwoUnitEdges) {
  RsmMatrix m = sdf_matrix(testing::path_graph(3));
  EXPECT_EQ(m(0, 2), 2.0);
  EXPECT_EQ(m(2, 0), 2.0);
  EXPECT_EQ(m(1, 1), 0.0);
  EXPECT_EQ(m.source, RsmSource::kSdf);
}

TEST(SdfMatrixTest, DirectedUnreachableIsInfinite) {
  RsmMatrix m = sdf_matrix(Graph(2, {{0, 1, 1.0}}, true));
  EXPECT_EQ(m(0, 1), 1.0);
  EXPECT_EQ(m(1, 0), kInf);
}

TEST(SdfMatrixTest, MatchesFloydWarshallOnRandomDirectedGraphs) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_graph(rng, 8, 0.3, true, 0.1, 5.0);
    expect_matrix_near(sdf_matrix(g).values, testing::floyd_warshall(g), 1e-12);
  }
}

TEST(SdfMatrixTest, SymmetricForUndirectedGraphs) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_graph(rng, 10, 0.25, false, 0.5, 3.0);
    RsmMatrix m = sdf_matrix(g);
    EXPECT_TRUE(m.values == m.values.transpose());
  }
}

// --- Laplacian and pseudoinverse ---------------------------------------------

TEST(LaplacianTest, MatchesReferenceAssembly) {
  Rng rng(23);
  Graph g = testing::random_connected_graph(rng, 9, 0.3, 0.5, 4.0);
  expect_matrix_near(laplacian<double>(g), testing::reference_laplacian(g),
                     1e-15);
}

TEST(LaplacianPseudoinverseTest, SingleEdge) {
  // Eigendecomposition: the only nonzero eigenvalue of [[1,-1],[-1,1]] is 2
  // with eigenvector (1,-1)/sqrt(2), so L+ = (1/2) * (1/2) [[1,-1],[-1,1]].
  Eigen::MatrixXd expected(2, 2);
  expected << 0.25, -0.25, -0.25, 0.25;
  Graph edge(2, {{0, 1, 1.0}}, false);
  expect_matrix_near(laplacian_pseudoinverse(edge), expected, 1e-15);
  expect_matrix_near(
      testing::eigen_pseudoinverse(testing::reference_laplacian(edge)),
      expected, 1e-15);
}

TEST(LaplacianPseudoinverseTest, ResidualAndOracleAgreement) {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 9;
    Graph g = testing::random_connected_graph(rng, n, 0.3);
    Eigen::MatrixXd L = laplacian<double>(g);
    Eigen::MatrixXd pinv = laplacian_pseudoinverse(g);
    EXPECT_LE(generalized_inverse_residual(L, pinv), 1e-9);
    EXPECT_TRUE(pinv.isApprox(pinv.transpose(), 0.0));
    // Row sums vanish: 1 spans the kernel of L and L+ shares it.
    EXPECT_LE(pinv.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
    expect_matrix_near(pinv, testing::eigen_pseudoinverse(L), 1e-10);
  }
}

TEST(LaplacianPseudoinverseTest, SingleVertex) {
  Eigen::MatrixXd p = laplacian_pseudoinverse(Graph(1, {}, false));
  ASSERT_EQ(p.rows(), 1);
  EXPECT_NEAR(p(0, 0), 0.0, 1e-15);
}

TEST(LaplacianPseudoinverseTest, RejectsDisconnectedAndDirected) {
  EXPECT_THROW(laplacian_pseudoinverse(Graph(3, {{0, 1, 1.0}}, false)),
               SingularityError);
  EXPECT_THROW(laplacian_pseudoinverse(Graph(2, {{0, 1, 1.0}}, true)),
               DirectedInputError);
  // The factorization itself also catches a disconnected Laplacian.
  Eigen::MatrixXd L = laplacian<double>(Graph(4, {{0, 1, 1.0}, {2, 3, 1.0}},
                                              false));
  EXPECT_THROW(connected_laplacian_pseudoinverse(L), SingularityError);
}

TEST(LaplacianPseudoinverseTest, WorksInSinglePrecision) {
  Eigen::MatrixXf L = laplacian<float>(testing::complete_graph(4));
  Eigen::MatrixXf pinv = connected_laplacian_pseudoinverse(L);
  Eigen::MatrixXf R = resistance_from_pseudoinverse(pinv);
  EXPECT_NEAR(R(0, 3), 0.5f, 1e-5f);
}

// --- effective resistance ----------------------------------------------------

TEST(ErfMatrixTest, ClosedForms) {
  EXPECT_NEAR(erf_matrix(testing::path_graph(3))(0, 2), 2.0, 1e-12);

  RsmMatrix tri = erf_matrix(testing::complete_graph(3));
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 0; v < 3; ++v) {
      if (u != v) EXPECT_NEAR(tri(u, v), 2.0 / 3.0, 1e-12);
    }
  }
}

TEST(ErfMatrixTest, CompleteGraphK4) {
  Graph k4 = testing::complete_graph(4);
  // Oracle: eigendecomposition pseudoinverse. Eigenvalues of L(K4) are
  // {0, 4, 4, 4}, so L+ = (1/4)(I - J/4) and R = 2 * (1/4) = 0.5.
  Eigen::MatrixXd oracle = testing::reference_resistance(k4);
  Eigen::MatrixXd L = testing::reference_laplacian(k4);
  EXPECT_LE((L * testing::eigen_pseudoinverse(L) * L - L).cwiseAbs().maxCoeff(),
            1e-12);
  RsmMatrix m = erf_matrix(k4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u == v) continue;
      EXPECT_NEAR(oracle(ix(u), ix(v)), 0.5, 1e-12);
      EXPECT_NEAR(m(u, v), 0.5, 1e-12);
    }
  }
}

TEST(ErfMatrixTest, SeriesResistorsAddWithWeights) {
  Graph g(3, {{0, 1, 2.0}, {1, 2, 3.5}}, false);
  EXPECT_NEAR(erf_matrix(g)(0, 2), 5.5, 1e-12);
}

TEST(ErfMatrixTest, ParallelResistors) {
  // 0-1 direct (1 ohm) in parallel with 0-2-1 (2 + 2 ohms): 1*4/(1+4).
  Graph g(3, {{0, 1, 1.0}, {0, 2, 2.0}, {2, 1, 2.0}}, false);
  EXPECT_NEAR(erf_matrix(g)(0, 1), 0.8, 1e-12);
}

TEST(ErfMatrixTest, DisconnectedPairsAreInfinite) {
  Graph g(5, {{0, 1, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}}, false);
  RsmMatrix m = erf_matrix(g);
  EXPECT_EQ(m(0, 2), kInf);
  EXPECT_EQ(m(4, 1), kInf);
  EXPECT_NEAR(m(2, 4), 2.0, 1e-12);
  EXPECT_EQ(m(3, 3), 0.0);
}

TEST(ErfMatrixTest, RejectsDirectedGraphs) {
  EXPECT_THROW(erf_matrix(Graph(2, {{0, 1, 1.0}}, true)), DirectedInputError);
}

TEST(ErfMatrixTest, MatchesEigendecompositionOracle) {
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_graph(rng, 3 + trial % 10, 0.3, false, 0.2, 5.0);
    expect_matrix_near(erf_matrix(g).values, testing::reference_resistance(g),
                       1e-9);
  }
}

TEST(ErfMatrixTest, DominatedByShortestDistance) {
  Rng rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_connected_graph(rng, 2 + trial % 11, 0.25);
    Eigen::MatrixXd R = testing::reference_resistance(g);
    Eigen::MatrixXd D = testing::floyd_warshall(g);
    RsmMatrix erf = erf_matrix(g);
    RsmMatrix sdf = sdf_matrix(g);
    EXPECT_TRUE(((R - D).array() <= 1e-9).all());
    EXPECT_TRUE(((erf.values - sdf.values).array() <= 1e-9).all());
  }
}

TEST(ErfMatrixTest, CutVertexAdditivityOnBarbells) {
  Rng rng(27);
  for (int trial = 0; trial < 30; ++trial) {
    auto bb = testing::random_barbell(rng, 2 + trial % 5, 2 + trial % 6, 0.4,
                                      0.5, 2.0);
    RsmMatrix m = erf_matrix(bb.graph);
    for (Vertex a : bb.left) {
      for (Vertex b : bb.right) {
        EXPECT_NEAR(m(a, b), m(a, bb.joint) + m(bb.joint, b), 1e-8);
      }
    }
  }
}

// --- validation --------------------------------------------------------------

TEST(ValidateRsmTest, SdfOfRandomConnectedGraphsPasses) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_connected_graph(rng, 2 + trial % 11, 0.2, 0.5, 3.0);
    RsmValidationReport report = validate_rsm(sdf_matrix(g), g, 1e-8);
    EXPECT_TRUE(report.passed());
    EXPECT_TRUE(report.violations.empty());
    EXPECT_EQ(report.property(5), PropertyStatus::kNotChecked);
    EXPECT_EQ(report.property(6), PropertyStatus::kPass);
  }
}

TEST(ValidateRsmTest, NegativeEntryFailsNonNegativity) {
  Graph g = testing::complete_graph(4);
  RsmMatrix m = sdf_matrix(g);
  m.values(1, 2) = -0.1;
  RsmValidationReport report = validate_rsm(m, g, 1e-8);
  EXPECT_EQ(report.property(1), PropertyStatus::kFail);
  bool listed = false;
  for (const auto& v : report.violations) {
    if (v.property == 1 && v.u == 1 && v.v == 2) {
      listed = true;
      EXPECT_DOUBLE_EQ(v.magnitude, -0.1);
    }
  }
  EXPECT_TRUE(listed);
  EXPECT_FALSE(report.passed());
}

TEST(ValidateRsmTest, NonzeroDiagonalFailsCoincidence) {
  Graph g = testing::complete_graph(5);
  RsmMatrix m = sdf_matrix(g);
  m.values(3, 3) = 0.5;
  RsmValidationReport report = validate_rsm(m, g, 1e-8);
  EXPECT_EQ(report.property(2), PropertyStatus::kFail);
  EXPECT_EQ(report.property(1), PropertyStatus::kPass);
}

TEST(ValidateRsmTest, ZeroOffDiagonalFailsCoincidence) {
  Graph g = testing::path_graph(3);
  RsmMatrix m = sdf_matrix(g);
  m.values(0, 1) = m.values(1, 0) = 0.0;
  EXPECT_EQ(validate_rsm(m, g).property(2), PropertyStatus::kFail);
}

TEST(ValidateRsmTest, InfinityPatternMustMatchConnectivity) {
  Graph g(3, {{0, 1, 1.0}}, false);
  RsmMatrix m = sdf_matrix(g);
  EXPECT_TRUE(validate_rsm(m, g).passed());
  m.values(0, 2) = m.values(2, 0) = 7.0;  // finite across components
  EXPECT_EQ(validate_rsm(m, g).property(3), PropertyStatus::kFail);
  m = sdf_matrix(g);
  m.values(0, 1) = m.values(1, 0) = kInf;  // infinite inside a component
  EXPECT_EQ(validate_rsm(m, g).property(3), PropertyStatus::kFail);
}

TEST(ValidateRsmTest, DetectsTriangleViolation) {
  Graph g = testing::complete_graph(3);
  RsmMatrix m = sdf_matrix(g);
  m.values(0, 2) = m.values(2, 0) = 5.0;  // > 1 + 1
  RsmValidationReport report = validate_rsm(m, g);
  EXPECT_EQ(report.property(4), PropertyStatus::kFail);
  EXPECT_EQ(report.property(6), PropertyStatus::kPass);
}

TEST(ValidateRsmTest, DetectsCutVertexInequality) {
  // Path 0-1-2: vertex 1 separates 0 and 2, so g(0,2) must equal 2 exactly.
  Graph g = testing::path_graph(3);
  RsmMatrix m = sdf_matrix(g);
  m.values(0, 2) = m.values(2, 0) = 1.5;  // triangle holds, equality does not
  RsmValidationReport report = validate_rsm(m, g);
  EXPECT_EQ(report.property(4), PropertyStatus::kFail);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations.front().via, std::optional<Vertex>(1));
}

TEST(ValidateRsmTest, DetectsAsymmetryOnUndirectedGraph) {
  Graph g = testing::complete_graph(3);
  RsmMatrix m = sdf_matrix(g);
  m.values(0, 1) = 1.5;
  EXPECT_EQ(validate_rsm(m, g).property(6), PropertyStatus::kFail);
}

TEST(ValidateRsmTest, DirectedGraphsUseDirectedReachability) {
  Graph g(3, {{0, 1, 1.0}, {1, 2, 2.0}}, true);
  RsmValidationReport report = validate_rsm(sdf_matrix(g), g);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.property(6), PropertyStatus::kNotChecked);
}

TEST(ValidateRsmTest, DimensionMismatch) {
  EXPECT_THROW(validate_rsm(sdf_matrix(testing::path_graph(3)),
                            testing::path_graph(4)),
               DimensionMismatchError);
}

TEST(ValidateRsmTest, GeneratedMatricesPassOnMixedRandomGraphs) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 12;
    Graph g = trial % 2 == 0
                  ? testing::random_connected_graph(rng, n, 0.2, 0.3, 4.0)
                  : testing::random_graph(rng, n, 0.2, false, 0.3, 4.0);
    EXPECT_TRUE(validate_rsm(sdf_matrix(g), g, 1e-8).passed()) << trial;
    EXPECT_TRUE(validate_rsm(erf_matrix(g), g, 1e-8).passed()) << trial;
  }
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 12, 0.25, true, 0.3, 4.0);
    EXPECT_TRUE(validate_rsm(sdf_matrix(g), g, 1e-8).passed()) << trial;
  }
}

TEST(ValidateRsmTest, SdfEqualityThroughTreeVertices) {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 10;
    Graph tree = testing::random_tree(rng, n, 0.5, 2.0);
    RsmMatrix d = sdf_matrix(tree);
    const Eigen::MatrixXd fw = testing::floyd_warshall(tree);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = 0; w < n; ++w) {
          // w lies on the unique u-v path iff the triangle is tight in the
          // oracle distances.
          if (std::abs(fw(ix(u), ix(v)) - fw(ix(u), ix(w)) - fw(ix(w), ix(v))) <
              1e-12) {
            EXPECT_NEAR(d(u, v), d(u, w) + d(w, v), 1e-12);
          }
        }
      }
    }
  }
}

TEST(ValidateRsmTest, GraphFreeVariant) {
  RsmMatrix m{Eigen::MatrixXd(3, 3), RsmSource::kSimilarity};
  m.values << 0, 1, 2, 1, 0, 1, 2, 1, 0;
  EXPECT_TRUE(validate_rsm(m, 1e-12, true).passed());
  m.values(0, 2) = kInf;
  EXPECT_EQ(validate_rsm(m, 1e-12, false).property(3), PropertyStatus::kFail);
}

// --- scaling -----------------------------------------------------------------

TEST(CheckScalingTest, Examples) {
  Rng rng(41);
  Graph g = testing::random_connected_graph(rng, 8, 0.3, 0.5, 2.0);
  EXPECT_TRUE(check_scaling(sdf_matrix(g), sdf_matrix(g.scaled(2.0)), 2.0));
  EXPECT_TRUE(check_scaling(erf_matrix(g), erf_matrix(g.scaled(3.0)), 3.0));
  EXPECT_FALSE(check_scaling(sdf_matrix(g), sdf_matrix(g.scaled(2.0)), 1.0));
}

TEST(CheckScalingTest, ErfScalesLinearlyWithWeights) {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(rng, 2 + trial % 10, 0.35, false, 0.2, 3.0);
    for (double alpha : {0.5, 2.0, 10.0}) {
      EXPECT_TRUE(check_scaling(erf_matrix(g), erf_matrix(g.scaled(alpha)),
                                alpha, 1e-8));
      EXPECT_TRUE(check_scaling(sdf_matrix(g), sdf_matrix(g.scaled(alpha)),
                                alpha, 1e-8));
    }
  }
}

TEST(CheckScalingTest, InfinityPatternMustAgree) {
  Graph g(3, {{0, 1, 1.0}}, false);
  RsmMatrix a = sdf_matrix(g);
  RsmMatrix b = a.scaled(2.0);
  EXPECT_TRUE(check_scaling(a, b, 2.0));
  b.values(0, 2) = 4.0;
  EXPECT_FALSE(check_scaling(a, b, 2.0));
}

TEST(CheckScalingTest, DimensionMismatch) {
  EXPECT_THROW(check_scaling(sdf_matrix(testing::path_graph(2)),
                             sdf_matrix(testing::path_graph(3)), 1.0),
               DimensionMismatchError);
}

TEST(RsmSourceTest, NamesRoundTrip) {
  for (RsmSource s : {RsmSource::kSdf, RsmSource::kErf, RsmSource::kSimilarity,
                      RsmSource::kExternal}) {
    EXPECT_EQ(parse_rsm_source(to_string(s)), s);
  }
  EXPECT_THROW(parse_rsm_source("modularity"), InputError);
}

}  // namespace
}  // namespace rsmc
