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

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "rsmc/errors.hpp"
#include "rsmc/graph.hpp"

namespace rsmc {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Weighted Laplacian L = D - A of an undirected graph viewed as a resistor
// network: an edge of weight w is a resistor of w ohms, i.e. conductance 1/w.
// Unit weights give the combinatorial Laplacian.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const Graph& g) {
  if (g.directed()) {
    throw DirectedInputError("Laplacian requires an undirected graph");
  }
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  DenseMatrix<Scalar> L = DenseMatrix<Scalar>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.source);
    const auto v = static_cast<Eigen::Index>(e.target);
    const Scalar c = Scalar(1) / static_cast<Scalar>(e.weight);
    L(u, u) += c;
    L(v, v) += c;
    L(u, v) -= c;
    L(v, u) -= c;
  }
  return L;
}

// Generalized inverse of the Laplacian of a connected graph through
//   L+ = (L + J/n)^-1 - J/n,   J the all-ones matrix.
// Shifting by J/n lifts the single zero eigenvalue (eigenvector 1/sqrt(n)) to
// one and leaves the rest of the spectrum untouched, so the result is the
// Moore-Penrose inverse. Throws SingularityError if the shifted matrix is not
// positive definite, which means the graph was not connected.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> connected_laplacian_pseudoinverse(
    const Eigen::MatrixBase<Derived>& L) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = L.rows();
  if (n == 0) return DenseMatrix<Scalar>(0, 0);
  const Scalar shift = Scalar(1) / static_cast<Scalar>(n);
  DenseMatrix<Scalar> shifted = L;
  shifted.array() += shift;

  Eigen::LDLT<DenseMatrix<Scalar>> ldlt(shifted);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw SingularityError("L + J/n is not positive definite");
  }
  const auto d = ldlt.vectorD();
  const Scalar dmax = d.cwiseAbs().maxCoeff();
  const Scalar floor = dmax * static_cast<Scalar>(n) *
                       std::numeric_limits<Scalar>::epsilon() * Scalar(16);
  if (d.minCoeff() <= floor) {
    throw SingularityError("L + J/n is numerically singular (pivot " +
                           std::to_string(static_cast<double>(d.minCoeff())) +
                           ")");
  }
  DenseMatrix<Scalar> inv =
      ldlt.solve(DenseMatrix<Scalar>::Identity(n, n));
  inv.array() -= shift;
  // Symmetrize away round-off from the triangular solves.
  return (inv + inv.transpose()) * Scalar(0.5);
}

// max |L L+ L - L|.
template <typename DerivedL, typename DerivedP>
typename DerivedL::Scalar generalized_inverse_residual(
    const Eigen::MatrixBase<DerivedL>& L,
    const Eigen::MatrixBase<DerivedP>& pinv) {
  if (L.size() == 0) return 0;
  return (L * pinv * L - L).cwiseAbs().maxCoeff();
}

// R(i,j) = L+(i,i) + L+(j,j) - 2 L+(i,j).
template <typename Derived>
DenseMatrix<typename Derived::Scalar> resistance_from_pseudoinverse(
    const Eigen::MatrixBase<Derived>& pinv) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = pinv.rows();
  const auto diag = pinv.diagonal();
  DenseMatrix<Scalar> R =
      diag.replicate(1, n) + diag.transpose().replicate(n, 1) -
      Scalar(2) * pinv;
  R.diagonal().setZero();
  return R;
}

}  // namespace rsmc
