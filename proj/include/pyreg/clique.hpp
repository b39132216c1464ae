#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pyreg/affinity.hpp"

namespace pyreg {

/// Controls for the relaxed densest-clique solver.
struct SolverParams {
  /// Penalty homotopy rounds (each round raises d and re-runs the ascent).
  int max_outer_iters = 200;
  /// Ascent steps per homotopy round.
  int max_inner_iters = 200;
  /// Convergence threshold on ||x_next - x|| within one round.
  double x_tolerance = 1e-8;
  /// A zero-affinity pair (i, j) counts as violated while x_i*x_j exceeds
  /// this; the homotopy terminates when no pair is violated.
  double violation_tolerance = 1e-6;
  /// Relative margin applied on top of the minimum penalty that makes the
  /// gradient repel the most-violated pair.
  double d_margin = 0.1;

  void validate() const;
};

/// Stationary point of F(x) = x^T W_d x over {x >= 0, ||x|| <= 1} together
/// with the final penalty d that produced it.
struct AscentResult {
  Eigen::VectorXd x;
  double penalty = 0.0;
  int inner_iterations = 0;
  bool converged = true;
};

/// Rounded solution for one consistency graph.
struct CliqueSolution {
  Eigen::VectorXd x;        // relaxed indicator, x >= 0, ||x|| <= 1
  std::vector<int> clique;  // sorted vertex ids, pairwise connected in W
  double density = 0.0;     // equals |clique| on binary graphs
  double epsilon = 0.0;     // threshold of the layer that produced it
  int inner_iterations = 0;
  bool converged = true;

  bool empty() const { return clique.empty(); }
};

/// Maximize x^T W_d x over the nonnegative unit ball by projected gradient
/// ascent with backtracking line search, while growing the penalty d from 0
/// until every zero-affinity pair is deactivated. A run that exhausts
/// max_outer_iters returns the best iterate with converged = false.
AscentResult projected_gradient_ascent(const AffinityMatrix& affinity,
                                       const Eigen::VectorXd& x0,
                                       const SolverParams& params = {});

/// Round the relaxed solution: omega = round(x^T W_d x), keep the omega
/// largest entries of x (ties to the lower index), then repair by dropping
/// the smallest-x member until the set is pairwise connected in W. Throws
/// Error(empty_clique) when omega < 1.
CliqueSolution round_clique(const AscentResult& ascent,
                            const AffinityMatrix& affinity);

/// Solve every pyramid layer sparse-to-dense, warm-starting each layer with
/// the previous layer's relaxed solution. Layer 1 starts from a seeded
/// uniform-random positive vector. A layer that fails yields an empty
/// CliqueSolution and the next layer restarts from a fresh random vector.
std::vector<CliqueSolution> cascaded_solve(const PyramidGraph& pyramid,
                                           const SolverParams& params,
                                           std::uint64_t seed);

/// Seeded uniform-random positive start vector of unit norm.
Eigen::VectorXd random_start(int n, std::uint64_t seed);

}  // namespace pyreg
