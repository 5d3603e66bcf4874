#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cechrec/metric.hpp"

namespace cechrec {

/// A test instance with known ground truth: nested subsets A ⊆ X ⊆ M of one
/// parent space, plus the analytic facts that go with it.
struct Fixture {
  std::string name;
  std::optional<EuclideanCloud> cloud;
  std::shared_ptr<const FiniteMetricSpace> space;
  SubsetView m;
  SubsetView x;
  SubsetView a;
  /// Reach of the underlying space, when known.
  std::optional<double> tau;
  /// d_H(X, A) of the underlying (possibly infinite) space.
  double d_h;
  std::vector<std::size_t> expected_betti;
  std::uint64_t seed = 0;
};

/// X = {x1, x2} ⊂ R with d(x1, x2) = eps, A = {x1}, M = X; τ = eps/2.
Fixture two_point_space(double eps);

/// The q-th roots of unity ξ^1..ξ^q on the unit circle; ξ^i at angle 2πi/q is
/// stored at index i−1. A = X = M = all points; τ = 1, d_H(S¹, A_q) =
/// 2 sin(π/(2q)), expected Betti numbers [1, 1, 0].
Fixture circle_sample(int q);

/// m equally spaced unit-circle points starting at angle 0: a finite stand-in
/// for S¹. Its d_H against any sample is a lower bound for the true value.
EuclideanCloud dense_circle_proxy(int m);

/// Proxy points (indices 0..m−1) followed by A_q (indices m..m+q−1) in one
/// parent space; X = M = everything, A = the q roots.
Fixture circle_with_proxy(int q, int m);

enum class RandomMethod { EuclideanUniformCube, RandomSymmetricMatrix };

struct RandomInstanceOptions {
  std::size_t n_cap = 15;
  std::size_t ambient_dim = 2;
};

/// Reproducible random instance with n points. The symmetric-matrix mode
/// has zero diagonal and symmetric entries but does not enforce the triangle
/// inequality. A and X are seeded random nested subsets; M is everything.
Fixture random_metric_instance(std::uint64_t seed, std::size_t n, RandomMethod method,
                               const RandomInstanceOptions& options = {});

}  // namespace cechrec
