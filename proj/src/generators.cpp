#include "cechrec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cechrec {

namespace {

constexpr double kFactTolerance = 1e-9;

void check_fact(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidArgument, "fixture fact does not match generated data: " + what);
}

std::vector<Index> iota_indices(std::size_t begin, std::size_t end) {
  std::vector<Index> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

Eigen::MatrixXd circle_points(int count, double phase_step_numerator) {
  Eigen::MatrixXd pts(count, 2);
  for (int i = 0; i < count; ++i) {
    const double angle = 2.0 * std::numbers::pi * (i + phase_step_numerator) / count;
    pts(i, 0) = std::cos(angle);
    pts(i, 1) = std::sin(angle);
  }
  return pts;
}

}  // namespace

Fixture two_point_space(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(Errc::InvalidArgument, "two-point distance must be positive");
  Eigen::MatrixXd coords(2, 1);
  coords << 0.0, eps;
  EuclideanCloud cloud(coords);
  auto space = cloud.to_metric();
  SubsetView all = SubsetView::all(space);
  SubsetView a(space, {0});
  Fixture f{"two_point", cloud, space, all, all, a, eps / 2.0, eps, {2, 0, 0}, 0};
  check_fact(std::abs(directed_hausdorff(f.x, f.a) - eps) <= kFactTolerance, "d_H(X,A) = d(x1,x2)");
  return f;
}

Fixture circle_sample(int q) {
  if (q < 3) throw Error(Errc::QTooSmall, "circle sample needs q >= 3, got " + std::to_string(q));
  // ξ^i at angle 2πi/q for i = 1..q, stored at index i−1.
  EuclideanCloud cloud(circle_points(q, 1.0));
  auto space = cloud.to_metric();
  SubsetView all = SubsetView::all(space);
  const double d_h = 2.0 * std::sin(std::numbers::pi / (2.0 * q));
  Fixture f{"circle_" + std::to_string(q), cloud, space, all, all, all, 1.0, d_h, {1, 1, 0}, 0};
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const int step = std::min((j - i + q) % q, (i - j + q) % q);
      const double expected = 2.0 * std::sin(step * std::numbers::pi / q);
      check_fact(std::abs((*space)(static_cast<Index>(i), static_cast<Index>(j)) - expected) <= kFactTolerance,
                 "d(xi^i, xi^(i+j)) = 2 sin(j pi/q)");
    }
  return f;
}

EuclideanCloud dense_circle_proxy(int m) {
  if (m < 100) throw Error(Errc::InvalidArgument, "dense circle proxy needs m >= 100");
  return EuclideanCloud(circle_points(m, 0.0));
}

Fixture circle_with_proxy(int q, int m) {
  Fixture sample = circle_sample(q);
  const EuclideanCloud proxy = dense_circle_proxy(m);
  Eigen::MatrixXd coords(m + q, 2);
  coords.topRows(m) = proxy.coords();
  coords.bottomRows(q) = sample.cloud->coords();
  EuclideanCloud cloud(coords);
  auto space = cloud.to_metric();
  SubsetView all = SubsetView::all(space);
  SubsetView a(space, iota_indices(static_cast<std::size_t>(m), static_cast<std::size_t>(m + q)));
  Fixture f{"circle_" + std::to_string(q) + "_proxy_" + std::to_string(m),
            cloud, space, all, all, a, 1.0, sample.d_h, {1, 1, 0}, 0};
  check_fact(directed_hausdorff(f.x, f.a) <= f.d_h + kFactTolerance, "proxy d_H is a lower bound");
  return f;
}

Fixture random_metric_instance(std::uint64_t seed, std::size_t n, RandomMethod method,
                               const RandomInstanceOptions& options) {
  if (n == 0 || n > options.n_cap)
    throw Error(Errc::InvalidArgument, "random instance size must be in 1.." + std::to_string(options.n_cap));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::optional<EuclideanCloud> cloud;
  std::shared_ptr<const FiniteMetricSpace> space;
  std::string name;
  if (method == RandomMethod::EuclideanUniformCube) {
    Eigen::MatrixXd coords(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(options.ambient_dim));
    for (Eigen::Index i = 0; i < coords.rows(); ++i)
      for (Eigen::Index j = 0; j < coords.cols(); ++j) coords(i, j) = unit(rng);
    cloud.emplace(coords);
    space = cloud->to_metric();
    name = "euclidean-uniform-cube";
  } else {
    Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < dist.rows(); ++i)
      for (Eigen::Index j = 0; j < i; ++j) dist(i, j) = dist(j, i) = 0.05 + unit(rng);
    space = std::make_shared<const FiniteMetricSpace>(dist);
    name = "random-symmetric-matrix";
  }
  std::vector<Index> order = iota_indices(0, n);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t x_size = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  const std::size_t a_size = std::uniform_int_distribution<std::size_t>(1, x_size)(rng);
  std::vector<Index> xi(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(x_size));
  std::vector<Index> ai(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(a_size));
  std::sort(xi.begin(), xi.end());
  std::sort(ai.begin(), ai.end());
  SubsetView all = SubsetView::all(space);
  SubsetView x(space, std::move(xi));
  SubsetView a(space, std::move(ai));
  const double d_h = directed_hausdorff(x, a);
  return Fixture{name + "-seed" + std::to_string(seed), cloud, space, all, x, a, std::nullopt, d_h, {}, seed};
}

}  // namespace cechrec
