#pragma once

#include <Eigen/Core>
#include <Eigen/QR>

#include <cmath>
#include <cstddef>
#include <limits>
#include <list>
#include <vector>

#include "cechrec/error.hpp"

namespace cechrec {

template <typename Scalar>
struct Ball {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> center;
  Scalar radius;
};

namespace detail {

template <typename Scalar>
using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Smallest ball with every support point on its boundary: the circumsphere of
// the support inside its affine hull.
template <typename Scalar>
Ball<Scalar> circumball(const std::vector<const Point<Scalar>*>& support, Eigen::Index dim) {
  if (support.empty()) return {Point<Scalar>::Zero(dim), Scalar(-1)};
  const Point<Scalar>& origin = *support.front();
  const auto m = static_cast<Eigen::Index>(support.size()) - 1;
  if (m == 0) return {origin, Scalar(0)};

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> edges(dim, m);
  for (Eigen::Index i = 0; i < m; ++i) edges.col(i) = *support[static_cast<std::size_t>(i + 1)] - origin;
  // center = origin + edges * lambda with 2 (E^T E) lambda = |e_i|^2
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram = Scalar(2) * edges.transpose() * edges;
  const Point<Scalar> rhs = edges.colwise().squaredNorm().transpose();
  const Point<Scalar> lambda = gram.colPivHouseholderQr().solve(rhs);
  Point<Scalar> offset = edges * lambda;
  Ball<Scalar> ball{origin + offset, Scalar(0)};
  using std::sqrt;
  for (const auto* p : support) ball.radius = std::max(ball.radius, sqrt((*p - ball.center).squaredNorm()));
  return ball;
}

template <typename Scalar>
bool outside(const Ball<Scalar>& ball, const Point<Scalar>& p) {
  if (ball.radius < Scalar(0)) return true;
  const Scalar r2 = ball.radius * ball.radius;
  const Scalar d2 = (p - ball.center).squaredNorm();
  const Scalar slack = Scalar(64) * std::numeric_limits<Scalar>::epsilon() * std::max(r2, p.squaredNorm());
  return d2 - r2 > slack;
}

// Welzl's move-to-front recursion.
template <typename Scalar>
Ball<Scalar> move_to_front(std::list<const Point<Scalar>*>& points,
                           typename std::list<const Point<Scalar>*>::iterator end,
                           std::vector<const Point<Scalar>*>& support, Eigen::Index dim) {
  Ball<Scalar> ball = circumball<Scalar>(support, dim);
  if (static_cast<Eigen::Index>(support.size()) == dim + 1) return ball;
  for (auto it = points.begin(); it != end;) {
    auto next = std::next(it);
    if (outside(ball, **it)) {
      support.push_back(*it);
      ball = move_to_front<Scalar>(points, it, support, dim);
      support.pop_back();
      points.splice(points.begin(), points, it);
    }
    it = next;
  }
  return ball;
}

}  // namespace detail

/// Smallest enclosing ball of the rows of `points`.
template <typename Derived>
Ball<typename Derived::Scalar> minimal_enclosing_ball(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  if (points.rows() == 0) throw Error(Errc::EmptyInput, "minimal enclosing ball of no points");
  const Eigen::Index dim = points.cols();
  std::vector<detail::Point<Scalar>> storage;
  storage.reserve(static_cast<std::size_t>(points.rows()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) storage.emplace_back(points.row(i).transpose());
  std::list<const detail::Point<Scalar>*> order;
  for (const auto& p : storage) order.push_back(&p);
  std::vector<const detail::Point<Scalar>*> support;
  return detail::move_to_front<Scalar>(order, order.end(), support, dim);
}

template <typename Derived>
typename Derived::Scalar miniball_radius(const Eigen::MatrixBase<Derived>& points) {
  return minimal_enclosing_ball(points).radius;
}

}  // namespace cechrec
