#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cechrec/error.hpp"

namespace cechrec {

using Index = std::size_t;

inline constexpr double kDefaultEta = 1e-9;

/// A finite (pseudo-)metric space given by its distance matrix.
///
/// The matrix is validated on construction: square, finite, nonnegative,
/// zero diagonal, symmetric up to `eta`. Entries that differ from their
/// transpose by at most `eta` are replaced by the lower-triangle value so the
/// stored matrix is exactly symmetric. Distinct points at distance zero are
/// allowed. The triangle inequality is not required; see
/// `triangle_violation`.
class FiniteMetricSpace {
 public:
  explicit FiniteMetricSpace(Eigen::MatrixXd dist, double eta = kDefaultEta);

  Index size() const noexcept { return static_cast<Index>(dist_.rows()); }
  double operator()(Index i, Index j) const { return dist_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
  const Eigen::MatrixXd& matrix() const noexcept { return dist_; }

  /// First triple (i, j, k) with d(i,k) > d(i,j) + d(j,k) + eta, if any.
  std::optional<std::array<Index, 3>> triangle_violation(double eta = kDefaultEta) const;

 private:
  Eigen::MatrixXd dist_;
};

/// Points in R^n, one per row of `coords`.
class EuclideanCloud {
 public:
  explicit EuclideanCloud(Eigen::MatrixXd coords);

  Index size() const noexcept { return static_cast<Index>(coords_.rows()); }
  Index ambient_dim() const noexcept { return static_cast<Index>(coords_.cols()); }
  const Eigen::MatrixXd& coords() const noexcept { return coords_; }
  auto point(Index i) const { return coords_.row(static_cast<Eigen::Index>(i)); }

  /// Rows `indices` of this cloud, in the given order.
  EuclideanCloud select(std::span<const Index> indices) const;

  std::shared_ptr<const FiniteMetricSpace> to_metric() const;

 private:
  Eigen::MatrixXd coords_;
};

/// A subset of a shared parent space, as a strictly increasing list of parent
/// indices. Views of views resolve to parent indices.
class SubsetView {
 public:
  SubsetView(std::shared_ptr<const FiniteMetricSpace> parent, std::vector<Index> indices);

  static SubsetView all(std::shared_ptr<const FiniteMetricSpace> parent);

  /// The sub-view made of the points at `positions` of this view.
  SubsetView subset(std::span<const Index> positions) const;

  const FiniteMetricSpace& parent() const noexcept { return *parent_; }
  const std::shared_ptr<const FiniteMetricSpace>& parent_ptr() const noexcept { return parent_; }
  std::span<const Index> indices() const noexcept { return indices_; }
  Index size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  Index operator[](Index position) const { return indices_[position]; }

  bool contains(Index parent_index) const;
  std::optional<Index> position_of(Index parent_index) const;
  bool same_parent(const SubsetView& other) const noexcept { return parent_ == other.parent_; }
  bool is_subset_of(const SubsetView& other) const;

  double dist(Index a, Index b) const { return (*parent_)(a, b); }

  friend bool operator==(const SubsetView& a, const SubsetView& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }

 private:
  std::shared_ptr<const FiniteMetricSpace> parent_;
  std::vector<Index> indices_;
};

/// A total map from the points of `source` to points of `target`.
class VertexMap {
 public:
  /// `image[i]` is the parent index assigned to `source[i]`.
  VertexMap(SubsetView source, SubsetView target, std::vector<Index> image);

  static VertexMap identity(const SubsetView& view);
  /// Inclusion of `source` into a superset `target`.
  static VertexMap inclusion(const SubsetView& source, const SubsetView& target);

  const SubsetView& source() const noexcept { return source_; }
  const SubsetView& target() const noexcept { return target_; }
  std::span<const Index> image() const noexcept { return image_; }

  /// Image of a parent index; throws VertexMapNotTotal outside the source.
  Index operator()(Index parent_index) const;
  bool defined_at(Index parent_index) const { return source_.contains(parent_index); }

  /// g ∘ f, where f = *this. Requires f's target to lie in g's source.
  VertexMap then(const VertexMap& g) const;

 private:
  SubsetView source_;
  SubsetView target_;
  std::vector<Index> image_;
};

/// max_{x in X} min_{a in A} d(x, a).
double directed_hausdorff(const SubsetView& x, const SubsetView& a);

/// True iff every point of X lies within (closed) distance s of A.
bool is_s_approximation(const SubsetView& a, const SubsetView& x, double s);

/// A nearest-point projection Π : X → A with Π|_A = Id_A. Ties go to the
/// smallest parent index.
VertexMap projection_map(const SubsetView& x, const SubsetView& a);

/// Directed Hausdorff distance between two raw point sets (one point per row),
/// without materialising a distance matrix.
template <typename DerivedX, typename DerivedA>
typename DerivedX::Scalar directed_hausdorff(const Eigen::MatrixBase<DerivedX>& x_points,
                                             const Eigen::MatrixBase<DerivedA>& a_points) {
  using Scalar = typename DerivedX::Scalar;
  if (a_points.rows() == 0) throw Error(Errc::EmptySample, "sample point set is empty");
  if (x_points.rows() > 0 && x_points.cols() != a_points.cols())
    throw Error(Errc::InvalidArgument, "point sets have different ambient dimensions");
  Scalar worst(0);
  for (Eigen::Index i = 0; i < x_points.rows(); ++i) {
    const Scalar nearest =
        (a_points.rowwise() - x_points.row(i)).rowwise().squaredNorm().minCoeff();
    worst = std::max(worst, nearest);
  }
  using std::sqrt;
  return sqrt(worst);
}

}  // namespace cechrec
