#include "cechrec/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cechrec {

FiniteMetricSpace::FiniteMetricSpace(Eigen::MatrixXd dist, double eta) : dist_(std::move(dist)) {
  if (dist_.rows() != dist_.cols())
    throw Error(Errc::InvalidArgument, "distance matrix is not square (" + std::to_string(dist_.rows()) +
                                           "x" + std::to_string(dist_.cols()) + ")");
  const Eigen::Index n = dist_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = dist_(i, j);
      if (!std::isfinite(v) || v < 0.0)
        throw Error(Errc::InvalidArgument, "distance (" + std::to_string(i) + "," + std::to_string(j) +
                                               ") is negative or not finite");
    }
    if (std::abs(dist_(i, i)) > eta)
      throw Error(Errc::InvalidArgument, "nonzero diagonal entry at " + std::to_string(i));
    dist_(i, i) = 0.0;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(dist_(i, j) - dist_(j, i)) > eta)
        throw Error(Errc::InvalidArgument,
                    "distance matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      dist_(j, i) = dist_(i, j);
    }
  }
}

std::optional<std::array<Index, 3>> FiniteMetricSpace::triangle_violation(double eta) const {
  const Index n = size();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k) + eta) return std::array<Index, 3>{i, j, k};
  return std::nullopt;
}

EuclideanCloud::EuclideanCloud(Eigen::MatrixXd coords) : coords_(std::move(coords)) {
  if (coords_.rows() > 0 && coords_.cols() == 0)
    throw Error(Errc::InvalidArgument, "point cloud has zero ambient dimension");
  if (!coords_.allFinite()) throw Error(Errc::InvalidArgument, "point cloud has non-finite coordinates");
}

EuclideanCloud EuclideanCloud::select(std::span<const Index> indices) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(indices.size()), coords_.cols());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= size()) throw Error(Errc::InvalidArgument, "point index out of range");
    out.row(static_cast<Eigen::Index>(r)) = coords_.row(static_cast<Eigen::Index>(indices[r]));
  }
  return EuclideanCloud(std::move(out));
}

std::shared_ptr<const FiniteMetricSpace> EuclideanCloud::to_metric() const {
  const Eigen::Index n = coords_.rows();
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) dist(i, j) = dist(j, i) = (coords_.row(i) - coords_.row(j)).norm();
  return std::make_shared<const FiniteMetricSpace>(std::move(dist));
}

SubsetView::SubsetView(std::shared_ptr<const FiniteMetricSpace> parent, std::vector<Index> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
  if (!parent_) throw Error(Errc::InvalidArgument, "subset view without a parent space");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= parent_->size())
      throw Error(Errc::InvalidArgument, "subset index " + std::to_string(indices_[i]) + " out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw Error(Errc::InvalidArgument, "subset indices must be strictly increasing");
  }
}

SubsetView SubsetView::all(std::shared_ptr<const FiniteMetricSpace> parent) {
  if (!parent) throw Error(Errc::InvalidArgument, "subset view without a parent space");
  std::vector<Index> indices(parent->size());
  for (Index i = 0; i < indices.size(); ++i) indices[i] = i;
  return SubsetView(std::move(parent), std::move(indices));
}

SubsetView SubsetView::subset(std::span<const Index> positions) const {
  std::vector<Index> resolved;
  resolved.reserve(positions.size());
  for (Index p : positions) {
    if (p >= indices_.size()) throw Error(Errc::InvalidArgument, "subset position out of range");
    resolved.push_back(indices_[p]);
  }
  std::sort(resolved.begin(), resolved.end());
  if (std::adjacent_find(resolved.begin(), resolved.end()) != resolved.end())
    throw Error(Errc::InvalidArgument, "duplicate subset positions");
  return SubsetView(parent_, std::move(resolved));
}

bool SubsetView::contains(Index parent_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), parent_index);
}

std::optional<Index> SubsetView::position_of(Index parent_index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), parent_index);
  if (it == indices_.end() || *it != parent_index) return std::nullopt;
  return static_cast<Index>(it - indices_.begin());
}

bool SubsetView::is_subset_of(const SubsetView& other) const {
  return same_parent(other) && std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                                             indices_.end());
}

VertexMap::VertexMap(SubsetView source, SubsetView target, std::vector<Index> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_.same_parent(target_))
    throw Error(Errc::InvalidArgument, "vertex map between different parent spaces");
  if (image_.size() != source_.size())
    throw Error(Errc::VertexMapNotTotal, "vertex map must assign exactly one image per source point");
  for (Index v : image_)
    if (!target_.contains(v))
      throw Error(Errc::InvalidArgument, "vertex map image " + std::to_string(v) + " not in target");
}

VertexMap VertexMap::identity(const SubsetView& view) {
  return VertexMap(view, view, std::vector<Index>(view.indices().begin(), view.indices().end()));
}

VertexMap VertexMap::inclusion(const SubsetView& source, const SubsetView& target) {
  if (!source.is_subset_of(target)) throw Error(Errc::NotASubset, "inclusion source is not a subset of target");
  return VertexMap(source, target, std::vector<Index>(source.indices().begin(), source.indices().end()));
}

Index VertexMap::operator()(Index parent_index) const {
  auto pos = source_.position_of(parent_index);
  if (!pos) throw Error(Errc::VertexMapNotTotal, "vertex " + std::to_string(parent_index) + " has no image");
  return image_[*pos];
}

VertexMap VertexMap::then(const VertexMap& g) const {
  std::vector<Index> composed;
  composed.reserve(image_.size());
  for (Index v : image_) composed.push_back(g(v));
  return VertexMap(source_, g.target(), std::move(composed));
}

namespace {

void require_shared_parent(const SubsetView& a, const SubsetView& b) {
  if (!a.same_parent(b)) throw Error(Errc::InvalidArgument, "subsets belong to different parent spaces");
}

void require_subset(const SubsetView& a, const SubsetView& x) {
  require_shared_parent(a, x);
  if (!a.is_subset_of(x)) throw Error(Errc::NotASubset, "sample is not a subset of the space");
}

}  // namespace

double directed_hausdorff(const SubsetView& x, const SubsetView& a) {
  if (a.empty()) throw Error(Errc::EmptySample, "sample has no points");
  require_shared_parent(x, a);
  double worst = 0.0;
  for (Index xi : x.indices()) {
    double nearest = std::numeric_limits<double>::infinity();
    for (Index ai : a.indices()) nearest = std::min(nearest, x.dist(xi, ai));
    worst = std::max(worst, nearest);
  }
  return worst;
}

bool is_s_approximation(const SubsetView& a, const SubsetView& x, double s) {
  if (!(s > 0.0)) throw Error(Errc::InvalidArgument, "s must be positive");
  require_subset(a, x);
  for (Index xi : x.indices()) {
    const bool covered =
        std::any_of(a.indices().begin(), a.indices().end(), [&](Index ai) { return x.dist(xi, ai) <= s; });
    if (!covered) return false;
  }
  return true;
}

VertexMap projection_map(const SubsetView& x, const SubsetView& a) {
  if (a.empty()) throw Error(Errc::EmptySample, "sample has no points");
  require_subset(a, x);
  std::vector<Index> image;
  image.reserve(x.size());
  for (Index xi : x.indices()) {
    if (a.contains(xi)) {
      image.push_back(xi);
      continue;
    }
    Index best = a[0];
    double best_d = x.dist(xi, best);
    for (Index ai : a.indices()) {
      const double d = x.dist(xi, ai);
      if (d < best_d) {
        best = ai;
        best_d = d;
      }
    }
    image.push_back(best);
  }
  return VertexMap(x, a, std::move(image));
}

}  // namespace cechrec
