#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "cechrec/generators.hpp"
#include "cechrec/io.hpp"
#include "cechrec/metric.hpp"

using namespace cechrec;

namespace {

std::shared_ptr<const FiniteMetricSpace> line_space(std::initializer_list<double> xs) {
  Eigen::MatrixXd c(static_cast<Eigen::Index>(xs.size()), 1);
  Eigen::Index i = 0;
  for (double x : xs) c(i++, 0) = x;
  return EuclideanCloud(c).to_metric();
}

}  // namespace

TEST_CASE("metric space validation") {
  Eigen::MatrixXd ok(2, 2);
  ok << 0, 1, 1, 0;
  CHECK_NOTHROW(FiniteMetricSpace{ok});

  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(FiniteMetricSpace{asym}, Error);

  Eigen::MatrixXd diag(2, 2);
  diag << 1, 1, 1, 0;
  CHECK_THROWS_AS(FiniteMetricSpace{diag}, Error);

  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_THROWS_AS(FiniteMetricSpace{neg}, Error);

  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(FiniteMetricSpace{rect}, Error);

  // Duplicate points are tolerated.
  Eigen::MatrixXd dup = Eigen::MatrixXd::Zero(2, 2);
  CHECK_NOTHROW(FiniteMetricSpace{dup});
}

TEST_CASE("triangle inequality check is opt-in") {
  Eigen::MatrixXd d(3, 3);
  d << 0, 1, 5, 1, 0, 1, 5, 1, 0;
  FiniteMetricSpace space(d);
  const auto bad = space.triangle_violation();
  REQUIRE(bad.has_value());
  CHECK(line_space({0, 1, 3})->triangle_violation() == std::nullopt);
}

TEST_CASE("subset views compose to parent indices") {
  auto space = line_space({0, 1, 2, 3, 4, 5});
  SubsetView x(space, {1, 2, 4, 5});
  SubsetView a = x.subset(std::vector<Index>{0, 3});
  CHECK(std::vector<Index>(a.indices().begin(), a.indices().end()) == std::vector<Index>{1, 5});
  CHECK(a.is_subset_of(x));
  CHECK_FALSE(x.is_subset_of(a));
  CHECK(x.contains(4));
  CHECK_FALSE(x.contains(3));
  CHECK(x.position_of(4) == 2);
  CHECK_THROWS_AS(SubsetView(space, {2, 1}), Error);
  CHECK_THROWS_AS(SubsetView(space, {9}), Error);
}

TEST_CASE("directed Hausdorff on the two-point space") {
  const Fixture f = two_point_space(1.0);
  CHECK(directed_hausdorff(f.x, f.a) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(directed_hausdorff(f.x, f.x) == 0.0);
  CHECK(directed_hausdorff(f.a, f.x) == 0.0);  // not symmetric
  CHECK(is_s_approximation(f.a, f.x, 1.0));
  CHECK_FALSE(is_s_approximation(f.a, f.x, 0.5));
  CHECK(is_s_approximation(f.x, f.x, 1e-6));
  const VertexMap pi = projection_map(f.x, f.a);
  CHECK(pi(0) == 0);
  CHECK(pi(1) == 0);
}

TEST_CASE("directed Hausdorff from a dense circle proxy") {
  const EuclideanCloud proxy = dense_circle_proxy(1000);
  const Fixture a14 = circle_sample(14);
  const double dh = directed_hausdorff(proxy.coords(), a14.cloud->coords());
  const double exact = 2.0 * std::sin(std::numbers::pi / 28.0);
  CHECK(dh <= exact + 1e-12);
  CHECK(exact - dh <= 2.0 * std::sin(std::numbers::pi / 1000.0));
  CHECK(directed_hausdorff(proxy.coords(), proxy.coords()) == 0.0);
  const EuclideanCloud proxy100 = dense_circle_proxy(100);
  CHECK(directed_hausdorff(proxy100.coords(), circle_sample(10).cloud->coords()) <=
        2.0 * std::sin(std::numbers::pi / 20.0) + 1e-12);
}

TEST_CASE("projection map tie-break and identity on the sample") {
  // A_8 with A_4 = the even-angle roots (indices 1, 3, 5, 7 hold ξ², ξ⁴, ξ⁶, ξ⁸).
  const Fixture a8 = circle_sample(8);
  SubsetView a4(a8.space, {1, 3, 5, 7});
  const VertexMap pi = projection_map(a8.x, a4);
  for (Index i : a4.indices()) CHECK(pi(i) == i);
  for (Index odd : {0, 2, 4, 6}) {
    const Index lo = (odd + 7) % 8;
    const Index hi = odd + 1;
    CHECK(std::abs((*a8.space)(odd, lo) - (*a8.space)(odd, hi)) < 1e-12);
    CHECK(std::abs((*a8.space)(odd, hi) - 2.0 * std::sin(std::numbers::pi / 8.0)) < 1e-12);
    // Both neighbours tie up to rounding; the map must pick one of them, and
    // the smaller index whenever the two distances are bitwise equal.
    const Index got = pi(static_cast<Index>(odd));
    CHECK((got == lo || got == hi));
    if ((*a8.space)(odd, lo) == (*a8.space)(odd, hi)) CHECK(got == std::min(lo, hi));
  }
  // Exact ties on the integer line resolve to the smaller index.
  auto space = line_space({0, 1, 2});
  SubsetView x = SubsetView::all(space);
  SubsetView ends(space, {0, 2});
  CHECK(projection_map(x, ends)(1) == 0);
}

TEST_CASE("s-approximation is monotone and holds at d_H") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Fixture f = random_metric_instance(seed, 8, RandomMethod::EuclideanUniformCube);
    const double dh = directed_hausdorff(f.x, f.a);
    CHECK(is_s_approximation(f.a, f.x, dh > 0 ? dh : 1e-9));
    CHECK(is_s_approximation(f.a, f.x, dh + 1.0));
    if (dh > 0) CHECK_FALSE(is_s_approximation(f.a, f.x, dh * 0.999));
    const VertexMap pi = projection_map(f.x, f.a);
    for (Index x : f.x.indices()) CHECK(f.x.dist(x, pi(x)) <= dh);
  }
}

TEST_CASE("vertex maps") {
  auto space = line_space({0, 1, 2, 3});
  SubsetView a(space, {0, 2});
  SubsetView x = SubsetView::all(space);
  const VertexMap inc = VertexMap::inclusion(a, x);
  CHECK(inc(2) == 2);
  CHECK_THROWS_AS(inc(1), Error);
  CHECK_THROWS_AS(VertexMap::inclusion(x, a), Error);
  const VertexMap round_trip = inc.then(projection_map(x, a));
  CHECK(round_trip(0) == 0);
  CHECK(round_trip(2) == 2);
}

TEST_CASE("Eigen directed Hausdorff matches the metric-space version") {
  const Fixture f = random_metric_instance(7, 9, RandomMethod::EuclideanUniformCube);
  const EuclideanCloud xs = f.cloud->select(f.x.indices());
  const EuclideanCloud as = f.cloud->select(f.a.indices());
  CHECK(directed_hausdorff(xs.coords(), as.coords()) == doctest::Approx(directed_hausdorff(f.x, f.a)).epsilon(1e-12));
  const Eigen::MatrixXf xf = xs.coords().cast<float>();
  const Eigen::MatrixXf af = as.coords().cast<float>();
  CHECK(directed_hausdorff(xf, af) == doctest::Approx(directed_hausdorff(f.x, f.a)).epsilon(1e-5));
}

TEST_CASE("csv readers") {
  std::istringstream full("0,1,2\n1,0,1\n2,1,0\n");
  CHECK(io::read_distance_csv(full)->size() == 3);
  std::istringstream lower("# lower triangle\n0\n1 0\n2 1 0\n");
  const auto lt = io::read_distance_csv(lower);
  CHECK((*lt)(0, 2) == 2.0);
  CHECK((*lt)(2, 0) == 2.0);
  std::istringstream ragged("0,1\n1\n");
  CHECK_THROWS_AS(io::read_distance_csv(ragged), Error);
  std::istringstream pts("0 0\n3 4\n");
  const EuclideanCloud cloud = io::read_points_csv(pts);
  CHECK((*cloud.to_metric())(0, 1) == 5.0);
  std::istringstream bad("1,2\n3\n");
  CHECK_THROWS_AS(io::read_points_csv(bad), Error);
  std::istringstream idx("3\n1\n\n3\n");
  CHECK(io::read_index_list(idx) == std::vector<Index>{1, 3});
  std::istringstream junk("1\nx\n");
  CHECK_THROWS_AS(io::read_index_list(junk), Error);
}

TEST_CASE("points csv round trip is exact") {
  const Fixture f = circle_sample(14);
  std::ostringstream out;
  io::write_points_csv(out, *f.cloud);
  std::istringstream in(out.str());
  CHECK(io::read_points_csv(in).coords() == f.cloud->coords());
  std::ostringstream dout;
  io::write_distance_csv(dout, *f.space);
  std::istringstream din(dout.str());
  CHECK(io::read_distance_csv(din)->matrix() == f.space->matrix());
}
