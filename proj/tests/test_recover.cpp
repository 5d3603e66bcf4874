#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cechrec/generators.hpp"
#include "cechrec/recover.hpp"

using namespace cechrec;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

double circle_dh(int q) { return 2.0 * std::sin(std::numbers::pi / (2.0 * q)); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate_params(1.0, 0.224, 0.5, 0.5));
  CHECK(code_of([] { validate_params(1.0, 0.4, 0.5, 0.5); }) == Errc::DensityTooLow);
  CHECK(code_of([] { validate_params(1.0, 0.3, 0.59, 0.41); }) == Errc::AlphaOutOfRange);
  CHECK(code_of([] { validate_params(1.0, 0.2, 0.5, 0.2); }) == Errc::EpsilonOutOfRange);
  CHECK(code_of([] { validate_params(1.0, 0.2, 0.5, 0.51); }) == Errc::EpsilonOutOfRange);
  CHECK_NOTHROW(validate_params(1.0, 0.2, 0.6, 0.4));  // ε = τ − α exactly
  // Left endpoint α = 2d only under the closed form.
  CHECK(code_of([] { validate_params(1.0, 0.2, 0.4, 0.5); }) == Errc::AlphaOutOfRange);
  CHECK_NOTHROW(validate_params(1.0, 0.2, 0.4, 0.5, AlphaEndpoint::ClosedForFiniteSample));
  CHECK(code_of([] { validate_params(1.0, 0.2, 0.8, 0.1); }) == Errc::AlphaOutOfRange);
}

TEST_CASE("default parameters") {
  const ParamChoice c = default_params(1.0, 0.224);
  CHECK(c.alpha == doctest::Approx(0.448));
  CHECK(c.epsilon == doctest::Approx(0.552));
  CHECK_NOTHROW(validate_params(1.0, 0.224, c.alpha, c.epsilon, AlphaEndpoint::ClosedForFiniteSample));
  const ParamChoice z = default_params(2.0, 0.0);
  CHECK(z.alpha == 1.0);
  CHECK(z.epsilon == 1.0);
  const ParamChoice near = default_params(3.0, 0.9);
  CHECK(near.alpha == doctest::Approx(1.8));
  CHECK(near.epsilon == doctest::Approx(1.2));
  CHECK(code_of([] { default_params(3.0, 1.0); }) == Errc::DensityTooLow);
}

TEST_CASE("circle recovery at the worked parameters") {
  const Fixture f = circle_sample(14);
  const RecoveryParams p = validate_params(1.0, circle_dh(14), 0.5, 0.5);
  const RecoveryReport r = recover_homology(f.a, p);
  CHECK(r.betti_claim == std::vector<std::size_t>{1, 1, 0});
  bool found = false;
  for (const auto& b : r.barcode.bars())
    if (b.dim == 1 && std::abs(b.birth - 2.0 * std::sin(std::numbers::pi / 14.0)) < 1e-9) found = true;
  CHECK(found);
  for (const auto& b : r.barcode.bars()) CHECK(b.birth <= p.alpha + 2.0 * p.epsilon);
}

TEST_CASE("recovery is insensitive to the choice inside the intervals") {
  for (int q : {10, 14, 20}) {
    const Fixture f = circle_sample(q);
    const double d = circle_dh(q);
    const double tau = 1.0;
    for (int i = 1; i <= 5; ++i) {
      const double alpha = 2 * d + (tau - 3 * d) * i / 6.0;
      for (int j = 1; j <= 5; ++j) {
        const double eps = j == 5 ? tau - alpha : d + (tau - alpha - d) * j / 5.0;
        const RecoveryParams p = validate_params(tau, d, alpha, eps);
        CHECK(recover_homology(f.a, p).betti_claim == std::vector<std::size_t>{1, 1, 0});
      }
    }
  }
}

TEST_CASE("recovery from default parameters") {
  for (int q : {10, 14, 20}) {
    const Fixture f = circle_sample(q);
    const ParamChoice c = default_params(1.0, circle_dh(q));
    const RecoveryParams p =
        validate_params(1.0, circle_dh(q), c.alpha, c.epsilon, AlphaEndpoint::ClosedForFiniteSample);
    CHECK(recover_homology(*f.cloud, p).betti_claim == std::vector<std::size_t>{1, 1, 0});
  }
}

TEST_CASE("single point sample") {
  Eigen::MatrixXd one(1, 2);
  one << 0.3, 0.4;
  const EuclideanCloud cloud(one);
  const ParamChoice c = default_params(1.0, 0.0);
  const RecoveryParams p = validate_params(1.0, 0.0, c.alpha, c.epsilon);
  CHECK(recover_homology(cloud, p).betti_claim == std::vector<std::size_t>{1, 0, 0});
  CHECK(nsw_reconstruct_check(cloud, 1.0, 0.0, 0.5) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("two-point example is refused") {
  const Fixture f = two_point_space(1.0);
  CHECK(code_of([&] { validate_params(*f.tau, f.d_h, 0.5, 0.5); }) == Errc::DensityTooLow);
  CHECK(code_of([&] { default_params(*f.tau, f.d_h); }) == Errc::DensityTooLow);
}

TEST_CASE("ambient reconstruction check") {
  const Fixture f = circle_sample(14);
  CHECK(nsw_reconstruct_check(*f.cloud, 1.0, circle_dh(14), 0.6) == std::vector<std::size_t>{1, 1, 0});
  CHECK(code_of([&] { nsw_reconstruct_check(*f.cloud, 1.0, 0.5, 0.6); }) == Errc::DensityTooLow);
  CHECK(code_of([&] { nsw_reconstruct_check(*f.cloud, 1.0, circle_dh(14), 0.8); }) == Errc::AlphaOutOfRange);
  // Agreement with recovery wherever both hypothesis sets hold.
  for (int q : {14, 20, 30}) {
    const Fixture c = circle_sample(q);
    const double d = circle_dh(q);
    for (double alpha : {2 * d + 0.01, 0.6, 0.7}) {
      const auto nsw = nsw_reconstruct_check(*c.cloud, 1.0, d, alpha);
      const RecoveryReport r = recover_homology(c.a, validate_params(1.0, d, alpha, 1.0 - alpha));
      CHECK(nsw == r.betti_claim);
    }
  }
}
