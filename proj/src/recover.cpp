#include "cechrec/recover.hpp"

#include <cmath>
#include <sstream>

#include "cechrec/complex.hpp"

namespace cechrec {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_finite_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) throw Error(Errc::InvalidArgument, std::string(name) + " must be positive");
}

void require_finite_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || !(v >= 0.0))
    throw Error(Errc::InvalidArgument, std::string(name) + " must be nonnegative");
}

}  // namespace

RecoveryParams validate_params(double tau, double d, double alpha, double epsilon, AlphaEndpoint endpoint) {
  require_finite_positive(tau, "tau");
  require_finite_nonnegative(d, "d");
  require_finite_positive(alpha, "alpha");
  require_finite_positive(epsilon, "epsilon");
  if (!(d < tau / 3.0))
    throw Error(Errc::DensityTooLow, "d = " + fmt(d) + " must be below tau/3 = " + fmt(tau / 3.0));
  const bool above_left = endpoint == AlphaEndpoint::ClosedForFiniteSample ? alpha >= 2.0 * d : alpha > 2.0 * d;
  if (!above_left || !(alpha < tau - d))
    throw Error(Errc::AlphaOutOfRange, "alpha = " + fmt(alpha) + " must lie in " +
                                           (endpoint == AlphaEndpoint::ClosedForFiniteSample ? "[" : "(") +
                                           fmt(2.0 * d) + ", " + fmt(tau - d) + ")");
  if (!(epsilon > d) || !(epsilon <= tau - alpha))
    throw Error(Errc::EpsilonOutOfRange,
                "epsilon = " + fmt(epsilon) + " must lie in (" + fmt(d) + ", " + fmt(tau - alpha) + "]");
  return RecoveryParams{tau, d, alpha, epsilon};
}

ParamChoice default_params(double tau, double d) {
  require_finite_positive(tau, "tau");
  require_finite_nonnegative(d, "d");
  if (!(d < tau / 3.0))
    throw Error(Errc::DensityTooLow, "d = " + fmt(d) + " must be below tau/3 = " + fmt(tau / 3.0));
  if (d == 0.0) return {tau / 2.0, tau / 2.0};
  const double alpha = 2.0 * d;
  return {alpha, tau - alpha};
}

RecoveryReport recover_homology(const SubsetView& a, const RecoveryParams& params) {
  if (a.empty()) throw Error(Errc::EmptySample, "sample has no points");
  if (params.k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
  const FilteredComplex filtration = filtered_cech(a, a, params.k_max + 1);
  const Barcode barcode = persistence(filtration, params.k_max, params.p);
  RecoveryReport report{params, {}, barcode.restricted(params.alpha + 2.0 * params.epsilon), {}};
  for (int k = 0; k <= params.k_max; ++k)
    report.betti_claim.push_back(
        persistent_image_rank(barcode, {k, params.alpha, params.alpha + params.epsilon}));
  return report;
}

RecoveryReport recover_homology(const EuclideanCloud& a, const RecoveryParams& params) {
  return recover_homology(SubsetView::all(a.to_metric()), params);
}

std::vector<std::size_t> nsw_reconstruct_check(const EuclideanCloud& a, double tau, double d, double alpha, int k_max,
                                               std::uint32_t p) {
  require_finite_positive(tau, "tau");
  require_finite_nonnegative(d, "d");
  require_finite_positive(alpha, "alpha");
  if (a.size() == 0) throw Error(Errc::EmptySample, "sample has no points");
  if (k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
  const double density_bound = std::sqrt(3.0 / 20.0) * tau;
  if (!(d < density_bound))
    throw Error(Errc::DensityTooLow, "d = " + fmt(d) + " must be below sqrt(3/20)*tau = " + fmt(density_bound));
  const double upper = std::sqrt(3.0 / 5.0) * tau;
  if (!(alpha > 2.0 * d) || !(alpha < upper))
    throw Error(Errc::AlphaOutOfRange, "alpha = " + fmt(alpha) + " must lie in (" + fmt(2.0 * d) + ", " + fmt(upper) + ")");
  const SimplicialComplex slice = filtered_ambient_cech(a, k_max + 1).slice(alpha);
  std::vector<std::size_t> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(betti(slice, k, p));
  return out;
}

}  // namespace cechrec
