#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cechrec/homology.hpp"
#include "cechrec/metric.hpp"

namespace cechrec {

/// Parameters of the homology recovery theorem, checked against its
/// hypotheses: d < τ/3, α ∈ (2d, τ−d), ε ∈ (d, τ−α].
struct RecoveryParams {
  double tau;
  double d;
  double alpha;
  double epsilon;
  int k_max = 2;
  std::uint32_t p = 2;
};

/// Whether the left endpoint α = 2d is admissible. It is for finite (hence
/// compact) samples, which is every sample this library handles; the strict
/// form exists for callers reasoning about the open interval.
enum class AlphaEndpoint { Open, ClosedForFiniteSample };

RecoveryParams validate_params(double tau, double d, double alpha, double epsilon,
                               AlphaEndpoint endpoint = AlphaEndpoint::Open);

struct ParamChoice {
  double alpha;
  double epsilon;
};

/// α = 2d, ε = τ − α; α = ε = τ/2 when d = 0.
ParamChoice default_params(double tau, double d);

struct RecoveryReport {
  RecoveryParams params;
  /// betti_claim[k] = rank Im φ_k^{α, α+ε} of the intrinsic Čech filtration.
  std::vector<std::size_t> betti_claim;
  /// Bars born at or before α + 2ε.
  Barcode barcode;
  std::vector<std::string> warnings;
};

/// Persistent-image ranks of the filtered intrinsic Čech complex 𝒞_A(A).
/// `params` must already be validated.
RecoveryReport recover_homology(const SubsetView& a, const RecoveryParams& params);
RecoveryReport recover_homology(const EuclideanCloud& a, const RecoveryParams& params);

/// Betti numbers of the ambient Čech complex 𝒞_{R^n}(A, α), under the
/// hypotheses d < √(3/20)·τ and α ∈ (2d, √(3/5)·τ).
std::vector<std::size_t> nsw_reconstruct_check(const EuclideanCloud& a, double tau, double d, double alpha,
                                               int k_max = 2, std::uint32_t p = 2);

}  // namespace cechrec
