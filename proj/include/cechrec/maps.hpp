#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cechrec/complex.hpp"
#include "cechrec/metric.hpp"

namespace cechrec {

/// A vertex map between two complexes. Complexes are held by value; they are
/// immutable once built.
class SimplicialMap {
 public:
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, VertexMap vertex_map);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  const VertexMap& vertex_map() const noexcept { return map_; }

  /// {f(v) : v ∈ σ}. Throws VertexMapNotTotal for vertices outside the map.
  Simplex image(const Simplex& sigma) const;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  VertexMap map_;
};

/// First source simplex whose image is not a target simplex.
std::optional<Simplex> first_non_simplicial(const SimplicialMap& f);
bool is_simplicial(const SimplicialMap& f);

/// First source simplex σ with f(σ) ∪ g(σ) not in the target.
std::optional<Simplex> first_non_contiguous(const SimplicialMap& f, const SimplicialMap& g);
/// Same test, with target membership decided by `in_target` so unions above the
/// target's dimension cap are still judged.
std::optional<Simplex> first_non_contiguous(const SimplicialMap& f, const SimplicialMap& g,
                                            const std::function<bool(const Simplex&)>& in_target);
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

struct DiagramCheck {
  std::string name;
  double alpha;
  bool pass;
  std::optional<Simplex> counterexample;
};

struct DiagramReport {
  std::string diagram;
  std::vector<double> alphas;
  std::vector<DiagramCheck> checks;
  std::vector<std::string> warnings;

  bool all_pass() const;
  const DiagramCheck* first_failure() const;
  void append(DiagramReport other);
};

/// Critical values of both filtrations, the midpoints between consecutive
/// ones, and one value past the largest. Nonpositive values are dropped.
std::vector<double> default_alpha_samples(const FilteredComplex& a, const FilteredComplex& b);

/// The nine complexes 𝒞_Y(X', α) for X', Y ∈ {A, X, M} and the twelve
/// inclusions between them.
DiagramReport check_inclusion_diagram(const SubsetView& a, const SubsetView& x, const SubsetView& m, double alpha,
                                      int dim_cap);

struct DowkerOptions {
  int k_max = 2;
  std::uint32_t p = 2;
  /// β values for the induced-rank comparison; β > α are skipped. Empty
  /// means no rank comparison.
  std::vector<double> betas;
};

/// Betti equality of 𝒞_Y(X, α) and 𝒞_X(Y, α) for k ≤ k_max, and equal ranks of
/// the maps induced by slice β ↪ slice α on both sides.
DiagramReport check_dowker_duality(const SubsetView& x, const SubsetView& y, double alpha,
                                   const DowkerOptions& options = {});

/// Runs `check_dowker_duality` at every default α sample, comparing ranks for
/// every pair of samples β ≤ α.
DiagramReport check_dowker_duality_all(const SubsetView& x, const SubsetView& y, const DowkerOptions& options = {});

struct InterleavingOptions {
  /// Run the checks even when ε < d_H(X, A) instead of throwing
  /// EpsilonTooSmall. Used to exhibit failing instances.
  bool allow_small_epsilon = false;
};

/// Simplicial-level certificate of the (0, ε)-interleavings between
/// 𝒞_Y(A, ·) and 𝒞_Y(X, ·), and between 𝒞_A(Y, ·) and 𝒞_X(Y, ·). An empty
/// `alpha_samples` uses the default samples.
DiagramReport check_interleaving(const SubsetView& x, const SubsetView& a, const SubsetView& y, double epsilon,
                                 std::span<const double> alpha_samples, int dim_cap,
                                 const InterleavingOptions& options = {});

/// The pentagon relating 𝒞_X(X, α), 𝒞_X(A, α+ε), 𝒞_A(X, α+ε),
/// 𝒞_A(A, α+2ε) and 𝒞_X(X, α+2ε).
DiagramReport check_reverse_square(const SubsetView& x, const SubsetView& a, double alpha, double epsilon, int dim_cap,
                                   const InterleavingOptions& options = {});

}  // namespace cechrec
