#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cechrec/complex.hpp"
#include "cechrec/linalg.hpp"

namespace cechrec {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A persistence interval. The class is present at parameter α iff
/// birth < α ≤ death (open-ball slicing).
struct Bar {
  int dim;
  double birth;
  double death;

  bool essential() const noexcept { return death == kInfinity; }
  bool alive_at(double alpha) const noexcept { return birth < alpha && alpha <= death; }

  friend bool operator==(const Bar&, const Bar&) = default;
};

bool bar_less(const Bar& a, const Bar& b);

/// Multiset of bars sorted by (dim, birth, death), zero-length bars removed.
class Barcode {
 public:
  Barcode() = default;
  Barcode(std::vector<Bar> bars, std::uint32_t characteristic, std::vector<Bar> zero_length = {});

  std::span<const Bar> bars() const noexcept { return bars_; }
  /// Bars with birth == death, dropped from `bars()`; kept for debugging.
  std::span<const Bar> zero_length() const noexcept { return zero_length_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool empty() const noexcept { return bars_.empty(); }
  std::size_t size() const noexcept { return bars_.size(); }

  std::size_t alive_count(int dim, double alpha) const;
  /// Bars whose birth is at most `max_birth`.
  Barcode restricted(double max_birth) const;

  friend bool operator==(const Barcode& a, const Barcode& b) { return a.bars_ == b.bars_ && a.p_ == b.p_; }

 private:
  std::vector<Bar> bars_;
  std::uint32_t p_ = 2;
  std::vector<Bar> zero_length_;
};

struct PersistentImageQuery {
  int k;
  double beta;
  double alpha;
};

/// ∂_k for k = 0..top: `boundary[k]` maps k-chains to (k-1)-chains; ∂_0 has
/// zero rows.
struct ChainComplexMatrices {
  std::vector<FieldMatrix> boundary;

  bool is_chain_complex() const;
};

ChainComplexMatrices chain_complex(const SimplicialComplex& complex, const PrimeField& field);

/// dim ker ∂_k − rank ∂_{k+1} over GF(p).
std::size_t betti(const SimplicialComplex& complex, int k, std::uint32_t p = 2);

/// Barcode in dimensions 0..k_max by column reduction with clearing.
Barcode persistence(const FilteredComplex& complex, int k_max, std::uint32_t p = 2);

/// Same, for simplices given in any order where faces precede cofaces and
/// values are nondecreasing.
Barcode persistence(std::span<const FilteredSimplex> ordered, int dim_cap, std::size_t vertex_count, int k_max,
                    std::uint32_t p = 2);

/// Number of bars in dimension q.k alive throughout (β, α]: birth < β and
/// death ≥ α. Equals rank of H_k(slice β) → H_k(slice α).
std::size_t persistent_image_rank(const Barcode& barcode, const PersistentImageQuery& q);

/// rank of H_k(slice β) → H_k(slice α), computed directly from cycle and
/// boundary spaces: dim Z_β − dim(Z_β ∩ B_α).
std::size_t induced_rank_oracle(const FilteredComplex& complex, int k, double beta, double alpha,
                                std::uint32_t p = 2);

}  // namespace cechrec
