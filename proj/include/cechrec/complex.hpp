#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "cechrec/metric.hpp"

namespace cechrec {

/// A nonempty, strictly increasing set of vertex indices. Vertices are indices
/// into the parent metric space (or point cloud), so complexes over nested
/// subsets share one vertex namespace.
class Simplex {
 public:
  Simplex(std::initializer_list<Index> vertices);
  explicit Simplex(std::vector<Index> vertices);
  /// Sorts and deduplicates first.
  static Simplex from_unsorted(std::vector<Index> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Index> vertices() const noexcept { return vertices_; }
  Index operator[](std::size_t i) const { return vertices_[i]; }

  /// Codimension-one faces; empty for a vertex. Face i omits vertex i.
  std::vector<Simplex> facets() const;
  bool is_face_of(const Simplex& other) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<Index> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Orders by dimension, then lexicographically.
struct DimLexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A face-closed set of simplices of dimension at most `dim_cap`, built over
/// `vertex_count` candidate vertices.
class SimplicialComplex {
 public:
  SimplicialComplex(std::vector<Simplex> simplices, int dim_cap, std::size_t vertex_count);

  bool contains(const Simplex& s) const;
  std::span<const Simplex> simplices(int dim) const;
  std::vector<Simplex> all_simplices() const;
  std::size_t size() const noexcept;
  /// -1 for the empty complex.
  int top_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  int dim_cap() const noexcept { return dim_cap_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Every subset of the candidate vertices was considered, so no simplex is
  /// missing because of the cap.
  bool complete() const noexcept { return static_cast<std::size_t>(dim_cap_) + 1 >= vertex_count_; }

  /// First simplex of this complex (dim-lex order) missing from `other`.
  std::optional<Simplex> first_missing_from(const SimplicialComplex& other) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const { return !first_missing_from(other); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.by_dim_ == b.by_dim_; }

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  int dim_cap_;
  std::size_t vertex_count_;
};

struct FilteredSimplex {
  Simplex simplex;
  double value;
};

/// Simplices with filtration values, sorted by (value, dim, lex). Under the
/// open-ball convention a simplex belongs to the complex at parameter α iff
/// value < α.
class FilteredComplex {
 public:
  FilteredComplex(std::vector<FilteredSimplex> entries, int dim_cap, std::size_t vertex_count);

  std::span<const FilteredSimplex> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int dim_cap() const noexcept { return dim_cap_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  SimplicialComplex slice(double alpha) const;
  std::optional<double> value_of(const Simplex& s) const;
  /// Sorted distinct filtration values.
  std::vector<double> critical_values() const;

 private:
  std::vector<FilteredSimplex> entries_;
  int dim_cap_;
  std::size_t vertex_count_;
};

/// Canonical filtration order: (value, dim, lex).
bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b);

/// Maximum simplex count for enumeration; CECH_MAX_SIMPLICES or 5,000,000.
std::size_t simplex_budget();
/// Number of nonempty subsets of size ≤ dim_cap + 1 of n points (saturating).
std::size_t candidate_simplex_count(std::size_t n, int dim_cap);

/// min_{y ∈ Y} max_{x ∈ σ} d(x, y).
double filtration_value(const Simplex& sigma, const SubsetView& x, const SubsetView& y);

/// 𝒞_Y(X, α) truncated at dimension `dim_cap`.
SimplicialComplex cech_complex(const SubsetView& x, const SubsetView& y, double alpha, int dim_cap);

/// Filtered 𝒞_Y(X) over every subset of X up to dimension `dim_cap`.
FilteredComplex filtered_cech(const SubsetView& x, const SubsetView& y, int dim_cap,
                              std::size_t budget = simplex_budget());

/// Filtered ambient Čech complex 𝒞_{R^n}(A): value of σ is the radius of the
/// smallest ball enclosing its points.
FilteredComplex filtered_ambient_cech(const EuclideanCloud& a, int dim_cap, std::size_t budget = simplex_budget());

/// Radius of the smallest ball enclosing `cloud`'s points.
double miniball_radius(const EuclideanCloud& cloud);

/// `# dim_cap C vertex_count N` header, then one `dim v0 .. vk value` line per
/// simplex in filtration order.
void write_filtered_complex(std::ostream& out, const FilteredComplex& complex);
/// Accepts the header as optional; without it the cap is the top dimension
/// present and the vertex count is one past the largest vertex.
FilteredComplex read_filtered_complex(std::istream& in);

}  // namespace cechrec
