#include "cechrec/homology.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

namespace cechrec {

bool bar_less(const Bar& a, const Bar& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

Barcode::Barcode(std::vector<Bar> bars, std::uint32_t characteristic, std::vector<Bar> zero_length)
    : p_(characteristic), zero_length_(std::move(zero_length)) {
  for (auto& b : bars) {
    if (!(b.birth <= b.death)) throw Error(Errc::InvalidArgument, "bar with death before birth");
    if (b.birth == b.death)
      zero_length_.push_back(b);
    else
      bars_.push_back(b);
  }
  std::sort(bars_.begin(), bars_.end(), bar_less);
  std::sort(zero_length_.begin(), zero_length_.end(), bar_less);
}

std::size_t Barcode::alive_count(int dim, double alpha) const {
  return static_cast<std::size_t>(
      std::count_if(bars_.begin(), bars_.end(), [&](const Bar& b) { return b.dim == dim && b.alive_at(alpha); }));
}

Barcode Barcode::restricted(double max_birth) const {
  std::vector<Bar> kept;
  std::copy_if(bars_.begin(), bars_.end(), std::back_inserter(kept),
               [&](const Bar& b) { return b.birth <= max_birth; });
  return Barcode(std::move(kept), p_);
}

// --- chain complexes and Betti numbers --------------------------------------

namespace {

FieldMatrix boundary_matrix(std::span<const Simplex> rows, std::span<const Simplex> cols, const PrimeField& field) {
  FieldMatrix m(rows.size(), cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto facets = cols[c].facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      auto it = std::lower_bound(rows.begin(), rows.end(), facets[i]);
      if (it == rows.end() || *it != facets[i]) throw Error(Errc::InvalidArgument, "missing facet in boundary");
      m.set(static_cast<std::size_t>(it - rows.begin()), c, (i % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

void require_dim_cap(int k, int dim_cap, std::size_t vertex_count) {
  if (k < 0) throw Error(Errc::InvalidArgument, "homology dimension must be nonnegative");
  const bool complete = static_cast<std::size_t>(dim_cap) + 1 >= vertex_count;
  if (k + 1 > dim_cap && !complete)
    throw Error(Errc::InsufficientDimCap, "degree " + std::to_string(k) + " needs simplices up to dimension " +
                                              std::to_string(k + 1) + " but the cap is " + std::to_string(dim_cap));
}

}  // namespace

bool ChainComplexMatrices::is_chain_complex() const {
  for (std::size_t k = 1; k + 1 < boundary.size(); ++k) {
    if (boundary[k].cols() != boundary[k + 1].rows()) return false;
    if (boundary[k].rows() == 0 || boundary[k + 1].cols() == 0) continue;
    if (!(boundary[k] * boundary[k + 1]).is_zero()) return false;
  }
  return true;
}

ChainComplexMatrices chain_complex(const SimplicialComplex& complex, const PrimeField& field) {
  ChainComplexMatrices out;
  for (int k = 0; k <= complex.top_dim(); ++k) {
    if (k == 0)
      out.boundary.emplace_back(0, complex.simplices(0).size(), field);
    else
      out.boundary.push_back(boundary_matrix(complex.simplices(k - 1), complex.simplices(k), field));
  }
  return out;
}

std::size_t betti(const SimplicialComplex& complex, int k, std::uint32_t p) {
  require_dim_cap(k, complex.dim_cap(), complex.vertex_count());
  const PrimeField field(p);
  const auto cells = complex.simplices(k);
  if (cells.empty()) return 0;
  const std::size_t rank_k = k == 0 ? 0 : boundary_matrix(complex.simplices(k - 1), cells, field).rank();
  const auto cofaces = complex.simplices(k + 1);
  const std::size_t rank_k1 = cofaces.empty() ? 0 : boundary_matrix(cells, cofaces, field).rank();
  return cells.size() - rank_k - rank_k1;
}

// --- persistence ------------------------------------------------------------

namespace {

using Entry = std::pair<std::size_t, PrimeField::Element>;
using Column = std::vector<Entry>;

// target -= factor * source, both sorted by row index.
void axpy(Column& target, const Column& source, PrimeField::Element factor, const PrimeField& field) {
  Column out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, field.neg(field.mul(factor, source[j].second)));
      ++j;
    } else {
      const auto v = field.sub(target[i].second, field.mul(factor, source[j].second));
      if (v != 0) out.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

}  // namespace

Barcode persistence(std::span<const FilteredSimplex> ordered, int dim_cap, std::size_t vertex_count, int k_max,
                    std::uint32_t p) {
  if (k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
  require_dim_cap(k_max, dim_cap, vertex_count);
  const PrimeField field(p);
  const int top = k_max + 1;

  // Simplices above dimension k_max + 1 cannot affect degrees ≤ k_max.
  std::vector<std::size_t> kept;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& e = ordered[i];
    if (e.simplex.dim() > top) continue;
    if (!kept.empty() && e.value < ordered[kept.back()].value)
      throw Error(Errc::InvalidArgument, "filtration values are not nondecreasing");
    index.emplace(e.simplex, kept.size());
    kept.push_back(i);
  }
  const std::size_t n = kept.size();
  std::vector<int> dim(n);
  std::vector<double> value(n);
  std::vector<Column> columns(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& e = ordered[kept[j]];
    dim[j] = e.simplex.dim();
    value[j] = e.value;
    const auto facets = e.simplex.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      auto it = index.find(facets[i]);
      if (it == index.end() || it->second >= j)
        throw Error(Errc::InvalidArgument, "a face does not precede its coface in the filtration");
      columns[j].emplace_back(it->second, field.from_int(i % 2 == 0 ? 1 : -1));
    }
    std::sort(columns[j].begin(), columns[j].end());
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> killer(n, kNone);  // creator -> column that kills it
  std::vector<bool> negative(n, false);
  std::vector<bool> cleared(n, false);
  std::vector<std::size_t> pivot_owner(n, kNone);

  for (int d = top; d >= 1; --d) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dim[j] != d) continue;
      if (cleared[j]) {
        columns[j].clear();
        continue;
      }
      Column& col = columns[j];
      while (!col.empty()) {
        const std::size_t low = col.back().first;
        const std::size_t owner = pivot_owner[low];
        if (owner == kNone) break;
        const auto factor = field.mul(col.back().second, field.inv(columns[owner].back().second));
        axpy(col, columns[owner], factor, field);
      }
      if (col.empty()) continue;
      const std::size_t low = col.back().first;
      pivot_owner[low] = j;
      killer[low] = j;
      negative[j] = true;
      cleared[low] = true;
    }
  }

  std::vector<Bar> bars;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim[i] > k_max || negative[i]) continue;
    bars.push_back({dim[i], value[i], killer[i] == kNone ? kInfinity : value[killer[i]]});
  }
  return Barcode(std::move(bars), p);
}

Barcode persistence(const FilteredComplex& complex, int k_max, std::uint32_t p) {
  return persistence(complex.entries(), complex.dim_cap(), complex.vertex_count(), k_max, p);
}

std::size_t persistent_image_rank(const Barcode& barcode, const PersistentImageQuery& q) {
  if (!(q.beta <= q.alpha)) throw Error(Errc::InvalidArgument, "persistent image query needs beta <= alpha");
  return static_cast<std::size_t>(std::count_if(barcode.bars().begin(), barcode.bars().end(), [&](const Bar& b) {
    return b.dim == q.k && b.birth < q.beta && b.death >= q.alpha;
  }));
}

std::size_t induced_rank_oracle(const FilteredComplex& complex, int k, double beta, double alpha, std::uint32_t p) {
  if (!(beta <= alpha)) throw Error(Errc::InvalidArgument, "induced rank needs beta <= alpha");
  require_dim_cap(k, complex.dim_cap(), complex.vertex_count());
  const PrimeField field(p);
  const SimplicialComplex small = complex.slice(beta);
  const SimplicialComplex large = complex.slice(alpha);
  const auto cells_small = small.simplices(k);
  const auto cells_large = large.simplices(k);
  if (cells_small.empty()) return 0;

  // Cycle space of the small slice.
  FieldMatrix cycles = k == 0 ? FieldMatrix(0, cells_small.size(), field).nullspace()
                              : boundary_matrix(small.simplices(k - 1), cells_small, field).nullspace();
  if (cycles.cols() == 0) return 0;

  // Re-express cycles in the basis of k-simplices of the large slice.
  FieldMatrix z(cells_large.size(), cycles.cols(), field);
  for (std::size_t r = 0; r < cells_small.size(); ++r) {
    const auto it = std::lower_bound(cells_large.begin(), cells_large.end(), cells_small[r]);
    const auto row = static_cast<std::size_t>(it - cells_large.begin());
    for (std::size_t c = 0; c < cycles.cols(); ++c) z(row, c) = cycles(r, c);
  }
  const auto cofaces = large.simplices(k + 1);
  if (cofaces.empty()) return cycles.cols();
  const FieldMatrix b = boundary_matrix(cells_large, cofaces, field);
  // dim Z − dim(Z ∩ B) with dim(Z ∩ B) = rank Z + rank B − rank [Z | B].
  return z.hcat(b).rank() - b.rank();
}

}  // namespace cechrec
