#include "cechrec/complex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "cechrec/io.hpp"
#include "cechrec/miniball.hpp"

namespace cechrec {

Simplex::Simplex(std::initializer_list<Index> vertices) : Simplex(std::vector<Index>(vertices)) {}

Simplex::Simplex(std::vector<Index> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(Errc::InvalidArgument, "empty simplex");
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i] <= vertices_[i - 1])
      throw Error(Errc::InvalidArgument, "simplex vertices must be strictly increasing");
}

Simplex Simplex::from_unsorted(std::vector<Index> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Simplex(std::move(vertices));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<Index> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) face.push_back(vertices_[i]);
    out.emplace_back(std::move(face));
  }
  return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Index v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// --- SimplicialComplex ------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices, int dim_cap, std::size_t vertex_count)
    : dim_cap_(dim_cap), vertex_count_(vertex_count) {
  if (dim_cap < 0) throw Error(Errc::InvalidArgument, "dimension cap must be nonnegative");
  for (auto& s : simplices) {
    if (s.dim() > dim_cap) throw Error(Errc::InvalidArgument, "simplex exceeds the dimension cap");
    const auto d = static_cast<std::size_t>(s.dim());
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(std::move(s));
  }
  for (auto& layer : by_dim_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  for (std::size_t d = 1; d < by_dim_.size(); ++d)
    for (const auto& s : by_dim_[d])
      for (const auto& f : s.facets())
        if (!std::binary_search(by_dim_[d - 1].begin(), by_dim_[d - 1].end(), f))
          throw Error(Errc::InvalidArgument, "simplex set is not closed under faces");
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto d = static_cast<std::size_t>(s.dim());
  return d < by_dim_.size() && std::binary_search(by_dim_[d].begin(), by_dim_[d].end(), s);
}

std::span<const Simplex> SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return {};
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t SimplicialComplex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

std::optional<Simplex> SimplicialComplex::first_missing_from(const SimplicialComplex& other) const {
  for (const auto& layer : by_dim_)
    for (const auto& s : layer)
      if (!other.contains(s)) return s;
  return std::nullopt;
}

// --- FilteredComplex --------------------------------------------------------

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) return a.value < b.value;
  return DimLexLess{}(a.simplex, b.simplex);
}

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> entries, int dim_cap, std::size_t vertex_count)
    : entries_(std::move(entries)), dim_cap_(dim_cap), vertex_count_(vertex_count) {
  if (dim_cap < 0) throw Error(Errc::InvalidArgument, "dimension cap must be nonnegative");
  std::sort(entries_.begin(), entries_.end(), filtration_less);
  std::unordered_map<Simplex, double, SimplexHash> value;
  value.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!(e.value >= 0.0) || std::isinf(e.value))
      throw Error(Errc::InvalidArgument, "filtration values must be finite and nonnegative");
    if (e.simplex.dim() > dim_cap) throw Error(Errc::InvalidArgument, "simplex exceeds the dimension cap");
    if (!value.emplace(e.simplex, e.value).second)
      throw Error(Errc::InvalidArgument, "duplicate simplex in filtration");
  }
  for (const auto& e : entries_)
    for (const auto& f : e.simplex.facets()) {
      auto it = value.find(f);
      if (it == value.end()) throw Error(Errc::InvalidArgument, "filtration is not closed under faces");
      if (it->second > e.value) throw Error(Errc::InvalidArgument, "face enters after its coface");
    }
}

SimplicialComplex FilteredComplex::slice(double alpha) const {
  std::vector<Simplex> members;
  for (const auto& e : entries_) {
    if (!(e.value < alpha)) break;
    members.push_back(e.simplex);
  }
  return SimplicialComplex(std::move(members), dim_cap_, vertex_count_);
}

std::optional<double> FilteredComplex::value_of(const Simplex& s) const {
  for (const auto& e : entries_)
    if (e.simplex == s) return e.value;
  return std::nullopt;
}

std::vector<double> FilteredComplex::critical_values() const {
  std::vector<double> out;
  for (const auto& e : entries_)
    if (out.empty() || out.back() != e.value) out.push_back(e.value);
  return out;
}

// --- construction -----------------------------------------------------------

std::size_t simplex_budget() {
  constexpr std::size_t kDefault = 5'000'000;
  const char* env = std::getenv("CECH_MAX_SIMPLICES");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::size_t>(v);
}

std::size_t candidate_simplex_count(std::size_t n, int dim_cap) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, k)
  for (std::size_t k = 1; k <= n && k <= static_cast<std::size_t>(dim_cap) + 1; ++k) {
    const std::size_t factor = n - k + 1;
    if (binom > kMax / factor) return kMax;
    binom = binom * factor / k;
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

namespace {

void require_witnesses(const SubsetView& y) {
  if (y.empty()) throw Error(Errc::EmptyWitnessSet, "witness set is empty");
}

void require_budget(std::size_t n, int dim_cap, std::size_t budget) {
  if (dim_cap < 0) throw Error(Errc::InvalidArgument, "dimension cap must be nonnegative");
  const std::size_t count = candidate_simplex_count(n, dim_cap);
  if (count > budget)
    throw Error(Errc::CapTooLargeForMemory, std::to_string(count) + " candidate simplices on " + std::to_string(n) +
                                                " points at dimension cap " + std::to_string(dim_cap) +
                                                " exceed the budget of " + std::to_string(budget));
}

// Depth-first enumeration of subsets of X in lexicographic order, carrying the
// per-witness maximum distance so each simplex costs O(|Y|).
class WitnessEnumerator {
 public:
  WitnessEnumerator(const SubsetView& x, const SubsetView& y, int dim_cap, double threshold)
      : x_(x), y_(y), dim_cap_(dim_cap), threshold_(threshold) {}

  std::vector<FilteredSimplex> run() {
    std::vector<double> base(y_.size(), 0.0);
    std::vector<Index> stack;
    descend(0, stack, base);
    return std::move(out_);
  }

 private:
  void descend(std::size_t start, std::vector<Index>& stack, const std::vector<double>& reach) {
    std::vector<double> next(reach.size());
    for (std::size_t pos = start; pos < x_.size(); ++pos) {
      const Index v = x_[pos];
      double value = std::numeric_limits<double>::infinity();
      for (std::size_t w = 0; w < y_.size(); ++w) {
        next[w] = std::max(reach[w], x_.dist(v, y_[w]));
        value = std::min(value, next[w]);
      }
      if (!(value < threshold_)) continue;
      stack.push_back(v);
      out_.push_back({Simplex(stack), value});
      if (static_cast<int>(stack.size()) <= dim_cap_) descend(pos + 1, stack, next);
      stack.pop_back();
    }
  }

  const SubsetView& x_;
  const SubsetView& y_;
  int dim_cap_;
  double threshold_;
  std::vector<FilteredSimplex> out_;
};

}  // namespace

double filtration_value(const Simplex& sigma, const SubsetView& x, const SubsetView& y) {
  require_witnesses(y);
  if (!x.same_parent(y)) throw Error(Errc::InvalidArgument, "X and Y belong to different parent spaces");
  for (Index v : sigma.vertices())
    if (!x.contains(v)) throw Error(Errc::InvalidArgument, "simplex vertex " + std::to_string(v) + " is not in X");
  double best = std::numeric_limits<double>::infinity();
  for (Index w : y.indices()) {
    double worst = 0.0;
    for (Index v : sigma.vertices()) worst = std::max(worst, x.dist(v, w));
    best = std::min(best, worst);
  }
  return best;
}

SimplicialComplex cech_complex(const SubsetView& x, const SubsetView& y, double alpha, int dim_cap) {
  require_witnesses(y);
  if (!x.same_parent(y)) throw Error(Errc::InvalidArgument, "X and Y belong to different parent spaces");
  if (!(alpha > 0.0)) throw Error(Errc::InvalidArgument, "alpha must be positive");
  if (dim_cap < 0) throw Error(Errc::InvalidArgument, "dimension cap must be nonnegative");
  auto entries = WitnessEnumerator(x, y, dim_cap, alpha).run();
  std::vector<Simplex> simplices;
  simplices.reserve(entries.size());
  for (auto& e : entries) simplices.push_back(std::move(e.simplex));
  return SimplicialComplex(std::move(simplices), dim_cap, x.size());
}

FilteredComplex filtered_cech(const SubsetView& x, const SubsetView& y, int dim_cap, std::size_t budget) {
  require_witnesses(y);
  if (!x.same_parent(y)) throw Error(Errc::InvalidArgument, "X and Y belong to different parent spaces");
  require_budget(x.size(), dim_cap, budget);
  auto entries = WitnessEnumerator(x, y, dim_cap, std::numeric_limits<double>::infinity()).run();
  return FilteredComplex(std::move(entries), dim_cap, x.size());
}

double miniball_radius(const EuclideanCloud& cloud) { return miniball_radius(cloud.coords()); }

FilteredComplex filtered_ambient_cech(const EuclideanCloud& a, int dim_cap, std::size_t budget) {
  require_budget(a.size(), dim_cap, budget);
  std::vector<FilteredSimplex> entries;
  std::vector<Index> stack;
  Eigen::MatrixXd rows;
  auto descend = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t v = start; v < a.size(); ++v) {
      stack.push_back(v);
      double value = 0.0;
      if (stack.size() > 1) {
        rows.resize(static_cast<Eigen::Index>(stack.size()), a.coords().cols());
        for (std::size_t r = 0; r < stack.size(); ++r)
          rows.row(static_cast<Eigen::Index>(r)) = a.point(stack[r]);
        value = miniball_radius(rows);
      }
      entries.push_back({Simplex(stack), value});
      if (static_cast<int>(stack.size()) <= dim_cap) self(self, v + 1);
      stack.pop_back();
    }
  };
  descend(descend, 0);
  // Rounding in the miniball solve can leave a coface a few ulps below a face.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const FilteredSimplex& l, const FilteredSimplex& r) { return l.simplex.dim() < r.simplex.dim(); });
  std::unordered_map<Simplex, double, SimplexHash> value;
  for (auto& e : entries) {
    for (const auto& f : e.simplex.facets()) e.value = std::max(e.value, value.at(f));
    value.emplace(e.simplex, e.value);
  }
  return FilteredComplex(std::move(entries), dim_cap, a.size());
}

// --- serialization ----------------------------------------------------------

void write_filtered_complex(std::ostream& out, const FilteredComplex& complex) {
  out << "# dim_cap " << complex.dim_cap() << " vertex_count " << complex.vertex_count() << '\n';
  for (const auto& e : complex.entries()) {
    out << e.simplex.dim();
    for (Index v : e.simplex.vertices()) out << ' ' << v;
    out << ' ' << io::format_double(e.value) << '\n';
  }
}

FilteredComplex read_filtered_complex(std::istream& in) {
  std::vector<FilteredSimplex> entries;
  std::optional<int> cap;
  std::optional<std::size_t> vertex_count;
  int top = 0;
  Index max_vertex = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      while (hs >> key) {
        if (key == "dim_cap") {
          int c;
          if (hs >> c) cap = c;
        } else if (key == "vertex_count") {
          std::size_t n;
          if (hs >> n) vertex_count = n;
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    const auto fail = [&](const std::string& why) {
      return Error(Errc::ParseError, "complex line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() < 3) throw fail("expected 'dim v0 .. vk value'");
    int dim = 0;
    try {
      dim = std::stoi(tokens[0]);
    } catch (const std::exception&) {
      throw fail("bad dimension");
    }
    if (dim < 0 || tokens.size() != static_cast<std::size_t>(dim) + 3) throw fail("vertex count does not match dim");
    std::vector<Index> verts;
    for (int i = 0; i < dim + 1; ++i) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tokens[static_cast<std::size_t>(i) + 1], &used);
        if (used != tokens[static_cast<std::size_t>(i) + 1].size()) throw fail("bad vertex");
        verts.push_back(static_cast<Index>(v));
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw fail("bad vertex");
      }
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(tokens.back(), &used);
      if (used != tokens.back().size()) throw fail("bad value");
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw fail("bad value");
    }
    top = std::max(top, dim);
    for (Index v : verts) max_vertex = std::max(max_vertex, v);
    any = true;
    entries.push_back({Simplex(std::move(verts)), value});
  }
  const std::size_t n = vertex_count.value_or(any ? max_vertex + 1 : 0);
  return FilteredComplex(std::move(entries), cap.value_or(top), n);
}

}  // namespace cechrec
