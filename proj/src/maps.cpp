#include "cechrec/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cechrec/homology.hpp"

namespace cechrec {

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, VertexMap vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  for (const auto& v : source_.simplices(0))
    if (!map_.defined_at(v[0]))
      throw Error(Errc::VertexMapNotTotal, "source vertex " + std::to_string(v[0]) + " has no image");
}

Simplex SimplicialMap::image(const Simplex& sigma) const {
  std::vector<Index> out;
  out.reserve(sigma.size());
  for (Index v : sigma.vertices()) out.push_back(map_(v));
  return Simplex::from_unsorted(std::move(out));
}

std::optional<Simplex> first_non_simplicial(const SimplicialMap& f) {
  for (int d = 0; d <= f.source().top_dim(); ++d)
    for (const auto& s : f.source().simplices(d))
      if (!f.target().contains(f.image(s))) return s;
  return std::nullopt;
}

bool is_simplicial(const SimplicialMap& f) { return !first_non_simplicial(f); }

std::optional<Simplex> first_non_contiguous(const SimplicialMap& f, const SimplicialMap& g,
                                            const std::function<bool(const Simplex&)>& in_target) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw Error(Errc::SourceTargetMismatch, "contiguity needs maps with the same source and target");
  for (int d = 0; d <= f.source().top_dim(); ++d)
    for (const auto& s : f.source().simplices(d)) {
      const Simplex a = f.image(s);
      const Simplex b = g.image(s);
      std::vector<Index> merged;
      std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                     std::back_inserter(merged));
      if (!in_target(Simplex(std::move(merged)))) return s;
    }
  return std::nullopt;
}

std::optional<Simplex> first_non_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  return first_non_contiguous(f, g, [&](const Simplex& s) { return f.target().contains(s); });
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) { return !first_non_contiguous(f, g); }

// --- reports ----------------------------------------------------------------

bool DiagramReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.pass; });
}

const DiagramCheck* DiagramReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void DiagramReport::append(DiagramReport other) {
  alphas.insert(alphas.end(), other.alphas.begin(), other.alphas.end());
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()), std::make_move_iterator(other.checks.end()));
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

namespace {

std::vector<double> samples_from(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back(values[i]);
    if (i + 1 < values.size()) out.push_back(0.5 * (values[i] + values[i + 1]));
  }
  if (!values.empty()) out.push_back(values.back() + std::max(1.0, std::abs(values.back())));
  std::erase_if(out, [](double v) { return !(v > 0.0); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> critical_union(std::initializer_list<const FilteredComplex*> complexes) {
  std::vector<double> all;
  for (const auto* c : complexes) {
    const auto v = c->critical_values();
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

void add_check(DiagramReport& report, std::string name, double alpha, std::optional<Simplex> counterexample) {
  const bool pass = !counterexample.has_value();
  report.checks.push_back({std::move(name), alpha, pass, std::move(counterexample)});
}

void add_subset_check(DiagramReport& report, std::string name, double alpha, const SimplicialComplex& small,
                      const SimplicialComplex& large) {
  add_check(report, std::move(name), alpha, small.first_missing_from(large));
}

void require_nested(const SubsetView& inner, const SubsetView& outer, const char* what) {
  if (!inner.same_parent(outer)) throw Error(Errc::InvalidArgument, "subsets belong to different parent spaces");
  if (!inner.is_subset_of(outer)) throw Error(Errc::NotASubset, what);
}

// Membership in 𝒞_W(V, level) for simplices of any dimension.
std::function<bool(const Simplex&)> cech_member(const SubsetView& v, const SubsetView& w, double level) {
  return [v, w, level](const Simplex& s) { return filtration_value(s, v, w) < level; };
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Validates ε against d_H(X, A) and records warnings for the boundary case.
void check_epsilon(const SubsetView& x, const SubsetView& a, double epsilon, const InterleavingOptions& options,
                   DiagramReport& report) {
  if (!(epsilon > 0.0)) throw Error(Errc::InvalidArgument, "epsilon must be positive");
  const double dh = directed_hausdorff(x, a);
  if (epsilon < dh) {
    if (!options.allow_small_epsilon)
      throw Error(Errc::EpsilonTooSmall, "epsilon " + format_value(epsilon) + " is below d_H(X,A) = " + format_value(dh));
    report.warnings.push_back("epsilon " + format_value(epsilon) + " is below d_H(X,A) = " + format_value(dh) +
                              "; checks are expected to fail");
  } else if (epsilon == dh) {
    report.warnings.push_back("epsilon equals d_H(X,A); accepted because the finite sample attains the infimum");
  }
}

}  // namespace

std::vector<double> default_alpha_samples(const FilteredComplex& a, const FilteredComplex& b) {
  return samples_from(critical_union({&a, &b}));
}

// --- inclusion diagram ------------------------------------------------------

DiagramReport check_inclusion_diagram(const SubsetView& a, const SubsetView& x, const SubsetView& m, double alpha,
                                      int dim_cap) {
  require_nested(a, x, "A is not a subset of X");
  require_nested(x, m, "X is not a subset of M");
  // c[witness][vertices], each index 0 = A, 1 = X, 2 = M.
  const SubsetView* sets[3] = {&a, &x, &m};
  const char* names[3] = {"A", "X", "M"};
  std::vector<std::vector<SimplicialComplex>> c(3);
  for (int w = 0; w < 3; ++w)
    for (int v = 0; v < 3; ++v) c[w].push_back(cech_complex(*sets[v], *sets[w], alpha, dim_cap));

  DiagramReport report{"inclusion_diagram", {alpha}, {}, {}};
  const auto label = [&](int w, int v) { return std::string("C_") + names[w] + "(" + names[v] + ")"; };
  constexpr int A = 0, X = 1, M = 2;
  const int arrows[12][4] = {
      {A, A, X, A}, {A, A, A, X}, {X, A, M, A}, {X, A, X, X}, {M, A, M, X}, {M, X, M, M},
      {X, X, M, X}, {X, X, X, M}, {A, X, X, X}, {A, X, A, M}, {A, M, X, M}, {X, M, M, M},
  };
  for (const auto& arrow : arrows)
    add_subset_check(report, label(arrow[0], arrow[1]) + " <= " + label(arrow[2], arrow[3]), alpha,
                     c[arrow[0]][arrow[1]], c[arrow[2]][arrow[3]]);
  // Every arrow is an inclusion, so all squares commute once the inclusions hold.
  add_check(report, "commutativity (composites of inclusions)", alpha,
            report.all_pass() ? std::nullopt : report.first_failure()->counterexample);
  return report;
}

// --- Dowker duality ---------------------------------------------------------

namespace {

void dowker_at(DiagramReport& report, const FilteredComplex& yx, const FilteredComplex& xy, double alpha,
               std::span<const double> betas, const DowkerOptions& options) {
  const SimplicialComplex left = yx.slice(alpha);
  const SimplicialComplex right = xy.slice(alpha);
  for (int k = 0; k <= options.k_max; ++k) {
    const auto bl = betti(left, k, options.p);
    const auto br = betti(right, k, options.p);
    DiagramCheck check{"betti[" + std::to_string(k) + "] C_Y(X) = C_X(Y)", alpha, bl == br, std::nullopt};
    if (!check.pass) check.name += " (" + std::to_string(bl) + " vs " + std::to_string(br) + ")";
    report.checks.push_back(std::move(check));
  }
  for (double beta : betas) {
    if (beta > alpha) continue;
    for (int k = 0; k <= options.k_max; ++k) {
      const auto rl = induced_rank_oracle(yx, k, beta, alpha, options.p);
      const auto rr = induced_rank_oracle(xy, k, beta, alpha, options.p);
      DiagramCheck check{"rank phi[" + std::to_string(k) + "] beta=" + format_value(beta), alpha, rl == rr,
                         std::nullopt};
      if (!check.pass) check.name += " (" + std::to_string(rl) + " vs " + std::to_string(rr) + ")";
      report.checks.push_back(std::move(check));
    }
  }
}

void require_dowker_inputs(const SubsetView& x, const SubsetView& y, const DowkerOptions& options) {
  if (x.empty() || y.empty()) throw Error(Errc::EmptySample, "Dowker duality needs nonempty X and Y");
  if (!x.same_parent(y)) throw Error(Errc::InvalidArgument, "X and Y belong to different parent spaces");
  if (options.k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
}

}  // namespace

DiagramReport check_dowker_duality(const SubsetView& x, const SubsetView& y, double alpha,
                                   const DowkerOptions& options) {
  require_dowker_inputs(x, y, options);
  if (!(alpha > 0.0)) throw Error(Errc::InvalidArgument, "alpha must be positive");
  const FilteredComplex yx = filtered_cech(x, y, options.k_max + 1);
  const FilteredComplex xy = filtered_cech(y, x, options.k_max + 1);
  DiagramReport report{"dowker_duality", {alpha}, {}, {}};
  dowker_at(report, yx, xy, alpha, options.betas, options);
  return report;
}

DiagramReport check_dowker_duality_all(const SubsetView& x, const SubsetView& y, const DowkerOptions& options) {
  require_dowker_inputs(x, y, options);
  const FilteredComplex yx = filtered_cech(x, y, options.k_max + 1);
  const FilteredComplex xy = filtered_cech(y, x, options.k_max + 1);
  const auto samples = default_alpha_samples(yx, xy);
  DiagramReport report{"dowker_duality", samples, {}, {}};
  for (double alpha : samples) dowker_at(report, yx, xy, alpha, options.betas, options);
  return report;
}

// --- interleavings ----------------------------------------------------------

DiagramReport check_interleaving(const SubsetView& x, const SubsetView& a, const SubsetView& y, double epsilon,
                                 std::span<const double> alpha_samples, int dim_cap,
                                 const InterleavingOptions& options) {
  require_nested(a, x, "A is not a subset of X");
  if (!y.same_parent(x)) throw Error(Errc::InvalidArgument, "Y belongs to a different parent space");
  if (y.empty()) throw Error(Errc::EmptyWitnessSet, "witness set Y is empty");
  DiagramReport report{"interleaving", {}, {}, {}};
  check_epsilon(x, a, epsilon, options, report);

  const VertexMap pi = projection_map(x, a);
  const VertexMap pi_on_a = VertexMap::inclusion(a, x).then(pi);
  const VertexMap pi_into_x = pi.then(VertexMap::inclusion(a, x));
  const FilteredComplex y_x = filtered_cech(x, y, dim_cap);  // 𝒞_Y(X)
  const FilteredComplex y_a = filtered_cech(a, y, dim_cap);  // 𝒞_Y(A)
  const FilteredComplex x_y = filtered_cech(y, x, dim_cap);  // 𝒞_X(Y)
  const FilteredComplex a_y = filtered_cech(y, a, dim_cap);  // 𝒞_A(Y)

  report.alphas = alpha_samples.empty() ? samples_from(critical_union({&y_x, &y_a, &x_y, &a_y}))
                                        : std::vector<double>(alpha_samples.begin(), alpha_samples.end());
  std::sort(report.alphas.begin(), report.alphas.end());

  {
    std::optional<Simplex> bad;
    for (std::size_t i = 0; i < a.size() && !bad; ++i)
      if (pi_on_a.image()[i] != a[i]) bad = Simplex{a[i]};
    add_check(report, "Pi|_A = Id_A", 0.0, bad);
  }

  for (std::size_t s = 0; s < report.alphas.size(); ++s) {
    const double alpha = report.alphas[s];
    if (!(alpha > 0.0)) throw Error(Errc::InvalidArgument, "alpha samples must be positive");
    const SimplicialComplex kx = y_x.slice(alpha);
    const SimplicialComplex ka = y_a.slice(alpha);
    const SimplicialComplex kx_up = y_x.slice(alpha + epsilon);
    const SimplicialComplex ka_up = y_a.slice(alpha + epsilon);

    // (i) Π_α : 𝒞_Y(X, α) → 𝒞_Y(A, α+ε).
    add_check(report, "Pi simplicial C_Y(X,a) -> C_Y(A,a+e)", alpha,
              first_non_simplicial(SimplicialMap(kx, ka_up, pi)));
    // (ii) the two triangles, up to contiguity.
    add_check(report, "incl o Pi ~ incl on C_Y(X,a) -> C_Y(X,a+e)", alpha,
              first_non_contiguous(SimplicialMap(kx, kx_up, pi_into_x), SimplicialMap(kx, kx_up, VertexMap::identity(x)),
                                  cech_member(x, y, alpha + epsilon)));
    add_check(report, "Pi o incl ~ incl on C_Y(A,a) -> C_Y(A,a+e)", alpha,
              first_non_contiguous(SimplicialMap(ka, ka_up, pi_on_a), SimplicialMap(ka, ka_up, VertexMap::identity(a)),
                                  cech_member(a, y, alpha + epsilon)));
    // (iii) identity on Y in both directions.
    const SimplicialComplex ay = a_y.slice(alpha);
    const SimplicialComplex xy = x_y.slice(alpha);
    const SimplicialComplex ay_up = a_y.slice(alpha + epsilon);
    add_subset_check(report, "C_A(Y,a) <= C_X(Y,a)", alpha, ay, xy);
    add_subset_check(report, "C_X(Y,a) <= C_A(Y,a+e)", alpha, xy, ay_up);

    // (iv) naturality against the previous sample β < α: both routes
    // 𝒞_Y(X, β) → 𝒞_Y(A, α+ε) use the vertex map Π, so they agree once each
    // composite is defined.
    if (s > 0) {
      const double beta = report.alphas[s - 1];
      const SimplicialComplex kx_beta = y_x.slice(beta);
      const SimplicialComplex ka_beta_up = y_a.slice(beta + epsilon);
      std::optional<Simplex> bad = kx_beta.first_missing_from(kx);
      if (!bad) bad = ka_beta_up.first_missing_from(ka_up);
      if (!bad) bad = first_non_simplicial(SimplicialMap(kx_beta, ka_up, pi));
      add_check(report, "naturality Pi beta->alpha", alpha, bad);

      const SimplicialComplex xy_beta = x_y.slice(beta);
      std::optional<Simplex> bad_y = xy_beta.first_missing_from(xy);
      if (!bad_y) bad_y = a_y.slice(beta + epsilon).first_missing_from(ay_up);
      add_check(report, "naturality Id_Y beta->alpha", alpha, bad_y);
    }
  }
  return report;
}

DiagramReport check_reverse_square(const SubsetView& x, const SubsetView& a, double alpha, double epsilon, int dim_cap,
                                   const InterleavingOptions& options) {
  require_nested(a, x, "A is not a subset of X");
  if (!(alpha > 0.0)) throw Error(Errc::InvalidArgument, "alpha must be positive");
  DiagramReport report{"reverse_square", {alpha}, {}, {}};
  check_epsilon(x, a, epsilon, options, report);

  const SimplicialComplex xx = cech_complex(x, x, alpha, dim_cap);                      // 𝒞_X(X, α)
  const SimplicialComplex xa = cech_complex(a, x, alpha + epsilon, dim_cap);            // 𝒞_X(A, α+ε)
  const SimplicialComplex ax = cech_complex(x, a, alpha + epsilon, dim_cap);            // 𝒞_A(X, α+ε)
  const SimplicialComplex aa = cech_complex(a, a, alpha + 2 * epsilon, dim_cap);        // 𝒞_A(A, α+2ε)
  const SimplicialComplex xx_up = cech_complex(x, x, alpha + 2 * epsilon, dim_cap);     // 𝒞_X(X, α+2ε)

  const VertexMap pi = projection_map(x, a);
  const VertexMap id_x = VertexMap::identity(x);
  const VertexMap id_a = VertexMap::identity(a);
  const VertexMap a_in_x = VertexMap::inclusion(a, x);

  add_check(report, "Pi: C_X(X,a) -> C_X(A,a+e)", alpha, first_non_simplicial(SimplicialMap(xx, xa, pi)));
  add_check(report, "incl: C_X(X,a) -> C_A(X,a+e)", alpha, first_non_simplicial(SimplicialMap(xx, ax, id_x)));
  add_check(report, "incl: C_X(A,a+e) -> C_A(A,a+2e)", alpha, first_non_simplicial(SimplicialMap(xa, aa, id_a)));
  add_check(report, "Pi: C_A(X,a+e) -> C_A(A,a+2e)", alpha, first_non_simplicial(SimplicialMap(ax, aa, pi)));
  add_check(report, "incl: C_A(A,a+2e) -> C_X(X,a+2e)", alpha, first_non_simplicial(SimplicialMap(aa, xx_up, a_in_x)));

  // Both paths C_X(X,α) → C_A(A,α+2ε) have vertex map id_A ∘ Π = Π ∘ id_X.
  const VertexMap upper = pi.then(id_a);
  const VertexMap lower = id_x.then(pi);
  add_check(report, "upper ~ lower into C_A(A,a+2e)", alpha,
            first_non_contiguous(SimplicialMap(xx, aa, upper), SimplicialMap(xx, aa, lower),
                                 cech_member(a, a, alpha + 2 * epsilon)));
  add_check(report, "upper path ~ incl into C_X(X,a+2e)", alpha,
            first_non_contiguous(SimplicialMap(xx, xx_up, upper.then(a_in_x)), SimplicialMap(xx, xx_up, id_x),
                                 cech_member(x, x, alpha + 2 * epsilon)));
  add_check(report, "lower path ~ incl into C_X(X,a+2e)", alpha,
            first_non_contiguous(SimplicialMap(xx, xx_up, lower.then(a_in_x)), SimplicialMap(xx, xx_up, id_x),
                                 cech_member(x, x, alpha + 2 * epsilon)));
  return report;
}

}  // namespace cechrec
