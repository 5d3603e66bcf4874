// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cechrec/cechrec.hpp"
#include "oracles.hpp"

using namespace cechrec;

namespace {

// Pinned tolerances.
constexpr double kBirthTolerance = 1e-9;
constexpr double kThresholdTolerance = 1e-9;
constexpr double kCircleRuntimeSeconds = 5.0;
constexpr double kDowkerRuntimeSeconds = 60.0;

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("unexpected exception: ") + e.what()};
  }
  if (!o.pass) ++g_failures;
  std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double circle_dh(int q) { return 2.0 * std::sin(std::numbers::pi / (2.0 * q)); }

std::string show(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

using Lists = std::vector<std::vector<Index>>;

Lists as_lists(const SimplicialComplex& k) {
  Lists out;
  for (const auto& s : k.all_simplices()) out.emplace_back(s.vertices().begin(), s.vertices().end());
  std::sort(out.begin(), out.end());
  return out;
}

SubsetView random_subset(const std::shared_ptr<const FiniteMetricSpace>& space, std::size_t max_size,
                         std::mt19937_64& rng) {
  const std::size_t n = space->size();
  std::vector<Index> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(n, max_size))(rng);
  std::vector<Index> pick(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(pick.begin(), pick.end());
  return SubsetView(space, std::move(pick));
}

// Filtrations collected along the way for the structural-invariant sweep.
std::vector<std::pair<std::string, FilteredComplex>> g_fixtures;

void remember(std::string name, FilteredComplex f) { g_fixtures.emplace_back(std::move(name), std::move(f)); }

// --- criteria ---------------------------------------------------------------

Outcome circle_recovery() {
  const auto t0 = std::chrono::steady_clock::now();
  const Fixture f = circle_sample(14);
  const RecoveryParams p = validate_params(1.0, circle_dh(14), 0.5, 0.5);
  const RecoveryReport r = recover_homology(f.a, p);
  const double expected_birth = 2.0 * std::sin(std::numbers::pi / 14.0);
  std::vector<double> h1_births;
  for (const auto& b : r.barcode.bars())
    if (b.dim == 1 && b.birth < p.alpha && b.death >= p.alpha + p.epsilon) h1_births.push_back(b.birth);
  const double elapsed = seconds_since(t0);
  const bool claim_ok = r.betti_claim == std::vector<std::size_t>{1, 1, 0};
  const bool birth_ok = h1_births.size() == 1 && std::abs(h1_births[0] - expected_birth) <= kBirthTolerance;
  std::ostringstream os;
  os.precision(12);
  os << "betti_claim=" << show(r.betti_claim) << " h1_birth="
     << (h1_births.size() == 1 ? h1_births[0] : std::nan("")) << " expected=" << expected_birth
     << " runtime=" << elapsed << "s";
  return {claim_ok && birth_ok && elapsed < kCircleRuntimeSeconds, os.str()};
}

Outcome threshold_tightness() {
  const double d10 = circle_dh(10);
  const double d9 = circle_dh(9);
  bool ok = std::abs(d10 - 0.31286893008046174) <= kThresholdTolerance && d10 < 1.0 / 3.0;
  ok = ok && std::abs(d9 - 0.34729635533386066) <= kThresholdTolerance && d9 >= 1.0 / 3.0;
  // The fixtures' own facts must agree with the closed form.
  ok = ok && std::abs(circle_sample(10).d_h - d10) <= kThresholdTolerance &&
       std::abs(circle_sample(9).d_h - d9) <= kThresholdTolerance;
  bool accepts10 = false;
  try {
    const ParamChoice c = default_params(1.0, d10);
    validate_params(1.0, d10, c.alpha, c.epsilon, AlphaEndpoint::ClosedForFiniteSample);
    accepts10 = true;
  } catch (const Error&) {
  }
  bool rejects9 = false;
  try {
    default_params(1.0, d9);
  } catch (const Error& e) {
    rejects9 = e.code() == Errc::DensityTooLow;
  }
  std::ostringstream os;
  os.precision(12);
  os << "2sin(pi/20)=" << d10 << " 2sin(pi/18)=" << d9 << " q=10 accepted=" << accepts10
     << " q=9 rejected(DensityTooLow)=" << rejects9;
  return {ok && accepts10 && rejects9, os.str()};
}

Outcome two_point_example() {
  const double eps = 1.0;
  const Fixture f = two_point_space(eps);
  const Lists only_x1{{0}};
  const Lists two_vertices{{0}, {1}};
  const Lists full{{0}, {0, 1}, {1}};
  std::vector<std::string> problems;
  std::size_t complex_problems = 0;
  for (double alpha : {0.5 * eps, 1.0 * eps, 2.0 * eps}) {
    const bool small = alpha <= eps;
    auto expect = [&](const char* name, const SimplicialComplex& k, const Lists& want) {
      if (as_lists(k) == want) return;
      ++complex_problems;
      problems.push_back(std::string(name) + " at alpha=" + std::to_string(alpha));
    };
    expect("C_A(A)", cech_complex(f.a, f.a, alpha, 1), only_x1);
    expect("C_X(A)", cech_complex(f.a, f.x, alpha, 1), only_x1);
    expect("C_A(X)", cech_complex(f.x, f.a, alpha, 1), small ? only_x1 : full);
    expect("C_X(X)", cech_complex(f.x, f.x, alpha, 1), small ? two_vertices : full);
  }
  // Triangles: Π followed by the inclusion against the plain inclusion, into
  // 𝒞_X(X, α + s) with s just above d_H.
  const double s = std::nextafter(eps, 2.0 * eps);
  const VertexMap pi_into_x = projection_map(f.x, f.a).then(VertexMap::inclusion(f.a, f.x));
  const VertexMap id = VertexMap::identity(f.x);
  int triangles = 0;
  for (double alpha : {0.5 * eps, 2.0 * eps}) {
    const SimplicialComplex top = cech_complex(f.x, f.x, alpha, 1);
    const SimplicialComplex bottom = cech_complex(f.x, f.x, alpha + s, 1);
    const SimplicialMap f1(top, bottom, pi_into_x);
    const SimplicialMap f2(top, bottom, id);
    if (is_simplicial(f1) && is_simplicial(f2) && are_contiguous(f1, f2))
      ++triangles;
    else
      problems.push_back("triangle at alpha=" + std::to_string(alpha));
  }
  bool refused = false;
  try {
    validate_params(*f.tau, f.d_h, 0.5 * eps, 0.5 * eps);
  } catch (const Error& e) {
    refused = e.code() == Errc::DensityTooLow;
  }
  std::ostringstream os;
  os << "complex mismatches=" << complex_problems << " contiguous triangles=" << triangles
     << "/2 recovery refused(DensityTooLow)=" << refused;
  for (const auto& p : problems) os << " [" << p << "]";
  return {problems.empty() && triangles == 2 && refused, os.str()};
}

Outcome dowker_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t failures = 0, alphas = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto method = seed % 2 ? RandomMethod::EuclideanUniformCube : RandomMethod::RandomSymmetricMatrix;
    std::mt19937_64 rng(seed * 7919);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 14)(rng);
    const Fixture f = random_metric_instance(seed, n, method);
    const SubsetView x = random_subset(f.space, 10, rng);
    const SubsetView y = random_subset(f.space, 10, rng);
    const DiagramReport r = check_dowker_duality_all(x, y, DowkerOptions{2, 2, {}});
    alphas += r.alphas.size();
    if (!r.all_pass()) {
      ++failures;
      if (first.empty()) first = f.name + ": " + r.first_failure()->name;
    }
    remember(f.name + "/dowker", filtered_cech(x, y, 3));
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << "pairs=50 alphas_checked=" << alphas << " failures=" << failures << " runtime=" << elapsed << "s";
  if (!first.empty()) os << " first=" << first;
  return {failures == 0 && elapsed < kDowkerRuntimeSeconds, os.str()};
}

Outcome interleaving_suite() {
  std::size_t instances = 0, failures = 0, alphas = 0;
  std::string first;
  for (std::uint64_t seed = 1; instances < 30; ++seed) {
    std::mt19937_64 rng(seed * 104729);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const Fixture f = random_metric_instance(seed, n, RandomMethod::EuclideanUniformCube);
    const double dh = directed_hausdorff(f.x, f.a);
    if (dh == 0.0) continue;  // A = X leaves no ε > d_H = 0 to scale
    ++instances;
    const double eps = dh * 1.01;
    const SubsetView& y = seed % 3 == 0 ? f.a : (seed % 3 == 1 ? f.x : f.m);
    const DiagramReport inter = check_interleaving(f.x, f.a, y, eps, {}, 2);
    bool ok = inter.all_pass();
    for (double alpha : inter.alphas) {
      if (!(alpha > 0.0)) continue;
      ok = ok && check_reverse_square(f.x, f.a, alpha, eps, 2).all_pass();
    }
    alphas += inter.alphas.size();
    if (!ok) {
      ++failures;
      if (first.empty()) first = f.name;
    }
    remember(f.name + "/interleave", filtered_cech(f.x, y, 3));
  }
  // Negative control on the two-point space with ε = d_H / 2.
  const Fixture two = two_point_space(1.0);
  const SubsetView y2(two.space, {1});
  const DiagramReport bad =
      check_interleaving(two.x, two.a, y2, 0.5 * two.d_h, {}, 1, InterleavingOptions{true});
  const DiagramCheck* cx = bad.first_failure();
  const bool control_ok = cx != nullptr && cx->name.find("simplicial") != std::string::npos &&
                          cx->counterexample.has_value() &&
                          oracle::is_projection_counterexample(
                              two.space->matrix(),
                              {cx->counterexample->vertices().begin(), cx->counterexample->vertices().end()}, {0}, {1},
                              cx->alpha, 0.5 * two.d_h);
  std::ostringstream os;
  os << "instances=" << instances << " alphas=" << alphas << " failures=" << failures;
  if (!first.empty()) os << " first=" << first;
  os << " two-point eps=d_H/2: ";
  if (cx) {
    os << "'" << cx->name << "' fails at alpha=" << cx->alpha << " on {";
    if (cx->counterexample)
      for (std::size_t i = 0; i < cx->counterexample->size(); ++i)
        os << (i ? "," : "") << (*cx->counterexample)[i];
    os << "}";
  }
  else
    os << "no failure reported";
  return {failures == 0 && control_ok, os.str()};
}

Outcome oracle_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t comparisons = 0, discrepancies = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::mt19937_64 rng(seed * 15485863);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 10)(rng);
    const auto method = seed % 2 ? RandomMethod::EuclideanUniformCube : RandomMethod::RandomSymmetricMatrix;
    const Fixture f = random_metric_instance(seed, n, method);
    const FilteredComplex fc = filtered_cech(f.x, f.m, 3);
    const auto crit = fc.critical_values();
    for (std::uint32_t p : {2u, 3u}) {
      const Barcode b = persistence(fc, 2, p);
      for (std::size_t i = 0; i < crit.size(); ++i)
        for (std::size_t j = i; j < crit.size(); ++j)
          for (int k = 0; k <= 2; ++k) {
            ++comparisons;
            const auto fast = persistent_image_rank(b, {k, crit[i], crit[j]});
            const auto slow = induced_rank_oracle(fc, k, crit[i], crit[j], p);
            if (fast != slow) {
              ++discrepancies;
              if (first.empty()) first = f.name + " k=" + std::to_string(k) + " p=" + std::to_string(p);
            }
          }
    }
    remember(f.name + "/oracle", fc);
  }
  std::ostringstream os;
  os << "filtrations=40 comparisons=" << comparisons << " discrepancies=" << discrepancies
     << " runtime=" << seconds_since(t0) << "s";
  if (!first.empty()) os << " first=" << first;
  return {discrepancies == 0, os.str()};
}

Outcome cross_method() {
  std::ostringstream os;
  bool ok = true;
  for (int q : {10, 14, 20}) {
    const Fixture f = circle_sample(q);
    const double d = circle_dh(q);
    os << "q=" << q << ": ";
    try {
      const auto nsw = nsw_reconstruct_check(*f.cloud, 1.0, d, 0.6);
      os << "nsw=" << show(nsw);
      ok = ok && nsw == std::vector<std::size_t>{1, 1, 0};
    } catch (const Error& e) {
      // Report what the ambient complex would give, for the record.
      const auto slice = filtered_ambient_cech(*f.cloud, 3).slice(0.6);
      std::vector<std::size_t> raw;
      for (int k = 0; k <= 2; ++k) raw.push_back(betti(slice, k));
      os << "nsw refused (" << e.what() << "; unchecked ambient Betti at 0.6=" << show(raw) << ")";
      ok = false;
    }
    const ParamChoice c = default_params(1.0, d);
    const RecoveryParams p = validate_params(1.0, d, c.alpha, c.epsilon, AlphaEndpoint::ClosedForFiniteSample);
    const RecoveryReport r = recover_homology(f.a, p);
    os << " recover=" << show(r.betti_claim) << "; ";
    ok = ok && r.betti_claim == std::vector<std::size_t>{1, 1, 0};
    remember("circle_" + std::to_string(q), filtered_cech(f.a, f.a, 3));
  }
  return {ok, os.str()};
}

// Euler–Poincaré for the chain complex truncated at the cap: the top degree
// contributes dim ker ∂_top.
bool euler_holds(const SimplicialComplex& k, std::uint32_t p) {
  const int top = k.top_dim();
  if (top < 0) return true;
  const ChainComplexMatrices cc = chain_complex(k, PrimeField(p));
  long long cells_sum = 0, homology_sum = 0;
  for (int d = 0; d <= top; ++d) {
    const long long sign = d % 2 ? -1 : 1;
    const long long cells = static_cast<long long>(k.simplices(d).size());
    cells_sum += sign * cells;
    long long h = 0;
    if (d < top || k.complete())
      h = static_cast<long long>(betti(k, d, p));
    else
      h = cells - static_cast<long long>(cc.boundary[static_cast<std::size_t>(d)].rank());
    homology_sum += sign * h;
  }
  return cells_sum == homology_sum;
}

Outcome structural_invariants() {
  const Fixture two = two_point_space(1.0);
  remember("two_point", filtered_cech(two.x, two.x, 1));
  std::size_t checks = 0, failures = 0;
  std::string first;
  for (const auto& [name, fc] : g_fixtures) {
    std::mt19937_64 rng(std::hash<std::string>{}(name));
    const auto crit = fc.critical_values();
    const double hi = (crit.empty() ? 1.0 : crit.back()) * 1.1 + 1e-3;
    std::uniform_real_distribution<double> u(0.0, hi);
    const int k_max = std::min(2, fc.dim_cap() - 1 < 0 ? 0 : fc.dim_cap() - 1);
    const Barcode b = persistence(fc, std::max(0, k_max));
    for (int t = 0; t < 20; ++t) {
      const double alpha = u(rng);
      const SimplicialComplex k = fc.slice(alpha);
      bool ok = chain_complex(k, PrimeField(2)).is_chain_complex() && chain_complex(k, PrimeField(3)).is_chain_complex();
      ok = ok && euler_holds(k, 2);
      for (int d = 0; d <= std::max(0, k_max); ++d) ok = ok && b.alive_count(d, alpha) == betti(k, d, 2);
      ++checks;
      if (!ok) {
        ++failures;
        if (first.empty()) first = name + " alpha=" + std::to_string(alpha);
      }
    }
  }
  std::ostringstream os;
  os << "fixtures=" << g_fixtures.size() << " slices=" << checks << " failures=" << failures;
  if (!first.empty()) os << " first=" << first;
  return {failures == 0, os.str()};
}

}  // namespace

int main() {
  report(1, "circle recovery A_14 (tau=1, alpha=0.5, eps=0.5)", circle_recovery);
  report(2, "density threshold q>=10", threshold_tightness);
  report(3, "two-point example", two_point_example);
  report(4, "Dowker duality property suite", dowker_suite);
  report(5, "interleaving property suite", interleaving_suite);
  report(6, "persistent image rank vs induced rank oracle", oracle_suite);
  report(7, "cross-method agreement (ambient vs intrinsic)", cross_method);
  report(8, "structural invariants", structural_invariants);
  std::printf("%d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
