// Command-line front end: fixture generation, complex construction,
// persistence, recovery and the diagram verification suites.
//
// Exit status: 0 on success, 2 on validation failure (bad flags, violated
// hypotheses, failed verification checks), 1 on internal error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cechrec/cechrec.hpp"

namespace {

using namespace cechrec;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

struct RunConfig {
  std::string points;
  std::string dist;
  std::string complex;
  std::string x;
  std::string a;
  std::string m;
  std::string y;
  std::string out;
  std::string format = "json";
  std::string gen_kind;
  std::string method = "euclidean-uniform-cube";
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> epsilon;
  std::optional<double> tau;
  std::optional<double> d;
  std::vector<double> alphas;
  std::vector<double> markers;
  int k_max = 2;
  int k = 1;
  std::optional<int> dim_cap;
  std::uint32_t field = 2;
  std::uint64_t seed = 0;
  int q = 14;
  int m_points = 1000;
  std::size_t n = 10;
  double gen_epsilon = 1.0;
  bool ambient = false;
  bool force = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct Space {
  std::shared_ptr<const FiniteMetricSpace> metric;
  std::optional<EuclideanCloud> cloud;
};

Space load_space(const RunConfig& cfg) {
  if (!cfg.points.empty()) {
    EuclideanCloud cloud = io::read_points_csv_file(cfg.points);
    auto metric = cloud.to_metric();
    return {metric, std::move(cloud)};
  }
  if (!cfg.dist.empty()) return {io::read_distance_csv_file(cfg.dist), std::nullopt};
  throw Error(Errc::InvalidArgument, "one of --points or --dist is required");
}

SubsetView subset_or_all(const Space& space, const std::string& path) {
  if (path.empty()) return SubsetView::all(space.metric);
  return SubsetView(space.metric, io::read_index_list_file(path));
}

int dim_cap_of(const RunConfig& cfg) {
  const int cap = cfg.dim_cap.value_or(cfg.k_max + 1);
  if (cap < 0) throw Error(Errc::InvalidArgument, "--dimcap must be nonnegative");
  return cap;
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw Error(Errc::InvalidArgument, std::string(flag) + " is required (positive real)");
  return *v;
}

FilteredComplex build_filtration(const RunConfig& cfg) {
  if (!cfg.complex.empty()) {
    std::ifstream in(cfg.complex);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + cfg.complex + "'");
    return read_filtered_complex(in);
  }
  const Space space = load_space(cfg);
  if (cfg.ambient) {
    if (!space.cloud) throw Error(Errc::InvalidArgument, "--ambient needs --points");
    const SubsetView x = subset_or_all(space, cfg.x);
    return filtered_ambient_cech(space.cloud->select(x.indices()), dim_cap_of(cfg));
  }
  const SubsetView x = subset_or_all(space, cfg.x);
  const SubsetView y = cfg.y.empty() ? x : subset_or_all(space, cfg.y);
  return filtered_cech(x, y, dim_cap_of(cfg));
}

void emit_barcode(const RunConfig& cfg, const Barcode& barcode, std::span<const double> markers) {
  Output out(cfg.out);
  if (cfg.format == "csv")
    write_barcode_csv(out.stream(), barcode);
  else if (cfg.format == "svg")
    out.stream() << emit_barcode_svg(barcode, markers);
  else
    out.stream() << to_json(barcode).dump(2) << '\n';
}

int emit_json(const RunConfig& cfg, const json& j) {
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
  return kExitOk;
}

// --- subcommands ------------------------------------------------------------

int run_gen(const RunConfig& cfg) {
  Output out(cfg.out);
  if (cfg.gen_kind == "circle") {
    io::write_points_csv(out.stream(), *circle_sample(cfg.q).cloud);
  } else if (cfg.gen_kind == "two-point") {
    io::write_points_csv(out.stream(), *two_point_space(cfg.gen_epsilon).cloud);
  } else if (cfg.gen_kind == "proxy") {
    io::write_points_csv(out.stream(), dense_circle_proxy(cfg.m_points));
  } else if (cfg.gen_kind == "random") {
    RandomMethod method;
    if (cfg.method == "euclidean-uniform-cube")
      method = RandomMethod::EuclideanUniformCube;
    else if (cfg.method == "random-symmetric-matrix")
      method = RandomMethod::RandomSymmetricMatrix;
    else
      throw Error(Errc::InvalidArgument, "--method must be euclidean-uniform-cube or random-symmetric-matrix");
    const Fixture f = random_metric_instance(cfg.seed, cfg.n, method);
    out.stream() << "# " << f.name << '\n';
    if (f.cloud)
      io::write_points_csv(out.stream(), *f.cloud);
    else
      io::write_distance_csv(out.stream(), *f.space);
  } else {
    throw Error(Errc::InvalidArgument, "gen kind must be circle, two-point, proxy or random");
  }
  return kExitOk;
}

int run_dh(const RunConfig& cfg) {
  if (cfg.x.empty() || cfg.a.empty()) throw Error(Errc::InvalidArgument, "--x and --a are required");
  double value = 0.0;
  if (!cfg.points.empty() || !cfg.dist.empty()) {
    const Space space = load_space(cfg);
    value = directed_hausdorff(subset_or_all(space, cfg.x), subset_or_all(space, cfg.a));
  } else {
    // --x and --a are point files.
    const EuclideanCloud xs = io::read_points_csv_file(cfg.x);
    const EuclideanCloud as = io::read_points_csv_file(cfg.a);
    value = directed_hausdorff(xs.coords(), as.coords());
  }
  return emit_json(cfg, json{{"directed_hausdorff", value}});
}

int run_complex(const RunConfig& cfg) {
  const FilteredComplex complex = build_filtration(cfg);
  Output out(cfg.out);
  write_filtered_complex(out.stream(), complex);
  return kExitOk;
}

int run_ph(const RunConfig& cfg) {
  const FilteredComplex complex = build_filtration(cfg);
  emit_barcode(cfg, persistence(complex, cfg.k_max, cfg.field), cfg.markers);
  return kExitOk;
}

int run_rank(const RunConfig& cfg) {
  const double beta = require(cfg.beta, "--beta");
  const double alpha = require(cfg.alpha, "--alpha");
  const FilteredComplex complex = build_filtration(cfg);
  const Barcode barcode = persistence(complex, cfg.k_max, cfg.field);
  return emit_json(cfg, json{{"k", cfg.k},
                             {"beta", beta},
                             {"alpha", alpha},
                             {"persistent_image_rank", persistent_image_rank(barcode, {cfg.k, beta, alpha})},
                             {"induced_rank_oracle", induced_rank_oracle(complex, cfg.k, beta, alpha, cfg.field)}});
}

int run_recover(const RunConfig& cfg) {
  const double tau = require(cfg.tau, "--tau");
  const Space space = load_space(cfg);
  const SubsetView a = SubsetView::all(space.metric);
  std::vector<std::string> warnings;
  double d = 0.0;
  if (cfg.d) {
    d = *cfg.d;
  } else if (!cfg.x.empty()) {
    if (!space.cloud) throw Error(Errc::InvalidArgument, "a proxy --x needs --points");
    const EuclideanCloud proxy = io::read_points_csv_file(cfg.x);
    Eigen::MatrixXd both(proxy.size() + space.cloud->size(), space.cloud->ambient_dim());
    if (proxy.size() > 0 && proxy.ambient_dim() != space.cloud->ambient_dim())
      throw Error(Errc::InvalidArgument, "proxy and sample have different ambient dimensions");
    both << proxy.coords(), space.cloud->coords();
    d = directed_hausdorff(both, space.cloud->coords());
    warnings.push_back("d computed from a finite proxy of X is a lower bound; the density check is optimistic");
  } else {
    warnings.push_back("d not supplied; assumed 0, so the density hypothesis d < tau/3 is unchecked");
  }
  double alpha = 0.0;
  double epsilon = 0.0;
  if (cfg.alpha && cfg.epsilon) {
    alpha = *cfg.alpha;
    epsilon = *cfg.epsilon;
  } else {
    const ParamChoice choice = default_params(tau, d);
    alpha = cfg.alpha.value_or(choice.alpha);
    epsilon = cfg.epsilon.value_or(tau - alpha);
  }
  RecoveryParams params = validate_params(tau, d, alpha, epsilon, AlphaEndpoint::ClosedForFiniteSample);
  params.k_max = cfg.k_max;
  params.p = cfg.field;
  RecoveryReport report = recover_homology(a, params);
  report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());
  if (cfg.format == "svg") {
    const double markers[] = {alpha, alpha + epsilon};
    Output out(cfg.out);
    out.stream() << emit_barcode_svg(report.barcode, markers);
    return kExitOk;
  }
  return emit_json(cfg, to_json(report));
}

int finish_reports(const RunConfig& cfg, const json& j, bool pass) {
  emit_json(cfg, j);
  return pass ? kExitOk : kExitValidation;
}

int run_check_dowker(const RunConfig& cfg) {
  const Space space = load_space(cfg);
  const SubsetView x = subset_or_all(space, cfg.x);
  const SubsetView y = subset_or_all(space, cfg.y);
  DowkerOptions options{cfg.k_max, cfg.field, {}};
  if (cfg.beta) options.betas.push_back(*cfg.beta);
  const DiagramReport report =
      cfg.alpha ? check_dowker_duality(x, y, *cfg.alpha, options) : check_dowker_duality_all(x, y, options);
  return finish_reports(cfg, to_json(report), report.all_pass());
}

int run_check_interleave(const RunConfig& cfg) {
  const Space space = load_space(cfg);
  const SubsetView x = subset_or_all(space, cfg.x);
  if (cfg.a.empty()) throw Error(Errc::InvalidArgument, "--a (sample index list) is required");
  const SubsetView a = subset_or_all(space, cfg.a);
  const SubsetView y = cfg.y.empty() ? x : subset_or_all(space, cfg.y);
  const double epsilon = require(cfg.epsilon, "--epsilon");
  const InterleavingOptions options{cfg.force};
  const int cap = dim_cap_of(cfg);
  const DiagramReport inter = check_interleaving(x, a, y, epsilon, cfg.alphas, cap, options);
  json reverse = json::array();
  bool pass = inter.all_pass();
  for (double alpha : inter.alphas) {
    const DiagramReport r = check_reverse_square(x, a, alpha, epsilon, cap, options);
    pass = pass && r.all_pass();
    reverse.push_back(to_json(r));
  }
  return finish_reports(cfg, json{{"interleaving", to_json(inter)}, {"reverse_square", reverse}}, pass);
}

int run_check_diagram(const RunConfig& cfg) {
  const Space space = load_space(cfg);
  if (cfg.a.empty()) throw Error(Errc::InvalidArgument, "--a (sample index list) is required");
  const SubsetView a = subset_or_all(space, cfg.a);
  const SubsetView x = subset_or_all(space, cfg.x);
  const SubsetView m = subset_or_all(space, cfg.m);
  std::vector<double> alphas = cfg.alphas;
  if (cfg.alpha) alphas.push_back(*cfg.alpha);
  if (alphas.empty()) throw Error(Errc::InvalidArgument, "--alpha is required");
  json reports = json::array();
  bool pass = true;
  for (double alpha : alphas) {
    const DiagramReport r = check_inclusion_diagram(a, x, m, alpha, dim_cap_of(cfg));
    pass = pass && r.all_pass();
    reports.push_back(to_json(r));
  }
  return finish_reports(cfg, reports, pass);
}

int run_nsw(const RunConfig& cfg) {
  const Space space = load_space(cfg);
  if (!space.cloud) throw Error(Errc::InvalidArgument, "nsw needs --points");
  const double tau = require(cfg.tau, "--tau");
  const double d = require(cfg.d, "--d");
  const double alpha = require(cfg.alpha, "--alpha");
  const auto betti = nsw_reconstruct_check(*space.cloud, tau, d, alpha, cfg.k_max, cfg.field);
  return emit_json(cfg, json{{"tau", tau}, {"d", d}, {"alpha", alpha}, {"betti", betti}});
}

void add_input_flags(CLI::App* sub, RunConfig& cfg) {
  auto* pts = sub->add_option("--points", cfg.points, "point cloud CSV (one point per row)");
  auto* dst = sub->add_option("--dist", cfg.dist, "distance matrix CSV (full or lower-triangular)");
  pts->excludes(dst);
}

void add_field_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--kmax", cfg.k_max, "top homology dimension (>= 0)")->check(CLI::NonNegativeNumber);
  sub->add_option("--field", cfg.field, "prime field characteristic")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Intrinsic Čech complexes: persistence, homology recovery and diagram checks"};
  app.require_subcommand(1);
  const auto positive = CLI::PositiveNumber;

  auto* gen = app.add_subcommand("gen", "emit a fixture as CSV");
  gen->add_option("kind", cfg.gen_kind, "circle | two-point | proxy | random")->required();
  gen->add_option("--q", cfg.q, "number of roots of unity (>= 3)");
  gen->add_option("--m", cfg.m_points, "proxy size (>= 100)");
  gen->add_option("--epsilon", cfg.gen_epsilon, "two-point distance")->check(positive);
  gen->add_option("--seed", cfg.seed, "random seed");
  gen->add_option("--n", cfg.n, "random instance size");
  gen->add_option("--method", cfg.method, "euclidean-uniform-cube | random-symmetric-matrix");
  gen->add_option("--out", cfg.out, "output path (default stdout)");

  auto* dh = app.add_subcommand("dh", "directed Hausdorff distance d_H(X, A)");
  add_input_flags(dh, cfg);
  dh->add_option("--x", cfg.x, "X: index list, or a point CSV when no --points/--dist");
  dh->add_option("--a", cfg.a, "A: index list, or a point CSV when no --points/--dist");
  dh->add_option("--out", cfg.out, "output path");

  auto* cx = app.add_subcommand("complex", "write the filtered Čech complex C_Y(X)");
  add_input_flags(cx, cfg);
  cx->add_option("--x", cfg.x, "vertex subset X (index list; default all)");
  cx->add_option("--y", cfg.y, "witness subset Y (index list; default X)");
  cx->add_flag("--ambient", cfg.ambient, "ambient Euclidean Čech complex via minimal enclosing balls");
  cx->add_option("--kmax", cfg.k_max, "top homology dimension; default cap is kmax+1")->check(CLI::NonNegativeNumber);
  cx->add_option("--dimcap", cfg.dim_cap, "simplex dimension cap");
  cx->add_option("--out", cfg.out, "output path");

  auto* ph = app.add_subcommand("ph", "barcode of a filtration");
  add_input_flags(ph, cfg);
  ph->add_option("--complex", cfg.complex, "filtered complex file written by 'complex'");
  ph->add_option("--x", cfg.x, "vertex subset X (index list)");
  ph->add_option("--y", cfg.y, "witness subset Y (index list)");
  ph->add_flag("--ambient", cfg.ambient, "ambient Euclidean Čech complex");
  add_field_flags(ph, cfg);
  ph->add_option("--dimcap", cfg.dim_cap, "simplex dimension cap");
  ph->add_option("--format", cfg.format, "json | csv | svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  ph->add_option("--markers", cfg.markers, "alpha markers for svg output");
  ph->add_option("--out", cfg.out, "output path");

  auto* rank = app.add_subcommand("rank", "rank of H_k(slice beta) -> H_k(slice alpha), two ways");
  add_input_flags(rank, cfg);
  rank->add_option("--complex", cfg.complex, "filtered complex file");
  rank->add_option("--x", cfg.x, "vertex subset X");
  rank->add_option("--y", cfg.y, "witness subset Y");
  rank->add_flag("--ambient", cfg.ambient, "ambient Euclidean Čech complex");
  add_field_flags(rank, cfg);
  rank->add_option("--dimcap", cfg.dim_cap, "simplex dimension cap");
  rank->add_option("--k", cfg.k, "homology dimension")->check(CLI::NonNegativeNumber);
  rank->add_option("--beta", cfg.beta, "smaller parameter")->check(positive);
  rank->add_option("--alpha", cfg.alpha, "larger parameter")->check(positive);
  rank->add_option("--out", cfg.out, "output path");

  auto* rec = app.add_subcommand("recover", "homology of X from the intrinsic Čech complex of a sample");
  add_input_flags(rec, cfg);
  rec->add_option("--x", cfg.x, "point CSV of a dense proxy of X, used to compute d");
  rec->add_option("--tau", cfg.tau, "reach of X")->check(positive);
  rec->add_option("--d", cfg.d, "bound on d_H(X, A)")->check(CLI::NonNegativeNumber);
  rec->add_option("--alpha", cfg.alpha, "radius alpha")->check(positive);
  rec->add_option("--epsilon", cfg.epsilon, "persistence shift epsilon")->check(positive);
  add_field_flags(rec, cfg);
  rec->add_option("--format", cfg.format, "json | svg")->check(CLI::IsMember({"json", "svg"}));
  rec->add_option("--out", cfg.out, "output path");

  auto* dow = app.add_subcommand("check-dowker", "Betti and rank equality of C_Y(X) and C_X(Y)");
  add_input_flags(dow, cfg);
  dow->add_option("--x", cfg.x, "X (index list; default all)");
  dow->add_option("--y", cfg.y, "Y (index list; default all)");
  dow->add_option("--alpha", cfg.alpha, "single alpha (default: all critical values)")->check(positive);
  dow->add_option("--beta", cfg.beta, "beta for the induced-rank comparison")->check(positive);
  add_field_flags(dow, cfg);
  dow->add_option("--out", cfg.out, "output path");

  auto* inter = app.add_subcommand("check-interleave", "(0,epsilon)-interleaving and reverse-square checks");
  add_input_flags(inter, cfg);
  inter->add_option("--x", cfg.x, "X (index list; default all)");
  inter->add_option("--a", cfg.a, "A (index list)");
  inter->add_option("--y", cfg.y, "Y (index list; default X)");
  inter->add_option("--epsilon", cfg.epsilon, "interleaving shift")->check(positive);
  inter->add_option("--alpha", cfg.alphas, "alpha samples (default: critical values and midpoints)");
  inter->add_option("--kmax", cfg.k_max, "default cap is kmax+1")->check(CLI::NonNegativeNumber);
  inter->add_option("--dimcap", cfg.dim_cap, "simplex dimension cap");
  inter->add_flag("--force", cfg.force, "run even when epsilon < d_H(X,A)");
  inter->add_option("--out", cfg.out, "output path");

  auto* diag = app.add_subcommand("check-diagram", "inclusions among the nine Čech complexes of A ⊆ X ⊆ M");
  add_input_flags(diag, cfg);
  diag->add_option("--a", cfg.a, "A (index list)");
  diag->add_option("--x", cfg.x, "X (index list; default all)");
  diag->add_option("--m", cfg.m, "M (index list; default all)");
  diag->add_option("--alpha", cfg.alphas, "one or more alpha values");
  diag->add_option("--kmax", cfg.k_max, "default cap is kmax+1")->check(CLI::NonNegativeNumber);
  diag->add_option("--dimcap", cfg.dim_cap, "simplex dimension cap");
  diag->add_option("--out", cfg.out, "output path");

  auto* nsw = app.add_subcommand("nsw", "Betti numbers of the ambient Čech complex at alpha");
  add_input_flags(nsw, cfg);
  nsw->add_option("--tau", cfg.tau, "reach of X")->check(positive);
  nsw->add_option("--d", cfg.d, "bound on d_H(X, A)")->check(CLI::NonNegativeNumber);
  nsw->add_option("--alpha", cfg.alpha, "radius alpha")->check(positive);
  add_field_flags(nsw, cfg);
  nsw->add_option("--out", cfg.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*gen) return run_gen(cfg);
    if (*dh) return run_dh(cfg);
    if (*cx) return run_complex(cfg);
    if (*ph) return run_ph(cfg);
    if (*rank) return run_rank(cfg);
    if (*rec) return run_recover(cfg);
    if (*dow) return run_check_dowker(cfg);
    if (*inter) return run_check_interleave(cfg);
    if (*diag) return run_check_diagram(cfg);
    if (*nsw) return run_nsw(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
