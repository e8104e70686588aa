// Command line front end: analyze a node file, evaluate bound formulas,
// run the duality certificate, or drive an experiment sweep.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vand/bounds.hpp"
#include "vand/certificate.hpp"
#include "vand/dirichlet.hpp"
#include "vand/geometry.hpp"
#include "vand/harness.hpp"
#include "vand/node_io.hpp"
#include "vand/spectra.hpp"
#include "vand/types.hpp"

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string full_name(const vand::BoundReport& r) {
  return r.variant.empty() ? r.name : r.name + "/" + r.variant;
}

// All reports for a configuration: the lower bound formulas plus the upper
// bounds witnessed by the closest pair.
std::vector<vand::BoundReport> all_reports(const vand::NodeSet& ns,
                                           const vand::GeometrySummary& gs) {
  std::vector<vand::BoundReport> reports = vand::lower_bound_reports(gs);
  if (ns.size() >= 2)
    for (auto& r : vand::upper_bound_pair(ns)) reports.push_back(std::move(r));
  return reports;
}

// Comment line that states how nodes were grouped; threshold ties are decided
// with an absolute slack so on-boundary configurations stay intact.
void print_cluster_rule() {
  std::printf("# clusters: components of the wrap distance <= 1/N graph, slack %g absolute\n",
              vand::kDistSlack);
}

int cmd_analyze(const std::string& nodefile, bool oracle) {
  vand::NodeSet ns = vand::read_node_file(nodefile);
  vand::ClusterDecomposition cd = vand::decompose_clusters(ns);
  vand::GeometrySummary gs = vand::geometry_summary(ns, cd);
  vand::SigmaResult sr = vand::smallest_singular_value(ns);

  print_cluster_rule();
  if (!gs.valid) std::printf("# geometry: %s\n", gs.message.c_str());
  if (sr.rank_warning)
    std::printf("# rank: M > N^d, a zero singular value is structural\n");

  std::vector<vand::BoundReport> applicable;
  if (gs.valid)
    for (auto& r : all_reports(ns, gs))
      if (r.applicable) applicable.push_back(std::move(r));

  const bool run_oracle = oracle && ns.within_definition() && (double)ns.size() < 1e5 &&
                          ns.Npow() <= 1e5;
  if (oracle && !run_oracle) std::printf("# oracle skipped: needs N^d <= 1e5\n");

  std::string header = vand::geometry_csv_header();
  header += ",sigma_min,method,residual,clipped";
  for (const auto& r : applicable)
    header += "," + std::string(r.lower ? "lower_" : "upper_") + full_name(r);
  if (run_oracle) header += ",oracle_sigma_min,oracle_rel_gap";
  std::printf("%s\n", header.c_str());

  std::string row = vand::geometry_csv_row(gs);
  row += "," + fmt(sr.sigma_min) + "," + sr.method + "," + fmt(sr.residual) + "," +
         (sr.clipped ? "1" : "0");
  for (const auto& r : applicable) row += "," + fmt(r.value);
  if (run_oracle) {
    vand::SigmaResult ora = vand::explicit_vandermonde_smin(ns);
    const double denom = std::max(std::abs(ora.sigma_min), 1e-300);
    row += "," + fmt(ora.sigma_min) + "," + fmt(std::abs(ora.sigma_min - sr.sigma_min) / denom);
  }
  std::printf("%s\n", row.c_str());
  return 0;
}

int cmd_bound(const std::string& nodefile, const std::string& which, bool explain) {
  vand::NodeSet ns = vand::read_node_file(nodefile);
  vand::ClusterDecomposition cd = vand::decompose_clusters(ns);
  vand::GeometrySummary gs = vand::geometry_summary(ns, cd);
  print_cluster_rule();
  if (!gs.valid) {
    std::fprintf(stderr, "error: geometry invalid: %s\n", gs.message.c_str());
    return 1;
  }

  std::vector<vand::BoundReport> reports = all_reports(ns, gs);
  std::vector<vand::BoundReport> selected;
  for (auto& r : reports)
    if (which == "all" || which == r.name || which == full_name(r))
      selected.push_back(std::move(r));
  if (selected.empty()) {
    std::fprintf(stderr, "error: no bound named '%s'; valid names:\n", which.c_str());
    for (const auto& r : reports) std::fprintf(stderr, "  %s\n", full_name(r).c_str());
    return 1;
  }

  std::printf("%s\n", vand::bound_csv_header().c_str());
  for (const auto& r : selected) std::printf("%s\n", vand::bound_csv_row(r).c_str());
  if (explain)
    for (const auto& r : selected) std::printf("%s\n", vand::bound_explain(r).c_str());
  return 0;
}

std::vector<vand::cdouble> read_vector_file(const std::string& path, long M) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vector file " + path);
  std::vector<vand::cdouble> v;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    double re = std::stod(first), im = 0.0;
    ss >> im;
    v.emplace_back(re, im);
  }
  if ((long)v.size() != M)
    throw std::runtime_error("vector file holds " + std::to_string(v.size()) +
                             " entries, node file has " + std::to_string(M));
  return v;
}

int cmd_certify(const std::string& nodefile, int beta, const std::string& vector_kind,
                bool residuals, const std::string& dump_kernel) {
  vand::NodeSet ns = vand::read_node_file(nodefile);
  vand::ClusterDecomposition cd = vand::decompose_clusters(ns);
  if (!cd.valid) {
    std::fprintf(stderr, "error: cluster decomposition invalid: %s\n", cd.message.c_str());
    return 1;
  }
  if (beta == 0) beta = (ns.d % 2 == 1) ? ns.d + 1 : ns.d + 2;

  vand::CertificateSpec spec = vand::make_certificate_spec(ns, cd, beta);
  if (!spec.within_lemma)
    std::printf("# warning: outside decay lemma hypotheses (beta even, n >= 2 beta^2 lambda)\n");

  std::vector<vand::cdouble> v;
  if (vector_kind == "min-singular") {
    v = vand::smallest_singular_pair(ns).min_vector;
  } else if (vector_kind == "uniform") {
    v.assign((std::size_t)ns.size(), vand::cdouble(1.0 / std::sqrt((double)ns.size()), 0.0));
  } else if (vector_kind.rfind("file:", 0) == 0) {
    v = read_vector_file(vector_kind.substr(5), ns.size());
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm <= 0.0) throw std::runtime_error("vector file is identically zero");
    if (std::abs(norm - 1.0) > 1e-12) {
      std::printf("# vector normalized from l2 norm %s\n", fmt(norm).c_str());
      for (auto& z : v) z /= norm;
    }
  } else {
    std::fprintf(stderr, "error: --vector must be min-singular, uniform or file:<path>\n");
    return 1;
  }

  vand::CertificateResult r = vand::robust_duality_bound(ns, cd, spec, v);
  std::printf("%s\n", vand::certificate_csv_header().c_str());
  std::printf("%s\n", vand::certificate_csv_row(ns, spec, r).c_str());
  if (residuals) {
    std::printf("node,residual\n");
    for (std::size_t j = 0; j < r.node_residuals.size(); ++j)
      std::printf("%zu,%s\n", j, fmt(r.node_residuals[j]).c_str());
  }
  if (!dump_kernel.empty()) {
    std::ofstream out(dump_kernel);
    if (!out) throw std::runtime_error("cannot open " + dump_kernel);
    out << vand::coeffs_csv(vand::dirichlet_power_coeffs(spec.P, spec.beta));
    std::printf("# kernel coefficients (P=%ld, beta=%d) written to %s\n", spec.P, spec.beta,
                dump_kernel.c_str());
  }
  return 0;
}

int cmd_experiment(vand::ExperimentConfig cfg) {
  vand::RunResult res = vand::run_experiment(cfg);
  long ok = 0;
  for (const auto& rec : res.records)
    if (rec.status == "ok") ++ok;
  std::printf("# wrote %s\n", res.csv_path.c_str());
  std::printf("# wrote %s\n", res.plot_path.c_str());
  std::printf("id,trials,ok,lower_violations,upper_violations\n");
  std::printf("%s,%ld,%ld,%ld,%ld\n", cfg.id.c_str(), cfg.trials, ok, res.lower_violations,
              res.upper_violations);
  return (res.lower_violations + res.upper_violations > 0) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smallest singular value toolkit for nodes on the unit torus"};
  app.require_subcommand(1);

  std::string nodefile;
  bool oracle = false;
  auto* an = app.add_subcommand(
      "analyze", "geometry summary, sigma_min and every applicable bound, one CSV row");
  an->add_option("nodefile", nodefile, "node file with a '# d=<d> n=<n>' header")->required();
  an->add_flag("--oracle", oracle,
               "cross-check sigma_min against the explicit matrix (needs N^d <= 1e5)");

  std::string which = "all";
  bool explain = false;
  auto* bd = app.add_subcommand("bound", "evaluate bound formulas with their conditions");
  bd->add_option("nodefile", nodefile, "node file with a '# d=<d> n=<n>' header")->required();
  bd->add_option("--which", which, "all, a family name, or name/variant (default all)");
  bd->add_flag("--explain", explain, "append the formula behind each report");

  int beta = 0;
  std::string vector_kind = "min-singular";
  bool residuals = false;
  std::string dump_kernel;
  auto* ce = app.add_subcommand("certify", "duality certificate for a lower bound witness");
  ce->add_option("nodefile", nodefile, "node file with a '# d=<d> n=<n>' header")->required();
  ce->add_option("--beta", beta, "kernel power (default: d+1 rounded up to even)");
  ce->add_option("--vector", vector_kind, "min-singular, uniform or file:<path>");
  ce->add_flag("--residuals", residuals, "print the per-node residual table");
  ce->add_option("--dump-kernel", dump_kernel,
                 "write the kernel coefficient table (index,re,im) to this file");

  std::string exp_id;
  vand::ExperimentConfig cfg;
  long N = 0, M = 0, L = 0, trials = 0;
  double tau_lo = 0, tau_hi = 0, a_par = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  auto* ex = app.add_subcommand("experiment",
                                "run a sweep: pair1d, cluster1d, pair2d or triple2d");
  ex->add_option("id", exp_id, "experiment id")->required();
  ex->add_option("--N", N, "frequencies per coordinate");
  ex->add_option("--M", M, "node count (pair1d; derived elsewhere)");
  ex->add_option("--L", L, "cluster count (cluster1d, pair2d)");
  ex->add_option("--trials", trials, "sweep size");
  ex->add_option("--tau-lo", tau_lo, "smallest scaled separation");
  ex->add_option("--tau-hi", tau_hi, "largest scaled separation");
  ex->add_option("--seed", seed, "RNG seed (default 1)");
  ex->add_option("--out", out_dir, "output directory (default .)");
  ex->add_option("--a", a_par, "triple2d displacement in [0,1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*an) return cmd_analyze(nodefile, oracle);
    if (*bd) return cmd_bound(nodefile, which, explain);
    if (*ce) return cmd_certify(nodefile, beta, vector_kind, residuals, dump_kernel);

    cfg = vand::default_config(exp_id);
    if (ex->count("--N")) cfg.N = N;
    if (ex->count("--M")) cfg.M = M;
    if (ex->count("--L")) cfg.L = L;
    if (ex->count("--trials")) cfg.trials = trials;
    if (ex->count("--tau-lo")) cfg.tau_lo = tau_lo;
    if (ex->count("--tau-hi")) cfg.tau_hi = tau_hi;
    if (ex->count("--seed")) cfg.seed = seed;
    if (ex->count("--out")) cfg.out_dir = out_dir;
    if (ex->count("--a")) cfg.a = a_par;
    // Coupled parameters: pairs come in twos, cluster1d runs 5-node clusters.
    if (exp_id == "pair1d") {
      if (ex->count("--L") && !ex->count("--M")) cfg.M = 2 * cfg.L;
      cfg.L = cfg.M / 2;
    } else if (exp_id == "cluster1d") {
      if (ex->count("--M") && cfg.M != 5 * cfg.L)
        throw std::invalid_argument("cluster1d derives M = 5 L; drop --M or match it");
      cfg.M = 5 * cfg.L;
    } else if (exp_id == "pair2d") {
      if (ex->count("--M") && cfg.M != 2 * cfg.L)
        throw std::invalid_argument("pair2d derives M = 2 L; drop --M or match it");
      cfg.M = 2 * cfg.L;
    } else {
      if (ex->count("--M") && cfg.M != 3)
        throw std::invalid_argument("triple2d always places 3 nodes");
      cfg.M = 3;
    }
    return cmd_experiment(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
