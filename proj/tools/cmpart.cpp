// cmpart: Calogero-Moser partitions and Rouquier families of G(m,d,n).
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmpart/commands.hpp"

namespace {

struct JobFlags {
  int m = 0, d = 0, n = 0;
  std::string params;
  bool generic = false;
  std::string format;
  bool force = false;
  bool scaled = false;
  int k_bound = 0;
  CLI::Option* m_opt = nullptr;
  CLI::Option* d_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* params_opt = nullptr;
  CLI::Option* k_bound_opt = nullptr;

  void attach(CLI::App* app, bool with_params = true) {
    m_opt = app->add_option("-m", m, "m in G(m,d,n)");
    d_opt = app->add_option("-d", d, "d in G(m,d,n), default 1");
    n_opt = app->add_option("-n", n, "rank n");
    if (with_params) {
      params_opt = app->add_option("--params", params, "parameter JSON (inline or file)");
      app->add_flag("--generic", generic, "use the gap-witness generic parameter");
    }
    app->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app->add_flag("--force", force, "lift the 10^6 size guards");
  }

  cmpart::cli::JobSpec spec(const std::string& default_format = "json") const {
    cmpart::cli::JobSpec job;
    if (m_opt && m_opt->count()) job.m = m;
    if (d_opt && d_opt->count()) job.d = d;
    if (n_opt && n_opt->count()) job.n = n;
    if (params_opt && params_opt->count()) job.params = params;
    if (k_bound_opt && k_bound_opt->count()) job.k_bound = k_bound;
    job.generic = generic;
    job.format = format.empty() ? default_format : format;
    job.force = force;
    job.scaled = scaled;
    return job;
  }
};

int emit(const cmpart::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calogero-Moser partitions and Rouquier families of G(m,d,n)"};
  app.require_subcommand(1);

  JobFlags en, cm, rq, cmp, pr, ve, orc;
  auto* enumerate = app.add_subcommand("enumerate", "list P(m,n)");
  en.attach(enumerate, false);

  std::string label;
  std::vector<std::int64_t> shift;
  std::int64_t e = 1;
  auto* residue = app.add_subcommand("residue", "residue of a multipartition, e.g. \"(3,1|2|)\"");
  residue->add_option("label", label, "multipartition")->required();
  residue->add_option("--shift", shift, "shift vector s")->delimiter(',');
  residue->add_option("-e", e, "exponent scaling");

  auto* params = app.add_subcommand("params", "c <-> H <-> s translation");
  pr.attach(params);

  auto* cmc = app.add_subcommand("cm", "Calogero-Moser partition of Irr G(m,d,n)");
  cm.attach(cmc);
  cmc->add_flag("--scaled", cm.scaled, "report residues at x^e");

  std::string compare_with;
  auto* rouq = app.add_subcommand("rouquier", "Rouquier families of Irr G(m,d,n)");
  rq.attach(rouq);
  rouq->add_flag("--scaled", rq.scaled, "report residues at x^e");
  rouq->add_option("--compare", compare_with, "compare against: cm");
  rq.k_bound_opt = rouq->add_option("--k-bound", rq.k_bound, "hyperplanes use |k| < bound, default m");

  auto* compare = app.add_subcommand("compare", "Rouquier families against CM blocks");
  cmp.attach(compare);
  cmp.k_bound_opt = compare->add_option("--k-bound", cmp.k_bound, "hyperplanes use |k| < bound, default m");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(cmpart::cli::suite_names()));
  ve.attach(verify);

  auto* oracle = app.add_subcommand("oracle", "brute-force group facts");
  orc.attach(oracle, false);

  CLI11_PARSE(app, argc, argv);

  if (*enumerate) return emit(cmpart::cli::cmd_enumerate(en.spec("tsv")));
  if (*residue) return emit(cmpart::cli::cmd_residue(label, shift, e));
  if (*params) return emit(cmpart::cli::cmd_params(pr.spec()));
  if (*cmc) return emit(cmpart::cli::cmd_cm(cm.spec()));
  if (*rouq) return emit(cmpart::cli::cmd_rouquier(rq.spec(), compare_with));
  if (*compare) return emit(cmpart::cli::cmd_compare(cmp.spec()));
  if (*verify) return emit(cmpart::cli::cmd_verify(suite, ve.spec()));
  if (*oracle) return emit(cmpart::cli::cmd_oracle(orc.spec()));
  return 2;
}
