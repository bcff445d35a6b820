// salcom: covectors, Salvetti complexes and verification for affine
// hyperplane arrangements restricted to an open polyhedral region.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "salcom/salcom.hpp"

namespace {

using namespace salcom;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string arrangement;
  std::string com_path;
  std::string format = "text";
  bool dot = false;
  bool witnesses = false;
  std::string complex = "salvetti";
  std::string poset = "faces";
  CorpusOptions corpus;
};

Arrangement load(const RunConfig& cfg) {
  if (cfg.arrangement.empty()) throw UsageError("--arrangement <path> is required");
  return read_arrangement(cfg.arrangement);
}

Com load_com(const RunConfig& cfg) {
  if (!cfg.com_path.empty()) {
    std::ifstream in(cfg.com_path);
    if (!in) throw UsageError("cannot read covector file '" + cfg.com_path + "'");
    try {
      return read_com(in);
    } catch (const UsageError& e) {
      throw UsageError(cfg.com_path + ": " + e.what());
    }
  }
  return enumerate_covectors(load(cfg)).com;
}

std::string output_format(const RunConfig& cfg) { return cfg.dot ? "dot" : cfg.format; }

int cmd_covectors(const RunConfig& cfg) {
  const auto r = enumerate_covectors(load(cfg));
  for (std::size_t i = 0; i < r.com.size(); ++i) {
    std::cout << r.com[i].to_string();
    if (cfg.witnesses) std::cout << '\t' << to_string(r.witnesses[i]);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_check_com(const RunConfig& cfg) {
  const Com l = load_com(cfg);
  const auto report = check_com(l);
  std::cout << (report.fs_ok ? "FS ok" : "FS fails: X=" + report.fs_witness->x.to_string() +
                                             " Y=" + report.fs_witness->y.to_string())
            << '\n';
  std::cout << (report.se_ok ? "SE ok"
                             : "SE fails: X=" + report.se_witness->x.to_string() + " Y=" +
                                   report.se_witness->y.to_string() + " e=" + std::to_string(report.se_witness->e))
            << '\n';
  if (report.ok()) std::cout << (is_oriented_matroid(l) ? "oriented matroid\n" : "conditional oriented matroid\n");
  return report.ok() ? kOk : kFailed;
}

int cmd_topes(const RunConfig& cfg) {
  for (const auto& t : topes(load_com(cfg))) std::cout << t.to_string() << '\n';
  return kOk;
}

int cmd_salvetti(const RunConfig& cfg) {
  const auto sal = salvetti_poset(load_com(cfg));
  if (output_format(cfg) == "dot") {
    std::cout << hasse_dot(sal, [](const SalElement& s) { return s.to_string(); }, "salvetti");
    return kOk;
  }
  const auto covers = sal.hasse();
  std::cout << "elements " << sal.size() << '\n';
  for (std::size_t i = 0; i < sal.size(); ++i) std::cout << i << ' ' << sal.label(i).to_string() << '\n';
  std::cout << "covers " << covers.size() << '\n';
  for (auto [i, j] : covers) std::cout << i << ' ' << j << '\n';
  return kOk;
}

int cmd_hasse(const RunConfig& cfg) {
  const Com l = load_com(cfg);
  auto emit = [&](const auto& p, auto&& name, const char* graph) {
    if (output_format(cfg) == "dot") {
      std::cout << hasse_dot(p, name, graph);
      return;
    }
    for (auto [i, j] : p.hasse()) std::cout << name(p.label(i)) << ' ' << name(p.label(j)) << '\n';
  };
  if (cfg.poset == "salvetti")
    emit(salvetti_poset(l), [](const SalElement& s) { return s.to_string(); }, "salvetti");
  else
    emit(face_poset(l), [](const SignVector& x) { return x.to_string(); }, "faces");
  return kOk;
}

int cmd_homology(const RunConfig& cfg) {
  const Com l = load_com(cfg);
  const SimplicialComplex c = cfg.complex == "faces" ? order_complex(face_poset(l)) : salvetti_complex(l);
  const auto h = betti(c);
  std::cout << "degree,betti,reduced_betti,torsion\n";
  for (std::size_t k = 0; k < h.betti.size(); ++k)
    std::cout << k << ',' << h.betti[k] << ',' << h.reduced_betti[k] << ',' << join(h.torsion[k], " ") << '\n';
  return kOk;
}

int cmd_verify_nerve(const RunConfig& cfg) {
  const CoverModel model(load(cfg));
  const auto report = model.verify_nerve();
  std::cout << "representatives " << report.representatives << '\n'
            << "cover_pairs " << report.cover_pairs << '\n'
            << "containment_pairs " << report.containment_pairs << '\n'
            << "kz_pairs " << report.kz_pairs << '\n'
            << "failures " << report.failures.size() << '\n';
  for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
  return report.ok() ? kOk : kFailed;
}

int cmd_verify_os(const RunConfig& cfg) {
  const Arrangement a = load(cfg);
  if (!a.is_full_space()) throw UsageError("verify-os: the Orlik-Solomon oracle needs K to be the whole space");
  const auto h = betti(salvetti_complex(enumerate_covectors(a).com));
  const auto cmp = compare_orlik_solomon(a, h);
  std::cout << "salvetti_betti " << join(cmp.salvetti) << '\n'
            << "poincare " << join(cmp.poincare) << '\n'
            << "torsion " << (cmp.torsion_free ? "none" : "present") << '\n'
            << (cmp.agree() ? "MATCH" : "MISMATCH") << '\n';
  return cmp.agree() ? kOk : kFailed;
}

int cmd_verify_all(const RunConfig& cfg) {
  std::vector<Arrangement> instances;
  if (!cfg.arrangement.empty())
    instances.push_back(load(cfg));
  else
    instances = generate_corpus(cfg.corpus);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto r = verify_instance(instances[i]);
    std::cout << summarize(i, r) << '\n';
    for (const auto& c : r.checks)
      if (!c.passed) std::cout << "  FAIL " << c.name << ": " << c.detail << '\n';
    if (!r.passed()) ++failed;
  }
  std::cout << (instances.size() - failed) << "/" << instances.size() << " instances passed\n";
  return failed == 0 ? kOk : kFailed;
}

int cmd_semisimplify(const RunConfig& cfg) {
  const auto ss = semisimplify(load_com(cfg));
  std::cout << "coordinates";
  for (std::size_t e = 0; e < ss.coordinate_image.size(); ++e)
    std::cout << ' ' << e << "->" << (ss.coordinate_image[e] ? std::to_string(*ss.coordinate_image[e]) : "x");
  std::cout << '\n';
  write_com(std::cout, ss.com);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"salcom: conditional oriented matroids and Salvetti complexes of hyperplane arrangements"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto with_input = [&](CLI::App* sub, bool allow_com) {
    sub->add_option("--arrangement", cfg.arrangement, "Arrangement JSON file");
    if (allow_com) sub->add_option("--com", cfg.com_path, "Covector file (one sign string per line)");
    return sub;
  };
  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "dot"}));
    sub->add_flag("--dot", cfg.dot, "Emit a Graphviz DOT Hasse diagram");
    return sub;
  };

  std::map<std::string, int (*)(const RunConfig&)> handlers{
      {"covectors", cmd_covectors},   {"check-com", cmd_check_com},       {"topes", cmd_topes},
      {"salvetti", cmd_salvetti},     {"hasse", cmd_hasse},               {"homology", cmd_homology},
      {"verify-nerve", cmd_verify_nerve}, {"verify-os", cmd_verify_os},   {"verify-all", cmd_verify_all},
      {"semisimplify", cmd_semisimplify}};

  with_input(app.add_subcommand("covectors", "List the covectors L(A,K)"), false)
      ->add_flag("--witnesses", cfg.witnesses, "Print a witness point next to each covector");
  auto* check = with_input(app.add_subcommand("check-com", "Check the COM axioms"), true);
  check->add_option("file", cfg.com_path, "Covector file");
  with_input(app.add_subcommand("topes", "List the topes"), true);
  with_format(with_input(app.add_subcommand("salvetti", "Print the Salvetti poset"), true));
  with_format(with_input(app.add_subcommand("hasse", "Print a Hasse diagram"), true))
      ->add_option("--poset", cfg.poset, "Which poset")
      ->check(CLI::IsMember({"faces", "salvetti"}));
  with_format(with_input(app.add_subcommand("homology", "Integral homology as CSV"), true))
      ->add_option("--complex", cfg.complex, "Which complex")
      ->check(CLI::IsMember({"salvetti", "faces"}));
  with_input(app.add_subcommand("verify-nerve", "Verify the nerve hypothesis and the cover conditions"), false);
  with_input(app.add_subcommand("verify-os", "Compare Salvetti Betti numbers with the Poincare polynomial"), false);
  auto* all = with_input(app.add_subcommand("verify-all", "Run every check over a seeded corpus"), false);
  all->add_option("--seed", cfg.corpus.seed, "Corpus seed");
  all->add_option("--count", cfg.corpus.count, "Number of instances");
  all->add_option("--dim", cfg.corpus.max_dim, "Maximum ambient dimension");
  all->add_option("--hyperplanes", cfg.corpus.max_hyperplanes, "Maximum number of hyperplanes");
  all->add_option("--coeff-bound", cfg.corpus.coeff_bound, "Coefficient bound B");
  all->add_option("--region-halfspaces", cfg.corpus.max_region_halfspaces, "Maximum halfspaces bounding K");
  with_input(app.add_subcommand("semisimplify", "Semisimplify the covector set"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    return handlers.at(name)(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kFailed;
  }
}
