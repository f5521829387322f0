// Command-line front end: datum inspection, the two verifiers, and catalog reports.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rcg/catalog.hpp"
#include "rcg/cgroup.hpp"
#include "rcg/highest_weight.hpp"
#include "rcg/parameters.hpp"
#include "rcg/report.hpp"
#include "rcg/shimura.hpp"

namespace {

using ojson = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

struct Options {
  std::string file;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string catalog;
  bool timing = false;
  bool transcripts = false;
  bool serial = false;
};

std::string coords_str(const rcg::Coords& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void emit(const Options& o, const ojson& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int cmd_validate(const Options& o) {
  auto file = rcg::read_datum_file(o.file);
  auto report = rcg::validate(rcg::to_root_datum(file));
  ojson j;
  j["name"] = file.name;
  j["pass"] = report.passed();
  ojson checks = ojson::array();
  std::string text;
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    text += std::string(c.ok ? "  ok    " : "  FAIL  ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
  }
  j["checks"] = checks;
  emit(o, j, file.name + ": " + (report.passed() ? "valid" : "INVALID") + "\n" + text);
  return report.passed() ? kPass : kFail;
}

int cmd_dual(const Options& o) {
  auto entry = rcg::load_datum(o.file);
  std::cout << rcg::datum_to_json(rcg::dual(entry.datum)).dump(2) << "\n";
  return kPass;
}

int cmd_dim(const Options& o) {
  auto entry = rcg::load_datum(o.file);
  auto dual_datum = rcg::dual(entry.datum);
  rcg::WeightVector mu_hat{rcg::Side::character, entry.shimura.mu.coords};
  auto ch = rcg::irreducible_character(dual_datum, mu_hat);
  auto weyl = rcg::weyl_dimension(dual_datum, rcg::dominant_conjugate(dual_datum, mu_hat));
  bool agree = weyl == ch.dimension();
  ojson j;
  j["name"] = entry.datum.name;
  j["mu"] = entry.shimura.mu.coords;
  j["d"] = entry.shimura.d;
  j["dim_freudenthal"] = ch.dimension();
  j["dim_weyl"] = weyl.get_si();
  j["agree"] = agree;
  emit(o, j,
       entry.datum.name + ": mu = " + coords_str(entry.shimura.mu.coords) + "  d = " + std::to_string(entry.shimura.d) +
           "  dim V_mu = " + std::to_string(ch.dimension()) + " (Weyl formula: " + weyl.get_str() + ")\n");
  return agree ? kPass : kFail;
}

int cmd_char(const Options& o) {
  auto entry = rcg::load_datum(o.file);
  auto ch = rcg::v_mu_character(entry.shimura);
  ojson weights = ojson::array();
  std::string text = entry.datum.name + ": character of V_mu (" + std::to_string(ch.dimension()) + " dimensional)\n";
  for (const auto& [w, m] : ch.entries) {
    weights.push_back({{"weight", w}, {"multiplicity", m}});
    text += "  " + coords_str(w) + "  x" + std::to_string(m) + "\n";
  }
  ojson j;
  j["name"] = entry.datum.name;
  j["extreme_weight"] = entry.shimura.mu.coords;
  j["dimension"] = ch.dimension();
  j["weights"] = weights;
  emit(o, j, text);
  return kPass;
}

int cmd_cgroup(const Options& o) {
  auto entry = rcg::load_datum(o.file);
  auto c = rcg::build_c_group(entry.shimura);
  auto descent = rcg::galois_descent_check(c, c.dual_datum.automorphisms);
  auto basis_json = [](const rcg::QMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ojson row = ojson::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rcg::format_rational(m(i, k)));
      rows.push_back(row);
    }
    return rows;
  };
  ojson j;
  j["name"] = entry.datum.name;
  j["chi"] = c.chi.coords;
  j["d"] = c.d;
  j["e_trivial"] = c.e_trivial;
  j["char_basis"] = basis_json(c.char_lattice.basis());
  j["cochar_basis"] = basis_json(c.cochar_lattice.basis());
  j["char_index"] = c.char_index.get_si();
  j["cochar_index"] = c.cochar_index.get_si();
  j["kernel_order"] = c.kernel_order.get_si();
  j["kernel_generated_by_e_minus_1"] = c.kernel_generator_ok;
  j["galois_descent"] = descent.passed();
  std::string text = entry.datum.name + ": chi = " + coords_str(c.chi.coords) + ", e " +
                     (c.e_trivial ? "trivial" : "nontrivial") + "\n  char_lattice basis:\n";
  for (std::size_t i = 0; i < c.char_lattice.dim(); ++i) {
    text += "   ";
    for (std::size_t k = 0; k < c.char_lattice.dim(); ++k) text += " " + rcg::format_rational(c.char_lattice.basis()(i, k));
    text += "\n";
  }
  text += "  cochar_lattice basis:\n";
  for (std::size_t i = 0; i < c.cochar_lattice.dim(); ++i) {
    text += "   ";
    for (std::size_t k = 0; k < c.cochar_lattice.dim(); ++k) text += " " + rcg::format_rational(c.cochar_lattice.basis()(i, k));
    text += "\n";
  }
  text += "  indices " + c.char_index.get_str() + ", " + c.cochar_index.get_str() + "; kernel order " +
          c.kernel_order.get_str() + "; galois descent " + (descent.passed() ? "pass" : "FAIL") + "\n";
  emit(o, j, text);
  return descent.passed() ? kPass : kFail;
}

int cmd_lemma1(const Options& o) {
  auto entry = rcg::load_datum(o.file);
  auto r = rcg::verify_lemma1(entry.shimura);
  ojson j;
  j["name"] = entry.datum.name;
  j["pairing_chi_mu"] = r.pairing;
  j["d"] = r.d;
  j["central_scalar"] = r.scalar;
  j["expected_scalar"] = r.expected_scalar;
  j["degenerate"] = r.degenerate;
  j["pass"] = r.passed();
  emit(o, j,
       entry.datum.name + ": <chi,mu> = " + std::to_string(r.pairing) + ", d = " + std::to_string(r.d) +
           ", e acts by " + std::to_string(r.scalar) + (r.degenerate ? " [degenerate]" : "") + "  " +
           (r.passed() ? "pass" : "FAIL") + "\n");
  return r.passed() ? kPass : kFail;
}

int cmd_corollary(const Options& o) {
  auto entry = rcg::load_datum(o.file);
  auto c = rcg::build_c_group(entry.shimura);
  auto rL = rcg::v_mu_character(entry.shimura);
  auto rC = rcg::build_rC(c, rL);
  rcg::TrialInputs in{entry.shimura, c, rL, rC};
  auto summary = o.serial ? rcg::run_corollary_trials_serial(in, o.seed, o.trials) : rcg::run_corollary_trials(in, o.seed, o.trials);
  ojson j;
  j["name"] = entry.datum.name;
  j["d"] = entry.shimura.d;
  j["corollary"] = rcg::to_json(summary, o.transcripts || o.format == "json");
  emit(o, j,
       entry.datum.name + ": " + std::to_string(summary.trials - summary.failures) + "/" + std::to_string(summary.trials) +
           " trials agree; negative control rejected " + std::to_string(summary.control_rejections) + "/" +
           std::to_string(summary.control_trials) + "  " + (summary.passed() ? "pass" : "FAIL") + "\n");
  return summary.passed() ? kPass : kFail;
}

int cmd_report(const Options& o) {
  std::vector<rcg::DatumFile> entries;
  std::string dir = o.catalog;
  if (dir.empty())
    if (const char* env = std::getenv(rcg::kCatalogEnv)) dir = env;
  entries = dir.empty() ? rcg::builtin_catalog() : rcg::load_catalog_dir(dir);

  auto start = std::chrono::steady_clock::now();
  auto report = o.serial ? rcg::run_full_verification_serial(entries, o.seed, o.trials)
                         : rcg::run_full_verification(entries, o.seed, o.trials);
  if (o.timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.format == "json") std::cout << rcg::to_json(report, o.transcripts).dump(2) << "\n";
  else std::cout << rcg::to_text(report);
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual groups, C-groups and the representations r_L, r_C for Shimura data"};
  app.set_version_flag("--version", std::string("rcgroup ") + rcg::tool_version());
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Datum file (JSON)")->required(); };

  auto* validate = app.add_subcommand("validate", "Check the root datum invariants");
  add_file(validate);
  auto* dual = app.add_subcommand("dual", "Print the dual root datum");
  add_file(dual);
  auto* dim = app.add_subcommand("dim", "d and dim V_mu (Freudenthal vs Weyl)");
  add_file(dim);
  auto* chr = app.add_subcommand("char", "Weights of V_mu");
  add_file(chr);
  auto* cgroup = app.add_subcommand("cgroup", "Quotient lattices of the C-group torus");
  add_file(cgroup);

  auto* verify = app.add_subcommand("verify", "Run a verifier");
  verify->require_subcommand(1);
  auto* lemma1 = verify->add_subcommand("lemma1", "<chi,mu> = -d and e acts by (-1)^d");
  add_file(lemma1);
  auto* corollary = verify->add_subcommand("corollary", "Twisted r_L vs r_C on random torus parameters");
  add_file(corollary);
  corollary->add_option("--trials", o.trials, "Number of random parameters")->capture_default_str();
  corollary->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  corollary->add_flag("--transcripts", o.transcripts, "Include every trial in JSON output");
  corollary->add_flag("--serial", o.serial, "Use the serial reference driver");

  auto* report = app.add_subcommand("report", "Verify a whole catalog");
  report->add_option("--catalog", o.catalog, std::string("Catalog directory (default: $") + rcg::kCatalogEnv + " or built-in)");
  report->add_option("--trials", o.trials, "Corollary trials per entry")->capture_default_str();
  report->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  report->add_flag("--timing", o.timing, "Include wall-clock time (breaks byte-identical output)");
  report->add_flag("--transcripts", o.transcripts, "Include every corollary trial");
  report->add_flag("--serial", o.serial, "Use the serial reference driver");
  for (auto* sub : {validate, dual, dim, chr, cgroup, lemma1, corollary, report})
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*dual) return cmd_dual(o);
    if (*dim) return cmd_dim(o);
    if (*chr) return cmd_char(o);
    if (*cgroup) return cmd_cgroup(o);
    if (*lemma1) return cmd_lemma1(o);
    if (*corollary) return cmd_corollary(o);
    if (*report) return cmd_report(o);
  } catch (const rcg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
