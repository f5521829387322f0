#include "rcg/report.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <sstream>

#ifndef RCG_VERSION
#define RCG_VERSION "0.0.0"
#endif

namespace rcg {

namespace {

using ojson = nlohmann::ordered_json;

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InvalidDatum*>(&e)) return "InvalidDatum";
  if (dynamic_cast<const AxiomViolation*>(&e)) return "AxiomViolation";
  if (dynamic_cast<const IsogenyCheckFailed*>(&e)) return "IsogenyCheckFailed";
  if (dynamic_cast<const GroupTooLarge*>(&e)) return "GroupTooLarge";
  if (dynamic_cast<const NonTerminating*>(&e)) return "NonTerminating";
  if (dynamic_cast<const NotCentral*>(&e)) return "NotCentral";
  if (dynamic_cast<const NotScalar*>(&e)) return "NotScalar";
  if (dynamic_cast<const CoordinateExpressionFailed*>(&e)) return "CoordinateExpressionFailed";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

ojson integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ojson rational_matrix_json(const QMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ojson rationals_json(const std::vector<Rational>& v) {
  ojson out = ojson::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

bool single_orbit(const RootDatum& g, const FormalCharacter& ch, const Coords& extreme) {
  auto orbit = weyl_orbit(g, {Side::character, extreme});
  if (orbit.size() != ch.entries.size()) return false;
  for (const auto& w : orbit)
    if (ch.multiplicity(w.coords) != 1) return false;
  return true;
}

}  // namespace

const char* tool_version() { return RCG_VERSION; }

std::string format_rational(const Rational& q) { return q.get_str(); }

bool EntryReport::lemma1_part1() const { return error_kind.empty() && lemma.pairing_ok(); }

bool EntryReport::lemma1_part2() const {
  return error_kind.empty() && lemma.scalar_ok() && parity_all_weights && rC_built;
}

bool EntryReport::dimensions_ok() const {
  return error_kind.empty() && Integer(static_cast<long>(dim_v_mu)) == weyl_dim && weyl_invariant &&
         single_orbit_multiplicity_one;
}

bool EntryReport::cgroup_ok() const {
  return error_kind.empty() && char_index == 2 && cochar_index == 2 && kernel_order == 2 && kernel_generator_ok;
}

bool EntryReport::passed() const {
  return error_kind.empty() && validation.passed() && lemma1_part1() && lemma1_part2() && dimensions_ok() &&
         cgroup_ok() && descent.passed() && corollary.passed();
}

bool Report::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

EntryReport verify_entry(const DatumFile& file, std::uint64_t seed, std::size_t trials, bool parallel_trials) {
  EntryReport r;
  r.name = file.name;
  r.source = file.source;
  try {
    const RootDatum datum = to_root_datum(file);
    r.validation = validate(datum);
    if (!r.validation.passed()) throw InvalidDatum(file.source + ": " + r.validation.first_failure());

    const ShimuraData s = normalize_mu(datum, {Side::cocharacter, file.mu});
    r.mu = s.mu.coords;
    r.d = s.d;
    r.degenerate = s.degenerate();

    const RootDatum dual_datum = dual(datum);
    const WeightVector mu_hat{Side::character, s.mu.coords};
    const FormalCharacter v_mu = irreducible_character(dual_datum, mu_hat);
    r.dim_v_mu = v_mu.dimension();
    r.weyl_dim = weyl_dimension(dual_datum, dominant_conjugate(dual_datum, mu_hat));
    r.weyl_invariant = is_weyl_invariant(dual_datum, v_mu);
    r.single_orbit_multiplicity_one = single_orbit(dual_datum, v_mu, s.mu.coords);

    r.lemma = verify_lemma1(s);
    const WeightVector chi = sum_positive_roots(datum);
    r.parity_all_weights = std::all_of(v_mu.entries.begin(), v_mu.entries.end(), [&](const auto& e) {
      return (dual_datum.pair(e.first, chi.coords) - s.d) % 2 == 0;
    });

    const CGroupDatum c = build_c_group(s);
    r.char_index = c.char_index;
    r.cochar_index = c.cochar_index;
    r.kernel_order = c.kernel_order;
    r.kernel_generator_ok = c.kernel_generator_ok;
    r.e_trivial = c.e_trivial;
    r.chi = {c.chi.coords};
    r.char_basis = c.char_lattice.basis();
    r.cochar_basis = c.cochar_lattice.basis();

    r.descent = galois_descent_check(c, c.dual_datum.automorphisms);
    for (const auto& a : c.dual_datum.automorphisms) r.fixes_mu_orbit.push_back(transform(v_mu, a) == v_mu);

    QuotientCharacter rC;
    try {
      rC = build_rC(c, v_mu);
      r.rC_built = true;
    } catch (const WeightNotInQuotientLattice&) {
      r.rC_built = false;
    }
    if (r.rC_built) {
      TrialInputs in{s, c, v_mu, rC};
      r.corollary = parallel_trials ? run_corollary_trials(in, seed, trials) : run_corollary_trials_serial(in, seed, trials);
    } else {
      r.corollary.seed = seed;
      r.corollary.trials = trials;
      r.corollary.failures = trials;
    }
  } catch (const std::exception& e) {
    r.error_kind = error_kind(e);
    r.error = e.what();
  }
  return r;
}

namespace {

Report assemble(std::vector<EntryReport> entries, std::uint64_t seed, std::size_t trials) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const EntryReport& a, const EntryReport& b) { return a.name < b.name; });
  Report r;
  r.version = tool_version();
  r.seed = seed;
  r.trials = trials;
  r.entries = std::move(entries);
  return r;
}

}  // namespace

Report run_full_verification_serial(const std::vector<DatumFile>& entries, std::uint64_t seed, std::size_t trials) {
  std::vector<EntryReport> out;
  for (const auto& f : entries) out.push_back(verify_entry(f, seed, trials));
  return assemble(std::move(out), seed, trials);
}

Report run_full_verification(const std::vector<DatumFile>& entries, std::uint64_t seed, std::size_t trials) {
  std::vector<EntryReport> out(entries.size());
  const auto n = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = verify_entry(entries[k], seed, trials);  // never throws
  }
  return assemble(std::move(out), seed, trials);
}

ojson to_json(const TrialSummary& s, bool transcripts) {
  ojson j;
  j["pass"] = s.passed();
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["failures"] = s.failures;
  j["control_trials"] = s.control_trials;
  j["control_rejections"] = s.control_rejections;
  if (transcripts) {
    ojson list = ojson::array();
    for (const auto& t : s.records) {
      ojson tj;
      tj["trial"] = t.index;
      tj["t"] = rationals_json(t.parameter.values);
      tj["s"] = format_rational(t.parameter.half_norm);
      tj["twisted_rL"] = rationals_json(t.check.side_a);
      tj["rC"] = rationals_json(t.check.side_b);
      tj["pass"] = t.check.pass;
      if (t.control_applicable) tj["control_rejected"] = t.control_failed;
      list.push_back(tj);
    }
    j["transcripts"] = list;
  }
  return j;
}

ojson to_json(const Report& r, bool transcripts) {
  ojson j;
  j["tool"] = "rcgroup";
  j["version"] = r.version;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["pass"] = r.passed();
  ojson entries = ojson::array();
  for (const auto& e : r.entries) {
    ojson ej;
    ej["name"] = e.name;
    ej["source"] = e.source;
    ej["pass"] = e.passed();
    if (!e.error_kind.empty()) {
      ej["error"] = {{"kind", e.error_kind}, {"message", e.error}};
      entries.push_back(ej);
      continue;
    }
    ojson checks = ojson::array();
    for (const auto& c : e.validation.checks) {
      ojson cj;
      cj["name"] = c.name;
      cj["ok"] = c.ok;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    ej["validation"] = {{"pass", e.validation.passed()}, {"checks", checks}};
    ej["mu"] = e.mu;
    ej["d"] = e.d;
    ej["degenerate"] = e.degenerate;
    ojson rep;
    rep["dim_freudenthal"] = e.dim_v_mu;
    rep["dim_weyl"] = integer_json(e.weyl_dim);
    rep["weyl_invariant"] = e.weyl_invariant;
    rep["single_orbit_multiplicity_one"] = e.single_orbit_multiplicity_one;
    rep["pass"] = e.dimensions_ok();
    ej["representation"] = rep;
    ojson lemma;
    lemma["pairing_chi_mu"] = e.lemma.pairing;
    lemma["minus_d"] = -e.lemma.d;
    lemma["part1_pass"] = e.lemma1_part1();
    lemma["central_scalar"] = e.lemma.scalar;
    lemma["expected_scalar"] = e.lemma.expected_scalar;
    lemma["parity_all_weights"] = e.parity_all_weights;
    lemma["rC_in_quotient_lattice"] = e.rC_built;
    lemma["part2_pass"] = e.lemma1_part2();
    ej["lemma1"] = lemma;
    ojson cg;
    cg["chi"] = e.chi.empty() ? ojson::array() : ojson(e.chi.front());
    cg["e_trivial"] = e.e_trivial;
    cg["char_index"] = integer_json(e.char_index);
    cg["cochar_index"] = integer_json(e.cochar_index);
    cg["kernel_order"] = integer_json(e.kernel_order);
    cg["kernel_generated_by_e_minus_1"] = e.kernel_generator_ok;
    cg["char_basis"] = rational_matrix_json(e.char_basis);
    cg["cochar_basis"] = rational_matrix_json(e.cochar_basis);
    cg["pass"] = e.cgroup_ok();
    ej["cgroup"] = cg;
    ojson autos = ojson::array();
    for (std::size_t k = 0; k < e.descent.entries.size(); ++k) {
      const auto& de = e.descent.entries[k];
      ojson aj;
      aj["preserves_char_lattice"] = de.preserves_char;
      aj["preserves_cochar_lattice"] = de.preserves_cochar;
      aj["fixes_chi"] = de.fixes_chi;
      aj["fixes_mu_orbit"] = k < e.fixes_mu_orbit.size() && e.fixes_mu_orbit[k];
      autos.push_back(aj);
    }
    ej["galois_descent"] = {{"pass", e.descent.passed()}, {"automorphisms", autos}};
    ej["corollary"] = to_json(e.corollary, transcripts);
    entries.push_back(ej);
  }
  j["entries"] = entries;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "pass" : "FAIL"; };
  os << "rcgroup " << r.version << "  seed=" << r.seed << "  trials=" << r.trials << "\n\n";
  os << std::left << std::setw(24) << "entry" << std::right << std::setw(4) << "d" << std::setw(6) << "dim"
     << std::setw(9) << "<chi,mu>" << std::setw(7) << "e" << std::setw(8) << "valid" << std::setw(8) << "pairing"
     << std::setw(8) << "sign" << std::setw(8) << "dims" << std::setw(8) << "cgroup" << std::setw(8) << "galois"
     << std::setw(10) << "twist" << std::setw(8) << "result" << "\n";
  for (const auto& e : r.entries) {
    os << std::left << std::setw(24) << e.name << std::right;
    if (!e.error_kind.empty()) {
      os << "  " << e.error_kind << ": " << e.error << "\n";
      continue;
    }
    std::ostringstream cor;
    cor << (e.corollary.trials - e.corollary.failures) << "/" << e.corollary.trials;
    os << std::setw(4) << e.d << std::setw(6) << e.dim_v_mu << std::setw(9) << e.lemma.pairing << std::setw(7)
       << (e.lemma.scalar < 0 ? "-1" : "+1") << std::setw(8) << yn(e.validation.passed()) << std::setw(8)
       << yn(e.lemma1_part1()) << std::setw(8) << yn(e.lemma1_part2()) << std::setw(8) << yn(e.dimensions_ok())
       << std::setw(8) << yn(e.cgroup_ok()) << std::setw(8) << yn(e.descent.passed()) << std::setw(10) << cor.str()
       << std::setw(8) << yn(e.passed()) << "\n";
  }
  os << "\noverall: " << (r.passed() ? "pass" : "FAIL") << "\n";
  if (r.seconds) os << "time: " << std::fixed << std::setprecision(3) << *r.seconds << " s\n";
  return os.str();
}

}  // namespace rcg
