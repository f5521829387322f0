// Acceptance suite: one PASS/FAIL line per criterion over the built-in catalog.
// Usage: rcg_acceptance <path-to-rcgroup>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "rcg/catalog.hpp"
#include "rcg/cgroup.hpp"
#include "rcg/parameters.hpp"
#include "rcg/report.hpp"

using namespace rcg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

int failures = 0;
bool catalog_complete = true;

void line(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << o.notes.str() << "\n";
  if (!o.ok) ++failures;
}

std::string run(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

void criterion(const std::function<void(Outcome&)>& body, int id, const std::string& title) {
  Outcome o;
  o.require(catalog_complete, "catalog entries failed to load");
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  line(id, title, o);
}

struct Entry {
  DatumFile file;
  LoadedEntry loaded;
  CGroupDatum c;
  FormalCharacter v_mu;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Entry> entries;
  for (const auto& f : builtin_catalog()) {
    try {
      auto loaded = load_entry(f);
      auto c = build_c_group(loaded.shimura);
      auto v = v_mu_character(loaded.shimura);
      entries.push_back({f, std::move(loaded), std::move(c), std::move(v)});
    } catch (const std::exception& e) {
      std::cout << "FAIL  catalog entry " << f.name << " could not be prepared: " << e.what() << "\n";
      catalog_complete = false;
    }
  }

  criterion([&](Outcome& o) {
    const std::map<std::string, std::pair<std::int64_t, std::int64_t>> anchors{
        {"GL2", {-1, 1}}, {"GSp4", {-3, 3}}, {"GSp6", {-6, 6}}};
    for (const auto& e : entries) {
      const auto& s = e.loaded.shimura;
      const auto chi = sum_positive_roots(s.datum).coords;
      const auto pairing = s.datum.pair(chi, s.mu.coords);
      const auto d = dimension_d(s);
      o.require(pairing == -d, e.file.name + " pairing " + std::to_string(pairing) + " vs d " + std::to_string(d));
      auto it = anchors.find(e.file.name);
      if (it != anchors.end()) o.require(it->second == std::make_pair(pairing, d), e.file.name + " anchor");
    }
    for (const auto& [name, value] : anchors) {
      bool present = false;
      for (const auto& e : entries) present |= e.file.name == name;
      o.require(present, "anchor entry " + name + " missing");
    }
  }, 1, "<chi, mu> = -d for every catalog entry");

  criterion([&](Outcome& o) {
    for (const auto& e : entries) {
      const auto& s = e.loaded.shimura;
      const auto chi = sum_positive_roots(s.datum).coords;
      bool parity = true;
      for (const auto& [w, m] : e.v_mu.entries) parity &= (s.datum.pair(chi, w) - s.d) % 2 == 0;
      bool scalar = false;
      try {
        scalar = central_scalar(e.c.dual_datum, e.v_mu, {Side::cocharacter, chi}) == (s.d % 2 == 0 ? 1 : -1);
      } catch (const Error&) {
      }
      bool lattice = true;
      try {
        build_rC(e.c, e.v_mu);
      } catch (const WeightNotInQuotientLattice&) {
        lattice = false;
      }
      o.require(parity && scalar && lattice, e.file.name);
    }
  }, 2, "e acts on V_mu by (-1)^d: weight parity, central scalar and r_C membership agree");

  criterion([&](Outcome& o) {
    const std::map<std::string, std::int64_t> anchors{{"GL2", 2}, {"GSp4", 4}, {"GSp6", 8}};
    for (const auto& e : entries) {
      const auto& g = e.c.dual_datum;
      const auto weyl = weyl_dimension(g, dominant_conjugate(g, {Side::character, e.loaded.shimura.mu.coords}));
      o.require(Integer(e.v_mu.dimension()) == weyl, e.file.name);
      auto it = anchors.find(e.file.name);
      if (it != anchors.end()) o.require(e.v_mu.dimension() == it->second, e.file.name + " anchor");
    }
  }, 3, "Freudenthal dimension equals Weyl dimension");

  criterion([&](Outcome& o) {
    for (const auto& e : entries) {
      const Lattice full = Lattice::standard(e.c.ambient_dim());
      Integer order = 1;
      for (const auto& x : quotient_invariants(e.c.char_lattice, full)) order *= x;
      o.require(quotient_index(e.c.char_lattice, full) == 2 && quotient_index(full, e.c.cochar_lattice) == 2 &&
                    order == 2 && e.c.kernel_generator_ok,
                e.file.name);
    }
  }, 4, "C-group lattice indices 2, kernel of order 2 generated by (e,-1)");

  criterion([&](Outcome& o) {
    for (const auto& e : entries) {
      auto rc = build_rC(e.c, e.v_mu);
      auto summary = run_corollary_trials({e.loaded.shimura, e.c, e.v_mu, rc}, 0, 100);
      o.require(summary.trials >= 100 && summary.failures == 0, e.file.name + " identity");
      o.require(summary.control_rejections == summary.control_trials, e.file.name + " negative control");
    }
  }, 5, "twisted r_L equals r_C on 100 random parameters per entry; perturbed twist rejected");

  criterion([&](Outcome& o) {
    bool saw_gu = false;
    for (const auto& e : entries) {
      const auto& g = e.loaded.datum;
      const auto& s = e.loaded.shimura;
      o.require(dual(dual(g)) == g, e.file.name + " dual");
      auto again = normalize_mu(g, s.mu);
      o.require(again.mu == s.mu && again.d == s.d, e.file.name + " idempotent");
      for (const auto& w : weyl_orbit(g, s.mu)) {
        auto t = normalize_mu(g, w);
        o.require(t.mu == s.mu && t.d == s.d, e.file.name + " Weyl input");
      }
      o.require(is_weyl_invariant(e.c.dual_datum, e.v_mu), e.file.name + " character invariance");
      const auto chi = sum_positive_roots(g).coords;
      for (const auto& a : g.automorphisms) o.require(apply_matrix(a, chi) == chi, e.file.name + " chi fixed");
      auto descent = galois_descent_check(e.c, e.c.dual_datum.automorphisms);
      o.require(descent.passed(), e.file.name + " descent");
      if (e.file.name == "GU(2,1)") saw_gu = !g.automorphisms.empty() && descent.passed();
    }
    o.require(saw_gu, "GU(2,1) entry with a pinned automorphism");
  }, 6, "dual involution, normalization, Weyl invariance, Galois descent");

  criterion([&](Outcome& o) {
    if (argc < 2) {
      o.require(false, "path to the command-line tool not given");
    } else {
      const std::string cmd = std::string("\"") + argv[1] + "\" report --seed 0 --trials 100 --format json";
      const auto first = run(cmd);
      const auto second = run(cmd);
      o.require(!first.empty(), "empty output");
      o.require(first == second, "outputs differ");
      const auto parsed = nlohmann::json::parse(first, nullptr, false);
      o.require(!parsed.is_discarded() && parsed.value("pass", false), "report did not pass");
    }
  }, 7, "report --seed 0 --trials 100 is byte-identical across runs");

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
