#include "rcg/cgroup.hpp"

#include <algorithm>

namespace rcg {

namespace {

QVec to_q(const Coords& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Coords extend(const Coords& v, std::int64_t k) {
  Coords out = v;
  out.push_back(k);
  return out;
}

bool even(std::int64_t x) { return x % 2 == 0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw IsogenyCheckFailed(what);
}

// M (+) 1 applied to a rational vector.
QVec apply_extended(const SmallMatrix& m, std::span<const Rational> v) {
  const std::size_t n = m.rows();
  QVec out(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += Rational(static_cast<long>(m(i, j))) * v[j];
  out[n] = v[n];
  return out;
}

}  // namespace

PairingForm CGroupDatum::pairing() const {
  const std::size_t n = dual_datum.rank;
  QMatrix f(n + 1, n + 1);
  QMatrix base = to_rational(pairing_matrix(dual_datum));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j) = base(i, j);
  f(n, n) = 1;
  return PairingForm(std::move(f));
}

CGroupDatum build_c_group(const ShimuraData& s, const Limits& limits) {
  CGroupDatum c;
  c.dual_datum = dual(s.datum);
  c.chi = sum_positive_roots(s.datum, limits);
  c.chi.side = Side::cocharacter;  // X(T) = Y(T^)
  c.d = s.d;
  const RootDatum& g = c.dual_datum;
  const std::size_t n = g.rank;

  // Characters of T^ x GL1 killing (e, -1): (l, k) with <l, chi> + k even.
  QMatrix char_gens(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    char_gens(i, i) = 1;
    char_gens(i, n) = even(g.pair(e, c.chi.coords)) ? 0 : 1;
  }
  char_gens(n, n) = 2;
  c.char_lattice = Lattice::generated_by(char_gens);

  // Cocharacters: Y(T^) + Z together with (chi, 1)/2.
  QMatrix cochar_gens(n + 2, n + 1);
  for (std::size_t i = 0; i <= n; ++i) cochar_gens(i, i) = 1;
  for (std::size_t j = 0; j < n; ++j) cochar_gens(n + 1, j) = make_rational(static_cast<long>(c.chi.coords[j]), 2);
  cochar_gens(n + 1, n) = Rational(1, 2);
  c.cochar_lattice = Lattice::generated_by(cochar_gens);

  const Lattice full = Lattice::standard(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    auto b = c.char_lattice.basis_vector(i);
    Rational parity = b[n];
    QVec l(b.begin(), b.end() - 1);
    for (std::size_t j = 0; j < n; ++j) parity += l[j] * static_cast<long>(c.chi.coords[j]);
    require(parity.get_den() == 1 && mpz_even_p(parity.get_num_mpz_t()),
            "char_lattice basis vector violates the evenness condition");
  }

  c.char_index = quotient_index(c.char_lattice, full);
  c.cochar_index = quotient_index(full, c.cochar_lattice);
  require(c.char_index == 2, "[X(T^)+Z : char_lattice] != 2");
  require(c.cochar_index == 2, "[cochar_lattice : Y(T^)+Z] != 2");
  require(integral_dual(c.char_lattice, c.pairing()) == c.cochar_lattice,
          "char_lattice and cochar_lattice are not in perfect duality");

  // Kernel of T^ x GL1 -> quotient torus, seen from characters: the group of
  // characters of (X + Z)/char_lattice.
  ZVec invariants = quotient_invariants(c.char_lattice, full);
  c.kernel_order = 1;
  for (const auto& x : invariants) c.kernel_order *= x;
  require(c.kernel_order == 2, "isogeny kernel does not have order 2");
  // (l, k) -> (-1)^{<l, chi> + k} is trivial on char_lattice and nontrivial on
  // (0, 1); in a group of order 2 it is the generator, i.e. evaluation at (e, -1).
  // Seen from cocharacters, (chi, 1)/2 represents the nonzero class of
  // cochar_lattice / (Y + Z), and exp(2 pi i (chi, 1)/2) = (chi(-1), -1).
  QVec half(n + 1);
  for (std::size_t j = 0; j < n; ++j) half[j] = make_rational(static_cast<long>(c.chi.coords[j]), 2);
  half[n] = Rational(1, 2);
  Coords unit(n + 1, 0);
  unit[n] = 1;
  c.kernel_generator_ok = !c.char_lattice.contains(to_q(unit)) && c.cochar_lattice.contains(half) && !full.contains(half);
  require(c.kernel_generator_ok, "isogeny kernel is not generated by (e, -1)");

  c.e_trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    if (!even(g.pair(e, c.chi.coords))) c.e_trivial = false;
  }

  for (std::size_t i = 0; i < g.roots.size(); ++i) {
    Coords root = extend(g.roots[i], 0);
    Coords coroot = extend(g.coroots[i], 0);
    require(c.char_lattice.contains(to_q(root)), "a root of G^ does not descend to the quotient torus");
    require(c.cochar_lattice.contains(to_q(coroot)), "a coroot of G^ is not a cocharacter of the quotient");
    c.quotient_roots.push_back(std::move(root));
    c.quotient_coroots.push_back(std::move(coroot));
  }
  return c;
}

bool DescentReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
}

DescentReport galois_descent_check(const CGroupDatum& c, const std::vector<SmallMatrix>& autos) {
  DescentReport report;
  const std::size_t n = c.dual_datum.rank;
  for (const auto& a : autos) {
    DescentEntry e;
    if (a.rows() != n || a.cols() != n) {
      report.entries.push_back(e);
      continue;
    }
    SmallMatrix b;
    bool has_contragredient = true;
    try {
      b = contragredient(c.dual_datum, a);
    } catch (const InvalidDatum&) {
      has_contragredient = false;
    }
    e.preserves_char = true;
    for (std::size_t i = 0; i <= n; ++i)
      if (!c.char_lattice.contains(apply_extended(a, c.char_lattice.basis().row(i)))) e.preserves_char = false;
    if (has_contragredient) {
      e.preserves_cochar = true;
      for (std::size_t i = 0; i <= n; ++i)
        if (!c.cochar_lattice.contains(apply_extended(b, c.cochar_lattice.basis().row(i)))) e.preserves_cochar = false;
      e.fixes_chi = apply_matrix(b, c.chi.coords) == c.chi.coords;
    }
    report.entries.push_back(e);
  }
  return report;
}

QuotientCharacter build_rC(const CGroupDatum& c, const FormalCharacter& rL) {
  QuotientCharacter out;
  out.character.datum_name = c.dual_datum.name + "~";
  out.character.side = Side::character;
  for (const auto& [l, m] : rL.entries) {
    if (l.size() != c.dual_datum.rank) throw std::invalid_argument("build_rC: weight length does not match the dual datum");
    Coords w = extend(l, -c.d);
    auto coords = c.char_lattice.coordinates(to_q(w));
    if (!coords) throw WeightNotInQuotientLattice(c.dual_datum.name + ": weight (l, -d) is not a character of the C-group torus");
    out.character.entries.emplace(w, m);
    out.basis_coordinates.emplace(w, std::move(*coords));
  }
  return out;
}

}  // namespace rcg
