#include "rcg/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace rcg {

namespace {

std::string format(const Coords& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Coords negate(Coords v) {
  for (auto& x : v) x = -x;
  return v;
}

// x - k * y
Coords sub_scaled(const Coords& x, std::int64_t k, const Coords& y) {
  Coords out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * y[i];
  return out;
}

bool shape_ok(const RootDatum& d, std::string& why) {
  std::ostringstream os;
  if (d.rank == 0) os << "rank must be positive";
  else if (d.roots.size() != d.coroots.size()) os << "roots and coroots differ in count";
  else {
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
      if (d.roots[i].size() != d.rank) os << "root " << i << " has length " << d.roots[i].size() << "; ";
      if (d.coroots[i].size() != d.rank) os << "coroot " << i << " has length " << d.coroots[i].size() << "; ";
    }
    std::set<std::size_t> seen;
    for (auto s : d.simple) {
      if (s >= d.roots.size()) os << "simple index " << s << " out of range; ";
      else if (!seen.insert(s).second) os << "simple index " << s << " repeated; ";
    }
    if (!d.roots.empty() && d.simple.empty()) os << "nonempty root set needs a simple system; ";
    for (std::size_t k = 0; k < d.automorphisms.size(); ++k) {
      const auto& a = d.automorphisms[k];
      if (a.rows() != d.rank || a.cols() != d.rank) os << "automorphism " << k << " is not rank x rank; ";
    }
    if (d.pairing.rows() != 0) {
      if (d.pairing.rows() != d.rank || d.pairing.cols() != d.rank) os << "pairing is not rank x rank; ";
      else if (determinant(to_rational(d.pairing)) == 0) os << "pairing is degenerate; ";
    }
  }
  why = os.str();
  return why.empty();
}

std::map<Coords, std::size_t> index_of(const std::vector<Coords>& vs) {
  std::map<Coords, std::size_t> m;
  for (std::size_t i = 0; i < vs.size(); ++i) m.emplace(vs[i], i);
  return m;
}

SmallMatrix reflection_matrix(const RootDatum& d, std::size_t i, Side side) {
  SmallMatrix m(d.rank, d.rank);
  for (std::size_t j = 0; j < d.rank; ++j) {
    Coords e(d.rank, 0);
    e[j] = 1;
    Coords col = reflect(d, i, side, e);
    for (std::size_t r = 0; r < d.rank; ++r) m(r, j) = col[r];
  }
  return m;
}

}  // namespace

const char* to_string(Side s) { return s == Side::character ? "character" : "cocharacter"; }

std::int64_t RootDatum::pair(const Coords& x, const Coords& y) const {
  std::int64_t sum = 0;
  if (pairing.rows() == 0) {
    for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
    return sum;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) sum += x[i] * pairing(i, j) * y[j];
  return sum;
}

RootDatum torus_datum(std::string name, std::size_t rank) {
  RootDatum d;
  d.name = std::move(name);
  d.rank = rank;
  return d;
}

SmallMatrix pairing_matrix(const RootDatum& d) {
  return d.pairing.rows() == 0 ? SmallMatrix::identity(d.rank) : d.pairing;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name + ": " + c.detail;
  return {};
}

ValidationReport validate(const RootDatum& d) {
  ValidationReport report;
  std::string why;
  if (!shape_ok(d, why)) {
    report.checks.push_back({"shape", false, why});
    return report;
  }
  report.checks.push_back({"shape", true, {}});

  {
    ValidationCheck c{"pairing_two", true, {}};
    for (std::size_t i = 0; i < d.roots.size() && c.ok; ++i) {
      auto p = d.pair(d.roots[i], d.coroots[i]);
      if (p != 2) {
        c.ok = false;
        c.detail = "<" + format(d.roots[i]) + ", " + format(d.coroots[i]) + "> = " + std::to_string(p);
      }
    }
    report.checks.push_back(c);
  }

  const auto root_index = index_of(d.roots);
  {
    ValidationCheck c{"distinct_roots", root_index.size() == d.roots.size(), {}};
    if (!c.ok) c.detail = "root list contains duplicates";
    for (const auto& r : d.roots)
      if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) {
        c.ok = false;
        c.detail = "zero vector in root list";
      }
    report.checks.push_back(c);
  }

  {
    ValidationCheck roots_c{"reflection_closure", true, {}};
    ValidationCheck coroots_c{"coreflection_closure", true, {}};
    for (std::size_t s = 0; s < d.simple.size(); ++s)
      for (std::size_t j = 0; j < d.roots.size(); ++j) {
        Coords image = reflect(d, s, Side::character, d.roots[j]);
        auto it = root_index.find(image);
        if (it == root_index.end()) {
          if (roots_c.ok)
            roots_c.detail = "s_" + std::to_string(s) + format(d.roots[j]) + " = " + format(image) + " is not a root";
          roots_c.ok = false;
          continue;
        }
        Coords co_image = reflect(d, s, Side::cocharacter, d.coroots[j]);
        if (co_image != d.coroots[it->second]) {
          if (coroots_c.ok)
            coroots_c.detail = "dual reflection of " + format(d.coroots[j]) + " is " + format(co_image) +
                               ", expected coroot " + format(d.coroots[it->second]);
          coroots_c.ok = false;
        }
      }
    report.checks.push_back(roots_c);
    report.checks.push_back(coroots_c);
  }

  QMatrix simple_rows(d.simple.size(), d.rank);
  for (std::size_t i = 0; i < d.simple.size(); ++i)
    for (std::size_t j = 0; j < d.rank; ++j) simple_rows(i, j) = static_cast<long>(d.roots[d.simple[i]][j]);
  {
    ValidationCheck c{"simple_independent", rank(simple_rows) == d.simple.size(), {}};
    if (!c.ok) c.detail = "simple roots are linearly dependent";
    report.checks.push_back(c);
    if (c.ok) {
      ValidationCheck sign{"simple_basis", true, {}};
      for (const auto& r : d.roots) {
        QVec rv(r.begin(), r.end());
        QVec coeffs;
        bool ok = solve_row_combination(simple_rows, rv, coeffs);
        bool integral = ok && std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q.get_den() == 1; });
        bool nonneg = ok && std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q >= 0; });
        bool nonpos = ok && std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q <= 0; });
        if (!(integral && (nonneg || nonpos))) {
          sign.ok = false;
          sign.detail = "root " + format(r) + " is not a same-sign integral combination of simple roots";
          break;
        }
      }
      report.checks.push_back(sign);
    }
  }

  {
    ValidationCheck c{"pinned_automorphisms", true, {}};
    std::set<Coords> simple_roots, simple_coroots;
    for (auto s : d.simple) {
      simple_roots.insert(d.roots[s]);
      simple_coroots.insert(d.coroots[s]);
    }
    for (std::size_t k = 0; k < d.automorphisms.size() && c.ok; ++k) {
      const auto& a = d.automorphisms[k];
      auto det = determinant(to_rational(a));
      if (det != 1 && det != -1) {
        c.ok = false;
        c.detail = "automorphism " + std::to_string(k) + " is not unimodular";
        break;
      }
      std::set<Coords> images;
      for (const auto& r : simple_roots) images.insert(apply_matrix(a, r));
      if (images != simple_roots) {
        c.ok = false;
        c.detail = "automorphism " + std::to_string(k) + " does not permute the simple roots";
        break;
      }
      SmallMatrix b;
      try {
        b = contragredient(d, a);
      } catch (const InvalidDatum& e) {
        c.ok = false;
        c.detail = e.what();
        break;
      }
      std::set<Coords> co_images;
      for (const auto& r : simple_coroots) co_images.insert(apply_matrix(b, r));
      if (co_images != simple_coroots) {
        c.ok = false;
        c.detail = "automorphism " + std::to_string(k) + " does not permute the simple coroots";
      }
    }
    report.checks.push_back(c);
  }
  return report;
}

void require_valid(const RootDatum& d) {
  auto report = validate(d);
  if (!report.passed()) throw InvalidDatum(d.name + ": " + report.first_failure());
}

SmallMatrix contragredient(const RootDatum& d, const SmallMatrix& a) {
  // <A x, B y> = x^T A^T F B y = x^T F y  =>  B = F^{-1} A^{-T} F.
  QMatrix f = to_rational(pairing_matrix(d));
  QMatrix b = inverse(f) * inverse(to_rational(a)).transpose() * f;
  try {
    return to_small(to_integer(b));
  } catch (const std::domain_error&) {
    throw InvalidDatum("automorphism has no integral contragredient");
  }
}

RootDatum dual(const RootDatum& d) {
  require_valid(d);
  RootDatum out;
  out.name = d.name + "^";
  out.rank = d.rank;
  out.roots = d.coroots;
  out.coroots = d.roots;
  out.simple = d.simple;
  for (const auto& a : d.automorphisms) out.automorphisms.push_back(contragredient(d, a));
  if (d.pairing.rows() != 0) out.pairing = d.pairing.transpose();
  // Undo the name decoration on a double dual.
  if (d.name.size() > 1 && d.name.back() == '^') out.name = d.name.substr(0, d.name.size() - 1);
  return out;
}

std::int64_t PositiveRoot::height() const {
  std::int64_t h = 0;
  for (auto c : simple_coeffs) h += c;
  return h;
}

std::vector<PositiveRoot> positive_system(const RootDatum& d, const Limits& limits) {
  struct Node {
    Coords root, coroot, coeffs;
  };
  const std::size_t n = d.simple.size();
  std::map<Coords, Node> found;
  std::deque<Coords> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Coords c(n, 0);
    c[i] = 1;
    const auto& r = d.roots.at(d.simple[i]);
    found.emplace(r, Node{r, d.coroots.at(d.simple[i]), c});
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Node node = found.at(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& aj = d.roots[d.simple[j]];
      const auto& aj_v = d.coroots[d.simple[j]];
      std::int64_t k = d.pair(node.root, aj_v);
      if (k == 0) continue;
      Coords coeffs = node.coeffs;
      coeffs[j] -= k;
      if (std::any_of(coeffs.begin(), coeffs.end(), [](auto c) { return c < 0; })) continue;
      Coords image = sub_scaled(node.root, k, aj);
      if (found.count(image)) continue;
      Coords co_image = sub_scaled(node.coroot, d.pair(aj, node.coroot), aj_v);
      found.emplace(image, Node{image, co_image, coeffs});
      queue.push_back(image);
      if (found.size() > limits.closure_bound)
        throw NonTerminating(d.name + ": positive root closure exceeds " + std::to_string(limits.closure_bound));
    }
  }

  const auto root_index = index_of(d.roots);
  std::vector<PositiveRoot> out;
  for (const auto& [root, node] : found) {
    auto it = root_index.find(root);
    if (it == root_index.end()) throw InvalidDatum(d.name + ": generated root " + format(root) + " missing from root list");
    if (d.coroots[it->second] != node.coroot)
      throw InvalidDatum(d.name + ": coroot of " + format(root) + " does not match its generated coroot");
    out.push_back({it->second, node.coeffs});
  }
  std::sort(out.begin(), out.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    return std::pair(a.height(), a.index) < std::pair(b.height(), b.index);
  });
  return out;
}

std::vector<WeightVector> positive_closure(const RootDatum& d, const Limits& limits) {
  std::vector<WeightVector> out;
  for (const auto& p : positive_system(d, limits)) out.push_back({Side::character, d.roots[p.index]});
  return out;
}

Coords reflect(const RootDatum& d, std::size_t simple_index, Side side, const Coords& v) {
  const auto& a = d.roots[d.simple[simple_index]];
  const auto& a_v = d.coroots[d.simple[simple_index]];
  if (side == Side::character) return sub_scaled(v, d.pair(v, a_v), a);
  return sub_scaled(v, d.pair(a, v), a_v);
}

std::vector<WeightVector> weyl_orbit(const RootDatum& d, const WeightVector& w, const Limits& limits) {
  std::set<Coords> orbit{w.coords};
  std::deque<Coords> queue{w.coords};
  while (!queue.empty()) {
    Coords v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < d.simple.size(); ++i) {
      Coords image = reflect(d, i, w.side, v);
      if (orbit.insert(image).second) {
        if (orbit.size() > limits.weyl_cap)
          throw GroupTooLarge(d.name + ": Weyl orbit exceeds " + std::to_string(limits.weyl_cap));
        queue.push_back(std::move(image));
      }
    }
  }
  std::vector<WeightVector> out;
  for (auto& v : orbit) out.push_back({w.side, v});
  return out;
}

std::vector<SmallMatrix> weyl_group(const RootDatum& d, Side side, const Limits& limits) {
  std::vector<SmallMatrix> gens;
  for (std::size_t i = 0; i < d.simple.size(); ++i) gens.push_back(reflection_matrix(d, i, side));
  auto key = [](const SmallMatrix& m) {
    Coords k;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
    return k;
  };
  std::vector<SmallMatrix> elements{SmallMatrix::identity(d.rank)};
  std::set<Coords> seen{key(elements.front())};
  for (std::size_t next = 0; next < elements.size(); ++next)
    for (const auto& g : gens) {
      SmallMatrix m = g * elements[next];
      if (seen.insert(key(m)).second) {
        if (elements.size() >= limits.weyl_cap)
          throw GroupTooLarge(d.name + ": Weyl group exceeds " + std::to_string(limits.weyl_cap) + " elements");
        elements.push_back(std::move(m));
      }
    }
  return elements;
}

WeightVector sum_positive_roots(const RootDatum& d, const Limits& limits) {
  Coords chi(d.rank, 0);
  for (const auto& p : positive_system(d, limits))
    for (std::size_t i = 0; i < d.rank; ++i) chi[i] += d.roots[p.index][i];
  return {Side::character, chi};
}

bool is_dominant(const RootDatum& d, const WeightVector& w) {
  for (auto s : d.simple) {
    auto p = w.side == Side::character ? d.pair(w.coords, d.coroots[s]) : d.pair(d.roots[s], w.coords);
    if (p < 0) return false;
  }
  return true;
}

bool is_antidominant(const RootDatum& d, const WeightVector& w) {
  WeightVector neg{w.side, negate(w.coords)};
  return is_dominant(d, neg);
}

WeightVector dominant_conjugate(const RootDatum& d, const WeightVector& w) {
  WeightVector v = w;
  for (std::size_t steps = 0;; ++steps) {
    bool moved = false;
    for (std::size_t i = 0; i < d.simple.size(); ++i) {
      auto s = d.simple[i];
      auto p = v.side == Side::character ? d.pair(v.coords, d.coroots[s]) : d.pair(d.roots[s], v.coords);
      if (p < 0) {
        v.coords = reflect(d, i, v.side, v.coords);
        moved = true;
      }
    }
    if (!moved) return v;
    if (steps > 1000000) throw NonTerminating(d.name + ": dominant conjugate search does not terminate");
  }
}

WeightVector antidominant_conjugate(const RootDatum& d, const WeightVector& w) {
  WeightVector v = dominant_conjugate(d, {w.side, negate(w.coords)});
  return {w.side, negate(v.coords)};
}

Coords apply_matrix(const SmallMatrix& a, const Coords& v) {
  Coords out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace rcg
