#include "rcg/highest_weight.hpp"

#include <set>
#include <sstream>

namespace rcg {

namespace {

// Pairings <x, a^v> against every positive coroot. The invariant form used by
// Freudenthal is B(x, y) = sum_a <x, a^v><y, a^v>, which vanishes on the centre.
class InvariantForm {
 public:
  InvariantForm(const RootDatum& g, const std::vector<PositiveRoot>& positive) : g_(g) {
    for (const auto& p : positive) coroots_.push_back(&g.coroots[p.index]);
  }

  std::vector<std::int64_t> profile(const Coords& x) const {
    std::vector<std::int64_t> out;
    out.reserve(coroots_.size());
    for (const auto* c : coroots_) out.push_back(g_.pair(x, *c));
    return out;
  }

  std::int64_t operator()(const Coords& x, const Coords& y) const {
    std::int64_t sum = 0;
    for (const auto* c : coroots_) sum += g_.pair(x, *c) * g_.pair(y, *c);
    return sum;
  }

 private:
  const RootDatum& g_;
  std::vector<const Coords*> coroots_;
};

Coords add(const Coords& a, const Coords& b, std::int64_t k = 1) {
  Coords out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * b[i];
  return out;
}

}  // namespace

std::int64_t FormalCharacter::dimension() const {
  std::int64_t n = 0;
  for (const auto& [w, m] : entries) n += m;
  return n;
}

std::int64_t FormalCharacter::multiplicity(const Coords& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

FormalCharacter irreducible_character(const RootDatum& g, const WeightVector& extreme, const Limits& limits) {
  if (extreme.side != Side::character || extreme.coords.size() != g.rank)
    throw NonIntegralWeight(g.name + ": extreme weight is not in the character lattice");

  const auto positive = positive_system(g, limits);
  const InvariantForm form(g, positive);
  const Coords highest = dominant_conjugate(g, extreme).coords;

  Coords two_rho(g.rank, 0);
  for (const auto& p : positive) two_rho = add(two_rho, g.roots[p.index]);

  FormalCharacter ch{g.name, Side::character, {{highest, 1}}};
  std::set<Coords> level{highest};
  for (std::int64_t depth = 1; !level.empty(); ++depth) {
    std::set<Coords> candidates;
    for (const auto& mu : level)
      for (auto s : g.simple) candidates.insert(add(mu, g.roots[s], -1));

    std::set<Coords> next;
    for (const auto& nu : candidates) {
      // 2 * sum_{a>0} sum_{k>=1} m(nu + k a) B(nu + k a, a)
      std::int64_t numerator = 0;
      for (const auto& p : positive) {
        const auto& a = g.roots[p.index];
        for (std::int64_t k = 1; k * p.height() <= depth; ++k) {
          Coords up = add(nu, a, k);
          auto m = ch.multiplicity(up);
          if (m) numerator += m * form(up, a);
        }
      }
      numerator *= 2;
      const std::int64_t denominator = form(add(highest, nu, -1), add(add(highest, nu), two_rho));
      if (denominator == 0) {
        if (numerator != 0) throw std::logic_error("Freudenthal recursion: zero denominator with nonzero numerator");
        continue;
      }
      if (numerator % denominator != 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      const std::int64_t m = numerator / denominator;
      if (m < 0) throw std::logic_error("Freudenthal recursion produced a negative multiplicity");
      if (m == 0) continue;
      ch.entries.emplace(nu, m);
      next.insert(nu);
      if (ch.entries.size() > limits.weyl_cap)
        throw GroupTooLarge(g.name + ": character has more than " + std::to_string(limits.weyl_cap) + " weights");
    }
    level = std::move(next);
  }
  return ch;
}

Integer weyl_dimension(const RootDatum& g, const WeightVector& highest, const Limits& limits) {
  if (!is_dominant(g, highest)) throw NotDominant(g.name + ": weight is not dominant");
  const auto positive = positive_system(g, limits);
  Coords two_rho(g.rank, 0);
  for (const auto& p : positive) two_rho = add(two_rho, g.roots[p.index]);
  // prod <lambda + rho, a^v> / <rho, a^v>, with both sides doubled.
  const Coords shifted = add(add(highest.coords, highest.coords), two_rho);
  Rational dim = 1;
  for (const auto& p : positive) {
    const auto& a_v = g.coroots[p.index];
    dim *= make_rational(static_cast<long>(g.pair(shifted, a_v)), static_cast<long>(g.pair(two_rho, a_v)));
  }
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension formula gave a non-integer");
  return dim.get_num();
}

int central_scalar(const RootDatum& g, const FormalCharacter& ch, const WeightVector& c) {
  if (c.side == ch.side || c.coords.size() != g.rank)
    throw std::invalid_argument("central_scalar: element must live on the side opposite the character");
  for (const auto& a : g.roots) {
    auto p = g.pair(a, c.coords);
    if (p % 2 != 0) {
      std::ostringstream os;
      os << g.name << ": a root pairs to " << p << " with the element, so it is not central";
      throw NotCentral(os.str());
    }
  }
  if (ch.entries.empty()) throw std::invalid_argument("central_scalar: empty character");
  int sign = 0;
  for (const auto& [w, m] : ch.entries) {
    int s = (g.pair(w, c.coords) % 2 == 0) ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) throw NotScalar(g.name + ": weights of the character disagree on the central sign");
  }
  return sign;
}

bool is_weyl_invariant(const RootDatum& g, const FormalCharacter& ch) {
  for (std::size_t i = 0; i < g.simple.size(); ++i)
    for (const auto& [w, m] : ch.entries)
      if (ch.multiplicity(reflect(g, i, ch.side, w)) != m) return false;
  return true;
}

FormalCharacter transform(const FormalCharacter& ch, const SmallMatrix& a) {
  FormalCharacter out{ch.datum_name, ch.side, {}};
  for (const auto& [w, m] : ch.entries) out.entries[apply_matrix(a, w)] += m;
  return out;
}

}  // namespace rcg
