#include "rcg/shimura.hpp"

#include <algorithm>
#include <sstream>

namespace rcg {

bool ShimuraData::degenerate() const {
  return std::all_of(mu.coords.begin(), mu.coords.end(), [](auto x) { return x == 0; });
}

ShimuraData normalize_mu(const RootDatum& datum, const WeightVector& mu_in, const Limits& limits) {
  require_valid(datum);
  if (mu_in.side != Side::cocharacter || mu_in.coords.size() != datum.rank)
    throw InvalidDatum(datum.name + ": mu must be a cocharacter of length " + std::to_string(datum.rank));
  ShimuraData s{datum, antidominant_conjugate(datum, mu_in), 0};
  for (const auto& p : positive_system(datum, limits)) {
    const auto& a = datum.roots[p.index];
    auto value = datum.pair(a, s.mu.coords);
    if (value != 0 && value != -1) {
      std::ostringstream os;
      os << datum.name << ": positive root (";
      for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
      os << ") pairs to " << value << " with mu; Shimura cocharacters pair in {0,-1}";
      throw AxiomViolation(os.str());
    }
    if (value == -1) ++s.d;
  }
  return s;
}

std::int64_t dimension_d(const ShimuraData& s, const Limits& limits) {
  std::int64_t d = 0;
  for (const auto& p : positive_system(s.datum, limits))
    if (s.datum.pair(s.datum.roots[p.index], s.mu.coords) == -1) ++d;
  return d;
}

FormalCharacter v_mu_character(const ShimuraData& s, const Limits& limits) {
  RootDatum dual_datum = dual(s.datum);
  return irreducible_character(dual_datum, {Side::character, s.mu.coords}, limits);
}

LemmaReport verify_lemma1(const ShimuraData& s, const Limits& limits) {
  LemmaReport r;
  r.degenerate = s.degenerate();
  r.d = dimension_d(s, limits);
  const WeightVector chi = sum_positive_roots(s.datum, limits);
  r.pairing = s.datum.pair(chi.coords, s.mu.coords);
  r.expected_scalar = (r.d % 2 == 0) ? 1 : -1;

  // chi lives in X(T) = Y(T^); on the dual side it is a cocharacter.
  RootDatum dual_datum = dual(s.datum);
  FormalCharacter v_mu = irreducible_character(dual_datum, {Side::character, s.mu.coords}, limits);
  r.dim_v_mu = v_mu.dimension();
  r.scalar = central_scalar(dual_datum, v_mu, {Side::cocharacter, chi.coords});
  return r;
}

}  // namespace rcg
