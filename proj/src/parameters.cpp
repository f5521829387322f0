#include "rcg/parameters.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <random>

namespace rcg {

namespace {

void run_one(const TrialInputs& in, std::uint64_t seed, std::uint64_t index, Trial& out) {
  out.index = index;
  out.parameter = random_parameter(in.cgroup.dual_datum.rank, seed, in.shimura.datum.name, index);
  out.check = verify_corollary(in.shimura, in.cgroup, in.rL, in.rC, out.parameter);
  out.control_applicable = out.parameter.half_norm != 1;
  if (out.control_applicable) {
    auto control = verify_corollary(in.shimura, in.cgroup, in.rL, in.rC, out.parameter, 1);
    out.control_failed = !control.pass;
  }
}

TrialSummary summarize(std::uint64_t seed, std::vector<Trial> records) {
  TrialSummary s;
  s.seed = seed;
  s.trials = records.size();
  for (const auto& t : records) {
    if (!t.check.pass) ++s.failures;
    if (t.control_applicable) {
      ++s.control_trials;
      if (t.control_failed) ++s.control_rejections;
    }
  }
  s.records = std::move(records);
  return s;
}

std::uint64_t uniform_1_to_50(std::mt19937_64& gen) {
  constexpr std::uint64_t range = 50;
  constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = gen();
  while (x >= limit);
  return 1 + x % range;
}

Rational random_rational(std::mt19937_64& gen) {
  auto num = uniform_1_to_50(gen);
  auto den = uniform_1_to_50(gen);
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace

TorusParameter::TorusParameter(QVec v, Rational s) : values(std::move(v)), half_norm(std::move(s)) {
  for (const auto& x : values)
    if (x == 0) throw std::invalid_argument("torus parameter values must be nonzero");
  if (half_norm <= 0) throw std::invalid_argument("half norm must be positive");
}

Rational power(const Rational& base, long exponent) {
  if (exponent == 0) return 1;
  if (base == 0) throw std::domain_error("power of zero");
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out = exponent < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

Rational evaluate_weight(const Coords& weight, std::span<const Rational> values) {
  if (weight.size() != values.size()) throw std::invalid_argument("weight and parameter lengths differ");
  Rational v = 1;
  for (std::size_t i = 0; i < weight.size(); ++i) v *= power(values[i], weight[i]);
  return v;
}

std::vector<Rational> evaluate_twisted(const FormalCharacter& ch, const TorusParameter& p, std::int64_t exponent) {
  const Rational twist = power(p.half_norm, exponent);
  std::vector<Rational> out;
  for (const auto& [w, m] : ch.entries) {
    Rational v = evaluate_weight(w, p.values) * twist;
    out.insert(out.end(), static_cast<std::size_t>(m), v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> evaluate_twisted_rL(const FormalCharacter& rL, const TorusParameter& p, std::int64_t d) {
  return evaluate_twisted(rL, p, -d);
}

QVec embed_parameter(const Lattice& char_lattice, const TorusParameter& p) {
  const std::size_t n = p.values.size();
  if (char_lattice.dim() != n + 1) throw std::invalid_argument("parameter rank does not match the quotient torus");
  QVec out;
  for (std::size_t i = 0; i <= n; ++i) {
    auto b = char_lattice.basis().row(i);
    Rational v = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (b[j].get_den() != 1 || !b[j].get_num().fits_slong_p())
        throw std::invalid_argument("char_lattice basis is not integral");
      v *= power(j < n ? p.values[j] : p.half_norm, b[j].get_num().get_si());
    }
    out.push_back(std::move(v));
  }
  return out;
}

QVec embed_parameter(const CGroupDatum& c, const TorusParameter& p) { return embed_parameter(c.char_lattice, p); }

CorollaryCheck verify_corollary(const ShimuraData& s, const CGroupDatum& c, const FormalCharacter& rL,
                                const QuotientCharacter& rC, const TorusParameter& p, std::int64_t exponent_shift) {
  CorollaryCheck out;
  out.side_a = evaluate_twisted(rL, p, -s.d + exponent_shift);

  const QVec embedded = embed_parameter(c, p);
  for (const auto& [w, m] : rC.character.entries) {
    QVec wq;
    for (auto x : w) wq.emplace_back(static_cast<long>(x));
    auto coords = c.char_lattice.coordinates(wq);
    if (!coords) throw CoordinateExpressionFailed("r_C weight is not integral in the quotient lattice basis");
    auto cached = rC.basis_coordinates.find(w);
    if (cached != rC.basis_coordinates.end() && cached->second != *coords)
      throw CoordinateExpressionFailed("r_C carries stale quotient coordinates");
    Rational v = 1;
    for (std::size_t j = 0; j < coords->size(); ++j) v *= power(embedded[j], (*coords)[j].get_si());
    out.side_b.insert(out.side_b.end(), static_cast<std::size_t>(m), v);
  }
  std::sort(out.side_b.begin(), out.side_b.end());
  out.pass = out.side_a == out.side_b;
  return out;
}

bool operator==(const TrialSummary& a, const TrialSummary& b) {
  if (a.seed != b.seed || a.trials != b.trials || a.failures != b.failures || a.control_trials != b.control_trials ||
      a.control_rejections != b.control_rejections || a.records.size() != b.records.size())
    return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.index != y.index || x.parameter.values != y.parameter.values || x.parameter.half_norm != y.parameter.half_norm ||
        x.check.pass != y.check.pass || x.check.side_a != y.check.side_a || x.check.side_b != y.check.side_b ||
        x.control_applicable != y.control_applicable || x.control_failed != y.control_failed)
      return false;
  }
  return true;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

TorusParameter random_parameter(std::size_t rank, std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
  const std::uint64_t h = fnv1a(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h),    static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 gen(seq);
  QVec values;
  for (std::size_t i = 0; i < rank; ++i) values.push_back(random_rational(gen));
  Rational s = random_rational(gen);
  return TorusParameter(std::move(values), std::move(s));
}

TrialSummary run_corollary_trials_serial(const TrialInputs& in, std::uint64_t seed, std::size_t trials) {
  std::vector<Trial> records(trials);
  for (std::size_t i = 0; i < trials; ++i) run_one(in, seed, i, records[i]);
  return summarize(seed, std::move(records));
}

TrialSummary run_corollary_trials(const TrialInputs& in, std::uint64_t seed, std::size_t trials) {
  std::vector<Trial> records(trials);
  std::vector<std::exception_ptr> errors(trials);
  const auto n = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      run_one(in, seed, static_cast<std::uint64_t>(i), records[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return summarize(seed, std::move(records));
}

}  // namespace rcg
