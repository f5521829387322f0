#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rcg/cgroup.hpp"

namespace rcg {

/// A point t of T^ (value of each standard character) and s = |w|^{1/2}.
struct TorusParameter {
  QVec values;
  Rational half_norm = 1;

  TorusParameter() = default;
  /// Throws std::invalid_argument on a zero value or s <= 0.
  TorusParameter(QVec values, Rational half_norm);
};

Rational power(const Rational& base, long exponent);

/// lambda(t) = prod t_i^{lambda_i}.
Rational evaluate_weight(const Coords& weight, std::span<const Rational> values);

/// Sorted multiset {lambda(t) * s^exponent}, each repeated by multiplicity.
std::vector<Rational> evaluate_twisted(const FormalCharacter& ch, const TorusParameter& p, std::int64_t exponent);

/// (r_L o phi) (x) |.|^{-d/2}: exponent -d on s.
std::vector<Rational> evaluate_twisted_rL(const FormalCharacter& rL, const TorusParameter& p, std::int64_t d);

/// Value of each basis character (l, k) of char_lattice on (t, s): l(t) * s^k.
QVec embed_parameter(const Lattice& char_lattice, const TorusParameter& p);
QVec embed_parameter(const CGroupDatum& c, const TorusParameter& p);

struct CorollaryCheck {
  bool pass = false;
  std::vector<Rational> side_a;  // twisted r_L
  std::vector<Rational> side_b;  // r_C through quotient coordinates
};

/// `exponent_shift` perturbs side A's twist to -d + shift (negative control only).
CorollaryCheck verify_corollary(const ShimuraData& s, const CGroupDatum& c, const FormalCharacter& rL,
                                const QuotientCharacter& rC, const TorusParameter& p,
                                std::int64_t exponent_shift = 0);

struct Trial {
  std::uint64_t index = 0;
  TorusParameter parameter;
  CorollaryCheck check;
  bool control_applicable = false;  // s != 1
  bool control_failed = false;      // perturbed exponent was rejected
};

struct TrialSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t control_trials = 0;
  std::size_t control_rejections = 0;
  std::vector<Trial> records;

  bool passed() const { return failures == 0 && control_rejections == control_trials; }
  friend bool operator==(const TrialSummary& a, const TrialSummary& b);
};

/// Deterministic in (seed, stream, trial): numerators and denominators uniform in [1, 50].
TorusParameter random_parameter(std::size_t rank, std::uint64_t seed, std::string_view stream, std::uint64_t trial);

std::uint64_t fnv1a(std::string_view text);

struct TrialInputs {
  const ShimuraData& shimura;
  const CGroupDatum& cgroup;
  const FormalCharacter& rL;
  const QuotientCharacter& rC;
};

/// Serial reference driver.
TrialSummary run_corollary_trials_serial(const TrialInputs& in, std::uint64_t seed, std::size_t trials);
/// OpenMP driver; output identical to the serial one.
TrialSummary run_corollary_trials(const TrialInputs& in, std::uint64_t seed, std::size_t trials);

}  // namespace rcg
