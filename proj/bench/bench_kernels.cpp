// Serial reference versus OpenMP drivers: corollary trials and full catalog verification.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "rcg/catalog.hpp"
#include "rcg/report.hpp"

using namespace rcg;

namespace {

template <class F>
double seconds(F&& f, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
            << (same ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const auto files = builtin_catalog();

  std::cout << "threads " << omp_get_max_threads() << ", trials " << trials << ", repeats " << repeats << "\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "openmp" << std::setw(10) << "speedup" << "\n";

  for (const auto& f : files) {
    const auto e = load_entry(f);
    const auto c = build_c_group(e.shimura);
    const auto rl = v_mu_character(e.shimura);
    const auto rc = build_rC(c, rl);
    const TrialInputs in{e.shimura, c, rl, rc};
    TrialSummary a, b;
    const double s = seconds([&] { a = run_corollary_trials_serial(in, 0, trials); }, repeats);
    const double p = seconds([&] { b = run_corollary_trials(in, 0, trials); }, repeats);
    row("trials " + f.name, s, p, a == b);
  }

  Report a, b;
  const double s = seconds([&] { a = run_full_verification_serial(files, 0, 100); }, repeats);
  const double p = seconds([&] { b = run_full_verification(files, 0, 100); }, repeats);
  row("catalog report", s, p, to_json(a, true).dump() == to_json(b, true).dump());
  return 0;
}
