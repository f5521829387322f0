#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rcg/root_datum.hpp"

namespace rcg::test {

inline RootDatum gl(std::size_t n) {
  RootDatum d;
  d.name = "GL" + std::to_string(n);
  d.rank = n;
  auto vec = [n](std::size_t i, std::size_t j) {
    Coords v(n, 0);
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d.simple.push_back(d.roots.size());
    d.roots.push_back(vec(i, i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && j != i + 1) d.roots.push_back(vec(i, j));
  d.coroots = d.roots;
  return d;
}

inline RootDatum gsp4() {
  RootDatum d;
  d.name = "GSp4";
  d.rank = 3;
  d.roots = {{1, -1, 0}, {0, 2, -1}, {1, 1, -1}, {2, 0, -1}, {-1, 1, 0}, {0, -2, 1}, {-1, -1, 1}, {-2, 0, 1}};
  d.coroots = {{1, -1, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}, {-1, 1, 0}, {0, -1, 0}, {-1, -1, 0}, {-1, 0, 0}};
  d.simple = {0, 1};
  return d;
}

/// SL2 with X = weight lattice: root (2), coroot (1).
inline RootDatum sl2() {
  RootDatum d;
  d.name = "SL2";
  d.rank = 1;
  d.roots = {{2}, {-2}};
  d.coroots = {{1}, {-1}};
  d.simple = {0};
  return d;
}

/// Simply connected semisimple datum from a Cartan matrix A(i,j) = <a_i, a_j^v>:
/// X has the fundamental weights as basis, Y the simple coroots.
inline RootDatum from_cartan(const std::string& name, const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  using Pair = std::pair<Coords, Coords>;
  std::vector<Pair> simple;
  for (std::size_t i = 0; i < n; ++i) {
    Coords co(n, 0);
    co[i] = 1;
    simple.emplace_back(a[i], co);
  }
  auto dot = [](const Coords& x, const Coords& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<Pair> all(simple.begin(), simple.end());
  std::set<Pair> seen(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (const auto& [ai, ci] : simple) {
      Pair p = all[k];
      auto x = dot(p.first, ci);
      auto y = dot(ai, p.second);
      for (std::size_t j = 0; j < n; ++j) {
        p.first[j] -= x * ai[j];
        p.second[j] -= y * ci[j];
      }
      if (seen.insert(p).second) all.push_back(p);
    }
  }
  RootDatum d;
  d.name = name;
  d.rank = n;
  for (const auto& [r, c] : all) {
    d.roots.push_back(r);
    d.coroots.push_back(c);
  }
  for (std::size_t i = 0; i < n; ++i) d.simple.push_back(i);
  return d;
}

inline RootDatum type_a2() { return from_cartan("A2", {{2, -1}, {-1, 2}}); }
inline RootDatum type_b2() { return from_cartan("B2", {{2, -2}, {-1, 2}}); }
inline RootDatum type_g2() { return from_cartan("G2", {{2, -1}, {-3, 2}}); }
inline RootDatum type_b3() { return from_cartan("B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}); }

/// Direct sum of two data on X_a + X_b.
inline RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
  RootDatum d;
  d.name = a.name + "x" + b.name;
  d.rank = a.rank + b.rank;
  auto pad = [&](const Coords& v, bool first) {
    Coords out(d.rank, 0);
    std::copy(v.begin(), v.end(), out.begin() + (first ? 0 : a.rank));
    return out;
  };
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    d.roots.push_back(pad(a.roots[i], true));
    d.coroots.push_back(pad(a.coroots[i], true));
  }
  for (std::size_t i = 0; i < b.roots.size(); ++i) {
    d.roots.push_back(pad(b.roots[i], false));
    d.coroots.push_back(pad(b.coroots[i], false));
  }
  d.simple = a.simple;
  for (auto s : b.simple) d.simple.push_back(s + a.roots.size());
  return d;
}

/// A factor together with a cocharacter satisfying the Shimura pairing condition.
struct Factor {
  RootDatum datum;
  Coords mu;
};

/// Random reductive datum (product of GL_n, GSp4, torus factors) with a
/// minuscule-type mu, scrambled by random simple reflections.
inline std::pair<RootDatum, Coords> random_shimura_datum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> factors(1, 3);
  std::uniform_int_distribution<std::int64_t> shift(-2, 2);
  RootDatum d;
  d.name = "T0";
  Coords mu;
  const int count = factors(rng);
  for (int f = 0; f < count; ++f) {
    Factor fac;
    switch (kind(rng)) {
      case 0: {
        std::uniform_int_distribution<std::size_t> size(1, 4);
        const std::size_t n = size(rng);
        fac.datum = gl(n);
        std::uniform_int_distribution<std::size_t> ones(0, n);
        const std::size_t k = ones(rng);
        const auto c = shift(rng);
        for (std::size_t i = 0; i < n; ++i) fac.mu.push_back((i < k ? -1 : 0) + c);
        break;
      }
      case 1: {
        fac.datum = gsp4();
        const auto c = shift(rng);
        if (rng() % 2) fac.mu = {-1 + c, -1 + c, -1 + 2 * c};
        else fac.mu = {c, c, 2 * c};
        break;
      }
      default:
        fac.datum = torus_datum("T", 1);
        fac.mu = {shift(rng)};
    }
    d = d.rank == 0 ? fac.datum : direct_sum(d, fac.datum);
    mu.insert(mu.end(), fac.mu.begin(), fac.mu.end());
  }
  if (!d.simple.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, d.simple.size() - 1);
    for (int i = 0; i < 6; ++i) mu = reflect(d, pick(rng), Side::cocharacter, mu);
  }
  return {d, mu};
}

}  // namespace rcg::test
