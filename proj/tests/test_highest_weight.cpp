#include <doctest.h>

#include <algorithm>

#include "rcg/highest_weight.hpp"
#include "support.hpp"

using namespace rcg;
using namespace rcg::test;

namespace {

WeightVector ch_w(Coords c) { return {Side::character, std::move(c)}; }
WeightVector co_w(Coords c) { return {Side::cocharacter, std::move(c)}; }

// All dominant weights with fundamental-weight coordinates in [0, bound].
std::vector<Coords> small_dominant(std::size_t rank, std::int64_t bound) {
  std::vector<Coords> out{Coords{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Coords> next;
    for (const auto& c : out)
      for (std::int64_t k = 0; k <= bound; ++k) {
        Coords d = c;
        d.push_back(k);
        next.push_back(d);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("characters of small representations") {
  auto v = irreducible_character(gl(2), ch_w({-1, 0}));
  CHECK(v.entries == std::map<Coords, std::int64_t>{{{-1, 0}, 1}, {{0, -1}, 1}});
  CHECK(v.dimension() == 2);

  auto triv = irreducible_character(gsp4(), ch_w({0, 0, 0}));
  CHECK(triv.entries == std::map<Coords, std::int64_t>{{{0, 0, 0}, 1}});

  // Spin representation of the dual of GSp4.
  auto spin = irreducible_character(dual(gsp4()), ch_w({-1, -1, -1}));
  CHECK(spin.dimension() == 4);
  CHECK(spin.entries.size() == 4);
  for (const auto& [w, m] : spin.entries) CHECK(m == 1);
  CHECK(spin.multiplicity({-1, -1, -1}) == 1);
  CHECK(spin.multiplicity({0, 0, -1}) == 1);
}

TEST_CASE("GL3 multiplicities match Kostka numbers") {
  auto adj = irreducible_character(gl(3), ch_w({2, 1, 0}));
  CHECK(adj.dimension() == 8);
  CHECK(adj.multiplicity({1, 1, 1}) == 2);
  Coords p{0, 1, 2};
  do {
    CHECK(adj.multiplicity(p) == 1);
  } while (std::next_permutation(p.begin(), p.end()));

  auto sym2 = irreducible_character(gl(3), ch_w({0, 0, 2}));
  CHECK(sym2.dimension() == 6);
  CHECK(sym2.multiplicity({1, 1, 0}) == 1);
  CHECK(sym2.multiplicity({2, 0, 0}) == 1);

  auto s31 = irreducible_character(gl(3), ch_w({3, 1, 0}));
  CHECK(s31.dimension() == 15);
  CHECK(s31.multiplicity({2, 1, 1}) == 2);
  CHECK(s31.multiplicity({2, 2, 0}) == 1);
}

TEST_CASE("zero weight multiplicities of adjoint representations") {
  auto a2 = irreducible_character(type_a2(), ch_w({1, 1}));
  CHECK(a2.dimension() == 8);
  CHECK(a2.multiplicity({0, 0}) == 2);
  auto g2_small = irreducible_character(type_g2(), ch_w({1, 0}));
  CHECK(g2_small.dimension() == 7);
  CHECK(g2_small.multiplicity({0, 0}) == 1);
  auto g2_adj = irreducible_character(type_g2(), ch_w({0, 1}));
  CHECK(g2_adj.dimension() == 14);
  CHECK(g2_adj.multiplicity({0, 0}) == 2);
}

TEST_CASE("weyl dimension examples") {
  CHECK(weyl_dimension(gl(2), ch_w({0, -1})) == 2);
  CHECK(weyl_dimension(gl(2), ch_w({3, 3})) == 1);
  CHECK(weyl_dimension(dual(gsp4()), dominant_conjugate(dual(gsp4()), ch_w({-1, -1, -1}))) == 4);
  CHECK(weyl_dimension(type_b2(), ch_w({1, 0})) == 5);
  CHECK(weyl_dimension(type_b2(), ch_w({0, 1})) == 4);
  CHECK(weyl_dimension(type_b2(), ch_w({0, 2})) == 10);
  CHECK(weyl_dimension(type_b3(), ch_w({0, 0, 1})) == 8);
  CHECK_THROWS_AS(weyl_dimension(gl(2), ch_w({-1, 0})), NotDominant);
}

TEST_CASE("freudenthal multiplicities sum to the weyl dimension") {
  for (const auto& g : {type_a2(), type_b2(), type_g2(), type_b3()}) {
    const std::int64_t bound = g.rank == 3 ? 1 : 2;
    for (const auto& c : small_dominant(g.rank, bound)) {
      auto ch = irreducible_character(g, ch_w(c));
      CHECK_MESSAGE(Integer(ch.dimension()) == weyl_dimension(g, ch_w(c)), g.name);
    }
  }
  for (const auto& g : {gl(3), gsp4(), dual(gsp4())}) {
    for (const auto& w : {Coords(g.rank, 0), g.roots[0], g.roots.back(), sum_positive_roots(g).coords}) {
      auto dom = dominant_conjugate(g, ch_w(w));
      CHECK(Integer(irreducible_character(g, ch_w(w)).dimension()) == weyl_dimension(g, dom));
    }
  }
}

TEST_CASE("characters are weyl invariant and lie in one root-lattice coset") {
  for (const auto& g : {gl(3), gsp4(), type_b2(), type_g2()}) {
    QMatrix simple(g.simple.size(), g.rank);
    for (std::size_t i = 0; i < g.simple.size(); ++i)
      for (std::size_t j = 0; j < g.rank; ++j) simple(i, j) = static_cast<long>(g.roots[g.simple[i]][j]);
    for (const auto& w : {g.roots[0], sum_positive_roots(g).coords}) {
      Coords start = w;
      start[0] += 1;
      auto ch = irreducible_character(g, ch_w(start));
      CHECK(is_weyl_invariant(g, ch));
      // Independent of the extreme weight chosen in the orbit.
      for (const auto& x : weyl_orbit(g, ch_w(start))) CHECK(irreducible_character(g, x) == ch);
      const Coords& top = ch.entries.rbegin()->first;
      for (const auto& [nu, m] : ch.entries) {
        QVec diff(g.rank);
        for (std::size_t j = 0; j < g.rank; ++j) diff[j] = static_cast<long>(top[j] - nu[j]);
        QVec coeffs;
        if (std::all_of(diff.begin(), diff.end(), [](const Rational& q) { return q == 0; })) continue;
        REQUIRE(solve_row_combination(simple, diff, coeffs));
        for (const auto& q : coeffs) CHECK(q.get_den() == 1);
      }
    }
  }
}

TEST_CASE("central scalar") {
  auto v = irreducible_character(gl(2), ch_w({-1, 0}));
  CHECK(central_scalar(gl(2), v, co_w({1, -1})) == -1);
  CHECK(central_scalar(gl(2), v, co_w({2, 0})) == 1);
  auto triv = irreducible_character(gl(2), ch_w({0, 0}));
  CHECK(central_scalar(gl(2), triv, co_w({1, -1})) == 1);
  const auto g = dual(gsp4());
  auto spin = irreducible_character(g, ch_w({-1, -1, -1}));
  CHECK(central_scalar(g, spin, co_w(sum_positive_roots(gsp4()).coords)) == -1);

  CHECK_THROWS_AS(central_scalar(gl(2), v, co_w({1, 0})), NotCentral);
  FormalCharacter mixed{"GL2", Side::character, {{{0, 0}, 1}, {{1, 0}, 1}}};
  CHECK_THROWS_AS(central_scalar(gl(2), mixed, co_w({1, -1})), NotScalar);
}

TEST_CASE("transform permutes weights") {
  auto v = irreducible_character(gl(3), ch_w({1, 0, 0}));
  SmallMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(transform(v, swap) == v);
  SmallMatrix neg{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  CHECK(transform(v, neg) == irreducible_character(gl(3), ch_w({-1, 0, 0})));
}
