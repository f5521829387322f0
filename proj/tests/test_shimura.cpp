#include <doctest.h>

#include <random>

#include "rcg/catalog.hpp"
#include "rcg/shimura.hpp"
#include "support.hpp"

using namespace rcg;
using namespace rcg::test;

namespace {

WeightVector co_w(Coords c) { return {Side::cocharacter, std::move(c)}; }

}  // namespace

TEST_CASE("normalize_mu examples") {
  auto s = normalize_mu(gl(2), co_w({0, -1}));
  CHECK(s.mu.coords == Coords{-1, 0});
  CHECK(s.d == 1);
  CHECK(normalize_mu(gl(2), co_w({-1, 0})).mu.coords == Coords{-1, 0});
  CHECK(normalize_mu(gsp4(), co_w({-1, -1, -1})).d == 3);
  CHECK(normalize_mu(gl(2), co_w({0, 0})).degenerate());
  CHECK_THROWS_AS(normalize_mu(gl(2), co_w({-2, 0})), AxiomViolation);
  CHECK_THROWS_AS(normalize_mu(gsp4(), co_w({-2, 0, -2})), AxiomViolation);
  CHECK_THROWS_AS(normalize_mu(gl(2), co_w({0, 0, 0})), InvalidDatum);
  try {
    normalize_mu(gl(2), co_w({-2, 0}));
  } catch (const AxiomViolation& e) {
    CHECK(std::string(e.what()).find("-2") != std::string::npos);
  }
}

TEST_CASE("dimension_d examples") {
  CHECK(dimension_d(normalize_mu(gl(2), co_w({-1, 0}))) == 1);
  CHECK(dimension_d(normalize_mu(gsp4(), co_w({-1, -1, -1}))) == 3);
  CHECK(dimension_d(normalize_mu(gl(4), co_w({-1, -1, 0, 0}))) == 4);
  CHECK(dimension_d(normalize_mu(gsp4(), co_w({0, 0, 0}))) == 0);
  CHECK(dimension_d(normalize_mu(gl(3), co_w({0, 0, 0}))) == 0);
}

TEST_CASE("verify_lemma1 examples") {
  auto gl2 = verify_lemma1(normalize_mu(gl(2), co_w({-1, 0})));
  CHECK(gl2.pairing == -1);
  CHECK(gl2.d == 1);
  CHECK(gl2.scalar == -1);
  CHECK(gl2.dim_v_mu == 2);
  CHECK(gl2.passed());

  auto sp = verify_lemma1(normalize_mu(gsp4(), co_w({-1, -1, -1})));
  CHECK(sp.pairing == -3);
  CHECK(sp.d == 3);
  CHECK(sp.scalar == -1);
  CHECK(sp.dim_v_mu == 4);
  CHECK(sp.passed());

  auto torus = verify_lemma1(normalize_mu(torus_datum("T", 1), co_w({-5})));
  CHECK(torus.pairing == 0);
  CHECK(torus.d == 0);
  CHECK(torus.scalar == 1);
  CHECK(torus.dim_v_mu == 1);
  CHECK(torus.passed());
  CHECK_FALSE(torus.degenerate);
}

TEST_CASE("lemma holds across the catalog") {
  for (const auto& f : builtin_catalog()) {
    auto e = load_entry(f);
    auto r = verify_lemma1(e.shimura);
    CHECK_MESSAGE(r.pairing == -dimension_d(e.shimura), f.name);
    CHECK_MESSAGE(r.scalar == (r.d % 2 == 0 ? 1 : -1), f.name);
    const auto chi = sum_positive_roots(e.datum).coords;
    for (const auto& [w, m] : v_mu_character(e.shimura).entries) {
      auto parity = e.datum.pair(chi, w) - r.d;
      CHECK(parity % 2 == 0);
    }
  }
}

TEST_CASE("normalize_mu is idempotent and independent of the weyl representative") {
  for (const auto& f : builtin_catalog()) {
    auto e = load_entry(f);
    auto again = normalize_mu(e.datum, e.shimura.mu);
    CHECK(again.mu == e.shimura.mu);
    CHECK(again.d == e.shimura.d);
    for (const auto& w : weyl_orbit(e.datum, e.shimura.mu)) {
      auto s = normalize_mu(e.datum, w);
      CHECK_MESSAGE(s.mu == e.shimura.mu, f.name);
      CHECK(s.d == e.shimura.d);
    }
  }
}

TEST_CASE("lemma holds on random product data") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto [datum, mu] = random_shimura_datum(rng);
    auto s = normalize_mu(datum, co_w(mu));
    CHECK(normalize_mu(datum, s.mu).mu == s.mu);
    auto r = verify_lemma1(s);
    CHECK_MESSAGE(r.passed(), datum.name);
  }
}
