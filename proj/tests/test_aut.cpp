#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "origami/aut.hpp"
#include "origami/core.hpp"
#include "origami/cover.hpp"
#include "origami/group.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using origami::AutVerdict;
using origami::CertifiedMap;
using origami::FinitePerm;
using origami::Origami;
using origami::Refutation;
using origami::SeedVerdict;
using origami::SquareId;
using origami::TotalMap;

namespace {

Origami l_shape() {
  // Three squares: two side by side, one stacked on the first.
  return origami::make_origami(
      FinitePerm::from_cycles(3, {{1, 2}}), FinitePerm::from_cycles(3, {{1, 3}}));
}

Origami torus() {
  return origami::make_origami(FinitePerm::identity(1),
                                      FinitePerm::identity(1));
}

Origami two_by_two() {
  // 2x2 grid torus: sigma swaps columns, tau swaps rows.
  return origami::make_origami(
      FinitePerm::from_cycles(4, {{1, 2}, {3, 4}}),
      FinitePerm::from_cycles(4, {{1, 3}, {2, 4}}));
}

// Independent oracle: translations of (sigma, tau) are exactly the
// permutations commuting with both, i.e. the centralizer intersection.
std::vector<oracle::Images> aut_oracle(const Origami& o) {
  const int64_t n = o.size();
  oracle::Images s(n), t(n);
  for (SquareId i = 1; i <= n; ++i) {
    s[static_cast<size_t>(i - 1)] = o.sigma(i);
    t[static_cast<size_t>(i - 1)] = o.tau(i);
  }
  return oracle::centralizer(s, t);
}

std::vector<oracle::Images> as_images(const std::vector<FinitePerm>& ps) {
  std::vector<oracle::Images> out;
  for (const FinitePerm& p : ps) {
    oracle::Images im(static_cast<size_t>(p.size()));
    for (SquareId i = 1; i <= p.size(); ++i)
      im[static_cast<size_t>(i - 1)] = p.apply(i);
    out.push_back(im);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the one-square torus has only the identity translation") {
  const std::vector<FinitePerm> a = origami::automorphism_group(torus());
  REQUIRE(a.size() == 1);
  CHECK(a[0].apply(1) == 1);
}

TEST_CASE("the three-square L has a trivial translation group") {
  const std::vector<FinitePerm> a = origami::automorphism_group(l_shape());
  REQUIRE(a.size() == 1);
  for (SquareId i = 1; i <= 3; ++i) CHECK(a[0].apply(i) == i);
}

TEST_CASE("the 2x2 torus has the Klein four-group of translations") {
  const std::vector<FinitePerm> a = origami::automorphism_group(two_by_two());
  REQUIRE(a.size() == 4);
  // Expected images, sorted: id, (1,2)(3,4), (1,3)(2,4), (1,4)(2,3).
  const std::vector<oracle::Images> expect = {
      {1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  CHECK(as_images(a) == expect);
  // Every element squares to the identity.
  for (const FinitePerm& p : a)
    for (SquareId i = 1; i <= 4; ++i) CHECK(p.apply(p.apply(i)) == i);
}

TEST_CASE("automorphism groups match the commuting-permutation oracle") {
  testgen::Rng rng(0xA117u);
  for (int trial = 0; trial < 60; ++trial) {
    const int64_t n = 2 + static_cast<int64_t>(rng.below(6));  // 2..7
    const Origami o = testgen::random_connected_origami(rng, n);
    const std::vector<oracle::Images> expect = aut_oracle(o);
    const std::vector<oracle::Images> got =
        as_images(origami::automorphism_group(o));
    REQUIRE(got == expect);
  }
}

TEST_CASE("the translation group is closed and commutes with the gluings") {
  testgen::Rng rng(0xA118u);
  for (int trial = 0; trial < 20; ++trial) {
    const int64_t n = 3 + static_cast<int64_t>(rng.below(5));  // 3..7
    const Origami o = testgen::random_connected_origami(rng, n);
    const std::vector<FinitePerm> a = origami::automorphism_group(o);
    for (const FinitePerm& p : a) {
      for (SquareId i = 1; i <= n; ++i) {
        CHECK(p.apply(o.sigma(i)) == o.sigma(p.apply(i)));
        CHECK(p.apply(o.tau(i)) == o.tau(p.apply(i)));
      }
    }
    // Closure under composition: the image set, as a set of tables, is a group.
    std::vector<oracle::Images> tables = as_images(a);
    for (const oracle::Images& x : tables)
      for (const oracle::Images& y : tables) {
        const oracle::Images xy = oracle::mult(x, y);
        CHECK(std::find(tables.begin(), tables.end(), xy) != tables.end());
      }
  }
}

TEST_CASE("extending a valid seed on the 2x2 torus yields a total map") {
  const AutVerdict v = origami::extend_translation(two_by_two(), 1, 2);
  REQUIRE(std::holds_alternative<TotalMap>(v));
  const origami::TranslationMap& m = std::get<TotalMap>(v).map;
  CHECK(m.base == 1);
  CHECK(m.image == 2);
  const std::map<SquareId, SquareId> expect = {{1, 2}, {2, 1}, {3, 4}, {4, 3}};
  CHECK(m.table == expect);
}

TEST_CASE("extending an impossible seed on the L refutes it") {
  // Aut(L) is trivial, so base 1 -> image 2 must hit a conflict.
  const AutVerdict v = origami::extend_translation(l_shape(), 1, 2);
  REQUIRE(std::holds_alternative<Refutation>(v));
  CHECK(std::get<Refutation>(v).depth >= 0);
  CHECK_FALSE(std::get<Refutation>(v).conflict.empty());
}

TEST_CASE("degree mismatch refutes a staircase seed within the radius") {
  // Square 2 sits at a cone point of degree 1, square 5 at one of degree 2;
  // no translation can carry one to the other.
  const Origami o = origami::staircase_origami();
  const AutVerdict v = origami::extend_translation(o, 2, 5, 4);
  REQUIRE(std::holds_alternative<Refutation>(v));
  CHECK(std::get<Refutation>(v).depth <= 4);
}

TEST_CASE("the identity seed on the staircase is certified to the radius") {
  const Origami o = origami::staircase_origami();
  const AutVerdict v = origami::extend_translation(o, 1, 1, 6);
  REQUIRE(std::holds_alternative<CertifiedMap>(v));
  const CertifiedMap& c = std::get<CertifiedMap>(v);
  CHECK(c.radius == 6);
  CHECK(c.map.base == 1);
  CHECK(c.map.image == 1);
  // The identity extension fixes everything it explores.
  for (const auto& [from, to] : c.map.table) CHECK(from == to);
  // It explored at least the radius-6 ball around square 1.
  const origami::Ball b = origami::ball(o, 1, 6);
  for (SquareId s : b.squares) CHECK(c.map.table.count(s) == 1);
}

TEST_CASE("bounded search around the staircase base leaves only the identity") {
  const Origami o = origami::staircase_origami();
  const origami::Ball seeds = origami::ball(o, 1, 3);
  const std::vector<SeedVerdict> verdicts =
      origami::bounded_aut_search(o, 1, 6, seeds.squares);
  REQUIRE(verdicts.size() == seeds.squares.size());

  // Seeds come back in increasing order.
  for (size_t i = 1; i < verdicts.size(); ++i)
    CHECK(verdicts[i - 1].seed < verdicts[i].seed);

  int64_t survivors = 0;
  for (const SeedVerdict& sv : verdicts) {
    if (std::holds_alternative<Refutation>(sv.verdict)) {
      CHECK(std::get<Refutation>(sv.verdict).depth <= 6);
      continue;
    }
    ++survivors;
    CHECK(sv.seed == 1);  // only the identity candidate survives
    REQUIRE(std::holds_alternative<CertifiedMap>(sv.verdict));
    CHECK(std::get<CertifiedMap>(sv.verdict).radius == 6);
  }
  CHECK(survivors == 1);
}

TEST_CASE("mismatched corner degrees are refuted before any propagation") {
  const Origami o = origami::staircase_origami();
  // Square 2's corner has degree 1; squares 3 and 4 sit at degree-3 corners.
  const std::vector<SeedVerdict> verdicts =
      origami::bounded_aut_search(o, 2, 5, {3, 4});
  REQUIRE(verdicts.size() == 2);
  for (const SeedVerdict& sv : verdicts) {
    REQUIRE(std::holds_alternative<Refutation>(sv.verdict));
    CHECK(std::get<Refutation>(sv.verdict).depth == 0);
  }
}

TEST_CASE("deck translations of an infinite cyclic cover are never refuted") {
  // Cover of the staircase with one +1 voltage: the integer line of copies.
  const Origami base = origami::staircase_origami();
  const origami::Group z = origami::Group::free_abelian(1);
  origami::VoltageAssignment va(z);
  va.set_v(1, origami::GroupElem::vec_elem({1}));
  const origami::CoverOrigami cover = origami::build_cover(base, va);
  const Origami cover_o = cover.as_origami();

  const SquareId base_sq = cover.index_of(1, z.identity());
  std::vector<SquareId> seeds;
  for (int64_t k = -2; k <= 2; ++k)
    seeds.push_back(cover.index_of(1, origami::GroupElem::vec_elem({k})));
  std::sort(seeds.begin(), seeds.end());

  const std::vector<SeedVerdict> verdicts =
      origami::bounded_aut_search(cover_o, base_sq, 4, seeds);
  REQUIRE(verdicts.size() == seeds.size());
  for (const SeedVerdict& sv : verdicts) {
    // Every seed is the image of the base under a genuine deck translation,
    // so none of them can be refuted at any radius.
    CHECK_FALSE(std::holds_alternative<Refutation>(sv.verdict));
  }
}

TEST_CASE("verify_translation accepts the identity and reports conflicts") {
  const Origami o = origami::staircase_origami();
  const origami::Ball b = origami::ball(o, 1, 5);

  const origami::LazyBijection ident(
      "id", [](SquareId i) { return i; }, [](SquareId i) { return i; });
  CHECK(origami::verify_translation(o, ident, b.squares));

  // Shifting every square by +3 is not a translation: square 1 is fixed by
  // sigma but square 4 is not.
  const origami::LazyBijection shift(
      "shift3", [](SquareId i) { return i + 3; },
      [](SquareId i) { return i - 3; });
  std::string conflict;
  CHECK_FALSE(origami::verify_translation(o, shift, b.squares, &conflict));
  CHECK_FALSE(conflict.empty());
}

TEST_CASE("deck maps of a finite cover pass verify_translation") {
  // Z/2 cover of the 2x2 torus.  Putting the flip on v(1) and v(2) makes
  // every corner word cancel while a single vertical loop still carries the
  // flip, so the cover is flat and connected.
  const Origami base = two_by_two();
  const origami::GroupElem flip =
      origami::GroupElem::perm_elem(FinitePerm::from_cycles(2, {{1, 2}}));
  const origami::Group z2 = origami::Group::finite_perm_group(2, {flip});
  origami::VoltageAssignment va(z2);
  va.set_v(1, flip);
  va.set_v(2, flip);
  const origami::CoverOrigami cover = origami::build_cover(base, va);
  const Origami cover_o = cover.as_origami();

  std::vector<SquareId> all;
  for (SquareId i = 1; i <= cover_o.size(); ++i) all.push_back(i);
  for (const origami::GroupElem& g : cover.closure()) {
    const origami::LazyBijection d = origami::deck_map(cover, g);
    CHECK(origami::verify_translation(cover_o, d, all));
  }
}
