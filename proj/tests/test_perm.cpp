#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "origami/core.hpp"
#include "origami/perm.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using origami::FinitePerm;
using origami::LazyBijection;
using origami::SquareId;

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(FinitePerm({1, 1}), origami::Error);
  CHECK_THROWS_AS(FinitePerm({2, 3}), origami::Error);
  CHECK_THROWS_AS(FinitePerm({0, 1}), origami::Error);
  CHECK_NOTHROW(FinitePerm({2, 1}));
}

TEST_CASE("identity and from_cycles") {
  const FinitePerm e = FinitePerm::identity(4);
  for (SquareId i = 1; i <= 4; ++i) CHECK(e.apply(i) == i);

  const FinitePerm p = FinitePerm::from_cycles(4, {{3, 4}});
  CHECK(p.apply(1) == 1);
  CHECK(p.apply(3) == 4);
  CHECK(p.apply(4) == 3);
  CHECK(p.apply_inv(4) == 3);

  CHECK_THROWS_AS(FinitePerm::from_cycles(3, {{1, 1}}), origami::Error);
  CHECK_THROWS_AS(FinitePerm::from_cycles(3, {{1, 4}}), origami::Error);
}

TEST_CASE("compose applies the right operand first") {
  // sigma = (1,2), tau = (1,3): compose(sigma, tau) sends 3 to sigma(1) = 2.
  const FinitePerm sigma = FinitePerm::from_cycles(3, {{1, 2}});
  const FinitePerm tau = FinitePerm::from_cycles(3, {{1, 3}});
  const FinitePerm c = origami::compose(sigma, tau);
  CHECK(c.apply(3) == 2);
  CHECK(c.apply(1) == 3);
  CHECK(c.apply(2) == 1);
}

TEST_CASE("compose and inverse match the oracle on random pairs") {
  testgen::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + rng.below(12);
    const auto gi = rng.permutation(n);
    const auto hi = rng.permutation(n);
    const FinitePerm g{gi}, h{hi};
    const FinitePerm gh = origami::compose(g, h);
    CHECK(gh.images() == oracle::mult(gi, hi));
    CHECK(origami::inverse(g).images() == oracle::inverse_of(gi));
    for (SquareId x = 1; x <= n; ++x) {
      CHECK(gh.apply(x) == g.apply(h.apply(x)));
      CHECK(g.apply_inv(g.apply(x)) == x);
    }
  }
}

TEST_CASE("cycle decomposition matches the oracle and is canonically ordered") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + rng.below(15);
    const auto img = rng.permutation(n);
    const auto got = origami::cycle_decomposition(FinitePerm{img});
    CHECK(got == oracle::cycles(img));
    // Smallest element leads every cycle and cycles appear in order.
    SquareId last_lead = 0;
    for (const auto& cyc : got) {
      CHECK(!cyc.empty());
      CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
      CHECK(cyc.front() > last_lead);
      last_lead = cyc.front();
    }
  }
}

TEST_CASE("cycle strings write fixed points explicitly") {
  const FinitePerm p = FinitePerm::from_cycles(4, {{3, 4}});
  CHECK(origami::cycles_to_string(origami::cycle_decomposition(p)) ==
        "(1)(2)(3,4)");
  const FinitePerm e = FinitePerm::identity(2);
  CHECK(origami::cycles_to_string(origami::cycle_decomposition(e)) ==
        "(1)(2)");
}

TEST_CASE("lazy bijection wraps a finite permutation") {
  const FinitePerm p = FinitePerm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  const LazyBijection b = LazyBijection::from_perm(p);
  for (SquareId i = 1; i <= 5; ++i) {
    CHECK(b.apply(i) == p.apply(i));
    CHECK(b.apply_inv(i) == p.apply_inv(i));
  }
}

TEST_CASE("trace_cycle returns the cycle from its start point") {
  const FinitePerm p = FinitePerm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  const LazyBijection b = LazyBijection::from_perm(p);
  auto got = origami::trace_cycle(b, 2, 100);
  REQUIRE(std::holds_alternative<std::vector<SquareId>>(got));
  CHECK(std::get<std::vector<SquareId>>(got) ==
        std::vector<SquareId>{2, 3, 1});
}

TEST_CASE("trace_cycle reports budget exhaustion on a non-closing orbit") {
  const LazyBijection shift(
      "shift", [](SquareId i) { return i + 1; },
      [](SquareId i) { return i - 1; });
  auto got = origami::trace_cycle(shift, 1, 50);
  REQUIRE(std::holds_alternative<origami::BudgetExceeded>(got));
  CHECK(std::get<origami::BudgetExceeded>(got).steps == 50);
}
