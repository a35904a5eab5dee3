#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "origami/core.hpp"
#include "origami/perm.hpp"

namespace origami {

// What construction-time validation established.  Finite origamis are fully
// decided; countable ones record how far the probes went.
struct ValidationRecord {
  Tribool connected = Tribool::unknown;
  SquareId disconnect_witness = 0;
  Tribool commutator_finite = Tribool::unknown;
  SquareId probed_through = 0;        // commutator cycles traced through 1..m
  std::int64_t cycle_budget = 0;
  SquareId budget_exceeded_at = 0;    // first square whose cycle outran the budget
};

// An origami: squares glued along edges.  sigma(i) = j means the right edge
// of square i is glued to the left edge of square j; tau(i) = j glues the top
// edge of i to the bottom edge of j.
class Origami {
 public:
  bool is_finite() const { return n_.has_value(); }
  SquareId size() const;  // throws on countable origamis

  SquareId sigma(SquareId i) const { return s_->apply(i); }
  SquareId sigma_inv(SquareId i) const { return s_->apply_inv(i); }
  SquareId tau(SquareId i) const { return t_->apply(i); }
  SquareId tau_inv(SquareId i) const { return t_->apply_inv(i); }

  const FinitePerm& sigma_perm() const;  // finite only
  const FinitePerm& tau_perm() const;
  const LazyBijection& sigma_rule() const { return *s_; }
  const LazyBijection& tau_rule() const { return *t_; }

  const ValidationRecord& validation() const { return record_; }
  // Builtin name ("staircase") or empty for ad-hoc origamis.
  const std::string& name() const { return name_; }

  friend bool operator==(const Origami& a, const Origami& b);

 private:
  Origami() = default;
  std::optional<SquareId> n_;
  std::shared_ptr<const FinitePerm> fs_, ft_;  // set when finite
  std::shared_ptr<const LazyBijection> s_, t_;
  ValidationRecord record_;
  std::string name_;

  friend Origami make_origami(FinitePerm sigma, FinitePerm tau);
  friend Origami make_origami_countable(LazyBijection sigma, LazyBijection tau,
                                        SquareId probe_through,
                                        std::int64_t cycle_budget,
                                        const std::string& name);
};

// Finite construction decides everything: throws DomainMismatch when the
// permutation degrees differ and NotConnected (with a witness square) when
// <sigma, tau> is not transitive.  n = 0 is rejected.
Origami make_origami(FinitePerm sigma, FinitePerm tau);

// Countable construction cannot decide connectivity; it traces the
// commutator cycles through squares 1..probe_through within cycle_budget and
// records the outcome.
Origami make_origami_countable(LazyBijection sigma, LazyBijection tau,
                               SquareId probe_through = 50,
                               std::int64_t cycle_budget = 10'000,
                               const std::string& name = "");

// The infinite staircase: sigma fixes 1, 2 and every square 3k+2, and swaps
// 3k with 3k+1; tau cycles (3k+1, 3k+2, 3k+3).  One square of each triple
// steps the diagonal staircase one flight up.
Origami staircase_origami();

// One counterclockwise turn around the bottom-left vertex of square i:
// commutator_step = tau . sigma . tau^-1 . sigma^-1, sigma^-1 applied first.
SquareId commutator_step(const Origami& o, SquareId i);
SquareId commutator_step_inv(const Origami& o, SquareId i);
LazyBijection commutator_rule(const Origami& o);

// A singularity is a commutator cycle; its length is the local degree (cone
// angle 2*pi*degree at the vertex).
struct Singularity {
  std::vector<SquareId> cycle;  // canonical: minimal square first, step order
  std::int64_t degree = 0;
};

std::variant<Singularity, BudgetExceeded> singularity_at(
    const Origami& o, SquareId i, std::int64_t budget = 10'000);

// All singularities of a finite origami, sorted by minimal cycle element.
std::vector<Singularity> singularities(const Origami& o);
// Sorted multiset of local degrees; the degrees sum to n.
std::vector<std::int64_t> singularity_profile(const Origami& o);

// chi = V - n for an origami with V singularities on n squares.
std::int64_t euler_characteristic(const Origami& o);
// genus = (2 - chi) / 2; throws OddParity if chi were odd (cannot happen for
// a genuine origami, so this guards internal consistency only).
std::int64_t genus(const Origami& o);

struct Ball {
  SquareId base = 0;
  std::int64_t radius = 0;
  std::vector<SquareId> squares;  // BFS discovery order
  std::unordered_set<SquareId> members;
  bool contains(SquareId i) const { return members.count(i) > 0; }
};

// Squares reachable from base in at most radius steps of sigma, sigma^-1,
// tau, tau^-1; neighbors are expanded in that fixed rule order.
Ball ball(const Origami& o, SquareId base, std::int64_t radius);

Singularity canonical_singularity(std::vector<SquareId> cycle);

}  // namespace origami
