#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "origami/core.hpp"

namespace origami {

// Permutation of {1..n} stored with its inverse so that apply_inv is O(1).
class FinitePerm {
 public:
  // images[i-1] is the image of i; throws Error unless this is a bijection.
  explicit FinitePerm(std::vector<SquareId> images);

  static FinitePerm identity(SquareId n);
  // Throws Error on indices outside 1..n or repeated within/between cycles.
  static FinitePerm from_cycles(SquareId n,
                                const std::vector<std::vector<SquareId>>& cycles);

  SquareId size() const { return static_cast<SquareId>(fwd_.size()); }
  SquareId apply(SquareId i) const;
  SquareId apply_inv(SquareId i) const;
  const std::vector<SquareId>& images() const { return fwd_; }

  friend bool operator==(const FinitePerm& a, const FinitePerm& b) {
    return a.fwd_ == b.fwd_;
  }
  friend bool operator<(const FinitePerm& a, const FinitePerm& b) {
    return a.fwd_ < b.fwd_;
  }

 private:
  FinitePerm() = default;
  std::vector<SquareId> fwd_, inv_;
};

// Cycles in canonical form: each cycle starts at its minimal element, cycles
// sorted by minimal element, fixed points included as 1-cycles.
std::vector<std::vector<SquareId>> cycle_decomposition(const FinitePerm& p);

// g after h: compose(g, h)(i) = g(h(i)).  Every permutation product in this
// library goes through here so the convention cannot drift.
FinitePerm compose(const FinitePerm& g, const FinitePerm& h);
FinitePerm inverse(const FinitePerm& p);

std::string cycles_to_string(const std::vector<std::vector<SquareId>>& cycles);

// Bijection of the countable square set given by explicit forward and
// backward rules.  Both rules must be total on the ids actually visited;
// debug builds spot-check that the rules invert each other on every call.
class LazyBijection {
 public:
  using Rule = std::function<SquareId(SquareId)>;

  LazyBijection(std::string name, Rule forward, Rule backward);

  SquareId apply(SquareId i) const;
  SquareId apply_inv(SquareId i) const;
  const std::string& name() const { return name_; }

  // Extends p by the identity beyond p.size().
  static LazyBijection from_perm(const FinitePerm& p);

 private:
  std::string name_;
  Rule fwd_, bwd_;
};

struct BudgetExceeded {
  std::int64_t steps = 0;
};

using CycleTrace = std::variant<std::vector<SquareId>, BudgetExceeded>;

// Follows b from start until it returns to start, for at most budget
// applications.  The cycle is reported in traversal order starting at start.
CycleTrace trace_cycle(const LazyBijection& b, SquareId start,
                       std::int64_t budget);

}  // namespace origami
