#include "origami/surface.hpp"

#include <algorithm>
#include <deque>

namespace origami {

SquareId Origami::size() const {
  if (!n_) throw Error("size() on a countable origami");
  return *n_;
}

const FinitePerm& Origami::sigma_perm() const {
  if (!fs_) throw Error("sigma_perm() on a countable origami");
  return *fs_;
}

const FinitePerm& Origami::tau_perm() const {
  if (!ft_) throw Error("tau_perm() on a countable origami");
  return *ft_;
}

bool operator==(const Origami& a, const Origami& b) {
  if (a.is_finite() != b.is_finite()) return false;
  if (a.is_finite())
    return *a.fs_ == *b.fs_ && *a.ft_ == *b.ft_;
  return a.name_ == b.name_ && !a.name_.empty();
}

Origami make_origami(FinitePerm sigma, FinitePerm tau) {
  if (sigma.size() != tau.size())
    throw DomainMismatch("sigma acts on 1.." + std::to_string(sigma.size()) +
                         " but tau acts on 1.." + std::to_string(tau.size()));
  const SquareId n = sigma.size();

  // Transitivity of <sigma, tau>, BFS from square 1.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<SquareId> queue{1};
  seen[0] = true;
  while (!queue.empty()) {
    const SquareId x = queue.front();
    queue.pop_front();
    for (SquareId y : {sigma.apply(x), sigma.apply_inv(x), tau.apply(x),
                       tau.apply_inv(x)}) {
      if (!seen[y - 1]) {
        seen[y - 1] = true;
        queue.push_back(y);
      }
    }
  }
  for (SquareId i = 1; i <= n; ++i)
    if (!seen[i - 1])
      throw NotConnected(i, "square " + std::to_string(i) +
                                " is not reachable from square 1");

  Origami o;
  o.n_ = n;
  o.fs_ = std::make_shared<const FinitePerm>(std::move(sigma));
  o.ft_ = std::make_shared<const FinitePerm>(std::move(tau));
  auto fs = o.fs_;
  auto ft = o.ft_;
  o.s_ = std::make_shared<const LazyBijection>(
      "sigma", [fs](SquareId i) { return fs->apply(i); },
      [fs](SquareId i) { return fs->apply_inv(i); });
  o.t_ = std::make_shared<const LazyBijection>(
      "tau", [ft](SquareId i) { return ft->apply(i); },
      [ft](SquareId i) { return ft->apply_inv(i); });
  o.record_.connected = Tribool::yes;
  o.record_.commutator_finite = Tribool::yes;
  return o;
}

Origami make_origami_countable(LazyBijection sigma, LazyBijection tau,
                               SquareId probe_through, std::int64_t cycle_budget,
                               const std::string& name) {
  Origami o;
  o.s_ = std::make_shared<const LazyBijection>(std::move(sigma));
  o.t_ = std::make_shared<const LazyBijection>(std::move(tau));
  o.name_ = name;
  o.record_.connected = Tribool::unknown;
  o.record_.probed_through = probe_through;
  o.record_.cycle_budget = cycle_budget;
  o.record_.commutator_finite = Tribool::unknown;
  const LazyBijection c = commutator_rule(o);
  for (SquareId i = 1; i <= probe_through; ++i) {
    if (std::holds_alternative<BudgetExceeded>(trace_cycle(c, i, cycle_budget))) {
      o.record_.budget_exceeded_at = i;
      break;
    }
  }
  return o;
}

Origami staircase_origami() {
  LazyBijection sigma(
      "staircase-sigma",
      [](SquareId i) {
        if (i <= 2) return i;
        switch (i % 3) {
          case 0: return i + 1;   // 3k -> 3k+1
          case 1: return i - 1;   // 3k+1 -> 3k
          default: return i;      // 3k+2 fixed
        }
      },
      [](SquareId i) {
        if (i <= 2) return i;
        switch (i % 3) {
          case 0: return i + 1;
          case 1: return i - 1;
          default: return i;
        }
      });
  LazyBijection tau(
      "staircase-tau",
      [](SquareId i) { return i % 3 == 0 ? i - 2 : i + 1; },
      [](SquareId i) { return i % 3 == 1 ? i + 2 : i - 1; });
  return make_origami_countable(std::move(sigma), std::move(tau), 50, 10'000,
                                "staircase");
}

SquareId commutator_step(const Origami& o, SquareId i) {
  return o.tau(o.sigma(o.tau_inv(o.sigma_inv(i))));
}

SquareId commutator_step_inv(const Origami& o, SquareId i) {
  return o.sigma(o.tau(o.sigma_inv(o.tau_inv(i))));
}

LazyBijection commutator_rule(const Origami& o) {
  // Copies of the shared rule handles keep the lambdas valid on their own.
  const LazyBijection s = o.sigma_rule();
  const LazyBijection t = o.tau_rule();
  return LazyBijection(
      "commutator",
      [s, t](SquareId i) {
        return t.apply(s.apply(t.apply_inv(s.apply_inv(i))));
      },
      [s, t](SquareId i) {
        return s.apply(t.apply(s.apply_inv(t.apply_inv(i))));
      });
}

Singularity canonical_singularity(std::vector<SquareId> cycle) {
  Singularity s;
  s.degree = static_cast<std::int64_t>(cycle.size());
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  s.cycle = std::move(cycle);
  return s;
}

std::variant<Singularity, BudgetExceeded> singularity_at(const Origami& o,
                                                         SquareId i,
                                                         std::int64_t budget) {
  CycleTrace t = trace_cycle(commutator_rule(o), i, budget);
  if (auto* b = std::get_if<BudgetExceeded>(&t)) return *b;
  return canonical_singularity(std::move(std::get<std::vector<SquareId>>(t)));
}

std::vector<Singularity> singularities(const Origami& o) {
  const SquareId n = o.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Singularity> out;
  for (SquareId i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    std::vector<SquareId> cyc;
    SquareId x = i;
    do {
      seen[x - 1] = true;
      cyc.push_back(x);
      x = commutator_step(o, x);
    } while (x != i);
    out.push_back(canonical_singularity(std::move(cyc)));
  }
  return out;
}

std::vector<std::int64_t> singularity_profile(const Origami& o) {
  std::vector<std::int64_t> degrees;
  for (const auto& s : singularities(o)) degrees.push_back(s.degree);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::int64_t euler_characteristic(const Origami& o) {
  // V - E + F with E = 2n and F = n.
  return static_cast<std::int64_t>(singularities(o).size()) - o.size();
}

std::int64_t genus(const Origami& o) {
  const std::int64_t chi = euler_characteristic(o);
  if ((2 - chi) % 2 != 0)
    throw OddParity("euler characteristic " + std::to_string(chi) +
                    " has odd defect; internal inconsistency");
  return (2 - chi) / 2;
}

Ball ball(const Origami& o, SquareId base, std::int64_t radius) {
  Ball b;
  b.base = base;
  b.radius = radius;
  b.squares.push_back(base);
  b.members.insert(base);
  std::deque<std::pair<SquareId, std::int64_t>> queue{{base, 0}};
  while (!queue.empty()) {
    const auto [x, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    for (SquareId y :
         {o.sigma(x), o.sigma_inv(x), o.tau(x), o.tau_inv(x)}) {
      if (b.members.insert(y).second) {
        b.squares.push_back(y);
        queue.emplace_back(y, d + 1);
      }
    }
  }
  return b;
}

}  // namespace origami
