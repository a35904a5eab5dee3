#include "origami/perm.hpp"

#include <cassert>
#include <sstream>

namespace origami {

FinitePerm::FinitePerm(std::vector<SquareId> images) : fwd_(std::move(images)) {
  const SquareId n = static_cast<SquareId>(fwd_.size());
  if (n == 0) throw Error("permutation on an empty square set");
  inv_.assign(fwd_.size(), 0);
  for (SquareId i = 1; i <= n; ++i) {
    const SquareId j = fwd_[i - 1];
    if (j < 1 || j > n)
      throw Error("image " + std::to_string(j) + " of " + std::to_string(i) +
                  " is outside 1.." + std::to_string(n));
    if (inv_[j - 1] != 0)
      throw Error("value " + std::to_string(j) + " appears twice; not a bijection");
    inv_[j - 1] = i;
  }
}

FinitePerm FinitePerm::identity(SquareId n) {
  std::vector<SquareId> im(static_cast<std::size_t>(n));
  for (SquareId i = 1; i <= n; ++i) im[i - 1] = i;
  return FinitePerm(std::move(im));
}

FinitePerm FinitePerm::from_cycles(
    SquareId n, const std::vector<std::vector<SquareId>>& cycles) {
  std::vector<SquareId> im(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (SquareId i = 1; i <= n; ++i) im[i - 1] = i;
  for (const auto& c : cycles) {
    for (SquareId x : c) {
      if (x < 1 || x > n)
        throw Error("cycle entry " + std::to_string(x) + " is outside 1.." +
                    std::to_string(n));
      if (seen[x - 1])
        throw Error("index " + std::to_string(x) + " repeated in cycle notation");
      seen[x - 1] = true;
    }
    for (std::size_t k = 0; k + 1 < c.size(); ++k) im[c[k] - 1] = c[k + 1];
    if (c.size() > 1) im[c.back() - 1] = c.front();
  }
  return FinitePerm(std::move(im));
}

SquareId FinitePerm::apply(SquareId i) const {
  if (i < 1 || i > size())
    throw Error("apply: square " + std::to_string(i) + " outside 1.." +
                std::to_string(size()));
  return fwd_[i - 1];
}

SquareId FinitePerm::apply_inv(SquareId i) const {
  if (i < 1 || i > size())
    throw Error("apply_inv: square " + std::to_string(i) + " outside 1.." +
                std::to_string(size()));
  return inv_[i - 1];
}

std::vector<std::vector<SquareId>> cycle_decomposition(const FinitePerm& p) {
  const SquareId n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<SquareId>> out;
  // Scanning starts in increasing order, so each cycle is met at its minimal
  // element and cycles come out sorted by minimal element.
  for (SquareId i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    std::vector<SquareId> cyc;
    SquareId x = i;
    do {
      seen[x - 1] = true;
      cyc.push_back(x);
      x = p.apply(x);
    } while (x != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

FinitePerm compose(const FinitePerm& g, const FinitePerm& h) {
  if (g.size() != h.size())
    throw DomainMismatch("compose: permutations act on 1.." +
                         std::to_string(g.size()) + " and 1.." +
                         std::to_string(h.size()));
  std::vector<SquareId> im(static_cast<std::size_t>(g.size()));
  for (SquareId i = 1; i <= g.size(); ++i) im[i - 1] = g.apply(h.apply(i));
  return FinitePerm(std::move(im));
}

FinitePerm inverse(const FinitePerm& p) {
  std::vector<SquareId> im(static_cast<std::size_t>(p.size()));
  for (SquareId i = 1; i <= p.size(); ++i) im[i - 1] = p.apply_inv(i);
  return FinitePerm(std::move(im));
}

std::string cycles_to_string(const std::vector<std::vector<SquareId>>& cycles) {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ',';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

LazyBijection::LazyBijection(std::string name, Rule forward, Rule backward)
    : name_(std::move(name)), fwd_(std::move(forward)), bwd_(std::move(backward)) {
  if (!fwd_ || !bwd_) throw Error("lazy bijection needs both rules");
}

SquareId LazyBijection::apply(SquareId i) const {
  const SquareId j = fwd_(i);
#ifndef NDEBUG
  assert(bwd_(j) == i && "backward rule does not invert forward rule");
#endif
  return j;
}

SquareId LazyBijection::apply_inv(SquareId i) const {
  const SquareId j = bwd_(i);
#ifndef NDEBUG
  assert(fwd_(j) == i && "forward rule does not invert backward rule");
#endif
  return j;
}

LazyBijection LazyBijection::from_perm(const FinitePerm& p) {
  return LazyBijection(
      "perm[" + std::to_string(p.size()) + "]",
      [p](SquareId i) { return i <= p.size() ? p.apply(i) : i; },
      [p](SquareId i) { return i <= p.size() ? p.apply_inv(i) : i; });
}

CycleTrace trace_cycle(const LazyBijection& b, SquareId start,
                       std::int64_t budget) {
  std::vector<SquareId> cyc{start};
  SquareId x = start;
  for (std::int64_t step = 1; step <= budget; ++step) {
    x = b.apply(x);
    if (x == start) return cyc;
    cyc.push_back(x);
  }
  return BudgetExceeded{budget};
}

}  // namespace origami
