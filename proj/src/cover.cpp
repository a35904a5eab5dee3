#include "origami/cover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace origami {

VoltageAssignment::VoltageAssignment(Group g) : group_(std::move(g)) {}

void VoltageAssignment::check_elem(const GroupElem& g) const {
  if (g.kind() != group_.kind())
    throw MixedGroupKinds(std::string("voltage of kind ") + to_string(g.kind()) +
                          " assigned under a " + to_string(group_.kind()) +
                          " group");
  switch (group_.kind()) {
    case GroupKind::finite_perm:
      if (static_cast<std::int64_t>(g.perm().size()) != group_.rank())
        throw MixedGroupKinds("voltage permutation degree mismatch");
      break;
    case GroupKind::free_abelian:
      if (static_cast<std::int64_t>(g.vec().size()) != group_.rank())
        throw MixedGroupKinds("voltage vector rank mismatch");
      break;
    default:
      for (std::int32_t l : g.word())
        if ((l > 0 ? l : -l) > group_.rank())
          throw MixedGroupKinds("voltage word uses a letter beyond the rank");
      break;
  }
}

void VoltageAssignment::set_h(SquareId i, const GroupElem& g) {
  check_elem(g);
  if (g.is_identity())
    h_.erase(i);
  else
    h_.insert_or_assign(i, g);
}

void VoltageAssignment::set_v(SquareId i, const GroupElem& g) {
  check_elem(g);
  if (g.is_identity())
    v_.erase(i);
  else
    v_.insert_or_assign(i, g);
}

GroupElem VoltageAssignment::h(SquareId i) const {
  const auto it = h_.find(i);
  return it != h_.end() ? it->second : group_.identity();
}

GroupElem VoltageAssignment::v(SquareId i) const {
  const auto it = v_.find(i);
  return it != v_.end() ? it->second : group_.identity();
}

GroupElem vertex_voltage_word(const Origami& o, const VoltageAssignment& va,
                              const Singularity& s) {
  GroupElem w = va.group().identity();
  for (SquareId p : s.cycle) {
    const SquareId left = o.sigma_inv(p);
    const SquareId below = o.tau_inv(left);
    w = multiply(w, invert(va.h(left)));
    w = multiply(w, invert(va.v(below)));
    w = multiply(w, va.h(below));
    w = multiply(w, va.v(o.sigma(below)));
  }
  return w;
}

namespace {

// Cycle points whose vertex word mentions the voltage on square s: the word
// at point p reads the h voltages at sigma^-1(p) and tau^-1(sigma^-1(p)) and
// the v voltages at tau^-1(sigma^-1(p)) and sigma(tau^-1(sigma^-1(p))).
std::vector<SquareId> affected_points(const Origami& o, SquareId s,
                                      bool horizontal) {
  if (horizontal) return {o.sigma(s), o.sigma(o.tau(s))};
  return {o.sigma(o.tau(s)), o.sigma(o.tau(o.sigma_inv(s)))};
}

}  // namespace

FlatReport check_flat(const Origami& o, const VoltageAssignment& va,
                      const Region& region, std::int64_t cycle_budget) {
  std::vector<SquareId> squares;
  if (std::holds_alternative<RegionAll>(region)) {
    if (!o.is_finite())
      throw RegionTooSmall(
          "a countable origami needs an explicit region, not the whole "
          "square set");
    for (SquareId i = 1; i <= o.size(); ++i) squares.push_back(i);
  } else if (const Ball* b = std::get_if<Ball>(&region)) {
    squares = b->squares;
  } else {
    squares = std::get<std::vector<SquareId>>(region);
  }
  std::unordered_set<SquareId> in_region(squares.begin(), squares.end());
  const bool all = std::holds_alternative<RegionAll>(region);

  // Every corner the support can touch must be certified, so its whole
  // commutator cycle has to sit inside the region.
  const auto require_covered = [&](SquareId s, bool horizontal) {
    for (SquareId p : affected_points(o, s, horizontal)) {
      if (!all && !in_region.count(p))
        throw RegionTooSmall("corner at square " + std::to_string(p) +
                             " is touched by the voltage support but lies "
                             "outside the region");
      auto sing = singularity_at(o, p, cycle_budget);
      if (std::holds_alternative<BudgetExceeded>(sing))
        throw RegionTooSmall("commutator cycle at square " + std::to_string(p) +
                             " outran the cycle budget");
      if (!all)
        for (SquareId q : std::get<Singularity>(sing).cycle)
          if (!in_region.count(q))
            throw RegionTooSmall("commutator cycle through square " +
                                 std::to_string(p) + " leaves the region at " +
                                 std::to_string(q));
    }
  };
  for (const auto& [s, g] : va.h_support()) require_covered(s, true);
  for (const auto& [s, g] : va.v_support()) require_covered(s, false);

  FlatReport report;
  report.flat = true;
  std::set<SquareId> cycle_keys;  // minimal element identifies a cycle
  for (SquareId q : squares) {
    auto sing = singularity_at(o, q, cycle_budget);
    if (std::holds_alternative<BudgetExceeded>(sing))
      throw RegionTooSmall("commutator cycle at square " + std::to_string(q) +
                           " outran the cycle budget");
    Singularity vertex = std::move(std::get<Singularity>(sing));
    if (!cycle_keys.insert(vertex.cycle.front()).second) continue;
    GroupElem w = vertex_voltage_word(o, va, vertex);
    const bool id = w.is_identity();
    report.words.push_back({std::move(vertex), std::move(w)});
    if (!id) {
      report.flat = false;
      if (!report.offending) report.offending = report.words.back();
    }
  }
  report.vertices_checked = static_cast<std::int64_t>(cycle_keys.size());
  std::sort(report.words.begin(), report.words.end(),
            [](const VertexWord& a, const VertexWord& b) {
              return a.vertex.cycle.front() < b.vertex.cycle.front();
            });
  return report;
}

// ---------------------------------------------------------------------------
// Stable fiber indexing.

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("fiber index overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("fiber index overflow");
  return r;
}

// Z -> N0 with 0, 1, -1, 2, -2, ... mapping to 0, 2, 1, 4, 3, ...
std::int64_t zigzag(std::int64_t x) {
  return x > 0 ? checked_mul(2, x)
               : checked_add(checked_mul(-2, x), x < 0 ? -1 : 0);
}

std::int64_t unzigzag(std::int64_t u) {
  return u % 2 == 0 ? u / 2 : -(u + 1) / 2;
}

unsigned __int128 triangular(std::int64_t s) {
  return static_cast<unsigned __int128>(s) *
         static_cast<unsigned __int128>(s + 1) / 2;
}

// N0 x N0 -> N0, the classic diagonal pairing.
std::int64_t cantor_pair(std::int64_t a, std::int64_t b) {
  const std::int64_t s = checked_add(a, b);
  const unsigned __int128 t = triangular(s);
  if (t > static_cast<unsigned __int128>(INT64_MAX - b))
    throw Error("fiber index overflow");
  return static_cast<std::int64_t>(t) + b;
}

std::pair<std::int64_t, std::int64_t> cantor_unpair(std::int64_t z) {
  // Largest s with s(s+1)/2 <= z, seeded by a float guess and corrected.
  std::int64_t s = static_cast<std::int64_t>(
      (std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  if (s < 0) s = 0;
  while (s > 0 && triangular(s) > static_cast<unsigned __int128>(z)) --s;
  while (triangular(s + 1) <= static_cast<unsigned __int128>(z)) ++s;
  const std::int64_t b = z - static_cast<std::int64_t>(triangular(s));
  return {s - b, b};
}

std::int64_t vec_index(const std::vector<std::int64_t>& v) {
  std::int64_t idx = zigzag(v[0]);
  for (std::size_t j = 1; j < v.size(); ++j)
    idx = cantor_pair(idx, zigzag(v[j]));
  return idx;
}

std::vector<std::int64_t> vec_unindex(std::int64_t idx, std::int64_t rank) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank));
  for (std::size_t j = static_cast<std::size_t>(rank); j-- > 1;) {
    const auto [a, b] = cantor_unpair(idx);
    v[j] = unzigzag(b);
    idx = a;
  }
  v[0] = unzigzag(idx);
  return v;
}

// Reduced words ranked by length, then by letters in the fixed order
// a, a^-1, b, b^-1, ...; after the first letter the inverse of the previous
// one is excluded, leaving 2r - 1 choices per position.
std::int64_t letter_pos(std::int32_t l) {
  const std::int64_t j = l > 0 ? l : -l;
  return 2 * (j - 1) + (l < 0 ? 1 : 0);
}

std::int32_t letter_at(std::int64_t pos) {
  const std::int32_t j = static_cast<std::int32_t>(pos / 2) + 1;
  return pos % 2 == 0 ? j : -j;
}

std::int64_t word_index(const std::vector<std::int32_t>& w, std::int64_t rank) {
  if (w.empty()) return 0;
  const std::int64_t a = 2 * rank;      // first-letter alphabet
  const std::int64_t b = 2 * rank - 1;  // alphabet after the first letter
  std::int64_t offset = 1;              // the empty word
  std::int64_t count = a;               // words of the current length
  for (std::size_t len = 1; len < w.size(); ++len) {
    offset = checked_add(offset, count);
    count = checked_mul(count, b);
  }
  std::int64_t r = letter_pos(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::int64_t banned = letter_pos(-w[i - 1]);
    std::int64_t d = letter_pos(w[i]);
    if (d > banned) --d;
    r = checked_add(checked_mul(r, b), d);
  }
  return checked_add(offset, r);
}

std::vector<std::int32_t> word_unindex(std::int64_t idx, std::int64_t rank) {
  if (idx == 0) return {};
  const std::int64_t a = 2 * rank;
  const std::int64_t b = 2 * rank - 1;
  std::int64_t offset = 1;
  std::int64_t count = a;
  std::int64_t len = 1;
  while (idx >= checked_add(offset, count)) {
    offset = checked_add(offset, count);
    count = checked_mul(count, b);
    ++len;
  }
  std::int64_t r = idx - offset;
  std::vector<std::int64_t> digits(static_cast<std::size_t>(len));
  for (std::size_t i = static_cast<std::size_t>(len); i-- > 1;) {
    digits[i] = r % b;
    r /= b;
  }
  digits[0] = r;
  std::vector<std::int32_t> w(static_cast<std::size_t>(len));
  w[0] = letter_at(digits[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::int64_t banned = letter_pos(-w[i - 1]);
    std::int64_t d = digits[i];
    if (d >= banned) ++d;
    w[i] = letter_at(d);
  }
  return w;
}

}  // namespace

struct CoverOrigami::Impl {
  Origami base;
  VoltageAssignment volt;
  std::optional<std::vector<GroupElem>> closure;  // sorted; finite_perm kind

  std::int64_t group_index(const GroupElem& g) const {
    if (closure) {
      const auto it = std::lower_bound(closure->begin(), closure->end(), g);
      if (it == closure->end() || !(*it == g))
        throw Error("group element " + g.display() + " is outside the group");
      return it - closure->begin();
    }
    if (g.kind() == GroupKind::free_abelian) return vec_index(g.vec());
    return word_index(g.word(), volt.group().rank());
  }

  GroupElem group_unindex(std::int64_t idx) const {
    if (closure) return (*closure)[static_cast<std::size_t>(idx)];
    if (volt.group().kind() == GroupKind::free_abelian)
      return GroupElem::vec_elem(vec_unindex(idx, volt.group().rank()));
    return GroupElem::word_elem(word_unindex(idx, volt.group().rank()));
  }

  SquareId index_of(SquareId i, const GroupElem& g) const {
    const std::int64_t gi = group_index(g);
    if (base.is_finite()) return checked_add(checked_mul(gi, base.size()), i);
    if (closure)
      return checked_add(
          checked_mul(i - 1, static_cast<std::int64_t>(closure->size())),
          gi + 1);
    return checked_add(cantor_pair(i - 1, gi), 1);
  }

  Square square_of(SquareId id) const {
    if (id < 1) throw Error("cover square ids start at 1");
    if (base.is_finite()) {
      const SquareId n = base.size();
      const std::int64_t gi = (id - 1) / n;
      const SquareId i = (id - 1) % n + 1;
      if (closure && gi >= static_cast<std::int64_t>(closure->size()))
        throw Error("cover square id " + std::to_string(id) + " out of range");
      return {i, group_unindex(gi)};
    }
    if (closure) {
      const auto m = static_cast<std::int64_t>(closure->size());
      return {(id - 1) / m + 1, group_unindex((id - 1) % m)};
    }
    const auto [a, b] = cantor_unpair(id - 1);
    return {a + 1, group_unindex(b)};
  }

  Square sigma(const Square& s) const {
    return {base.sigma(s.first), multiply(s.second, volt.h(s.first))};
  }
  Square sigma_inv(const Square& s) const {
    const SquareId j = base.sigma_inv(s.first);
    return {j, multiply(s.second, invert(volt.h(j)))};
  }
  Square tau(const Square& s) const {
    return {base.tau(s.first), multiply(s.second, volt.v(s.first))};
  }
  Square tau_inv(const Square& s) const {
    const SquareId j = base.tau_inv(s.first);
    return {j, multiply(s.second, invert(volt.v(j)))};
  }

  bool is_finite() const { return base.is_finite() && closure.has_value(); }

  // Image tables of a finite cover over the paired ids.
  std::pair<std::vector<SquareId>, std::vector<SquareId>> tables() const {
    const SquareId n =
        checked_mul(base.size(), static_cast<std::int64_t>(closure->size()));
    std::vector<SquareId> si(static_cast<std::size_t>(n)),
        ti(static_cast<std::size_t>(n));
    for (SquareId id = 1; id <= n; ++id) {
      const Square sq = square_of(id);
      const Square r = sigma(sq), u = tau(sq);
      si[id - 1] = index_of(r.first, r.second);
      ti[id - 1] = index_of(u.first, u.second);
    }
    return {std::move(si), std::move(ti)};
  }
};

const Origami& CoverOrigami::base() const { return impl_->base; }
const VoltageAssignment& CoverOrigami::voltages() const { return impl_->volt; }
bool CoverOrigami::is_finite() const { return impl_->is_finite(); }

std::int64_t CoverOrigami::group_order() const {
  if (!impl_->closure) throw Error("group_order() of a non-enumerated group");
  return static_cast<std::int64_t>(impl_->closure->size());
}

const std::vector<GroupElem>& CoverOrigami::closure() const {
  if (!impl_->closure) throw Error("closure() of a non-enumerated group");
  return *impl_->closure;
}

CoverOrigami::Square CoverOrigami::sigma(const Square& s) const {
  return impl_->sigma(s);
}
CoverOrigami::Square CoverOrigami::sigma_inv(const Square& s) const {
  return impl_->sigma_inv(s);
}
CoverOrigami::Square CoverOrigami::tau(const Square& s) const {
  return impl_->tau(s);
}
CoverOrigami::Square CoverOrigami::tau_inv(const Square& s) const {
  return impl_->tau_inv(s);
}

SquareId CoverOrigami::index_of(SquareId i, const GroupElem& g) const {
  return impl_->index_of(i, g);
}

CoverOrigami::Square CoverOrigami::square_of(SquareId id) const {
  return impl_->square_of(id);
}

Origami CoverOrigami::as_origami() const {
  if (impl_->is_finite()) {
    auto [si, ti] = impl_->tables();
    try {
      return make_origami(FinitePerm(std::move(si)), FinitePerm(std::move(ti)));
    } catch (const NotConnected& e) {
      throw NotConnectedCover(e.witness(),
                              std::string("cover is disconnected: ") + e.what());
    }
  }
  auto impl = impl_;
  LazyBijection s(
      "cover-sigma",
      [impl](SquareId id) {
        const auto sq = impl->sigma(impl->square_of(id));
        return impl->index_of(sq.first, sq.second);
      },
      [impl](SquareId id) {
        const auto sq = impl->sigma_inv(impl->square_of(id));
        return impl->index_of(sq.first, sq.second);
      });
  LazyBijection t(
      "cover-tau",
      [impl](SquareId id) {
        const auto sq = impl->tau(impl->square_of(id));
        return impl->index_of(sq.first, sq.second);
      },
      [impl](SquareId id) {
        const auto sq = impl->tau_inv(impl->square_of(id));
        return impl->index_of(sq.first, sq.second);
      });
  return make_origami_countable(std::move(s), std::move(t), 20, 10'000, "cover");
}

std::vector<std::int64_t> CoverOrigami::profile() const {
  if (!impl_->is_finite()) throw Error("profile() of an infinite cover");
  auto [si, ti] = impl_->tables();
  const FinitePerm s{std::move(si)}, t{std::move(ti)};
  const FinitePerm c = compose(t, compose(s, compose(inverse(t), inverse(s))));
  std::vector<std::int64_t> degrees;
  for (const auto& cyc : cycle_decomposition(c))
    degrees.push_back(static_cast<std::int64_t>(cyc.size()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::int64_t CoverOrigami::euler_characteristic() const {
  const auto p = profile();
  std::int64_t n = 0;
  for (std::int64_t d : p) n += d;
  return static_cast<std::int64_t>(p.size()) - n;
}

CoverOrigami build_cover(const Origami& o, const VoltageAssignment& va,
                         std::int64_t closure_cap, std::int64_t cycle_budget) {
  auto impl = std::make_shared<CoverOrigami::Impl>(
      CoverOrigami::Impl{o, va, std::nullopt});
  if (va.group().kind() == GroupKind::finite_perm) {
    auto closure = va.group().closure(closure_cap);
    if (!closure)
      throw CapExceeded(closure_cap, "group closure exceeded the cap of " +
                                         std::to_string(closure_cap));
    impl->closure = std::move(closure);
    // Each voltage must actually lie in the group, not merely share its degree.
    for (const auto& [s, g] : va.h_support()) (void)impl->group_index(g);
    for (const auto& [s, g] : va.v_support()) (void)impl->group_index(g);
  }

  // Certify flatness; a nontrivial vertex word would make the cover branch.
  Region region = RegionAll{};
  if (!o.is_finite()) {
    std::unordered_set<SquareId> wanted;
    for (const auto& [s, g] : va.h_support()) wanted.insert(s);
    for (const auto& [s, g] : va.v_support()) wanted.insert(s);
    std::int64_t reach = 0;
    if (!wanted.empty()) {
      // Distance from square 1 to the farthest support square.
      std::unordered_set<SquareId> seen{1};
      std::deque<std::pair<SquareId, std::int64_t>> queue{{1, 0}};
      std::size_t hit = wanted.count(1) ? 1 : 0;
      while (!queue.empty() && hit < wanted.size()) {
        const auto [x, d] = queue.front();
        queue.pop_front();
        for (SquareId y : {o.sigma(x), o.sigma_inv(x), o.tau(x), o.tau_inv(x)}) {
          if (!seen.insert(y).second) continue;
          if (wanted.count(y)) {
            ++hit;
            reach = std::max(reach, d + 1);
          }
          queue.emplace_back(y, d + 1);
        }
        if (seen.size() > 1'000'000)
          throw RegionTooSmall(
              "voltage support not reachable from square 1 within the probe");
      }
      if (hit < wanted.size())
        throw RegionTooSmall(
            "voltage support not reachable from square 1 within the probe");
    }
    region = ball(o, 1, reach + 3);
  }
  FlatReport flat = check_flat(o, va, region, cycle_budget);
  if (!flat.flat) {
    const auto& off = *flat.offending;
    throw NotFlat("vertex word " + off.word.display() +
                  " at the corner cycle starting at square " +
                  std::to_string(off.vertex.cycle.front()) +
                  " is not the identity; the cover would branch there");
  }
  return CoverOrigami(std::move(impl));
}

LazyBijection deck_map(const CoverOrigami& c, const GroupElem& h) {
  auto impl = c.impl_;
  if (h.kind() != impl->volt.group().kind())
    throw MixedGroupKinds("deck element kind does not match the cover's group");
  (void)impl->group_index(h);  // membership / rank validation
  const GroupElem hinv = invert(h);
  return LazyBijection(
      "deck:" + h.key(),
      [impl, h](SquareId id) {
        const auto sq = impl->square_of(id);
        return impl->index_of(sq.first, multiply(h, sq.second));
      },
      [impl, hinv](SquareId id) {
        const auto sq = impl->square_of(id);
        return impl->index_of(sq.first, multiply(hinv, sq.second));
      });
}

FinitePerm deck_perm(const CoverOrigami& c, const GroupElem& h) {
  if (!c.is_finite()) throw Error("deck_perm() needs a finite cover");
  const LazyBijection rule = deck_map(c, h);
  const SquareId n = c.base().size() * c.group_order();
  std::vector<SquareId> im(static_cast<std::size_t>(n));
  for (SquareId id = 1; id <= n; ++id) im[id - 1] = rule.apply(id);
  return FinitePerm(std::move(im));
}

namespace {

// Holonomy generators of a cover of a finite base, read off the fundamental
// cycles of a spanning tree: gamma = at(u) * voltage(u -> v) * at(v)^-1 for
// every non-tree gluing, where at(x) is the voltage along the tree path to x.
std::vector<GroupElem> fundamental_holonomy(const Origami& base,
                                            const VoltageAssignment& va) {
  const SquareId n = base.size();
  std::vector<GroupElem> at(static_cast<std::size_t>(n + 1),
                            va.group().identity());
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  // Tree gluings as (square, 0) for its right edge, (square, 1) for its top.
  std::set<std::pair<SquareId, int>> tree;
  std::deque<SquareId> queue{1};
  seen[1] = true;
  while (!queue.empty()) {
    const SquareId x = queue.front();
    queue.pop_front();
    const auto visit = [&](SquareId y, const GroupElem& volt, SquareId edge_sq,
                           int dir) {
      if (seen[static_cast<std::size_t>(y)]) return;
      seen[static_cast<std::size_t>(y)] = true;
      at[static_cast<std::size_t>(y)] =
          multiply(at[static_cast<std::size_t>(x)], volt);
      tree.insert({edge_sq, dir});
      queue.push_back(y);
    };
    visit(base.sigma(x), va.h(x), x, 0);
    {
      const SquareId j = base.sigma_inv(x);
      visit(j, invert(va.h(j)), j, 0);
    }
    visit(base.tau(x), va.v(x), x, 1);
    {
      const SquareId j = base.tau_inv(x);
      visit(j, invert(va.v(j)), j, 1);
    }
  }
  std::set<GroupElem> gens;
  for (SquareId u = 1; u <= n; ++u) {
    if (!tree.count({u, 0})) {
      const GroupElem g =
          multiply(multiply(at[static_cast<std::size_t>(u)], va.h(u)),
                   invert(at[static_cast<std::size_t>(base.sigma(u))]));
      if (!g.is_identity()) gens.insert(g);
    }
    if (!tree.count({u, 1})) {
      const GroupElem g =
          multiply(multiply(at[static_cast<std::size_t>(u)], va.v(u)),
                   invert(at[static_cast<std::size_t>(base.tau(u))]));
      if (!g.is_identity()) gens.insert(g);
    }
  }
  return {gens.begin(), gens.end()};
}

ConnectivityReport verdict_from_generates(Tribool gen, const char* how) {
  ConnectivityReport report;
  switch (gen) {
    case Tribool::yes:
      report.verdict = ConnVerdict::connected;
      report.detail = std::string("the holonomy generators (") + how +
                      ") generate the whole group, so every fiber is reached";
      break;
    case Tribool::no:
      report.verdict = ConnVerdict::disconnected;
      report.detail = std::string("the holonomy subgroup (") + how +
                      ") is proper, so whole fibers stay unreached";
      break;
    default:
      report.verdict = ConnVerdict::unknown;
      report.detail = std::string("whether the holonomy generators (") + how +
                      ") generate the group is undecided";
      break;
  }
  return report;
}

}  // namespace

ConnectivityReport check_cover_connected(const CoverOrigami& c,
                                         std::int64_t budget) {
  ConnectivityReport report;
  const Origami& base = c.base();
  const VoltageAssignment& va = c.voltages();

  if (c.is_finite()) {
    const SquareId total = base.size() * c.group_order();
    std::unordered_set<SquareId> seen;
    std::deque<CoverOrigami::Square> queue;
    const CoverOrigami::Square start{1, va.group().identity()};
    seen.insert(c.index_of(start.first, start.second));
    queue.push_back(start);
    while (!queue.empty() && static_cast<std::int64_t>(seen.size()) < budget) {
      const CoverOrigami::Square x = queue.front();
      queue.pop_front();
      for (const CoverOrigami::Square& y :
           {c.sigma(x), c.sigma_inv(x), c.tau(x), c.tau_inv(x)})
        if (seen.insert(c.index_of(y.first, y.second)).second)
          queue.push_back(y);
    }
    report.explored = static_cast<std::int64_t>(seen.size());
    if (!queue.empty() && static_cast<std::int64_t>(seen.size()) >= budget) {
      report.verdict = ConnVerdict::unknown;
      report.detail = "exploration budget exhausted before the cover was swept";
      return report;
    }
    if (static_cast<std::int64_t>(seen.size()) == total) {
      report.verdict = ConnVerdict::connected;
      report.detail = "every cover square is reachable from the base copy";
      return report;
    }
    report.verdict = ConnVerdict::disconnected;
    for (SquareId id = 1; id <= total; ++id)
      if (!seen.count(id)) {
        report.witness = id;
        break;
      }
    report.detail = "cover square " + std::to_string(report.witness) +
                    " is unreachable from square (1, identity)";
    return report;
  }

  // A finite base gives exact holonomy generators via fundamental cycles.
  if (base.is_finite()) {
    report = verdict_from_generates(
        va.group().generates(fundamental_holonomy(base, va)),
        "fundamental cycles");
    report.explored = base.size();
    return report;
  }

  // Countable base: try to reach every support endpoint from square 1 using
  // only identity-voltage gluings.  When that works, every loop's holonomy is
  // a product of raw voltage values and each value is realized by some loop,
  // so the holonomy subgroup is generated exactly by the voltage values.
  std::vector<SquareId> endpoints;
  for (const auto& [s, g] : va.h_support()) {
    endpoints.push_back(s);
    endpoints.push_back(base.sigma(s));
  }
  for (const auto& [s, g] : va.v_support()) {
    endpoints.push_back(s);
    endpoints.push_back(base.tau(s));
  }

  std::unordered_set<SquareId> seen{1};
  std::deque<SquareId> queue{1};
  while (!queue.empty() && static_cast<std::int64_t>(seen.size()) < budget) {
    const SquareId x = queue.front();
    queue.pop_front();
    const auto push = [&](SquareId y) {
      if (seen.insert(y).second) queue.push_back(y);
    };
    if (va.h(x).is_identity()) push(base.sigma(x));
    {
      const SquareId j = base.sigma_inv(x);
      if (va.h(j).is_identity()) push(j);
    }
    if (va.v(x).is_identity()) push(base.tau(x));
    {
      const SquareId j = base.tau_inv(x);
      if (va.v(j).is_identity()) push(j);
    }
  }
  report.explored = static_cast<std::int64_t>(seen.size());

  bool spanned = true;
  for (SquareId e : endpoints)
    if (!seen.count(e)) spanned = false;

  if (spanned) {
    std::set<GroupElem> values;
    for (const auto& [s, g] : va.h_support()) values.insert(g);
    for (const auto& [s, g] : va.v_support()) values.insert(g);
    const std::int64_t explored = report.explored;
    report = verdict_from_generates(
        va.group().generates({values.begin(), values.end()}),
        "the voltage values");
    report.explored = explored;
    return report;
  }

  report.verdict = ConnVerdict::unknown;
  std::ostringstream os;
  os << "identity-voltage gluings did not reach every support endpoint within "
     << report.explored << " squares";
  report.detail = os.str();
  return report;
}

}  // namespace origami
