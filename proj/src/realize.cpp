#include "origami/realize.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace origami {

std::optional<MarkerBase> as_marker_base(const Origami& o) {
  if (!o.is_finite()) return std::nullopt;
  const auto sings = singularities(o);
  std::optional<Singularity> marker;
  for (const auto& s : sings) {
    if (s.degree != 1) continue;
    if (marker) return std::nullopt;  // degree-1 vertex must be unique
    marker = s;
  }
  if (!marker) return std::nullopt;
  // One slot per τ-cycle: the fundamental loop around a τ-cycle multiplies
  // all voltages on it, so a second slot on the same cycle would enter the
  // cover's holonomy only as a product with the first instead of on its own.
  std::vector<SquareId> slots;
  std::set<SquareId> claimed;
  for (SquareId i = 1; i <= o.size(); ++i) {
    if (o.sigma(o.tau(i)) != o.tau(i)) continue;
    if (claimed.count(i)) continue;
    slots.push_back(i);
    for (SquareId j = o.tau(i); j != i; j = o.tau(j)) claimed.insert(j);
  }
  if (slots.empty()) return std::nullopt;
  if (automorphism_group(o).size() != 1) return std::nullopt;
  return MarkerBase{o, *marker, std::move(slots)};
}

bool is_marker_base(const Origami& o) { return as_marker_base(o).has_value(); }

namespace {

// Truncated staircase on 3m+1 squares; its loop slots are 1, 4, ..., 3m-2,
// one on each τ-cycle.
Origami staircase_candidate(std::int64_t m) {
  const SquareId n = 3 * m + 1;
  std::vector<std::vector<SquareId>> scycles, tcycles;
  for (std::int64_t k = 1; k <= m; ++k) scycles.push_back({3 * k, 3 * k + 1});
  for (std::int64_t k = 0; k < m; ++k)
    tcycles.push_back({3 * k + 1, 3 * k + 2, 3 * k + 3});
  return make_origami(FinitePerm::from_cycles(n, scycles),
                      FinitePerm::from_cycles(n, tcycles));
}

}  // namespace

MarkerBase find_marker_base(SquareId max_squares, std::int64_t min_slots) {
  for (SquareId n = 2; n <= max_squares; ++n) {
    if (n >= 4 && n % 3 == 1) {
      auto mb = as_marker_base(staircase_candidate((n - 1) / 3));
      if (mb && static_cast<std::int64_t>(mb->loop_slots.size()) >= min_slots)
        return std::move(*mb);
    }
    if (n > 5) continue;
    std::vector<SquareId> simg(static_cast<std::size_t>(n));
    std::iota(simg.begin(), simg.end(), 1);
    do {
      std::vector<SquareId> timg(static_cast<std::size_t>(n));
      std::iota(timg.begin(), timg.end(), 1);
      do {
        try {
          auto mb = as_marker_base(
              make_origami(FinitePerm(simg), FinitePerm(timg)));
          if (mb &&
              static_cast<std::int64_t>(mb->loop_slots.size()) >= min_slots)
            return std::move(*mb);
        } catch (const NotConnected&) {
        }
      } while (std::next_permutation(timg.begin(), timg.end()));
    } while (std::next_permutation(simg.begin(), simg.end()));
  }
  throw MarkerNotFound("no marker base with at most " +
                       std::to_string(max_squares) + " squares and " +
                       std::to_string(min_slots) + " loop slots");
}

FiniteRealization realize_finite(const Group& g, std::int64_t closure_cap,
                                 std::int64_t retry_budget) {
  if (g.kind() != GroupKind::finite_perm)
    throw Error("realize_finite needs a finite permutation group");
  const auto closure = g.closure(closure_cap);
  if (!closure)
    throw CapExceeded(closure_cap, "group closure exceeded the cap of " +
                                       std::to_string(closure_cap));
  const auto& gens = g.generators();
  const auto k = static_cast<std::int64_t>(gens.size());

  std::string last_mismatch;
  SquareId last_size = 0;
  for (std::int64_t attempt = 0; attempt < retry_budget; ++attempt) {
    // Asking for more slots on each retry forces a strictly larger base.
    std::int64_t want_slots = k + attempt;
    MarkerBase base = find_marker_base(3 * (want_slots + 2) + 20, want_slots);
    while (base.origami.size() <= last_size) {
      ++want_slots;
      base = find_marker_base(3 * (want_slots + 2) + 20, want_slots);
    }
    last_size = base.origami.size();

    VoltageAssignment va(g);
    for (std::int64_t j = 0; j < k; ++j)
      va.set_v(base.loop_slots[static_cast<std::size_t>(j)], gens[j]);

    CoverOrigami cover = [&] {
      try {
        return build_cover(base.origami, va, closure_cap);
      } catch (const NotFlat& e) {
        throw FlatnessFailed(
            std::string("the loop-slot scheme must be flat; this failure "
                        "indicates a bug: ") +
            e.what());
      }
    }();
    std::optional<Origami> maybe_cover_o;
    try {
      maybe_cover_o = cover.as_origami();
    } catch (const NotConnectedCover&) {
      // The voltages did not reach the whole group; try a larger base.
      last_mismatch = "cover was disconnected";
      continue;
    }
    const Origami& cover_o = *maybe_cover_o;

    std::vector<FinitePerm> aut = automorphism_group(cover_o);
    std::vector<FinitePerm> deck;
    deck.reserve(closure->size());
    for (const GroupElem& h : *closure) deck.push_back(deck_perm(cover, h));
    std::sort(deck.begin(), deck.end());

    if (aut == deck) {
      ExactCertificate cert;
      cert.aut = std::move(aut);
      cert.deck = std::move(deck);
      cert.set_equal = true;
      cert.retries = attempt;
      cert.base_squares = base.origami.size();
      cert.cover_squares = cover_o.size();
      return FiniteRealization{std::move(cover), std::move(base),
                               std::move(cert)};
    }

    // Name one side's extra element so the mismatch is inspectable.
    for (const FinitePerm& p : aut)
      if (!std::binary_search(deck.begin(), deck.end(), p)) {
        last_mismatch = "automorphism " + cycles_to_string(cycle_decomposition(p)) +
                        " is not a deck transformation";
        break;
      }
    if (last_mismatch.empty())
      for (const FinitePerm& p : deck)
        if (!std::binary_search(aut.begin(), aut.end(), p)) {
          last_mismatch = "deck transformation " +
                          cycles_to_string(cycle_decomposition(p)) +
                          " was not found as an automorphism";
          break;
        }
  }
  throw CertificateFailed(
      "automorphism group and deck action never became set-equal within " +
      std::to_string(retry_budget) + " marker bases; last mismatch: " +
      (last_mismatch.empty() ? std::string("none recorded") : last_mismatch));
}

CountableRealization realize_countable(const Group& g, std::int64_t radius,
                                       std::int64_t vertex_budget,
                                       std::int64_t seed_ball_radius) {
  const auto& gens = g.generators();
  const auto k = static_cast<std::int64_t>(gens.size());
  if (g.generates(gens) != Tribool::yes)
    throw NotGenerating(
        "the group's generator list is not certified to generate it");

  const Origami base = staircase_origami();
  VoltageAssignment va(g);
  for (std::int64_t j = 0; j < k; ++j) va.set_v(3 * j + 1, gens[j]);

  CoverOrigami cover = [&] {
    try {
      return build_cover(base, va);
    } catch (const NotFlat& e) {
      throw FlatnessFailed(
          std::string("the loop-slot scheme must be flat; this failure "
                      "indicates a bug: ") +
          e.what());
    }
  }();

  // Flatness on every corner cycle meeting squares 1..N, whole cycles kept
  // inside the region so check_flat accepts it.
  const SquareId region_to = std::max<SquareId>(3 * k + 3, vertex_budget);
  std::set<SquareId> region_set;
  for (SquareId q = 1; q <= region_to; ++q) {
    const auto sing = singularity_at(base, q);
    if (std::holds_alternative<BudgetExceeded>(sing))
      throw FlatnessFailed("corner cycle at square " + std::to_string(q) +
                           " of the staircase did not close");
    for (SquareId s : std::get<Singularity>(sing).cycle) region_set.insert(s);
  }
  const FlatReport flat = check_flat(
      base, va, std::vector<SquareId>(region_set.begin(), region_set.end()));
  if (!flat.flat)
    throw FlatnessFailed(
        "the loop-slot scheme failed its flatness re-check at the corner "
        "cycle starting at square " +
        std::to_string(flat.offending->vertex.cycle.front()));

  const ConnectivityReport conn = check_cover_connected(cover);
  if (conn.verdict != ConnVerdict::connected)
    throw NotGenerating("cover connectivity not certified: " + conn.detail);

  const Origami cover_o = cover.as_origami();
  const SquareId base_copy = cover.index_of(1, g.identity());

  BoundedCertificate cert;
  cert.radius = radius;
  cert.flat_vertices_checked = flat.vertices_checked;
  cert.seed_ball_radius = seed_ball_radius;

  const Ball seed_ball = ball(cover_o, base_copy, seed_ball_radius);
  cert.seeds_examined = static_cast<std::int64_t>(seed_ball.squares.size());
  const auto verdicts =
      bounded_aut_search(cover_o, base_copy, radius, seed_ball.squares);
  for (const SeedVerdict& sv : verdicts) {
    if (const Refutation* r = std::get_if<Refutation>(&sv.verdict)) {
      ++cert.refuted_seeds;
      cert.max_refutation_depth = std::max(cert.max_refutation_depth, r->depth);
      continue;
    }
    // A surviving seed must be the deck translate of the base copy.
    const auto [i, h] = cover.square_of(sv.seed);
    if (i != 1)
      throw CertificateFailed(
          "seed " + std::to_string(sv.seed) + " over base square " +
          std::to_string(i) + " survived to radius " + std::to_string(radius));
    const LazyBijection deck = deck_map(cover, h);
    const TranslationMap& map =
        std::holds_alternative<TotalMap>(sv.verdict)
            ? std::get<TotalMap>(sv.verdict).map
            : std::get<CertifiedMap>(sv.verdict).map;
    for (const auto& [from, to] : map.table)
      if (deck.apply(from) != to)
        throw CertificateFailed(
            "seed " + std::to_string(sv.seed) +
            " survived but deviates from the deck action of " + h.display() +
            " at cover square " + std::to_string(from));
  }

  const Ball deck_ball = ball(cover_o, base_copy, radius);
  for (const GroupElem& gen : gens) {
    std::string conflict;
    if (!verify_translation(cover_o, deck_map(cover, gen), deck_ball.squares,
                            &conflict))
      throw CertificateFailed("deck map of generator " + gen.display() +
                              " failed to commute with the gluings: " +
                              conflict);
    ++cert.verified_deck_elems;
  }

  return CountableRealization{std::move(cover), cert};
}

MonsterReport monster_heuristics(const Origami& o,
                                 const std::vector<std::int64_t>& radii,
                                 std::int64_t cycle_budget) {
  MonsterReport report;
  report.disclaimer =
      "counts are finite-window evidence only; the number of ends is not "
      "computed";
  for (std::int64_t r : radii) {
    const Ball b = ball(o, 1, r);
    std::set<SquareId> counted;
    std::int64_t count = 0;
    for (SquareId q : b.squares) {
      const auto sing = singularity_at(o, q, cycle_budget);
      if (std::holds_alternative<BudgetExceeded>(sing)) continue;
      const Singularity& s = std::get<Singularity>(sing);
      if (s.degree < 2) continue;
      bool inside = true;
      for (SquareId x : s.cycle)
        if (!b.contains(x)) inside = false;
      if (!inside) continue;
      if (counted.insert(s.cycle.front()).second) ++count;
    }
    report.radii.push_back(r);
    report.counts.push_back(count);
  }
  return report;
}

}  // namespace origami
