#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/aut.hpp"
#include "origami/cover.hpp"
#include "origami/group.hpp"
#include "origami/surface.hpp"

namespace origami {

// Finite base suitable for voltage realizations: connected, trivial
// automorphism group, exactly one degree-1 singularity (the marker), and at
// least one loop slot.  A loop slot is a square s whose top gluing closes a
// vertical loop edge: sigma(tau(s)) == tau(s), so a voltage placed on it
// cancels inside a single vertex word and never breaks flatness.
struct MarkerBase {
  Origami origami;
  Singularity marker;
  std::vector<SquareId> loop_slots;  // ascending
};

// Checks all MarkerBase invariants on a finite origami; nullopt when any
// fails.  Connectivity is already guaranteed by construction of the origami.
std::optional<MarkerBase> as_marker_base(const Origami& o);
bool is_marker_base(const Origami& o);

// Deterministic search for the smallest marker base with at least min_slots
// loop slots and at most max_squares squares.  For each size the truncated
// staircase pattern is tried first (sizes 3m+1: sigma swaps 3k with 3k+1,
// tau cycles (3k+1, 3k+2, 3k+3)), then sizes up to 5 fall back to exhaustive
// enumeration of all permutation pairs in lexicographic order.  Sizes start
// at 2 squares.  Throws MarkerNotFound when nothing qualifies.
MarkerBase find_marker_base(SquareId max_squares, std::int64_t min_slots = 1);

// Exact certificate: the cover's full automorphism group was computed
// independently and set-equals the deck action of the group closure.
struct ExactCertificate {
  std::vector<FinitePerm> aut;   // sorted
  std::vector<FinitePerm> deck;  // sorted
  bool set_equal = false;
  std::int64_t retries = 0;      // marker bases discarded before this one
  SquareId base_squares = 0;
  SquareId cover_squares = 0;
};

struct FiniteRealization {
  CoverOrigami cover;
  MarkerBase base;
  ExactCertificate certificate;
};

// Builds a finite origami whose automorphism group is exactly the deck
// action of g: generator j goes on the j-th loop slot of a marker base, the
// cover's automorphism group is computed from scratch and compared with the
// deck permutations.  On set-inequality the next larger marker base is
// tried; after retry_budget bases the mismatch is reported, never accepted.
// Throws CapExceeded when the group closure exceeds closure_cap and
// MarkerNotFound when no base with enough slots exists.
FiniteRealization realize_finite(const Group& g,
                                 std::int64_t closure_cap = 1'000'000,
                                 std::int64_t retry_budget = 3);

// Bounded certificate for an infinite cover: everything is verified on
// explicit finite windows and the numbers say how far the checks went.
struct BoundedCertificate {
  std::int64_t radius = 0;                // refutation and deck window
  std::int64_t flat_vertices_checked = 0;
  std::int64_t seed_ball_radius = 0;
  std::int64_t seeds_examined = 0;
  std::int64_t refuted_seeds = 0;
  std::int64_t verified_deck_elems = 0;   // generator deck maps checked
  std::int64_t max_refutation_depth = 0;
};

struct CountableRealization {
  CoverOrigami cover;
  BoundedCertificate certificate;
};

// Realizes g over the infinite staircase: generator j becomes the vertical
// voltage on square 3j+1 (the loop edge below the j-th swapped pair), which
// is flat by construction and makes the cover connected exactly when the
// generators generate.  Flatness is re-verified on every corner cycle
// meeting squares 1..max(3k+3, vertex_budget); candidate automorphisms are
// seeded from the ball of seed_ball_radius around the base copy of square 1
// and either refuted within `radius` or required to agree with a deck map
// there; the generators' deck maps are verified on the radius ball.
// Throws NotGenerating when the generators are not certified to generate,
// FlatnessFailed on a flatness re-check failure (a bug, not bad input), and
// CertificateFailed when a surviving seed is not a deck transformation.
CountableRealization realize_countable(const Group& g, std::int64_t radius = 6,
                                       std::int64_t vertex_budget = 200,
                                       std::int64_t seed_ball_radius = 3);

// Finite-window evidence toward "one end, infinite genus": the number of
// complete corner cycles of degree >= 2 inside ball(o, 1, r) for each radius.
struct MonsterReport {
  std::vector<std::int64_t> radii;
  std::vector<std::int64_t> counts;
  std::string disclaimer;
};

MonsterReport monster_heuristics(const Origami& o,
                                 const std::vector<std::int64_t>& radii,
                                 std::int64_t cycle_budget = 10'000);

}  // namespace origami
