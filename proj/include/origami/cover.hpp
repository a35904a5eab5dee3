#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "origami/core.hpp"
#include "origami/group.hpp"
#include "origami/surface.hpp"

namespace origami {

// Group labels on the glued edges: h(i) sits on the gluing from the right
// edge of square i, v(i) on the gluing from its top edge.  Unassigned edges
// carry the identity, so the support is always finite.
class VoltageAssignment {
 public:
  explicit VoltageAssignment(Group g);

  void set_h(SquareId i, const GroupElem& g);
  void set_v(SquareId i, const GroupElem& g);

  const Group& group() const { return group_; }
  GroupElem h(SquareId i) const;
  GroupElem v(SquareId i) const;
  const std::map<SquareId, GroupElem>& h_support() const { return h_; }
  const std::map<SquareId, GroupElem>& v_support() const { return v_; }

 private:
  void check_elem(const GroupElem& g) const;
  Group group_;
  std::map<SquareId, GroupElem> h_, v_;
};

// Holonomy of one counterclockwise turn around the vertex s: walking the
// commutator cycle, each point p contributes, in order,
//   h(sigma^-1 p)^-1, v(tau^-1 sigma^-1 p)^-1, h(tau^-1 sigma^-1 p),
//   v(sigma tau^-1 sigma^-1 p),
// and the factors are multiplied on the right around the whole cycle.
GroupElem vertex_voltage_word(const Origami& o, const VoltageAssignment& va,
                              const Singularity& s);

struct VertexWord {
  Singularity vertex;
  GroupElem word;
};

struct FlatReport {
  bool flat = false;
  std::int64_t vertices_checked = 0;
  std::vector<VertexWord> words;          // sorted by minimal cycle square
  std::optional<VertexWord> offending;    // first non-identity word
};

struct RegionAll {};  // every square of a finite origami
using Region = std::variant<RegionAll, Ball, std::vector<SquareId>>;

// Verifies that every vertex whose word could be nontrivial has the identity
// word.  Throws RegionTooSmall when the region misses a corner touched by
// the support or a needed cycle cannot be traced within cycle_budget.
FlatReport check_flat(const Origami& o, const VoltageAssignment& va,
                      const Region& region, std::int64_t cycle_budget = 10'000);

// Cover with squares (i, g): crossing the right edge of (i, g) lands in
// (sigma(i), g * h(i)), crossing the top edge in (tau(i), g * v(i)).
class CoverOrigami {
 public:
  using Square = std::pair<SquareId, GroupElem>;

  const Origami& base() const;
  const VoltageAssignment& voltages() const;

  // Finite means: finite base and finite (enumerated) group.
  bool is_finite() const;
  std::int64_t group_order() const;                 // enumerated groups only
  const std::vector<GroupElem>& closure() const;    // sorted, identity first

  Square sigma(const Square& s) const;
  Square sigma_inv(const Square& s) const;
  Square tau(const Square& s) const;
  Square tau_inv(const Square& s) const;

  // Stable pairing of (base square, group element) with SquareId, independent
  // of exploration order: enumerated groups are indexed through their sorted
  // closure, Z^k through an integer zigzag/pairing, free groups through
  // length-then-letter ranking of reduced words.
  SquareId index_of(SquareId i, const GroupElem& g) const;
  Square square_of(SquareId id) const;

  // The cover as a plain origami over the paired ids.  Finite covers get
  // materialized tables (throwing NotConnectedCover if the cover is
  // disconnected); infinite covers get lazy rules.
  Origami as_origami() const;

  // Degree multiset and Euler characteristic of a finite cover, computed
  // directly on the gluing tables so disconnected covers work too.
  std::vector<std::int64_t> profile() const;
  std::int64_t euler_characteristic() const;

 private:
  struct Impl;
  explicit CoverOrigami(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend CoverOrigami build_cover(const Origami& o, const VoltageAssignment& va,
                                  std::int64_t closure_cap,
                                  std::int64_t cycle_budget);
  friend LazyBijection deck_map(const CoverOrigami& c, const GroupElem& h);
};

// Checks flatness first and refuses to build branched covers (NotFlat).
// Enumerates the group when it is a finite permutation group (CapExceeded
// past closure_cap) and verifies each voltage lies in it.
CoverOrigami build_cover(const Origami& o, const VoltageAssignment& va,
                         std::int64_t closure_cap = 1'000'000,
                         std::int64_t cycle_budget = 10'000);

// The deck transformation (i, g) -> (i, h * g) on paired ids.  Multiplying
// on the left commutes with the right voltage action, so this is always an
// automorphism of the cover.
LazyBijection deck_map(const CoverOrigami& c, const GroupElem& h);
FinitePerm deck_perm(const CoverOrigami& c, const GroupElem& h);  // finite covers

enum class ConnVerdict { connected, disconnected, unknown };

struct ConnectivityReport {
  ConnVerdict verdict = ConnVerdict::unknown;
  std::string detail;
  SquareId witness = 0;        // unreached cover square when decided by BFS
  std::int64_t explored = 0;
};

// Finite covers are decided by BFS.  Infinite covers are decided through the
// holonomy subgroup: when a spanning region avoiding the voltage support
// connects the support endpoints, the holonomy is generated by the voltage
// values themselves and generates() settles the verdict; otherwise the
// fundamental cycles of a finite base give exact holonomy generators, and on
// an infinite base the report stays unknown with BFS evidence.
ConnectivityReport check_cover_connected(const CoverOrigami& c,
                                         std::int64_t budget = 100'000);

}  // namespace origami
