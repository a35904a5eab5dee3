#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "origami/core.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

// Partial translation: the explored part of a candidate automorphism.
struct TranslationMap {
  SquareId base = 0;
  SquareId image = 0;
  std::map<SquareId, SquareId> table;  // ordered so reports are deterministic
};

struct TotalMap {
  TranslationMap map;
};

// No obstruction found within the radius; explicitly not a proof.
struct CertifiedMap {
  TranslationMap map;
  std::int64_t radius = 0;
};

struct Refutation {
  std::int64_t depth = 0;
  std::string conflict;
};

using AutVerdict = std::variant<TotalMap, CertifiedMap, Refutation>;

// Propagates base -> image through the edge gluings by BFS.  A translation
// commutes with sigma and tau, so the image of one square forces everything
// it can reach; contradictions or collisions refute the seed.  With a radius
// the exploration stops at that depth and the verdict is CertifiedMap; with
// nullopt (finite origamis only) the component is exhausted and a clean run
// is TotalMap.
AutVerdict extend_translation(const Origami& o, SquareId base, SquareId image,
                              std::optional<std::int64_t> radius = std::nullopt);

// All translation automorphisms of a finite origami, one BFS per candidate
// image of square 1.  Sorted by image table.
std::vector<FinitePerm> automorphism_group(const Origami& o);

struct SeedVerdict {
  SquareId seed = 0;
  AutVerdict verdict;
};

// Tries every seed image for base on a countable origami, cheapest test
// first: a seed whose corner degree differs from base's corner degree is
// refuted at depth 0, everything else goes through extend_translation.
// Seeds are processed in increasing order.
std::vector<SeedVerdict> bounded_aut_search(const Origami& o, SquareId base,
                                            std::int64_t radius,
                                            std::vector<SquareId> seeds,
                                            std::int64_t degree_budget = 10'000);

// Checks rule(sigma(x)) == sigma(rule(x)) and rule(tau(x)) == tau(rule(x))
// for every listed square; on failure *conflict (if given) describes the
// first offending equation.
bool verify_translation(const Origami& o, const LazyBijection& rule,
                        const std::vector<SquareId>& squares,
                        std::string* conflict = nullptr);

}  // namespace origami
