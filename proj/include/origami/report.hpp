#pragma once

#include <json.hpp>

#include "origami/aut.hpp"
#include "origami/cover.hpp"
#include "origami/realize.hpp"
#include "origami/surface.hpp"

namespace origami {

// All reports use insertion-ordered JSON so reruns are byte-identical.
using Json = nlohmann::ordered_json;

Json validation_report(const Origami& o);
Json info_report(const Origami& o);  // finite only

Json aut_report(const Origami& o);  // finite: the whole group
Json bounded_aut_report(SquareId base, std::int64_t radius,
                        std::int64_t seed_ball_radius,
                        const std::vector<SeedVerdict>& verdicts);

Json flat_report_json(const FlatReport& r);
Json connectivity_json(const ConnectivityReport& r);
Json cover_report(const CoverOrigami& c, const FlatReport& flat,
                  const ConnectivityReport& conn);

Json finite_realization_report(const Group& g, const FiniteRealization& r);
Json countable_realization_report(const Group& g,
                                  const CountableRealization& r);

Json monster_report_json(const MonsterReport& m);
Json staircase_report(const Origami& o, const Ball* window,
                      const MonsterReport* heuristics);

// {"kind": ..., "message": ..., "line"?: ..., "column"?: ...} under "error".
Json error_report(const std::string& command, const std::string& kind,
                  const std::string& message, int line = 0, int column = 0);

}  // namespace origami
