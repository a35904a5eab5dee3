#include "origami/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "origami/perm.hpp"

namespace origami {

namespace {

const char* tribool_str(Tribool t) {
  switch (t) {
    case Tribool::yes:
      return "yes";
    case Tribool::no:
      return "no";
    default:
      return "unknown";
  }
}

std::string perm_str(const FinitePerm& p) {
  return cycles_to_string(cycle_decomposition(p));
}

Json singularity_json(const Singularity& s) {
  Json j = Json::object();
  j["cycle"] = s.cycle;
  j["degree"] = s.degree;
  return j;
}

}  // namespace

Json validation_report(const Origami& o) {
  Json j = Json::object();
  j["command"] = "validate";
  j["valid"] = true;
  if (o.is_finite()) {
    j["kind"] = "finite";
    j["n"] = o.size();
  } else {
    j["kind"] = "countable";
    if (!o.name().empty()) j["name"] = o.name();
  }
  const ValidationRecord& rec = o.validation();
  j["connected"] = tribool_str(rec.connected);
  j["commutator_finite"] = tribool_str(rec.commutator_finite);
  if (!o.is_finite()) {
    j["probed_through"] = rec.probed_through;
    j["cycle_budget"] = rec.cycle_budget;
  }
  return j;
}

Json info_report(const Origami& o) {
  Json j = Json::object();
  j["command"] = "info";
  j["n"] = o.size();
  std::vector<Singularity> sing = singularities(o);
  Json arr = Json::array();
  for (const Singularity& s : sing) arr.push_back(singularity_json(s));
  j["singularities"] = arr;
  j["profile"] = singularity_profile(o);
  j["euler_characteristic"] = euler_characteristic(o);
  j["genus"] = genus(o);
  return j;
}

Json aut_report(const Origami& o) {
  Json j = Json::object();
  j["command"] = "aut";
  j["kind"] = "exact";
  j["n"] = o.size();
  std::vector<FinitePerm> group = automorphism_group(o);
  j["order"] = static_cast<std::int64_t>(group.size());
  Json arr = Json::array();
  for (const FinitePerm& p : group) arr.push_back(perm_str(p));
  j["automorphisms"] = arr;
  return j;
}

Json bounded_aut_report(SquareId base, std::int64_t radius,
                        std::int64_t seed_ball_radius,
                        const std::vector<SeedVerdict>& verdicts) {
  Json j = Json::object();
  j["command"] = "aut";
  j["kind"] = "bounded";
  j["base"] = base;
  j["radius"] = radius;
  j["seed_ball_radius"] = seed_ball_radius;
  j["seeds_examined"] = static_cast<std::int64_t>(verdicts.size());
  Json arr = Json::array();
  std::vector<SquareId> surviving;
  for (const SeedVerdict& sv : verdicts) {
    Json one = Json::object();
    one["seed"] = sv.seed;
    if (std::holds_alternative<TotalMap>(sv.verdict)) {
      one["outcome"] = "total";
      surviving.push_back(sv.seed);
    } else if (std::holds_alternative<CertifiedMap>(sv.verdict)) {
      one["outcome"] = "certified";
      one["verified_radius"] = std::get<CertifiedMap>(sv.verdict).radius;
      surviving.push_back(sv.seed);
    } else {
      const Refutation& ref = std::get<Refutation>(sv.verdict);
      one["outcome"] = "refuted";
      one["depth"] = ref.depth;
      one["conflict"] = ref.conflict;
    }
    arr.push_back(one);
  }
  j["verdicts"] = arr;
  j["surviving"] = surviving;
  return j;
}

Json flat_report_json(const FlatReport& r) {
  Json j = Json::object();
  j["flat"] = r.flat;
  j["vertices_checked"] = r.vertices_checked;
  Json arr = Json::array();
  for (const VertexWord& w : r.words) {
    Json one = Json::object();
    one["vertex"] = w.vertex.cycle;
    one["degree"] = w.vertex.degree;
    one["word"] = w.word.display();
    one["identity"] = w.word.is_identity();
    arr.push_back(one);
  }
  j["vertex_words"] = arr;
  return j;
}

Json connectivity_json(const ConnectivityReport& r) {
  Json j = Json::object();
  switch (r.verdict) {
    case ConnVerdict::connected:
      j["verdict"] = "connected";
      break;
    case ConnVerdict::disconnected:
      j["verdict"] = "disconnected";
      break;
    default:
      j["verdict"] = "unknown";
      break;
  }
  j["detail"] = r.detail;
  if (r.witness > 0) j["witness"] = r.witness;
  j["explored"] = r.explored;
  return j;
}

Json cover_report(const CoverOrigami& c, const FlatReport& flat,
                  const ConnectivityReport& conn) {
  Json j = Json::object();
  j["command"] = "cover";
  j["group"] = c.voltages().group().display();
  Json base = Json::object();
  if (c.base().is_finite()) {
    base["kind"] = "finite";
    base["n"] = c.base().size();
  } else {
    base["kind"] = "countable";
    if (!c.base().name().empty()) base["name"] = c.base().name();
  }
  j["base"] = base;
  j["flatness"] = flat_report_json(flat);
  j["connectivity"] = connectivity_json(conn);
  Json cov = Json::object();
  cov["finite"] = c.is_finite();
  if (c.is_finite()) {
    cov["group_order"] = c.group_order();
    cov["squares"] = c.base().size() * c.group_order();
    cov["profile"] = c.profile();
    cov["euler_characteristic"] = c.euler_characteristic();
    if (conn.verdict == ConnVerdict::connected) {
      cov["genus"] = (2 - c.euler_characteristic()) / 2;
    }
  }
  j["cover"] = cov;
  return j;
}

Json finite_realization_report(const Group& g, const FiniteRealization& r) {
  Json j = Json::object();
  j["command"] = "realize";
  j["group"] = g.display();
  j["kind"] = "finite";
  j["certificate"] = "exact";
  j["group_order"] = static_cast<std::int64_t>(r.certificate.deck.size());
  j["base_squares"] = r.certificate.base_squares;
  j["cover_squares"] = r.certificate.cover_squares;
  j["retries"] = r.certificate.retries;
  j["aut_order"] = static_cast<std::int64_t>(r.certificate.aut.size());
  j["deck_order"] = static_cast<std::int64_t>(r.certificate.deck.size());
  j["set_equal"] = r.certificate.set_equal;
  Json arr = Json::array();
  for (const FinitePerm& p : r.certificate.aut) arr.push_back(perm_str(p));
  j["automorphisms"] = arr;
  return j;
}

Json countable_realization_report(const Group& g,
                                  const CountableRealization& r) {
  Json j = Json::object();
  j["command"] = "realize";
  j["group"] = g.display();
  j["kind"] = "countable";
  j["certificate"] = "bounded";
  const BoundedCertificate& c = r.certificate;
  j["radius"] = c.radius;
  j["flat_vertices_checked"] = c.flat_vertices_checked;
  j["seed_ball_radius"] = c.seed_ball_radius;
  j["seeds_examined"] = c.seeds_examined;
  j["refuted_seeds"] = c.refuted_seeds;
  j["verified_deck_elems"] = c.verified_deck_elems;
  j["max_refutation_depth"] = c.max_refutation_depth;
  return j;
}

Json monster_report_json(const MonsterReport& m) {
  Json j = Json::object();
  j["radii"] = m.radii;
  j["counts"] = m.counts;
  j["disclaimer"] = m.disclaimer;
  return j;
}

Json staircase_report(const Origami& o, const Ball* window,
                      const MonsterReport* heuristics) {
  Json j = Json::object();
  j["command"] = "staircase";
  j["name"] = o.name().empty() ? std::string("staircase") : o.name();
  const ValidationRecord& rec = o.validation();
  Json v = Json::object();
  v["connected"] = tribool_str(rec.connected);
  v["commutator_finite"] = tribool_str(rec.commutator_finite);
  v["probed_through"] = rec.probed_through;
  v["cycle_budget"] = rec.cycle_budget;
  j["validation"] = v;
  if (window != nullptr) {
    Json b = Json::object();
    b["base"] = window->base;
    b["radius"] = window->radius;
    b["squares"] = window->squares;
    j["ball"] = b;
  }
  if (heuristics != nullptr) j["heuristics"] = monster_report_json(*heuristics);
  return j;
}

Json error_report(const std::string& command, const std::string& kind,
                  const std::string& message, int line, int column) {
  Json j = Json::object();
  j["command"] = command;
  if (command == "validate") j["valid"] = false;
  Json e = Json::object();
  e["kind"] = kind;
  e["message"] = message;
  if (line > 0) e["line"] = line;
  if (column > 0) e["column"] = column;
  j["error"] = e;
  return j;
}

}  // namespace origami
