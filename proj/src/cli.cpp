#include "origami/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "origami/aut.hpp"
#include "origami/core.hpp"
#include "origami/cover.hpp"
#include "origami/group.hpp"
#include "origami/perm.hpp"
#include "origami/realize.hpp"
#include "origami/report.hpp"
#include "origami/surface.hpp"
#include "origami/svg.hpp"
#include "origami/text.hpp"

namespace origami {

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kCertificateFailure = 3;
constexpr int kUsage = 64;
constexpr int kInternal = 70;

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::string command = "unknown";
};

void emit(Ctx& c, const Json& j) { c.out << j.dump(2) << "\n"; }

int fail(Ctx& c, const std::string& kind, const std::string& message, int code,
         int line = 0, int column = 0) {
  if (c.json) {
    emit(c, error_report(c.command, kind, message, line, column));
  } else {
    c.err << "error: " << message << "\n";
  }
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

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

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += " ";
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string perm_str(const FinitePerm& p) {
  return cycles_to_string(cycle_decomposition(p));
}

// ---------------------------------------------------------------- validate

int run_validate(Ctx& c, const std::string& path) {
  Origami o = parse_origami_text(read_file(path));
  if (c.json) {
    emit(c, validation_report(o));
    return kOk;
  }
  const ValidationRecord& rec = o.validation();
  c.out << "valid: yes\n";
  if (o.is_finite()) {
    c.out << "kind: finite\n";
    c.out << "squares: " << o.size() << "\n";
  } else {
    c.out << "kind: countable\n";
    if (!o.name().empty()) c.out << "name: " << o.name() << "\n";
  }
  c.out << "connected: " << tribool_str(rec.connected) << "\n";
  c.out << "commutator cycles finite: " << tribool_str(rec.commutator_finite)
        << "\n";
  if (!o.is_finite()) {
    c.out << "probed through square: " << rec.probed_through << "\n";
    c.out << "cycle budget: " << rec.cycle_budget << "\n";
  }
  return kOk;
}

// -------------------------------------------------------------------- info

int run_info(Ctx& c, const std::string& path) {
  Origami o = parse_origami_text(read_file(path));
  if (!o.is_finite()) {
    return fail(c, "Unsupported",
                "info requires a finite origami; for countable ones use "
                "'staircase --ball R' or 'aut --radius R'",
                kInvalidInput);
  }
  if (c.json) {
    emit(c, info_report(o));
    return kOk;
  }
  c.out << "squares: " << o.size() << "\n";
  c.out << "singularities:\n";
  for (const Singularity& s : singularities(o)) {
    c.out << "  cycle " << cycles_to_string({s.cycle}) << "  degree "
          << s.degree << "\n";
  }
  c.out << "profile: " << join(singularity_profile(o)) << "\n";
  c.out << "euler characteristic: " << euler_characteristic(o) << "\n";
  c.out << "genus: " << genus(o) << "\n";
  return kOk;
}

// --------------------------------------------------------------------- aut

int run_aut(Ctx& c, const std::string& path, SquareId base,
            std::int64_t radius, std::int64_t seed_ball_radius) {
  Origami o = parse_origami_text(read_file(path));
  if (o.is_finite()) {
    if (c.json) {
      emit(c, aut_report(o));
      return kOk;
    }
    std::vector<FinitePerm> group = automorphism_group(o);
    c.out << "kind: exact\n";
    c.out << "order: " << group.size() << "\n";
    for (const FinitePerm& p : group) c.out << "  " << perm_str(p) << "\n";
    return kOk;
  }
  Ball seeds = ball(o, base, seed_ball_radius);
  std::vector<SeedVerdict> verdicts =
      bounded_aut_search(o, base, radius, seeds.squares);
  if (c.json) {
    emit(c, bounded_aut_report(base, radius, seed_ball_radius, verdicts));
    return kOk;
  }
  c.out << "kind: bounded\n";
  c.out << "base: " << base << "\n";
  c.out << "radius: " << radius << "\n";
  c.out << "seed ball radius: " << seed_ball_radius << "\n";
  c.out << "seeds examined: " << verdicts.size() << "\n";
  std::vector<std::int64_t> surviving;
  for (const SeedVerdict& sv : verdicts) {
    c.out << "  seed " << sv.seed << ": ";
    if (std::holds_alternative<TotalMap>(sv.verdict)) {
      c.out << "total translation map\n";
      surviving.push_back(sv.seed);
    } else if (const CertifiedMap* cm =
                   std::get_if<CertifiedMap>(&sv.verdict)) {
      c.out << "certified to radius " << cm->radius << "\n";
      surviving.push_back(sv.seed);
    } else {
      const Refutation& ref = std::get<Refutation>(sv.verdict);
      c.out << "refuted at depth " << ref.depth << ": " << ref.conflict
            << "\n";
    }
  }
  c.out << "surviving seeds: "
        << (surviving.empty() ? std::string("none") : join(surviving)) << "\n";
  return kOk;
}

// ------------------------------------------------------------------- cover

// The smallest honest flatness region for a countable base: every complete
// corner cycle that a voltage edge can feed into.
Region flat_region_for(const Origami& o, const VoltageAssignment& va) {
  if (o.is_finite()) return RegionAll{};
  std::set<SquareId> pts;
  auto add_around = [&](SquareId s) {
    pts.insert(s);
    pts.insert(o.sigma(s));
    pts.insert(o.tau(s));
    pts.insert(o.sigma(o.tau(s)));
    SquareId back = o.sigma_inv(s);
    pts.insert(o.tau(back));
    pts.insert(o.sigma(o.tau(back)));
  };
  for (const auto& [s, elem] : va.h_support()) add_around(s);
  for (const auto& [s, elem] : va.v_support()) add_around(s);
  std::set<SquareId> region;
  for (SquareId p : pts) {
    auto got = singularity_at(o, p);
    if (const Singularity* sing = std::get_if<Singularity>(&got)) {
      region.insert(sing->cycle.begin(), sing->cycle.end());
    } else {
      throw Error(
          "commutator cycle budget exceeded while collecting the flatness "
          "region");
    }
  }
  return std::vector<SquareId>(region.begin(), region.end());
}

int run_cover(Ctx& c, const std::string& base_path,
              const std::string& voltage_path, const std::string& group_spec) {
  Origami o = parse_origami_text(read_file(base_path));
  Group g = parse_group_spec(group_spec);
  VoltageAssignment va = parse_voltage_file(g, read_file(voltage_path));

  FlatReport flat = check_flat(o, va, flat_region_for(o, va));
  if (!flat.flat) {
    if (c.json) {
      Json j = Json::object();
      j["command"] = "cover";
      j["group"] = g.display();
      j["flatness"] = flat_report_json(flat);
      emit(c, j);
    } else {
      c.err << "error: the voltage scheme is not flat\n";
      for (const VertexWord& w : flat.words) {
        if (!w.word.is_identity()) {
          c.err << "  vertex " << cycles_to_string({w.vertex.cycle})
                << " degree " << w.vertex.degree << ": word "
                << w.word.display() << "\n";
        }
      }
    }
    return kInvalidInput;
  }

  CoverOrigami cover = build_cover(o, va);
  ConnectivityReport conn = check_cover_connected(cover);
  if (c.json) {
    emit(c, cover_report(cover, flat, conn));
    return kOk;
  }
  c.out << "group: " << g.display() << "\n";
  if (o.is_finite()) {
    c.out << "base: finite with " << o.size()
          << (o.size() == 1 ? " square\n" : " squares\n");
  } else {
    c.out << "base: countable"
          << (o.name().empty() ? "" : " (" + o.name() + ")") << "\n";
  }
  c.out << "flat: yes\n";
  c.out << "vertices checked: " << flat.vertices_checked << "\n";
  for (const VertexWord& w : flat.words) {
    c.out << "  vertex " << cycles_to_string({w.vertex.cycle}) << " degree "
          << w.vertex.degree << ": word " << w.word.display() << "\n";
  }
  c.out << "connectivity: ";
  switch (conn.verdict) {
    case ConnVerdict::connected:
      c.out << "connected";
      break;
    case ConnVerdict::disconnected:
      c.out << "disconnected";
      break;
    default:
      c.out << "unknown";
      break;
  }
  c.out << " — " << conn.detail << "\n";
  if (cover.is_finite()) {
    c.out << "cover squares: " << o.size() * cover.group_order() << "\n";
    c.out << "cover profile: " << join(cover.profile()) << "\n";
    c.out << "cover euler characteristic: " << cover.euler_characteristic()
          << "\n";
    if (conn.verdict == ConnVerdict::connected) {
      c.out << "cover genus: " << (2 - cover.euler_characteristic()) / 2
            << "\n";
    }
  } else {
    c.out << "cover: countable\n";
  }
  return kOk;
}

// --------------------------------------------------------------- staircase

int run_staircase(Ctx& c, std::int64_t ball_radius,
                  const std::vector<std::int64_t>& heuristic_radii) {
  Origami o = staircase_origami();
  Ball window;
  bool have_ball = ball_radius >= 0;
  if (have_ball) window = ball(o, 1, ball_radius);
  MonsterReport monster;
  bool have_monster = !heuristic_radii.empty();
  if (have_monster) monster = monster_heuristics(o, heuristic_radii);
  if (c.json) {
    emit(c, staircase_report(o, have_ball ? &window : nullptr,
                             have_monster ? &monster : nullptr));
    return kOk;
  }
  const ValidationRecord& rec = o.validation();
  c.out << "countable staircase origami\n";
  c.out << "connected: " << tribool_str(rec.connected) << "\n";
  c.out << "commutator cycles finite: " << tribool_str(rec.commutator_finite)
        << "\n";
  c.out << "probed through square: " << rec.probed_through << "\n";
  if (have_ball) {
    c.out << "ball(1, " << ball_radius << "): " << join(window.squares)
          << "\n";
  }
  if (have_monster) {
    c.out << "complete corner cycles of degree >= 2 per ball:\n";
    for (std::size_t i = 0; i < monster.radii.size(); ++i) {
      c.out << "  radius " << monster.radii[i] << ": " << monster.counts[i]
            << "\n";
    }
    c.out << "note: " << monster.disclaimer << "\n";
  }
  return kOk;
}

// ----------------------------------------------------------------- realize

int run_realize(Ctx& c, const std::string& group_spec, std::int64_t radius,
                std::int64_t budget) {
  Group g = parse_group_spec(group_spec);
  if (g.kind() == GroupKind::finite_perm) {
    FiniteRealization r = realize_finite(g);
    Origami cover_o = r.cover.as_origami();
    if (c.json) {
      Json j = finite_realization_report(g, r);
      Json og = Json::object();
      og["n"] = cover_o.size();
      og["sigma"] = perm_str(cover_o.sigma_perm());
      og["tau"] = perm_str(cover_o.tau_perm());
      j["origami"] = og;
      emit(c, j);
      return kOk;
    }
    c.out << "group: " << g.display() << "\n";
    c.out << "order: " << r.certificate.deck.size() << "\n";
    c.out << "certificate: exact\n";
    c.out << "aut order: " << r.certificate.aut.size() << "\n";
    c.out << "deck order: " << r.certificate.deck.size() << "\n";
    c.out << "set equal: " << (r.certificate.set_equal ? "yes" : "no") << "\n";
    c.out << "base squares: " << r.certificate.base_squares << "\n";
    c.out << "cover squares: " << r.certificate.cover_squares << "\n";
    c.out << "retries: " << r.certificate.retries << "\n";
    c.out << "\n" << render_origami_text(cover_o);
    return kOk;
  }
  CountableRealization r = realize_countable(g, radius, budget);
  const VoltageAssignment& va = r.cover.voltages();
  if (c.json) {
    Json j = countable_realization_report(g, r);
    Json scheme = Json::array();
    for (const auto& [s, elem] : va.v_support()) {
      Json one = Json::object();
      one["edge"] = "v";
      one["square"] = s;
      one["element"] = elem.display();
      scheme.push_back(one);
    }
    j["scheme"] = scheme;
    emit(c, j);
    return kOk;
  }
  const BoundedCertificate& cert = r.certificate;
  c.out << "group: " << g.display() << "\n";
  c.out << "certificate: bounded\n";
  c.out << "radius: " << cert.radius << "\n";
  c.out << "flat vertices checked: " << cert.flat_vertices_checked << "\n";
  c.out << "seed ball radius: " << cert.seed_ball_radius << "\n";
  c.out << "seeds examined: " << cert.seeds_examined << "\n";
  c.out << "refuted seeds: " << cert.refuted_seeds << "\n";
  c.out << "verified deck generator maps: " << cert.verified_deck_elems
        << "\n";
  c.out << "max refutation depth: " << cert.max_refutation_depth << "\n";
  c.out << "scheme:\n";
  for (const auto& [s, elem] : va.v_support()) {
    c.out << "  v " << s << " " << elem.display() << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ render

int run_render(Ctx& c, const std::string& path, const std::string& out_path,
               SquareId base, std::int64_t ball_radius) {
  Origami o = parse_origami_text(read_file(path));
  std::string svg;
  std::int64_t squares = 0;
  if (ball_radius >= 0) {
    Ball window = ball(o, base, ball_radius);
    squares = static_cast<std::int64_t>(window.squares.size());
    svg = render_svg(o, window);
  } else if (o.is_finite()) {
    squares = o.size();
    svg = render_svg(o);
  } else {
    return fail(c, "Usage",
                "rendering a countable origami requires --ball R", kUsage);
  }
  if (out_path == "-") {
    if (c.json) {
      return fail(c, "Usage", "--json cannot be combined with '-o -'",
                  kUsage);
    }
    c.out << svg;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write file: " + out_path);
  f << svg;
  f.close();
  if (!f) throw Error("failed while writing file: " + out_path);
  if (c.json) {
    Json j = Json::object();
    j["command"] = "render";
    j["output"] = out_path;
    j["squares"] = squares;
    j["bytes"] = static_cast<std::int64_t>(svg.size());
    emit(c, j);
  } else {
    c.out << "wrote " << out_path << ": " << squares << " squares, "
          << svg.size() << " bytes\n";
  }
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Ctx ctx{out, err};
  int code = kOk;

  CLI::App app{"origami — square-tiled surfaces as permutation pairs"};
  app.name("origami");
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "emit a JSON report instead of text");

  std::string file_path;
  std::string voltage_path;
  std::string group_spec;
  std::string out_path;
  SquareId base = 1;
  std::int64_t radius = 6;
  std::int64_t seed_ball = 3;
  std::int64_t budget = 200;
  std::int64_t ball_radius = -1;
  std::vector<std::int64_t> heuristic_radii;

  CLI::App* validate =
      app.add_subcommand("validate", "parse and validate an origami file");
  validate->fallthrough();
  validate->add_option("file", file_path, "origami text file")->required();
  validate->callback([&] {
    ctx.command = "validate";
    code = run_validate(ctx, file_path);
  });

  CLI::App* info = app.add_subcommand(
      "info", "singularities, Euler characteristic and genus");
  info->fallthrough();
  info->add_option("file", file_path, "origami text file")->required();
  info->callback([&] {
    ctx.command = "info";
    code = run_info(ctx, file_path);
  });

  CLI::App* aut = app.add_subcommand(
      "aut", "translation automorphisms (exact when finite, bounded search "
             "when countable)");
  aut->fallthrough();
  aut->add_option("file", file_path, "origami text file")->required();
  aut->add_option("--radius", radius, "refutation radius for countable input")
      ->check(CLI::NonNegativeNumber);
  aut->add_option("--base", base, "base square for the bounded search")
      ->check(CLI::PositiveNumber);
  aut->add_option("--seed-ball", seed_ball,
                  "seed candidates from this ball around the base")
      ->check(CLI::NonNegativeNumber);
  aut->callback([&] {
    ctx.command = "aut";
    code = run_aut(ctx, file_path, base, radius, seed_ball);
  });

  CLI::App* cover = app.add_subcommand(
      "cover", "build a voltage cover and report flatness and connectivity");
  cover->fallthrough();
  cover->add_option("base", file_path, "base origami text file")->required();
  cover->add_option("voltages", voltage_path, "voltage assignment file")
      ->required();
  cover->add_option("group", group_spec, "group spec, e.g. 'Z/2' or 'Z^2'")
      ->required();
  cover->callback([&] {
    ctx.command = "cover";
    code = run_cover(ctx, file_path, voltage_path, group_spec);
  });

  CLI::App* staircase = app.add_subcommand(
      "staircase", "the built-in infinite staircase origami");
  staircase->alias("lemma1");
  staircase->fallthrough();
  staircase->add_option("--ball", ball_radius,
                        "list the squares within this radius of square 1")
      ->check(CLI::NonNegativeNumber);
  staircase->add_option("--heuristics", heuristic_radii,
                        "comma-separated ball radii for corner-cycle counts")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  staircase->callback([&] {
    ctx.command = "staircase";
    code = run_staircase(ctx, ball_radius, heuristic_radii);
  });

  CLI::App* realize = app.add_subcommand(
      "realize", "build an origami whose automorphism group is the given "
                 "group, with a certificate");
  realize->fallthrough();
  realize->add_option("group", group_spec,
                      "group spec: a finite permutation group, Z, Z^k or F_r")
      ->required();
  realize->add_option("--radius", radius,
                      "certificate radius for countable groups")
      ->check(CLI::NonNegativeNumber);
  realize->add_option("--budget", budget,
                      "minimum flatness window for countable groups")
      ->check(CLI::NonNegativeNumber);
  realize->callback([&] {
    ctx.command = "realize";
    code = run_realize(ctx, group_spec, radius, budget);
  });

  CLI::App* render = app.add_subcommand("render", "draw an origami as SVG");
  render->fallthrough();
  render->add_option("file", file_path, "origami text file")->required();
  render->add_option("-o,--output", out_path, "output SVG path ('-' = stdout)")
      ->required();
  render->add_option("--ball", ball_radius,
                     "draw only this ball around --base (required for "
                     "countable input)")
      ->check(CLI::NonNegativeNumber);
  render->add_option("--base", base, "center square for --ball")
      ->check(CLI::PositiveNumber);
  render->callback([&] {
    ctx.command = "render";
    code = run_render(ctx, file_path, out_path, base, ball_radius);
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("origami");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    return fail(ctx, "ParseError", e.what(), kInvalidInput, e.line(),
                e.column());
  } catch (const SemanticError& e) {
    return fail(ctx, "SemanticError", e.what(), kInvalidInput, e.line());
  } catch (const NotConnectedCover& e) {
    return fail(ctx, "NotConnectedCover", e.what(), kInvalidInput);
  } catch (const NotConnected& e) {
    return fail(ctx, "NotConnected", e.what(), kInvalidInput);
  } catch (const NotFlat& e) {
    return fail(ctx, "NotFlat", e.what(), kInvalidInput);
  } catch (const NotGenerating& e) {
    return fail(ctx, "NotGenerating", e.what(), kInvalidInput);
  } catch (const FlatnessFailed& e) {
    return fail(ctx, "FlatnessFailed", e.what(), kCertificateFailure);
  } catch (const CertificateFailed& e) {
    return fail(ctx, "CertificateFailed", e.what(), kCertificateFailure);
  } catch (const MarkerNotFound& e) {
    return fail(ctx, "MarkerNotFound", e.what(), kCertificateFailure);
  } catch (const CapExceeded& e) {
    return fail(ctx, "CapExceeded", e.what(), kInvalidInput);
  } catch (const Error& e) {
    return fail(ctx, "Error", e.what(), kInvalidInput);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return code;
}

}  // namespace origami
