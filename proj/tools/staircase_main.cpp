#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthoconvex/error.hpp"
#include "orthoconvex/generators.hpp"
#include "orthoconvex/hull.hpp"
#include "orthoconvex/limits.hpp"
#include "orthoconvex/ndim.hpp"
#include "orthoconvex/predicates.hpp"
#include "orthoconvex/representation.hpp"
#include "orthoconvex/scene.hpp"
#include "orthoconvex/separation.hpp"
#include "orthoconvex/svg.hpp"

using nlohmann::json;
using namespace oc;

namespace {

int log_level() {
  const char* v = std::getenv("STAIRCASE_LOG");
  if (!v) return 0;
  std::string s = v;
  if (s == "debug" || s == "2") return 2;
  if (s == "info" || s == "1") return 1;
  return 0;
}

void log(int level, const std::string& msg) {
  static const int threshold = log_level();
  if (level <= threshold) std::cerr << "[staircase] " << msg << '\n';
}

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::vector<Rat> rat_list(const std::string& text, std::size_t arity, const char* what) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rat::parse(item));
    } catch (const std::exception& e) {
      malformed(std::string(what) + ": " + e.what());
    }
  }
  if (arity && out.size() != arity)
    malformed(std::string(what) + " expects " + std::to_string(arity) + " comma-separated rationals");
  if (out.empty()) malformed(std::string(what) + " is empty");
  return out;
}

Pt2 parse_point(const std::string& text) {
  auto v = rat_list(text, 2, "--point");
  return {v[0], v[1]};
}

AxisRect parse_window(const std::string& text) {
  auto v = rat_list(text, 4, "--window");
  if (v[2] < v[0] || v[3] < v[1]) malformed("--window must be x0,y0,x1,y1 with x0<=x1 and y0<=y1");
  return AxisRect({v[0], v[1]}, {v[2], v[3]});
}

Rat parse_rat(const std::string& text, const char* what) { return rat_list(text, 1, what)[0]; }

json interval_json(const RatInterval& r) { return {{"lo", rat_to_json(r.lo)}, {"hi", rat_to_json(r.hi)}}; }

json hausdorff_json(const HausdorffDist& h) {
  return {{"lo", rat_to_json(h.lo)}, {"hi", rat_to_json(h.hi)}, {"resolution", rat_to_json(h.resolution)}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void write_svg(const std::string& path, const Scene& scene, const RenderSpec& spec) {
  std::ofstream out(path);
  if (!out) malformed("cannot write '" + path + "'");
  out << render_svg(scene, spec);
  log(1, "wrote " + path);
}

struct Args {
  std::string scene, a, b, c, predicate = "ortho-convex", cell, window, schedule, refine, point, out, layers;
  std::string kind, pa = "0,0", pb = "4,0";
  std::uint64_t seed = 20240601;
  std::int64_t n = 64;
  std::size_t items = 200;
  int width = 640;
};

std::optional<Rat> opt_cell(const Args& a) {
  if (a.cell.empty()) return std::nullopt;
  Rat c = parse_rat(a.cell, "--cell");
  if (c.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "--cell must be positive");
  return c;
}

int cmd_check(const Args& a) {
  Scene scene = Scene::load(a.scene);
  const SceneObject& o = scene.at(a.a);
  json r{{"object", a.a}, {"predicate", a.predicate}};
  const auto* line = std::get_if<Polyline>(&o);
  const auto* nd = std::get_if<GridRegionN>(&o);
  if (a.predicate == "ortho-convex") {
    if (line) r["result"] = is_ortho_convex_path(*line);
    else if (nd) r["result"] = is_ortho_convex_n(*nd);
    else r["result"] = is_ortho_convex_region(scene.region(a.a, opt_cell(a)));
  } else if (a.predicate == "path-connected") {
    r["result"] = is_path_connected(scene.region(a.a, opt_cell(a)));
  } else if (a.predicate == "monotone") {
    MonotoneClass c = classify_monotone(scene.polyline(a.a));
    r["result"] = c != MonotoneClass::None;
    r["class"] = std::string(monotone_class_name(c));
  } else if (a.predicate == "sandwich") {
    r["result"] = check_sandwich(scene.polyline(a.a));
  } else if (a.predicate == "length") {
    Rat tol = a.refine.empty() ? Rat(1, 1000000) : parse_rat(a.refine, "--refine");
    r["result"] = interval_json(path_length(scene.polyline(a.a), tol));
  } else if (a.predicate == "equivalences") {
    GridRegionN g = nd ? *nd : to_region_n(scene.region(a.a, opt_cell(a)));
    EquivalenceReport e = check_equivalences(g);
    r["result"] = e.agree();
    r["lines"] = e.lines;
    r["slices"] = e.slices;
    r["points"] = e.points;
  } else if (a.predicate == "closure") {
    r["result"] = closure_preserves(scene.region(a.a, opt_cell(a)));
  } else {
    malformed("unknown predicate '" + a.predicate +
              "' (ortho-convex, path-connected, monotone, sandwich, length, equivalences, closure)");
  }
  emit(r);
  return 0;
}

int cmd_hull(const Args& a) {
  Scene scene = Scene::load(a.scene);
  HullResult h;
  if (const auto* pts = std::get_if<PointSet2>(&scene.at(a.a)))
    h = ortho_hull_points(*pts, opt_cell(a).value_or(Rat(1)));
  else
    h = ortho_hull(scene.region(a.a, opt_cell(a)));
  json j = to_json(h.region);
  j["iterations"] = h.iterations;
  emit(j);
  if (!a.out.empty()) {
    scene.put("hull", h.region);
    write_svg(a.out, scene, {640, 0, std::nullopt, {"hull", a.a}});
  }
  return 0;
}

int cmd_hull_n(const Args& a) {
  Scene scene = Scene::load(a.scene);
  const SceneObject& o = scene.at(a.a);
  GridRegionN g = std::holds_alternative<GridRegionN>(o) ? std::get<GridRegionN>(o) : to_region_n(scene.region(a.a));
  emit(to_json(ortho_hull_n(g)));
  return 0;
}

int cmd_separate(const Args& a, bool point_only) {
  Scene scene = Scene::load(a.scene);
  GridRegion s = scene.region(a.a, opt_cell(a));
  std::optional<SeparationCert> cert;
  std::vector<std::string> layers{a.a};
  if (!a.point.empty()) {
    Pt2 p = parse_point(a.point);
    cert = separate_point(s, p);
    scene.put("point", PointSet2({p}));
    layers.push_back("point");
  } else if (point_only) {
    malformed("separate-point requires --point x,y");
  } else {
    if (a.b.empty()) malformed("separate requires two objects or --point");
    cert = separate_sets(s, scene.region(a.b, opt_cell(a)));
    layers.push_back(a.b);
  }
  log(1, "grid size " + cert->grid_size.str());
  emit(to_json(*cert));
  if (!a.out.empty()) {
    scene.put("cert", *cert);
    layers.push_back("cert");
    write_svg(a.out, scene, {640, 0, std::nullopt, layers});
  }
  return 0;
}

int cmd_represent(const Args& a) {
  Scene scene = Scene::load(a.scene);
  emit(to_json(four_chain_decomposition(scene.region(a.a, opt_cell(a)))));
  return 0;
}

int cmd_intersect(const Args& a) {
  Scene scene = Scene::load(a.scene);
  const auto* f = std::get_if<HalfplaneFamily>(&scene.at(a.a));
  if (!f) malformed("object '" + a.a + "' is not a halfplane_family");
  if (a.window.empty()) malformed("intersect requires --window x0,y0,x1,y1");
  emit(to_json(intersect_family(*f, parse_window(a.window), opt_cell(a).value_or(Rat(1)))));
  return 0;
}

int cmd_hausdorff(const Args& a) {
  Scene scene = Scene::load(a.scene);
  Rat refine = a.refine.empty() ? Rat(1, 4) : parse_rat(a.refine, "--refine");
  bool lines = std::holds_alternative<Polyline>(scene.at(a.a));
  HausdorffDist h = lines ? hausdorff(scene.polyline(a.a), scene.polyline(a.b), refine)
                          : hausdorff(scene.region(a.a, opt_cell(a)), scene.region(a.b, opt_cell(a)), refine);
  emit(hausdorff_json(h));
  return 0;
}

int cmd_converge(const Args& a) {
  Pt2 pa = parse_point(a.pa), pb = parse_point(a.pb);
  for (const auto& row : path_convergence_report(pa, pb, a.n, a.seed)) {
    json pts = to_json(row.path)["points"];
    emit({{"n", row.n},
          {"path", pts},
          {"length", interval_json(row.length)},
          {"euclid_sq", rat_to_json(row.euclid_sq)},
          {"manhattan", rat_to_json(row.manhattan)},
          {"sandwich", row.sandwich},
          {"length_bound", rat_to_json(row.length_bound)},
          {"hausdorff", hausdorff_json(row.hausdorff)},
          {"hausdorff_bound", rat_to_json(row.hausdorff_bound)}});
  }
  return 0;
}

int cmd_blaschke(const Args& a) {
  Scene scene = Scene::load(a.scene);
  const auto* seq = std::get_if<SetSequence>(&scene.at(a.a));
  if (!seq) malformed("object '" + a.a + "' is not a sequence");
  std::vector<Rat> schedule = rat_list(a.schedule.empty() ? "1,1/2,1/4,1/8" : a.schedule, 0, "--schedule");
  BlaschkeResult res = blaschke_select(*seq, schedule);
  for (std::size_t k = 0; k < res.levels.size(); ++k) {
    const auto& lv = res.levels[k];
    emit({{"level", k},
          {"tol", rat_to_json(lv.tol)},
          {"count", lv.selected.size()},
          {"selected", lv.selected},
          {"max_successive_hi", rat_to_json(lv.max_successive_hi)}});
  }
  emit({{"indices", res.indices},
        {"limit_ortho_convex", res.limit_ortho_convex},
        {"limit_candidate", to_json(res.limit_candidate)}});
  return 0;
}

int cmd_verify(const Args& a) {
  Scene scene = Scene::load(a.scene);
  const auto* cert = std::get_if<SeparationCert>(&scene.at(a.a));
  if (!cert) malformed("object '" + a.a + "' is not a separation_cert");
  GridRegion s = scene.region(a.b, opt_cell(a));
  bool ok;
  if (!a.point.empty()) ok = verify_certificate(*cert, s, parse_point(a.point));
  else if (!a.c.empty()) ok = verify_certificate(*cert, s, scene.region(a.c, opt_cell(a)));
  else malformed("verify requires a second region or --point");
  emit({{"result", ok}});
  return 0;
}

int cmd_render(const Args& a) {
  Scene scene = Scene::load(a.scene);
  if (a.out.empty()) malformed("render requires --out path");
  RenderSpec spec;
  spec.width = a.width;
  std::stringstream ss(a.layers);
  for (std::string name; std::getline(ss, name, ',');)
    if (!name.empty()) spec.layers.push_back(name);
  if (spec.layers.empty())
    for (const auto& [name, o] : scene.objects()) spec.layers.push_back(name);
  if (!a.window.empty()) spec.viewport = parse_window(a.window);
  write_svg(a.out, scene, spec);
  emit({{"out", a.out}, {"layers", spec.layers}});
  return 0;
}

int cmd_generate(const Args& a) {
  std::mt19937_64 rng(a.seed);
  Scene scene;
  if (a.kind == "pair") {
    auto [x, y] = random_disjoint_pair(rng, 20);
    scene.put("A", x);
    scene.put("B", y);
  } else if (a.kind == "point") {
    GridRegion r = random_ortho_convex_region(rng, 20, 20);
    scene.put("S", r);
    scene.put("p", PointSet2({random_exterior_point(rng, r, 20)}));
  } else if (a.kind == "region") {
    scene.put("R", random_ortho_convex_region(rng, 16, 16));
  } else if (a.kind == "region-n") {
    scene.put("R", random_ortho_convex_n(rng, 3, 4));
  } else if (a.kind == "sequence") {
    scene.put("seq", template_sequence(a.items, a.seed).sequence);
  } else {
    malformed("unknown generator '" + a.kind + "' (pair, point, region, region-n, sequence)");
  }
  emit(scene.to_json());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orthogonal-convexity toolkit driven by JSON scene files"};
  app.require_subcommand(1);
  Args args;
  auto scene_arg = [&](CLI::App* s) { s->add_option("scene", args.scene, "scene file")->required(); };
  auto obj = [&](CLI::App* s, std::string& dst, const char* name, bool required = true) {
    auto* o = s->add_option(name, dst, "object name");
    if (required) o->required();
  };
  auto cell = [&](CLI::App* s) { s->add_option("--cell", args.cell, "lattice cell size p/q"); };

  auto* check = app.add_subcommand("check", "evaluate a predicate on an object");
  scene_arg(check);
  obj(check, args.a, "object");
  check->add_option("--predicate", args.predicate, "ortho-convex | path-connected | monotone | sandwich | length | "
                                                   "equivalences | closure");
  check->add_option("--refine", args.refine, "length tolerance p/q");
  cell(check);

  auto* hull = app.add_subcommand("hull", "orthogonal convex hull of a region, polygon or point set");
  scene_arg(hull);
  obj(hull, args.a, "object");
  cell(hull);
  hull->add_option("--out", args.out, "SVG output");

  auto* hull_n = app.add_subcommand("hull-n", "orthogonal convex hull on an n-dimensional lattice");
  scene_arg(hull_n);
  obj(hull_n, args.a, "object");

  auto* separate = app.add_subcommand("separate", "staircase line strictly separating two regions");
  scene_arg(separate);
  obj(separate, args.a, "A");
  obj(separate, args.b, "B", false);
  separate->add_option("--point", args.point, "separate A from the point x,y instead");
  separate->add_option("--out", args.out, "SVG output");
  cell(separate);

  auto* sep_point = app.add_subcommand("separate-point", "staircase line separating a region from a point");
  scene_arg(sep_point);
  obj(sep_point, args.a, "S");
  sep_point->add_option("--point", args.point, "x,y")->required();
  sep_point->add_option("--out", args.out, "SVG output");
  cell(sep_point);

  auto* represent = app.add_subcommand("represent", "four staircase halfplanes whose intersection is the region");
  scene_arg(represent);
  obj(represent, args.a, "R");
  cell(represent);

  auto* intersect = app.add_subcommand("intersect", "rasterise the intersection of a halfplane family");
  scene_arg(intersect);
  obj(intersect, args.a, "F");
  intersect->add_option("--window", args.window, "x0,y0,x1,y1");
  cell(intersect);

  auto* haus = app.add_subcommand("hausdorff", "certified Hausdorff distance bracket");
  scene_arg(haus);
  obj(haus, args.a, "A");
  obj(haus, args.b, "B");
  haus->add_option("--refine", args.refine, "sampling pitch p/q");
  cell(haus);

  auto* converge = app.add_subcommand("converge", "monotone paths converging to a segment");
  converge->add_option("--a", args.pa, "x,y");
  converge->add_option("--b", args.pb, "x,y");
  converge->add_option("--n", args.n, "largest n");
  converge->add_option("--seed", args.seed, "random seed");

  auto* blaschke = app.add_subcommand("blaschke", "select a Hausdorff-convergent subsequence");
  scene_arg(blaschke);
  obj(blaschke, args.a, "seq");
  blaschke->add_option("--schedule", args.schedule, "decreasing tolerances r1,r2,...");

  auto* verify = app.add_subcommand("verify", "check a separation certificate");
  scene_arg(verify);
  obj(verify, args.a, "cert");
  obj(verify, args.b, "A");
  obj(verify, args.c, "B", false);
  verify->add_option("--point", args.point, "x,y instead of B");
  cell(verify);

  auto* render = app.add_subcommand("render", "write an SVG figure");
  scene_arg(render);
  render->add_option("--layers", args.layers, "comma-separated object names");
  render->add_option("--out", args.out, "SVG output")->required();
  render->add_option("--window", args.window, "x0,y0,x1,y1");
  render->add_option("--width", args.width, "pixels");

  auto* generate = app.add_subcommand("generate", "print a random scene");
  generate->add_option("kind", args.kind, "pair | point | region | region-n | sequence")->required();
  generate->add_option("--seed", args.seed, "random seed");
  generate->add_option("--items", args.items, "sequence length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"error", "ParseError"}, {"message", e.what()}});
    return 1;
  }

  try {
    if (*check) return cmd_check(args);
    if (*hull) return cmd_hull(args);
    if (*hull_n) return cmd_hull_n(args);
    if (*separate) return cmd_separate(args, false);
    if (*sep_point) return cmd_separate(args, true);
    if (*represent) return cmd_represent(args);
    if (*intersect) return cmd_intersect(args);
    if (*haus) return cmd_hausdorff(args);
    if (*converge) return cmd_converge(args);
    if (*blaschke) return cmd_blaschke(args);
    if (*verify) return cmd_verify(args);
    if (*render) return cmd_render(args);
    if (*generate) return cmd_generate(args);
  } catch (const Error& e) {
    log(1, e.what());
    emit({{"error", std::string(e.name())}, {"message", e.what()}});
    bool malformed_input = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownObject;
    return malformed_input ? 1 : 2;
  } catch (const std::exception& e) {
    emit({{"error", "ParseError"}, {"message", e.what()}});
    return 1;
  }
  return 1;
}
