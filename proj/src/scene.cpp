#include "orthoconvex/scene.hpp"

#include <fstream>
#include <sstream>

#include "orthoconvex/error.hpp"

namespace oc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) bad(std::string("field '") + key + "' must be an array");
  return a;
}

std::int64_t int_from_json(const json& j) {
  Rat r = rat_from_json(j);
  if (!r.is_integer() || !r.is_small()) bad("expected an integer, got " + r.str());
  return r.to_int64();
}

json pt_to_json(const Pt2& p) { return json::array({rat_to_json(p.x), rat_to_json(p.y)}); }

Pt2 pt_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("point must be [x, y]");
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

json pts_to_json(std::span<const Pt2> pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(pt_to_json(p));
  return a;
}

std::vector<Pt2> pts_from_json(const json& a) {
  std::vector<Pt2> out;
  for (const auto& p : a) out.push_back(pt_from_json(p));
  return out;
}

json region_to_json(const GridRegion& r) {
  json cells = json::array();
  for (const auto& c : r.cells()) cells.push_back(json::array({c.i, c.j}));
  return {{"type", "grid_region"}, {"origin", pt_to_json(r.origin())}, {"cell", rat_to_json(r.cell())}, {"cells", cells}};
}

GridRegion region_from_json(const json& j) {
  Pt2 origin = j.contains("origin") ? pt_from_json(j.at("origin")) : Pt2{Rat(0), Rat(0)};
  Rat cell = j.contains("cell") ? rat_from_json(j.at("cell")) : Rat(1);
  std::vector<Cell> cells;
  for (const auto& c : array_field(j, "cells")) {
    if (!c.is_array() || c.size() != 2) bad("cell must be [i, j]");
    cells.push_back({int_from_json(c[0]), int_from_json(c[1])});
  }
  return GridRegion(origin, cell, std::move(cells));
}

json line_to_json(const StaircaseLine& l) {
  return {{"vertices", pts_to_json(l.vertices())},
          {"head", std::string(axis_dir_name(l.head()))},
          {"tail", std::string(axis_dir_name(l.tail()))}};
}

AxisDir dir_from_json(const json& j) {
  if (!j.is_string()) bad("axis direction must be a string");
  auto d = parse_axis_dir(j.get<std::string>());
  if (!d) bad("unknown axis direction '" + j.get<std::string>() + "'");
  return *d;
}

Side side_from_json(const json& j) {
  if (!j.is_string()) bad("side must be a string");
  auto s = parse_side(j.get<std::string>());
  if (!s) bad("unknown side '" + j.get<std::string>() + "'");
  return *s;
}

StaircaseLine line_from_json(const json& j) {
  return StaircaseLine(pts_from_json(array_field(j, "vertices")), dir_from_json(field(j, "head")),
                       dir_from_json(field(j, "tail")));
}

json region_n_to_json(const GridRegionN& r) {
  json cells = json::array();
  for (const auto& c : r.cells()) cells.push_back(c);
  json origin = json::array();
  for (const auto& v : r.origin().coords) origin.push_back(rat_to_json(v));
  return {{"type", "grid_region_n"}, {"dim", r.dim()}, {"origin", origin}, {"cell", rat_to_json(r.cell())},
          {"cells", cells}};
}

GridRegionN region_n_from_json(const json& j) {
  std::int64_t dim = int_from_json(field(j, "dim"));
  if (dim < 1) bad("dim must be positive");
  std::vector<IndexN> cells;
  for (const auto& c : array_field(j, "cells")) {
    if (!c.is_array() || c.size() != static_cast<std::size_t>(dim)) bad("cell arity must equal dim");
    IndexN v;
    for (const auto& x : c) v.push_back(int_from_json(x));
    cells.push_back(std::move(v));
  }
  PtN origin;
  if (j.contains("origin")) {
    for (const auto& x : j.at("origin")) origin.coords.push_back(rat_from_json(x));
  } else {
    origin.coords.assign(static_cast<std::size_t>(dim), Rat(0));
  }
  Rat cell = j.contains("cell") ? rat_from_json(j.at("cell")) : Rat(1);
  return GridRegionN(static_cast<std::size_t>(dim), std::move(origin), cell, std::move(cells));
}

json rect_to_json(const AxisRect& r) {
  return json::array({rat_to_json(r.min().x), rat_to_json(r.min().y), rat_to_json(r.max().x), rat_to_json(r.max().y)});
}

AxisRect rect_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) bad("rectangle must be [x0, y0, x1, y1]");
  return AxisRect({rat_from_json(j[0]), rat_from_json(j[1])}, {rat_from_json(j[2]), rat_from_json(j[3])});
}

// Euclid on positive rationals.
Rat rat_gcd(Rat a, Rat b) {
  a = abs(a);
  b = abs(b);
  while (b.sign() != 0) {
    Rat r = a - (a / b).floor() * b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

json rat_to_json(const Rat& r) {
  if (r.is_integer() && r.is_small()) return r.to_int64();
  return r.str();
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(e.what());
    }
  }
  bad("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

std::string_view object_type_name(const SceneObject& o) {
  static constexpr std::string_view names[] = {"grid_region",     "polygon",          "points",
                                               "polyline",        "grid_region_n",    "separation_cert",
                                               "halfplane_family", "sequence",        "staircase_line"};
  return names[o.index()];
}

json to_json(const SceneObject& o) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GridRegion>) {
          return region_to_json(v);
        } else if constexpr (std::is_same_v<T, RectilinearPolygon>) {
          return {{"type", "polygon"}, {"vertices", pts_to_json(v.vertices())}};
        } else if constexpr (std::is_same_v<T, PointSet2>) {
          return {{"type", "points"}, {"points", pts_to_json(v.points())}};
        } else if constexpr (std::is_same_v<T, Polyline>) {
          return {{"type", "polyline"}, {"points", pts_to_json(v.points())}};
        } else if constexpr (std::is_same_v<T, GridRegionN>) {
          return region_n_to_json(v);
        } else if constexpr (std::is_same_v<T, SeparationCert>) {
          return {{"type", "separation_cert"},
                  {"line", line_to_json(v.line)},
                  {"side_of_a", std::string(side_name(v.side_of_a))},
                  {"side_of_b", std::string(side_name(v.side_of_b))},
                  {"grid_size", rat_to_json(v.grid_size)}};
        } else if constexpr (std::is_same_v<T, HalfplaneFamily>) {
          json hs = json::array();
          for (const auto& h : v.halfplanes)
            hs.push_back({{"line", line_to_json(h.line)}, {"side", std::string(side_name(h.side))}});
          return {{"type", "halfplane_family"}, {"halfplanes", hs}};
        } else if constexpr (std::is_same_v<T, SetSequence>) {
          json items = json::array();
          for (const auto& r : v.items) items.push_back(region_to_json(r));
          return {{"type", "sequence"}, {"bound", rect_to_json(v.bound)}, {"items", items}};
        } else {
          json l = line_to_json(v);
          l["type"] = "staircase_line";
          return l;
        }
      },
      o);
}

SceneObject object_from_json(const json& j) {
  const json& t = field(j, "type");
  if (!t.is_string()) bad("object type must be a string");
  std::string type = t.get<std::string>();
  try {
    if (type == "grid_region") return region_from_json(j);
    if (type == "polygon") return RectilinearPolygon(pts_from_json(array_field(j, "vertices")));
    if (type == "points") return PointSet2(pts_from_json(array_field(j, "points")));
    if (type == "polyline") return Polyline(pts_from_json(array_field(j, "points")));
    if (type == "grid_region_n") return region_n_from_json(j);
    if (type == "staircase_line") return line_from_json(j);
    if (type == "separation_cert") {
      Side sa = j.contains("side_of_a") ? side_from_json(j.at("side_of_a")) : Side::Left;
      Side sb = j.contains("side_of_b") ? side_from_json(j.at("side_of_b")) : Side::Right;
      return SeparationCert{line_from_json(field(j, "line")), sa, sb, rat_from_json(field(j, "grid_size"))};
    }
    if (type == "halfplane_family") {
      HalfplaneFamily f;
      for (const auto& h : array_field(j, "halfplanes"))
        f.halfplanes.push_back({line_from_json(field(h, "line")), side_from_json(field(h, "side"))});
      return f;
    }
    if (type == "sequence") {
      SetSequence s{{}, rect_from_json(field(j, "bound"))};
      for (const auto& item : array_field(j, "items")) s.items.push_back(region_from_json(item));
      return s;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(std::string(type) + ": " + e.what());
  } catch (const json::exception& e) {
    bad(type + ": " + e.what());
  }
  bad("unknown object type '" + type + "'");
}

Scene Scene::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  const json& objs = field(doc, "objects");
  if (!objs.is_object()) bad("'objects' must be an object");
  Scene s;
  for (const auto& [name, value] : objs.items()) {
    try {
      s.objects_.emplace(name, object_from_json(value));
    } catch (const Error& e) {
      bad("object '" + name + "': " + e.what());
    }
  }
  return s;
}

Scene Scene::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read scene file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const SceneObject& Scene::at(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw Error(ErrorCode::UnknownObject, "no object named '" + name + "'");
  return it->second;
}

GridRegion Scene::region(const std::string& name, const std::optional<Rat>& cell) const {
  const SceneObject& o = at(name);
  if (const auto* r = std::get_if<GridRegion>(&o)) return *r;
  if (const auto* p = std::get_if<RectilinearPolygon>(&o)) return polygon_to_region(*p, cell ? *cell : aligned_cell(*p));
  bad("object '" + name + "' is a " + std::string(object_type_name(o)) + ", expected a region");
}

Polyline Scene::polyline(const std::string& name) const {
  const SceneObject& o = at(name);
  if (const auto* p = std::get_if<Polyline>(&o)) return *p;
  bad("object '" + name + "' is a " + std::string(object_type_name(o)) + ", expected a polyline");
}

json Scene::to_json() const {
  json objs = json::object();
  for (const auto& [name, o] : objects_) objs[name] = oc::to_json(o);
  return {{"objects", objs}};
}

Rat aligned_cell(const RectilinearPolygon& p) {
  auto vs = p.vertices();
  Rat g(0);
  for (const auto& v : vs) {
    g = rat_gcd(g, v.x - vs[0].x);
    g = rat_gcd(g, v.y - vs[0].y);
  }
  return g;
}

}  // namespace oc
