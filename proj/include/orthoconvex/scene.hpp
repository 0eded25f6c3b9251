#pragma once

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "orthoconvex/limits.hpp"
#include "orthoconvex/ndim.hpp"
#include "orthoconvex/representation.hpp"
#include "orthoconvex/separation.hpp"

namespace oc {

using SceneObject = std::variant<GridRegion, RectilinearPolygon, PointSet2, Polyline, GridRegionN, SeparationCert,
                                 HalfplaneFamily, SetSequence, StaircaseLine>;

std::string_view object_type_name(const SceneObject& o);

/// Named objects loaded from a JSON scene file of the form
///   {"objects": {"name": {"type": "...", ...}, ...}}
class Scene {
 public:
  Scene() = default;
  /// Throws Error(ParseError) on malformed JSON or invalid objects.
  static Scene parse(const std::string& text);
  static Scene load(const std::string& path);

  const SceneObject& at(const std::string& name) const;  // Error(UnknownObject)
  bool has(const std::string& name) const { return objects_.count(name) > 0; }
  void put(const std::string& name, SceneObject o) { objects_.insert_or_assign(name, std::move(o)); }
  const std::map<std::string, SceneObject>& objects() const { return objects_; }

  /// Region view of a grid region or polygon. Polygons are rasterised with
  /// the given cell, or the largest cell aligned with every vertex.
  GridRegion region(const std::string& name, const std::optional<Rat>& cell = std::nullopt) const;
  Polyline polyline(const std::string& name) const;

  nlohmann::json to_json() const;

 private:
  std::map<std::string, SceneObject> objects_;
};

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SceneObject& o);
SceneObject object_from_json(const nlohmann::json& j);

/// Largest rational c with every coordinate difference a multiple of c.
Rat aligned_cell(const RectilinearPolygon& p);

}  // namespace oc
