#include "orthoconvex/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "orthoconvex/error.hpp"

namespace oc {

namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

struct Frame {
  double x0, y1, scale;
  int width, height;
  std::string x(const Rat& v) const { return num((v.to_double() - x0) * scale); }
  std::string y(const Rat& v) const { return num((y1 - v.to_double()) * scale); }
};

void extend(std::optional<AxisRect>& box, const AxisRect& r) {
  if (!box) {
    box = r;
    return;
  }
  box = AxisRect({min(box->min().x, r.min().x), min(box->min().y, r.min().y)},
                 {max(box->max().x, r.max().x), max(box->max().y, r.max().y)});
}

void extend(std::optional<AxisRect>& box, std::span<const Pt2> pts) {
  for (const auto& p : pts) extend(box, AxisRect(p, p));
}

void extend(std::optional<AxisRect>& box, const SceneObject& o) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GridRegion>) {
          if (auto b = v.bounds()) extend(box, *b);
        } else if constexpr (std::is_same_v<T, RectilinearPolygon>) {
          extend(box, v.bounds());
        } else if constexpr (std::is_same_v<T, PointSet2>) {
          extend(box, v.points());
        } else if constexpr (std::is_same_v<T, Polyline>) {
          extend(box, v.points());
        } else if constexpr (std::is_same_v<T, SeparationCert>) {
          extend(box, v.line.vertices());
        } else if constexpr (std::is_same_v<T, StaircaseLine>) {
          extend(box, v.vertices());
        } else if constexpr (std::is_same_v<T, HalfplaneFamily>) {
          for (const auto& h : v.halfplanes) extend(box, h.line.vertices());
        } else if constexpr (std::is_same_v<T, SetSequence>) {
          extend(box, v.bound);
        }
      },
      o);
}

std::string points_attr(const Frame& f, const std::vector<std::pair<double, double>>& pts) {
  std::string s;
  for (const auto& [x, y] : pts) {
    if (!s.empty()) s += ' ';
    s += num((x - f.x0) * f.scale) + "," + num((f.y1 - y) * f.scale);
  }
  return s;
}

void region_path(std::ostream& out, const Frame& f, const GridRegion& r, const char* colour) {
  out << "<path class=\"region\" fill=\"" << colour << "\" fill-opacity=\"0.45\" stroke=\"" << colour
      << "\" stroke-width=\"1\" d=\"";
  for (const auto& c : r.cells()) {
    AxisRect q = r.cell_rect(c);
    out << 'M' << f.x(q.min().x) << ',' << f.y(q.min().y) << 'H' << f.x(q.max().x) << 'V' << f.y(q.max().y) << 'H'
        << f.x(q.min().x) << 'Z';
  }
  out << "\"/>\n";
}

void staircase(std::ostream& out, const Frame& f, const StaircaseLine& l, const char* colour, double reach) {
  auto vs = l.vertices();
  auto far = [&](const Pt2& p, AxisDir d) {
    Pt2 v = axis_dir_vector(d);
    return std::pair{p.x.to_double() + reach * v.x.to_double(), p.y.to_double() + reach * v.y.to_double()};
  };
  std::vector<std::pair<double, double>> pts;
  pts.push_back(far(vs.front(), l.head()));
  for (const auto& p : vs) pts.emplace_back(p.x.to_double(), p.y.to_double());
  pts.push_back(far(vs.back(), l.tail()));
  std::string exact;
  for (const auto& p : vs) {
    if (!exact.empty()) exact += ' ';
    exact += p.x.str() + "," + p.y.str();
  }
  out << "<polyline class=\"staircase\" fill=\"none\" stroke=\"" << colour
      << "\" stroke-width=\"2\" marker-start=\"url(#arrow)\" marker-end=\"url(#arrow)\" data-vertices=\"" << exact
      << "\" data-head=\"" << axis_dir_name(l.head()) << "\" data-tail=\"" << axis_dir_name(l.tail())
      << "\" points=\"" << points_attr(f, pts) << "\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderSpec& spec) {
  std::optional<AxisRect> box = spec.viewport;
  if (!box) {
    for (const auto& name : spec.layers) extend(box, scene.at(name));
    if (!box) box = AxisRect({Rat(0), Rat(0)}, {Rat(1), Rat(1)});
    box = AxisRect({box->min().x - 1, box->min().y - 1}, {box->max().x + 1, box->max().y + 1});
  }
  if (box->width().sign() <= 0 || box->height().sign() <= 0)
    throw Error(ErrorCode::PreconditionViolated, "viewport must have positive width and height");
  if (spec.width <= 0 || spec.height < 0) throw Error(ErrorCode::PreconditionViolated, "image size must be positive");

  double vw = box->width().to_double(), vh = box->height().to_double();
  Frame f{box->min().x.to_double(), box->max().y.to_double(), spec.width / vw, spec.width,
          spec.height ? spec.height : static_cast<int>(std::lround(vh * spec.width / vw))};
  if (spec.height) f.scale = std::min(f.scale, spec.height / vh);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\"" << f.height
      << "\" viewBox=\"0 0 " << f.width << ' ' << f.height << "\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\""
         " orient=\"auto-start-reverse\"><path d=\"M0,0L10,5L0,10Z\"/></marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  Rat step(1);
  for (const auto& name : spec.layers)
    if (const auto* r = std::get_if<GridRegion>(&scene.at(name))) {
      step = r->cell();
      break;
    }
  while ((box->width() / step).to_double() + (box->height() / step).to_double() > 400) step = step * 2;
  out << "<g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (Rat x = (box->min().x / step).ceil() * step; x <= box->max().x; x = x + step)
    out << "<line x1=\"" << f.x(x) << "\" y1=\"0\" x2=\"" << f.x(x) << "\" y2=\"" << f.height << "\"/>\n";
  for (Rat y = (box->min().y / step).ceil() * step; y <= box->max().y; y = y + step)
    out << "<line x1=\"0\" y1=\"" << f.y(y) << "\" x2=\"" << f.width << "\" y2=\"" << f.y(y) << "\"/>\n";
  out << "</g>\n";

  double reach = vw + vh;
  std::size_t k = 0;
  for (const auto& name : spec.layers) {
    const char* colour = kPalette[k++ % std::size(kPalette)];
    out << "<g id=\"" << name << "\" data-type=\"" << object_type_name(scene.at(name)) << "\">\n";
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GridRegion>) {
            region_path(out, f, v, colour);
          } else if constexpr (std::is_same_v<T, RectilinearPolygon>) {
            out << "<path class=\"region\" fill=\"" << colour << "\" fill-opacity=\"0.45\" stroke=\"" << colour
                << "\" d=\"";
            char cmd = 'M';
            for (const auto& p : v.vertices()) {
              out << cmd << f.x(p.x) << ',' << f.y(p.y);
              cmd = 'L';
            }
            out << "Z\"/>\n";
          } else if constexpr (std::is_same_v<T, PointSet2>) {
            for (const auto& p : v.points())
              out << "<circle cx=\"" << f.x(p.x) << "\" cy=\"" << f.y(p.y) << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
          } else if constexpr (std::is_same_v<T, Polyline>) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : v.points()) pts.emplace_back(p.x.to_double(), p.y.to_double());
            out << "<polyline class=\"path\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\""
                << points_attr(f, pts) << "\"/>\n";
          } else if constexpr (std::is_same_v<T, SeparationCert>) {
            staircase(out, f, v.line, colour, reach);
          } else if constexpr (std::is_same_v<T, StaircaseLine>) {
            staircase(out, f, v, colour, reach);
          } else if constexpr (std::is_same_v<T, HalfplaneFamily>) {
            for (const auto& h : v.halfplanes) staircase(out, f, h.line, colour, reach);
          } else if constexpr (std::is_same_v<T, SetSequence>) {
            for (const auto& r : v.items) region_path(out, f, r, colour);
          } else {
            throw Error(ErrorCode::PreconditionViolated, "cannot render a " + std::string(object_type_name(v)) +
                                                             " in the plane");
          }
        },
        scene.at(name));
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace oc
