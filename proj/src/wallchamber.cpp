#include "tautilt/wallchamber.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/module_ops.hpp"

namespace tautilt {

using Index = Eigen::Index;
using json = nlohmann::ordered_json;

namespace {

std::string vec_text(const IntVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

Chamber chamber_of_pair(std::size_t node, const TauPair& pair) {
  Chamber ch;
  ch.node = node;
  ch.generators = g_matrix(pair);
  ch.normals = c_matrix(pair);
  const auto n = ch.generators.cols();
  if (ch.normals.transpose() * ch.generators != IntMatrix::Identity(n, n))
    throw TheoremViolation("chamber_orthogonality", "C^T G is not the identity");
  return ch;
}

Wall wall_of_brick(const BoundQuiver& q, const Representation& brick, const BruteForceBudget& budget) {
  Wall w;
  w.normal = brick.dim_vector();
  w.brick = brick;
  if (w.normal.isZero()) throw InputError("the zero module has no wall");
  for (const std::vector<int>& l : submodule_dim_vectors(q, brick, budget)) {
    IntVector v(static_cast<Index>(l.size()));
    for (std::size_t i = 0; i < l.size(); ++i) v(static_cast<Index>(i)) = l[i];
    if (v.isZero() || v == w.normal) continue;
    w.facets.push_back(std::move(v));
  }
  return w;
}

EdgeLabel shared_wall(const ExchangeGraph& graph, const std::vector<BrickSlate>& slates, std::size_t a,
                      std::size_t b) {
  for (const ExchangeEdge& e : graph.edges) {
    const auto u = static_cast<std::size_t>(e.upper);
    const auto l = static_cast<std::size_t>(e.lower);
    if (!((u == a && l == b) || (u == b && l == a))) continue;
    const BrickSlate& s = slates.at(u);
    EdgeLabel label;
    label.c_vector = s.c.col(e.upper_slot);
    label.brick = s.bricks.at(static_cast<std::size_t>(e.upper_slot));
    label.upper = u;
    label.lower = l;
    if ((label.c_vector.array() < 0).any() || label.c_vector != label.brick.dim_vector())
      throw TheoremViolation("edge_label", "edge label " + vec_text(label.c_vector) + " is not the brick class");
    return label;
  }
  throw InputError("nodes " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
}

Fan build_fan(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates,
              const BruteForceBudget& budget) {
  Fan fan;
  fan.complete = graph.complete;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) fan.chambers.push_back(chamber_of_pair(k, graph.nodes[k]));
  std::vector<Representation> bricks;
  for (const BrickSlate& s : slates)
    for (const Representation& b : s.bricks) {
      bool seen = false;
      for (const Representation& c : bricks) seen = seen || (c.dims == b.dims && is_isomorphic(q, c, b));
      if (!seen) bricks.push_back(b);
    }
  std::stable_sort(bricks.begin(), bricks.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dimension() != b.total_dimension()) return a.total_dimension() < b.total_dimension();
    return a.dims > b.dims;
  });
  for (const Representation& b : bricks) fan.walls.push_back(wall_of_brick(q, b, budget));
  return fan;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates) {
  std::ostringstream out;
  out << "digraph exchange_graph {\n";
  out << "  // algebra " << graph.fingerprint << (graph.complete ? "" : ", truncated") << "\n";
  out << "  node [shape=box];\n";
  for (std::size_t k = 0; k < graph.nodes.size(); ++k)
    out << "  n" << k << " [label=\"" << dot_escape(describe_pair(q, graph.nodes[k])) << "\"];\n";
  for (const ExchangeEdge& e : graph.edges) {
    std::string brick;
    if (static_cast<std::size_t>(e.upper) < slates.size())
      brick = " " + loewy_name(q, slates[static_cast<std::size_t>(e.upper)].bricks[static_cast<std::size_t>(e.upper_slot)]);
    out << "  n" << e.upper << " -> n" << e.lower << " [label=\"" << vec_text(e.label) << dot_escape(brick)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_fan_json(const BoundQuiver& q, const ExchangeGraph& graph, const Fan& fan) {
  json out;
  out["version"] = kFanSchemaVersion;
  out["algebra"] = graph.fingerprint;
  out["complete"] = fan.complete;
  // Only chambers reached by mutation from (A, 0) are listed.
  out["reachable_only"] = true;
  json chambers = json::array();
  for (const Chamber& ch : fan.chambers) {
    json c;
    c["pair_id"] = ch.node;
    c["pair"] = describe_pair(q, graph.nodes[ch.node]);
    c["generators"] = matrix_json(ch.generators);
    c["normals"] = matrix_json(ch.normals);
    chambers.push_back(std::move(c));
  }
  out["chambers"] = std::move(chambers);
  json walls = json::array();
  for (const Wall& w : fan.walls) {
    json entry;
    entry["normal"] = vector_json(w.normal);
    json facets = json::array();
    for (const IntVector& f : w.facets) facets.push_back(vector_json(f));
    entry["facets"] = std::move(facets);
    entry["brick_dim"] = vector_json(w.brick.dim_vector());
    entry["brick"] = loewy_name(q, w.brick);
    walls.push_back(std::move(entry));
  }
  out["walls"] = std::move(walls);
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Stereographic figure. Floating point is confined to this section.

namespace {

using V3 = std::array<double, 3>;

double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
V3 scale(const V3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
V3 add(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
V3 normalized(const V3& a) { return scale(a, 1.0 / std::sqrt(dot(a, a))); }
V3 from_int(const IntVector& v) {
  return {static_cast<double>(v(0)), static_cast<double>(v(1)), static_cast<double>(v(2))};
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Projection {
  V3 pole, u, v;

  explicit Projection(const V3& p) : pole(normalized(p)) {
    // Any vector not parallel to the pole seeds an orthonormal frame.
    V3 seed = std::fabs(pole[2]) < 0.9 ? V3{0, 0, 1} : V3{1, 0, 0};
    u = normalized(cross(seed, pole));
    v = cross(pole, u);
  }

  /// Image of a unit vector x; false when x is at the pole.
  bool operator()(const V3& x, double& px, double& py) const {
    const double denom = 1.0 - dot(x, pole);
    if (denom < 1e-9) return false;
    const V3 y = add(pole, scale(add(x, scale(pole, -1.0)), 2.0 / denom));
    px = dot(y, u);
    py = dot(y, v);
    return true;
  }
};

constexpr double kScale = 60.0;
constexpr int kSamples = 720;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::string emit_svg_stereographic(const BoundQuiver& q, const ExchangeGraph& graph, const Fan& fan,
                                   const std::array<double, 3>& pole) {
  if (q.vertex_count() != 3) throw InputError("the stereographic figure needs exactly 3 vertices");
  const Projection proj(pole);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"900\" height=\"900\" "
         "viewBox=\"-450 -450 900 900\">\n";
  out << "  <desc>Walls on the unit sphere, stereographic projection from (" << num(proj.pole[0]) << ","
      << num(proj.pole[1]) << "," << num(proj.pole[2]) << ")</desc>\n";
  out << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.2\">\n";
  auto point = [&](double px, double py) { return num(kScale * px) + " " + num(-kScale * py); };

  for (const Wall& w : fan.walls) {
    const V3 c = from_int(w.normal);
    const V3 a = normalized(cross(c, std::fabs(c[0]) < 0.9 * std::sqrt(dot(c, c)) ? V3{1, 0, 0} : V3{0, 1, 0}));
    const V3 b = normalized(cross(c, a));
    auto at = [&](double phi) { return add(scale(a, std::cos(phi)), scale(b, std::sin(phi))); };
    auto valid = [&](const V3& x) {
      for (const IntVector& f : w.facets)
        if (dot(from_int(f), x) > 1e-12) return false;
      return true;
    };
    std::vector<bool> ok(kSamples);
    bool all = true;
    for (int k = 0; k < kSamples; ++k) {
      ok[static_cast<std::size_t>(k)] = valid(at(2 * kPi * (k + 0.5) / kSamples));
      all = all && ok[static_cast<std::size_t>(k)];
    }
    const std::string label = vec_text(w.normal);
    const bool through_pole = std::fabs(dot(normalized(c), proj.pole)) < 1e-12;
    double lx = 0, ly = 0;
    if (all && !through_pole) {
      // Image of a great circle avoiding the pole is a circle; fit it through three points.
      double x1 = 0, y1 = 0, x2 = 0, y2 = 0, x3 = 0, y3 = 0;
      proj(at(0), x1, y1);
      proj(at(2 * kPi / 3), x2, y2);
      proj(at(4 * kPi / 3), x3, y3);
      const double d = 2 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2));
      const double s1 = x1 * x1 + y1 * y1, s2 = x2 * x2 + y2 * y2, s3 = x3 * x3 + y3 * y3;
      const double cx = (s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / d;
      const double cy = (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / d;
      const double r = std::hypot(x1 - cx, y1 - cy);
      out << "    <circle data-normal=\"" << label << "\" cx=\"" << num(kScale * cx) << "\" cy=\"" << num(-kScale * cy)
          << "\" r=\"" << num(kScale * r) << "\"/>\n";
      lx = cx;
      ly = cy + r;
    } else {
      // Walk the valid runs starting just after an invalid sample.
      int start = 0;
      if (!all)
        while (ok[static_cast<std::size_t>(start)]) ++start;
      std::vector<std::vector<std::pair<double, double>>> runs(1);
      for (int step = 1; step <= kSamples; ++step) {
        const int k = (start + step) % kSamples;
        double px, py;
        const bool drawn = ok[static_cast<std::size_t>(k)] && proj(at(2 * kPi * (k + 0.5) / kSamples), px, py) &&
                           std::hypot(px, py) < 7.0;
        if (drawn)
          runs.back().emplace_back(px, py);
        else if (!runs.back().empty())
          runs.emplace_back();
      }
      std::string d;
      std::size_t longest = 0;
      for (const auto& run : runs) {
        for (std::size_t i = 0; i < run.size(); ++i)
          d += (i ? " L " : (d.empty() ? "M " : " M ")) + point(run[i].first, run[i].second);
        if (run.size() > longest) {
          longest = run.size();
          lx = run[run.size() / 2].first;
          ly = run[run.size() / 2].second;
        }
      }
      out << "    <path data-normal=\"" << label << "\" d=\"" << d << "\"/>\n";
    }
    out << "    <text data-role=\"wall-label\" x=\"" << num(kScale * lx) << "\" y=\"" << num(-kScale * ly)
        << "\" font-size=\"11\" fill=\"black\" stroke=\"none\">" << label << "&#8869;</text>\n";
  }
  out << "  </g>\n";

  out << "  <g font-size=\"10\" fill=\"#333\">\n";
  for (const Chamber& ch : fan.chambers) {
    V3 dir{0, 0, 0};
    for (Index col = 0; col < ch.generators.cols(); ++col) dir = add(dir, normalized(from_int(ch.generators.col(col))));
    dir = normalized(dir);
    double px, py;
    std::string name = describe_pair(q, graph.nodes[ch.node]);
    std::string escaped;
    for (char ch2 : name) escaped += ch2 == '&' ? std::string("&amp;") : ch2 == '<' ? std::string("&lt;") : std::string(1, ch2);
    out << "    <text data-role=\"chamber\" data-pair=\"" << ch.node << "\" data-direction=\"" << num(dir[0]) << ","
        << num(dir[1]) << "," << num(dir[2]) << "\"";
    if (proj(dir, px, py))
      out << " x=\"" << num(kScale * px) << "\" y=\"" << num(-kScale * py) << "\">";
    else
      out << " data-at-infinity=\"true\" x=\"300.000000\" y=\"-400.000000\">";
    out << escaped << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace tautilt
