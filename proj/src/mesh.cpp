#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "polya/error.hpp"
#include "polya/fem.hpp"

namespace polya::fem {
namespace {

constexpr int kSectorFan = 64;

double signed_area(const Point& p, const Point& q, const Point& r) {
  return 0.5 * ((q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y));
}

void check_shape(const Shape& s) {
  std::visit(
      [](const auto& sh) {
        using S = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<S, geometry::Triangle>) {
          if (!(sh.b >= geometry::kMinNumericHeight) || !std::isfinite(sh.a))
            throw Error(ErrorCode::DegenerateShape, "triangle height below 1e-6");
        } else if constexpr (std::is_same_v<S, geometry::Rectangle>) {
          if (!(sh.a > 0) || !(sh.b > 0)) throw Error(ErrorCode::DegenerateShape, "rectangle sides must be positive");
        } else if constexpr (std::is_same_v<S, geometry::Sector>) {
          if (!(sh.angle > 0) || !(sh.angle <= geometry::kPi) || !(sh.radius > 0))
            throw Error(ErrorCode::DegenerateShape, "sector needs 0 < angle <= pi and radius > 0");
        } else {
          if (sh.vertices.size() < 3 || !(sh.area() > 0))
            throw Error(ErrorCode::DegenerateShape, "polygon must be counter-clockwise with positive area");
        }
      },
      s);
}

void mark_boundary(Mesh& m) {
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& e : m.elements) {
    for (int k = 0; k < 3; ++k) {
      int i = e[k], j = e[(k + 1) % 3];
      ++edge_count[{std::min(i, j), std::max(i, j)}];
    }
  }
  m.boundary.assign(m.vertices.size(), false);
  for (const auto& [edge, n] : edge_count) {
    if (n == 1) {
      m.boundary[edge.first] = true;
      m.boundary[edge.second] = true;
    }
  }
}

}  // namespace

double shape_area(const Shape& s) {
  return std::visit(
      [](const auto& sh) -> double {
        using S = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<S, geometry::Triangle>) {
          return 0.5 * sh.b;
        } else {
          return sh.area();
        }
      },
      s);
}

double shape_perimeter(const Shape& s) {
  return std::visit(
      [](const auto& sh) -> double {
        using S = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<S, geometry::Triangle>) {
          return geometry::derive(sh).perimeter;
        } else if constexpr (std::is_same_v<S, geometry::Sector>) {
          return sh.radius * (2.0 + sh.angle);
        } else {
          return sh.perimeter();
        }
      },
      s);
}

std::size_t Mesh::interior_count() const { return static_cast<std::size_t>(std::count(boundary.begin(), boundary.end(), false)); }

double Mesh::max_edge() const {
  double h = 0.0;
  for (const auto& e : elements) {
    for (int k = 0; k < 3; ++k) {
      const Point& p = vertices[e[k]];
      const Point& q = vertices[e[(k + 1) % 3]];
      h = std::max(h, std::hypot(p.x - q.x, p.y - q.y));
    }
  }
  return h;
}

Mesh base_mesh(const Shape& s) {
  check_shape(s);
  Mesh m;
  std::visit(
      [&m](const auto& sh) {
        using S = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<S, geometry::Triangle>) {
          m.vertices = {{0.0, 0.0}, {1.0, 0.0}, {sh.a, sh.b}};
          m.elements = {{0, 1, 2}};
        } else if constexpr (std::is_same_v<S, geometry::Rectangle>) {
          m.vertices = {{-sh.a, -sh.b}, {sh.a, -sh.b}, {sh.a, sh.b}, {-sh.a, sh.b}};
          m.elements = {{0, 1, 2}, {0, 2, 3}};
        } else if constexpr (std::is_same_v<S, geometry::Sector>) {
          m.vertices.push_back({0.0, 0.0});
          for (int k = 0; k <= kSectorFan; ++k) {
            double t = -0.5 * sh.angle + sh.angle * k / kSectorFan;
            m.vertices.push_back({sh.radius * std::cos(t), sh.radius * std::sin(t)});
          }
          for (int k = 0; k < kSectorFan; ++k) m.elements.push_back({0, k + 1, k + 2});
        } else {
          m.vertices = sh.vertices;
          for (int k = 1; k + 1 < static_cast<int>(sh.vertices.size()); ++k) m.elements.push_back({0, k, k + 1});
        }
      },
      s);
  for (const auto& e : m.elements) {
    if (!(signed_area(m.vertices[e[0]], m.vertices[e[1]], m.vertices[e[2]]) > 0))
      throw Error(ErrorCode::DegenerateShape, "base element with non-positive area");
  }
  mark_boundary(m);
  return m;
}

Mesh refine(const Mesh& m, const Shape& s) {
  const geometry::Sector* sector = std::get_if<geometry::Sector>(&s);
  auto on_arc = [&](const Point& p) {
    return sector != nullptr && std::abs(std::hypot(p.x, p.y) - sector->radius) <= 1e-12 * sector->radius;
  };

  Mesh f;
  f.level = m.level + 1;
  f.vertices = m.vertices;
  f.parents.reserve(m.vertices.size() * 4);
  for (int i = 0; i < static_cast<int>(m.vertices.size()); ++i) f.parents.push_back({i, i});

  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int i, int j) {
    std::pair<int, int> key{std::min(i, j), std::max(i, j)};
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const Point& p = m.vertices[i];
    const Point& q = m.vertices[j];
    Point r{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
    if (m.boundary[i] && m.boundary[j] && on_arc(p) && on_arc(q)) {
      double scale = sector->radius / std::hypot(r.x, r.y);
      r = {r.x * scale, r.y * scale};
    }
    int idx = static_cast<int>(f.vertices.size());
    f.vertices.push_back(r);
    f.parents.push_back({key.first, key.second});
    midpoint.emplace(key, idx);
    return idx;
  };

  f.elements.reserve(m.elements.size() * 4);
  for (const auto& e : m.elements) {
    int a = e[0], b = e[1], c = e[2];
    int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    f.elements.push_back({a, ab, ca});
    f.elements.push_back({ab, b, bc});
    f.elements.push_back({ca, bc, c});
    f.elements.push_back({ab, bc, ca});
  }
  mark_boundary(f);
  return f;
}

Mesh mesh_domain(const Shape& s, int level) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "level must be >= 0");
  if (level > kMaxLevel) throw Error(ErrorCode::LevelTooHigh, "level " + std::to_string(level) + " exceeds 9");
  Mesh m = base_mesh(s);
  for (int l = 0; l < level; ++l) m = refine(m, s);
  return m;
}

void write_off(std::ostream& out, const Mesh& m) {
  out << "OFF\n" << m.vertices.size() << ' ' << m.elements.size() << " 0\n";
  out.precision(17);
  for (const auto& p : m.vertices) out << p.x << ' ' << p.y << " 0\n";
  for (const auto& e : m.elements) out << "3 " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

}  // namespace polya::fem
