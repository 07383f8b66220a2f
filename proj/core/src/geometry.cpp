#include "districting/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "districting/rng.hpp"

namespace districting {

namespace {
constexpr double kEps = 1e-12;

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point p, Point a, Point b, double eps = 1e-9) {
  return point_segment_distance(p, a, b) <= eps;
}

bool segments_properly_intersect(Point a, Point b, Point c, Point d) {
  double d1 = cross(c, d, a);
  double d2 = cross(c, d, b);
  double d3 = cross(a, b, c);
  double d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}
}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double signed_area(const Polygon& poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * s;
}

double polygon_area(const Polygon& poly) { return std::abs(signed_area(poly)); }

double polygon_perimeter(const Polygon& poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) s += distance(poly[i], poly[(i + 1) % n]);
  return s;
}

Point polygon_centroid(const Polygon& poly) {
  const std::size_t n = poly.size();
  double a = signed_area(poly);
  if (std::abs(a) < kEps) {
    // Degenerate ring: fall back to the vertex mean.
    Point m{0, 0};
    for (const Point& p : poly) m = m + p;
    return (1.0 / static_cast<double>(n)) * m;
  }
  double cx = 0, cy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    double w = p.x * q.y - q.x * p.y;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

bool is_simple_polygon(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Point a = poly[i], b = poly[(i + 1) % n];
    if (distance(a, b) < kEps) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      Point c = poly[j], d = poly[(j + 1) % n];
      if (segments_properly_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

bool point_in_polygon(Point p, const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(p, poly[i], poly[(i + 1) % n])) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x_int = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

double point_segment_distance(Point p, Point a, Point b) {
  Point ab = b - a;
  double len2 = ab.x * ab.x + ab.y * ab.y;
  if (len2 < kEps) return distance(p, a);
  double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, {a.x + t * ab.x, a.y + t * ab.y});
}

double distance_to_polygon(Point p, const Polygon& poly) {
  if (point_in_polygon(p, poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % n]));
  }
  return best;
}

BoundingBox bounding_box(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("bounding_box: empty point set");
  BoundingBox bb{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    bb.min_x = std::min(bb.min_x, p.x);
    bb.min_y = std::min(bb.min_y, p.y);
    bb.max_x = std::max(bb.max_x, p.x);
    bb.max_y = std::max(bb.max_y, p.y);
  }
  return bb;
}

double monte_carlo_area(const Polygon& poly, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_area: samples < 1");
  BoundingBox bb = bounding_box(poly);
  double box_area = bb.width() * bb.height();
  if (box_area <= 0.0)
    throw std::invalid_argument("monte_carlo_area: degenerate polygon");
  Rng rng(seed);
  long long hits = 0;
  for (int i = 0; i < samples; ++i) {
    Point p{rng.uniform(bb.min_x, bb.max_x), rng.uniform(bb.min_y, bb.max_y)};
    if (point_in_polygon(p, poly)) ++hits;
  }
  return box_area * static_cast<double>(hits) / static_cast<double>(samples);
}

namespace {

Circle circle_from(Point a, Point b) {
  Point c = 0.5 * (a + b);
  return {c, distance(a, b) * 0.5};
}

Circle circle_from(Point a, Point b, Point c) {
  double ax = a.x, ay = a.y, bx = b.x, by = b.y, cx = c.x, cy = c.y;
  double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  if (std::abs(d) < kEps) {
    // Collinear: widest pair.
    Circle best = circle_from(a, b);
    for (Circle cand : {circle_from(a, c), circle_from(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
               (cx * cx + cy * cy) * (ay - by)) /
              d;
  double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
               (cx * cx + cy * cy) * (bx - ax)) /
              d;
  Point center{ux, uy};
  return {center, distance(center, a)};
}

bool in_circle(const Circle& c, Point p) {
  return distance(c.center, p) <= c.radius * (1.0 + 1e-10) + 1e-12;
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point> pts) {
  if (pts.empty())
    throw std::invalid_argument("min_enclosing_circle: empty point set");
  std::vector<Point> p(pts.begin(), pts.end());
  Rng rng(0x9e3779b9ULL);  // fixed shuffle seed, output is seed-independent
  rng.shuffle(p);

  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (in_circle(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (in_circle(c, p[j])) continue;
      c = circle_from(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (in_circle(c, p[k])) continue;
        c = circle_from(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

std::vector<Point> convex_hull(std::span<const Point> pts) {
  std::vector<Point> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const std::size_t n = p.size();
  if (n < 3) return p;
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

MinAreaRect min_area_rectangle(std::span<const Point> pts) {
  if (pts.empty())
    throw std::invalid_argument("min_area_rectangle: empty point set");
  std::vector<Point> hull = convex_hull(pts);
  if (hull.size() < 3) {
    double diam = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        diam = std::max(diam, distance(pts[i], pts[j]));
    return {std::max(diam, 1e-9), 1e-9};
  }
  double best_area = std::numeric_limits<double>::infinity();
  MinAreaRect best{0, 0};
  const std::size_t h = hull.size();
  for (std::size_t i = 0; i < h; ++i) {
    Point e = hull[(i + 1) % h] - hull[i];
    double len = std::hypot(e.x, e.y);
    if (len < kEps) continue;
    double ux = e.x / len, uy = e.y / len;  // edge direction; normal (-uy, ux)
    double min_u = std::numeric_limits<double>::infinity(), max_u = -min_u;
    double min_v = min_u, max_v = -min_u;
    for (const Point& q : hull) {
      double u = q.x * ux + q.y * uy;
      double v = -q.x * uy + q.y * ux;
      min_u = std::min(min_u, u);
      max_u = std::max(max_u, u);
      min_v = std::min(min_v, v);
      max_v = std::max(max_v, v);
    }
    double a = max_u - min_u, b = max_v - min_v;
    double area = a * b;
    if (area < best_area) {
      best_area = area;
      best = {std::max(a, b), std::min(a, b)};
    }
  }
  if (best.height < 1e-9) best.height = 1e-9;
  return best;
}

double reock_compactness(std::span<const Point> vertices, double total_area) {
  Circle c = min_enclosing_circle(vertices);
  if (c.radius < kEps)
    throw std::invalid_argument("reock_compactness: degenerate vertex set");
  double circle_area = std::numbers::pi * c.radius * c.radius;
  return total_area / circle_area;
}

}  // namespace districting
