#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace districting {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

using Polygon = std::vector<Point>;  // closed, implicit last->first edge

double distance(Point a, Point b);

// Signed shoelace area is positive for counter-clockwise rings.
double signed_area(const Polygon& poly);
double polygon_area(const Polygon& poly);
double polygon_perimeter(const Polygon& poly);
Point polygon_centroid(const Polygon& poly);

// ≥3 vertices and no two non-adjacent edges intersecting.
bool is_simple_polygon(const Polygon& poly);

// Boundary counts as inside.
bool point_in_polygon(Point p, const Polygon& poly);

double point_segment_distance(Point p, Point a, Point b);

// 0 when the point is inside or on the boundary.
double distance_to_polygon(Point p, const Polygon& poly);

struct BoundingBox {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

BoundingBox bounding_box(std::span<const Point> pts);

// Rejection estimate: fraction of uniform bounding-box samples falling inside,
// times the box area. Deterministic given the seed.
double monte_carlo_area(const Polygon& poly, int samples, std::uint64_t seed);

struct Circle {
  Point center;
  double radius = 0.0;
};

// Welzl's expected-linear minimum enclosing circle.
Circle min_enclosing_circle(std::span<const Point> pts);

std::vector<Point> convex_hull(std::span<const Point> pts);

struct MinAreaRect {
  double length = 0.0;  // >= height
  double height = 0.0;
};

// Rotating calipers over the convex hull. Collinear or tiny inputs degrade to
// (diameter, 1e-9) so aspect ratios stay finite.
MinAreaRect min_area_rectangle(std::span<const Point> pts);

// total_area / area of the minimum enclosing circle of all vertices, in (0,1].
double reock_compactness(std::span<const Point> vertices, double total_area);

}  // namespace districting
