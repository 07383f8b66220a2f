#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "districting/geometry.hpp"

namespace districting {

// File/flag problems the caller can fix; the CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasicUnit {
  int id = 0;
  Polygon boundary;
  double population = 0.0;      // xi_v
  double area = 0.0;            // a_v, shoelace (canonical)
  double perimeter = 0.0;       // q_v
  double density = 0.0;         // rho_v = xi_v / a_v
  double depot_distance = 0.0;  // delta_v, 0 when the depot is inside
};

// Sorted member ids; connectivity is relative to a region's adjacency.
using District = std::vector<int>;

struct RegionModel {
  std::vector<BasicUnit> units;
  std::vector<std::pair<int, int>> edges;  // i < j, each pair once
  std::vector<std::vector<int>> adjacency;  // neighbor lists, symmetric
  Point depot;

  int size() const { return static_cast<int>(units.size()); }

  // Rebinds the depot and recomputes every delta_v.
  void set_depot(Point p);

  bool is_connected_district(const District& d) const;

  // Union of the members' polygon vertices (Reock / rectangle inputs).
  std::vector<Point> district_vertices(const District& d) const;
  double district_area(const District& d) const;

  Point centroid() const;          // area-weighted over units
  BoundingBox bounds() const;
};

// Two units are adjacent iff their boundaries share at least two distinct
// snapped vertices or a collinear segment overlap (rook rule).
std::vector<std::pair<int, int>> derive_adjacency(
    const std::vector<BasicUnit>& units);

RegionModel load_region(const std::string& path);
void save_region(const RegionModel& region, const std::string& path);

// Validates invariants shared by loaded and generated regions; throws
// ValidationError naming the first violation.
void validate_region(const RegionModel& region);

std::uint64_t district_key(const District& d);

}  // namespace districting
