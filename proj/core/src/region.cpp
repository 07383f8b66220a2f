#include "districting/region.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

#include "districting/rng.hpp"

namespace districting {

using nlohmann::json;

void RegionModel::set_depot(Point p) {
  depot = p;
  for (BasicUnit& u : units) u.depot_distance = distance_to_polygon(p, u.boundary);
}

bool RegionModel::is_connected_district(const District& d) const {
  if (d.empty()) return false;
  std::set<int> members(d.begin(), d.end());
  std::vector<int> stack{d.front()};
  std::set<int> seen{d.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adjacency[v]) {
      if (members.count(u) && !seen.count(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen.size() == members.size();
}

std::vector<Point> RegionModel::district_vertices(const District& d) const {
  std::vector<Point> pts;
  for (int id : d) {
    const Polygon& poly = units[id].boundary;
    pts.insert(pts.end(), poly.begin(), poly.end());
  }
  return pts;
}

double RegionModel::district_area(const District& d) const {
  double a = 0.0;
  for (int id : d) a += units[id].area;
  return a;
}

Point RegionModel::centroid() const {
  double total = 0.0;
  Point c{0, 0};
  for (const BasicUnit& u : units) {
    Point uc = polygon_centroid(u.boundary);
    c = c + u.area * uc;
    total += u.area;
  }
  return (1.0 / total) * c;
}

BoundingBox RegionModel::bounds() const {
  std::vector<Point> all;
  for (const BasicUnit& u : units)
    all.insert(all.end(), u.boundary.begin(), u.boundary.end());
  return bounding_box(all);
}

namespace {

constexpr double kSnap = 1e-9;

struct SnappedPoint {
  long long x, y;
  auto operator<=>(const SnappedPoint&) const = default;
};

SnappedPoint snap(Point p) {
  return {static_cast<long long>(std::llround(p.x / kSnap)),
          static_cast<long long>(std::llround(p.y / kSnap))};
}

bool segments_overlap(Point a, Point b, Point c, Point d) {
  auto cross = [](Point o, Point p, Point q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
  };
  if (std::abs(cross(a, b, c)) > 1e-9 || std::abs(cross(a, b, d)) > 1e-9)
    return false;
  // Collinear: positive-length overlap of the parameter intervals.
  Point dir = b - a;
  double len2 = dir.x * dir.x + dir.y * dir.y;
  if (len2 < 1e-18) return false;
  double tc = ((c.x - a.x) * dir.x + (c.y - a.y) * dir.y) / len2;
  double td = ((d.x - a.x) * dir.x + (d.y - a.y) * dir.y) / len2;
  double lo = std::max(0.0, std::min(tc, td));
  double hi = std::min(1.0, std::max(tc, td));
  return (hi - lo) * std::sqrt(len2) > 1e-9;
}

void populate_derived_fields(BasicUnit& u, Point depot) {
  if (u.boundary.size() < 3)
    throw ValidationError("unit " + std::to_string(u.id) + ": polygon has " +
                          std::to_string(u.boundary.size()) + " vertices");
  u.area = polygon_area(u.boundary);
  u.perimeter = polygon_perimeter(u.boundary);
  if (u.area <= 0.0)
    throw ValidationError("unit " + std::to_string(u.id) + ": zero area");
  u.density = u.population / u.area;
  u.depot_distance = distance_to_polygon(depot, u.boundary);
}

}  // namespace

std::vector<std::pair<int, int>> derive_adjacency(
    const std::vector<BasicUnit>& units) {
  const int n = static_cast<int>(units.size());
  // Candidate pairs via shared snapped vertices.
  std::map<SnappedPoint, std::vector<int>> by_vertex;
  for (int i = 0; i < n; ++i)
    for (const Point& p : units[i].boundary) {
      auto& owners = by_vertex[snap(p)];
      if (owners.empty() || owners.back() != i) owners.push_back(i);
    }
  std::map<std::pair<int, int>, int> shared_count;
  for (auto& [pt, owners] : by_vertex) {
    std::vector<int> uniq = owners;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t a = 0; a < uniq.size(); ++a)
      for (std::size_t b = a + 1; b < uniq.size(); ++b)
        shared_count[{uniq[a], uniq[b]}]++;
  }
  std::set<std::pair<int, int>> result;
  for (auto& [pair, count] : shared_count)
    if (count >= 2) result.insert(pair);

  // Bounding-box prefilter for the segment-overlap rule (partial edges).
  std::vector<BoundingBox> boxes(n);
  for (int i = 0; i < n; ++i) boxes[i] = bounding_box(units[i].boundary);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (result.count({i, j})) continue;
      if (boxes[i].max_x < boxes[j].min_x - kSnap ||
          boxes[j].max_x < boxes[i].min_x - kSnap ||
          boxes[i].max_y < boxes[j].min_y - kSnap ||
          boxes[j].max_y < boxes[i].min_y - kSnap)
        continue;
      const Polygon& pi = units[i].boundary;
      const Polygon& pj = units[j].boundary;
      bool found = false;
      for (std::size_t a = 0; a < pi.size() && !found; ++a)
        for (std::size_t b = 0; b < pj.size() && !found; ++b)
          found = segments_overlap(pi[a], pi[(a + 1) % pi.size()], pj[b],
                                   pj[(b + 1) % pj.size()]);
      if (found) result.insert({i, j});
    }
  }
  return {result.begin(), result.end()};
}

namespace {

std::vector<std::vector<int>> build_neighbor_lists(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());
  return adj;
}

}  // namespace

void validate_region(const RegionModel& region) {
  const int n = region.size();
  if (n == 0) throw ValidationError("region has no units");
  for (int i = 0; i < n; ++i) {
    const BasicUnit& u = region.units[i];
    if (u.id != i)
      throw ValidationError("unit ids must be dense 0..n-1; found id " +
                            std::to_string(u.id) + " at position " +
                            std::to_string(i));
    if (u.boundary.size() < 3)
      throw ValidationError("unit " + std::to_string(i) + ": polygon has " +
                            std::to_string(u.boundary.size()) + " vertices");
    if (!is_simple_polygon(u.boundary))
      throw ValidationError("unit " + std::to_string(i) +
                            ": polygon is self-intersecting");
    if (u.population <= 0.0)
      throw ValidationError("unit " + std::to_string(i) +
                            ": population must be positive");
  }
  for (auto [i, j] : region.edges) {
    if (i == j)
      throw ValidationError("adjacency self-loop at unit " + std::to_string(i));
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw ValidationError("adjacency edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  }
  // Whole-region connectivity.
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : region.adjacency[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  if (reached != n)
    throw ValidationError("region graph is disconnected (" +
                          std::to_string(reached) + " of " + std::to_string(n) +
                          " units reachable from unit 0)");
}

RegionModel load_region(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open region file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("region file " + path + ": " + e.what());
  }

  RegionModel region;
  try {
    if (!doc.contains("units")) throw ParseError("missing field: units");
    if (!doc.contains("depot")) throw ParseError("missing field: depot");
    region.depot = {doc["depot"].at(0).get<double>(),
                    doc["depot"].at(1).get<double>()};
    for (const auto& ju : doc["units"]) {
      BasicUnit u;
      u.id = ju.at("id").get<int>();
      u.population = ju.at("population").get<double>();
      for (const auto& jp : ju.at("polygon"))
        u.boundary.push_back({jp.at(0).get<double>(), jp.at(1).get<double>()});
      region.units.push_back(std::move(u));
    }
    if (doc.contains("adjacency")) {
      for (const auto& je : doc["adjacency"]) {
        int a = je.at(0).get<int>(), b = je.at(1).get<int>();
        region.edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(region.edges.begin(), region.edges.end());
      region.edges.erase(std::unique(region.edges.begin(), region.edges.end()),
                         region.edges.end());
    }
  } catch (const json::exception& e) {
    throw ParseError("region file " + path + ": " + e.what());
  }

  for (BasicUnit& u : region.units) populate_derived_fields(u, region.depot);
  if (region.edges.empty()) region.edges = derive_adjacency(region.units);
  region.adjacency = build_neighbor_lists(region.size(), region.edges);
  validate_region(region);
  return region;
}

void save_region(const RegionModel& region, const std::string& path) {
  json doc;
  doc["depot"] = {region.depot.x, region.depot.y};
  doc["units"] = json::array();
  for (const BasicUnit& u : region.units) {
    json ju;
    ju["id"] = u.id;
    ju["population"] = u.population;
    ju["polygon"] = json::array();
    for (const Point& p : u.boundary) ju["polygon"].push_back({p.x, p.y});
    doc["units"].push_back(std::move(ju));
  }
  doc["adjacency"] = json::array();
  for (auto [i, j] : region.edges) doc["adjacency"].push_back({i, j});
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write region file: " + path);
  out << doc.dump(2) << "\n";
}

std::uint64_t district_key(const District& d) {
  std::uint64_t h = 0x51ab5e1fULL;
  for (int id : d) h = hash_combine(h, static_cast<std::uint64_t>(id));
  return h;
}

}  // namespace districting
