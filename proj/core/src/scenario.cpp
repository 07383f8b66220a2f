#include "districting/scenario.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "districting/rng.hpp"

namespace districting {

using nlohmann::json;

std::string split_name(Split s) { return s == Split::Train ? "train" : "test"; }

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::Train;
  if (name == "test") return Split::Test;
  throw ParseError("unknown split: " + name);
}

namespace {

Point sample_point_in_polygon(const Polygon& poly, const BoundingBox& bb,
                              Rng& rng) {
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    Point p{rng.uniform(bb.min_x, bb.max_x), rng.uniform(bb.min_y, bb.max_y)};
    if (point_in_polygon(p, poly)) return p;
  }
  throw std::runtime_error("rejection sampling failed; degenerate polygon?");
}

}  // namespace

ScenarioSet sample_scenarios(const RegionModel& region, double kappa, int count,
                             std::uint64_t seed, Split split) {
  if (kappa <= 0.0) throw ValidationError("sample_scenarios: kappa must be > 0");
  if (count < 1) throw ValidationError("sample_scenarios: count must be >= 1");
  ScenarioSet set;
  set.split = split;
  set.kappa = kappa;
  set.seed = seed;
  set.count = count;
  set.per_unit.resize(region.size());
  for (int i = 0; i < region.size(); ++i) {
    const BasicUnit& unit = region.units[i];
    const BoundingBox bb = bounding_box(unit.boundary);
    const double mean = kappa * unit.population;
    set.per_unit[i].resize(count);
    for (int t = 0; t < count; ++t) {
      // Disjoint streams per (split, unit, t): Train and Test share no draws.
      Rng rng(derive_seed(seed, split_name(split), static_cast<std::uint64_t>(i),
                          static_cast<std::uint64_t>(t)));
      int requests = rng.poisson(mean);
      auto& pts = set.per_unit[i][t];
      pts.reserve(requests);
      for (int r = 0; r < requests; ++r)
        pts.push_back(sample_point_in_polygon(unit.boundary, bb, rng));
    }
  }
  return set;
}

std::vector<Point> district_scenario(const ScenarioSet& set, const District& d,
                                     int t_index) {
  if (t_index < 0 || t_index >= set.count)
    throw ValidationError("district_scenario: scenario index out of range");
  std::vector<Point> pts;
  for (int id : d) {
    if (id < 0 || id >= set.num_units())
      throw ValidationError("district_scenario: unknown unit id " +
                            std::to_string(id));
    const auto& unit_pts = set.per_unit[id][t_index];
    pts.insert(pts.end(), unit_pts.begin(), unit_pts.end());
  }
  return pts;
}

void save_scenarios(const ScenarioSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write scenario file: " + path);
  json header;
  header["split"] = split_name(set.split);
  header["kappa"] = set.kappa;
  header["seed"] = set.seed;
  header["count"] = set.count;
  header["units"] = set.num_units();
  out << header.dump() << "\n";
  for (int i = 0; i < set.num_units(); ++i) {
    for (int t = 0; t < set.count; ++t) {
      json rec;
      rec["split"] = split_name(set.split);
      rec["unit"] = i;
      rec["t"] = t;
      json pts = json::array();
      for (const Point& p : set.per_unit[i][t]) pts.push_back({p.x, p.y});
      rec["points"] = std::move(pts);
      out << rec.dump() << "\n";
    }
  }
}

ScenarioSet load_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("scenario file " + path + ": empty");
  ScenarioSet set;
  int line_no = 1;
  try {
    json header = json::parse(line);
    set.split = split_from_name(header.at("split").get<std::string>());
    set.kappa = header.at("kappa").get<double>();
    set.seed = header.at("seed").get<std::uint64_t>();
    set.count = header.at("count").get<int>();
    set.per_unit.resize(header.at("units").get<int>());
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      json rec = json::parse(line);
      int unit = rec.at("unit").get<int>();
      int t = rec.at("t").get<int>();
      if (unit < 0 || unit >= set.num_units() || t < 0 || t >= set.count)
        throw ParseError("record out of range");
      auto& per_t = set.per_unit[unit];
      if (per_t.empty()) per_t.resize(set.count);
      auto& pts = per_t[t];
      for (const auto& jp : rec.at("points"))
        pts.push_back({jp.at(0).get<double>(), jp.at(1).get<double>()});
    }
  } catch (const json::exception& e) {
    throw ParseError("scenario file " + path + " line " +
                     std::to_string(line_no) + ": " + e.what());
  }
  for (auto& per_t : set.per_unit)
    if (per_t.empty()) per_t.resize(set.count);
  return set;
}

}  // namespace districting
