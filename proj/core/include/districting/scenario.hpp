#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "districting/region.hpp"

namespace districting {

enum class Split { Train, Test };

std::string split_name(Split s);
Split split_from_name(const std::string& name);

// Per-unit customer point sets, one list per (unit, scenario). Request counts
// are Poisson with mean kappa * population; locations uniform in the unit.
struct ScenarioSet {
  Split split = Split::Train;
  double kappa = 0.0;
  std::uint64_t seed = 0;  // master seed, sub-streams derived per (unit, t)
  int count = 0;           // scenarios per unit
  std::vector<std::vector<std::vector<Point>>> per_unit;  // [unit][t] -> points

  int num_units() const { return static_cast<int>(per_unit.size()); }
};

ScenarioSet sample_scenarios(const RegionModel& region, double kappa, int count,
                             std::uint64_t seed, Split split);

// Compounded demand of a district for one scenario index, members in id order.
std::vector<Point> district_scenario(const ScenarioSet& set, const District& d,
                                     int t_index);

void save_scenarios(const ScenarioSet& set, const std::string& path);
ScenarioSet load_scenarios(const std::string& path);

}  // namespace districting
