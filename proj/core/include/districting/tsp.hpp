#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "districting/geometry.hpp"

namespace districting {

struct Tour {
  std::vector<int> order;  // customer indices; depot implicit at both ends
  double length = 0.0;
};

double tour_length(Point depot, std::span<const Point> customers,
                   std::span<const int> order);

// Nearest-neighbor construction from the depot, then first-improvement 2-opt
// and Or-opt (segments of 1..3) to joint local optimality. The seed only
// breaks nearest-neighbor ties. Above 40 customers the 2-opt candidates are
// restricted to the 16 nearest neighbors of each point.
Tour tsp_cost(Point depot, std::span<const Point> customers,
              std::uint64_t seed = 0);

// Exhaustive permutation optimum (direction-canonical, branch-and-prune).
// Refuses more than 10 customers.
Tour tsp_exact(Point depot, std::span<const Point> customers);

}  // namespace districting
