#include "districting/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "districting/region.hpp"
#include "districting/rng.hpp"

namespace districting {

namespace {

constexpr int kNeighborListThreshold = 40;
constexpr int kNeighborListSize = 16;

// Distances with the depot stored at index m (customers 0..m-1).
struct DistanceTable {
  int m;
  std::vector<double> d;  // (m+1) x (m+1), row-major

  DistanceTable(Point depot, std::span<const Point> customers)
      : m(static_cast<int>(customers.size())), d((m + 1) * (m + 1), 0.0) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        double v = distance(customers[i], customers[j]);
        d[i * (m + 1) + j] = v;
        d[j * (m + 1) + i] = v;
      }
      double v = distance(customers[i], depot);
      d[i * (m + 1) + m] = v;
      d[m * (m + 1) + i] = v;
    }
  }

  double operator()(int i, int j) const { return d[i * (m + 1) + j]; }
  int depot() const { return m; }
};

double length_of(const DistanceTable& dist, const std::vector<int>& order) {
  if (order.empty()) return 0.0;
  double len = dist(dist.depot(), order.front());
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    len += dist(order[i], order[i + 1]);
  len += dist(order.back(), dist.depot());
  return len;
}

std::vector<int> nearest_neighbor_order(const DistanceTable& dist, Rng& rng) {
  const int m = dist.m;
  std::vector<int> order;
  order.reserve(m);
  std::vector<char> used(m, 0);
  int current = dist.depot();
  std::vector<int> ties;
  for (int step = 0; step < m; ++step) {
    double best = std::numeric_limits<double>::infinity();
    ties.clear();
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      double v = dist(current, j);
      if (v < best - 1e-12) {
        best = v;
        ties.assign(1, j);
      } else if (v <= best + 1e-12) {
        ties.push_back(j);
      }
    }
    int pick = ties.size() == 1
                   ? ties[0]
                   : ties[rng.uniform_int(static_cast<std::uint64_t>(ties.size()))];
    used[pick] = 1;
    order.push_back(pick);
    current = pick;
  }
  return order;
}

std::vector<std::vector<int>> nearest_lists(const DistanceTable& dist) {
  const int m = dist.m;
  std::vector<std::vector<int>> lists(m);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) {
    idx.clear();
    for (int j = 0; j < m; ++j)
      if (j != i) idx.push_back(j);
    int keep = std::min<int>(kNeighborListSize, static_cast<int>(idx.size()));
    std::partial_sort(idx.begin(), idx.begin() + keep, idx.end(),
                      [&](int a, int b) { return dist(i, a) < dist(i, b); });
    lists[i].assign(idx.begin(), idx.begin() + keep);
  }
  return lists;
}

// First-improvement 2-opt: reverse order[i..j]. Returns true if any move fired.
bool two_opt_pass(const DistanceTable& dist, std::vector<int>& order,
                  const std::vector<std::vector<int>>* neighbors,
                  std::vector<int>& pos) {
  const int m = static_cast<int>(order.size());
  bool improved_any = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < m - 1 && !improved; ++i) {
      int prev_i = i == 0 ? dist.depot() : order[i - 1];
      if (neighbors) {
        for (int cand : (*neighbors)[order[i]]) {
          int j = pos[cand];
          if (j <= i) continue;
          int next_j = j == m - 1 ? dist.depot() : order[j + 1];
          double delta = dist(prev_i, order[j]) + dist(order[i], next_j) -
                         dist(prev_i, order[i]) - dist(order[j], next_j);
          if (delta < -1e-12) {
            std::reverse(order.begin() + i, order.begin() + j + 1);
            for (int k = i; k <= j; ++k) pos[order[k]] = k;
            improved = improved_any = true;
            break;
          }
        }
      } else {
        for (int j = i + 1; j < m; ++j) {
          int next_j = j == m - 1 ? dist.depot() : order[j + 1];
          double delta = dist(prev_i, order[j]) + dist(order[i], next_j) -
                         dist(prev_i, order[i]) - dist(order[j], next_j);
          if (delta < -1e-12) {
            std::reverse(order.begin() + i, order.begin() + j + 1);
            for (int k = i; k <= j; ++k) pos[order[k]] = k;
            improved = improved_any = true;
            break;
          }
        }
      }
    }
  }
  return improved_any;
}

// First-improvement Or-opt: relocate a segment of 1..3 customers.
bool or_opt_pass(const DistanceTable& dist, std::vector<int>& order,
                 std::vector<int>& pos) {
  const int m = static_cast<int>(order.size());
  bool improved_any = false;
  bool improved = true;
  std::vector<int> trimmed;
  while (improved) {
    improved = false;
    for (int len = 1; len <= 3 && !improved; ++len) {
      if (len >= m) break;
      for (int i = 0; i + len <= m && !improved; ++i) {
        int prev = i == 0 ? dist.depot() : order[i - 1];
        int next = i + len == m ? dist.depot() : order[i + len];
        int seg_first = order[i];
        int seg_last = order[i + len - 1];
        double removal_delta = dist(prev, next) - dist(prev, seg_first) -
                               dist(seg_last, next);
        trimmed.clear();
        for (int k = 0; k < m; ++k)
          if (k < i || k >= i + len) trimmed.push_back(order[k]);
        const int tn = static_cast<int>(trimmed.size());
        for (int g = 0; g <= tn && !improved; ++g) {
          int a = g == 0 ? dist.depot() : trimmed[g - 1];
          int b = g == tn ? dist.depot() : trimmed[g];
          if (a == prev && b == next) continue;  // original spot
          double insertion_delta =
              dist(a, seg_first) + dist(seg_last, b) - dist(a, b);
          if (removal_delta + insertion_delta < -1e-12) {
            std::vector<int> rebuilt;
            rebuilt.reserve(m);
            rebuilt.insert(rebuilt.end(), trimmed.begin(), trimmed.begin() + g);
            rebuilt.insert(rebuilt.end(), order.begin() + i,
                           order.begin() + i + len);
            rebuilt.insert(rebuilt.end(), trimmed.begin() + g, trimmed.end());
            order = std::move(rebuilt);
            for (int k = 0; k < m; ++k) pos[order[k]] = k;
            improved = improved_any = true;
          }
        }
      }
    }
  }
  return improved_any;
}

}  // namespace

double tour_length(Point depot, std::span<const Point> customers,
                   std::span<const int> order) {
  if (order.empty()) return 0.0;
  double len = distance(depot, customers[order.front()]);
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    len += distance(customers[order[i]], customers[order[i + 1]]);
  len += distance(customers[order.back()], depot);
  return len;
}

Tour tsp_cost(Point depot, std::span<const Point> customers,
              std::uint64_t seed) {
  const int m = static_cast<int>(customers.size());
  if (m == 0) return {};
  if (m == 1) return {{0}, 2.0 * distance(depot, customers[0])};

  DistanceTable dist(depot, customers);
  Rng rng(seed);
  std::vector<int> order = nearest_neighbor_order(dist, rng);
  std::vector<int> pos(m);
  for (int k = 0; k < m; ++k) pos[order[k]] = k;

  std::vector<std::vector<int>> lists;
  const std::vector<std::vector<int>>* neighbors = nullptr;
  if (m > kNeighborListThreshold) {
    lists = nearest_lists(dist);
    neighbors = &lists;
  }

  bool improved = true;
  while (improved) {
    improved = two_opt_pass(dist, order, neighbors, pos);
    improved |= or_opt_pass(dist, order, pos);
  }
  return {order, length_of(dist, order)};
}

namespace {

void exact_dfs(const DistanceTable& dist, std::vector<int>& partial,
               std::vector<char>& used, double partial_len, double& best_len,
               std::vector<int>& best_order) {
  const int m = dist.m;
  if (partial_len >= best_len) return;
  if (static_cast<int>(partial.size()) == m) {
    // Canonical direction: evaluate each undirected tour once.
    if (m > 1 && partial.front() > partial.back()) return;
    double total = partial_len + dist(partial.back(), dist.depot());
    if (total < best_len) {
      best_len = total;
      best_order = partial;
    }
    return;
  }
  int last = partial.empty() ? dist.depot() : partial.back();
  for (int j = 0; j < m; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    partial.push_back(j);
    exact_dfs(dist, partial, used, partial_len + dist(last, j), best_len,
              best_order);
    partial.pop_back();
    used[j] = 0;
  }
}

}  // namespace

Tour tsp_exact(Point depot, std::span<const Point> customers) {
  const int m = static_cast<int>(customers.size());
  if (m > 10)
    throw ValidationError("tsp_exact: refusing " + std::to_string(m) +
                          " customers (limit 10)");
  if (m == 0) return {};
  if (m == 1) return {{0}, 2.0 * distance(depot, customers[0])};

  DistanceTable dist(depot, customers);
  std::vector<int> partial, best_order;
  std::vector<char> used(m, 0);
  double best_len = std::numeric_limits<double>::infinity();
  partial.reserve(m);
  exact_dfs(dist, partial, used, 0.0, best_len, best_order);
  return {best_order, best_len};
}

}  // namespace districting
