#ifndef PLANEFLOW_ORACLE_HPP
#define PLANEFLOW_ORACLE_HPP

#include <optional>
#include <vector>

#include "planeflow/plane_graph.hpp"

namespace planeflow {

/// Arc ids lying on at least one simple s,t-path.
struct UsefulSet {
  std::vector<char> useful;  // indexed by arc id
  std::int64_t path_count = 0;

  bool operator==(const UsefulSet &o) const { return useful == o.useful; }
};

/// Exact usefulness by exhaustive simple-path enumeration. Guarded: throws
/// TooLarge past `max_arcs` or when the step budget is exhausted.
UsefulSet brute_useful(const PlaneGraph &g, int max_arcs = 40,
                       std::int64_t step_budget = 10'000'000);

/// Exact max s,t-flow value, shortest-augmenting-path method.
std::int64_t max_flow_value(const PlaneGraph &g);

/// Independent check for tests: min over all vertex-subset cuts, enumerated
/// exhaustively. Requires small n.
std::int64_t min_cut_by_enumeration(const PlaneGraph &g, int max_vertices = 20);

struct CycleWithOrientation {
  std::vector<ArcId> arcs;  // in traversal order
};

/// Desk-scale oracle: some directed simple cycle whose enclosed region lies
/// right of the traversal direction, or nullopt. Enumerates simple cycles,
/// classifying each by dual region growing from the outer face. Throws
/// TooLarge past `cycle_cap`.
std::optional<CycleWithOrientation> find_clockwise_cycle(const PlaneGraph &g,
                                                         std::int64_t cycle_cap = 10'000);

}  // namespace planeflow

#endif  // PLANEFLOW_ORACLE_HPP
