#ifndef PLANEFLOW_GENERATOR_HPP
#define PLANEFLOW_GENERATOR_HPP

#include <cstdint>

#include "planeflow/plane_graph.hpp"

namespace planeflow {

enum class GenShape : std::uint8_t { Grid, RandomPlanar };

struct GenOptions {
  std::uint64_t seed = 1;
  GenShape shape = GenShape::Grid;
  int width = 3;   // Grid
  int height = 3;  // Grid
  int vertices = 12;  // RandomPlanar target size before thinning
  double orientation_bias = 0.5;  // probability an edge keeps its canonical direction
  std::int64_t cap_lo = 1;
  std::int64_t cap_hi = 1;
  double thin_probability = 0.35;  // RandomPlanar: chance an interior edge is dropped
};

/// Deterministic per options. Grid: w*h lattice with independently oriented
/// edges, sink at a corner, source alternating interior/boundary by seed.
/// RandomPlanar: randomly oriented, randomly thinned stacked triangulation of
/// a disk, sink on the outer triangle. Output always passes PlaneGraph::build.
PlaneGraph gen_instance(const GenOptions &opt);

}  // namespace planeflow

#endif  // PLANEFLOW_GENERATOR_HPP
