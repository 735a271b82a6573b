#ifndef PLANEFLOW_PREPROCESS_HPP
#define PLANEFLOW_PREPROCESS_HPP

#include <vector>

#include "planeflow/plane_graph.hpp"

namespace planeflow {

/// Output of a graph-rewriting stage. `origin[a]` is the input arc the new
/// arc stands for (kNoArc for gadget or split arcs); `reversed` is indexed by
/// input arc ids and marks arcs whose direction was flipped.
struct PreprocessResult {
  PlaneGraph graph;
  std::vector<ArcId> origin;
  std::vector<char> reversed;
  int cw_passes = 0;
};

/// One reorientation pass. Computes face potentials by a shortest-path sweep
/// of the dual (crossing an arc left-to-right costs its capacity, the other
/// way is free) and replaces the network by the residual of the induced
/// circulation. Unit-capacity arcs are kept or fully reversed; capacitated
/// arcs may split into a forward remainder and a parallel back arc. The
/// result has no clockwise cycle and the same max-flow value. Vertex set is
/// unchanged.
PreprocessResult remove_clockwise_cycles(const PlaneGraph &g);

/// Source gadget plus degree reduction: a new source with a single outgoing
/// arc (skipped when the source already has outdegree one and indegree zero),
/// then every non-terminal vertex of degree above three becomes a
/// counterclockwise cycle over its arc ends, attached in rotation order.
PreprocessResult reduce_degrees(const PlaneGraph &g);

/// Full pipeline: restrict to the component holding both terminals, reorient
/// until clockwise-free, reduce degrees, and verify the reorientation stayed
/// a fixed point.
PreprocessResult preprocess(const PlaneGraph &g);

/// Composes b-after-a into a single result relative to a's input.
PreprocessResult compose(const PreprocessResult &a, const PreprocessResult &b);

}  // namespace planeflow

#endif  // PLANEFLOW_PREPROCESS_HPP
