#ifndef PLANEFLOW_PLANE_GRAPH_HPP
#define PLANEFLOW_PLANE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planeflow {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using EndId = std::int32_t;  // arc end slot: arc*2 (tail end) or arc*2+1 (head end)

constexpr VertexId kNoVertex = -1;
constexpr ArcId kNoArc = -1;
constexpr EndId kNoEnd = -1;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedRotation : GraphError {
  using GraphError::GraphError;
};
struct EulerViolation : GraphError {
  using GraphError::GraphError;
};
struct SinkNotOnOuterFace : GraphError {
  using GraphError::GraphError;
};
struct TooLarge : GraphError {
  using GraphError::GraphError;
};

enum class ArcEndKind : std::uint8_t { Tail = 0, Head = 1 };

/// One traversal handle of an arc: with the arc's direction or against it.
struct Dart {
  ArcId arc = kNoArc;
  bool with_arc = true;

  bool valid() const { return arc != kNoArc; }
  Dart reversed() const { return Dart{arc, !with_arc}; }
  bool operator==(const Dart &) const = default;
};

/// Encodes a dart as 2*arc + (with ? 0 : 1); handy as an array index.
inline int dart_index(Dart d) { return 2 * d.arc + (d.with_arc ? 0 : 1); }
inline Dart dart_from_index(int idx) {
  return Dart{static_cast<ArcId>(idx / 2), (idx % 2) == 0};
}

struct ArcRecord {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  std::int64_t capacity = 1;
};

/// Which face side of an arc names the unbounded face in the input.
enum class FaceSide : std::uint8_t { Left, Right };

struct OuterFaceRef {
  ArcId arc = kNoArc;
  FaceSide side = FaceSide::Left;
};

/// One arc end as it appears in a vertex rotation.
struct RotationEntry {
  ArcId arc = kNoArc;
  ArcEndKind kind = ArcEndKind::Tail;
};

struct TraversalTree {
  VertexId root = kNoVertex;
  std::vector<Dart> parent_dart;        // entering dart per reached vertex, invalid if unreached
  std::vector<VertexId> parent_vertex;  // tree parent, kNoVertex if unreached/root
  std::vector<VertexId> visit_order;    // discovery order

  bool reached(VertexId v) const { return parent_dart[v].valid() || v == root; }
  /// Darts of the discovery path root -> v (empty if v == root).
  std::vector<Dart> path_to(VertexId v) const;
};

enum class ScanOrder : std::uint8_t { RightFirst, LeftFirst };
enum class TraverseMode : std::uint8_t { Forward, Reverse };

struct FacePartition {
  std::vector<std::int32_t> face_of_dart;        // indexed by dart_index
  std::vector<std::vector<Dart>> walks;          // face id -> darts in walk order
  std::int32_t outer_face = -1;
};

/// Immutable plane directed multigraph: a rotation system with designated
/// source, sink and outer face. Arc ends carry cyclic next/prev links so
/// right-most / left-most queries are O(1) index hops.
class PlaneGraph {
 public:
  /// Validates and builds. Rotations list incident arc ends per vertex in
  /// counterclockwise order. Throws MalformedRotation, EulerViolation,
  /// SinkNotOnOuterFace.
  static PlaneGraph build(VertexId vertex_count, std::vector<ArcRecord> arcs,
                          std::vector<std::vector<RotationEntry>> rotation,
                          VertexId source, VertexId sink, OuterFaceRef outer);

  VertexId vertex_count() const { return n_; }
  ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }
  const ArcRecord &arc(ArcId a) const { return arcs_[a]; }
  const std::vector<ArcRecord> &arcs() const { return arcs_; }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }
  OuterFaceRef outer_face() const { return outer_; }

  // --- arc end navigation ------------------------------------------------
  static EndId tail_end(ArcId a) { return 2 * a; }
  static EndId head_end(ArcId a) { return 2 * a + 1; }
  static ArcId end_arc(EndId e) { return e / 2; }
  static ArcEndKind end_kind(EndId e) {
    return (e % 2) == 0 ? ArcEndKind::Tail : ArcEndKind::Head;
  }
  VertexId end_vertex(EndId e) const {
    return end_kind(e) == ArcEndKind::Tail ? arcs_[end_arc(e)].tail
                                           : arcs_[end_arc(e)].head;
  }
  EndId ccw_next(EndId e) const { return ccw_next_[e]; }
  EndId cw_next(EndId e) const { return cw_next_[e]; }
  /// Some end at v (first of the input rotation), kNoEnd for isolated v.
  EndId first_end(VertexId v) const { return first_end_[v]; }
  std::int32_t degree(VertexId v) const { return degree_[v]; }
  std::int32_t out_degree(VertexId v) const { return out_degree_[v]; }
  std::int32_t in_degree(VertexId v) const { return degree_[v] - out_degree_[v]; }

  // --- darts ---------------------------------------------------------------
  VertexId dart_origin(Dart d) const {
    return d.with_arc ? arcs_[d.arc].tail : arcs_[d.arc].head;
  }
  VertexId dart_target(Dart d) const {
    return d.with_arc ? arcs_[d.arc].head : arcs_[d.arc].tail;
  }
  /// End slot through which d leaves its origin.
  EndId leaving_end(Dart d) const {
    return d.with_arc ? tail_end(d.arc) : head_end(d.arc);
  }
  /// End slot through which d enters its target.
  EndId entering_end(Dart d) const {
    return d.with_arc ? head_end(d.arc) : tail_end(d.arc);
  }
  /// Dart leaving end_vertex(e) along e (forward for tail ends, backward for
  /// head ends).
  Dart dart_leaving(EndId e) const {
    return Dart{end_arc(e), end_kind(e) == ArcEndKind::Tail};
  }

  /// Whether the end is usable as a departure under the given mode.
  bool end_leaves_in_mode(EndId e, TraverseMode mode) const {
    return mode == TraverseMode::Forward
               ? end_kind(e) == ArcEndKind::Tail
               : end_kind(e) == ArcEndKind::Head;
  }

  // --- guided queries ------------------------------------------------------
  /// Outgoing dart at dart_target(d) nearest to d in counterclockwise order
  /// (the sharpest right turn). Scans CCW from the entering end. Skips arcs
  /// in `forbidden` when given. `exclude_reversal` drops d's own arc taken
  /// backwards (only reachable in Reverse/from-head situations).
  std::optional<Dart> rightmost_arc(Dart d, TraverseMode mode = TraverseMode::Forward,
                                    bool exclude_reversal = true,
                                    const std::vector<char> *forbidden = nullptr) const;
  std::optional<Dart> leftmost_arc(Dart d, TraverseMode mode = TraverseMode::Forward,
                                   bool exclude_reversal = true,
                                   const std::vector<char> *forbidden = nullptr) const;

  /// Depth-first traversal expanding, at each vertex, outgoing darts starting
  /// from the right-most (resp. left-most) relative to the entering dart.
  /// Branches are not expanded past vertices satisfying `stop`. Deterministic.
  TraversalTree guided_dfs(Dart start, ScanOrder order,
                           const std::function<bool(VertexId)> &stop = nullptr,
                           const std::vector<char> *forbidden = nullptr,
                           TraverseMode mode = TraverseMode::Forward) const;

  /// Partition of all darts into faces (a dart's face lies on its left).
  FacePartition face_walks() const;

  /// The dart whose left face is the unbounded face.
  Dart outer_dart() const {
    return Dart{outer_.arc, outer_.side == FaceSide::Left};
  }

  /// Rotation of v as listed (CCW), for serialization.
  std::vector<RotationEntry> rotation_of(VertexId v) const;

 private:
  PlaneGraph() = default;

  VertexId n_ = 0;
  std::vector<ArcRecord> arcs_;
  std::vector<EndId> ccw_next_;
  std::vector<EndId> cw_next_;
  std::vector<EndId> first_end_;
  std::vector<std::int32_t> degree_;
  std::vector<std::int32_t> out_degree_;
  VertexId source_ = kNoVertex;
  VertexId sink_ = kNoVertex;
  OuterFaceRef outer_;
};

}  // namespace planeflow

#endif  // PLANEFLOW_PLANE_GRAPH_HPP
