#include "planeflow/plane_graph.hpp"

#include <algorithm>
#include <numeric>

namespace planeflow {

std::vector<Dart> TraversalTree::path_to(VertexId v) const {
  std::vector<Dart> path;
  VertexId cur = v;
  while (cur != root) {
    Dart d = parent_dart[cur];
    if (!d.valid()) return {};  // unreached
    path.push_back(d);
    cur = parent_vertex[cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

PlaneGraph PlaneGraph::build(VertexId vertex_count, std::vector<ArcRecord> arcs,
                             std::vector<std::vector<RotationEntry>> rotation,
                             VertexId source, VertexId sink, OuterFaceRef outer) {
  PlaneGraph g;
  g.n_ = vertex_count;
  if (vertex_count < 0) throw GraphError("negative vertex count");
  if (source < 0 || source >= vertex_count || sink < 0 || sink >= vertex_count)
    throw GraphError("source/sink out of range");
  if (source == sink) throw GraphError("source equals sink");

  const ArcId m = static_cast<ArcId>(arcs.size());
  for (ArcId a = 0; a < m; ++a) {
    const ArcRecord &r = arcs[a];
    if (r.tail < 0 || r.tail >= vertex_count || r.head < 0 || r.head >= vertex_count)
      throw GraphError("arc endpoint out of range");
    if (r.tail == r.head) throw GraphError("self-loop rejected");
    if (r.capacity < 1) throw GraphError("capacity must be positive");
  }
  g.arcs_ = std::move(arcs);

  if (static_cast<VertexId>(rotation.size()) != vertex_count)
    throw MalformedRotation("rotation table size mismatch");

  g.ccw_next_.assign(2 * static_cast<std::size_t>(m), kNoEnd);
  g.cw_next_.assign(2 * static_cast<std::size_t>(m), kNoEnd);
  g.first_end_.assign(vertex_count, kNoEnd);
  g.degree_.assign(vertex_count, 0);
  g.out_degree_.assign(vertex_count, 0);

  std::vector<char> seen(2 * static_cast<std::size_t>(m), 0);
  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto &rot = rotation[v];
    g.degree_[v] = static_cast<std::int32_t>(rot.size());
    std::vector<EndId> ends;
    ends.reserve(rot.size());
    for (const RotationEntry &re : rot) {
      if (re.arc < 0 || re.arc >= m) throw MalformedRotation("rotation references unknown arc");
      EndId e = re.kind == ArcEndKind::Tail ? tail_end(re.arc) : head_end(re.arc);
      if (g.end_vertex(e) != v)
        throw MalformedRotation("arc end listed at wrong vertex");
      if (seen[e]) throw MalformedRotation("arc end listed twice");
      seen[e] = 1;
      if (re.kind == ArcEndKind::Tail) ++g.out_degree_[v];
      ends.push_back(e);
    }
    if (!ends.empty()) {
      g.first_end_[v] = ends.front();
      const std::size_t k = ends.size();
      for (std::size_t i = 0; i < k; ++i) {
        g.ccw_next_[ends[i]] = ends[(i + 1) % k];
        g.cw_next_[ends[i]] = ends[(i + k - 1) % k];
      }
    }
  }
  for (ArcId a = 0; a < m; ++a) {
    if (!seen[tail_end(a)] || !seen[head_end(a)])
      throw MalformedRotation("arc end missing from rotations");
  }

  if (m == 0) {
    g.source_ = source;
    g.sink_ = sink;
    g.outer_ = OuterFaceRef{};
    return g;
  }
  if (outer.arc < 0 || outer.arc >= m) throw GraphError("outer face arc out of range");

  g.source_ = source;
  g.sink_ = sink;
  g.outer_ = outer;

  // Euler check per connected component, via face walks.
  FacePartition fp = g.face_walks();
  std::vector<VertexId> comp(vertex_count, kNoVertex);
  VertexId comp_count = 0;
  {
    std::vector<std::vector<VertexId>> adj(vertex_count);
    for (ArcId a = 0; a < m; ++a) {
      adj[g.arcs_[a].tail].push_back(g.arcs_[a].head);
      adj[g.arcs_[a].head].push_back(g.arcs_[a].tail);
    }
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (comp[v] != kNoVertex || adj[v].empty()) continue;
      comp[v] = comp_count;
      stack.push_back(v);
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[u]) {
          if (comp[w] == kNoVertex) {
            comp[w] = comp_count;
            stack.push_back(w);
          }
        }
      }
      ++comp_count;
    }
  }
  std::vector<std::int64_t> cv(comp_count, 0), ce(comp_count, 0), cf(comp_count, 0);
  for (VertexId v = 0; v < vertex_count; ++v)
    if (comp[v] != kNoVertex) ++cv[comp[v]];
  for (ArcId a = 0; a < m; ++a) ++ce[comp[g.arcs_[a].tail]];
  for (const auto &walk : fp.walks) {
    if (!walk.empty()) ++cf[comp[g.dart_origin(walk.front())]];
  }
  for (VertexId c = 0; c < comp_count; ++c) {
    if (cv[c] - ce[c] + cf[c] != 2)
      throw EulerViolation("rotation system is not a planar embedding (V-E+F != 2)");
  }

  // The sink must be incident to the unbounded face.
  bool sink_on_outer = false;
  for (Dart d : fp.walks[fp.outer_face]) {
    if (g.dart_origin(d) == sink || g.dart_target(d) == sink) {
      sink_on_outer = true;
      break;
    }
  }
  if (!sink_on_outer && g.degree_[sink] > 0)
    throw SinkNotOnOuterFace("sink is not on the unbounded face");

  return g;
}

std::optional<Dart> PlaneGraph::rightmost_arc(Dart d, TraverseMode mode,
                                              bool exclude_reversal,
                                              const std::vector<char> *forbidden) const {
  EndId anchor = entering_end(d);
  for (EndId e = ccw_next_[anchor]; e != anchor; e = ccw_next_[e]) {
    if (!end_leaves_in_mode(e, mode)) continue;
    if (forbidden && (*forbidden)[end_arc(e)]) continue;
    return dart_leaving(e);
  }
  // Only the entering slot remains: the reversal of d.
  if (!exclude_reversal && end_leaves_in_mode(anchor, mode) &&
      !(forbidden && (*forbidden)[end_arc(anchor)]))
    return dart_leaving(anchor);
  return std::nullopt;
}

std::optional<Dart> PlaneGraph::leftmost_arc(Dart d, TraverseMode mode,
                                             bool exclude_reversal,
                                             const std::vector<char> *forbidden) const {
  EndId anchor = entering_end(d);
  for (EndId e = cw_next_[anchor]; e != anchor; e = cw_next_[e]) {
    if (!end_leaves_in_mode(e, mode)) continue;
    if (forbidden && (*forbidden)[end_arc(e)]) continue;
    return dart_leaving(e);
  }
  if (!exclude_reversal && end_leaves_in_mode(anchor, mode) &&
      !(forbidden && (*forbidden)[end_arc(anchor)]))
    return dart_leaving(anchor);
  return std::nullopt;
}

TraversalTree PlaneGraph::guided_dfs(Dart start, ScanOrder order,
                                     const std::function<bool(VertexId)> &stop,
                                     const std::vector<char> *forbidden,
                                     TraverseMode mode) const {
  TraversalTree tree;
  tree.root = dart_origin(start);
  tree.parent_dart.assign(n_, Dart{});
  tree.parent_vertex.assign(n_, kNoVertex);
  tree.visit_order.clear();

  std::vector<char> visited(n_, 0);
  const auto next_end = [&](EndId e) {
    return order == ScanOrder::RightFirst ? ccw_next_[e] : cw_next_[e];
  };

  struct Frame {
    VertexId v;
    EndId anchor;   // scan terminates when returning to this end
    EndId scan;     // candidate to examine next, kNoEnd when done
    bool include_anchor;
  };

  std::vector<Frame> stack;
  visited[tree.root] = 1;
  tree.visit_order.push_back(tree.root);
  EndId root_anchor = leaving_end(start);
  stack.push_back(Frame{tree.root, root_anchor, root_anchor, true});

  while (!stack.empty()) {
    Frame &f = stack.back();
    if (f.scan == kNoEnd) {
      stack.pop_back();
      continue;
    }
    EndId e = f.scan;
    // Advance the cursor before possibly descending.
    EndId nxt = next_end(e);
    f.scan = (nxt == f.anchor) ? kNoEnd : nxt;
    if (!f.include_anchor && e == f.anchor) continue;

    if (!end_leaves_in_mode(e, mode)) continue;
    if (forbidden && (*forbidden)[end_arc(e)]) continue;
    Dart g = dart_leaving(e);
    VertexId w = dart_target(g);
    if (visited[w]) continue;
    visited[w] = 1;
    tree.parent_dart[w] = g;
    tree.parent_vertex[w] = f.v;
    tree.visit_order.push_back(w);
    if (stop && stop(w)) continue;
    EndId anchor = entering_end(g);
    stack.push_back(Frame{w, anchor, next_end(anchor) == anchor ? kNoEnd : next_end(anchor), false});
  }
  return tree;
}

FacePartition PlaneGraph::face_walks() const {
  FacePartition fp;
  const ArcId m = arc_count();
  fp.face_of_dart.assign(2 * static_cast<std::size_t>(m), -1);
  for (ArcId a = 0; a < m; ++a) {
    for (int half = 0; half < 2; ++half) {
      Dart d{a, half == 0};
      int di = dart_index(d);
      if (fp.face_of_dart[di] != -1) continue;
      std::int32_t face = static_cast<std::int32_t>(fp.walks.size());
      std::vector<Dart> walk;
      Dart cur = d;
      while (fp.face_of_dart[dart_index(cur)] == -1) {
        fp.face_of_dart[dart_index(cur)] = face;
        walk.push_back(cur);
        // The face lies left of cur; continue with the dart leaving the
        // entered vertex through the clockwise-next end slot.
        EndId e = entering_end(cur);
        cur = dart_leaving(cw_next_[e]);
      }
      fp.walks.push_back(std::move(walk));
    }
  }
  if (outer_.arc != kNoArc)
    fp.outer_face = fp.face_of_dart[dart_index(outer_dart())];
  return fp;
}

std::vector<RotationEntry> PlaneGraph::rotation_of(VertexId v) const {
  std::vector<RotationEntry> rot;
  EndId e0 = first_end_[v];
  if (e0 == kNoEnd) return rot;
  EndId e = e0;
  do {
    rot.push_back(RotationEntry{end_arc(e), end_kind(e)});
    e = ccw_next_[e];
  } while (e != e0);
  return rot;
}

}  // namespace planeflow
