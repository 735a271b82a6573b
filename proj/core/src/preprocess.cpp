#include "planeflow/preprocess.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace planeflow {

namespace {

PreprocessResult identity_result(const PlaneGraph &g) {
  PreprocessResult r{g, {}, std::vector<char>(g.arc_count(), 0), 0};
  r.origin.resize(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) r.origin[a] = a;
  return r;
}

/// Keep only the undirected component containing both terminals; ids are
/// compacted, terminals always survive.
PreprocessResult restrict_to_terminal_component(const PlaneGraph &g) {
  const VertexId n = g.vertex_count();
  std::vector<VertexId> comp(n, kNoVertex);
  std::vector<std::vector<VertexId>> adj(n);
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    adj[g.arc(a).tail].push_back(g.arc(a).head);
    adj[g.arc(a).head].push_back(g.arc(a).tail);
  }
  VertexId cc = 0;
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    if (comp[v] != kNoVertex) continue;
    comp[v] = cc;
    stack.push_back(v);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : adj[u])
        if (comp[w] == kNoVertex) {
          comp[w] = cc;
          stack.push_back(w);
        }
    }
    ++cc;
  }
  const bool same = comp[g.source()] == comp[g.sink()];
  const VertexId keep_comp = same ? comp[g.source()] : kNoVertex;

  std::vector<VertexId> vmap(n, kNoVertex);
  VertexId nv = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (comp[v] == keep_comp && !adj[v].empty()) vmap[v] = nv++;
  }
  if (vmap[g.source()] == kNoVertex) vmap[g.source()] = nv++;
  if (vmap[g.sink()] == kNoVertex) vmap[g.sink()] = nv++;

  PreprocessResult r;
  r.reversed.assign(g.arc_count(), 0);
  std::vector<ArcId> amap(g.arc_count(), kNoArc);
  std::vector<ArcRecord> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!same || comp[g.arc(a).tail] != keep_comp) continue;
    amap[a] = static_cast<ArcId>(arcs.size());
    arcs.push_back(ArcRecord{vmap[g.arc(a).tail], vmap[g.arc(a).head], g.arc(a).capacity});
    r.origin.push_back(a);
  }
  std::vector<std::vector<RotationEntry>> rot(nv);
  for (VertexId v = 0; v < n; ++v) {
    if (vmap[v] == kNoVertex) continue;
    for (const RotationEntry &re : g.rotation_of(v))
      if (amap[re.arc] != kNoArc) rot[vmap[v]].push_back(RotationEntry{amap[re.arc], re.kind});
  }
  OuterFaceRef outer;
  if (!arcs.empty()) outer = OuterFaceRef{amap[g.outer_face().arc], g.outer_face().side};
  r.graph = PlaneGraph::build(nv, std::move(arcs), std::move(rot), vmap[g.source()],
                              vmap[g.sink()], outer);
  return r;
}

// Dual shortest-path potentials: crossing arc a from its left face to its
// right face costs capacity(a), the reverse crossing is free.
std::vector<std::int64_t> face_potentials(const PlaneGraph &g, const FacePartition &fp) {
  const std::size_t faces = fp.walks.size();
  struct DualArc {
    std::int32_t to;
    std::int64_t w;
  };
  std::vector<std::vector<DualArc>> dual(faces);
  bool unit = true;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    std::int32_t left = fp.face_of_dart[dart_index(Dart{a, true})];
    std::int32_t right = fp.face_of_dart[dart_index(Dart{a, false})];
    dual[left].push_back(DualArc{right, g.arc(a).capacity});
    dual[right].push_back(DualArc{left, 0});
    if (g.arc(a).capacity != 1) unit = false;
  }
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> dist(faces, inf);
  dist[fp.outer_face] = 0;
  if (unit) {
    std::deque<std::int32_t> dq;
    dq.push_back(fp.outer_face);
    while (!dq.empty()) {
      std::int32_t f = dq.front();
      dq.pop_front();
      for (const DualArc &e : dual[f]) {
        std::int64_t nd = dist[f] + e.w;
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          if (e.w == 0)
            dq.push_front(e.to);
          else
            dq.push_back(e.to);
        }
      }
    }
  } else {
    using Item = std::pair<std::int64_t, std::int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, fp.outer_face);
    while (!pq.empty()) {
      auto [d, f] = pq.top();
      pq.pop();
      if (d > dist[f]) continue;
      for (const DualArc &e : dual[f]) {
        std::int64_t nd = d + e.w;
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          pq.emplace(nd, e.to);
        }
      }
    }
  }
  return dist;
}

}  // namespace

PreprocessResult remove_clockwise_cycles(const PlaneGraph &g) {
  if (g.arc_count() == 0) return identity_result(g);
  FacePartition fp = g.face_walks();
  std::vector<std::int64_t> p = face_potentials(g, fp);

  // Circulation value per arc, clamped by shortest-path inequalities.
  std::vector<std::int64_t> circ(g.arc_count(), 0);
  bool changed = false;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    std::int32_t left = fp.face_of_dart[dart_index(Dart{a, true})];
    std::int32_t right = fp.face_of_dart[dart_index(Dart{a, false})];
    circ[a] = p[right] - p[left];
    if (circ[a] < 0 || circ[a] > g.arc(a).capacity)
      throw GraphError("dual potentials out of range");
    if (circ[a] != 0) changed = true;
  }
  if (!changed) return identity_result(g);

  // Residual network of the circulation: saturated arcs reverse, partially
  // used arcs split into a forward remainder and a parallel back arc.
  PreprocessResult r;
  r.reversed.assign(g.arc_count(), 0);
  std::vector<ArcId> fwd_id(g.arc_count(), kNoArc);
  std::vector<ArcId> back_id(g.arc_count(), kNoArc);
  std::vector<ArcRecord> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const ArcRecord &rec = g.arc(a);
    if (circ[a] == rec.capacity) {
      fwd_id[a] = static_cast<ArcId>(arcs.size());
      arcs.push_back(ArcRecord{rec.head, rec.tail, rec.capacity});
      r.origin.push_back(a);
      r.reversed[a] = 1;
    } else if (circ[a] == 0) {
      fwd_id[a] = static_cast<ArcId>(arcs.size());
      arcs.push_back(rec);
      r.origin.push_back(a);
    } else {
      fwd_id[a] = static_cast<ArcId>(arcs.size());
      arcs.push_back(ArcRecord{rec.tail, rec.head, rec.capacity - circ[a]});
      r.origin.push_back(a);
      back_id[a] = static_cast<ArcId>(arcs.size());
      arcs.push_back(ArcRecord{rec.head, rec.tail, circ[a]});
      r.origin.push_back(kNoArc);
    }
  }

  std::vector<std::vector<RotationEntry>> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const RotationEntry &re : g.rotation_of(v)) {
      ArcId a = re.arc;
      bool at_tail = re.kind == ArcEndKind::Tail;
      if (back_id[a] == kNoArc) {
        bool flipped = r.reversed[a];
        rot[v].push_back(RotationEntry{
            fwd_id[a], (at_tail != static_cast<bool>(flipped)) ? ArcEndKind::Tail
                                                               : ArcEndKind::Head});
      } else if (at_tail) {
        // forward tail slot, then the back arc's head immediately CCW of it
        rot[v].push_back(RotationEntry{fwd_id[a], ArcEndKind::Tail});
        rot[v].push_back(RotationEntry{back_id[a], ArcEndKind::Head});
      } else {
        rot[v].push_back(RotationEntry{back_id[a], ArcEndKind::Tail});
        rot[v].push_back(RotationEntry{fwd_id[a], ArcEndKind::Head});
      }
    }
  }

  OuterFaceRef outer = g.outer_face();
  OuterFaceRef new_outer{fwd_id[outer.arc], outer.side};
  if (r.reversed[outer.arc])
    new_outer.side = outer.side == FaceSide::Left ? FaceSide::Right : FaceSide::Left;

  r.graph = PlaneGraph::build(g.vertex_count(), std::move(arcs), std::move(rot),
                              g.source(), g.sink(), new_outer);
  r.cw_passes = 1;
  return r;
}

PreprocessResult reduce_degrees(const PlaneGraph &g) {
  // Stage A: fresh source with a single outgoing arc, unless already so.
  PlaneGraph with_source = [&] {
    if (g.out_degree(g.source()) == 1 && g.in_degree(g.source()) == 0) return g;
    const VertexId n = g.vertex_count();
    std::vector<ArcRecord> arcs(g.arcs());
    ArcId gadget = static_cast<ArcId>(arcs.size());
    std::int64_t total = 1;
    for (const ArcRecord &rec : arcs) total += rec.capacity;
    arcs.push_back(ArcRecord{n, g.source(), total});
    std::vector<std::vector<RotationEntry>> rot(n + 1);
    for (VertexId v = 0; v < n; ++v) rot[v] = g.rotation_of(v);
    rot[g.source()].push_back(RotationEntry{gadget, ArcEndKind::Head});
    rot[n].push_back(RotationEntry{gadget, ArcEndKind::Tail});
    OuterFaceRef outer = g.arc_count() ? g.outer_face() : OuterFaceRef{gadget, FaceSide::Left};
    return PlaneGraph::build(n + 1, std::move(arcs), std::move(rot), n, g.sink(), outer);
  }();

  // Stage B: counterclockwise cycle over the arc ends of every non-terminal
  // vertex of degree above three.
  const PlaneGraph &h = with_source;
  const VertexId n = h.vertex_count();
  std::vector<char> expand(n, 0);
  VertexId nv = 0;
  std::vector<VertexId> vmap(n, kNoVertex);  // id of unexpanded vertices
  for (VertexId v = 0; v < n; ++v) {
    expand[v] = v != h.source() && v != h.sink() && h.degree(v) > 3;
    if (!expand[v]) vmap[v] = nv++;
  }

  std::vector<ArcRecord> arcs(h.arcs());
  // Retarget arc ends into gadget vertices and emit gadget arcs.
  std::vector<std::vector<RotationEntry>> rot;
  rot.resize(nv);
  for (VertexId v = 0; v < n; ++v)
    if (!expand[v]) rot[vmap[v]] = h.rotation_of(v);

  PreprocessResult r;
  r.origin.resize(arcs.size());
  for (ArcId a = 0; a < static_cast<ArcId>(arcs.size()); ++a)
    r.origin[a] = a < h.arc_count() ? a : kNoArc;

  for (VertexId v = 0; v < n; ++v) {
    if (!expand[v]) continue;
    std::vector<RotationEntry> ends = h.rotation_of(v);
    const int d = static_cast<int>(ends.size());
    std::int64_t ring_cap = 0;
    for (const RotationEntry &re : ends) ring_cap += arcs[re.arc].capacity;
    // gadget vertices for this ring
    std::vector<VertexId> ring(d);
    for (int i = 0; i < d; ++i) ring[i] = nv + i;
    std::vector<ArcId> cyc(d);
    for (int i = 0; i < d; ++i) {
      cyc[i] = static_cast<ArcId>(arcs.size());
      arcs.push_back(ArcRecord{ring[i], ring[(i + 1) % d], ring_cap});
      r.origin.push_back(kNoArc);
    }
    rot.resize(nv + d);
    for (int i = 0; i < d; ++i) {
      const RotationEntry &re = ends[i];
      // reattach the original end
      if (re.kind == ArcEndKind::Tail)
        arcs[re.arc].tail = ring[i];
      else
        arcs[re.arc].head = ring[i];
      // radial end, then cycle-out, then cycle-in: counterclockwise
      rot[ring[i]] = {re, RotationEntry{cyc[i], ArcEndKind::Tail},
                      RotationEntry{cyc[(i + d - 1) % d], ArcEndKind::Head}};
    }
    nv += d;
  }

  OuterFaceRef outer = h.arc_count() ? h.outer_face() : OuterFaceRef{};
  r.graph = PlaneGraph::build(nv, std::move(arcs), std::move(rot),
                              vmap[h.source()], vmap[h.sink()], outer);
  r.reversed.assign(h.arc_count(), 0);

  if (&with_source != &g) {
    // compose the source stage (identity on g's arcs) below in preprocess();
    // here origin already refers to h's ids, which extend g's.
  }
  // h's arc ids 0..g.arc_count()-1 coincide with g's; the gadget source arc
  // (if any) maps to none.
  for (ArcId a = 0; a < static_cast<ArcId>(r.origin.size()); ++a) {
    if (r.origin[a] != kNoArc && r.origin[a] >= g.arc_count()) r.origin[a] = kNoArc;
  }
  r.reversed.assign(g.arc_count(), 0);
  return r;
}

PreprocessResult compose(const PreprocessResult &a, const PreprocessResult &b) {
  PreprocessResult r;
  r.graph = b.graph;
  r.cw_passes = a.cw_passes + b.cw_passes;
  r.origin.resize(b.origin.size(), kNoArc);
  for (std::size_t i = 0; i < b.origin.size(); ++i) {
    ArcId mid = b.origin[i];
    r.origin[i] = mid == kNoArc ? kNoArc : a.origin[mid];
  }
  r.reversed = a.reversed;
  for (ArcId mid = 0; mid < static_cast<ArcId>(b.reversed.size()); ++mid) {
    if (!b.reversed[mid]) continue;
    ArcId orig = a.origin[mid];
    if (orig != kNoArc) r.reversed[orig] = !r.reversed[orig];
  }
  return r;
}

PreprocessResult preprocess(const PlaneGraph &g) {
  PreprocessResult acc = restrict_to_terminal_component(g);
  for (int pass = 0; pass < 20; ++pass) {
    PreprocessResult step = remove_clockwise_cycles(acc.graph);
    bool noop = step.cw_passes == 0;
    acc = compose(acc, step);
    if (noop) break;
    if (pass == 19) throw GraphError("reorientation did not reach a fixed point");
  }
  acc = compose(acc, reduce_degrees(acc.graph));
  PreprocessResult verify = remove_clockwise_cycles(acc.graph);
  if (verify.cw_passes != 0)
    throw GraphError("clockwise cycles reappeared after degree reduction");
  return acc;
}

}  // namespace planeflow
