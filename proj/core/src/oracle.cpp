#include "planeflow/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace planeflow {

namespace {

struct PathEnumerator {
  const PlaneGraph &g;
  std::vector<std::vector<ArcId>> out;
  std::vector<char> on_path;
  std::vector<ArcId> arc_stack;
  std::vector<char> useful;
  std::int64_t steps = 0;
  std::int64_t budget;
  std::int64_t paths = 0;

  PathEnumerator(const PlaneGraph &graph, std::int64_t step_budget)
      : g(graph), budget(step_budget) {
    out.resize(g.vertex_count());
    for (ArcId a = 0; a < g.arc_count(); ++a) out[g.arc(a).tail].push_back(a);
    on_path.assign(g.vertex_count(), 0);
    useful.assign(g.arc_count(), 0);
  }

  void dfs(VertexId v) {
    if (++steps > budget) throw TooLarge("path enumeration budget exhausted");
    if (v == g.sink()) {
      ++paths;
      for (ArcId a : arc_stack) useful[a] = 1;
      return;
    }
    on_path[v] = 1;
    for (ArcId a : out[v]) {
      VertexId w = g.arc(a).head;
      if (on_path[w] || w == g.source()) continue;
      arc_stack.push_back(a);
      dfs(w);
      arc_stack.pop_back();
    }
    on_path[v] = 0;
  }
};

}  // namespace

UsefulSet brute_useful(const PlaneGraph &g, int max_arcs, std::int64_t step_budget) {
  if (g.arc_count() > max_arcs) throw TooLarge("instance above brute-force arc cap");
  PathEnumerator en(g, step_budget);
  en.dfs(g.source());
  UsefulSet result;
  result.useful = std::move(en.useful);
  result.path_count = en.paths;
  return result;
}

std::int64_t max_flow_value(const PlaneGraph &g) {
  const VertexId n = g.vertex_count();
  struct REdge {
    VertexId to;
    std::int64_t cap;
    std::size_t rev;
  };
  std::vector<std::vector<REdge>> adj(n);
  auto add_edge = [&](VertexId u, VertexId v, std::int64_t c) {
    adj[u].push_back(REdge{v, c, adj[v].size()});
    adj[v].push_back(REdge{u, 0, adj[u].size() - 1});
  };
  for (ArcId a = 0; a < g.arc_count(); ++a)
    add_edge(g.arc(a).tail, g.arc(a).head, g.arc(a).capacity);

  std::int64_t flow = 0;
  for (;;) {
    std::vector<std::pair<VertexId, std::size_t>> parent(n, {kNoVertex, 0});
    std::deque<VertexId> q;
    q.push_back(g.source());
    parent[g.source()] = {g.source(), 0};
    while (!q.empty() && parent[g.sink()].first == kNoVertex) {
      VertexId u = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < adj[u].size(); ++i) {
        const REdge &e = adj[u][i];
        if (e.cap <= 0 || parent[e.to].first != kNoVertex) continue;
        parent[e.to] = {u, i};
        q.push_back(e.to);
      }
    }
    if (parent[g.sink()].first == kNoVertex) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (VertexId v = g.sink(); v != g.source();) {
      auto [u, i] = parent[v];
      push = std::min(push, adj[u][i].cap);
      v = u;
    }
    for (VertexId v = g.sink(); v != g.source();) {
      auto [u, i] = parent[v];
      adj[u][i].cap -= push;
      adj[adj[u][i].to][adj[u][i].rev].cap += push;
      v = u;
    }
    flow += push;
  }
  return flow;
}

std::int64_t min_cut_by_enumeration(const PlaneGraph &g, int max_vertices) {
  const VertexId n = g.vertex_count();
  if (n > max_vertices) throw TooLarge("too many vertices for cut enumeration");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!(mask >> g.source() & 1)) continue;
    if (mask >> g.sink() & 1) continue;
    std::int64_t cap = 0;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      if ((mask >> g.arc(a).tail & 1) && !(mask >> g.arc(a).head & 1))
        cap += g.arc(a).capacity;
    }
    best = std::min(best, cap);
  }
  return best;
}

namespace {

// Checks whether the enclosed side of the directed cycle lies right of the
// traversal direction: grow the outer region in the dual without crossing
// cycle arcs, then look at the faces right of the cycle darts.
bool cycle_is_clockwise(const PlaneGraph &g, const FacePartition &fp,
                        const std::vector<ArcId> &cycle) {
  std::vector<char> in_cycle(g.arc_count(), 0);
  for (ArcId a : cycle) in_cycle[a] = 1;

  const std::size_t faces = fp.walks.size();
  std::vector<char> reach(faces, 0);
  std::vector<std::int32_t> stack;
  reach[fp.outer_face] = 1;
  stack.push_back(fp.outer_face);
  while (!stack.empty()) {
    std::int32_t f = stack.back();
    stack.pop_back();
    for (Dart d : fp.walks[f]) {
      if (in_cycle[d.arc]) continue;
      std::int32_t other = fp.face_of_dart[dart_index(d.reversed())];
      if (!reach[other]) {
        reach[other] = 1;
        stack.push_back(other);
      }
    }
  }
  // Faces right of the forward darts are the candidate interior.
  for (ArcId a : cycle) {
    std::int32_t right = fp.face_of_dart[dart_index(Dart{a, false})];
    if (reach[right]) return false;
  }
  return true;
}

}  // namespace

std::optional<CycleWithOrientation> find_clockwise_cycle(const PlaneGraph &g,
                                                         std::int64_t cycle_cap) {
  if (g.arc_count() == 0) return std::nullopt;
  FacePartition fp = g.face_walks();

  std::vector<std::vector<ArcId>> out(g.vertex_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) out[g.arc(a).tail].push_back(a);

  std::int64_t examined = 0;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<ArcId> arc_stack;
  std::optional<CycleWithOrientation> found;

  // Enumerate each simple cycle once, rooted at its minimum vertex.
  std::function<bool(VertexId, VertexId)> dfs = [&](VertexId root, VertexId v) -> bool {
    on_path[v] = 1;
    for (ArcId a : out[v]) {
      VertexId w = g.arc(a).head;
      if (w < root) continue;
      if (w == root) {
        arc_stack.push_back(a);
        if (++examined > cycle_cap) throw TooLarge("cycle enumeration cap exceeded");
        if (cycle_is_clockwise(g, fp, arc_stack)) {
          found = CycleWithOrientation{arc_stack};
          arc_stack.pop_back();
          on_path[v] = 0;
          return true;
        }
        arc_stack.pop_back();
        continue;
      }
      if (on_path[w]) continue;
      arc_stack.push_back(a);
      if (dfs(root, w)) {
        arc_stack.pop_back();
        on_path[v] = 0;
        return true;
      }
      arc_stack.pop_back();
    }
    on_path[v] = 0;
    return false;
  };

  for (VertexId v = 0; v < g.vertex_count() && !found; ++v) dfs(v, v);
  return found;
}

}  // namespace planeflow
