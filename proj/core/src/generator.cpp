#include "planeflow/generator.hpp"

#include <random>
#include <vector>

namespace planeflow {

namespace {

std::uint64_t rnd_below(std::mt19937_64 &rng, std::uint64_t k) {
  return k <= 1 ? 0 : rng() % k;
}

bool rnd_chance(std::mt19937_64 &rng, double p) {
  return (rng() >> 11) * 0x1.0p-53 < p;
}

std::int64_t rnd_capacity(std::mt19937_64 &rng, const GenOptions &opt) {
  if (opt.cap_hi <= opt.cap_lo) return opt.cap_lo;
  return opt.cap_lo + static_cast<std::int64_t>(
                          rnd_below(rng, static_cast<std::uint64_t>(opt.cap_hi - opt.cap_lo + 1)));
}

PlaneGraph gen_grid(const GenOptions &opt, std::mt19937_64 &rng) {
  const int w = std::max(1, opt.width);
  const int h = std::max(1, opt.height);
  const VertexId n = static_cast<VertexId>(w) * h;
  auto vid = [&](int x, int y) { return static_cast<VertexId>(y * w + x); };

  // Edge ids: horizontal first (x,y)-(x+1,y), then vertical (x,y)-(x,y+1).
  const int hcount = (w - 1) * h;
  auto hedge = [&](int x, int y) { return y * (w - 1) + x; };
  auto vedge = [&](int x, int y) { return hcount + y * w + x; };
  const int m = hcount + w * (h - 1);

  std::vector<ArcRecord> arcs(m);
  std::vector<char> canonical(m, 1);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x + 1 < w; ++x) {
      int e = hedge(x, y);
      bool keep = rnd_chance(rng, opt.orientation_bias);
      canonical[e] = keep;
      arcs[e].tail = keep ? vid(x, y) : vid(x + 1, y);
      arcs[e].head = keep ? vid(x + 1, y) : vid(x, y);
      arcs[e].capacity = rnd_capacity(rng, opt);
    }
  for (int y = 0; y + 1 < h; ++y)
    for (int x = 0; x < w; ++x) {
      int e = vedge(x, y);
      bool keep = rnd_chance(rng, opt.orientation_bias);
      canonical[e] = keep;
      arcs[e].tail = keep ? vid(x, y) : vid(x, y + 1);
      arcs[e].head = keep ? vid(x, y + 1) : vid(x, y);
      arcs[e].capacity = rnd_capacity(rng, opt);
    }

  std::vector<std::vector<RotationEntry>> rot(n);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      auto add = [&](int e) {
        VertexId v = vid(x, y);
        rot[v].push_back(RotationEntry{static_cast<ArcId>(e),
                                       arcs[e].tail == v ? ArcEndKind::Tail : ArcEndKind::Head});
      };
      // counterclockwise: east, north, west, south
      if (x + 1 < w) add(hedge(x, y));
      if (y + 1 < h) add(vedge(x, y));
      if (x > 0) add(hedge(x - 1, y));
      if (y > 0) add(vedge(x, y - 1));
    }

  VertexId sink = vid(w - 1, h - 1);
  VertexId source;
  if (opt.seed % 2 == 0 && w > 2 && h > 2) {
    source = vid(w / 2, h / 2);  // interior placement
  } else {
    source = vid(0, 0);
  }
  if (source == sink) source = vid(0, 0) == sink ? vid(w - 1, 0) : vid(0, 0);

  OuterFaceRef outer;
  if (w >= 2) {
    int e = hedge(0, 0);
    outer.arc = e;
    outer.side = canonical[e] ? FaceSide::Right : FaceSide::Left;
  } else {
    int e = vedge(0, 0);
    outer.arc = e;
    outer.side = FaceSide::Left;  // path graph: single face
  }
  return PlaneGraph::build(n, std::move(arcs), std::move(rot), source, sink, outer);
}

// Growable rotation rings for the stacked-triangulation builder.
struct DiskBuilder {
  struct EdgeRec {
    VertexId u, v;
    bool alive = true;
  };
  std::vector<EdgeRec> edges;
  std::vector<EndId> ccw, cw;
  std::vector<EndId> first;  // per vertex

  EndId end_at(int e, VertexId x) const { return edges[e].u == x ? 2 * e : 2 * e + 1; }
  VertexId vertex_of(EndId id) const {
    return id % 2 == 0 ? edges[id / 2].u : edges[id / 2].v;
  }

  int new_edge(VertexId u, VertexId v) {
    int e = static_cast<int>(edges.size());
    edges.push_back(EdgeRec{u, v});
    ccw.resize(2 * edges.size(), kNoEnd);
    cw.resize(2 * edges.size(), kNoEnd);
    return e;
  }
  void make_ring(EndId e) {
    ccw[e] = e;
    cw[e] = e;
  }
  void insert_ccw_after(EndId fresh, EndId ref) {
    EndId nxt = ccw[ref];
    ccw[ref] = fresh;
    cw[fresh] = ref;
    ccw[fresh] = nxt;
    cw[nxt] = fresh;
  }
  void unlink(EndId e) {
    VertexId v = vertex_of(e);
    if (ccw[e] == e) {
      first[v] = kNoEnd;
      return;
    }
    ccw[cw[e]] = ccw[e];
    cw[ccw[e]] = cw[e];
    if (first[v] == e) first[v] = ccw[e];
  }
};

PlaneGraph gen_random_planar(const GenOptions &opt, std::mt19937_64 &rng) {
  const int n = std::max(3, opt.vertices);
  DiskBuilder b;
  b.first.assign(n, kNoEnd);

  int e01 = b.new_edge(0, 1);
  int e12 = b.new_edge(1, 2);
  int e20 = b.new_edge(2, 0);
  auto seed_vertex = [&](VertexId v, int ea, int eb) {
    EndId x = b.end_at(ea, v);
    EndId y = b.end_at(eb, v);
    b.make_ring(x);
    b.insert_ccw_after(y, x);
    b.first[v] = x;
  };
  seed_vertex(0, e01, e20);
  seed_vertex(1, e12, e01);
  seed_vertex(2, e20, e12);

  struct Face {
    VertexId a, b, c;  // counterclockwise corners
    int eab, ebc, eca;
  };
  std::vector<Face> faces;
  faces.push_back(Face{0, 1, 2, e01, e12, e20});

  for (VertexId x = 3; x < n; ++x) {
    std::size_t fi = rnd_below(rng, faces.size());
    Face f = faces[fi];
    int eax = b.new_edge(f.a, x);
    int ebx = b.new_edge(f.b, x);
    int ecx = b.new_edge(f.c, x);
    b.insert_ccw_after(b.end_at(eax, f.a), b.end_at(f.eab, f.a));
    b.insert_ccw_after(b.end_at(ebx, f.b), b.end_at(f.ebc, f.b));
    b.insert_ccw_after(b.end_at(ecx, f.c), b.end_at(f.eca, f.c));
    EndId xa = b.end_at(eax, x);
    b.make_ring(xa);
    b.insert_ccw_after(b.end_at(ebx, x), xa);
    b.insert_ccw_after(b.end_at(ecx, x), b.end_at(ebx, x));
    b.first[x] = xa;
    faces[fi] = Face{f.a, f.b, x, f.eab, ebx, eax};
    faces.push_back(Face{f.b, f.c, x, f.ebc, ecx, ebx});
    faces.push_back(Face{f.c, f.a, x, f.eca, eax, ecx});
  }

  // Thin interior edges; the outer triangle stays so the sink remains on the
  // unbounded face and the outer reference arc survives.
  for (std::size_t e = 3; e < b.edges.size(); ++e) {
    if (rnd_chance(rng, opt.thin_probability)) {
      b.edges[e].alive = false;
      b.unlink(static_cast<EndId>(2 * e));
      b.unlink(static_cast<EndId>(2 * e + 1));
    }
  }

  // Orient surviving edges and emit.
  std::vector<int> arc_id(b.edges.size(), -1);
  std::vector<ArcRecord> arcs;
  std::vector<char> canonical;
  for (std::size_t e = 0; e < b.edges.size(); ++e) {
    if (!b.edges[e].alive) continue;
    arc_id[e] = static_cast<int>(arcs.size());
    bool keep = rnd_chance(rng, opt.orientation_bias);
    ArcRecord rec;
    rec.tail = keep ? b.edges[e].u : b.edges[e].v;
    rec.head = keep ? b.edges[e].v : b.edges[e].u;
    rec.capacity = rnd_capacity(rng, opt);
    canonical.push_back(keep);
    arcs.push_back(rec);
  }

  std::vector<std::vector<RotationEntry>> rot(n);
  for (VertexId v = 0; v < n; ++v) {
    EndId e0 = b.first[v];
    if (e0 == kNoEnd) continue;
    EndId e = e0;
    do {
      int edge = e / 2;
      int a = arc_id[edge];
      rot[v].push_back(
          RotationEntry{static_cast<ArcId>(a),
                        arcs[a].tail == v ? ArcEndKind::Tail : ArcEndKind::Head});
      e = b.ccw[e];
    } while (e != e0);
  }

  VertexId sink = 0;
  VertexId source;
  if (opt.seed % 2 == 0 && n > 3) {
    source = 3 + static_cast<VertexId>(rnd_below(rng, static_cast<std::uint64_t>(n - 3)));
  } else {
    source = rnd_chance(rng, 0.5) ? 1 : 2;
  }

  OuterFaceRef outer;
  outer.arc = arc_id[e01];
  outer.side = canonical[arc_id[e01]] ? FaceSide::Right : FaceSide::Left;
  return PlaneGraph::build(n, std::move(arcs), std::move(rot), source, sink, outer);
}

}  // namespace

PlaneGraph gen_instance(const GenOptions &opt) {
  std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  if (opt.shape == GenShape::Grid) return gen_grid(opt, rng);
  return gen_random_planar(opt, rng);
}

}  // namespace planeflow
