#ifndef PLANEFLOW_TESTS_FIXTURES_HPP
#define PLANEFLOW_TESTS_FIXTURES_HPP

#include "planeflow/plane_graph.hpp"

namespace planeflow::fixtures {

using R = RotationEntry;
constexpr auto T = ArcEndKind::Tail;
constexpr auto H = ArcEndKind::Head;

/// s -> a -> t line.
inline PlaneGraph line_f1() {
  std::vector<ArcRecord> arcs = {{0, 1, 1}, {1, 2, 1}};
  std::vector<std::vector<R>> rot = {
      {{0, T}}, {{0, H}, {1, T}}, {{1, H}}};
  return PlaneGraph::build(3, std::move(arcs), std::move(rot), 0, 2,
                           OuterFaceRef{0, FaceSide::Left});
}

/// s -> a -> t with a dead-end arc a -> b.
inline PlaneGraph dead_end_f2() {
  std::vector<ArcRecord> arcs = {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}};
  std::vector<std::vector<R>> rot = {
      {{0, T}}, {{1, T}, {2, T}, {0, H}}, {{1, H}}, {{2, H}}};
  return PlaneGraph::build(4, std::move(arcs), std::move(rot), 0, 2,
                           OuterFaceRef{0, FaceSide::Left});
}

/// s -> u, digon u <-> v, v -> t. The digon's enclosed lens lies left of
/// u->v, so the boundary cycle (u->v, v->u) is counterclockwise.
inline PlaneGraph digon_f3() {
  // arcs: 0: s->u, 1: u->v (bottom), 2: v->u (top), 3: v->t
  std::vector<ArcRecord> arcs = {{0, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 3, 1}};
  std::vector<std::vector<R>> rot = {
      {{0, T}},
      {{1, T}, {2, H}, {0, H}},
      {{3, T}, {2, T}, {1, H}},
      {{3, H}}};
  return PlaneGraph::build(4, std::move(arcs), std::move(rot), 0, 3,
                           OuterFaceRef{0, FaceSide::Left});
}

/// Proper strip: floor x1->x2->x3, ceiling x1->y->x3, up-cross link x2->y.
/// Arc ids: 0: f1(x1->x2), 1: f2(x2->x3), 2: c1(x1->y), 3: c2(y->x3),
/// 4: L(x2->y). Vertices: x1=0, x2=1, x3=2, y=3.
inline PlaneGraph strip_f4() {
  std::vector<ArcRecord> arcs = {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 2, 1}, {1, 3, 1}};
  std::vector<std::vector<R>> rot = {
      {{0, T}, {2, T}},
      {{1, T}, {4, T}, {0, H}},
      {{3, H}, {1, H}},
      {{2, H}, {4, H}, {3, T}}};
  return PlaneGraph::build(4, std::move(arcs), std::move(rot), 0, 2,
                           OuterFaceRef{0, FaceSide::Right});
}

/// Source enclosed by a counterclockwise 4-ring with one exit to t.
/// Vertices: s=0, r1=1, r2=2, r3=3, r4=4, t=5. Arcs: 0: s->r1,
/// 1: r1->r2, 2: r2->r3, 3: r3->r4, 4: r4->r1, 5: r3->t.
inline PlaneGraph ring_f7() {
  std::vector<ArcRecord> arcs = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1},
                                 {3, 4, 1}, {4, 1, 1}, {3, 5, 1}};
  std::vector<std::vector<R>> rot = {
      {{0, T}},
      {{1, T}, {0, H}, {4, H}},
      {{2, T}, {1, H}},
      {{5, T}, {3, T}, {2, H}},
      {{3, H}, {4, T}},
      {{5, H}}};
  return PlaneGraph::build(6, std::move(arcs), std::move(rot), 0, 5,
                           OuterFaceRef{1, FaceSide::Right});
}

}  // namespace planeflow::fixtures

#endif
