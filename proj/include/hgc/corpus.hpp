#pragma once

#include <string>

#include "hgc/builder.hpp"
#include "hgc/diagram.hpp"

namespace hgc {
namespace corpus {

// Genus-1 diagram of S^3: one alpha, one beta, a single crossing, one
// marked square face.
inline Diagram minimal_torus() {
  DiagramBuilder b("s3-minimal");
  int A = b.add_curve("A1", Color::Alpha);
  int B = b.add_curve("B1", Color::Beta);
  int v = b.add_vertex();
  // CCW rotation: alpha-out, beta-out, alpha-in, beta-in
  b.add_edge(A, {v, 0}, {v, 2});
  b.add_edge(B, {v, 1}, {v, 3});
  b.mark(DiagramBuilder::RegionRef::left_of(0), MarkKind::Basepoint);
  return b.build();
}

// L(p,1) on the square torus: alpha a horizontal line, beta a line of
// slope p; p crossings, p square faces, one basepoint in face 0.
inline Diagram lens_space(int p, const std::string& name = "") {
  require(p >= 1, "fixture", "lens space needs p >= 1");
  DiagramBuilder b(name.empty() ? "lens-" + std::to_string(p) + "-1" : name);
  int A = b.add_curve("A1", Color::Alpha);
  int B = b.add_curve("B1", Color::Beta);
  std::vector<int> v(p);
  for (int i = 0; i < p; ++i) v[i] = b.add_vertex();
  // slots: 0 = east (alpha out), 1 = north (beta out), 2 = west (alpha in),
  // 3 = south (beta in)
  for (int i = 0; i < p; ++i) b.add_edge(A, {v[i], 0}, {v[(i + 1) % p], 2});
  for (int i = 0; i < p; ++i) b.add_edge(B, {v[i], 1}, {v[(i + 1) % p], 3});
  b.mark(DiagramBuilder::RegionRef::left_of(0), MarkKind::Basepoint);
  return b.build();
}

// Genus-1 diagram of S^1 x S^2 with |alpha cap beta| = 2 (a Hamiltonian
// translate): two bigons and one annulus region carrying the basepoint.
// Vertex a: beta crosses alpha from lower-left to upper-right; vertex b the
// mirror image. Curve arcs: edge 0/1 the inner/outer alpha arcs, edge 2/3
// the inner/outer beta arcs.
inline Diagram s1s2_ori(const std::string& name = "s1s2-ori") {
  DiagramBuilder b(name);
  int A = b.add_curve("A1", Color::Alpha);
  int B = b.add_curve("B1", Color::Beta);
  int va = b.add_vertex();  // rotation: [alpha-up, beta-down, alpha-down, beta-up]
  int vb = b.add_vertex();  // rotation: [alpha-up, beta-up, alpha-down, beta-down]
  b.add_edge(A, {va, 0}, {vb, 2});  // e0: inner alpha arc, a -> b
  b.add_edge(A, {vb, 0}, {va, 2});  // e1: outer alpha arc, b -> a
  b.add_edge(B, {va, 3}, {vb, 3});  // e2: inner beta arc (right of alpha)
  b.add_edge(B, {vb, 1}, {va, 1});  // e3: outer beta arc (left of alpha)
  // Four walks of length two: the two bigons {4,1} and {2,7}, and the two
  // annulus sides {5,3} and {0,6}. Merge the sides and mark the annulus.
  auto right_side = DiagramBuilder::RegionRef::left_of(5);
  b.merge_regions(right_side, DiagramBuilder::RegionRef::left_of(0));
  b.mark(right_side, MarkKind::Basepoint);
  return b.build();
}

// Doubly pointed genus-1 diagram of S^1 x S^2: two alpha/beta pairs, each a
// Hamiltonian-translate pair with two crossings; two strip regions carry
// the basepoints z1, z2. Crossings: a, b on the first pair; x, y on the
// second (the half-rotation matches a<->x, b<->y).
inline Diagram s1s2_bp_swap() {
  DiagramBuilder b("s1s2-bp-swap");
  int A1 = b.add_curve("A1", Color::Alpha);
  int B1 = b.add_curve("B1", Color::Beta);
  int A2 = b.add_curve("A2", Color::Alpha);
  int B2 = b.add_curve("B2", Color::Beta);
  int va = b.add_vertex();
  int vb = b.add_vertex();
  int vx = b.add_vertex();
  int vy = b.add_vertex();
  b.add_edge(A1, {va, 0}, {vb, 2});  // e0 inner alpha-1
  b.add_edge(A1, {vb, 0}, {va, 2});  // e1 outer alpha-1
  b.add_edge(B1, {va, 3}, {vb, 3});  // e2 inner beta-1 (right of alpha-1)
  b.add_edge(B1, {vb, 1}, {va, 1});  // e3 outer beta-1 (left of alpha-1)
  b.add_edge(A2, {vx, 0}, {vy, 2});  // e4 inner alpha-2
  b.add_edge(A2, {vy, 0}, {vx, 2});  // e5 outer alpha-2
  b.add_edge(B2, {vx, 3}, {vy, 3});  // e6 inner beta-2
  b.add_edge(B2, {vy, 1}, {vx, 1});  // e7 outer beta-2
  // Each pair reproduces the s1s2_ori walk pattern (darts offset by 8 for
  // pair 2): sides {5,3},{0,6} on pair 1 and {13,11},{8,14} on pair 2.
  // The strip between the pairs joins pair 1's right side with pair 2's
  // left side (carries z2); the wrap-around strip joins the other two
  // (carries z1).
  auto strip_z2 = DiagramBuilder::RegionRef::left_of(5);
  b.merge_regions(strip_z2, DiagramBuilder::RegionRef::left_of(8));
  auto strip_z1 = DiagramBuilder::RegionRef::left_of(13);
  b.merge_regions(strip_z1, DiagramBuilder::RegionRef::left_of(0));
  b.mark(strip_z2, MarkKind::Basepoint);  // z2
  b.mark(strip_z1, MarkKind::Basepoint);  // z1
  return b.build();
}

// Genus-1 diagram of S^1 x S^2 with |alpha cap beta| = 4, invariant under a
// half-translation: four bigons plus a marked annulus. Crossings a0..a3 in
// translation order.
inline Diagram twist_diagram() {
  DiagramBuilder b("twist");
  int A = b.add_curve("A1", Color::Alpha);
  int B = b.add_curve("B1", Color::Beta);
  int v[4];
  for (int i = 0; i < 4; ++i) v[i] = b.add_vertex();
  // Crossing types alternate as in s1s2_ori: at a0 and a2 beta crosses
  // lower-left to upper-right, at a1 and a3 the mirror.
  // alpha arcs: a_i -> a_{i+1} vertically.
  for (int i = 0; i < 4; ++i) b.add_edge(A, {v[i], 0}, {v[(i + 1) % 4], 2});
  // beta arcs: right of alpha between a0a1 and a2a3, left elsewhere.
  b.add_edge(B, {v[0], 3}, {v[1], 3});  // e4 right sliver arc
  b.add_edge(B, {v[1], 1}, {v[2], 1});  // e5 left sliver arc
  b.add_edge(B, {v[2], 3}, {v[3], 3});  // e6 right sliver arc
  b.add_edge(B, {v[3], 1}, {v[0], 1});  // e7 left sliver arc
  DiagramBuilder probe = b;
  Diagram map = probe.build(Diagram::Check::MapOnly);
  std::vector<int> side_darts;
  for (const auto& w : map.walks())
    if (w.size() != 2) side_darts.push_back(w[0]);
  require(side_darts.size() == 2, "fixture", "twist: expected two annulus walks, got " +
                                                 std::to_string(side_darts.size()));
  auto r0 = DiagramBuilder::RegionRef::left_of(side_darts[0]);
  b.merge_regions(r0, DiagramBuilder::RegionRef::left_of(side_darts[1]));
  b.mark(r0, MarkKind::Basepoint);
  return b.build();
}

}  // namespace corpus
}  // namespace hgc
