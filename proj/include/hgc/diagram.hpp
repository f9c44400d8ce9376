#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgc/base.hpp"

namespace hgc {

// A sutured/pointed Heegaard diagram as a labeled oriented combinatorial
// map. Crossings are 4-valent vertices whose rotation (counterclockwise
// order of outgoing darts) alternates alpha/beta. Edges are curve arcs.
//
// Darts: edge e owns darts 2e and 2e+1; twin(d) = d ^ 1. The face walk to
// the left of a dart follows next(twin(d)).
//
// Complementary regions need not be disks: a region is a group of face
// walks plus free-circle sides, together with a genus. This is forced by
// the moves: a stabilization merges the gadget's face into the host region
// (an annulus with a handle's worth of topology bookkept by the walks), and
// isotopy reduction can strand crossing-free curves ("free circles") inside
// a region. A diagram with no crossings at all is carried entirely by the
// circles and the declared regions.
class Diagram {
 public:
  struct Edge {
    int curve = -1;
  };
  struct Curve {
    std::string name;
    Color color = Color::Alpha;
  };
  struct Circle {
    int curve = -1;
    int left_region = -1;
    int right_region = -1;
  };
  struct Region {
    std::vector<int> walks;  // indices into walks()
    int genus = 0;
  };
  struct Mark {
    int region = -1;
    MarkKind kind = MarkKind::Basepoint;
    bool operator<(const Mark& o) const {
      return region != o.region ? region < o.region : kind < o.kind;
    }
    bool operator==(const Mark& o) const { return region == o.region && kind == o.kind; }
  };

  std::string name;
  std::vector<Curve> curves;
  std::vector<Edge> edges;
  std::vector<int> next;         // rotation: next CCW outgoing dart at same vertex
  std::vector<int> dart_vertex;  // origin vertex of each dart
  int vertex_count = 0;
  std::vector<Circle> circles;
  std::vector<Region> regions;
  std::vector<Mark> marks;

  static int twin(int d) { return d ^ 1; }
  int dart_count() const { return int(next.size()); }
  int edge_count() const { return int(edges.size()); }
  int head(int d) const { return dart_vertex[twin(d)]; }
  Color dart_color(int d) const { return curves[edges[d >> 1].curve].color; }
  int dart_curve(int d) const { return edges[d >> 1].curve; }
  Color curve_color(int c) const { return curves[c].color; }

  // Rotation predecessor (clockwise next) at a 4-valent vertex.
  int prev(int d) const { return next[next[next[d]]]; }
  // The dart continuing the same curve through the far endpoint of d.
  int curve_next(int d) const { return next[next[twin(d)]]; }
  // Face walk successor: the walk keeps the region on the left of each
  // dart, so at the head of d it turns onto the clockwise neighbor of the
  // returning germ.
  int walk_next(int d) const { return prev(twin(d)); }

  // ---- derived data, computed by finalize() ----

  const std::vector<std::vector<int>>& walks() const { return walks_; }
  int walk_of_dart(int d) const { return walk_of_dart_[d]; }
  int region_of_dart(int d) const { return region_of_walk_[walk_of_dart_[d]]; }
  int region_of_walk(int w) const { return region_of_walk_[w]; }
  int region_count() const { return int(regions.size()); }

  // Boundary components of a region: face walks plus circle sides.
  int region_boundary_count(int r) const {
    int b = int(regions[r].walks.size());
    for (const Circle& c : circles) {
      if (c.left_region == r) ++b;
      if (c.right_region == r) ++b;
    }
    return b;
  }
  int region_euler(int r) const { return 2 - 2 * regions[r].genus - region_boundary_count(r); }
  bool region_is_disk(int r) const {
    return regions[r].genus == 0 && region_boundary_count(r) == 1 && !regions[r].walks.empty();
  }
  int region_corners(int r) const {
    int c = 0;
    for (int w : regions[r].walks) c += int(walks_[w].size());
    return c;
  }
  bool region_marked(int r) const {
    for (const Mark& m : marks)
      if (m.region == r) return true;
    return false;
  }
  std::optional<MarkKind> region_mark_kind(int r) const {
    for (const Mark& m : marks)
      if (m.region == r) return m.kind;
    return std::nullopt;
  }

  int euler_characteristic() const {
    int chi = vertex_count - edge_count();
    for (int r = 0; r < region_count(); ++r) chi += region_euler(r);
    return chi;
  }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  // Ordered cyclic edge list of a curve (empty for free circles).
  std::vector<int> curve_edges(int curve) const {
    std::vector<int> out;
    int d0 = -1;
    for (int d = 0; d < dart_count(); d += 2)
      if (dart_curve(d) == curve) { d0 = d; break; }
    if (d0 < 0) return out;
    int d = d0;
    do {
      out.push_back(d >> 1);
      d = curve_next(d);
    } while (d != d0);
    return out;
  }

  std::vector<int> curves_of_color(Color c) const {
    std::vector<int> out;
    for (int i = 0; i < int(curves.size()); ++i)
      if (curves[i].color == c) out.push_back(i);
    return out;
  }

  int curve_by_name(const std::string& n) const {
    for (int i = 0; i < int(curves.size()); ++i)
      if (curves[i].name == n) return i;
    throw Error("no curve named '" + n + "'");
  }

  bool curve_is_circle(int c) const {
    for (const Circle& ci : circles)
      if (ci.curve == c) return true;
    return false;
  }

  // Number of crossings on a curve.
  int curve_crossings(int c) const {
    int n = 0;
    for (int d = 0; d < dart_count(); d += 2)
      if (dart_curve(d) == c) ++n;
    return n;
  }

  // ---- validation ----

  // MapOnly checks the rotation system and curves but no region or surface
  // structure (used while regions are still being assembled); Structural
  // checks everything except the attaching-set condition; Full checks all
  // invariants.
  enum class Check { MapOnly, Structural, Full };

  // Computes walks and derived tables, then validates. Regions must refer
  // to walk indices of the recomputed enumeration (walks are ordered by
  // smallest contained dart).
  void finalize(Check level = Check::Full) {
    compute_walks();
    validate_map();
    if (level == Check::MapOnly) return;
    validate_structural();
    if (level == Check::Full) validate_full();
  }

  // Face walks enumerated in increasing order of their smallest dart; since
  // we scan darts in order and each orbit is first entered at its minimal
  // member, discovery order is already the canonical order.
  void compute_walks() {
    int n = dart_count();
    walks_.clear();
    walk_of_dart_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
      if (walk_of_dart_[d] >= 0) continue;
      std::vector<int> walk;
      int e = d;
      do {
        walk_of_dart_[e] = int(walks_.size());
        walk.push_back(e);
        e = walk_next(e);
      } while (e != d);
      walks_.push_back(std::move(walk));
    }
    region_of_walk_.assign(walks_.size(), -1);
    for (int r = 0; r < region_count(); ++r)
      for (int w : regions[r].walks) {
        require(w >= 0 && w < int(walks_.size()), "region walks", "walk index out of range");
        require(region_of_walk_[w] < 0, "region walks", "walk assigned to two regions");
        region_of_walk_[w] = r;
      }
  }

  void validate_map() const {
    int n = dart_count();
    require(n == 2 * edge_count(), "darts", "dart/edge size mismatch");
    require(int(dart_vertex.size()) == n && int(next.size()) == n, "darts", "table sizes");
    // rotation: permutation with 4-cycles per vertex, alternating colors
    std::vector<int> seen(n, 0);
    std::vector<int> vertex_degree(vertex_count, 0);
    for (int d = 0; d < n; ++d) {
      require(next[d] >= 0 && next[d] < n, "rotation", "next out of range");
      require(dart_vertex[d] >= 0 && dart_vertex[d] < vertex_count, "rotation",
              "vertex out of range");
      require(dart_vertex[next[d]] == dart_vertex[d], "rotation",
              "rotation leaves its vertex");
      ++vertex_degree[dart_vertex[d]];
    }
    for (int d = 0; d < n; ++d) {
      if (seen[d]) continue;
      int len = 0, e = d;
      do {
        seen[e] = 1;
        ++len;
        e = next[e];
        require(len <= n, "rotation", "next is not a permutation");
      } while (e != d);
      require(len == 4, "vertex valence",
              "vertex " + std::to_string(dart_vertex[d]) + " has valence " + std::to_string(len));
    }
    for (int v = 0; v < vertex_count; ++v)
      require(vertex_degree[v] == 4, "vertex valence",
              "vertex " + std::to_string(v) + " has " + std::to_string(vertex_degree[v]) +
                  " incident half-edges");
    for (int d = 0; d < n; ++d) {
      require(dart_color(next[d]) == opposite(dart_color(d)), "transverse crossing",
              "colors do not alternate at vertex " + std::to_string(dart_vertex[d]));
      require(dart_curve(next[next[d]]) == dart_curve(d), "transverse crossing",
              "opposite germs at a vertex belong to different curves");
    }
    // curves: edges of each curve form a single closed cycle
    for (int c = 0; c < int(curves.size()); ++c) {
      int ne = 0;
      for (int e = 0; e < edge_count(); ++e)
        if (edges[e].curve == c) ++ne;
      bool circ = curve_is_circle(c);
      if (circ)
        require(ne == 0, "curve single cycle",
                "curve " + curves[c].name + " has both edges and a free circle");
      if (ne == 0) {
        require(circ, "curve single cycle", "curve " + curves[c].name + " has no support");
        continue;
      }
      require(int(curve_edges(c).size()) == ne, "curve single cycle",
              "curve " + curves[c].name + " is not a single cycle");
    }
  }

  void validate_structural() const {
    for (size_t w = 0; w < walks_.size(); ++w)
      require(region_of_walk_[w] >= 0, "region walks",
              "walk " + std::to_string(w) + " not assigned to a region");
    // circles reference valid regions
    for (const Circle& c : circles) {
      require(c.curve >= 0 && c.curve < int(curves.size()), "free circles", "bad curve id");
      require(c.left_region >= 0 && c.left_region < region_count() && c.right_region >= 0 &&
                  c.right_region < region_count(),
              "free circles", "circle region out of range");
    }
    for (const Region& r : regions)
      require(r.genus >= 0, "region genus", "negative genus");
    for (int r = 0; r < region_count(); ++r)
      require(region_boundary_count(r) > 0 ||
                  (vertex_count == 0 && circles.empty() && region_count() == 1),
              "region boundary", "region " + std::to_string(r) + " has no boundary");
    for (const Mark& m : marks)
      require(m.region >= 0 && m.region < region_count(), "marked faces",
              "mark on invalid region");
    // closed model: even Euler characteristic, at most a sphere
    int chi = euler_characteristic();
    require(chi % 2 == 0 && chi <= 2, "euler characteristic",
            "chi = " + std::to_string(chi) + " is not of the form 2-2g");
    require(connected(), "connected", "diagram surface is not connected");
  }

  void validate_full() const {
    for (Color c : {Color::Alpha, Color::Beta})
      require(attaching_ok(c), "attaching set",
              "a component of the " + color_name(c) + "-complement has no marked region");
  }

  bool connected() const {
    // union-find over vertices and regions; darts join its vertex with the
    // region left of it, circles join their two regions.
    int nV = vertex_count, nR = region_count();
    if (nV + nR == 0) return false;
    std::vector<int> up(nV + nR);
    std::iota(up.begin(), up.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    auto unite = [&](int a, int b) { up[find(a)] = find(b); };
    for (int d = 0; d < dart_count(); ++d) unite(dart_vertex[d], nV + region_of_dart(d));
    for (const Circle& c : circles) unite(nV + c.left_region, nV + c.right_region);
    int root = find(0);
    for (int i = 0; i < nV + nR; ++i)
      if (find(i) != root) return false;
    return true;
  }

  // Components of the complement of one color family: regions glued across
  // edges and circles of the opposite color. Returns region -> component id.
  std::vector<int> complement_components(Color cut_color) const {
    int nR = region_count();
    std::vector<int> up(nR);
    std::iota(up.begin(), up.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    auto unite = [&](int a, int b) { up[find(a)] = find(b); };
    for (int e = 0; e < edge_count(); ++e)
      if (curve_color(edges[e].curve) != cut_color)
        unite(region_of_dart(2 * e), region_of_dart(2 * e + 1));
    for (const Circle& c : circles)
      if (curve_color(c.curve) != cut_color) unite(c.left_region, c.right_region);
    std::vector<int> comp(nR, -1);
    int k = 0;
    for (int r = 0; r < nR; ++r)
      if (find(r) == r) comp[r] = k++;
    for (int r = 0; r < nR; ++r) comp[r] = comp[find(r)];
    return comp;
  }

  bool attaching_ok(Color c) const {
    std::vector<int> comp = complement_components(c);
    int k = 0;
    for (int r = 0; r < region_count(); ++r) k = std::max(k, comp[r] + 1);
    std::vector<char> has_mark(k, 0);
    for (const Mark& m : marks) has_mark[comp[m.region]] = 1;
    for (int i = 0; i < k; ++i)
      if (!has_mark[i]) return false;
    return true;
  }

  bool operator==(const Diagram& o) const {
    return curves_equal(o) && edges_equal(o) && next == o.next && dart_vertex == o.dart_vertex &&
           vertex_count == o.vertex_count && circles_equal(o) && regions_equal(o) &&
           sorted_marks() == o.sorted_marks();
  }
  bool operator!=(const Diagram& o) const { return !(*this == o); }

 private:
  bool curves_equal(const Diagram& o) const {
    if (curves.size() != o.curves.size()) return false;
    for (size_t i = 0; i < curves.size(); ++i)
      if (curves[i].name != o.curves[i].name || curves[i].color != o.curves[i].color)
        return false;
    return true;
  }
  bool edges_equal(const Diagram& o) const {
    if (edges.size() != o.edges.size()) return false;
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].curve != o.edges[i].curve) return false;
    return true;
  }
  bool circles_equal(const Diagram& o) const {
    auto key = [](const Circle& c) { return std::tuple(c.curve, c.left_region, c.right_region); };
    std::vector<std::tuple<int, int, int>> a, b;
    for (const Circle& c : circles) a.push_back(key(c));
    for (const Circle& c : o.circles) b.push_back(key(c));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  bool regions_equal(const Diagram& o) const {
    if (regions.size() != o.regions.size()) return false;
    for (size_t i = 0; i < regions.size(); ++i)
      if (regions[i].walks != o.regions[i].walks || regions[i].genus != o.regions[i].genus)
        return false;
    return true;
  }
  std::vector<Mark> sorted_marks() const {
    std::vector<Mark> m = marks;
    std::sort(m.begin(), m.end());
    return m;
  }

  std::vector<std::vector<int>> walks_;
  std::vector<int> walk_of_dart_;
  std::vector<int> region_of_walk_;
};

// Region view for the faces() operation.
struct RegionInfo {
  int id = -1;
  std::vector<std::vector<int>> boundary_walks;  // directed darts, color via diagram
  int corner_count = 0;
  int genus = 0;
  int circle_sides = 0;
  std::optional<MarkKind> mark;
};

inline std::vector<RegionInfo> faces(const Diagram& d) {
  std::vector<RegionInfo> out;
  for (int r = 0; r < d.region_count(); ++r) {
    RegionInfo info;
    info.id = r;
    for (int w : d.regions[r].walks) info.boundary_walks.push_back(d.walks()[w]);
    info.corner_count = d.region_corners(r);
    info.genus = d.regions[r].genus;
    info.circle_sides = d.region_boundary_count(r) - int(d.regions[r].walks.size());
    info.mark = d.region_mark_kind(r);
    out.push_back(std::move(info));
  }
  return out;
}

inline bool attaching_check(const Diagram& d, Color c) { return d.attaching_ok(c); }

}  // namespace hgc
