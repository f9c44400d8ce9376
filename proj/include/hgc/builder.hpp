#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hgc/diagram.hpp"

namespace hgc {

// Assembles diagrams from explicit vertex rotations. Vertices expose four
// slots in counterclockwise order; each edge plugs into two slots. Region
// structure defaults to one disk per face walk; merges, genus, circles and
// marks can reference either a dart (for regions with walks) or an abstract
// token (for circle-only regions).
class DiagramBuilder {
 public:
  explicit DiagramBuilder(std::string name = "") { d_.name = std::move(name); }

  int add_curve(const std::string& name, Color color) {
    d_.curves.push_back({name, color});
    return int(d_.curves.size()) - 1;
  }

  int add_vertex() {
    slots_.push_back({-1, -1, -1, -1});
    return int(slots_.size()) - 1;
  }

  struct Anchor {
    int vertex;
    int slot;  // 0..3, counterclockwise
  };

  int add_edge(int curve, Anchor from, Anchor to) {
    int e = int(d_.edges.size());
    d_.edges.push_back({curve});
    plug(from, 2 * e);
    plug(to, 2 * e + 1);
    return e;
  }

  // Free circle; region references resolved at build time.
  struct RegionRef {
    // dart >= 0: the region on the given side of that dart;
    // token >= 0: abstract region id.
    int dart = -1;
    Side side = Side::Left;
    int token = -1;
    static RegionRef left_of(int dart) { return {dart, Side::Left, -1}; }
    static RegionRef right_of(int dart) { return {dart, Side::Right, -1}; }
    static RegionRef abstract(int token) { return {-1, Side::Left, token}; }
  };

  void add_circle(int curve, RegionRef left, RegionRef right) {
    circles_.push_back({curve, left, right});
  }

  void merge_regions(RegionRef a, RegionRef b) { merges_.push_back({a, b}); }
  void set_genus(RegionRef r, int g) { genus_.push_back({r, g}); }
  void mark(RegionRef r, MarkKind k) { marks_.push_back({r, k}); }

  // Number of abstract region tokens in play (0 unless declared).
  void declare_abstract_regions(int count) { abstract_count_ = std::max(abstract_count_, count); }

  Diagram build(Diagram::Check level = Diagram::Check::Full) {
    Diagram d = d_;
    d.vertex_count = int(slots_.size());
    d.next.assign(d.edges.size() * 2, -1);
    d.dart_vertex.assign(d.edges.size() * 2, -1);
    for (int v = 0; v < d.vertex_count; ++v) {
      for (int s = 0; s < 4; ++s) {
        int dart = slots_[v][s];
        require(dart >= 0, "vertex valence",
                "vertex " + std::to_string(v) + " slot " + std::to_string(s) + " not plugged");
        d.dart_vertex[dart] = v;
        d.next[dart] = slots_[v][(s + 1) % 4];
      }
    }
    // walks first, regions after
    d.regions.clear();
    d.compute_walks();
    int nw = int(d.walks().size());
    // union-find over walk slots and abstract tokens
    int total = nw + abstract_count_;
    std::vector<int> up(total);
    for (int i = 0; i < total; ++i) up[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    auto slot_of = [&](const RegionRef& r) -> int {
      if (r.token >= 0) {
        require(r.token < abstract_count_, "region tokens", "token out of range");
        return nw + r.token;
      }
      int dart = r.side == Side::Left ? r.dart : Diagram::twin(r.dart);
      return d.walk_of_dart(dart);
    };
    for (auto& [a, b] : merges_) up[find(slot_of(a))] = find(slot_of(b));
    // regions = union-find classes, ordered by smallest member slot
    std::vector<int> min_of_root(total, -1);
    for (int i = 0; i < total; ++i) {
      int r = find(i);
      if (min_of_root[r] < 0) min_of_root[r] = i;
    }
    std::vector<int> region_of_slot(total, -1);
    int nr = 0;
    for (int i = 0; i < total; ++i)
      if (min_of_root[find(i)] == i) region_of_slot[i] = nr++;
    for (int i = 0; i < total; ++i) region_of_slot[i] = region_of_slot[min_of_root[find(i)]];
    d.regions.assign(nr, {});
    for (int w = 0; w < nw; ++w) d.regions[region_of_slot[w]].walks.push_back(w);
    for (auto& [r, g] : genus_) d.regions[region_of_slot[slot_of(r)]].genus = g;
    for (auto& [c, l, rr] : circles_)
      d.circles.push_back({c, region_of_slot[slot_of(l)], region_of_slot[slot_of(rr)]});
    for (auto& [r, k] : marks_) d.marks.push_back({region_of_slot[slot_of(r)], k});
    std::sort(d.marks.begin(), d.marks.end());
    d.finalize(level);
    return d;
  }

 private:
  void plug(Anchor a, int dart) {
    require(a.vertex >= 0 && a.vertex < int(slots_.size()), "vertex valence", "bad vertex");
    require(a.slot >= 0 && a.slot < 4, "vertex valence", "bad slot");
    require(slots_[a.vertex][a.slot] < 0, "vertex valence",
            "slot " + std::to_string(a.slot) + " of vertex " + std::to_string(a.vertex) +
                " already used");
    slots_[a.vertex][a.slot] = dart;
  }

  struct CircleDecl {
    int curve;
    RegionRef left, right;
  };

  Diagram d_;
  std::vector<std::array<int, 4>> slots_;
  std::vector<CircleDecl> circles_;
  std::vector<std::pair<RegionRef, RegionRef>> merges_;
  std::vector<std::pair<RegionRef, int>> genus_;
  std::vector<std::pair<RegionRef, MarkKind>> marks_;
  int abstract_count_ = 0;
};

}  // namespace hgc
