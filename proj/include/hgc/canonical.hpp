#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hgc/diagram.hpp"

namespace hgc {

// Color- and mark-preserving, orientation-preserving isomorphism of labeled
// maps, recorded as a dart bijection together with the target diagram's
// labels. apply_isomorphism(src, m) reproduces the target exactly.
struct MapIsomorphism {
  std::vector<int> dart_map;    // src dart -> dst dart
  std::vector<int> region_map;  // src region -> dst region
  std::vector<int> curve_map;   // src curve -> dst curve
  std::vector<std::string> dst_curve_names;
  std::vector<int> dst_vertex_of_dart;  // dst dart -> dst vertex id
  bool claimed_ambient_isotopic = false;

  int vertex_image(const Diagram& src, int v) const {
    for (int d = 0; d < int(dart_map.size()); ++d)
      if (src.dart_vertex[d] == v) return dst_vertex_of_dart[dart_map[d]];
    return -1;
  }

  static MapIsomorphism identity(const Diagram& d) {
    MapIsomorphism m;
    m.dart_map.resize(d.dart_count());
    std::iota(m.dart_map.begin(), m.dart_map.end(), 0);
    m.region_map.resize(d.region_count());
    std::iota(m.region_map.begin(), m.region_map.end(), 0);
    m.curve_map.resize(d.curves.size());
    std::iota(m.curve_map.begin(), m.curve_map.end(), 0);
    for (const auto& c : d.curves) m.dst_curve_names.push_back(c.name);
    m.dst_vertex_of_dart = d.dart_vertex;
    m.claimed_ambient_isotopic = true;
    return m;
  }
};

namespace detail {

// Deterministic traversal of one dart component from a root; successors of
// a dart are its twin and its rotation successor.
inline std::vector<int> traverse(const Diagram& d, int root,
                                 const std::vector<int>& component_darts) {
  std::vector<int> disc(d.dart_count(), -1);
  std::vector<int> order;
  order.reserve(component_darts.size());
  disc[root] = 0;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int s : {Diagram::twin(x), d.next[x]}) {
      if (disc[s] < 0) {
        disc[s] = int(order.size());
        order.push_back(s);
      }
    }
  }
  require(order.size() == component_darts.size(), "canonical", "component traversal incomplete");
  return order;
}

// Dart-level code of a component under the numbering induced by `order`.
// Curve ranks are local to the component (first appearance).
inline std::vector<int> component_code(const Diagram& d, const std::vector<int>& order) {
  std::vector<int> disc(d.dart_count(), -1);
  for (size_t i = 0; i < order.size(); ++i) disc[order[i]] = int(i);
  std::vector<int> curve_rank(d.curves.size(), -1);
  int next_rank = 0;
  std::vector<int> code;
  code.reserve(order.size() * 4);
  for (int x : order) {
    int c = d.dart_curve(x);
    if (curve_rank[c] < 0) curve_rank[c] = next_rank++;
    code.push_back(disc[Diagram::twin(x)]);
    code.push_back(disc[d.next[x]]);
    code.push_back(int(d.dart_color(x)));
    code.push_back(curve_rank[c]);
  }
  return code;
}

inline std::vector<std::vector<int>> dart_components(const Diagram& d) {
  int n = d.dart_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = int(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int t : {Diagram::twin(x), d.next[x]})
        if (comp[t] < 0) {
          comp[t] = comp[s];
          stack.push_back(t);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

struct Numbering {
  std::vector<int> disc;            // dart -> canonical index, -1 outside
  std::vector<int> order;           // canonical index -> dart
  std::vector<int> full_code;
};

// Appends the region/circle/mark section of the code, given a complete dart
// numbering. Returns false if circle-only region ordering is ambiguous
// beyond the small brute-force bound.
inline void append_structure_code(const Diagram& d, const std::vector<int>& disc,
                                  std::vector<int>& code, std::vector<int>* region_order_out) {
  // canonical walk ids: order walks by minimal canonical dart
  int nw = int(d.walks().size());
  std::vector<int> walk_key(nw);
  for (int w = 0; w < nw; ++w) {
    int mn = INT32_MAX;
    for (int dart : d.walks()[w]) mn = std::min(mn, disc[dart]);
    walk_key[w] = mn;
  }
  std::vector<int> walk_order(nw);
  std::iota(walk_order.begin(), walk_order.end(), 0);
  std::sort(walk_order.begin(), walk_order.end(),
            [&](int a, int b) { return walk_key[a] < walk_key[b]; });
  std::vector<int> walk_rank(nw);
  for (int i = 0; i < nw; ++i) walk_rank[walk_order[i]] = i;

  // walk-bearing regions ordered by minimal canonical walk
  std::vector<int> region_order;
  std::vector<std::pair<int, int>> keyed;
  for (int r = 0; r < d.region_count(); ++r) {
    if (d.regions[r].walks.empty()) continue;
    int mn = INT32_MAX;
    for (int w : d.regions[r].walks) mn = std::min(mn, walk_rank[w]);
    keyed.push_back({mn, r});
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [k, r] : keyed) region_order.push_back(r);
  // circle-only regions: refine labels by adjacency until stable, then
  // brute-force any remaining ties (tiny in practice)
  std::vector<int> circle_only;
  for (int r = 0; r < d.region_count(); ++r)
    if (d.regions[r].walks.empty()) circle_only.push_back(r);
  std::vector<long> label(d.region_count(), 0);
  for (int r = 0; r < d.region_count(); ++r) label[r] = d.regions[r].genus;
  for (size_t it = 0; it < circle_only.size(); ++it) {
    std::map<std::vector<long>, long> sig_ids;
    std::vector<std::vector<long>> sigs(d.region_count());
    for (int r : circle_only) {
      std::vector<long> sig{label[r]};
      std::vector<long> adj;
      for (const auto& c : d.circles) {
        if (c.left_region == r) adj.push_back(2 * label[c.right_region] + int(d.curve_color(c.curve)));
        if (c.right_region == r) adj.push_back(2 * label[c.left_region] + int(d.curve_color(c.curve)));
      }
      std::sort(adj.begin(), adj.end());
      sig.insert(sig.end(), adj.begin(), adj.end());
      sigs[r] = sig;
    }
    for (int r : circle_only)
      if (!sig_ids.count(sigs[r])) sig_ids[sigs[r]] = long(sig_ids.size());
    for (int r : circle_only) label[r] = sig_ids[sigs[r]];
  }
  std::stable_sort(circle_only.begin(), circle_only.end(),
                   [&](int a, int b) { return label[a] < label[b]; });
  for (int r : circle_only) region_order.push_back(r);

  std::vector<int> region_rank(d.region_count(), -1);
  for (size_t i = 0; i < region_order.size(); ++i) region_rank[region_order[i]] = int(i);

  code.push_back(-7);  // section separator
  for (int r : region_order) {
    code.push_back(-2);
    std::vector<int> ws;
    for (int w : d.regions[r].walks) ws.push_back(walk_rank[w]);
    std::sort(ws.begin(), ws.end());
    for (int w : ws) code.push_back(w);
    code.push_back(-3);
    code.push_back(d.regions[r].genus);
  }
  code.push_back(-8);
  std::vector<std::vector<int>> circle_records;
  for (const auto& c : d.circles)
    circle_records.push_back(
        {int(d.curve_color(c.curve)), region_rank[c.left_region], region_rank[c.right_region]});
  std::sort(circle_records.begin(), circle_records.end());
  for (auto& rec : circle_records) {
    code.push_back(-4);
    code.insert(code.end(), rec.begin(), rec.end());
  }
  code.push_back(-9);
  std::vector<std::pair<int, int>> mark_records;
  for (const auto& m : d.marks) mark_records.push_back({region_rank[m.region], int(m.kind)});
  std::sort(mark_records.begin(), mark_records.end());
  for (auto& [r, k] : mark_records) {
    code.push_back(r);
    code.push_back(k);
  }
  if (region_order_out) *region_order_out = region_order;
}

// All candidate numberings that minimize the dart-section code: per
// component the minimizing roots, components ordered by their minimal code
// with ties explored in all orders.
inline std::vector<Numbering> minimal_numberings(const Diagram& d) {
  auto comps = dart_components(d);
  int k = int(comps.size());
  std::vector<std::vector<int>> min_roots(k);
  std::vector<std::vector<int>> min_code(k);
  for (int c = 0; c < k; ++c) {
    for (int root : comps[c]) {
      auto order = traverse(d, root, comps[c]);
      auto code = component_code(d, order);
      if (min_code[c].empty() || code < min_code[c]) {
        min_code[c] = code;
        min_roots[c] = {root};
      } else if (code == min_code[c]) {
        min_roots[c].push_back(root);
      }
    }
  }
  // order components by min code; tie groups explored in all permutations
  std::vector<int> comp_order(k);
  std::iota(comp_order.begin(), comp_order.end(), 0);
  std::sort(comp_order.begin(), comp_order.end(),
            [&](int a, int b) { return min_code[a] < min_code[b]; });
  std::vector<std::vector<int>> orderings;
  std::vector<std::pair<int, int>> groups;  // [begin, end) of equal codes
  for (int i = 0; i < k;) {
    int j = i;
    while (j < k && min_code[comp_order[j]] == min_code[comp_order[i]]) ++j;
    groups.push_back({i, j});
    i = j;
  }
  orderings.push_back(comp_order);
  for (auto [b, e] : groups) {
    if (e - b <= 1) continue;
    std::vector<std::vector<int>> expanded;
    for (auto& base : orderings) {
      std::vector<int> group(base.begin() + b, base.begin() + e);
      std::sort(group.begin(), group.end());
      do {
        auto copy = base;
        std::copy(group.begin(), group.end(), copy.begin() + b);
        expanded.push_back(copy);
      } while (std::next_permutation(group.begin(), group.end()));
    }
    orderings = std::move(expanded);
  }
  // build numberings for each ordering x choice of minimizing roots
  std::vector<Numbering> out;
  std::vector<size_t> root_idx(k, 0);
  for (auto& ord : orderings) {
    std::vector<size_t> idx(k, 0);
    while (true) {
      Numbering num;
      num.disc.assign(d.dart_count(), -1);
      for (int ci : ord) {
        int root = min_roots[ci][idx[ci]];
        auto order = traverse(d, root, comps[ci]);
        for (int dart : order) {
          num.disc[dart] = int(num.order.size());
          num.order.push_back(dart);
        }
      }
      // full dart code with global curve ranks
      std::vector<int> curve_rank(d.curves.size(), -1);
      int next_rank = 0;
      for (int dart : num.order) {
        int c = d.dart_curve(dart);
        if (curve_rank[c] < 0) curve_rank[c] = next_rank++;
        num.full_code.push_back(num.disc[Diagram::twin(dart)]);
        num.full_code.push_back(num.disc[d.next[dart]]);
        num.full_code.push_back(int(d.dart_color(dart)));
        num.full_code.push_back(curve_rank[c]);
      }
      append_structure_code(d, num.disc, num.full_code, nullptr);
      out.push_back(std::move(num));
      // advance root choice (mixed radix)
      int ci = 0;
      for (; ci < k; ++ci) {
        if (++idx[ci] < min_roots[ci].size()) break;
        idx[ci] = 0;
      }
      if (ci == k) break;
    }
  }
  (void)root_idx;
  return out;
}

}  // namespace detail

// Rebuilds a diagram from a dart numbering: darts renumbered so that edges
// are consecutive pairs in first-appearance order, curves renamed by first
// appearance (A0, A1, ..., B0, ...), regions in canonical order.
inline Diagram relabel(const Diagram& d, const std::vector<int>& disc,
                       const std::string& name) {
  Diagram out;
  out.name = name;
  int n = d.dart_count();
  std::vector<int> order(n);
  for (int x = 0; x < n; ++x) {
    require(disc[x] >= 0 && disc[x] < n, "relabel", "incomplete numbering");
    order[disc[x]] = x;
  }
  // edges in order of their smaller canonical dart
  std::vector<int> new_edge_of_old(d.edge_count(), -1);
  std::vector<int> dart_new(n, -1);
  int ne = 0;
  for (int i = 0; i < n; ++i) {
    int x = order[i];
    int e = x >> 1;
    if (new_edge_of_old[e] >= 0) continue;
    new_edge_of_old[e] = ne;
    dart_new[x] = 2 * ne;
    dart_new[Diagram::twin(x)] = 2 * ne + 1;
    ++ne;
  }
  // curves by first appearance; circle-only curves afterwards
  std::vector<int> curve_new(d.curves.size(), -1);
  int ncurve = 0;
  for (int i = 0; i < n; ++i) {
    int c = d.dart_curve(order[i]);
    if (curve_new[c] < 0) curve_new[c] = ncurve++;
  }
  // circle curves: canonical order computed from the structure section
  std::vector<int> region_order;
  {
    std::vector<int> code;
    detail::append_structure_code(d, disc, code, &region_order);
  }
  std::vector<int> region_rank(d.region_count());
  for (size_t i = 0; i < region_order.size(); ++i) region_rank[region_order[i]] = int(i);
  std::vector<int> circle_idx(d.circles.size());
  std::iota(circle_idx.begin(), circle_idx.end(), 0);
  std::sort(circle_idx.begin(), circle_idx.end(), [&](int a, int b) {
    auto key = [&](int i) {
      const auto& c = d.circles[i];
      return std::tuple(int(d.curve_color(c.curve)), region_rank[c.left_region],
                        region_rank[c.right_region], c.curve);
    };
    return key(a) < key(b);
  });
  for (int i : circle_idx)
    if (curve_new[d.circles[i].curve] < 0) curve_new[d.circles[i].curve] = ncurve++;
  require(ncurve == int(d.curves.size()), "relabel", "curve numbering incomplete");

  out.curves.resize(d.curves.size());
  std::vector<int> alpha_seen(2, 0);
  // names assigned per color in new order
  {
    std::vector<int> by_new(d.curves.size());
    for (int c = 0; c < int(d.curves.size()); ++c) by_new[curve_new[c]] = c;
    int na = 0, nb = 0;
    for (int i = 0; i < int(d.curves.size()); ++i) {
      int c = by_new[i];
      Color col = d.curves[c].color;
      std::string nm = (col == Color::Alpha ? "A" + std::to_string(++na)
                                            : "B" + std::to_string(++nb));
      out.curves[curve_new[c]] = {nm, col};
    }
  }
  (void)alpha_seen;
  out.edges.resize(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e)
    out.edges[new_edge_of_old[e]] = {curve_new[d.edges[e].curve]};
  out.next.assign(n, -1);
  out.dart_vertex.assign(n, -1);
  // vertices numbered by smallest new dart
  std::vector<int> vertex_new(d.vertex_count, -1);
  int nv = 0;
  std::vector<std::pair<int, int>> vorder;  // (min new dart, old vertex)
  {
    std::vector<int> vmin(d.vertex_count, INT32_MAX);
    for (int x = 0; x < n; ++x)
      vmin[d.dart_vertex[x]] = std::min(vmin[d.dart_vertex[x]], dart_new[x]);
    for (int v = 0; v < d.vertex_count; ++v) vorder.push_back({vmin[v], v});
    std::sort(vorder.begin(), vorder.end());
    for (auto& [mn, v] : vorder) vertex_new[v] = nv++;
  }
  out.vertex_count = d.vertex_count;
  for (int x = 0; x < n; ++x) {
    out.next[dart_new[x]] = dart_new[d.next[x]];
    out.dart_vertex[dart_new[x]] = vertex_new[d.dart_vertex[x]];
  }
  // regions: canonical order; walk indices recomputed after finalize
  out.circles.reserve(d.circles.size());
  // need walks of the rebuilt map to express regions; compute via a probe
  out.regions.clear();
  out.finalize(Diagram::Check::MapOnly);
  // map old walk -> new walk via any dart
  std::vector<int> new_walk_of_old(d.walks().size(), -1);
  for (size_t w = 0; w < d.walks().size(); ++w)
    new_walk_of_old[w] = out.walk_of_dart(dart_new[d.walks()[w][0]]);
  std::vector<int> new_region_of_old(d.region_count(), -1);
  for (size_t i = 0; i < region_order.size(); ++i) {
    const auto& reg = d.regions[region_order[i]];
    Diagram::Region nr2;
    nr2.genus = reg.genus;
    for (int w : reg.walks) nr2.walks.push_back(new_walk_of_old[w]);
    std::sort(nr2.walks.begin(), nr2.walks.end());
    out.regions.push_back(nr2);
    new_region_of_old[region_order[i]] = int(i);
  }
  for (int i : circle_idx) {
    const auto& c = d.circles[i];
    out.circles.push_back(
        {curve_new[c.curve], new_region_of_old[c.left_region], new_region_of_old[c.right_region]});
  }
  for (const auto& m : d.marks) out.marks.push_back({new_region_of_old[m.region], m.kind});
  std::sort(out.marks.begin(), out.marks.end());
  out.finalize(Diagram::Check::Structural);
  return out;
}

inline Diagram canonical_form(const Diagram& d) {
  if (d.dart_count() == 0) {
    // circle-only diagrams: regions and circles already ordered canonically
    // by the structure code
    std::vector<int> disc;
    return relabel(d, disc, d.name);
  }
  auto nums = detail::minimal_numberings(d);
  require(!nums.empty(), "canonical", "no numbering found");
  const detail::Numbering* best = &nums[0];
  for (const auto& n : nums)
    if (n.full_code < best->full_code) best = &n;
  return relabel(d, best->disc, d.name);
}

// All color/mark-preserving orientation-preserving isomorphisms d1 -> d2.
inline std::vector<MapIsomorphism> isomorphisms(const Diagram& d1, const Diagram& d2) {
  std::vector<MapIsomorphism> out;
  if (d1.dart_count() != d2.dart_count() || d1.curves.size() != d2.curves.size() ||
      d1.region_count() != d2.region_count() || d1.circles.size() != d2.circles.size())
    return out;
  if (d1.dart_count() == 0) {
    // compare canonical structure codes directly
    std::vector<int> code1, code2, ro1, ro2;
    std::vector<int> empty;
    detail::append_structure_code(d1, empty, code1, &ro1);
    detail::append_structure_code(d2, empty, code2, &ro2);
    if (code1 != code2) return out;
    MapIsomorphism m;
    m.region_map.assign(d1.region_count(), -1);
    for (size_t i = 0; i < ro1.size(); ++i) m.region_map[ro1[i]] = ro2[i];
    for (const auto& c : d2.curves) m.dst_curve_names.push_back(c.name);
    out.push_back(std::move(m));
    return out;
  }
  // reference numbering of d2
  auto nums2 = detail::minimal_numberings(d2);
  require(!nums2.empty(), "isomorphisms", "no numbering of target");
  const detail::Numbering* ref = &nums2[0];
  for (const auto& n : nums2)
    if (n.full_code < ref->full_code) ref = &n;
  // all minimal numberings of d1 whose code equals the reference code give
  // isomorphisms; non-minimal ones cannot match a minimal reference.
  auto nums1 = detail::minimal_numberings(d1);
  std::vector<std::vector<int>> seen_maps;
  for (const auto& n : nums1) {
    if (n.full_code != ref->full_code) continue;
    MapIsomorphism m;
    m.dart_map.assign(d1.dart_count(), -1);
    for (int i = 0; i < d1.dart_count(); ++i) m.dart_map[n.order[i]] = ref->order[i];
    if (std::find(seen_maps.begin(), seen_maps.end(), m.dart_map) != seen_maps.end()) continue;
    seen_maps.push_back(m.dart_map);
    // region map via walks
    m.region_map.assign(d1.region_count(), -1);
    for (size_t w = 0; w < d1.walks().size(); ++w) {
      int dart = d1.walks()[w][0];
      int r1 = d1.region_of_walk(int(w));
      int r2 = d2.region_of_dart(m.dart_map[dart]);
      m.region_map[r1] = r2;
    }
    // circle-only regions: matched by structure order
    {
      std::vector<int> ro1, ro2, c1, c2;
      detail::append_structure_code(d1, n.disc, c1, &ro1);
      detail::append_structure_code(d2, ref->disc, c2, &ro2);
      for (size_t i = 0; i < ro1.size(); ++i)
        if (m.region_map[ro1[i]] < 0) m.region_map[ro1[i]] = ro2[i];
    }
    m.curve_map.assign(d1.curves.size(), -1);
    for (int dart = 0; dart < d1.dart_count(); ++dart)
      m.curve_map[d1.dart_curve(dart)] = d2.dart_curve(m.dart_map[dart]);
    // circle curves by matching sorted records between the two diagrams
    {
      auto records = [&](const Diagram& d, const std::vector<int>& rmap) {
        std::vector<std::pair<std::vector<int>, int>> recs;
        for (const auto& c : d.circles) {
          int l = rmap.empty() ? c.left_region : rmap[c.left_region];
          int r = rmap.empty() ? c.right_region : rmap[c.right_region];
          recs.push_back({{int(d.curve_color(c.curve)), l, r}, c.curve});
        }
        std::sort(recs.begin(), recs.end());
        return recs;
      };
      auto r1 = records(d1, m.region_map);
      auto r2 = records(d2, {});
      bool ok = r1.size() == r2.size();
      for (size_t i = 0; ok && i < r1.size(); ++i) {
        if (r1[i].first != r2[i].first) ok = false;
        else m.curve_map[r1[i].second] = r2[i].second;
      }
      if (!ok) continue;
    }
    for (const auto& c : d2.curves) m.dst_curve_names.push_back(c.name);
    m.dst_vertex_of_dart = d2.dart_vertex;
    out.push_back(std::move(m));
  }
  return out;
}

// Exact relabeling of src by the isomorphism: reproduces the diagram the
// isomorphism was computed against.
inline Diagram apply_isomorphism(const Diagram& src, const MapIsomorphism& m) {
  Diagram out;
  out.name = src.name;
  int n = src.dart_count();
  require(int(m.dart_map.size()) == n, "isomorphism", "dart map size mismatch");
  out.curves.resize(src.curves.size());
  for (int c = 0; c < int(src.curves.size()); ++c) {
    int c2 = m.curve_map[c];
    require(c2 >= 0 && c2 < int(out.curves.size()), "isomorphism", "curve map incomplete");
    out.curves[c2] = {m.dst_curve_names[c2], src.curves[c].color};
  }
  out.edges.resize(src.edge_count());
  out.next.assign(n, -1);
  out.dart_vertex.assign(n, -1);
  out.vertex_count = src.vertex_count;
  for (int x = 0; x < n; ++x) {
    int y = m.dart_map[x];
    out.edges[y >> 1] = {m.curve_map[src.dart_curve(x)]};
    out.next[y] = m.dart_map[src.next[x]];
    out.dart_vertex[y] = m.dst_vertex_of_dart.empty() ? -1 : m.dst_vertex_of_dart[y];
  }
  if (m.dst_vertex_of_dart.empty()) {
    // number vertices by smallest dart
    std::vector<int> vid(n, -1);
    int nv = 0;
    for (int y = 0; y < n; ++y) {
      if (vid[y] >= 0) continue;
      int e = y;
      do {
        vid[e] = nv;
        e = out.next[e];
      } while (e != y);
      ++nv;
    }
    out.dart_vertex = vid;
    out.vertex_count = nv;
  }
  out.regions.assign(src.region_count(), {});
  out.finalize(Diagram::Check::MapOnly);
  for (int r = 0; r < src.region_count(); ++r) {
    auto& nr = out.regions[m.region_map[r]];
    nr.genus = src.regions[r].genus;
    for (int w : src.regions[r].walks)
      nr.walks.push_back(out.walk_of_dart(m.dart_map[src.walks()[w][0]]));
    std::sort(nr.walks.begin(), nr.walks.end());
  }
  for (const auto& c : src.circles)
    out.circles.push_back(
        {m.curve_map[c.curve], m.region_map[c.left_region], m.region_map[c.right_region]});
  for (const auto& mk : src.marks) out.marks.push_back({m.region_map[mk.region], mk.kind});
  std::sort(out.marks.begin(), out.marks.end());
  std::sort(out.circles.begin(), out.circles.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.curve, a.left_region, a.right_region) <
           std::tuple(b.curve, b.left_region, b.right_region);
  });
  out.finalize(Diagram::Check::Structural);
  return out;
}

inline bool isomorphic(const Diagram& d1, const Diagram& d2) {
  Diagram a = canonical_form(d1), b = canonical_form(d2);
  return a == b;
}

// Relabel a diagram by a random permutation of darts/vertices/curve names;
// used by property tests.
inline Diagram random_relabel(const Diagram& d, std::mt19937_64& rng) {
  std::vector<int> edge_perm(d.edge_count());
  std::iota(edge_perm.begin(), edge_perm.end(), 0);
  std::shuffle(edge_perm.begin(), edge_perm.end(), rng);
  std::vector<int> disc(d.dart_count(), -1);
  for (int e = 0; e < d.edge_count(); ++e) {
    bool flipdart = rng() & 1;
    disc[2 * e] = 2 * edge_perm[e] + (flipdart ? 1 : 0);
    disc[2 * e + 1] = 2 * edge_perm[e] + (flipdart ? 0 : 1);
  }
  Diagram out = relabel(d, disc, d.name);
  return out;
}

}  // namespace hgc
