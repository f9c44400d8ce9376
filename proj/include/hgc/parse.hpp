#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/builder.hpp"
#include "hgc/diagram.hpp"

namespace hgc {

// Line-based diagram format ('#' starts a comment):
//
//   diagram NAME
//   vertex VID HID HID HID HID            counterclockwise rotation order
//   edge EID COLOR CURVE VID.HID VID.HID  COLOR is alpha|beta
//   circle CURVE COLOR left=RID right=RID
//   region RID=RID[=RID...] [genus G]     merges faces into one region
//   mark RID basepoint|suture
//
// RIDs index the deterministic face enumeration: faces ordered by smallest
// contained directed half-edge id, where edge EID contributes darts 2k and
// 2k+1 (k the rank of EID) directed from its first anchor. RIDs at and past
// the face count name circle-only regions. `region` lines are only needed
// for non-disk regions (several faces and/or positive genus).

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

inline long to_int(const std::string& s, int line, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw ParseError(line, "expected integer for " + what + ", got '" + s + "'");
  }
}

inline Color to_color(const std::string& s, int line) {
  if (s == "alpha" || s == "a") return Color::Alpha;
  if (s == "beta" || s == "b") return Color::Beta;
  throw ParseError(line, "unknown color '" + s + "'");
}

}  // namespace detail

inline Diagram parse_diagram(const std::string& text,
                             Diagram::Check level = Diagram::Check::Full) {
  using detail::to_color;
  using detail::to_int;
  struct VertexLine {
    long vid;
    std::vector<long> hids;
    int line;
  };
  struct EdgeLine {
    long eid;
    Color color;
    std::string curve;
    std::pair<long, long> a, b;  // (vid, hid)
    int line;
  };
  struct CircleLine {
    std::string curve;
    Color color;
    long left, right;
    int line;
  };
  struct RegionLine {
    std::vector<long> rids;
    int genus;
    int line;
  };
  struct MarkLine {
    long rid;
    MarkKind kind;
    int line;
  };

  std::string name;
  std::vector<VertexLine> vlines;
  std::vector<EdgeLine> elines;
  std::vector<CircleLine> clines;
  std::vector<RegionLine> rlines;
  std::vector<MarkLine> mlines;

  std::istringstream in(text);
  std::string line;
  int ln = 0;
  bool started = false, done = false;
  auto parse_anchor = [&](const std::string& s, int lno) -> std::pair<long, long> {
    size_t dot = s.find('.');
    if (dot == std::string::npos) throw ParseError(lno, "expected VID.HID, got '" + s + "'");
    return {to_int(s.substr(0, dot), lno, "vertex id"),
            to_int(s.substr(dot + 1), lno, "half-edge id")};
  };
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::tokens_of(line);
    if (toks.empty()) {
      if (started) done = true;  // blank line terminates the document
      continue;
    }
    if (done) throw ParseError(ln, "content after blank-line terminator");
    const std::string& kw = toks[0];
    if (kw == "diagram") {
      if (started) throw ParseError(ln, "duplicate diagram header");
      if (toks.size() != 2) throw ParseError(ln, "usage: diagram NAME");
      name = toks[1];
      started = true;
    } else if (!started) {
      throw ParseError(ln, "expected 'diagram NAME' header first");
    } else if (kw == "vertex") {
      if (toks.size() != 6)
        throw ParseError(ln, "vertex valence: vertex must list exactly 4 half-edges");
      VertexLine v;
      v.vid = to_int(toks[1], ln, "vertex id");
      for (int i = 2; i < 6; ++i) v.hids.push_back(to_int(toks[i], ln, "half-edge id"));
      v.line = ln;
      vlines.push_back(v);
    } else if (kw == "edge") {
      if (toks.size() != 6) throw ParseError(ln, "usage: edge EID COLOR CURVE VID.HID VID.HID");
      EdgeLine e;
      e.eid = to_int(toks[1], ln, "edge id");
      e.color = to_color(toks[2], ln);
      e.curve = toks[3];
      e.a = parse_anchor(toks[4], ln);
      e.b = parse_anchor(toks[5], ln);
      e.line = ln;
      elines.push_back(e);
    } else if (kw == "circle") {
      if (toks.size() != 5 || toks[3].rfind("left=", 0) != 0 || toks[4].rfind("right=", 0) != 0)
        throw ParseError(ln, "usage: circle CURVE COLOR left=RID right=RID");
      CircleLine c;
      c.curve = toks[1];
      c.color = to_color(toks[2], ln);
      c.left = to_int(toks[3].substr(5), ln, "region id");
      c.right = to_int(toks[4].substr(6), ln, "region id");
      c.line = ln;
      clines.push_back(c);
    } else if (kw == "region") {
      if (toks.size() != 2 && !(toks.size() == 4 && toks[2] == "genus"))
        throw ParseError(ln, "usage: region RID[=RID...] [genus G]");
      RegionLine r;
      r.genus = toks.size() == 4 ? int(to_int(toks[3], ln, "genus")) : 0;
      std::string ids = toks[1];
      size_t pos = 0;
      while (true) {
        size_t eq = ids.find('=', pos);
        r.rids.push_back(to_int(ids.substr(pos, eq - pos), ln, "region id"));
        if (eq == std::string::npos) break;
        pos = eq + 1;
      }
      r.line = ln;
      rlines.push_back(r);
    } else if (kw == "mark") {
      if (toks.size() != 3) throw ParseError(ln, "usage: mark RID basepoint|suture");
      MarkLine m;
      m.rid = to_int(toks[1], ln, "region id");
      if (toks[2] == "basepoint") m.kind = MarkKind::Basepoint;
      else if (toks[2] == "suture") m.kind = MarkKind::Suture;
      else throw ParseError(ln, "unknown mark kind '" + toks[2] + "'");
      m.line = ln;
      mlines.push_back(m);
    } else {
      throw ParseError(ln, "unknown directive '" + kw + "'");
    }
  }
  if (!started) throw ParseError(ln, "missing 'diagram NAME' header");

  // vertices sorted by id, edges sorted by id: dart numbering is stable
  // under line reordering
  std::sort(vlines.begin(), vlines.end(),
            [](const VertexLine& a, const VertexLine& b) { return a.vid < b.vid; });
  std::sort(elines.begin(), elines.end(),
            [](const EdgeLine& a, const EdgeLine& b) { return a.eid < b.eid; });

  DiagramBuilder bld(name);
  std::map<long, int> vid_to_idx;
  std::map<std::pair<long, long>, DiagramBuilder::Anchor> anchor_of;
  for (const auto& v : vlines) {
    if (vid_to_idx.count(v.vid)) throw ParseError(v.line, "duplicate vertex id");
    int idx = bld.add_vertex();
    vid_to_idx[v.vid] = idx;
    for (int s = 0; s < 4; ++s) {
      auto key = std::make_pair(v.vid, v.hids[s]);
      if (anchor_of.count(key)) throw ParseError(v.line, "duplicate half-edge id on vertex");
      anchor_of[key] = {idx, s};
    }
  }
  std::map<std::string, std::pair<int, Color>> curve_of;
  std::set<long> eids;
  std::set<std::pair<long, long>> used_anchors;
  auto get_curve = [&](const std::string& cname, Color col, int lno) {
    auto it = curve_of.find(cname);
    if (it != curve_of.end()) {
      if (it->second.second != col)
        throw ParseError(lno, "curve '" + cname + "' used with two colors");
      return it->second.first;
    }
    int id = bld.add_curve(cname, col);
    curve_of[cname] = {id, col};
    return id;
  };
  for (const auto& e : elines) {
    if (!eids.insert(e.eid).second) throw ParseError(e.line, "duplicate edge id");
    for (auto anchor : {e.a, e.b}) {
      if (!anchor_of.count(anchor))
        throw ParseError(e.line, "unknown anchor " + std::to_string(anchor.first) + "." +
                                     std::to_string(anchor.second));
      if (!used_anchors.insert(anchor).second)
        throw ParseError(e.line, "anchor used twice: " + std::to_string(anchor.first) + "." +
                                     std::to_string(anchor.second));
    }
    bld.add_edge(get_curve(e.curve, e.color, e.line), anchor_of[e.a], anchor_of[e.b]);
  }
  // First build just the map to learn the face count, then attach regions.
  DiagramBuilder probe_bld = bld;
  Diagram probe = probe_bld.build(Diagram::Check::MapOnly);
  int nfaces = int(probe.walks().size());
  auto ref_of = [&](long rid, int lno) -> DiagramBuilder::RegionRef {
    if (rid < 0) throw ParseError(lno, "negative region id");
    if (rid < nfaces) return DiagramBuilder::RegionRef::left_of(probe.walks()[rid][0]);
    return DiagramBuilder::RegionRef::abstract(int(rid) - nfaces);
  };
  int max_token = 0;
  for (const auto& c : clines)
    max_token = std::max<long>(max_token, std::max(c.left, c.right) - nfaces + 1);
  for (const auto& r : rlines)
    for (long id : r.rids) max_token = std::max<long>(max_token, id - nfaces + 1);
  for (const auto& m : mlines) max_token = std::max<long>(max_token, m.rid - nfaces + 1);
  bld.declare_abstract_regions(max_token);
  for (const auto& c : clines)
    bld.add_circle(get_curve(c.curve, c.color, c.line), ref_of(c.left, c.line),
                   ref_of(c.right, c.line));
  for (const auto& r : rlines) {
    for (size_t i = 1; i < r.rids.size(); ++i)
      bld.merge_regions(ref_of(r.rids[0], r.line), ref_of(r.rids[i], r.line));
    if (r.genus) bld.set_genus(ref_of(r.rids[0], r.line), r.genus);
  }
  for (const auto& m : mlines) bld.mark(ref_of(m.rid, m.line), m.kind);
  return bld.build(level);
}

// Inverse of parse_diagram up to renaming of ids. Emits vertices and edges
// in internal order with HID = dart id.
inline std::string render_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "diagram " << (d.name.empty() ? std::string("unnamed") : d.name) << "\n";
  // rotation per vertex starting at smallest dart
  std::vector<std::vector<int>> rot(d.vertex_count);
  for (int dart = 0; dart < d.dart_count(); ++dart) {
    int v = d.dart_vertex[dart];
    if (!rot[v].empty()) continue;
    int mn = dart, e = dart;
    do {
      mn = std::min(mn, e);
      e = d.next[e];
    } while (e != dart);
    e = mn;
    do {
      rot[v].push_back(e);
      e = d.next[e];
    } while (e != mn);
  }
  for (int v = 0; v < d.vertex_count; ++v) {
    out << "vertex " << v;
    for (int dart : rot[v]) out << " " << dart;
    out << "\n";
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    const auto& cu = d.curves[d.edges[e].curve];
    out << "edge " << e << " " << color_name(cu.color) << " " << cu.name << " "
        << d.dart_vertex[2 * e] << "." << 2 * e << " " << d.dart_vertex[2 * e + 1] << "."
        << 2 * e + 1 << "\n";
  }
  // region ids for the file: walk-regions by smallest walk; circle-only
  // regions numbered past the face count in diagram order
  int nfaces = int(d.walks().size());
  std::vector<long> file_id(d.region_count(), -1);
  int next_token = nfaces;
  for (int r = 0; r < d.region_count(); ++r) {
    if (d.regions[r].walks.empty()) file_id[r] = next_token++;
    else file_id[r] = *std::min_element(d.regions[r].walks.begin(), d.regions[r].walks.end());
  }
  for (const auto& c : d.circles) {
    const auto& cu = d.curves[c.curve];
    out << "circle " << cu.name << " " << color_name(cu.color) << " left=" << file_id[c.left_region]
        << " right=" << file_id[c.right_region] << "\n";
  }
  for (int r = 0; r < d.region_count(); ++r) {
    const auto& reg = d.regions[r];
    if (reg.walks.size() <= 1 && reg.genus == 0 && !reg.walks.empty()) continue;
    if (reg.walks.empty() && reg.genus == 0) continue;  // plain circle-only region
    out << "region ";
    if (reg.walks.empty()) out << file_id[r];
    else {
      std::vector<int> ws = reg.walks;
      std::sort(ws.begin(), ws.end());
      for (size_t i = 0; i < ws.size(); ++i) out << (i ? "=" : "") << ws[i];
    }
    if (reg.genus) out << " genus " << reg.genus;
    out << "\n";
  }
  std::vector<Diagram::Mark> marks = d.marks;
  std::sort(marks.begin(), marks.end(), [&](const Diagram::Mark& a, const Diagram::Mark& b) {
    return file_id[a.region] != file_id[b.region] ? file_id[a.region] < file_id[b.region]
                                                  : a.kind < b.kind;
  });
  for (const auto& m : marks) out << "mark " << file_id[m.region] << " " << mark_name(m.kind) << "\n";
  return out.str();
}

}  // namespace hgc
