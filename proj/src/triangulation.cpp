#include "vbt/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vbt/errors.hpp"

namespace vbt {

namespace {

int mod3(int k) { return ((k % 3) + 3) % 3; }

} // namespace

int Triangulation::arc_count() const {
  int n = 0;
  for (const auto& e : edges)
    if (e.kind == EdgeKind::Arc) ++n;
  return n;
}

std::vector<int> Triangulation::arc_labels() const {
  std::vector<int> out;
  for (const auto& e : edges)
    if (e.kind == EdgeKind::Arc) out.push_back(e.label);
  std::sort(out.begin(), out.end());
  return out;
}

int Triangulation::edge_of_arc(int label) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].kind == EdgeKind::Arc && edges[i].label == label) return i;
  throw ValidationError("no arc with label " + std::to_string(label));
}

int Triangulation::edge_of_boundary(int label) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].kind == EdgeKind::Boundary && edges[i].label == label) return i;
  throw ValidationError("no boundary segment with label " + std::to_string(label));
}

std::vector<std::pair<int, int>> Triangulation::slots_of(int edge_id) const {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t)
    for (int k = 0; k < 3; ++k)
      if (triangles[t].edge[k] == edge_id) out.emplace_back(t, k);
  return out;
}

bool Triangulation::is_folded_edge(int edge_id) const {
  auto sl = slots_of(edge_id);
  return sl.size() == 2 && sl[0].first == sl[1].first;
}

Triangulation::FoldedPair Triangulation::folded_pair_at(int triangle) const {
  const Triangle& tr = triangles[triangle];
  for (int k = 0; k < 3; ++k) {
    if (tr.edge[k] == tr.edge[mod3(k + 1)]) {
      // Slots k, k+1 carry the folded edge; the corner between them is the
      // enclosed puncture and the remaining side is the loop.
      int pv = tr.vert[mod3(k + 1)];
      if (vertices[pv].role != VertexRole::Puncture)
        throw ValidationError("folded triangle does not enclose a puncture");
      return {tr.edge[mod3(k + 2)], tr.edge[k], pv, triangle};
    }
  }
  throw ValidationError("triangle is not self-folded");
}

std::vector<int> Triangulation::folded_punctures() const {
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const Triangle& tr = triangles[t];
    if (tr.edge[0] == tr.edge[1] || tr.edge[1] == tr.edge[2] ||
        tr.edge[2] == tr.edge[0])
      out.push_back(folded_pair_at(t).puncture_vertex);
  }
  return out;
}

void Triangulation::validate() const {
  spec.validate();
  const int m = spec.marked_total();
  const int p = spec.punctures;

  int marked_seen = 0, punct_seen = 0;
  for (const auto& v : vertices)
    (v.role == VertexRole::Marked ? marked_seen : punct_seen) += 1;
  if (marked_seen != m || punct_seen != p)
    throw ValidationError("vertex roster does not match the surface");
  if (static_cast<int>(signs.size()) != p)
    throw ValidationError("one sign per puncture required");
  for (int s : signs)
    if (s != 1 && s != -1) throw ValidationError("signs must be +1 or -1");

  std::set<int> arc_ls, bnd_ls;
  for (const auto& e : edges) {
    if (e.v0 < 0 || e.v0 >= static_cast<int>(vertices.size()) || e.v1 < 0 ||
        e.v1 >= static_cast<int>(vertices.size()))
      throw ValidationError("edge endpoint out of range");
    auto& pool = e.kind == EdgeKind::Arc ? arc_ls : bnd_ls;
    if (!pool.insert(e.label).second)
      throw ValidationError("duplicate edge label");
  }
  const int n = rank(spec);
  for (int l = 1; l <= n; ++l)
    if (!arc_ls.count(l)) throw ValidationError("missing arc label");
  if (static_cast<int>(arc_ls.size()) != n)
    throw ValidationError("arc label out of range");
  for (int l = 1; l <= m; ++l)
    if (!bnd_ls.count(l)) throw ValidationError("missing boundary label");
  if (static_cast<int>(bnd_ls.size()) != m)
    throw ValidationError("boundary label out of range");

  std::vector<int> uses(edges.size(), 0);
  for (const auto& tr : triangles)
    for (int k = 0; k < 3; ++k) {
      int e = tr.edge[k];
      if (e < 0 || e >= static_cast<int>(edges.size()))
        throw ValidationError("triangle references unknown edge");
      ++uses[e];
      int a = tr.vert[k], b = tr.vert[mod3(k + 1)];
      const TriEdge& ed = edges[e];
      if (!((ed.v0 == a && ed.v1 == b) || (ed.v0 == b && ed.v1 == a)))
        throw ValidationError("triangle slot disagrees with edge endpoints");
    }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int want = edges[e].kind == EdgeKind::Arc ? 2 : 1;
    if (uses[e] != want)
      throw ValidationError("edge occupies the wrong number of slots");
  }

  // Euler characteristic of the glued surface.
  int euler = static_cast<int>(vertices.size()) -
              static_cast<int>(edges.size()) +
              static_cast<int>(triangles.size());
  if (euler != 2 - 2 * spec.genus - spec.boundary_count())
    throw ValidationError("Euler characteristic mismatch");
}

// ---------------------------------------------------------------------------
// Seeds
// ---------------------------------------------------------------------------

Triangulation seed_triangulation(const MarkedSurfaceSpec& spec) {
  spec.validate();
  if (spec.genus != 0 || spec.boundary_count() != 1)
    throw UnsupportedSurfaceError(
        "seed triangulations exist only for genus 0 with one boundary");
  const int m = spec.marked_per_boundary[0];
  const int p = spec.punctures;
  const int n = rank(spec);
  if (n < 1)
    throw UnsupportedSurfaceError("surface admits no arcs");
  if (p == 0 && m < 4)
    throw UnsupportedSurfaceError("surface admits no arcs");

  Triangulation t;
  t.spec = spec;
  t.spec.vortex_signs.assign(p, 1);
  for (int i = 1; i <= p; ++i) t.spec.vortex_signs[i - 1] = spec.vortex_sign(i);
  for (int i = 1; i <= m; ++i) t.vertices.push_back({VertexRole::Marked, i});
  for (int j = 1; j <= p; ++j) t.vertices.push_back({VertexRole::Puncture, j});
  for (int j = 1; j <= p; ++j) t.signs.push_back(spec.vortex_sign(j));

  auto marked = [&](int i) { return i - 1; };         // 1-based -> id
  auto punct = [&](int j) { return m + j - 1; };      // 1-based -> id

  // Boundary segments b_i: marked i -> marked i+1 (cyclically).
  std::vector<int> bnd(m + 1, -1);
  for (int i = 1; i <= m; ++i) {
    bnd[i] = static_cast<int>(t.edges.size());
    t.edges.push_back(
        {EdgeKind::Boundary, i, marked(i), marked(i % m + 1)});
  }

  int next_label = 1;
  auto add_arc = [&](int v0, int v1) {
    int id = static_cast<int>(t.edges.size());
    t.edges.push_back({EdgeKind::Arc, next_label++, v0, v1});
    return id;
  };

  if (p == 0) {
    // Fan of chords from marked point 1.
    std::vector<int> chord(m, -1); // chord[j] = arc (1, j), j = 3..m-1
    for (int j = 3; j <= m - 1; ++j) chord[j - 1] = add_arc(marked(1), marked(j));
    auto chord_id = [&](int j) { return chord[j - 1]; };
    t.triangles.push_back(
        {{bnd[1], bnd[2], chord_id(3)}, {marked(1), marked(2), marked(3)}});
    for (int j = 3; j <= m - 2; ++j)
      t.triangles.push_back({{chord_id(j), bnd[j], chord_id(j + 1)},
                             {marked(1), marked(j), marked(j + 1)}});
    t.triangles.push_back({{chord_id(m - 1), bnd[m - 1], bnd[m]},
                           {marked(1), marked(m - 1), marked(m)}});
    t.validate();
    return t;
  }

  // Chords (1, j) for j = 3..m (the corner at marked 1 also holds the nest of
  // loops, so (1, m) is a genuine arc here).
  std::vector<int> chord(m + 1, -1);
  if (m >= 3)
    for (int j = 3; j <= m; ++j) chord[j] = add_arc(marked(1), marked(j));

  // Self-folded pair per puncture, then connector loops, all based at 1.
  std::vector<int> loop(p + 1, -1), radius(p + 1, -1);
  for (int j = 1; j <= p; ++j) {
    loop[j] = add_arc(marked(1), marked(1));
    radius[j] = add_arc(marked(1), punct(j));
  }
  std::vector<int> conn(p + 1, -1); // conn[j] encloses punctures 1..j
  for (int j = 2; j <= p; ++j) conn[j] = add_arc(marked(1), marked(1));

  if (m >= 3) {
    t.triangles.push_back(
        {{bnd[1], bnd[2], chord[3]}, {marked(1), marked(2), marked(3)}});
    for (int j = 3; j <= m - 1; ++j)
      t.triangles.push_back({{chord[j], bnd[j], chord[j + 1]},
                             {marked(1), marked(j), marked(j + 1)}});
  }
  for (int j = 1; j <= p; ++j)
    t.triangles.push_back({{loop[j], radius[j], radius[j]},
                           {marked(1), marked(1), punct(j)}});
  if (p >= 2)
    t.triangles.push_back(
        {{loop[1], loop[2], conn[2]}, {marked(1), marked(1), marked(1)}});
  for (int j = 3; j <= p; ++j)
    t.triangles.push_back(
        {{conn[j - 1], loop[j], conn[j]}, {marked(1), marked(1), marked(1)}});

  int outer = p == 1 ? loop[1] : conn[p];
  if (m >= 3)
    t.triangles.push_back(
        {{bnd[m], outer, chord[m]}, {marked(m), marked(1), marked(1)}});
  else
    t.triangles.push_back(
        {{outer, bnd[1], bnd[2]}, {marked(1), marked(1), marked(2)}});

  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// Flip
// ---------------------------------------------------------------------------

Triangulation flip(const Triangulation& t, int arc_label) {
  Triangulation out = t;
  int g = out.edge_of_arc(arc_label);

  auto sl = out.slots_of(g);
  if (sl.size() != 2) throw ValidationError("arc does not occupy two slots");

  if (sl[0].first == sl[1].first) {
    // Folded edge: toggle the enclosed sign, trade labels with the loop, then
    // flip the loop (which now carries the requested label).
    auto fp = out.folded_pair_at(sl[0].first);
    int pidx = out.vertices[fp.puncture_vertex].index;
    out.signs[pidx - 1] = -out.signs[pidx - 1];
    out.spec.vortex_signs = out.signs;
    std::swap(out.edges[fp.loop_edge].label, out.edges[fp.folded_edge].label);
    g = fp.loop_edge;
    sl = out.slots_of(g);
  }

  auto [t1, k1] = sl[0];
  auto [t2, k2] = sl[1];
  if (t1 == t2) throw ValidationError("flip target is not a quadrilateral");
  const Triangle T1 = out.triangles[t1];
  const Triangle T2 = out.triangles[t2];

  int u = T1.vert[k1];
  int v = T1.vert[mod3(k1 + 1)];
  int a = T1.edge[mod3(k1 + 1)];
  int b = T1.edge[mod3(k1 + 2)];
  int w = T1.vert[mod3(k1 + 2)];
  if (T2.vert[k2] != v || T2.vert[mod3(k2 + 1)] != u)
    throw ValidationError("flip sides are inconsistently oriented");
  int c = T2.edge[mod3(k2 + 1)];
  int d = T2.edge[mod3(k2 + 2)];
  int z = T2.vert[mod3(k2 + 2)];

  out.triangles[t1] = {{b, c, g}, {w, u, z}};
  out.triangles[t2] = {{d, a, g}, {z, v, w}};
  out.edges[g].v0 = w;
  out.edges[g].v1 = z;

  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Canonical code
// ---------------------------------------------------------------------------

CanonicalCode canonical_form(const Triangulation& t) {
  auto folded_list = t.folded_punctures();
  std::set<int> folded(folded_list.begin(), folded_list.end());

  int anchor_edge = t.edge_of_boundary(1);
  auto anchor_slots = t.slots_of(anchor_edge);
  if (anchor_slots.size() != 1)
    throw ValidationError("boundary anchor must occupy one slot");

  std::string code;
  auto put = [&](char c) { code.push_back(c); };
  auto put_int = [&](int v) {
    code.push_back(static_cast<char>(v & 0xff));
  };

  std::vector<int> edge_code(t.edges.size(), -1);
  int next_code = 0;
  std::vector<char> seen(t.triangles.size(), 0);
  std::deque<std::pair<int, int>> queue{anchor_slots[0]};

  while (!queue.empty()) {
    auto [ti, start] = queue.front();
    queue.pop_front();
    if (seen[ti]) continue;
    seen[ti] = 1;
    const Triangle& tr = t.triangles[ti];
    for (int off = 0; off < 3; ++off) {
      int k = mod3(start + off);
      int e = tr.edge[k];
      const TriEdge& ed = t.edges[e];
      if (ed.kind == EdgeKind::Boundary) {
        put('b');
        put_int(ed.label);
      } else {
        if (edge_code[e] < 0) edge_code[e] = next_code++;
        put('a');
        put_int(edge_code[e]);
      }
      const TriVertex& vx = t.vertices[tr.vert[k]];
      if (vx.role == VertexRole::Marked) {
        put('m');
        put_int(vx.index);
      } else {
        put('p');
        put_int(vx.index);
        int s = folded.count(tr.vert[k]) ? 1 : t.signs[vx.index - 1];
        put(s == 1 ? '\x01' : '\xff');
      }
      if (ed.kind == EdgeKind::Arc) {
        for (auto [tj, kj] : t.slots_of(e)) {
          if (tj == ti && kj == k) continue;
          if (!seen[tj]) queue.emplace_back(tj, kj);
        }
      }
    }
  }

  for (char s : seen)
    if (!s) throw ValidationError("triangulation is not connected");
  return code;
}

std::string code_hex(const CanonicalCode& code) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

bool is_equivalent(const Triangulation& a, const Triangulation& b) {
  if (a.spec.genus != b.spec.genus ||
      a.spec.marked_per_boundary != b.spec.marked_per_boundary ||
      a.spec.punctures != b.spec.punctures)
    throw ValidationError("cannot compare triangulations of different surfaces");
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string to_json(const Triangulation& t) {
  nlohmann::json j;

  // Half-edge ids 2e (+1): first slot in scan order takes side 0.
  std::vector<int> next_side(t.edges.size(), 0);
  auto tris = nlohmann::json::array();
  for (const auto& tr : t.triangles) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < 3; ++k) {
      int e = tr.edge[k];
      row.push_back(2 * e + next_side[e]);
      ++next_side[e];
    }
    tris.push_back(row);
  }
  j["triangles"] = tris;

  auto edges = nlohmann::json::array();
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    nlohmann::json row;
    if (t.edges[e].kind == EdgeKind::Arc)
      row["half_edges"] = {2 * e, 2 * e + 1};
    else
      row["half_edges"] = {2 * e};
    row["kind"] = t.edges[e].kind == EdgeKind::Arc ? "arc" : "boundary";
    row["label"] = t.edges[e].label;
    edges.push_back(row);
  }
  j["edges"] = edges;

  // Punctures are keyed by first appearance in the corner scan, so the file
  // is independent of internal vertex numbering.
  std::map<int, int> rank; // vertex id -> serialized index
  for (const auto& tr : t.triangles)
    for (int k = 0; k < 3; ++k) {
      int v = tr.vert[k];
      if (t.vertices[v].role == VertexRole::Puncture && !rank.count(v))
        rank[v] = static_cast<int>(rank.size()) + 1;
    }
  auto signs = nlohmann::json::object();
  for (auto [v, r] : rank)
    signs["P" + std::to_string(r)] = t.signs[t.vertices[v].index - 1];
  j["signs"] = signs;

  return j.dump(2);
}

namespace {

struct CornerRef {
  int tri = -1;
  int slot = -1;
  bool operator==(const CornerRef&) const = default;
  bool valid() const { return tri >= 0; }
};

} // namespace

Triangulation triangulation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad triangulation JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("triangles") || !j.contains("edges"))
    throw ValidationError("triangulation JSON needs triangles and edges");

  Triangulation t;
  std::vector<int> half_use; // half id -> use count
  try {
    int e_count = static_cast<int>(j["edges"].size());
    half_use.assign(2 * e_count, 0);
    for (int e = 0; e < e_count; ++e) {
      const auto& row = j["edges"][e];
      std::string kind = row.at("kind").get<std::string>();
      TriEdge ed;
      if (kind == "arc")
        ed.kind = EdgeKind::Arc;
      else if (kind == "boundary")
        ed.kind = EdgeKind::Boundary;
      else
        throw ValidationError("edge kind must be arc or boundary");
      ed.label = row.at("label").get<int>();
      auto halves = row.at("half_edges").get<std::vector<int>>();
      std::vector<int> want =
          ed.kind == EdgeKind::Arc ? std::vector<int>{2 * e, 2 * e + 1}
                                   : std::vector<int>{2 * e};
      if (halves != want)
        throw ValidationError("half-edge ids must be 2e (and 2e+1 for arcs)");
      t.edges.push_back(ed);
    }
    for (const auto& row : j["triangles"]) {
      auto hs = row.get<std::vector<int>>();
      if (hs.size() != 3) throw ValidationError("triangles have three sides");
      Triangle tr;
      for (int k = 0; k < 3; ++k) {
        int h = hs[k];
        if (h < 0 || h >= 2 * e_count)
          throw ValidationError("half-edge id out of range");
        if (h % 2 == 1 && t.edges[h / 2].kind == EdgeKind::Boundary)
          throw ValidationError("boundary edges use side 0 only");
        ++half_use[h];
        tr.edge[k] = h / 2;
      }
      tr.vert = {-1, -1, -1};
      t.triangles.push_back(tr);
    }
    for (int e = 0; e < e_count; ++e) {
      if (t.edges[e].kind == EdgeKind::Arc) {
        if (half_use[2 * e] != 1 || half_use[2 * e + 1] != 1)
          throw ValidationError("each arc half-edge must be used once");
      } else if (half_use[2 * e] != 1) {
        throw ValidationError("each boundary half-edge must be used once");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad triangulation JSON: ") + e.what());
  }

  // Slot of each half id; sides in scan order must match to_json's convention
  // only up to which physical side is 0/1, so record occurrences directly.
  std::vector<std::array<CornerRef, 2>> side_slot(t.edges.size());
  for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
    const auto& row = j["triangles"][ti];
    for (int k = 0; k < 3; ++k) {
      int h = row[k].get<int>();
      side_slot[h / 2][h % 2] = {ti, k};
    }
  }

  auto partner_corner_next = [&](int ti, int k) -> CornerRef {
    // Corner (ti,k) sits at the tail of slot k; rotating anticlockwise enters
    // across the edge at slot k-1.
    int ks = mod3(k + 2);
    int e = t.triangles[ti].edge[ks];
    if (t.edges[e].kind == EdgeKind::Boundary) return {};
    CornerRef here{ti, ks};
    CornerRef other = side_slot[e][0] == here ? side_slot[e][1] : side_slot[e][0];
    return other;
  };
  auto partner_corner_prev = [&](int ti, int k) -> CornerRef {
    int e = t.triangles[ti].edge[k];
    if (t.edges[e].kind == EdgeKind::Boundary) return {};
    CornerRef here{ti, k};
    CornerRef other = side_slot[e][0] == here ? side_slot[e][1] : side_slot[e][0];
    if (!other.valid()) return other;
    return {other.tri, mod3(other.slot + 1)};
  };

  // Corner orbits: closed orbits are punctures, boundary-terminated fans are
  // marked points.
  int tri_count = static_cast<int>(t.triangles.size());
  std::vector<std::array<int, 3>> corner_vertex(
      tri_count, std::array<int, 3>{-1, -1, -1});
  struct Orbit {
    bool closed = false;
    std::vector<CornerRef> corners;
  };
  std::vector<Orbit> orbits;
  for (int ti = 0; ti < tri_count; ++ti)
    for (int k = 0; k < 3; ++k) {
      if (corner_vertex[ti][k] >= 0) continue;
      // Walk backwards to a boundary stop (or all the way around).
      CornerRef start{ti, k};
      CornerRef cur = start;
      bool closed = false;
      for (;;) {
        CornerRef back = partner_corner_prev(cur.tri, cur.slot);
        if (!back.valid()) break;
        if (back == start) {
          closed = true;
          break;
        }
        cur = back;
      }
      Orbit orb;
      orb.closed = closed;
      CornerRef walk = closed ? start : cur;
      for (;;) {
        orb.corners.push_back(walk);
        CornerRef nxt = partner_corner_next(walk.tri, walk.slot);
        if (!nxt.valid()) break;
        if (closed && nxt == start) break;
        walk = nxt;
      }
      int vid = static_cast<int>(orbits.size());
      for (const auto& c : orb.corners) {
        if (corner_vertex[c.tri][c.slot] >= 0)
          throw ValidationError("corner orbits are inconsistent");
        corner_vertex[c.tri][c.slot] = vid;
      }
      orbits.push_back(std::move(orb));
    }

  // Roles and indices.  Boundary segment i starts at marked point i.
  t.vertices.assign(orbits.size(), TriVertex{});
  std::vector<int> marked_of_orbit(orbits.size(), 0);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    t.vertices[o].role =
        orbits[o].closed ? VertexRole::Puncture : VertexRole::Marked;
  int max_b = 0;
  for (const auto& e : t.edges)
    if (e.kind == EdgeKind::Boundary) max_b = std::max(max_b, e.label);
  std::vector<int> bnd_edge(max_b + 1, -1);
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e)
    if (t.edges[e].kind == EdgeKind::Boundary) {
      if (t.edges[e].label < 1 || bnd_edge[t.edges[e].label] >= 0)
        throw ValidationError("boundary labels must be unique and positive");
      bnd_edge[t.edges[e].label] = e;
    }
  for (int l = 1; l <= max_b; ++l) {
    if (bnd_edge[l] < 0) throw ValidationError("boundary labels must be 1..m");
    CornerRef c = side_slot[bnd_edge[l]][0];
    int o = corner_vertex[c.tri][c.slot];
    if (t.vertices[o].role != VertexRole::Marked)
      throw ValidationError("boundary segment starts at a puncture");
    if (marked_of_orbit[o] != 0)
      throw ValidationError("two boundary segments start at one marked point");
    marked_of_orbit[o] = l;
    t.vertices[o].index = l;
  }
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (t.vertices[o].role == VertexRole::Marked && marked_of_orbit[o] == 0)
      throw ValidationError("marked point without a starting boundary segment");

  // Punctures: first appearance in the corner scan.
  int punct_next = 1;
  for (int ti = 0; ti < tri_count; ++ti)
    for (int k = 0; k < 3; ++k) {
      int o = corner_vertex[ti][k];
      if (t.vertices[o].role == VertexRole::Puncture && t.vertices[o].index == 0)
        t.vertices[o].index = punct_next++;
    }
  int p = punct_next - 1;

  for (int ti = 0; ti < tri_count; ++ti)
    for (int k = 0; k < 3; ++k) t.triangles[ti].vert[k] = corner_vertex[ti][k];
  for (int ti = 0; ti < tri_count; ++ti)
    for (int k = 0; k < 3; ++k) {
      TriEdge& ed = t.edges[t.triangles[ti].edge[k]];
      ed.v0 = t.triangles[ti].vert[k];
      ed.v1 = t.triangles[ti].vert[mod3(k + 1)];
    }

  t.signs.assign(p, 1);
  if (j.contains("signs")) {
    for (auto it = j["signs"].begin(); it != j["signs"].end(); ++it) {
      const std::string& key = it.key();
      if (key.size() < 2 || key[0] != 'P')
        throw ValidationError("sign keys look like P1, P2, ...");
      int idx = std::stoi(key.substr(1));
      if (idx < 1 || idx > p) throw ValidationError("sign key out of range");
      int s = it.value().get<int>();
      if (s != 1 && s != -1) throw ValidationError("signs must be +1 or -1");
      t.signs[idx - 1] = s;
    }
  }

  // Recover the surface: walk boundary components in label order.
  std::vector<int> comp_sizes;
  {
    std::vector<char> used(max_b + 1, 0);
    for (int l0 = 1; l0 <= max_b; ++l0) {
      if (used[l0]) continue;
      int size = 0;
      int l = l0;
      for (;;) {
        used[l] = 1;
        ++size;
        // End vertex of segment l = start vertex of the next segment.
        CornerRef c = side_slot[bnd_edge[l]][0];
        int end_o = corner_vertex[c.tri][mod3(c.slot + 1)];
        int next = marked_of_orbit[end_o];
        if (next == 0)
          throw ValidationError("boundary walk left the marked points");
        if (next == l0) break;
        l = next;
        if (used[l]) throw ValidationError("boundary walk is not a cycle");
      }
      comp_sizes.push_back(size);
      // Labels of one component must be consecutive.
      for (int k = l0; k < l0 + size; ++k)
        if (k > max_b || !used[k])
          throw ValidationError("boundary labels must be consecutive per component");
    }
  }
  int V = static_cast<int>(orbits.size());
  int E = static_cast<int>(t.edges.size());
  int F = tri_count;
  int b = static_cast<int>(comp_sizes.size());
  int twog = 2 - b - V + E - F;
  if (twog < 0 || twog % 2 != 0)
    throw ValidationError("glued surface has no valid genus");
  t.spec.genus = twog / 2;
  t.spec.marked_per_boundary = comp_sizes;
  t.spec.punctures = p;
  t.spec.vortex_signs = t.signs;

  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// Tagged model
// ---------------------------------------------------------------------------

TaggedTriangulation to_tagged(const Triangulation& t) {
  TaggedTriangulation out;
  out.carrier = t;

  // Normalize folded signs to +1, trading labels inside each folded pair.
  for (int ti = 0; ti < static_cast<int>(out.carrier.triangles.size()); ++ti) {
    const Triangle& tr = out.carrier.triangles[ti];
    if (tr.edge[0] != tr.edge[1] && tr.edge[1] != tr.edge[2] &&
        tr.edge[2] != tr.edge[0])
      continue;
    auto fp = out.carrier.folded_pair_at(ti);
    int pidx = out.carrier.vertices[fp.puncture_vertex].index;
    if (out.carrier.signs[pidx - 1] == -1) {
      out.carrier.signs[pidx - 1] = 1;
      std::swap(out.carrier.edges[fp.loop_edge].label,
                out.carrier.edges[fp.folded_edge].label);
    }
  }
  out.carrier.spec.vortex_signs = out.carrier.signs;

  const Triangulation& u = out.carrier;
  for (int e = 0; e < static_cast<int>(u.edges.size()); ++e) {
    if (u.edges[e].kind != EdgeKind::Arc) continue;
    TaggedArc arc;
    arc.label = u.edges[e].label;
    if (u.is_folded_edge(e)) {
      auto fp = u.folded_pair_at(u.slots_of(e)[0].first);
      int base = u.edges[e].v0 == fp.puncture_vertex ? u.edges[e].v1
                                                     : u.edges[e].v0;
      arc.ends = {base, fp.puncture_vertex};
      arc.tags = {1, 1};
    } else {
      // Loop partner of a folded edge becomes the opposite-tag radius.
      int folded_tri = -1;
      for (auto [ti, k] : u.slots_of(e)) {
        const Triangle& tr = u.triangles[ti];
        if (tr.edge[0] == tr.edge[1] || tr.edge[1] == tr.edge[2] ||
            tr.edge[2] == tr.edge[0])
          if (u.folded_pair_at(ti).loop_edge == e) folded_tri = ti;
      }
      if (folded_tri >= 0) {
        auto fp = u.folded_pair_at(folded_tri);
        arc.ends = {u.edges[e].v0, fp.puncture_vertex};
        arc.tags = {1, -1};
      } else {
        arc.ends = {u.edges[e].v0, u.edges[e].v1};
        // A lone puncture endpoint always sits in the second slot.
        if (u.vertices[arc.ends[0]].role == VertexRole::Puncture &&
            u.vertices[arc.ends[1]].role != VertexRole::Puncture)
          std::swap(arc.ends[0], arc.ends[1]);
        for (int s = 0; s < 2; ++s) {
          const TriVertex& vx = u.vertices[arc.ends[s]];
          arc.tags[s] =
              vx.role == VertexRole::Puncture ? u.signs[vx.index - 1] : 1;
        }
      }
    }
    out.arcs.push_back(arc);
  }
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const TaggedArc& a, const TaggedArc& b) {
              return a.label < b.label;
            });
  return out;
}

Triangulation from_tagged(const TaggedTriangulation& tt) {
  tt.carrier.validate();
  // Tags at one puncture may disagree only across a folded pair, which the
  // carrier realizes as loop + folded edge.
  std::map<int, std::set<int>> tags_at; // vertex id -> tags of plain radii
  auto folded_list = tt.carrier.folded_punctures();
  std::set<int> folded(folded_list.begin(), folded_list.end());
  for (const auto& arc : tt.arcs)
    for (int s = 0; s < 2; ++s) {
      int v = arc.ends[s];
      if (tt.carrier.vertices[v].role != VertexRole::Puncture) {
        if (arc.tags[s] != 1)
          throw ValidationError("marked endpoints are always plain");
        continue;
      }
      if (!folded.count(v)) tags_at[v].insert(arc.tags[s]);
    }
  for (const auto& [v, tags] : tags_at)
    if (tags.size() > 1)
      throw ValidationError("incompatible tags at one puncture");
  return tt.carrier;
}

TaggedTriangulation tagged_rotation(const TaggedTriangulation& tt,
                                    int arc_label) {
  return to_tagged(flip(from_tagged(tt), arc_label));
}

} // namespace vbt
