#include "vbt/quiver.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "vbt/errors.hpp"

namespace vbt {

namespace {

bool is_sf(const Triangle& tr) {
  return tr.edge[0] == tr.edge[1] || tr.edge[1] == tr.edge[2] ||
         tr.edge[2] == tr.edge[0];
}

void cancel_two_cycles(std::vector<std::pair<int, int>>& arrows) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& ar : arrows) ++count[ar];
  std::vector<std::pair<int, int>> out;
  for (const auto& [ar, c] : count) {
    auto rev = count.find({ar.second, ar.first});
    int keep = c - std::min(c, rev == count.end() ? 0 : rev->second);
    out.insert(out.end(), keep, ar);
  }
  arrows = std::move(out);
}

// Rotates a cyclic arrow list so it starts at the smallest tail label.
void normalize_cycle(std::vector<std::pair<int, int>>& cycle) {
  auto best = std::min_element(
      cycle.begin(), cycle.end(),
      [](const auto& a, const auto& b) { return a.first < b.first; });
  std::rotate(cycle.begin(), best, cycle.end());
}

}  // namespace

Quiver quiver_of(const Triangulation& t) {
  Quiver q;
  q.vertices = static_cast<int>(t.arc_count());

  std::vector<std::pair<int, int>> arrows;
  for (const Triangle& tr : t.triangles) {
    if (is_sf(tr)) continue;
    for (auto [from, to] :
         {std::pair{0, 2}, std::pair{2, 1}, std::pair{1, 0}}) {
      const TriEdge& a = t.edges[tr.edge[from]];
      const TriEdge& b = t.edges[tr.edge[to]];
      if (a.kind != EdgeKind::Arc || b.kind != EdgeKind::Arc) continue;
      if (a.label == b.label) continue;
      arrows.push_back({a.label, b.label});
    }
  }
  cancel_two_cycles(arrows);

  // Every arrow at a loop is mirrored onto its folded partner; the pair
  // itself stays arrow-free.
  for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
    if (!is_sf(t.triangles[ti])) continue;
    auto fp = t.folded_pair_at(ti);
    int loop = t.edges[fp.loop_edge].label;
    int partner = t.edges[fp.folded_edge].label;
    std::vector<std::pair<int, int>> mirrored;
    for (const auto& [i, j] : arrows) {
      if (i == loop) mirrored.push_back({partner, j});
      if (j == loop) mirrored.push_back({i, partner});
    }
    arrows.insert(arrows.end(), mirrored.begin(), mirrored.end());
  }
  std::sort(arrows.begin(), arrows.end());
  q.arrows = std::move(arrows);

  for (int label : t.arc_labels()) {
    int e = t.edge_of_arc(label);
    if (t.is_folded_edge(e))
      e = t.folded_pair_at(t.slots_of(e)[0].first).loop_edge;
    std::set<int> tris;
    for (auto [ti, slot] : t.slots_of(e)) tris.insert(ti + 1);
    auto it = tris.begin();
    int first = *it++;
    q.dual_endpoints[label] = {first, it == tris.end() ? first : *it};
  }
  return q;
}

std::vector<PotentialTerm> potential_of(const Triangulation& t,
                                        const Quiver& q) {
  std::set<std::pair<int, int>> present(q.arrows.begin(), q.arrows.end());
  auto cycle_present = [&present](const std::vector<std::pair<int, int>>& c) {
    for (const auto& ar : c)
      if (!present.count(ar)) return false;
    return true;
  };

  std::vector<PotentialTerm> terms;

  for (const Triangle& tr : t.triangles) {
    if (is_sf(tr)) continue;
    std::array<int, 3> lab{};
    bool all_arcs = true;
    for (int k = 0; k < 3; ++k) {
      const TriEdge& e = t.edges[tr.edge[k]];
      if (e.kind != EdgeKind::Arc) all_arcs = false;
      lab[k] = e.label;
    }
    if (!all_arcs || lab[0] == lab[1] || lab[1] == lab[2] || lab[0] == lab[2])
      continue;
    std::vector<std::pair<int, int>> cycle{
        {lab[0], lab[2]}, {lab[2], lab[1]}, {lab[1], lab[0]}};
    if (!cycle_present(cycle)) continue;
    normalize_cycle(cycle);
    terms.push_back({std::move(cycle)});
  }

  // One candidate cycle per puncture: the spokes in rotational order.
  for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
    if (t.vertices[v].role != VertexRole::Puncture) continue;

    std::pair<int, int> start{-1, -1};
    for (int ti = 0; ti < static_cast<int>(t.triangles.size()) &&
                     start.first < 0;
         ++ti)
      for (int k = 0; k < 3; ++k)
        if (t.triangles[ti].vert[k] == v) {
          start = {ti, k};
          break;
        }

    std::vector<int> spokes;
    std::pair<int, int> cur = start;
    do {
      auto [ti, k] = cur;
      spokes.push_back(t.edges[t.triangles[ti].edge[k]].label);
      int incoming = t.triangles[ti].edge[(k + 2) % 3];
      for (auto [tj, slot] : t.slots_of(incoming))
        if (tj != ti || slot != (k + 2) % 3) {
          cur = {tj, slot};
          break;
        }
    } while (cur != start);

    if (spokes.size() < 3) continue;
    auto smallest = std::min_element(spokes.begin(), spokes.end());
    std::rotate(spokes.begin(), smallest, spokes.end());

    std::size_t m = spokes.size();
    std::vector<std::pair<int, int>> forward, reverse;
    for (std::size_t i = 0; i < m; ++i) {
      forward.push_back({spokes[i], spokes[(i + 1) % m]});
      reverse.push_back({spokes[(m - i) % m], spokes[m - i - 1]});
    }
    if (cycle_present(forward))
      terms.push_back({std::move(forward)});
    else if (cycle_present(reverse))
      terms.push_back({std::move(reverse)});
  }
  return terms;
}

QuiverWithPotential qp_of(const Triangulation& t) {
  QuiverWithPotential qp;
  qp.quiver = quiver_of(t);
  qp.potential = potential_of(t, qp.quiver);
  return qp;
}

Quiver mutate(const Quiver& q, int k) {
  if (k < 1 || k > q.vertices)
    throw ValidationError("mutation vertex out of range");

  std::vector<std::pair<int, int>> next;
  std::vector<int> in, out;
  for (const auto& [i, j] : q.arrows) {
    if (j == k)
      in.push_back(i);
    else if (i == k)
      out.push_back(j);
    else
      next.push_back({i, j});
  }
  for (int i : in)
    for (int j : out) next.push_back({i, j});
  for (int i : in) next.push_back({k, i});
  for (int j : out) next.push_back({j, k});
  cancel_two_cycles(next);

  Quiver m;
  m.vertices = q.vertices;
  m.arrows = std::move(next);
  return m;
}

bool check_flip_mutation(const Triangulation& t, int label) {
  return quiver_of(flip(t, label)) == mutate(quiver_of(t), label);
}

std::string export_json(const QuiverWithPotential& qp) {
  nlohmann::json doc;
  doc["vertices"] = qp.quiver.vertices;
  doc["arrows"] = nlohmann::json::array();
  for (const auto& [i, j] : qp.quiver.arrows)
    doc["arrows"].push_back(nlohmann::json::array({i, j}));
  doc["potential"] = nlohmann::json::array();
  for (const PotentialTerm& term : qp.potential) {
    nlohmann::json cycle = nlohmann::json::array();
    for (const auto& [i, j] : term.arrows)
      cycle.push_back(nlohmann::json::array({i, j}));
    doc["potential"].push_back(cycle);
  }
  return doc.dump(2) + "\n";
}

GroupPresentation cbr_presentation_from_qp(const QuiverWithPotential& qp) {
  const Quiver& q = qp.quiver;
  GroupPresentation p;
  for (int i = 1; i <= q.vertices; ++i)
    p.generators.push_back("b" + std::to_string(i));
  if (!q.dual_endpoints.empty())
    for (int i = 1; i <= q.vertices; ++i) {
      auto it = q.dual_endpoints.find(i);
      p.endpoints.push_back(it == q.dual_endpoints.end()
                                ? std::array<int, 2>{0, 0}
                                : it->second);
    }

  std::map<std::pair<int, int>, int> between;
  for (const auto& [i, j] : q.arrows)
    ++between[{std::min(i, j), std::max(i, j)}];
  for (int i = 1; i <= q.vertices; ++i)
    for (int j = i + 1; j <= q.vertices; ++j) {
      auto it = between.find({i, j});
      int count = it == between.end() ? 0 : it->second;
      std::string args =
          "(b" + std::to_string(i) + ",b" + std::to_string(j) + ")";
      if (count == 0)
        p.relators.push_back({co_word({i}, {j}), "co", "co" + args});
      else if (count == 1)
        p.relators.push_back({br_word({i}, {j}), "br", "br" + args});
      else
        throw HypothesisError(
            "parallel arrows between quiver vertices are out of scope");
    }

  for (const PotentialTerm& term : qp.potential) {
    std::vector<Word> cycle;
    std::string args;
    for (const auto& [from, to] : term.arrows) {
      cycle.push_back({from});
      args += (args.empty() ? "b" : ",b") + std::to_string(from);
    }
    std::string kind =
        cycle.size() == 3 ? "tr" : (cycle.size() == 4 ? "rec" : "cyc");
    for (Word& w : cyclic_words(cycle))
      p.relators.push_back({std::move(w), kind, kind + "(" + args + ")"});
  }

  p.validate();
  return p;
}

}  // namespace vbt
