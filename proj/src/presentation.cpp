#include "vbt/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vbt/errors.hpp"

namespace vbt {

namespace {

Word wconj(const Word& w, const Word& by) { // w^by = by^-1 w by
  return concat(concat(inverse(by), w), by);
}

std::string tag(const std::string& kind, const std::vector<std::string>& args) {
  std::string out = kind + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i];
  }
  return out + ")";
}

// K = 2g + b + p - 1: number of tau generators.
int tau_count(const MarkedSurfaceSpec& spec) {
  return 2 * spec.genus + spec.boundary_count() + spec.punctures - 1;
}

void check_hypothesis(const MarkedSurfaceSpec& spec) {
  spec.validate();
  const int aleph = decoration_count(spec);
  const int k = tau_count(spec);
  if (aleph >= 5) return;
  if (aleph == 4 && k <= 2) return;
  if (aleph < 4)
    throw HypothesisError("presentation hypothesis fails: " +
                          std::to_string(aleph) + " decorations < 4");
  throw HypothesisError(
      "presentation hypothesis fails: 4 decorations allow at most 2 obstacle "
      "generators, got " +
      std::to_string(k));
}

} // namespace

int GroupPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i) + 1;
  throw ValidationError("unknown generator '" + name + "'");
}

void GroupPresentation::validate() const {
  const int n = static_cast<int>(generators.size());
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty() || g.back() == '\'')
      throw ValidationError("bad generator name '" + g + "'");
    if (!seen.insert(g).second)
      throw ValidationError("duplicate generator name '" + g + "'");
  }
  if (!endpoints.empty() && endpoints.size() != generators.size())
    throw ValidationError("endpoint table length must match the generators");
  for (const auto& r : relators) {
    if (reduced(r.word) != r.word)
      throw ValidationError("relator not freely reduced");
    for (int s : r.word)
      if (s == 0 || std::abs(s) > n)
        throw ValidationError("relator references an undeclared generator");
  }
}

Word co_word(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

Word br_word(const Word& a, const Word& b) {
  return concat(concat(concat(a, b), a),
                concat(inverse(b), concat(inverse(a), inverse(b))));
}

std::vector<Word> cyclic_words(const std::vector<Word>& cycle) {
  const int m = static_cast<int>(cycle.size());
  if (m < 3) throw ValidationError("cyclic relation needs at least 3 arcs");
  auto window = [&](int i) { // product of 2m-2 consecutive letters from a_i
    Word w;
    for (int t = 0; t < 2 * m - 2; ++t)
      w = concat(w, cycle[static_cast<std::size_t>((i + t) % m)]);
    return w;
  };
  std::vector<Word> out;
  for (int i = 0; i < m - 1; ++i)
    out.push_back(concat(window(i), inverse(window(i + 1))));
  return out;
}

GroupPresentation bt_presentation_punctured(const MarkedSurfaceSpec& spec) {
  check_hypothesis(spec);
  const int aleph = decoration_count(spec);
  const int k = tau_count(spec);
  const int g = spec.genus;

  GroupPresentation p;
  for (int i = 1; i <= aleph - 1; ++i) {
    p.generators.push_back("s" + std::to_string(i));
    p.endpoints.push_back({i, i + 1});
  }
  for (int r = 1; r <= k; ++r) {
    p.generators.push_back("t" + std::to_string(r));
    p.endpoints.push_back({1, 2});
  }
  auto s = [](int i) { return Word{i}; };
  auto t = [&](int r) { return Word{aleph - 1 + r}; };
  auto sn = [](int i) { return "s" + std::to_string(i); };
  auto tn = [](int r) { return "t" + std::to_string(r); };
  const Word x = {2, 1, -2};
  const Word y = {2, 3, -2};
  // s in 2N_{<=g} - 1 = {1, 3, ..., 2g-1}.
  auto odd_handle = [&](int v) { return v % 2 == 1 && v <= 2 * g - 1; };

  for (int i = 1; i <= aleph - 1; ++i)
    for (int j = i + 2; j <= aleph - 1; ++j)
      p.relators.push_back({co_word(s(i), s(j)), "co", tag("co", {sn(i), sn(j)})});
  for (int i = 1; i <= aleph - 2; ++i)
    p.relators.push_back(
        {br_word(s(i), s(i + 1)), "br", tag("br", {sn(i), sn(i + 1)})});
  for (int r = 1; r <= k; ++r)
    for (int i = 3; i <= aleph - 1; ++i)
      p.relators.push_back({co_word(t(r), s(i)), "co", tag("co", {tn(r), sn(i)})});
  for (int r = 1; r <= k; ++r)
    p.relators.push_back({br_word(t(r), x), "br", tag("br", {tn(r), "x"})});
  for (int r = 1; r <= k; ++r)
    p.relators.push_back({br_word(t(r), y), "br", tag("br", {tn(r), "y"})});
  for (int r = 2; r <= k; ++r)
    for (int s_ = 1; s_ <= r - 1; ++s_) {
      if (odd_handle(s_)) // handle partner: conjugate by the inverse instead
        p.relators.push_back({co_word(wconj(t(r), inverse(y)), wconj(t(s_), x)),
                              "co",
                              tag("co", {tn(r) + "^y'", tn(s_) + "^x"})});
      else
        p.relators.push_back({co_word(wconj(t(r), y), wconj(t(s_), x)), "co",
                              tag("co", {tn(r) + "^y", tn(s_) + "^x"})});
    }
  p.validate();
  return p;
}

GroupPresentation bt_presentation_vortex(const MarkedSurfaceSpec& spec) {
  GroupPresentation p = bt_presentation_punctured(spec);
  const int aleph = decoration_count(spec);
  const int k = tau_count(spec);
  const int first_vortex = 2 * spec.genus + spec.boundary_count();
  for (int r = first_vortex; r <= k; ++r) {
    // t_0 := s_1 when the range reaches below the first obstacle generator.
    Word prev = (r - 1 == 0) ? Word{1} : Word{aleph - 1 + (r - 1)};
    std::string prev_name = (r - 1 == 0) ? "s1" : "t" + std::to_string(r - 1);
    p.relators.push_back({co_word(Word{aleph - 1 + r}, prev), "co",
                          tag("co", {"t" + std::to_string(r), prev_name})});
  }
  p.validate();
  return p;
}

void ArcConfiguration::validate() const {
  std::set<std::string> names;
  for (const auto& a : arcs) {
    if (a.name.empty()) throw ValidationError("arc without a name");
    if (!names.insert(a.name).second)
      throw ValidationError("duplicate arc name '" + a.name + "'");
    if (a.v0 < 1 || a.v1 < 1 || a.v0 == a.v1)
      throw ValidationError("arc '" + a.name + "' needs two distinct endpoints");
  }
  auto shared = [&](int i, int j) {
    const Arc& a = arcs[static_cast<std::size_t>(i)];
    const Arc& b = arcs[static_cast<std::size_t>(j)];
    std::vector<int> common;
    for (int v : {a.v0, a.v1})
      if (v == b.v0 || v == b.v1) common.push_back(v);
    return common;
  };
  auto in_range = [&](int i) {
    return i >= 0 && i < static_cast<int>(arcs.size());
  };
  for (const auto& tri : triangles) {
    for (int i : tri)
      if (!in_range(i)) throw ValidationError("triangle refers to a missing arc");
    // A clockwise triple shares one common decoration.
    std::vector<int> c01 = shared(tri[0], tri[1]);
    std::vector<int> c12 = shared(tri[1], tri[2]);
    std::vector<int> c20 = shared(tri[2], tri[0]);
    if (c01.size() != 1 || c12.size() != 1 || c20.size() != 1 ||
        c01[0] != c12[0] || c12[0] != c20[0])
      throw ValidationError("triangle arcs must share a single common endpoint");
  }
  for (const auto& rect : rectangles) {
    for (int i : rect)
      if (!in_range(i)) throw ValidationError("rectangle refers to a missing arc");
    std::set<int> corners;
    for (int e = 0; e < 4; ++e) {
      std::vector<int> c = shared(rect[static_cast<std::size_t>(e)],
                                  rect[static_cast<std::size_t>((e + 1) % 4)]);
      if (c.size() != 1)
        throw ValidationError("rectangle sides must share one corner each");
      corners.insert(c[0]);
    }
    if (corners.size() != 4)
      throw ValidationError("rectangle corners must be distinct");
    if (!shared(rect[0], rect[2]).empty() || !shared(rect[1], rect[3]).empty())
      throw ValidationError("rectangle diagonal arcs must be disjoint");
  }
}

std::vector<Relator> relations_from_arc_configuration(const ArcConfiguration& cfg) {
  cfg.validate();
  std::vector<Relator> out;
  const int n = static_cast<int>(cfg.arcs.size());
  auto name = [&](int i) { return cfg.arcs[static_cast<std::size_t>(i)].name; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = cfg.arcs[static_cast<std::size_t>(i)];
      const auto& b = cfg.arcs[static_cast<std::size_t>(j)];
      int common = 0;
      for (int v : {a.v0, a.v1})
        if (v == b.v0 || v == b.v1) ++common;
      if (common == 1) {
        out.push_back({br_word({i + 1}, {j + 1}), "br",
                       tag("br", {name(i), name(j)})});
      } else {
        // Disjoint arcs commute; so do the two sides of a digon around one
        // vortex (shared endpoints at both ends).
        out.push_back({co_word({i + 1}, {j + 1}), "co",
                       tag("co", {name(i), name(j)})});
      }
    }
  for (const auto& tri : cfg.triangles) {
    std::vector<Word> cyc = cyclic_words(
        {{tri[0] + 1}, {tri[1] + 1}, {tri[2] + 1}});
    for (const Word& w : cyc)
      out.push_back(
          {w, "tr", tag("tr", {name(tri[0]), name(tri[1]), name(tri[2])})});
  }
  for (const auto& rect : cfg.rectangles) {
    std::vector<Word> cyc = cyclic_words(
        {{rect[0] + 1}, {rect[1] + 1}, {rect[2] + 1}, {rect[3] + 1}});
    for (const Word& w : cyc)
      out.push_back({w, "rec",
                     tag("rec", {name(rect[0]), name(rect[1]), name(rect[2]),
                                 name(rect[3])})});
  }
  return out;
}

GroupPresentation bt_presentation_alternative(const MarkedSurfaceSpec& spec,
                                              const std::vector<int>& partition) {
  spec.validate();
  if (spec.genus != 0 || spec.boundary_count() != 1)
    throw UnsupportedSurfaceError(
        "the alternative presentation is built for flat one-boundary surfaces");
  if (spec.punctures < 1)
    throw HypothesisError("the alternative presentation needs a vortex");
  const int aleph = decoration_count(spec);
  const int k = tau_count(spec); // = p here
  const int want = aleph - 2 * k;
  if (partition.size() != 1)
    throw HypothesisError("partition must have one entry per boundary component");
  if (partition[0] != want || want < 1)
    throw HypothesisError("infeasible partition: needs {" + std::to_string(want) +
                          "} with a positive entry");
  const int p_ = spec.punctures;
  const int m1 = want;

  // Decorations along the chain: A=1, B=2, then the left chain L_1.., then
  // the right chain R_1...
  const int A = 1, B = 2;
  auto L = [&](int i) { return i == 0 ? A : 2 + i; };
  auto R = [&](int i) { return i == 0 ? B : 2 + (p_ - 1) + i; };

  ArcConfiguration cfg;
  cfg.arcs.push_back({"s1", A, B});
  for (int i = 1; i <= p_ - 1; ++i)
    cfg.arcs.push_back({"x" + std::to_string(i), L(i), L(i - 1)});
  for (int i = 1; i <= p_ - 1 + m1; ++i)
    cfg.arcs.push_back({"y" + std::to_string(i), R(i - 1), R(i)});
  for (int r = 1; r <= p_; ++r)
    cfg.arcs.push_back({"u" + std::to_string(r), L(r - 1), R(r - 1)});

  auto xi = [&](int i) { return 1 + (i - 1); };           // 0-based arc index
  auto yi = [&](int i) { return p_ + (i - 1); };
  auto ui = [&](int r) { return (2 * p_ - 1 + m1) + (r - 1); };

  for (int r = 2; r <= p_; ++r)
    cfg.triangles.push_back({ui(r), yi(r), yi(r - 1)});
  for (int r = 2; r <= p_ - 1; ++r)
    cfg.triangles.push_back({ui(r), xi(r - 1), xi(r)});
  for (int r = 2; r <= p_; ++r)
    cfg.rectangles.push_back({xi(r - 1), ui(r - 1), yi(r - 1), ui(r)});

  GroupPresentation out;
  for (const auto& a : cfg.arcs) {
    out.generators.push_back(a.name);
    out.endpoints.push_back({a.v0, a.v1});
  }
  out.relators = relations_from_arc_configuration(cfg);
  out.validate();
  return out;
}

GroupPresentation weyl_quotient(const GroupPresentation& p) {
  GroupPresentation out = p;
  std::set<Word> have;
  for (const auto& r : p.relators) have.insert(r.word);
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Word sq{static_cast<int>(i) + 1, static_cast<int>(i) + 1};
    if (have.count(sq)) continue;
    out.relators.push_back({sq, "sq", tag("sq", {p.generators[i]})});
  }
  out.validate();
  return out;
}

AbelianGroupInvariants abelianization(const GroupPresentation& p) {
  p.validate();
  IntMatrix m;
  for (const auto& r : p.relators) {
    std::vector<long long> row(p.generators.size(), 0);
    for (int s : r.word) row[static_cast<std::size_t>(std::abs(s)) - 1] += s > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return abelian_invariants(static_cast<int>(p.generators.size()), m);
}

std::string export_text(const GroupPresentation& p) {
  p.validate();
  std::ostringstream out;
  for (const auto& r : p.relators) {
    for (std::size_t i = 0; i < r.word.size(); ++i) {
      if (i) out << ' ';
      int s = r.word[i];
      out << p.generators[static_cast<std::size_t>(std::abs(s)) - 1];
      if (s < 0) out << '\'';
    }
    out << '\n';
  }
  return out.str();
}

std::string export_json(const GroupPresentation& p) {
  p.validate();
  nlohmann::json j;
  j["generators"] = p.generators;
  if (!p.endpoints.empty()) {
    nlohmann::json eps = nlohmann::json::array();
    for (const auto& e : p.endpoints) eps.push_back({e[0], e[1]});
    j["endpoints"] = eps;
  }
  nlohmann::json rel = nlohmann::json::array(), kinds = nlohmann::json::array(),
                 notes = nlohmann::json::array();
  for (const auto& r : p.relators) {
    rel.push_back(r.word);
    kinds.push_back(r.kind);
    notes.push_back(r.note);
  }
  j["relators"] = rel;
  j["kinds"] = kinds;
  j["notes"] = notes;
  return j.dump();
}

GroupPresentation presentation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad presentation JSON: ") + e.what());
  }
  GroupPresentation p;
  try {
    p.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("endpoints"))
      for (const auto& e : j.at("endpoints"))
        p.endpoints.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    auto rel = j.at("relators");
    auto kinds = j.value("kinds", nlohmann::json::array());
    auto notes = j.value("notes", nlohmann::json::array());
    for (std::size_t i = 0; i < rel.size(); ++i) {
      Relator r;
      r.word = rel[i].get<Word>();
      if (i < kinds.size()) r.kind = kinds[i].get<std::string>();
      if (i < notes.size()) r.note = notes[i].get<std::string>();
      p.relators.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad presentation JSON: ") + e.what());
  }
  p.validate();
  return p;
}

} // namespace vbt
