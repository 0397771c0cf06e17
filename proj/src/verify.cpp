#include "vbt/verify.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vbt/errors.hpp"
#include "vbt/homology.hpp"
#include "vbt/quiver.hpp"
#include "vbt/triangulation.hpp"

namespace vbt {

namespace {

MappingClass prod(std::initializer_list<MappingClass> factors) {
  auto it = factors.begin();
  MappingClass acc = *it;
  for (++it; it != factors.end(); ++it) acc = mul(acc, *it);
  return acc;
}

std::string word_text(const Word& w) {
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(letter > 0 ? letter : -letter);
    if (letter < 0) out += '\'';
  }
  return out.empty() ? "1" : out;
}

CheckResult eq_row(std::string name, const MappingClass& lhs,
                   const MappingClass& rhs) {
  if (lhs == rhs) return {std::move(name), CheckStatus::Pass, ""};
  return {std::move(name), CheckStatus::Fail,
          "lhs: " + image_table(lhs) + " || rhs: " + image_table(rhs)};
}

// Negative control: the two sides are expected to differ.
CheckResult neq_row(std::string name, const MappingClass& lhs,
                    const MappingClass& rhs) {
  if (!(lhs == rhs)) return {std::move(name), CheckStatus::Pass, ""};
  return {std::move(name), CheckStatus::Fail,
          "sides unexpectedly agree: " + image_table(lhs)};
}

CheckResult flag_row(std::string name, bool ok, std::string reason) {
  if (ok) return {std::move(name), CheckStatus::Pass, ""};
  return {std::move(name), CheckStatus::Skipped, std::move(reason)};
}

CheckResult skip_row(std::string name, std::string reason) {
  return {std::move(name), CheckStatus::Skipped, std::move(reason)};
}

// All consecutive forms of a rewriting chain must agree.
CheckResult chain_row(std::string name,
                      const std::vector<MappingClass>& forms) {
  for (std::size_t i = 0; i + 1 < forms.size(); ++i)
    if (!(forms[i] == forms[i + 1]))
      return {std::move(name), CheckStatus::Fail,
              "break at step " + std::to_string(i + 1) + ": " +
                  image_table(forms[i]) + " || " + image_table(forms[i + 1])};
  return {std::move(name), CheckStatus::Pass, ""};
}

MappingClass image_of(const std::vector<MappingClass>& classes,
                      const Word& word) {
  std::vector<std::pair<MappingClass, int>> items;
  items.reserve(word.size());
  for (int letter : word) {
    int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || idx > static_cast<int>(classes.size()))
      throw ValidationError("relator letter out of range");
    items.push_back({classes[static_cast<std::size_t>(idx - 1)],
                     letter > 0 ? 1 : -1});
  }
  int rank = classes.empty() ? 0 : classes.front().rank();
  return eval_product(rank, items);
}

// Engine classes of the standard generators s1..s{aleph-1}, t1..tK.
std::vector<MappingClass> standard_classes(const TwistContext& ctx,
                                           const GroupPresentation& p) {
  std::vector<MappingClass> out;
  out.reserve(p.generators.size());
  for (const std::string& g : p.generators) out.push_back(ctx.named(g));
  return out;
}

std::vector<int> loop_around(int t) { // out past obstacles t-1..1, around t
  std::vector<int> w;
  for (int j = t; j >= 1; --j) w.push_back(j);
  return w;
}

std::vector<int> pocket_loop(int r) { // between obstacles r-1 and r
  std::vector<int> w;
  for (int j = 1; j <= r - 1; ++j) w.push_back(-j);
  for (int j = r; j >= 1; --j) w.push_back(j);
  return w;
}

// Squared pocket twists of the digon around obstacle r.
struct DigonData {
  MappingClass s1, s2, lq1, lq2;
};

DigonData digon_data(const TwistContext& ctx, int r) {
  auto [s1, s2] = ctx.digon_pair(r);
  return {s1, s2, mul(s1, s1).power(2), mul(s2, s2).power(2)};
}

// The class the commutator [tau_r, tau_{r-1}] actually equals:
// (Lq2 Lq1^-1) conjugated by tau_r^-1 tau_{r-1}^-1.
MappingClass pocket_correction(const TwistContext& ctx, int r) {
  DigonData d = digon_data(ctx, r);
  auto w = mul(ctx.tau(r).inverse(), ctx.tau(r - 1).inverse());
  return conjugate(mul(d.lq2, d.lq1.inverse()), w);
}

std::string itos(int v) { return std::to_string(v); }

} // namespace

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  throw ValidationError("unknown check status");
}

int SuiteReport::count(CheckStatus status) const {
  int n = 0;
  for (const CheckResult& c : checks)
    if (c.status == status) ++n;
  return n;
}

std::string image_table(const MappingClass& cls) {
  std::string out = "{";
  for (int i = 1; i <= cls.rank(); ++i) {
    if (i > 1) out += " | ";
    out += 'g' + itos(i) + " -> " +
           word_text(cls.fwd.img[static_cast<std::size_t>(i - 1)]);
  }
  return out + "}";
}

bool verify_relator(const TwistContext& ctx, const std::string& word) {
  return ctx.eval(word).is_identity();
}

bool verify_vortex_relation(const TwistContext& ctx, int r) {
  DigonData d = digon_data(ctx, r);
  const MappingClass& u = ctx.tau(r - 1);
  const MappingClass& v = ctx.tau(r);
  bool rel = prod({u, v, d.lq2}) == prod({v, u, d.lq1});
  bool tid = ctx.taurus(r) ==
             conjugate(mul(d.lq2, d.lq1.inverse()),
                       mul(v.inverse(), u.inverse()));
  return rel && tid;
}

bool verify_lemma_tech(const TwistContext& ctx, int s, int r) {
  if (s < 1 || r <= s || r > ctx.obstacles())
    throw ValidationError("lemma check needs obstacle indices s < r");
  const MappingClass& a = ctx.sigma(1);
  const MappingClass& b = ctx.sigma(2);
  const MappingClass& ts = ctx.tau(s);
  const MappingClass& tr = ctx.tau(r);
  MappingClass word = prod({mul(ts, b).inverse(), a,
                            prod({tr, a, ts}).inverse(), a, b, tr, b});
  const MappingClass& es = ctx.epsilon(s);
  const MappingClass& er = ctx.epsilon(r);
  return commutator(es, er) == word ||
         commutator(es.inverse(), er.inverse()) == word ||
         commutator(er, es) == word;
}

SuiteReport verify_conjugation_formulas(const TwistContext& ctx) {
  SuiteReport rep{"conjugation", to_json(ctx.spec()), {}};
  const int aleph = ctx.decorations();
  const int p = ctx.obstacles();
  const MappingClass& s1 = ctx.sigma(1);
  const MappingClass& s2 = ctx.sigma(2);
  const MappingClass x = ctx.x();

  for (int t = 1; t <= p; ++t) {
    const MappingClass& et = ctx.epsilon(t);
    const MappingClass& tt = ctx.tau(t);
    rep.checks.push_back(eq_row("s1^(e" + itos(t) + "') = t" + itos(t),
                                conjugate(s1, et.inverse()), tt));
    rep.checks.push_back(eq_row("s1^(e" + itos(t) + ") = t" + itos(t) + "^(s1')",
                                conjugate(s1, et),
                                conjugate(tt, s1.inverse())));
    for (int i = 2; i <= aleph - 1; ++i) {
      const MappingClass& si = ctx.sigma(i);
      rep.checks.push_back(eq_row(
          "s" + itos(i) + "^(e" + itos(t) + "') = s" + itos(i),
          conjugate(si, et.inverse()), si));
      rep.checks.push_back(eq_row(
          "s" + itos(i) + "^(e" + itos(t) + ") = s" + itos(i),
          conjugate(si, et), si));
    }
    rep.checks.push_back(eq_row("t" + itos(t) + "^(e" + itos(t) + ") = s1",
                                conjugate(tt, et), s1));
    // Resolution of the pocket conjugate at r = t: an x-twist in disguise.
    rep.checks.push_back(
        eq_row("t" + itos(t) + "^(e" + itos(t) + "') = x^(s2 t" + itos(t) + ")",
               conjugate(tt, et.inverse()), conjugate(x, mul(s2, tt))));
  }
  for (int t = 1; t <= p; ++t) {
    const MappingClass& et = ctx.epsilon(t);
    const MappingClass& tt = ctx.tau(t);
    for (int r = 1; r <= p; ++r) {
      if (r == t) continue;
      const MappingClass& tr = ctx.tau(r);
      std::string pair = "t" + itos(r) + ", e" + itos(t);
      if (r < t) {
        rep.checks.push_back(
            eq_row("corridor rule below (" + pair + "), inverse",
                   conjugate(tr, et.inverse()),
                   conjugate(tr, prod({x, tt, s2, tt}))));
        rep.checks.push_back(eq_row(
            "corridor rule below (" + pair + ")", conjugate(tr, et),
            conjugate(tr, prod({s2.inverse(), tt.inverse(), s1.inverse(),
                                s2.inverse()}))));
      } else {
        rep.checks.push_back(
            eq_row("corridor rule above (" + pair + "), inverse",
                   conjugate(tr, et.inverse()),
                   conjugate(tr, prod({x.inverse(), tt.inverse(), s2, tt}))));
        rep.checks.push_back(eq_row(
            "corridor rule above (" + pair + ")", conjugate(tr, et),
            conjugate(tr, prod({s2, tt, s1.inverse(), s2.inverse()}))));
      }
    }
  }
  // The same rules transport the commutators [tau_r, tau_{r-1}].
  for (int r = 1; r <= p; ++r) {
    MappingClass tc = ctx.taurus(r);
    for (int t = 1; t <= p; ++t) {
      const MappingClass& et = ctx.epsilon(t);
      const MappingClass& tt = ctx.tau(t);
      std::string pair = "c" + itos(r) + ", e" + itos(t);
      if (r <= t) {
        rep.checks.push_back(
            eq_row("commutator transport below (" + pair + "), inverse",
                   conjugate(tc, et.inverse()),
                   conjugate(tc, prod({x, tt, s2, tt}))));
        rep.checks.push_back(eq_row(
            "commutator transport below (" + pair + ")", conjugate(tc, et),
            conjugate(tc, prod({s2.inverse(), tt.inverse(), s1.inverse(),
                                s2.inverse()}))));
      } else {
        rep.checks.push_back(
            eq_row("commutator transport above (" + pair + "), inverse",
                   conjugate(tc, et.inverse()),
                   conjugate(tc, prod({x.inverse(), tt.inverse(), s2, tt}))));
        rep.checks.push_back(eq_row(
            "commutator transport above (" + pair + ")", conjugate(tc, et),
            conjugate(tc, prod({s2, tt, s1.inverse(), s2.inverse()}))));
      }
    }
  }
  return rep;
}

SuiteReport verify_appendix(const TwistContext& ctx) {
  SuiteReport rep{"appendix", to_json(ctx.spec()), {}};
  const int aleph = ctx.decorations();
  const int p = ctx.obstacles();
  const MappingClass& s1 = ctx.sigma(1);
  const MappingClass& s2 = ctx.sigma(2);
  const MappingClass x = ctx.x();

  for (int r = 1; r <= p; ++r) {
    const MappingClass& tm = ctx.tau(r - 1);
    const MappingClass& tp = ctx.tau(r);
    const MappingClass& er = ctx.epsilon(r);
    const MappingClass& em = ctx.epsilon(r - 1);
    MappingClass T = commutator(tp, tm);

    MappingClass lam =
        mul(conjugate(tm.inverse(), er), conjugate(tp, em));
    MappingClass f2 =
        mul(conjugate(tm.inverse(), prod({s2.inverse(), tp.inverse(),
                                          s1.inverse(), s2.inverse()})),
            conjugate(tp, prod({s2, tm, s1.inverse(), s2.inverse()})));
    MappingClass f3 =
        mul(conjugate(s2.inverse(), prod({tm, tp.inverse(), s1.inverse(),
                                          s2.inverse()})),
            conjugate(s2, prod({tp.inverse(), tm, s1.inverse(),
                                s2.inverse()})));
    MappingClass f4 = conjugate(
        mul(conjugate(s2.inverse(), prod({tm, tp.inverse(), tm.inverse(), tp})),
            s2),
        prod({tp.inverse(), tm, s1.inverse(), s2.inverse()}));
    MappingClass f5 = conjugate(
        mul(conjugate(T, tp).inverse(), conjugate(T, mul(tp, s2))),
        prod({tp.inverse(), tm, s1.inverse(), s2.inverse()}));
    rep.checks.push_back(
        chain_row("linking chain r=" + itos(r), {lam, f2, f3, f4, f5}));

    for (int i = 2; i <= aleph - 1; ++i) {
      MappingClass ld = ctx.l_delta(r);
      rep.checks.push_back(eq_row(
          "pocket commutes with s" + itos(i) + " (r=" + itos(r) + ")",
          mul(ctx.sigma(i), ld), mul(ld, ctx.sigma(i))));
    }

    MappingClass F1 =
        mul(conjugate(s1, mul(er, em.inverse())),
            conjugate(s1.inverse(), mul(em, er.inverse())));
    MappingClass F2 =
        mul(conjugate(tp, mul(s1.inverse(), em.inverse())),
            conjugate(tm.inverse(), mul(s1.inverse(), er.inverse())));
    MappingClass F3 =
        mul(conjugate(tp, prod({x.inverse(), tm.inverse(), s2})),
            conjugate(tm.inverse(), prod({x, tp, s2})));
    MappingClass F4 =
        conjugate(mul(conjugate(tp, mul(x.inverse(), tm.inverse())),
                      conjugate(tm.inverse(), mul(x, tp))),
                  s2);
    MappingClass F5 =
        conjugate(mul(conjugate(x, mul(tp, tm.inverse())),
                      conjugate(x.inverse(), mul(tm.inverse(), tp))),
                  s2);
    rep.checks.push_back(
        chain_row("first-strand case r=" + itos(r), {F1, F2, F3, F4, F5}));
  }

  if (p >= 2) {
    const int r = 2;
    const MappingClass& tm = ctx.tau(r - 1);
    const MappingClass& tp = ctx.tau(r);
    const MappingClass& er = ctx.epsilon(r);
    const MappingClass& em = ctx.epsilon(r - 1);

    for (int s = r; s <= p; ++s) {
      const MappingClass& ts = ctx.tau(s);
      MappingClass F1 =
          mul(conjugate(ts, mul(er, em.inverse())),
              conjugate(ts.inverse(), mul(em, er.inverse())));
      MappingClass F2 =
          mul(conjugate(ts, prod({s2, tp, s1.inverse(), s2.inverse(),
                                  em.inverse()})),
              conjugate(ts.inverse(), prod({s2, tm, s1.inverse(), s2.inverse(),
                                            er.inverse()})));
      MappingClass F3 =
          mul(conjugate(ts,
                        prod({x.inverse(), tm.inverse(), s2, tm, s2,
                              conjugate(tp, prod({x.inverse(), tm.inverse(),
                                                  s2, tm})),
                              tm.inverse(), s2.inverse()})),
              conjugate(ts.inverse(),
                        prod({x.inverse(), tp.inverse(), s2, tp, s2,
                              conjugate(tm, prod({x, tp, s2, tp})),
                              tp.inverse(), s2.inverse()})));
      MappingClass F4 =
          mul(conjugate(ts, prod({x.inverse(), tm, x, tp, x.inverse(),
                                  tm.inverse()})),
              conjugate(ts.inverse(), prod({x.inverse(), tp.inverse(),
                                            x.inverse(), tm, x, tp})));
      MappingClass F5 =
          mul(conjugate(ts, prod({x.inverse(), tm, tp.inverse(), x, tp,
                                  tm.inverse()})),
              conjugate(ts.inverse(), prod({x.inverse(), tp.inverse(), tm, x,
                                            tm.inverse(), tp})));
      rep.checks.push_back(chain_row(
          "obstacle case s=" + itos(s) + ">=r=" + itos(r),
          {F1, F2, F3, F4, F5}));
    }
    for (int s = 1; s <= r - 1; ++s) {
      const MappingClass& ts = ctx.tau(s);
      MappingClass F1 =
          mul(conjugate(ts, mul(er, em.inverse())),
              conjugate(ts.inverse(), mul(em, er.inverse())));
      MappingClass F2 =
          mul(conjugate(ts, prod({s2.inverse(), tp.inverse(), s1.inverse(),
                                  s2.inverse(), em.inverse()})),
              conjugate(ts.inverse(), prod({s2.inverse(), tm.inverse(),
                                            s1.inverse(), s2.inverse(),
                                            er.inverse()})));
      MappingClass F3 =
          mul(conjugate(ts,
                        prod({x, tm, s2, tm, s2.inverse(),
                              conjugate(tp.inverse(),
                                        prod({x.inverse(), tm.inverse(), s2,
                                              tm})),
                              tm.inverse(), s2.inverse()})),
              conjugate(ts.inverse(),
                        prod({x, tp, s2, tp, s2.inverse(),
                              conjugate(tm.inverse(), prod({x, tp, s2, tp})),
                              tp.inverse(), s2.inverse()})));
      MappingClass F4 =
          mul(conjugate(ts, prod({x, tm, x, tp.inverse(), x.inverse(),
                                  tm.inverse()})),
              conjugate(ts.inverse(), prod({x, tp.inverse(), x.inverse(),
                                            tm.inverse(), x, tp})));
      MappingClass F5 =
          mul(conjugate(ts, prod({x, tm, tp.inverse(), x.inverse(), tp,
                                  tm.inverse()})),
              conjugate(ts.inverse(), prod({x, tp.inverse(), tm, x.inverse(),
                                            tm.inverse(), tp})));
      rep.checks.push_back(chain_row(
          "obstacle case s=" + itos(s) + "<r=" + itos(r),
          {F1, F2, F3, F4, F5}));
    }

    // Corridor-loop case: first the pure commutator identities, then the
    // evaluated factorizations.
    MappingClass delta = ctx.l_delta(r);
    for (int s = 1; s <= p; ++s) {
      const MappingClass& es = ctx.epsilon(s);
      MappingClass acm = commutator(es, er);
      MappingClass bcm = commutator(em, es);
      MappingClass lhs1 = commutator(es, mul(delta, delta));
      MappingClass rhs1 =
          prod({acm, conjugate(bcm, delta.inverse()),
                conjugate(acm, delta.inverse()),
                conjugate(bcm, delta.power(-2))});
      rep.checks.push_back(eq_row(
          "loop-square split s=" + itos(s), lhs1, rhs1));
      rep.checks.push_back(eq_row(
          "loop-square transport s=" + itos(s),
          conjugate(bcm, delta.power(-2)),
          mul(commutator(mul(delta, delta), bcm), bcm)));
      MappingClass X =
          prod({acm, conjugate(bcm, delta.inverse()),
                conjugate(acm, delta.inverse()), bcm});
      MappingClass x3a = conjugate(
          prod({conjugate(acm, er), conjugate(bcm, em), conjugate(acm, em),
                conjugate(bcm, er)}),
          er.inverse());
      MappingClass ba = mul(bcm, acm);
      MappingClass x3b =
          conjugate(mul(conjugate(ba, er), conjugate(ba, em)),
                    mul(conjugate(bcm, er), er.inverse()));
      rep.checks.push_back(
          chain_row("loop-square regrouping s=" + itos(s), {X, x3a, x3b}));
    }
    for (int s = r; s <= p; ++s) {
      const MappingClass& es = ctx.epsilon(s);
      const MappingClass& ts = ctx.tau(s);
      MappingClass ba = mul(commutator(em, es), commutator(es, er));
      MappingClass w = mul(conjugate(ts, x.inverse()), s2);
      MappingClass f1 =
          prod({tm.inverse(),
                conjugate(mul(tm.inverse(), tp),
                          prod({x, ts, s2, s1.inverse()})),
                tp});
      MappingClass f2 =
          prod({tm.inverse(), conjugate(mul(tm.inverse(), tp), w), tp});
      rep.checks.push_back(
          chain_row("loop case s=" + itos(s) + ">=r factorization",
                    {ba, f1, f2}));
      MappingClass side = conjugate(ts, x.inverse());
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + ">=r side commutation",
          mul(side, er), mul(er, side)));
      MappingClass g1f =
          prod({conjugate(tm.inverse(), er),
                conjugate(mul(conjugate(tm.inverse(), er), s1), w), s1});
      MappingClass g2f =
          prod({s1.inverse(),
                conjugate(mul(s1.inverse(), conjugate(tp, em)), w),
                conjugate(tp, em)});
      MappingClass lam =
          mul(conjugate(tm.inverse(), er), conjugate(tp, em));
      MappingClass prodf = prod(
          {conjugate(tm.inverse(), er), conjugate(lam, w), conjugate(tp, em)});
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + ">=r track of e" + itos(r),
          conjugate(ba, er), g1f));
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + ">=r track of e" + itos(r - 1),
          conjugate(ba, em), g2f));
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + ">=r product",
          mul(conjugate(ba, er), conjugate(ba, em)), prodf));
    }
    for (int s = 1; s <= r - 1; ++s) {
      const MappingClass& es = ctx.epsilon(s);
      const MappingClass& ts = ctx.tau(s);
      MappingClass ba = mul(commutator(em, es), commutator(es, er));
      MappingClass f1 =
          prod({tm.inverse(), conjugate(ts, prod({x, tm, s2})),
                conjugate(ts.inverse(), prod({x, tp, s2})), tp});
      rep.checks.push_back(
          chain_row("loop case s=" + itos(s) + "<r factorization",
                    {ba, f1}));
      MappingClass side = conjugate(ts, x);
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + "<r side commutation",
          mul(side, er), mul(er, side)));
      MappingClass g1f =
          prod({conjugate(tm.inverse(), er),
                conjugate(conjugate(ts, x), mul(conjugate(tm, er), s2)),
                conjugate(conjugate(ts.inverse(), x), mul(s1, s2)), s1});
      MappingClass g2f =
          prod({s1.inverse(), conjugate(conjugate(ts, x), mul(s1, s2)),
                conjugate(conjugate(ts.inverse(), x),
                          mul(conjugate(tp, em), s2)),
                conjugate(tp, em)});
      MappingClass prodf =
          prod({conjugate(tm.inverse(), er),
                conjugate(conjugate(ts, x), mul(conjugate(tm, er), s2)),
                conjugate(conjugate(ts.inverse(), x),
                          mul(conjugate(tp, em), s2)),
                conjugate(tp, em)});
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + "<r track of e" + itos(r),
          conjugate(ba, er), g1f));
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + "<r track of e" + itos(r - 1),
          conjugate(ba, em), g2f));
      rep.checks.push_back(eq_row(
          "loop case s=" + itos(s) + "<r product",
          mul(conjugate(ba, er), conjugate(ba, em)), prodf));
    }

    // Membership of the corridor commutators in the twist subgroup: the
    // displayed factorization, plus the literal word under the working
    // guess for its unbound letters.
    for (int rp = 1; rp <= p; ++rp)
      for (int s_ = rp + 1; s_ <= p; ++s_) {
        MappingClass word =
            prod({ctx.tau(rp).inverse(), s1,
                  conjugate(ctx.tau(rp).inverse(),
                            prod({x, ctx.tau(s_), s2})),
                  ctx.tau(s_)});
        rep.checks.push_back(eq_row(
            "commutator factorization [e" + itos(rp) + ", e" + itos(s_) + "]",
            commutator(ctx.epsilon(rp), ctx.epsilon(s_)), word));
        rep.checks.push_back(flag_row(
            "commutator word guess (s=" + itos(rp) + ", r=" + itos(s_) + ")",
            verify_lemma_tech(ctx, rp, s_),
            "hypothesis refuted: the displayed word with first/second "
            "half-twists substituted does not match any commutator reading"));
      }
  } else {
    rep.checks.push_back(skip_row("obstacle and loop cases",
                                  "need at least two obstacles"));
  }

  rep.checks.push_back(skip_row("obstacle case, handle branch",
                                "no odd handle indices at genus 0"));
  rep.checks.push_back(skip_row("loop case, handle branch",
                                "no odd handle indices at genus 0"));
  return rep;
}

SuiteReport verify_presentation_suite(const MarkedSurfaceSpec& spec) {
  TwistContext ctx(spec);
  SuiteReport rep{"presentation", to_json(spec), {}};

  GroupPresentation punctured = bt_presentation_punctured(spec);
  std::vector<MappingClass> cls = standard_classes(ctx, punctured);
  for (const Relator& rel : punctured.relators) {
    MappingClass img = image_of(cls, rel.word);
    rep.checks.push_back(
        img.is_identity()
            ? CheckResult{"punctured " + rel.note, CheckStatus::Pass, ""}
            : CheckResult{"punctured " + rel.note, CheckStatus::Fail,
                          "image: " + image_table(img)});
  }

  GroupPresentation vortex = bt_presentation_vortex(spec);
  std::vector<MappingClass> vcls = standard_classes(ctx, vortex);
  const int first_vortex = 2 * spec.genus + spec.boundary_count();
  std::size_t base = punctured.relators.size();
  for (std::size_t i = base; i < vortex.relators.size(); ++i) {
    const Relator& rel = vortex.relators[i];
    int r = first_vortex + static_cast<int>(i - base);
    MappingClass img = image_of(vcls, rel.word);
    rep.checks.push_back(neq_row("vortex " + rel.note + " uncorrected",
                                 img, identity_class(img.rank())));
    rep.checks.push_back(eq_row(
        "vortex " + rel.note + " modulo squared pocket twists", img,
        pocket_correction(ctx, r)));
  }

  if (spec.punctures >= 1 && spec.genus == 0 && spec.boundary_count() == 1) {
    const int aleph = decoration_count(spec);
    const int p = spec.punctures;
    const int want = aleph - 2 * p;
    if (want < 1) {
      rep.checks.push_back(skip_row("alternative relators",
                                    "partition entry would be nonpositive"));
    } else if (p > 2) {
      rep.checks.push_back(
          skip_row("alternative relators",
                   "engine classes for the side chains are set up for at "
                   "most two vortices"));
    } else {
      GroupPresentation alt = bt_presentation_alternative(spec, {want});
      std::vector<MappingClass> acls;
      for (const std::string& g : alt.generators) {
        if (g == "s1") {
          acls.push_back(ctx.sigma(1));
        } else if (g == "x1") {
          acls.push_back(ctx.x());
        } else if (g == "u1") {
          acls.push_back(ctx.tau(1));
        } else if (g == "u2") {
          acls.push_back(conjugate(ctx.tau(2),
                                   mul(ctx.x().inverse(), ctx.y())));
        } else if (g[0] == 'y') {
          int i = std::stoi(g.substr(1));
          if (i == 1 && p == 2)
            acls.push_back(ctx.y());
          else
            acls.push_back(ctx.sigma(p + i));
        } else {
          throw ValidationError("unmapped alternative generator '" + g + "'");
        }
      }
      for (const Relator& rel : alt.relators) {
        MappingClass img = image_of(acls, rel.word);
        if (rel.note == "co(s1,u1)") {
          // The digon pair: commutation holds only modulo the squared
          // pocket twists around the first vortex.
          rep.checks.push_back(neq_row("alternative " + rel.note +
                                           " uncorrected",
                                       img, identity_class(img.rank())));
          rep.checks.push_back(
              eq_row("alternative " + rel.note + " modulo squared pocket "
                     "twists",
                     img, pocket_correction(ctx, 1).inverse()));
        } else if (rel.kind == "rec") {
          // Rectangle relators hold in the quotients, not in the engine.
          PermutationImage perm = permutation_quotient(alt, rel.word);
          AJVector ajv = aj_of_relator(spec, alt, rel.word);
          bool quotients = is_identity(perm) && ajv.is_zero();
          bool engine_nontrivial = !img.is_identity();
          rep.checks.push_back(
              quotients && engine_nontrivial
                  ? CheckResult{"alternative " + rel.note + " quotient-only",
                                CheckStatus::Pass, ""}
                  : CheckResult{"alternative " + rel.note + " quotient-only",
                                CheckStatus::Fail,
                                engine_nontrivial
                                    ? "quotient image nontrivial"
                                    : "unexpectedly exact in the engine"});
        } else {
          rep.checks.push_back(
              img.is_identity()
                  ? CheckResult{"alternative " + rel.note, CheckStatus::Pass,
                                ""}
                  : CheckResult{"alternative " + rel.note, CheckStatus::Fail,
                                "image: " + image_table(img)});
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_vortex_suite(const MarkedSurfaceSpec& spec) {
  TwistContext ctx(spec);
  SuiteReport rep{"vortex", to_json(spec), {}};
  for (int r = 1; r <= ctx.obstacles(); ++r) {
    DigonData d = digon_data(ctx, r);
    const MappingClass& u = ctx.tau(r - 1);
    const MappingClass& v = ctx.tau(r);
    std::string at = " (r=" + itos(r) + ")";
    rep.checks.push_back(eq_row("digon sides braid" + at,
                                prod({d.s1, d.s2, d.s1}),
                                prod({d.s2, d.s1, d.s2})));
    rep.checks.push_back(eq_row("first slide recovers t" + itos(r - 1) + at,
                                prod({d.s1, d.s2, d.s1.inverse()}), u));
    rep.checks.push_back(eq_row("second slide recovers t" + itos(r) + at,
                                prod({d.s2, d.s1, d.s2.inverse()}), v));
    rep.checks.push_back(eq_row("corrected commutation" + at,
                                prod({u, v, d.lq2}), prod({v, u, d.lq1})));
    rep.checks.push_back(neq_row("mismatched correction fails" + at,
                                 prod({u, v, d.lq1}), prod({v, u, d.lq2})));
    rep.checks.push_back(eq_row("commutator equals pocket correction" + at,
                                ctx.taurus(r), pocket_correction(ctx, r)));
    rep.checks.push_back(eq_row("second side squares to the pocket twist" + at,
                                mul(d.s2, d.s2), ctx.l_delta(r)));
    rep.checks.push_back(
        eq_row("collision twist squares to the pocket twist" + at,
               ctx.collision_twist(r).power(2), ctx.l_delta(r)));
    rep.checks.push_back(eq_row("pocket twist is a point push" + at,
                                ctx.push(pocket_loop(r)), ctx.l_delta(r)));
    rep.checks.push_back(eq_row("corridor loop push" + at,
                                ctx.push(loop_around(r)), ctx.epsilon(r)));
  }
  return rep;
}

SuiteReport verify_conjugation_suite(const MarkedSurfaceSpec& spec) {
  TwistContext ctx(spec);
  return verify_conjugation_formulas(ctx);
}

SuiteReport verify_appendix_suite(const MarkedSurfaceSpec& spec) {
  TwistContext ctx(spec);
  return verify_appendix(ctx);
}

SuiteReport verify_dual_realization() {
  MarkedSurfaceSpec spec;
  spec.genus = 0;
  spec.marked_per_boundary = {4};
  spec.punctures = 1;
  spec.vortex_signs = {1};
  TwistContext ctx(spec);
  SuiteReport rep{"dual", to_json(spec), {}};

  // Twists along the two arcs joining the last two decorations around the
  // vortex, built from the embedded pair of collision half-arcs.
  MappingClass psi = ctx.artin_half_twist(4);
  MappingClass c1 = conjugate(ctx.artin_half_twist(3), psi);
  MappingClass c2 = ctx.artin_half_twist(4);
  MappingClass eta1 = prod({c1, c2, c1.inverse()});
  MappingClass eta2 = prod({c2, c1, c2.inverse()});
  MappingClass lq1 = mul(c1, c1).power(2);
  MappingClass lq2 = mul(c2, c2).power(2);

  rep.checks.push_back(eq_row("around-side relation",
                              prod({eta1, eta2, lq2}),
                              prod({eta2, eta1, lq1})));
  rep.checks.push_back(neq_row("around-side mismatched correction fails",
                               prod({eta1, eta2, lq1}),
                               prod({eta2, eta1, lq2})));
  rep.checks.push_back(
      eq_row("plain side is the adjacent half-twist", eta2, ctx.sigma(3)));

  Triangulation fan = seed_triangulation(spec);
  QuiverWithPotential qp = qp_of(fan);
  GroupPresentation cbr = cbr_presentation_from_qp(qp);
  // Dual classes by quiver vertex: the two chords, then the two digon
  // sides; the relator map sends each twist to the inverse dual twist.
  std::vector<MappingClass> duals = {ctx.sigma(1), ctx.sigma(2), eta1, eta2};
  std::vector<MappingClass> cls;
  for (const MappingClass& d : duals) cls.push_back(d.inverse());

  for (const Relator& rel : cbr.relators) {
    MappingClass img = image_of(cls, rel.word);
    if (rel.note == "co(b3,b4)") {
      rep.checks.push_back(neq_row("cluster " + rel.note + " uncorrected",
                                   img, identity_class(img.rank())));
      rep.checks.push_back(
          eq_row("cluster " + rel.note + " modulo squared pocket twists",
                 img, mul(lq1, lq2.inverse())));
    } else {
      rep.checks.push_back(
          img.is_identity()
              ? CheckResult{"cluster " + rel.note, CheckStatus::Pass, ""}
              : CheckResult{"cluster " + rel.note, CheckStatus::Fail,
                            "image: " + image_table(img)});
    }
  }
  return rep;
}

std::vector<SuiteReport> verify_suites(const MarkedSurfaceSpec& spec,
                                       const std::string& which) {
  std::vector<SuiteReport> out;
  if (which == "presentation" || which == "all")
    out.push_back(verify_presentation_suite(spec));
  if (which == "conjugation" || which == "all")
    out.push_back(verify_conjugation_suite(spec));
  if (which == "appendix" || which == "all")
    out.push_back(verify_appendix_suite(spec));
  if (which == "vortex" || which == "all")
    out.push_back(verify_vortex_suite(spec));
  if (out.empty())
    throw ValidationError("unknown suite '" + which +
                          "' (presentation, conjugation, appendix, vortex, "
                          "all)");
  return out;
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json j;
  j["suites"] = nlohmann::json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const SuiteReport& rep : reports) {
    nlohmann::json s;
    s["suite"] = rep.suite;
    s["surface"] = nlohmann::json::parse(rep.surface);
    s["checks"] = nlohmann::json::array();
    for (const CheckResult& c : rep.checks) {
      nlohmann::json row;
      row["name"] = c.name;
      row["status"] = check_status_name(c.status);
      if (!c.detail.empty()) row["detail"] = c.detail;
      s["checks"].push_back(row);
    }
    s["passed"] = rep.count(CheckStatus::Pass);
    s["failed"] = rep.count(CheckStatus::Fail);
    s["skipped"] = rep.count(CheckStatus::Skipped);
    passed += rep.count(CheckStatus::Pass);
    failed += rep.count(CheckStatus::Fail);
    skipped += rep.count(CheckStatus::Skipped);
    j["suites"].push_back(s);
  }
  j["passed"] = passed;
  j["failed"] = failed;
  j["skipped"] = skipped;
  return j.dump(2) + "\n";
}

} // namespace vbt
