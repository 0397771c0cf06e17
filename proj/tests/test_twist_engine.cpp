#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "vbt/twist_context.hpp"

using namespace vbt;

namespace {

MarkedSurfaceSpec disk(int m, int p) {
  MarkedSurfaceSpec s;
  s.marked_per_boundary = {m};
  s.punctures = p;
  return s;
}

// The two engine workhorses used throughout: a once-vortexed square and a
// twice-vortexed triangle.
const MarkedSurfaceSpec kSquare = disk(4, 1);
const MarkedSurfaceSpec kTriangle = disk(3, 2);

std::vector<int> loop_around(int t) { // zeta_t: out past t-1 holes, around t
  std::vector<int> w;
  for (int j = t; j >= 1; --j) w.push_back(j);
  return w;
}

std::vector<int> pocket_loop(int r) { // delta_r: between obstacles r-1 and r
  std::vector<int> w;
  for (int j = 1; j <= r - 1; ++j) w.push_back(-j);
  for (int j = r; j >= 1; --j) w.push_back(j);
  return w;
}

} // namespace

TEST_CASE("context ranks and guards") {
  TwistContext a(kSquare);
  CHECK(a.decorations() == 4);
  CHECK(a.obstacles() == 1);
  CHECK(a.free_rank() == 5);

  TwistContext b(kTriangle);
  CHECK(b.decorations() == 5);
  CHECK(b.obstacles() == 2);
  CHECK(b.free_rank() == 7);

  MarkedSurfaceSpec torus{1, {1}, 0, {}};
  CHECK_THROWS_AS(TwistContext{torus}, UnsupportedModelError);
  CHECK_THROWS_AS(TwistContext{disk(1, 0)}, UnsupportedModelError);

  CHECK_THROWS_AS(a.sigma(0), ValidationError);
  CHECK_THROWS_AS(a.sigma(4), ValidationError);
  CHECK_THROWS_AS(a.tau(2), ValidationError);
  CHECK_THROWS_AS(a.epsilon(-1), ValidationError);
  CHECK_THROWS_AS(a.collision_twist(2), ValidationError);
  CHECK_THROWS_AS(a.elementary_push(4), ValidationError);
  CHECK_THROWS_AS(a.elementary_push(6), ValidationError);
}

TEST_CASE("sigma generators satisfy the braid relations") {
  for (const auto& spec : {kSquare, kTriangle}) {
    TwistContext ctx(spec);
    const int top = ctx.decorations() - 1;
    for (int i = 1; i <= top; ++i)
      for (int j = i + 1; j <= top; ++j) {
        MappingClass a = ctx.sigma(i), b = ctx.sigma(j);
        if (j - i >= 2)
          CHECK(mul(a, b) == mul(b, a));
        else
          CHECK(mul(mul(a, b), a) == mul(mul(b, a), b));
      }
  }
}

TEST_CASE("base cases: epsilon_0 and tau_0") {
  TwistContext ctx(kTriangle);
  CHECK(ctx.epsilon(0).is_identity());
  CHECK(ctx.tau(0) == ctx.sigma(1));
}

TEST_CASE("point pushes recover epsilon and the pocket twist") {
  for (const auto& spec : {kSquare, kTriangle}) {
    TwistContext ctx(spec);
    for (int t = 1; t <= ctx.obstacles(); ++t) {
      CHECK(ctx.push(loop_around(t)) == ctx.epsilon(t));
      CHECK(ctx.push(pocket_loop(t)) == ctx.l_delta(t));
    }
    // Pushing a loop and then its reverse is trivial.
    std::vector<int> there = loop_around(ctx.obstacles());
    std::vector<int> back(there.rbegin(), there.rend());
    for (int& s : back) s = -s;
    there.insert(there.end(), back.begin(), back.end());
    CHECK(ctx.push(there).is_identity());
  }
}

TEST_CASE("a collision twist squares to the pocket L-twist") {
  for (const auto& spec : {kSquare, kTriangle, disk(5, 2), disk(2, 3)}) {
    TwistContext ctx(spec);
    for (int r = 1; r <= ctx.obstacles(); ++r)
      CHECK(ctx.collision_twist(r).power(2) == ctx.l_delta(r));
  }
  // Also across a hole rather than a vortex (two boundary components).
  TwistContext annulus(MarkedSurfaceSpec{0, {3, 1}, 0, {}});
  CHECK(annulus.obstacles() == 1);
  CHECK(annulus.collision_twist(1).power(2) == annulus.l_delta(1));
}

TEST_CASE("digon pair: braid twists, L-twists, and the corrected relation") {
  for (const auto& spec : {kSquare, kTriangle, disk(2, 3)}) {
    TwistContext ctx(spec);
    for (int r = 1; r <= ctx.obstacles(); ++r) {
      CAPTURE(r);
      auto [s1, s2] = ctx.digon_pair(r);
      MappingClass b1 = mul(mul(s1, s2), s1.inverse()); // edge twist eta_1
      MappingClass b2 = mul(mul(s2, s1), s2.inverse()); // edge twist eta_2
      MappingClass l1 = s1.power(2);                    // side L-twist delta_1
      MappingClass l2 = s2.power(2);                    // side L-twist delta_2

      CHECK(b1 == ctx.tau(r - 1));
      CHECK(b2 == ctx.tau(r));
      CHECK(l2 == ctx.l_delta(r));

      // The digon relation, exactly.
      CHECK(mul(mul(b1, b2), l2.power(2)) == mul(mul(b2, b1), l1.power(2)));
      // Negative control: swapping the side twists breaks it.
      CHECK_FALSE(mul(mul(b1, b2), l1.power(2)) ==
                  mul(mul(b2, b1), l2.power(2)));

      // The vortex commutator is the conjugated ratio of side twists.
      MappingClass ratio = mul(l2.power(2), l1.power(-2));
      MappingClass g = mul(b2.inverse(), b1.inverse());
      CHECK(ctx.taurus(r) == conjugate(ratio, g));
    }
  }
}

TEST_CASE("x and y braid with every tau") {
  for (const auto& spec : {kSquare, kTriangle}) {
    TwistContext ctx(spec);
    MappingClass x = ctx.x(), y = ctx.y();
    for (int r = 1; r <= ctx.obstacles(); ++r) {
      MappingClass t = ctx.tau(r);
      CHECK(mul(mul(t, x), t) == mul(mul(x, t), x));
      CHECK(mul(mul(t, y), t) == mul(mul(y, t), y));
    }
    // x and y are honest conjugates of sigma_1, sigma_3.
    CHECK(x == conjugate(ctx.sigma(1), ctx.sigma(2).inverse()));
    CHECK(y == conjugate(ctx.sigma(3), ctx.sigma(2).inverse()));
  }
}

TEST_CASE("token evaluation") {
  TwistContext ctx(kTriangle);
  CHECK(ctx.eval("").is_identity());
  CHECK(ctx.eval("s1 s2 s1") == ctx.eval("s2 s1 s2"));
  CHECK(ctx.named("t1'") == ctx.tau(1).inverse());
  CHECK(ctx.eval("e1 s1 e1'") == ctx.tau(1));
  CHECK(ctx.eval("x") ==
        eval_product(ctx.free_rank(),
                     {{ctx.sigma(2), 1}, {ctx.sigma(1), 1}, {ctx.sigma(2), -1}}));
  CHECK(ctx.eval("L2") == ctx.l_delta(2));
  CHECK(ctx.eval("c2") == commutator(ctx.tau(2), ctx.tau(1)));
  CHECK(ctx.eval("B1 B1") == ctx.l_delta(1));
  CHECK_THROWS_AS(ctx.eval("q7"), ValidationError);
  CHECK_THROWS_AS(ctx.eval("s"), ValidationError);
}
