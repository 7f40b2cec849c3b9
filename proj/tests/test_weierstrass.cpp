#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arakelov/error.hpp"
#include "arakelov/kodaira.hpp"
#include "arakelov/weierstrass.hpp"
#include "test_support.hpp"

using namespace arakelov;
using arakelov::testing::P;
using arakelov::testing::random_poly;

namespace {

// Oracle: multiplicity of the rational root r, by repeated division by (t - r).
int root_multiplicity(const Poly& p, const Rational& r) {
  if (p.is_zero()) return kInfiniteOrder;
  const Poly lin = Poly::variable() - Poly(r);
  int k = 0;
  Poly q = p;
  while ((q % lin).is_zero()) {
    q = q / lin;
    ++k;
  }
  return k;
}

const KodairaFiber& fiber_at(const std::vector<KodairaFiber>& fibers, const Place& place) {
  for (const auto& f : fibers) {
    if (f.place == place) return f;
  }
  FAIL("no fiber at " << place.to_string());
  throw;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidData;
}

}  // namespace

TEST_CASE("Kodaira order table") {
  CHECK(classify_orders(0, 0, 5) == FiberType{FiberKind::In, 5});
  CHECK(classify_orders(1, 1, 2).kind == FiberKind::II);
  CHECK(classify_orders(kInfiniteOrder, 1, 2).kind == FiberKind::II);
  CHECK(classify_orders(1, 2, 3).kind == FiberKind::III);
  CHECK(classify_orders(1, kInfiniteOrder, 3).kind == FiberKind::III);
  CHECK(classify_orders(2, 2, 4).kind == FiberKind::IV);
  CHECK(classify_orders(2, 3, 6).kind == FiberKind::I0star);
  CHECK(classify_orders(2, 4, 6).kind == FiberKind::I0star);
  CHECK(classify_orders(3, 3, 6).kind == FiberKind::I0star);
  CHECK(classify_orders(2, 3, 9) == FiberType{FiberKind::Instar, 3});
  CHECK(classify_orders(3, 4, 8).kind == FiberKind::IVstar);
  CHECK(classify_orders(3, 6, 9).kind == FiberKind::IIIstar);
  CHECK(classify_orders(4, 5, 10).kind == FiberKind::IIstar);
  CHECK(code_of([] { classify_orders(4, 6, 12); }) == ErrorCode::UnclassifiableOrders);
  CHECK(code_of([] { classify_orders(1, 0, 2); }) == ErrorCode::UnclassifiableOrders);
  CHECK(FiberType{FiberKind::Instar, 2}.name() == "I2*");
  CHECK(FiberType{FiberKind::IIIstar, 0}.name() == "III*");
}

TEST_CASE("monodromy table: det 1, unipotency and finite orders") {
  const std::vector<FiberType> types = {
      {FiberKind::In, 1},  {FiberKind::In, 4},     {FiberKind::II, 0},     {FiberKind::III, 0},
      {FiberKind::IV, 0},  {FiberKind::I0star, 0}, {FiberKind::Instar, 2}, {FiberKind::IVstar, 0},
      {FiberKind::IIIstar, 0}, {FiberKind::IIstar, 0}};
  for (const auto& type : types) {
    const KodairaData d = kodaira_data(type);
    CAPTURE(type.name());
    CHECK(determinant(d.monodromy) == 1);
    CHECK(d.monodromy[0][0] + d.monodromy[1][1] == d.trace);
    const Mat2i n{{{d.monodromy[0][0] - 1, d.monodromy[0][1]}, {d.monodromy[1][0], d.monodromy[1][1] - 1}}};
    const bool nilpotent = multiply(n, n) == Mat2i{};
    CHECK(nilpotent == (type.kind == FiberKind::In));
    if (d.order > 0) {
      Mat2i power = kIdentity2;
      for (int k = 1; k <= d.order; ++k) {
        power = multiply(power, d.monodromy);
        CHECK((power == kIdentity2) == (k == d.order));
      }
    }
    if (type.kind == FiberKind::In) CHECK(*d.monodromy_log == Mat2i{{{0, type.n}, {0, 0}}});
  }
  CHECK(kodaira_data({FiberKind::II, 0}).order == 6);
  CHECK(kodaira_data({FiberKind::IV, 0}).order == 3);
  CHECK(kodaira_data({FiberKind::IVstar, 0}).order == 3);
  CHECK(kodaira_data({FiberKind::III, 0}).order == 4);
  CHECK(kodaira_data({FiberKind::IIstar, 0}).order == 6);
}

TEST_CASE("build_family") {
  SUBCASE("g2 = t, g3 = 1") {
    const auto f = build_family(P("t"), P("1"), 1);
    CHECK(f.delta == P("t^3 - 27"));
    CHECK(f.j.num() == P("t^3"));
    CHECK(f.j.den() == P("t^3 - 27"));
  }
  SUBCASE("g2 = 0 is the J = 0 family") {
    const auto f = build_family(Poly(), P("1"), 1);
    CHECK(f.delta == Poly(-27));
    CHECK(f.j.is_zero());
  }
  SUBCASE("forced cancellation") {
    CHECK(code_of([] { build_family(P("3"), P("1"), 1); }) == ErrorCode::DegenerateFamily);
  }
  SUBCASE("degree bounds") {
    CHECK(code_of([] { build_family(P("t^5"), P("1"), 1); }) == ErrorCode::DegreeBound);
    CHECK(code_of([] { build_family(P("t"), P("t^7"), 1); }) == ErrorCode::DegreeBound);
    CHECK_NOTHROW(build_family(P("t^8"), P("t^12"), 2));
  }
}

TEST_CASE("minimalize") {
  SUBCASE("t^4 a, t^6 b reduces at t to level 0") {
    const auto [m, red] = minimalize(build_family(P("t^4"), P("t^6"), 1));
    CHECK(m.g2 == Poly(1));
    CHECK(m.g3 == Poly(1));
    CHECK(m.level == 0);
    REQUIRE(red.size() == 1);
    CHECK(red[0].place == Place::finite(P("t")));
    CHECK(red[0].count == 1);
  }
  SUBCASE("already minimal") {
    const auto f = build_family(P("t"), P("1"), 1);
    const auto [m, red] = minimalize(f);
    CHECK(red.empty());
    CHECK(m.g2 == f.g2);
    CHECK(m.level == 1);
  }
  SUBCASE("infinity reduction of the isotrivial family") {
    const auto f = build_family(Poly(), P("1"), 1);
    // oracle: orders at infinity are (inf, 6 - 0, 12 - 0)
    CHECK(f.orders_at(Place::infinity())[1] == 6);
    CHECK(f.orders_at(Place::infinity())[2] == 12);
    const auto [m, red] = minimalize(f);
    CHECK(m.level == 0);
    REQUIRE(red.size() == 1);
    CHECK(red[0].place.is_infinity());
    CHECK(surface_report(m).delta_degree == Rational(0));
  }
  SUBCASE("level-2 input reducing at a finite place") {
    const auto [m, red] = minimalize(build_family(P("t^5"), P("t^6"), 2));
    CHECK(m.g2 == P("t"));
    CHECK(m.g3 == Poly(1));
    CHECK(m.level == 1);
  }
}

TEST_CASE("classify_fibers: g2 = t, g3 = 1") {
  const auto f = minimalize(build_family(P("t"), P("1"), 1)).first;
  const auto fibers = classify_fibers(f);
  REQUIRE(fibers.size() == 2);
  const auto& cubic = fiber_at(fibers, Place::finite(P("t^3 - 27")));
  CHECK(cubic.type == FiberType{FiberKind::In, 1});
  CHECK(cubic.place.degree() == 3);
  // oracle at the rational point of the place
  CHECK(root_multiplicity(f.delta, 3) == cubic.ord_delta);
  CHECK(root_multiplicity(f.g2, 3) == cubic.ord_g2);
  const auto& inf = fiber_at(fibers, Place::infinity());
  CHECK(inf.ord_g2 == 4 - 1);
  CHECK(inf.ord_g3 == 6 - 0);
  CHECK(inf.ord_delta == 12 - 3);
  CHECK(inf.type.kind == FiberKind::IIIstar);
  CHECK(1 * 3 + inf.euler == 12);
}

TEST_CASE("classify_fibers: g2 = 3t^2, g3 = t^2") {
  const auto f = minimalize(build_family(P("3*t^2"), P("t^2"), 1)).first;
  CHECK(f.delta == P("27*t^6 - 27*t^4"));
  const auto fibers = classify_fibers(f);
  const auto& at0 = fiber_at(fibers, Place::finite(P("t")));
  CHECK(root_multiplicity(f.g2, 0) == 2);
  CHECK(root_multiplicity(f.g3, 0) == 2);
  CHECK(root_multiplicity(f.delta, 0) == 4);
  CHECK(at0.type.kind == FiberKind::IV);
  const auto& pm1 = fiber_at(fibers, Place::finite(P("t^2 - 1")));
  CHECK(root_multiplicity(f.delta, 1) == 1);
  CHECK(root_multiplicity(f.delta, -1) == 1);
  CHECK(pm1.type == FiberType{FiberKind::In, 1});
  const auto& inf = fiber_at(fibers, Place::infinity());
  CHECK(inf.ord_g2 == 2);
  CHECK(inf.ord_g3 == 4);
  CHECK(inf.ord_delta == 6);
  CHECK(inf.type.kind == FiberKind::I0star);
  CHECK(at0.euler + 2 * pm1.euler + inf.euler == 12);
}

TEST_CASE("classify_fibers: smooth family") {
  const auto f = minimalize(build_family(Poly(), P("1"), 1)).first;
  CHECK(classify_fibers(f).empty());
}

TEST_CASE("surface_report examples") {
  SUBCASE("g2 = t, g3 = 1") {
    const auto r = surface_report(minimalize(build_family(P("t"), P("1"), 1)).first);
    CHECK(r.delta_degree == Rational(1));
    CHECK(r.deg_j == 3);
    CHECK(r.n_singular == 4);
    CHECK_FALSE(r.semistable);
    CHECK_FALSE(r.isotrivial);
    CHECK(r.arakelov_bound_ok);
    CHECK(r.euler_total == 12);
    const auto res = fiber_count_residuals(r);
    CHECK(res.implied_nu_plus1 == Rational(1));
    CHECK(res.implied_nu_plus2 == Rational(0));
  }
  SUBCASE("g2 = 3t^2, g3 = t^2") {
    const auto r = surface_report(minimalize(build_family(P("3*t^2"), P("t^2"), 1)).first);
    CHECK(r.delta_degree == Rational(1));
    CHECK(r.deg_j == 2);
    CHECK(r.n_singular == 4);
  }
  SUBCASE("isotrivial") {
    const auto r = surface_report(minimalize(build_family(Poly(), P("1"), 1)).first);
    CHECK(r.delta_degree == Rational(0));
    CHECK(r.deg_j == 0);
    CHECK(r.n_singular == 0);
    CHECK(r.isotrivial);
    CHECK(r.arakelov_bound_ok);
  }
  SUBCASE("isotrivial with singular fibers: g2 = 0, g3 = t") {
    const auto r = surface_report(minimalize(build_family(Poly(), P("t"), 1)).first);
    REQUIRE(r.fibers.size() == 2);
    CHECK(r.fibers[0].type.kind == FiberKind::II);
    CHECK(r.fibers[0].ord_g2 == kInfiniteOrder);
    CHECK(r.fibers[1].type.kind == FiberKind::IIstar);
    CHECK(r.isotrivial);
  }
}

TEST_CASE("random minimal families satisfy the exact audits") {
  std::mt19937 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int level = 1 + trial % 2;
    const Poly g2 = random_poly(rng, 4 * level, 3);
    const Poly g3 = random_poly(rng, 6 * level, 3);
    WeierstrassFamily f;
    try {
      f = build_family(g2, g3, level);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateFamily);
      continue;
    }
    const auto [m, red] = minimalize(f);
    CHECK(minimalize(m).second.empty());  // idempotent
    SurfaceReport r;
    REQUIRE_NOTHROW(r = surface_report(m));
    long weighted = 0;
    for (const auto& fiber : r.fibers) {
      weighted += static_cast<long>(fiber.ord_delta) * fiber.place.degree();
      CHECK(determinant(fiber.monodromy) == 1);
    }
    CHECK(weighted == 12L * m.level);
    CHECK(Rational(r.euler_total) == Rational(12) * r.delta_degree);
    if (!r.isotrivial) CHECK(r.n_singular >= 3);
    ++checked;
  }
  CHECK(checked >= 200);
}

TEST_CASE("k3_slice_reports") {
  SUBCASE("t-independent family") {
    const auto out = k3_slice_reports(parse_bipoly("s"), parse_bipoly("1"), 1, {0, 1, 2});
    REQUIRE(out.slices.size() == 3);
    for (const auto& s : out.slices) {
      REQUIRE(s.report);
      CHECK(s.report->delta_degree == Rational(1));
      CHECK(s.report->deg_j == 3);
    }
    REQUIRE(out.generic);
    CHECK(out.generic->support == 3);
    CHECK(out.generic->delta == Rational(1));
    CHECK(out.generic->fiber_multiset == std::vector<std::string>{"I1", "I1", "I1", "III*"});
  }
  SUBCASE("G2 = t s, G3 = 1") {
    const auto out = k3_slice_reports(parse_bipoly("t*s"), parse_bipoly("1"), 1, {1, 2});
    REQUIRE(out.slices.size() == 2);
    CHECK(out.slices[1].report->fibers[0].place == Place::finite(parse_poly("8*t^3 - 27")));
    CHECK(out.slices[0].report->deg_j == 3);
    CHECK(out.slices[1].report->deg_j == 3);
  }
  SUBCASE("degenerate slice is excluded") {
    const auto out = k3_slice_reports(parse_bipoly("(t^2-1)*s^2"), parse_bipoly("0"), 1, {1, 2, 3});
    CHECK(out.slices[0].error);
    CHECK_FALSE(out.slices[0].report);
    CHECK(out.slices[1].report);
  }
  SUBCASE("all degenerate") {
    CHECK(code_of([] {
            k3_slice_reports(parse_bipoly("(t^2-1)*s^2"), parse_bipoly("0"), 1, {1, -1});
          }) == ErrorCode::AllSlicesDegenerate);
  }
  SUBCASE("tie leaves the generic profile unset") {
    const auto out = k3_slice_reports(parse_bipoly("s"), parse_bipoly("1 + t*s^2"), 1, {0, 1});
    CHECK_FALSE(out.generic);
  }
}
