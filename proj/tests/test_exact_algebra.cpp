#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "arakelov/error.hpp"
#include "arakelov/parse.hpp"
#include "arakelov/place.hpp"
#include "arakelov/poly.hpp"
#include "test_support.hpp"

using namespace arakelov;
using arakelov::testing::P;
using arakelov::testing::random_poly;

namespace {

// Oracle: multiply the factors back out and compare monic forms.
Poly reassemble(const std::vector<SquarefreeFactor>& factors) {
  Poly out(1);
  for (const auto& f : factors) out *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

bool is_squarefree(const Poly& p) { return gcd(p, p.derivative()).degree() == 0; }

// Oracle for rational roots of small integer polynomials: try every x = a/b
// with |a|, b <= 30 and count the multiplicity by repeated division.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  std::vector<std::pair<Rational, int>> roots;
  for (long b = 1; b <= 30; ++b) {
    for (long a = -30; a <= 30; ++a) {
      const Rational x = Rational(a) / Rational(b);
      if (std::any_of(roots.begin(), roots.end(), [&](const auto& r) { return r.first == x; })) {
        continue;
      }
      int mult = 0;
      Poly q = p;
      const Poly lin = Poly::variable() - Poly(x);
      while (!q.is_zero() && (q % lin).is_zero()) {
        q = q / lin;
        ++mult;
      }
      if (mult > 0) roots.emplace_back(x, mult);
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  const Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(5) / Rational(2));
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("polynomial arithmetic basics") {
  const Poly t = Poly::variable();
  const Poly p = t.pow(3) - Poly(27);
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "t^3 - 27");
  CHECK(p.derivative() == Rational(3) * t.pow(2));
  auto [q, r] = divmod(p, t - Poly(3));
  CHECK(r.is_zero());
  CHECK(q == t.pow(2) + Rational(3) * t + Poly(9));
  CHECK(gcd(p, p.derivative()) == Poly(1));
  CHECK(Poly().degree() == -1);
  CHECK_THROWS_AS(divmod(p, Poly()), Error);
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
  const Poly t = Poly::variable();
  const RatFunc f(Rational(2) * t * (t - Poly(1)), Rational(4) * (t - Poly(1)) * (t + Poly(1)));
  CHECK(f.num() == (Rational(1) / Rational(2)) * t);
  CHECK(f.den() == t + Poly(1));
  CHECK(f.map_degree() == 1);
  CHECK(RatFunc(Poly(5), Poly(3)).is_constant());
  CHECK(RatFunc(Poly(5), Poly(3)).map_degree() == 0);
}

TEST_CASE("squarefree_decompose spec examples") {
  SUBCASE("t^3 - 27 is already squarefree") {
    const auto sf = squarefree_decompose(P("t^3 - 27"));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == P("t^3 - 27"));
    CHECK(sf[0].multiplicity == 1);
    CHECK(is_squarefree(sf[0].factor));
  }
  SUBCASE("27 t^4 (t^2 - 1)") {
    const Poly p = P("27*t^4*(t^2-1)");
    auto sf = squarefree_decompose(p);
    std::sort(sf.begin(), sf.end(), [](const auto& a, const auto& b) { return a.multiplicity > b.multiplicity; });
    REQUIRE(sf.size() == 2);
    CHECK(sf[0] == SquarefreeFactor{P("t"), 4});
    CHECK(sf[1] == SquarefreeFactor{P("t^2 - 1"), 1});
    CHECK(reassemble(sf) == p.monic());
  }
  SUBCASE("constants have no factors") { CHECK(squarefree_decompose(Poly(5)).empty()); }
  SUBCASE("zero is rejected") {
    try {
      squarefree_decompose(Poly());
      FAIL("expected ZeroPolynomial");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroPolynomial);
    }
  }
}

TEST_CASE("squarefree_decompose reassembles random products") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = random_poly(rng, 3, 4);
    const Poly q = random_poly(rng, 3, 4);
    if (p.is_zero() || q.is_zero()) continue;
    const Poly pq = p * q * p;
    const auto sf = squarefree_decompose(pq);
    CHECK(reassemble(sf) == pq.monic());
    for (std::size_t i = 0; i < sf.size(); ++i) {
      CHECK(is_squarefree(sf[i].factor));
      CHECK(sf[i].factor.leading() == Rational(1));
      for (std::size_t j = i + 1; j < sf.size(); ++j) CHECK(gcd(sf[i].factor, sf[j].factor) == Poly(1));
    }
  }
}

TEST_CASE("compatible_splitting spec examples") {
  SUBCASE("single squarefree input is one place") {
    const auto places = compatible_splitting({P("t^3 - 27")});
    REQUIRE(places.size() == 1);
    CHECK(places[0].minimal_poly() == P("t^3 - 27"));
    CHECK(places[0].degree() == 3);
    CHECK(ord_at(P("t^3 - 27"), places[0], 0) == 1);
  }
  SUBCASE("differing orders split into separate places") {
    const Poly a = P("t^2*(t-1)");
    const Poly b = P("t*(t-1)^2");
    const auto places = compatible_splitting({a, b});
    REQUIRE(places.size() == 2);
    // brute force over rational roots gives the same order pairs
    const auto ra = rational_roots(a);
    const auto rb = rational_roots(b);
    REQUIRE(ra.size() == 2);
    for (const auto& place : places) {
      REQUIRE(place.degree() == 1);
      const Rational root = -place.minimal_poly().coeff(0);
      const auto ma = std::find_if(ra.begin(), ra.end(), [&](const auto& r) { return r.first == root; });
      const auto mb = std::find_if(rb.begin(), rb.end(), [&](const auto& r) { return r.first == root; });
      REQUIRE(ma != ra.end());
      REQUIRE(mb != rb.end());
      CHECK(ord_at(a, place, 0) == ma->second);
      CHECK(ord_at(b, place, 0) == mb->second);
    }
    CHECK(places[0].minimal_poly() == P("t - 1"));
    CHECK(places[1].minimal_poly() == P("t"));
  }
  SUBCASE("constants have no places") { CHECK(compatible_splitting({Poly(7)}).empty()); }
  SUBCASE("zero is rejected") { CHECK_THROWS_AS(compatible_splitting({Poly()}), Error); }
}

TEST_CASE("compatible_splitting places are coprime and orders are uniform") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> ps;
    const Poly common = random_poly(rng, 2, 3);
    for (int k = 0; k < 3; ++k) {
      Poly p = random_poly(rng, 2, 3) * common.pow(static_cast<unsigned>(k));
      if (!p.is_zero()) ps.push_back(p);
    }
    if (ps.empty()) continue;
    const auto places = compatible_splitting(ps);
    for (std::size_t i = 0; i < places.size(); ++i) {
      for (std::size_t j = i + 1; j < places.size(); ++j) {
        CHECK(gcd(places[i].minimal_poly(), places[j].minimal_poly()) == Poly(1));
      }
    }
    for (const auto& p : ps) {
      Poly product(1);
      int weighted = 0;
      for (const auto& place : places) {
        const Order k = ord_at(p, place, 0);
        product *= place.minimal_poly().pow(static_cast<unsigned>(k));
        weighted += k * place.degree();
        // uniform order: the cofactor shares no root with the place
        const Poly cofactor = p / place.minimal_poly().pow(static_cast<unsigned>(k));
        CHECK(gcd(cofactor, place.minimal_poly()) == Poly(1));
      }
      CHECK(divides(product, p));
      // every root lies in some place
      CHECK(weighted == p.degree());
    }
  }
}

TEST_CASE("ord_at examples and properties") {
  const Place cubic = Place::finite(P("t^3 - 27"));
  CHECK(ord_at(P("t^3 - 27"), cubic, 0) == 1);
  CHECK(ord_at(P("t^3 - 27"), Place::infinity(), 12) == 9);
  CHECK(ord_at(Poly(5), Place::finite(P("t - 2")), 0) == 0);
  try {
    ord_at(P("t^5"), Place::infinity(), 4);
    FAIL("expected BoundViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundViolation);
  }
  CHECK(order_or_infinite(Poly(), cubic, 0) == kInfiniteOrder);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = random_poly(rng, 4, 3);
    const Poly q = random_poly(rng, 4, 3);
    if (p.is_zero() || q.is_zero()) continue;
    const int bp = p.degree() + 2;
    const int bq = q.degree() + 1;
    auto places = compatible_splitting({p, q});
    places.push_back(Place::infinity());
    int sum = 0;
    for (const auto& place : places) {
      CHECK(ord_at(p * q, place, bp + bq) == ord_at(p, place, bp) + ord_at(q, place, bq));
      sum += ord_at(p, place, bp) * place.degree();
    }
    CHECK(sum == bp);
  }
}

TEST_CASE("specialize slices a bivariate polynomial") {
  CHECK(specialize(parse_bipoly("t*s + 1"), 2) == P("2*t + 1"));
  CHECK(specialize(parse_bipoly("3*s^2 - s + 4"), 17) == P("3*t^2 - t + 4"));
  CHECK(specialize(parse_bipoly("(t^2-1)*s^2"), 1).is_zero());
}

TEST_CASE("polynomial grammar") {
  CHECK(P("(t^2-1)*(t+1)") == P("t^3 + t^2 - t - 1"));
  CHECK(P("-t^2 + 3") == Poly(3) - Poly::variable().pow(2));
  CHECK(P("t^4/12") == (Rational(1) / Rational(12)) * Poly::variable().pow(4));
  const BiPoly b = parse_bipoly("(t^2-1)*s^2 + 3");
  CHECK(b.s_degree() == 2);
  CHECK(b.coefficients()[2] == P("t^2 - 1"));
  CHECK(b.coefficients()[0] == Poly(3));

  SUBCASE("errors carry byte offsets") {
    try {
      parse_bipoly("t^^2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
    try {
      parse_bipoly("t + x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 4);
    }
    try {
      parse_bipoly("(t + 1");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 6);
    }
    CHECK_THROWS_AS(parse_poly("s + t"), ParseError);
    CHECK_THROWS_AS(parse_bipoly("t / (t+1)"), ParseError);
  }
}
