#include "arakelov/place.hpp"

#include <algorithm>

#include "arakelov/error.hpp"

namespace arakelov {

Place Place::finite(const Poly& minimal_poly) {
  if (minimal_poly.degree() < 1) {
    throw Error(ErrorCode::InvalidData, "a finite place needs a nonconstant polynomial");
  }
  Place p;
  p.kind_ = Kind::Finite;
  p.minimal_poly_ = minimal_poly.monic();
  return p;
}

std::string Place::to_string(char var) const {
  return is_infinity() ? "inf" : minimal_poly_.to_string(var);
}

bool operator<(const Place& a, const Place& b) {
  if (a.kind_ != b.kind_) return a.kind_ == Place::Kind::Finite;
  return a.minimal_poly_ < b.minimal_poly_;
}

std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decompose of 0");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;

  // Yun: a0 = gcd(f, f'), b1 = f / a0, c1 = f' / a0, d1 = c1 - b1'.
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = f / a;
  Poly c = fp / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g.monic(), i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Place> compatible_splitting(const std::vector<Poly>& ps) {
  // Coprime base of all squarefree factors. Squarefree factors of one input
  // partition its roots by multiplicity, so each base element sees exactly one
  // multiplicity per input.
  std::vector<Poly> base;
  for (const auto& p : ps) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "compatible_splitting of 0");
    for (const auto& sf : squarefree_decompose(p)) {
      Poly a = sf.factor;
      std::vector<Poly> next;
      for (auto& b : base) {
        if (a.degree() < 1) {
          next.push_back(std::move(b));
          continue;
        }
        Poly g = gcd(a, b);
        if (g.degree() < 1) {
          next.push_back(std::move(b));
          continue;
        }
        Poly rest = b / g;
        if (rest.degree() > 0) next.push_back(rest.monic());
        next.push_back(g);
        a = a / g;
      }
      if (a.degree() > 0) next.push_back(a.monic());
      base = std::move(next);
    }
  }
  std::vector<Place> places;
  places.reserve(base.size());
  for (const auto& b : base) places.push_back(Place::finite(b));
  std::sort(places.begin(), places.end());
  return places;
}

Order ord_at(const Poly& p, const Place& place, int weighted_degree_bound) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "ord_at of 0");
  if (place.is_infinity()) {
    if (p.degree() > weighted_degree_bound) {
      throw Error(ErrorCode::BoundViolation, "degree " + std::to_string(p.degree()) +
                                                 " exceeds weighted bound " +
                                                 std::to_string(weighted_degree_bound));
    }
    return weighted_degree_bound - p.degree();
  }
  Order k = 0;
  Poly q = p;
  while (true) {
    auto [quot, rem] = divmod(q, place.minimal_poly());
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++k;
  }
  return k;
}

Order order_or_infinite(const Poly& p, const Place& place, int weighted_degree_bound) {
  return p.is_zero() ? kInfiniteOrder : ord_at(p, place, weighted_degree_bound);
}

}  // namespace arakelov
