#include "arakelov/weierstrass.hpp"

#include <algorithm>
#include <map>

#include "arakelov/error.hpp"

namespace arakelov {

namespace {

Poly discriminant(const Poly& g2, const Poly& g3) {
  return g2.pow(3) - Rational(27) * g3.pow(2);
}

WeierstrassFamily assemble(Poly g2, Poly g3, int level) {
  WeierstrassFamily f;
  f.delta = discriminant(g2, g3);
  f.j = RatFunc(g2.pow(3), f.delta);
  f.g2 = std::move(g2);
  f.g3 = std::move(g3);
  f.level = level;
  return f;
}

std::vector<Poly> nonzero(std::initializer_list<const Poly*> ps) {
  std::vector<Poly> out;
  for (const Poly* p : ps) {
    if (!p->is_zero()) out.push_back(*p);
  }
  return out;
}

bool fits(const Poly& p, int bound) { return p.is_zero() || p.degree() <= bound; }

}  // namespace

std::array<Order, 3> WeierstrassFamily::orders_at(const Place& place) const {
  return {order_or_infinite(g2, place, 4 * level), order_or_infinite(g3, place, 6 * level),
          order_or_infinite(delta, place, 12 * level)};
}

WeierstrassFamily build_family(const Poly& g2, const Poly& g3, int level) {
  if (level < 1) throw Error(ErrorCode::DegreeBound, "level must be positive");
  if (!fits(g2, 4 * level)) {
    throw Error(ErrorCode::DegreeBound, "deg g2 = " + std::to_string(g2.degree()) + " > " +
                                            std::to_string(4 * level));
  }
  if (!fits(g3, 6 * level)) {
    throw Error(ErrorCode::DegreeBound, "deg g3 = " + std::to_string(g3.degree()) + " > " +
                                            std::to_string(6 * level));
  }
  if (discriminant(g2, g3).is_zero()) {
    throw Error(ErrorCode::DegenerateFamily, "g2^3 - 27 g3^2 vanishes identically");
  }
  return assemble(g2, g3, level);
}

std::pair<WeierstrassFamily, std::vector<Reduction>> minimalize(const WeierstrassFamily& input) {
  WeierstrassFamily f = input;
  std::map<Poly, int, std::less<>> finite_counts;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const auto& place : compatible_splitting(nonzero({&f.g2, &f.g3, &f.delta}))) {
      const auto ord = f.orders_at(place);
      if (ord[0] < 4 || ord[1] < 6) continue;
      const Poly& u = place.minimal_poly();
      Poly g2 = f.g2.is_zero() ? Poly() : f.g2 / u.pow(4);
      Poly g3 = f.g3.is_zero() ? Poly() : f.g3 / u.pow(6);
      f = assemble(std::move(g2), std::move(g3), f.level - u.degree());
      ++finite_counts[u];
      reduced = true;
      break;
    }
  }
  int at_infinity = 0;
  while (f.level > 0 && fits(f.g2, 4 * (f.level - 1)) && fits(f.g3, 6 * (f.level - 1))) {
    --f.level;
    ++at_infinity;
  }
  std::vector<Reduction> reductions;
  for (const auto& [u, count] : finite_counts) reductions.push_back({Place::finite(u), count});
  if (at_infinity > 0) reductions.push_back({Place::infinity(), at_infinity});
  return {std::move(f), std::move(reductions)};
}

namespace {

KodairaFiber make_fiber(const Place& place, const std::array<Order, 3>& ord) {
  KodairaFiber fiber;
  fiber.place = place;
  fiber.type = classify_orders(ord[0], ord[1], ord[2]);
  fiber.ord_g2 = ord[0];
  fiber.ord_g3 = ord[1];
  fiber.ord_delta = ord[2];
  const KodairaData data = kodaira_data(fiber.type);
  fiber.euler = data.euler;
  fiber.monodromy = data.monodromy;
  fiber.monodromy_log = data.monodromy_log;
  return fiber;
}

}  // namespace

std::vector<KodairaFiber> classify_fibers(const WeierstrassFamily& f) {
  std::vector<KodairaFiber> fibers;
  for (const auto& place : compatible_splitting(nonzero({&f.g2, &f.g3, &f.delta}))) {
    const auto ord = f.orders_at(place);
    if (ord[2] > 0) fibers.push_back(make_fiber(place, ord));
  }
  const Place inf = Place::infinity();
  const auto ord = f.orders_at(inf);
  if (ord[2] > 0) fibers.push_back(make_fiber(inf, ord));
  return fibers;
}

SurfaceReport surface_report(const WeierstrassFamily& f) {
  SurfaceReport r;
  r.fibers = classify_fibers(f);
  r.level = f.level;
  long weighted_delta = 0;
  long multiplicative = 0;
  for (const auto& fiber : r.fibers) {
    const int deg = fiber.place.degree();
    weighted_delta += static_cast<long>(fiber.ord_delta) * deg;
    r.euler_total += fiber.euler * deg;
    r.n_singular += deg;
    if (fiber.type.kind == FiberKind::In || fiber.type.kind == FiberKind::Instar) {
      multiplicative += static_cast<long>(fiber.type.n) * deg;
    }
    if (!fiber.type.multiplicative()) r.semistable = false;
  }
  r.delta_degree = Rational(weighted_delta) / Rational(12);
  r.isotrivial = f.j.is_constant();
  r.deg_j = f.j.map_degree();
  r.arakelov_bound_ok = r.isotrivial || r.n_singular >= 3;

  if (weighted_delta != 12L * f.level) {
    throw Error(ErrorCode::AuditFailure, "sum ord Delta = " + std::to_string(weighted_delta) +
                                             " but 12 level = " + std::to_string(12 * f.level));
  }
  if (Rational(r.euler_total) != Rational(12) * r.delta_degree) {
    throw Error(ErrorCode::AuditFailure, "euler_total != 12 delta");
  }
  if (r.deg_j != multiplicative) {
    throw Error(ErrorCode::AuditFailure, "deg J = " + std::to_string(r.deg_j) +
                                             " but multiplicative fibers sum to " +
                                             std::to_string(multiplicative));
  }
  return r;
}

FiberCountResiduals fiber_count_residuals(const SurfaceReport& r) {
  const Rational n(r.n_singular);
  return {n - Rational(2) * r.delta_degree - Rational(1),
          n - Rational(2) * r.delta_degree - Rational(2), r.delta_degree, r.deg_j};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> fiber_multiset(const SurfaceReport& r) {
  std::vector<std::string> names;
  for (const auto& fiber : r.fibers) {
    for (int i = 0; i < fiber.place.degree(); ++i) names.push_back(fiber.type.name());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

K3SliceReports k3_slice_reports(const BiPoly& G2, const BiPoly& G3, int level,
                                const std::vector<Rational>& t_samples) {
  K3SliceReports out;
  for (const auto& t0 : t_samples) {
    SliceOutcome slice{t0, std::nullopt, std::nullopt};
    try {
      const auto family = build_family(specialize(G2, t0), specialize(G3, t0), level);
      slice.report = surface_report(minimalize(family).first);
    } catch (const Error& e) {
      slice.error = e.what();
    }
    out.slices.push_back(std::move(slice));
  }

  using Key = std::tuple<Rational, int, std::vector<std::string>>;
  std::vector<std::pair<Key, std::size_t>> tally;  // key -> first slice index
  std::vector<int> counts;
  for (std::size_t i = 0; i < out.slices.size(); ++i) {
    const auto& rep = out.slices[i].report;
    if (!rep) continue;
    Key key{rep->delta_degree, rep->deg_j, fiber_multiset(*rep)};
    auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& e) { return e.first == key; });
    if (it == tally.end()) {
      tally.emplace_back(std::move(key), i);
      counts.push_back(1);
    } else {
      ++counts[static_cast<std::size_t>(it - tally.begin())];
    }
  }
  if (tally.empty()) {
    throw Error(ErrorCode::AllSlicesDegenerate, "every sampled slice is degenerate");
  }
  const auto best = std::max_element(counts.begin(), counts.end());
  if (std::count(counts.begin(), counts.end(), *best) > 1) return out;

  const auto& [key, index] = tally[static_cast<std::size_t>(best - counts.begin())];
  const SurfaceReport& rep = *out.slices[index].report;
  out.generic = SliceProfile{std::get<0>(key), std::get<1>(key), rep.n_singular, std::get<2>(key),
                             *best, rep};
  return out;
}

}  // namespace arakelov
