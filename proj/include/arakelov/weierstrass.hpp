#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arakelov/kodaira.hpp"
#include "arakelov/place.hpp"
#include "arakelov/poly.hpp"

namespace arakelov {

/// y^2 = 4x^3 - g2 x - g3 over P^1 at level n: deg g2 <= 4n, deg g3 <= 6n,
/// so the point at infinity carries orders (4n - deg g2, 6n - deg g3, 12n - deg Delta).
struct WeierstrassFamily {
  Poly g2;
  Poly g3;
  int level = 1;
  Poly delta;  // g2^3 - 27 g3^2
  RatFunc j;   // g2^3 / delta in lowest terms

  /// Orders (g2, g3, Delta) at a place; infinite for a zero coefficient.
  std::array<Order, 3> orders_at(const Place& place) const;
};

struct KodairaFiber {
  Place place;
  FiberType type;
  Order ord_g2 = 0;
  Order ord_g3 = 0;
  Order ord_delta = 0;
  int euler = 0;
  Mat2i monodromy = kIdentity2;
  std::optional<Mat2i> monodromy_log;
};

struct SurfaceReport {
  Rational delta_degree;  // (1/12) sum ord Delta * deg over all places
  int deg_j = 0;
  std::vector<KodairaFiber> fibers;
  int n_singular = 0;  // places with ord Delta > 0, counted with degree
  bool semistable = true;
  bool isotrivial = false;
  int euler_total = 0;
  int level = 0;
  /// Nonconstant J forces at least three singular fibers.
  bool arakelov_bound_ok = true;
};

/// Throws DegreeBound when deg g2 > 4 level or deg g3 > 6 level, and
/// DegenerateFamily when g2^3 - 27 g3^2 vanishes identically.
WeierstrassFamily build_family(const Poly& g2, const Poly& g3, int level);

struct Reduction {
  Place place;
  int count = 0;
};

/// Divides out u^4 | g2, u^6 | g3 at finite places (lowering the level by
/// deg u each time) and lowers the level while infinity has orders >= (4, 6).
std::pair<WeierstrassFamily, std::vector<Reduction>> minimalize(const WeierstrassFamily& f);

/// Singular fibers of a minimal family: finite places of the compatible
/// splitting of [g2, g3, Delta], then infinity.
std::vector<KodairaFiber> classify_fibers(const WeierstrassFamily& f);

/// Aggregates classify_fibers and audits sum ord Delta = 12 level,
/// euler_total = 12 delta and deg J = sum n deg over In and In* fibers.
/// An audit failure throws AuditFailure.
SurfaceReport surface_report(const WeierstrassFamily& f);

/// Residuals of the two readings of the singular-fiber count relation:
/// sum nu implied by N = 2 delta + 1 + sum nu (as printed) and by
/// N = 2 delta + 2 + sum nu (by substitution).
struct FiberCountResiduals {
  Rational implied_nu_plus1;
  Rational implied_nu_plus2;
  /// delta vs deg J; equal only under one normalization.
  Rational delta;
  int deg_j = 0;
};
FiberCountResiduals fiber_count_residuals(const SurfaceReport& r);

// ---------------------------------------------------------------------------
// Two-parameter families sliced at fixed t.

struct SliceOutcome {
  Rational t;
  std::optional<SurfaceReport> report;
  std::optional<std::string> error;  // set for degenerate slices
};

/// The majority (delta, deg J, fiber multiset) over nondegenerate slices.
struct SliceProfile {
  Rational delta;
  int deg_j = 0;
  int n_singular = 0;
  std::vector<std::string> fiber_multiset;  // sorted type names, weighted by degree
  int support = 0;                          // slices agreeing with the majority
  SurfaceReport representative;
};

struct K3SliceReports {
  std::vector<SliceOutcome> slices;
  /// Empty when the top count is tied between two profiles.
  std::optional<SliceProfile> generic;
};

/// Specializes G2, G3 at each sample t and runs build -> minimalize -> report
/// on the resulting family over the s-line. Degenerate slices are recorded,
/// not fatal; throws AllSlicesDegenerate when no slice survives.
K3SliceReports k3_slice_reports(const BiPoly& G2, const BiPoly& G3, int level,
                                const std::vector<Rational>& t_samples);

}  // namespace arakelov
