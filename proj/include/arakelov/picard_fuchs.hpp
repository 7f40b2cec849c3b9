#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "arakelov/kodaira.hpp"
#include "arakelov/weierstrass.hpp"

namespace arakelov {

using Complex = std::complex<double>;
using Mat2c = std::array<std::array<Complex, 2>, 2>;

/// Which logarithmic derivative sits on the diagonal of the connection.
///
/// Verbatim uses d log(dee)/dt with dee = 3 g3 g2' - 2 g2 g3', exactly as the
/// connection is usually printed for this family. Discriminant uses
/// d log(Delta)/dt, which is what the period integrals of dx/y and x dx/y
/// actually satisfy; with Verbatim the residue at a simple zero of Delta has
/// eigenvalues +-1/12 and the local monodromy is not unipotent.
enum class DiagonalForm { Discriminant, Verbatim };

struct SupportRoot {
  Complex value;
  std::size_t place_index;  // into singular_support or apparent_support
  bool apparent;
};

/// d/dt (omega, eta)^T = A(t) (omega, eta)^T with
///   A = [[-(1/12) L, 3 dee / (2 Delta)], [-g2 dee / (8 Delta), (1/12) L]],
/// L the diagonal logarithmic derivative selected by `diagonal`.
struct PFSystem {
  RatFunc a11, a12, a21, a22;
  Poly dee;
  Poly g2, g3, delta;
  DiagonalForm diagonal = DiagonalForm::Discriminant;
  std::vector<Place> singular_support;  // zeros of Delta
  std::vector<Place> apparent_support;  // zeros of dee away from Delta
  std::vector<SupportRoot> roots;       // numeric roots of both supports
};

/// Throws IsotrivialFamily when dee vanishes identically.
PFSystem build_pf(const WeierstrassFamily& f, DiagonalForm diagonal = DiagonalForm::Discriminant);

/// Numeric roots of a squarefree polynomial: companion-matrix eigenvalues
/// polished by Newton. Throws RootIsolationFailure when they do not separate.
std::vector<Complex> isolate_roots(const Poly& p);

/// Circle |t - center| = radius traversed counterclockwise from center + radius.
struct Loop {
  Complex center;
  double radius = 1.0;
  int steps = 4096;
};

struct TransportOptions {
  double tolerance = 1e-6;
  int steps = 4096;
  /// Step doubling stops here and reports NoConvergence.
  int max_steps = 4096 * 64;
};

struct TransportResult {
  Mat2c matrix{};  // fundamental-solution transport in the (omega, eta) frame
  Complex trace;
  Complex det;
  /// Representative of the trace class; II, III and IV also stand for the
  /// starred type with the same trace. Present only when the residual and
  /// the lattice integrality defect are below the classification threshold.
  std::optional<FiberType> classified_type;
  std::optional<int> n_recovered;
  double residual = 0.0;  // max(|T_N - T_{N/2}|, |det - 1|)
  int steps_used = 0;
  /// Matrix in a basis of the period lattice at the base point, rounded.
  std::optional<Mat2i> lattice_monodromy;
  double integrality_defect = 0.0;
};

inline constexpr double kClassifyThreshold = 1e-3;

/// Integrates the connection around `loop`, doubling the step count until the
/// residual reaches `options.tolerance`. Throws SingularOnPath when a support
/// root lies within radius/8 of the circle and NoConvergence when doubling up
/// to options.max_steps fails.
TransportResult transport(const PFSystem& sys, const Loop& loop,
                          const TransportOptions& options = {});

/// Period matrix at t0: columns are (omega, -eta) over two cycles forming a
/// basis of H_1 of the fiber, which solve the connection as built (the sign on
/// eta matches the printed off-diagonal signs).
Mat2c period_matrix(const PFSystem& sys, Complex t0);

struct MonodromyCheck {
  Place place;
  FiberType predicted;
  double trace_err = 0.0;
  bool ok = false;
  Complex root;
  Loop loop;
  TransportResult result;
};

struct MonodromyOptions {
  TransportOptions transport;
  DiagonalForm diagonal = DiagonalForm::Discriminant;
  std::optional<double> radius;  // overrides the default loop radius
};

/// Transports around one numeric root of every finite singular place and
/// compares trace, unipotency and n against the Kodaira table. Empty for
/// isotrivial families.
std::vector<MonodromyCheck> verify_monodromy(const WeierstrassFamily& f, double tolerance,
                                             const MonodromyOptions& options = {});

/// Based loops around every support root, composed in counterclockwise order
/// as seen from a base point on a large circle, against the large circle.
struct GlobalRelation {
  Mat2c product{};
  Mat2c large_circle{};
  double defect = 0.0;  // max |large_circle^{-1} product - I|
  int loops = 0;
};
GlobalRelation global_monodromy_relation(const PFSystem& sys, const TransportOptions& options = {});

Mat2c multiply(const Mat2c& a, const Mat2c& b);
Mat2c inverse(const Mat2c& m);
double max_abs_diff(const Mat2c& a, const Mat2c& b);
inline const Mat2c kIdentity2c{{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}};

}  // namespace arakelov
