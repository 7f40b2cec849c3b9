#include "arakelov/picard_fuchs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "arakelov/error.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;

// Double-precision Horner form of a rational function, built once per system.
struct NumPoly {
  std::vector<double> c;
  explicit NumPoly(const Poly& p) {
    for (const auto& r : p.coefficients()) c.push_back(r.to_double());
  }
  Complex operator()(Complex x) const {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

struct NumRat {
  NumPoly num, den;
  explicit NumRat(const RatFunc& f) : num(f.num()), den(f.den()) {}
  Complex operator()(Complex x) const { return num(x) / den(x); }
};

struct Connection {
  NumRat a11, a12, a21, a22;
  explicit Connection(const PFSystem& s) : a11(s.a11), a12(s.a12), a21(s.a21), a22(s.a22) {}
  Mat2c operator()(Complex t) const { return {{{a11(t), a12(t)}, {a21(t), a22(t)}}}; }
};

Mat2c scale(const Mat2c& m, Complex s) {
  Mat2c out = m;
  for (auto& row : out) {
    for (auto& x : row) x *= s;
  }
  return out;
}

Mat2c add(const Mat2c& a, const Mat2c& b) {
  Mat2c out = a;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] += b[i][j];
  }
  return out;
}

Complex det(const Mat2c& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

// Fundamental matrix of dPhi/ds = B(s) Phi on [0, 1], classical RK4.
template <class Generator>
Mat2c rk4(const Generator& B, int steps) {
  Mat2c phi = kIdentity2c;
  const double h = 1.0 / steps;
  for (int k = 0; k < steps; ++k) {
    const double s = k * h;
    const Mat2c b0 = B(s), bh = B(s + h / 2), b1 = B(s + h);
    const Mat2c k1 = multiply(b0, phi);
    const Mat2c k2 = multiply(bh, add(phi, scale(k1, h / 2)));
    const Mat2c k3 = multiply(bh, add(phi, scale(k2, h / 2)));
    const Mat2c k4 = multiply(b1, add(phi, scale(k3, h)));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        phi[i][j] += h / 6 * (k1[i][j] + 2.0 * k2[i][j] + 2.0 * k3[i][j] + k4[i][j]);
      }
    }
  }
  return phi;
}

struct Integrated {
  Mat2c matrix;
  double residual;
  int steps;
};

template <class Generator>
Integrated integrate_adaptive(const Generator& B, const TransportOptions& opt) {
  int n = std::max(opt.steps, 2);
  Mat2c half = rk4(B, n / 2);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    const Mat2c full = rk4(B, n);
    const double residual = std::max(max_abs_diff(full, half), std::abs(det(full) - 1.0));
    best = std::min(best, residual);
    if (residual <= opt.tolerance) return {full, residual, n};
    if (n * 2 > opt.max_steps) {
      throw Error(ErrorCode::NoConvergence,
                  "transport residual " + std::to_string(best) + " above tolerance " +
                      std::to_string(opt.tolerance) + " at " + std::to_string(n) + " steps");
    }
    half = full;
    n *= 2;
  }
}

void push_roots(PFSystem& sys, const std::vector<Place>& places, bool apparent) {
  for (std::size_t i = 0; i < places.size(); ++i) {
    for (const Complex z : isolate_roots(places[i].minimal_poly())) sys.roots.push_back({z, i, apparent});
  }
}

bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

long lgcd(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

void classify(TransportResult& r) {
  if (!r.lattice_monodromy || r.residual >= kClassifyThreshold ||
      r.integrality_defect >= kClassifyThreshold) {
    return;
  }
  const Mat2i& m = *r.lattice_monodromy;
  const long tr = m[0][0] + m[1][1];
  switch (tr) {
    case 2: {
      const long n = lgcd(lgcd(m[0][0] - 1, m[0][1]), lgcd(m[1][0], m[1][1] - 1));
      r.n_recovered = static_cast<int>(n);
      r.classified_type = n == 0 ? FiberType{FiberKind::I0, 0} : FiberType{FiberKind::In, static_cast<int>(n)};
      break;
    }
    case -2: {
      const long n = lgcd(lgcd(-m[0][0] - 1, m[0][1]), lgcd(m[1][0], -m[1][1] - 1));
      r.n_recovered = static_cast<int>(n);
      r.classified_type = n == 0 ? FiberType{FiberKind::I0star, 0}
                                 : FiberType{FiberKind::Instar, static_cast<int>(n)};
      break;
    }
    case 1: r.classified_type = FiberType{FiberKind::II, 0}; break;
    case 0: r.classified_type = FiberType{FiberKind::III, 0}; break;
    case -1: r.classified_type = FiberType{FiberKind::IV, 0}; break;
    default: break;
  }
}

// Express the transport in a period-lattice basis at the base point.
void attach_lattice(const PFSystem& sys, Complex base, TransportResult& r) {
  const Mat2c p = period_matrix(sys, base);
  if (std::abs(det(p)) < 1e-12) return;
  const Mat2c m = multiply(inverse(p), multiply(r.matrix, p));
  Mat2i rounded{};
  double defect = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double re = std::round(m[i][j].real());
      defect = std::max(defect, std::abs(m[i][j] - Complex(re)));
      rounded[i][j] = static_cast<long>(re);
    }
  }
  r.lattice_monodromy = rounded;
  r.integrality_defect = defect;
}

}  // namespace

Mat2c multiply(const Mat2c& a, const Mat2c& b) {
  Mat2c out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return out;
}

Mat2c inverse(const Mat2c& m) {
  const Complex d = det(m);
  return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

double max_abs_diff(const Mat2c& a, const Mat2c& b) {
  double out = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out = std::max(out, std::abs(a[i][j] - b[i][j]));
  }
  return out;
}

std::vector<Complex> isolate_roots(const Poly& p) {
  const int d = p.degree();
  if (d < 1) return {};
  const Poly m = p.monic();
  std::vector<Complex> roots;
  if (d == 1) {
    roots.push_back(-m.coeff(0).to_double());
  } else {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -m.coeff(i).to_double();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::RootIsolationFailure, "eigenvalue solver failed for " + p.to_string());
    }
    const NumPoly f(m), df(m.derivative());
    for (int i = 0; i < d; ++i) {
      Complex z = solver.eigenvalues()[i];
      for (int it = 0; it < 50; ++it) {
        const Complex dz = f(z) / df(z);
        z -= dz;
        if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z))) break;
      }
      roots.push_back(z);
    }
  }
  std::sort(roots.begin(), roots.end(), complex_less);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!std::isfinite(roots[i].real()) || !std::isfinite(roots[i].imag())) {
      throw Error(ErrorCode::RootIsolationFailure, "non-finite root of " + p.to_string());
    }
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < 1e-9 * (1.0 + std::abs(roots[i]))) {
        throw Error(ErrorCode::RootIsolationFailure, "roots of " + p.to_string() + " do not separate");
      }
    }
  }
  return roots;
}

PFSystem build_pf(const WeierstrassFamily& f, DiagonalForm diagonal) {
  PFSystem sys;
  sys.g2 = f.g2;
  sys.g3 = f.g3;
  sys.delta = f.delta;
  sys.diagonal = diagonal;
  sys.dee = Rational(3) * f.g3 * f.g2.derivative() - Rational(2) * f.g2 * f.g3.derivative();
  if (sys.dee.is_zero()) {
    throw Error(ErrorCode::IsotrivialFamily, "3 g3 g2' - 2 g2 g3' vanishes identically");
  }
  const Poly& log_of = diagonal == DiagonalForm::Discriminant ? sys.delta : sys.dee;
  const RatFunc L(log_of.derivative(), log_of);
  const RatFunc twelfth(Poly(Rational(1) / Rational(12)));
  sys.a11 = -(twelfth * L);
  sys.a22 = twelfth * L;
  sys.a12 = RatFunc(Rational(3) / Rational(2) * sys.dee, sys.delta);
  sys.a21 = RatFunc(Rational(-1) / Rational(8) * f.g2 * sys.dee, sys.delta);

  sys.singular_support = compatible_splitting({sys.delta});
  Poly off = sys.dee;
  for (Poly g = gcd(off, sys.delta); g.degree() > 0; g = gcd(off, sys.delta)) off = off / g;
  if (off.degree() > 0) sys.apparent_support = compatible_splitting({off});
  push_roots(sys, sys.singular_support, false);
  push_roots(sys, sys.apparent_support, true);
  return sys;
}

Mat2c period_matrix(const PFSystem& sys, Complex t0) {
  const Complex g2 = NumPoly(sys.g2)(t0);
  const Complex g3 = NumPoly(sys.g3)(t0);
  // roots of 4x^3 - g2 x - g3 via the companion matrix of x^3 - g2/4 x - g3/4
  Eigen::Matrix3cd c = Eigen::Matrix3cd::Zero();
  c(1, 0) = 1.0;
  c(2, 1) = 1.0;
  c(0, 2) = g3 / 4.0;
  c(1, 2) = g2 / 4.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(c, false);
  std::array<Complex, 3> e{solver.eigenvalues()[0], solver.eigenvalues()[1], solver.eigenvalues()[2]};
  for (auto& z : e) {
    for (int it = 0; it < 20; ++it) {
      const Complex f = 4.0 * z * z * z - g2 * z - g3;
      const Complex df = 12.0 * z * z - g2;
      if (std::abs(df) == 0.0) break;
      z -= f / df;
    }
  }
  std::sort(e.begin(), e.end(), complex_less);

  using boost::math::quadrature::gauss_kronrod;
  auto cycle = [&](Complex ei, Complex ej, Complex ek) {
    const Complex w0 = ek - (ei + ej) / 2.0;
    const Complex s0 = std::sqrt(w0);
    auto x_at = [&](double phi) { return ei + (ej - ei) * (1.0 - std::cos(phi)) / 2.0; };
    auto integrand = [&](double phi, bool with_x, bool imag) {
      const Complex x = x_at(phi);
      const Complex v = (with_x ? x : Complex(1.0)) / (s0 * std::sqrt((ek - x) / w0));
      return imag ? v.imag() : v.real();
    };
    auto part = [&](bool with_x, bool imag) {
      return gauss_kronrod<double, 31>::integrate([&](double phi) { return integrand(phi, with_x, imag); },
                                                  0.0, kPi, 15, 1e-13);
    };
    const Complex omega(part(false, false), part(false, true));
    const Complex eta(part(true, false), part(true, true));
    return std::array<Complex, 2>{omega, -eta};
  };
  const auto a = cycle(e[0], e[1], e[2]);
  const auto b = cycle(e[1], e[2], e[0]);
  return {{{a[0], b[0]}, {a[1], b[1]}}};
}

TransportResult transport(const PFSystem& sys, const Loop& loop, const TransportOptions& options) {
  if (!(loop.radius > 0.0)) throw Error(ErrorCode::InvalidData, "loop radius must be positive");
  for (const auto& root : sys.roots) {
    if (std::abs(std::abs(root.value - loop.center) - loop.radius) < loop.radius / 8) {
      throw Error(ErrorCode::SingularOnPath, "support root near the loop");
    }
  }
  TransportOptions opt = options;
  opt.steps = loop.steps > 0 ? loop.steps : options.steps;
  const Connection A(sys);
  const Complex c = loop.center;
  const double r = loop.radius;
  auto B = [&](double s) {
    const Complex e = std::polar(1.0, 2 * kPi * s);
    return scale(A(c + r * e), Complex(0, 2 * kPi) * r * e);
  };
  const Integrated out = integrate_adaptive(B, opt);
  TransportResult res;
  res.matrix = out.matrix;
  res.trace = out.matrix[0][0] + out.matrix[1][1];
  res.det = det(out.matrix);
  res.residual = out.residual;
  res.steps_used = out.steps;
  attach_lattice(sys, c + r, res);
  res.residual = std::max(res.residual, 0.0);
  classify(res);
  return res;
}

std::vector<MonodromyCheck> verify_monodromy(const WeierstrassFamily& input, double tolerance,
                                             const MonodromyOptions& options) {
  const WeierstrassFamily f = minimalize(input).first;
  if (f.j.is_constant()) return {};
  PFSystem sys = build_pf(f, options.diagonal);
  std::vector<MonodromyCheck> out;
  for (const auto& fiber : classify_fibers(f)) {
    if (fiber.place.is_infinity()) continue;
    const auto it = std::find_if(sys.roots.begin(), sys.roots.end(), [&](const SupportRoot& s) {
      return !s.apparent && sys.singular_support[s.place_index] == fiber.place;
    });
    if (it == sys.roots.end()) {
      throw Error(ErrorCode::RootIsolationFailure, "no numeric root for " + fiber.place.to_string());
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& s : sys.roots) {
      if (&s != &*it) nearest = std::min(nearest, std::abs(s.value - it->value));
    }
    MonodromyCheck check;
    check.place = fiber.place;
    check.predicted = fiber.type;
    check.root = it->value;
    check.loop = Loop{it->value, options.radius.value_or(std::min(1.0, nearest / 2)), options.transport.steps};
    check.result = transport(sys, check.loop, options.transport);
    const KodairaData data = kodaira_data(fiber.type);
    check.trace_err = std::abs(check.result.trace - Complex(static_cast<double>(data.trace)));
    check.ok = check.trace_err < tolerance;
    if (fiber.type.kind == FiberKind::In || fiber.type.kind == FiberKind::Instar) {
      check.ok = check.ok && check.result.n_recovered == fiber.type.n;
    }
    out.push_back(std::move(check));
  }
  return out;
}

GlobalRelation global_monodromy_relation(const PFSystem& sys, const TransportOptions& options) {
  const Connection A(sys);
  std::vector<Complex> roots;
  for (const auto& s : sys.roots) roots.push_back(s.value);
  GlobalRelation out;
  if (roots.empty()) {
    out.product = out.large_circle = kIdentity2c;
    return out;
  }
  Complex center = 0.0;
  for (const Complex z : roots) center += z;
  center /= static_cast<double>(roots.size());
  double spread = 0.0;
  for (const Complex z : roots) spread = std::max(spread, std::abs(z - center));
  const double big = 1.5 * spread + 1.0;

  std::vector<double> rho(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) nearest = std::min(nearest, std::abs(roots[i] - roots[j]));
    }
    rho[i] = std::min(1.0, nearest / 2);
  }

  // Smallest distance from another root to a segment, in units of that root's radius.
  auto clearance = [&](Complex a, Complex b, std::size_t skip) {
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == skip) continue;
      const Complex d = b - a;
      const double s = std::clamp(std::real((roots[j] - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
      c = std::min(c, std::abs(roots[j] - (a + s * d)) / rho[j]);
    }
    return c;
  };

  Complex base;
  double best = 0.0;
  for (int attempt = 0; attempt < 256 && best < 0.125; ++attempt) {
    const Complex candidate = center + std::polar(big, -kPi / 2 + 0.1234 + 0.0917 * attempt);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size() && worst > best; ++i) {
      const Complex u = (roots[i] - candidate) / std::abs(roots[i] - candidate);
      worst = std::min(worst, clearance(candidate, roots[i] - rho[i] * u, i));
    }
    if (worst > best) {
      best = worst;
      base = candidate;
    }
  }
  const bool found = best >= 1.0 / 64;
  if (!found) throw Error(ErrorCode::SingularOnPath, "no clear base point for the based loops");

  const Complex inward = center - base;
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::arg((roots[a] - base) / inward) < std::arg((roots[b] - base) / inward);
  });

  Mat2c product = kIdentity2c;
  for (const std::size_t i : order) {
    const Complex u = (roots[i] - base) / std::abs(roots[i] - base);
    const Complex p = roots[i] - rho[i] * u;
    auto seg = [&](double s) { return scale(A(base + (p - base) * s), p - base); };
    const Mat2c S = integrate_adaptive(seg, options).matrix;
    const Complex start = -u;
    auto circ = [&](double s) {
      const Complex e = start * std::polar(1.0, 2 * kPi * s);
      return scale(A(roots[i] + rho[i] * e), Complex(0, 2 * kPi) * rho[i] * e);
    };
    const Mat2c C = integrate_adaptive(circ, options).matrix;
    product = multiply(multiply(inverse(S), multiply(C, S)), product);
    ++out.loops;
  }
  const Complex start = (base - center) / big;
  auto large = [&](double s) {
    const Complex e = start * std::polar(1.0, 2 * kPi * s);
    return scale(A(center + big * e), Complex(0, 2 * kPi) * big * e);
  };
  out.large_circle = integrate_adaptive(large, options).matrix;
  out.product = product;
  out.defect = max_abs_diff(multiply(inverse(out.large_circle), product), kIdentity2c);
  return out;
}

}  // namespace arakelov
