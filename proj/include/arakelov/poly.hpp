#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "arakelov/rational.hpp"

namespace arakelov {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector is trimmed so the leading coefficient is nonzero;
/// the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coefficients);

  static Poly monomial(const Rational& c, int degree);
  /// The indeterminate itself.
  static Poly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned exponent) const;

  Rational evaluate(const Rational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  /// Human-readable form, highest degree first, e.g. "t^3 - 27".
  std::string to_string(char var = 't') const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Deterministic total order: by degree, then coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// True when b divides a exactly.
bool divides(const Poly& b, const Poly& a);

/// Rational function num/den kept in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Degree of the induced map P^1 -> P^1: max(deg num, deg den), 0 for constants.
  int map_degree() const;

  RatFunc derivative() const;
  std::complex<double> evaluate(std::complex<double> x) const;
  std::string to_string(char var = 't') const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

/// Polynomial in s whose coefficients are polynomials in t, lowest s-degree
/// first; trailing zero coefficients are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(Poly in_t);  // NOLINT(google-explicit-constructor)
  explicit BiPoly(std::vector<Poly> s_coefficients);

  static BiPoly s_variable();
  static BiPoly t_variable() { return BiPoly(Poly::variable()); }

  const std::vector<Poly>& coefficients() const { return coeffs_; }
  int s_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int t_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// True when no power of s appears.
  bool is_univariate_t() const { return coeffs_.size() <= 1; }
  /// The single t-coefficient; only valid when is_univariate_t().
  Poly as_poly_t() const;
  /// Reinterpret as a polynomial in s; only valid when every coefficient is constant.
  bool is_univariate_s() const;
  Poly as_poly_s() const;

  std::string to_string() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }
  BiPoly pow(unsigned exponent) const;

 private:
  void trim();

  std::vector<Poly> coeffs_;
};

/// Substitute t = t0 in every coefficient, leaving a polynomial in s.
Poly specialize(const BiPoly& b, const Rational& t0);

}  // namespace arakelov
