#pragma once

#include <limits>
#include <string>
#include <vector>

#include "arakelov/poly.hpp"

namespace arakelov {

/// Vanishing order. The zero polynomial vanishes to infinite order.
using Order = int;
inline constexpr Order kInfiniteOrder = std::numeric_limits<int>::max();

/// A Galois-stable bundle of points of P^1 over Q: either the roots of a monic
/// squarefree polynomial, or the point at infinity. Points are counted with
/// `degree()` as their weight.
class Place {
 public:
  enum class Kind { Finite, Infinity };

  /// The point at infinity.
  Place() = default;
  static Place infinity() { return Place(); }
  /// `minimal_poly` must be nonconstant; it is made monic. Squarefreeness is
  /// the caller's responsibility (compatible_splitting guarantees it).
  static Place finite(const Poly& minimal_poly);

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  const Poly& minimal_poly() const { return minimal_poly_; }
  int degree() const { return is_infinity() ? 1 : minimal_poly_.degree(); }

  /// "inf" or the minimal polynomial written in `var`.
  std::string to_string(char var = 't') const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.kind_ == b.kind_ && a.minimal_poly_ == b.minimal_poly_;
  }
  /// Finite places first, ordered by minimal polynomial; infinity last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  Kind kind_ = Kind::Infinity;
  Poly minimal_poly_;
};

struct SquarefreeFactor {
  Poly factor;
  int multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime; the
/// product of factor^multiplicity equals p up to a nonzero constant.
std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p);

/// gcd-refined coprime base of the squarefree parts of `ps`: every root of
/// every input lies in exactly one returned place and each input has the same
/// multiplicity at all roots of a place. Sorted by minimal polynomial.
std::vector<Place> compatible_splitting(const std::vector<Poly>& ps);

/// Finite: largest k with minimal_poly^k | p. Infinity: bound - deg p.
/// Throws ZeroPolynomial for p = 0 and BoundViolation when deg p > bound.
Order ord_at(const Poly& p, const Place& place, int weighted_degree_bound);

/// Like ord_at but returns kInfiniteOrder for the zero polynomial.
Order order_or_infinite(const Poly& p, const Place& place, int weighted_degree_bound);

}  // namespace arakelov
