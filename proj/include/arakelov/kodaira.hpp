#pragma once

#include <array>
#include <optional>
#include <string>

#include "arakelov/place.hpp"

namespace arakelov {

using Mat2i = std::array<std::array<long, 2>, 2>;

enum class FiberKind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

/// Kodaira fiber type; `n` is only meaningful for In and Instar.
struct FiberType {
  FiberKind kind = FiberKind::I0;
  int n = 0;

  /// "I0", "I3", "II", "III", "IV", "I0*", "I2*", "IV*", "III*", "II*".
  std::string name() const;
  bool multiplicative() const { return kind == FiberKind::In; }

  friend bool operator==(const FiberType&, const FiberType&) = default;
};

/// Per-type data of the standard Kodaira table, in the canonical integral
/// basis (alpha, beta) where an In fiber acts by beta -> beta + n alpha.
struct KodairaData {
  int euler;
  Mat2i monodromy;
  /// Log of the unipotent part; present for In (n > 0) and In* (n > 0).
  std::optional<Mat2i> monodromy_log;
  long trace;
  /// Order of the monodromy, 0 when infinite.
  int order;
};

/// Classifies a minimal order triple. Infinite orders (zero g2 or g3) satisfy
/// every lower bound. Throws UnclassifiableOrders when no row matches.
FiberType classify_orders(Order ord_g2, Order ord_g3, Order ord_delta);

KodairaData kodaira_data(const FiberType& type);

Mat2i multiply(const Mat2i& a, const Mat2i& b);
long determinant(const Mat2i& m);
inline constexpr Mat2i kIdentity2{{{1, 0}, {0, 1}}};

}  // namespace arakelov
