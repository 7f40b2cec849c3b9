#include "arakelov/kodaira.hpp"

#include "arakelov/error.hpp"

namespace arakelov {

std::string FiberType::name() const {
  switch (kind) {
    case FiberKind::I0: return "I0";
    case FiberKind::In: return "I" + std::to_string(n);
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::I0star: return "I0*";
    case FiberKind::Instar: return "I" + std::to_string(n) + "*";
    case FiberKind::IVstar: return "IV*";
    case FiberKind::IIIstar: return "III*";
    case FiberKind::IIstar: return "II*";
  }
  return "?";
}

namespace {

std::string triple(Order a, Order b, Order c) {
  auto s = [](Order o) { return o == kInfiniteOrder ? std::string("inf") : std::to_string(o); };
  return "(" + s(a) + ", " + s(b) + ", " + s(c) + ")";
}

}  // namespace

FiberType classify_orders(Order g2, Order g3, Order d) {
  auto reject = [&]() -> FiberType {
    throw Error(ErrorCode::UnclassifiableOrders, "no Kodaira row for orders " + triple(g2, g3, d));
  };
  if (d == kInfiniteOrder) return reject();
  if (d == 0) return {FiberKind::I0, 0};
  if (g2 == 0 && g3 == 0) return {FiberKind::In, d};
  // ord Delta discriminates the additive types; the g2/g3 conditions are then
  // checked against the row.
  switch (d) {
    case 2:
      if (g2 >= 1 && g3 == 1) return {FiberKind::II, 0};
      break;
    case 3:
      if (g2 == 1 && g3 >= 2) return {FiberKind::III, 0};
      break;
    case 4:
      if (g2 >= 2 && g3 == 2) return {FiberKind::IV, 0};
      break;
    case 6:
      if ((g2 == 2 && g3 >= 3) || (g2 >= 2 && g3 == 3)) return {FiberKind::I0star, 0};
      break;
    case 8:
      if (g2 >= 3 && g3 == 4) return {FiberKind::IVstar, 0};
      break;
    case 9:
      if (g2 == 3 && g3 >= 5) return {FiberKind::IIIstar, 0};
      break;
    case 10:
      if (g2 >= 4 && g3 == 5) return {FiberKind::IIstar, 0};
      break;
    default:
      break;
  }
  if (d > 6 && g2 == 2 && g3 == 3) return {FiberKind::Instar, d - 6};
  return reject();
}

KodairaData kodaira_data(const FiberType& type) {
  const long n = type.n;
  switch (type.kind) {
    case FiberKind::I0:
      return {0, kIdentity2, std::nullopt, 2, 1};
    case FiberKind::In:
      return {type.n, Mat2i{{{1, n}, {0, 1}}}, Mat2i{{{0, n}, {0, 0}}}, 2, 0};
    case FiberKind::II:
      return {2, Mat2i{{{1, 1}, {-1, 0}}}, std::nullopt, 1, 6};
    case FiberKind::III:
      return {3, Mat2i{{{0, 1}, {-1, 0}}}, std::nullopt, 0, 4};
    case FiberKind::IV:
      return {4, Mat2i{{{0, 1}, {-1, -1}}}, std::nullopt, -1, 3};
    case FiberKind::I0star:
      return {6, Mat2i{{{-1, 0}, {0, -1}}}, std::nullopt, -2, 2};
    case FiberKind::Instar:
      return {type.n + 6, Mat2i{{{-1, -n}, {0, -1}}}, Mat2i{{{0, n}, {0, 0}}}, -2, 0};
    case FiberKind::IVstar:
      return {8, Mat2i{{{-1, -1}, {1, 0}}}, std::nullopt, -1, 3};
    case FiberKind::IIIstar:
      return {9, Mat2i{{{0, -1}, {1, 0}}}, std::nullopt, 0, 4};
    case FiberKind::IIstar:
      return {10, Mat2i{{{0, -1}, {1, 1}}}, std::nullopt, 1, 6};
  }
  throw Error(ErrorCode::InvalidData, "unknown fiber kind");
}

Mat2i multiply(const Mat2i& a, const Mat2i& b) {
  Mat2i c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return c;
}

long determinant(const Mat2i& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace arakelov
