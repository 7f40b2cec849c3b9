#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arakelov/rational.hpp"

namespace arakelov {

using LabeledCount = std::pair<std::string, long>;

struct WeightOneData {
  long h10 = 0;
  long h10_0 = 0;
  long genus = 0;
  Rational delta0;
  std::vector<LabeledCount> nu;
  long n_degen = 0;
  std::vector<long> im_nbar_dims;
  std::vector<long> nu_a;
};

struct WeightTwoData {
  long h20 = 0, h11 = 0, h02 = 0, h20_0 = 0;
  long genus = 0;
  Rational delta_zero_term;  // a0 + b0 + b1, taken as one opaque number
  std::vector<LabeledCount> nu;
  long n_degen = 0;
  std::vector<long> lmhs_corrections;
};

struct FujitaData {
  long rank_a = 0, rank_uprime = 0, q_f = 0;
  Rational deg_a;
  long h_n0 = 0, h_n0_0 = 0;
  Rational deg_hn0;
  long n_marked = 0;
  bool higgs_maximal = false;
  long genus = 0;
  long weight_n = 1;
};

/// 1/2 (h10 - h10_0)(2g - 2) + delta0 - 1/2 sum nu
Rational delta_weight1(const WeightOneData& d);

/// 1/2 [(h10 - h10_0)(2g - 2) + sum dim Im N_i] - [-delta0 + 1/2 (sum nu + sum nu_a)]
Rational delta_weight1_degenerate(const WeightOneData& d);

/// Nondegenerate: (h20 - h20_0)(2g - 2) - [delta(0) + sum nu].
/// Degenerate:    (h20 - h20_0)(2g - 2 + N) + [delta(0) + sum nu + sum corrections].
Rational delta_weight2(const WeightTwoData& d, bool degenerate);

struct ArakelovBound {
  Rational bound;
  bool ok = false;
  bool tight = false;
};

/// bound = (n/2) rank (2g - 2 + marked). Throws MaximalityViolation when
/// higgs_maximal is set and the bound is not attained.
ArakelovBound arakelov_inequality(const Rational& deg_hn0, long rank_hn0, long weight_n, long genus,
                                  long n_marked, bool higgs_maximal);

struct ConstraintCheck {
  std::string name;
  bool ok = false;
  Rational residual;
};

/// Never throws on violated constraints; they come back with ok = false.
std::vector<ConstraintCheck> fujita_check(const FujitaData& d);

/// delta1 + h1 - delta0 + h0 - nu, as printed.
Rational local_system_euler(long h0v, long h1v, const Rational& delta0v, const Rational& delta1v,
                            long genus, long nu_total);

/// -delta_p - (h_p - h_{p-1})(2g - 2) + delta_{p-1} + nu, missing keys read as 0.
Rational graded_h1(long p, const std::map<long, Rational>& deltas, const std::map<long, long>& hs,
                   long genus, long nu_total);

/// The printed Euler characteristic against -sum_{p=0..2} graded_h1(p) for the
/// same two-step data (chi = -h^1 when H^1 is the only cohomology).
struct EulerComparison {
  Rational printed;
  Rational from_gradeds;
  Rational discrepancy;  // printed - from_gradeds
};
EulerComparison compare_local_system_euler(long h0v, long h1v, const Rational& delta0v,
                                           const Rational& delta1v, long genus, long nu_total);

}  // namespace arakelov
