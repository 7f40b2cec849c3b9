#include "arakelov/formulas.hpp"

#include "arakelov/error.hpp"

namespace arakelov {

namespace {

Rational sum_nu(const std::vector<LabeledCount>& nu) {
  Rational s;
  for (const auto& [label, v] : nu) {
    if (v < 0) throw Error(ErrorCode::InvalidData, "nu at " + label + " is negative");
    s += Rational(v);
  }
  return s;
}

Rational sum(const std::vector<long>& xs) {
  Rational s;
  for (const long x : xs) s += Rational(x);
  return s;
}

void nonnegative(long v, const char* name) {
  if (v < 0) throw Error(ErrorCode::InvalidData, std::string(name) + " must be nonnegative");
}

void validate(const WeightOneData& d) {
  nonnegative(d.h10, "h10");
  nonnegative(d.h10_0, "h10_0");
  nonnegative(d.genus, "genus");
  nonnegative(d.n_degen, "n_degen");
  if (d.h10_0 > d.h10) {
    throw Error(ErrorCode::RankOrder, "h10_0 = " + std::to_string(d.h10_0) + " exceeds h10 = " +
                                          std::to_string(d.h10));
  }
}

void validate(const WeightTwoData& d) {
  nonnegative(d.h20, "h20");
  nonnegative(d.h11, "h11");
  nonnegative(d.h20_0, "h20_0");
  nonnegative(d.genus, "genus");
  nonnegative(d.n_degen, "n_degen");
  if (d.h20_0 > d.h20) throw Error(ErrorCode::RankOrder, "h20_0 exceeds h20");
  if (d.h02 != d.h20) throw Error(ErrorCode::InvalidData, "h02 must equal h20");
}

Rational canonical(long genus) { return Rational(2 * genus - 2); }

}  // namespace

Rational delta_weight1(const WeightOneData& d) {
  validate(d);
  const Rational half(Rational(1) / Rational(2));
  return half * Rational(d.h10 - d.h10_0) * canonical(d.genus) + d.delta0 - half * sum_nu(d.nu);
}

Rational delta_weight1_degenerate(const WeightOneData& d) {
  validate(d);
  const auto n = static_cast<std::size_t>(d.n_degen);
  if (d.im_nbar_dims.size() != n || d.nu_a.size() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "im_nbar_dims and nu_a must have n_degen = " + std::to_string(n) + " entries");
  }
  for (const long im : d.im_nbar_dims) {
    if (im < 0 || im > d.h10 - d.h10_0) {
      throw Error(ErrorCode::InvalidData, "dim Im N must lie in [0, h10 - h10_0]");
    }
  }
  for (const long v : d.nu_a) nonnegative(v, "nu_a");
  const Rational half(Rational(1) / Rational(2));
  const Rational first = half * (Rational(d.h10 - d.h10_0) * canonical(d.genus) + sum(d.im_nbar_dims));
  const Rational bracket = -d.delta0 + half * (sum_nu(d.nu) + sum(d.nu_a));
  return first - bracket;
}

Rational delta_weight2(const WeightTwoData& d, bool degenerate) {
  validate(d);
  const Rational rank(d.h20 - d.h20_0);
  if (!degenerate) return rank * canonical(d.genus) - (d.delta_zero_term + sum_nu(d.nu));
  if (d.lmhs_corrections.size() != static_cast<std::size_t>(d.n_degen)) {
    throw Error(ErrorCode::LengthMismatch, "lmhs_corrections must have n_degen entries");
  }
  return rank * (canonical(d.genus) + Rational(d.n_degen)) +
         (d.delta_zero_term + sum_nu(d.nu) + sum(d.lmhs_corrections));
}

ArakelovBound arakelov_inequality(const Rational& deg_hn0, long rank_hn0, long weight_n, long genus,
                                  long n_marked, bool higgs_maximal) {
  ArakelovBound out;
  out.bound = Rational(weight_n) / Rational(2) * Rational(rank_hn0) *
              (canonical(genus) + Rational(n_marked));
  out.ok = deg_hn0 <= out.bound;
  out.tight = deg_hn0 == out.bound;
  if (higgs_maximal && !out.tight) {
    throw Error(ErrorCode::MaximalityViolation, "maximal Higgs field but deg = " + deg_hn0.to_string() +
                                                    " misses the bound " + out.bound.to_string());
  }
  return out;
}

std::vector<ConstraintCheck> fujita_check(const FujitaData& d) {
  std::vector<ConstraintCheck> out;
  const long u = d.rank_uprime + d.q_f;
  out.push_back({"u_f <= h0^{n,0}", u <= d.h_n0_0, Rational(d.h_n0_0 - u)});
  out.push_back({"deg A = deg H^{n,0}", d.deg_a == d.deg_hn0, d.deg_hn0 - d.deg_a});
  const long ranks = d.rank_a + d.rank_uprime + d.q_f;
  out.push_back({"rank A + rank U' + q_f = h^{n,0}", ranks == d.h_n0, Rational(d.h_n0 - ranks)});
  const ArakelovBound b = arakelov_inequality(d.deg_hn0, d.h_n0, d.weight_n, d.genus, d.n_marked, false);
  out.push_back({"Arakelov inequality", b.ok && (!d.higgs_maximal || b.tight), b.bound - d.deg_hn0});
  return out;
}

Rational local_system_euler(long h0v, long h1v, const Rational& delta0v, const Rational& delta1v,
                            long /*genus*/, long nu_total) {
  return delta1v + Rational(h1v) - delta0v + Rational(h0v) - Rational(nu_total);
}

Rational graded_h1(long p, const std::map<long, Rational>& deltas, const std::map<long, long>& hs,
                   long genus, long nu_total) {
  auto delta = [&](long k) {
    const auto it = deltas.find(k);
    return it == deltas.end() ? Rational() : it->second;
  };
  auto h = [&](long k) {
    const auto it = hs.find(k);
    return Rational(it == hs.end() ? 0 : it->second);
  };
  return -delta(p) - (h(p) - h(p - 1)) * canonical(genus) + delta(p - 1) + Rational(nu_total);
}

EulerComparison compare_local_system_euler(long h0v, long h1v, const Rational& delta0v,
                                           const Rational& delta1v, long genus, long nu_total) {
  EulerComparison c;
  c.printed = local_system_euler(h0v, h1v, delta0v, delta1v, genus, nu_total);
  const std::map<long, Rational> deltas{{0, delta0v}, {1, delta1v}};
  const std::map<long, long> hs{{0, h0v}, {1, h1v}};
  Rational total;
  for (long p = 0; p <= 2; ++p) total += graded_h1(p, deltas, hs, genus, nu_total);
  c.from_gradeds = -total;
  c.discrepancy = c.printed - c.from_gradeds;
  return c;
}

}  // namespace arakelov
