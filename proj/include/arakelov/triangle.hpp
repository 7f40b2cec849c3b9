#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arakelov/formulas.hpp"
#include "arakelov/rational.hpp"
#include "arakelov/weierstrass.hpp"

namespace arakelov {

enum class SlotField { H10, H10_0, Delta, Delta0, Nu, U, Q, RankA };
inline constexpr std::array<SlotField, 8> kSlotFields{SlotField::H10,    SlotField::H10_0, SlotField::Delta,
                                                      SlotField::Delta0, SlotField::Nu,    SlotField::U,
                                                      SlotField::Q,      SlotField::RankA};
std::string to_string(SlotField f);  // "h10", "h10_0", "delta", "delta0", "nu_total", "u", "q", "rank_a"

/// Numeric shadow of one fibration. Absent fields are unknown.
struct FibrationSlot {
  std::optional<Rational> h10, h10_0, delta, delta0, nu_total, u, q, rank_a;

  std::optional<Rational>& operator[](SlotField f);
  const std::optional<Rational>& operator[](SlotField f) const;
  static FibrationSlot zero();
  friend bool operator==(const FibrationSlot&, const FibrationSlot&) = default;
};

/// Slot invariants (h10_0 <= h10, u <= h10_0, rank_a + u = h10) that fail on
/// the present fields, as readable strings.
std::vector<std::string> slot_violations(const FibrationSlot& s);

enum class SlotId { F, G, HFix, HVar, HFull };
std::string to_string(SlotId s);  // "f", "g", "h_fix", "h_var", "h_full"

struct VData {
  Rational h10_v;
  Rational delta_v;
  Rational rank_l10;
  Rational deg_l10;
};

struct TriangleLedger {
  std::optional<FibrationSlot> f, g, h_fix, h_var, h_full;
  std::optional<WeightTwoData> weight2;
  std::optional<Rational> delta20;  // computed from weight2 when absent
  std::optional<VData> v_data;
  std::vector<std::string> warnings;

  std::optional<FibrationSlot>& slot(SlotId id);
  const std::optional<FibrationSlot>& slot(SlotId id) const;
};

/// Fills h_var = h_full - h_fix or h_full = h_fix + h_var fieldwise when one
/// of the three is missing. Throws NegativeDifference when a count field of
/// h_full - h_fix is negative.
TriangleLedger complete_h_slots(TriangleLedger l);

struct IdentityCheck {
  std::string name;
  Rational lhs, rhs;
  bool ok = false;
};

/// The eight split identities: additivity of h10, h10_0, delta0, nu; delta in
/// fixed and variable form; u in fixed and variable form. h_full or h_var is
/// derived from the other two h-slots when absent. Throws MissingSlot.
std::vector<IdentityCheck> check_prop56(const TriangleLedger& l);

/// rank_a, u and q of f against g plus the full h-fibration; residual = rhs - lhs.
std::vector<ConstraintCheck> check_fujita_ranks(const TriangleLedger& l, const FibrationSlot& h_full);

struct Thm58Check {
  Rational lhs, rhs, residual;
  bool ok = false;
};
/// lhs = delta20 + 2(f.delta - (g.delta + h_full.delta)),
/// rhs = (h11 - h20)(2g - 2)^2 - h_var.h10 (2g - 2); residual reads as sum nu.
Thm58Check check_thm58(const TriangleLedger& l, long genus);

struct Thm513Check {
  Rational delta20, bound;
  bool ok_main = false;
  bool ok_corollary = false;
};
/// delta20 = delta_v rank_l10 + h10_v deg_l10 against
/// 1/2 (h_full.h10 - h_full.h10_0)(2g - 2) + h_full.h10 and against delta_v.
Thm513Check check_thm513(const TriangleLedger& l, long genus);

struct SolvedField {
  SlotId slot;
  SlotField field;
  Rational value;
  std::string name() const;  // e.g. "f.h10"
};
/// Solves the split identities for the single absent participant field.
/// Throws Underdetermined or Overdetermined.
SolvedField solve_missing(const TriangleLedger& l);

/// h_fix from the generic slice profile as (h10, h10_0, delta, delta0, nu) =
/// (1, 0, delta, 0, N - 2 delta - 1), h_var zero, f and g left unknown;
/// weight2 with h20 = 1, h11 = 20 and delta20 = deg J. Throws GenericAmbiguous
/// on a tied profile and AllSlicesDegenerate when no slice survived.
TriangleLedger ledger_from_k3(const K3SliceReports& profiles, long base_genus);

}  // namespace arakelov
