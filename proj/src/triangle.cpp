#include "arakelov/triangle.hpp"

#include <algorithm>
#include <map>

#include "arakelov/error.hpp"

namespace arakelov {

std::string to_string(SlotField f) {
  switch (f) {
    case SlotField::H10: return "h10";
    case SlotField::H10_0: return "h10_0";
    case SlotField::Delta: return "delta";
    case SlotField::Delta0: return "delta0";
    case SlotField::Nu: return "nu_total";
    case SlotField::U: return "u";
    case SlotField::Q: return "q";
    case SlotField::RankA: return "rank_a";
  }
  return "?";
}

std::string to_string(SlotId s) {
  switch (s) {
    case SlotId::F: return "f";
    case SlotId::G: return "g";
    case SlotId::HFix: return "h_fix";
    case SlotId::HVar: return "h_var";
    case SlotId::HFull: return "h_full";
  }
  return "?";
}

std::optional<Rational>& FibrationSlot::operator[](SlotField f) {
  return const_cast<std::optional<Rational>&>(std::as_const(*this)[f]);
}

const std::optional<Rational>& FibrationSlot::operator[](SlotField f) const {
  switch (f) {
    case SlotField::H10: return h10;
    case SlotField::H10_0: return h10_0;
    case SlotField::Delta: return delta;
    case SlotField::Delta0: return delta0;
    case SlotField::Nu: return nu_total;
    case SlotField::U: return u;
    case SlotField::Q: return q;
    case SlotField::RankA: return rank_a;
  }
  throw Error(ErrorCode::InvalidData, "unknown slot field");
}

FibrationSlot FibrationSlot::zero() {
  FibrationSlot s;
  for (const auto f : kSlotFields) s[f] = Rational(0);
  return s;
}

std::vector<std::string> slot_violations(const FibrationSlot& s) {
  std::vector<std::string> out;
  if (s.h10 && s.h10_0 && *s.h10_0 > *s.h10) out.push_back("h10_0 > h10");
  if (s.u && s.h10_0 && *s.u > *s.h10_0) out.push_back("u > h10_0");
  if (s.rank_a && s.u && s.h10 && *s.rank_a + *s.u != *s.h10) out.push_back("rank_a + u != h10");
  return out;
}

std::optional<FibrationSlot>& TriangleLedger::slot(SlotId id) {
  return const_cast<std::optional<FibrationSlot>&>(std::as_const(*this).slot(id));
}

const std::optional<FibrationSlot>& TriangleLedger::slot(SlotId id) const {
  switch (id) {
    case SlotId::F: return f;
    case SlotId::G: return g;
    case SlotId::HFix: return h_fix;
    case SlotId::HVar: return h_var;
    case SlotId::HFull: return h_full;
  }
  throw Error(ErrorCode::InvalidData, "unknown slot");
}

namespace {

bool is_count(SlotField f) { return f != SlotField::Delta && f != SlotField::Delta0; }

TriangleLedger complete(TriangleLedger l, bool reject_negative) {
  if (l.h_full && l.h_fix && !l.h_var) {
    FibrationSlot var;
    for (const auto f : kSlotFields) {
      if (!(*l.h_full)[f] || !(*l.h_fix)[f]) continue;
      const Rational d = *(*l.h_full)[f] - *(*l.h_fix)[f];
      if (reject_negative && is_count(f) && d.sign() < 0) {
        throw Error(ErrorCode::NegativeDifference,
                    "h_full." + to_string(f) + " - h_fix." + to_string(f) + " = " + d.to_string());
      }
      var[f] = d;
    }
    l.h_var = var;
  } else if (l.h_fix && l.h_var && !l.h_full) {
    FibrationSlot full;
    for (const auto f : kSlotFields) {
      if ((*l.h_fix)[f] && (*l.h_var)[f]) full[f] = *(*l.h_fix)[f] + *(*l.h_var)[f];
    }
    l.h_full = full;
  }
  return l;
}

struct Term {
  Rational coef;
  SlotId slot;
  SlotField field;
};

struct Identity {
  std::string name;
  std::vector<Term> lhs, rhs;
};

std::vector<Identity> identities() {
  auto additive = [](const char* name, SlotField x) {
    return Identity{name, {{1, SlotId::F, x}}, {{1, SlotId::G, x}, {1, SlotId::HFix, x}}};
  };
  auto var_form = [](const char* name, SlotField x) {
    return Identity{name, {{1, SlotId::F, x}},
                    {{1, SlotId::G, x}, {1, SlotId::HFull, x}, {-1, SlotId::HVar, x}}};
  };
  return {additive("h10 additivity", SlotField::H10),
          additive("h10_0 additivity", SlotField::H10_0),
          additive("delta0 additivity", SlotField::Delta0),
          additive("nu additivity", SlotField::Nu),
          additive("delta fixed form", SlotField::Delta),
          var_form("delta variable form", SlotField::Delta),
          additive("u fixed form", SlotField::U),
          var_form("u variable form", SlotField::U)};
}

void require(const TriangleLedger& l, SlotId id) {
  if (!l.slot(id)) throw Error(ErrorCode::MissingSlot, "slot " + to_string(id) + " is absent");
}

// Rewrites terms on a derived h-slot in terms of the slots actually supplied.
std::vector<Term> expand(const TriangleLedger& l, const Term& t) {
  if (t.slot == SlotId::HFull && !l.h_full) {
    require(l, SlotId::HFix);
    require(l, SlotId::HVar);
    return {{t.coef, SlotId::HFix, t.field}, {t.coef, SlotId::HVar, t.field}};
  }
  if (t.slot == SlotId::HVar && !l.h_var) {
    require(l, SlotId::HFull);
    require(l, SlotId::HFix);
    return {{t.coef, SlotId::HFull, t.field}, {-t.coef, SlotId::HFix, t.field}};
  }
  require(l, t.slot);
  return {t};
}

Rational evaluate(const TriangleLedger& l, const std::vector<Term>& side) {
  Rational total;
  for (const auto& term : side) {
    for (const auto& t : expand(l, term)) {
      const auto& v = (*l.slot(t.slot))[t.field];
      if (!v) {
        throw Error(ErrorCode::MissingSlot, to_string(t.slot) + "." + to_string(t.field) + " is unknown");
      }
      total += t.coef * *v;
    }
  }
  return total;
}

const Rational& need(const std::optional<Rational>& v, const std::string& what) {
  if (!v) throw Error(ErrorCode::MissingSlot, what + " is unknown");
  return *v;
}

}  // namespace

TriangleLedger complete_h_slots(TriangleLedger l) { return complete(std::move(l), true); }

std::vector<IdentityCheck> check_prop56(const TriangleLedger& l) {
  for (const auto id : {SlotId::F, SlotId::G, SlotId::HFix}) require(l, id);
  if (!l.h_var && !l.h_full) throw Error(ErrorCode::MissingSlot, "slots h_var and h_full are both absent");
  std::vector<IdentityCheck> out;
  for (const auto& id : identities()) {
    IdentityCheck c{id.name, evaluate(l, id.lhs), evaluate(l, id.rhs), false};
    c.ok = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConstraintCheck> check_fujita_ranks(const TriangleLedger& l, const FibrationSlot& h) {
  require(l, SlotId::F);
  require(l, SlotId::G);
  std::vector<ConstraintCheck> out;
  for (const auto& [name, field] : {std::pair{"rank A_f <= rank A_g + rank A_h", SlotField::RankA},
                                   std::pair{"u_f <= u_g + u_h", SlotField::U},
                                   std::pair{"q_f <= q_g + q_h", SlotField::Q}}) {
    const Rational lhs = need((*l.f)[field], "f." + to_string(field));
    const Rational rhs = need((*l.g)[field], "g." + to_string(field)) + need(h[field], "h_full." + to_string(field));
    out.push_back({name, lhs <= rhs, rhs - lhs});
  }
  return out;
}

Thm58Check check_thm58(const TriangleLedger& input, long genus) {
  const TriangleLedger l = complete(input, false);
  if (!l.weight2) throw Error(ErrorCode::MissingSlot, "weight2 data is absent");
  for (const auto id : {SlotId::F, SlotId::G, SlotId::HVar, SlotId::HFull}) require(l, id);
  const Rational delta20 = l.delta20 ? *l.delta20 : delta_weight2(*l.weight2, l.weight2->n_degen > 0);
  const Rational k(2 * genus - 2);
  Thm58Check c;
  c.lhs = delta20 + Rational(2) * (need(l.f->delta, "f.delta") -
                                   (need(l.g->delta, "g.delta") + need(l.h_full->delta, "h_full.delta")));
  c.rhs = Rational(l.weight2->h11 - l.weight2->h20) * k * k - need(l.h_var->h10, "h_var.h10") * k;
  c.residual = c.lhs - c.rhs;
  c.ok = c.residual.sign() >= 0;
  return c;
}

Thm513Check check_thm513(const TriangleLedger& input, long genus) {
  const TriangleLedger l = complete(input, false);
  if (!l.v_data) throw Error(ErrorCode::MissingSlot, "v_data is absent");
  require(l, SlotId::HFull);
  const VData& v = *l.v_data;
  Thm513Check c;
  c.delta20 = v.delta_v * v.rank_l10 + v.h10_v * v.deg_l10;
  const Rational h = need(l.h_full->h10, "h_full.h10");
  const Rational h0 = need(l.h_full->h10_0, "h_full.h10_0");
  c.bound = Rational(1) / Rational(2) * (h - h0) * Rational(2 * genus - 2) + h;
  c.ok_main = c.delta20 >= c.bound;
  c.ok_corollary = c.delta20 >= v.delta_v;
  return c;
}

std::string SolvedField::name() const { return to_string(slot) + "." + to_string(field); }

SolvedField solve_missing(const TriangleLedger& l) {
  for (const auto id : {SlotId::F, SlotId::G, SlotId::HFix}) require(l, id);
  if (!l.h_var && !l.h_full) throw Error(ErrorCode::MissingSlot, "slots h_var and h_full are both absent");

  using Key = std::pair<SlotId, SlotField>;
  std::vector<std::map<Key, Rational>> equations;  // sum coef * x = 0
  std::vector<Key> unknowns;
  for (const auto& id : identities()) {
    std::map<Key, Rational> eq;
    for (const auto& t : id.lhs) {
      for (const auto& e : expand(l, t)) eq[{e.slot, e.field}] += e.coef;
    }
    for (const auto& t : id.rhs) {
      for (const auto& e : expand(l, t)) eq[{e.slot, e.field}] -= e.coef;
    }
    std::erase_if(eq, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [key, coef] : eq) {
      if (!(*l.slot(key.first))[key.second] && std::find(unknowns.begin(), unknowns.end(), key) == unknowns.end()) {
        unknowns.push_back(key);
      }
    }
    equations.push_back(std::move(eq));
  }
  if (unknowns.empty()) throw Error(ErrorCode::Underdetermined, "no unknown field to solve for");
  if (unknowns.size() > 1) {
    std::string names;
    for (const auto& [s, f] : unknowns) names += (names.empty() ? "" : ", ") + to_string(s) + "." + to_string(f);
    throw Error(ErrorCode::Underdetermined, std::to_string(unknowns.size()) + " unknowns: " + names);
  }
  const Key x = unknowns.front();
  std::vector<Rational> values;
  for (const auto& eq : equations) {
    const auto it = eq.find(x);
    if (it == eq.end()) continue;
    Rational rest;
    for (const auto& [key, coef] : eq) {
      if (key != x) rest += coef * *(*l.slot(key.first))[key.second];
    }
    values.push_back(-rest / it->second);
  }
  if (values.empty()) {
    throw Error(ErrorCode::Underdetermined, "no identity mentions " + to_string(x.first) + "." + to_string(x.second));
  }
  for (const auto& v : values) {
    if (v != values.front()) {
      throw Error(ErrorCode::Overdetermined, to_string(x.first) + "." + to_string(x.second) + " = " +
                                                 values.front().to_string() + " and " + v.to_string());
    }
  }
  return {x.first, x.second, values.front()};
}

TriangleLedger ledger_from_k3(const K3SliceReports& profiles, long base_genus) {
  const bool any = std::any_of(profiles.slices.begin(), profiles.slices.end(),
                               [](const SliceOutcome& s) { return s.report.has_value(); });
  if (!any) throw Error(ErrorCode::AllSlicesDegenerate, "every sampled slice is degenerate");
  if (!profiles.generic) throw Error(ErrorCode::GenericAmbiguous, "slice profiles tie; no generic profile");
  const SliceProfile& p = *profiles.generic;

  TriangleLedger l;
  FibrationSlot fix;
  fix.h10 = Rational(1);
  fix.h10_0 = Rational(0);
  fix.delta = p.delta;
  fix.delta0 = Rational(0);
  fix.u = Rational(0);
  fix.q = Rational(0);
  fix.rank_a = Rational(1);
  const Rational nu = Rational(p.n_singular) - Rational(2) * p.delta - Rational(1);
  if (nu.sign() >= 0) {
    fix.nu_total = nu;
  } else {
    l.warnings.push_back("N - 2 delta - 1 = " + nu.to_string() + " is negative; h_fix.nu_total left unknown");
  }
  l.h_fix = fix;
  l.h_var = FibrationSlot::zero();
  l.h_full = complete_h_slots(l).h_full;

  WeightTwoData w;
  w.h20 = 1;
  w.h02 = 1;
  w.h11 = 20;
  w.h20_0 = 0;
  w.genus = base_genus;
  l.weight2 = w;
  l.delta20 = Rational(p.deg_j);
  return l;
}

}  // namespace arakelov
