#include "arakelov/spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "arakelov/error.hpp"

namespace arakelov {

std::string to_string(SpecKind k) {
  switch (k) {
    case SpecKind::Weierstrass: return "weierstrass";
    case SpecKind::K3Slices: return "k3_slices";
    case SpecKind::LedgerOnly: return "ledger";
  }
  return "?";
}

namespace {

// Wraps a TOML table, remembers which keys were consumed and reports the rest.
class Table {
 public:
  Table(const toml::table& t, std::string source, std::string path)
      : t_(t), source_(std::move(source)), path_(std::move(path)) {}

  [[noreturn]] void fail(const toml::node* at, const std::string& msg) const {
    const auto& src = at ? at->source() : t_.source();
    throw Error(ErrorCode::SpecError, source_ + ":" + std::to_string(src.begin.line) + ":" +
                                          std::to_string(src.begin.column) + ": " + msg);
  }

  bool has(const std::string& key) const { return t_.contains(key); }

  const toml::node* node(const std::string& key) {
    used_.insert(key);
    return t_.get(key);
  }

  std::optional<std::string> string(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return std::nullopt;
    if (const auto* s = n->as_string()) return s->get();
    fail(n, where(key) + " must be a string");
  }

  std::optional<long> integer(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return std::nullopt;
    if (const auto* i = n->as_integer()) return static_cast<long>(i->get());
    fail(n, where(key) + " must be an integer");
  }

  std::optional<long> count(const std::string& key) {
    const auto v = integer(key);
    if (v && *v < 0) fail(node(key), where(key) + " must be nonnegative");
    return v;
  }

  std::optional<double> real(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return std::nullopt;
    if (const auto* f = n->as_floating_point()) return f->get();
    if (const auto* i = n->as_integer()) return static_cast<double>(i->get());
    fail(n, where(key) + " must be a number");
  }

  std::optional<bool> boolean(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return std::nullopt;
    if (const auto* b = n->as_boolean()) return b->get();
    fail(n, where(key) + " must be a boolean");
  }

  std::optional<Rational> rational(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return std::nullopt;
    return to_rational(n, where(key));
  }

  Rational to_rational(const toml::node* n, const std::string& what) const {
    if (const auto* i = n->as_integer()) return Rational(static_cast<long>(i->get()));
    if (const auto* s = n->as_string()) {
      try {
        return Rational::parse(s->get());
      } catch (const std::exception& e) {
        fail(n, what + ": " + e.what());
      }
    }
    fail(n, what + " must be an integer or a \"p/q\" string");
  }

  std::vector<Rational> rationals(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return {};
    const auto* arr = n->as_array();
    if (!arr) fail(n, where(key) + " must be an array");
    std::vector<Rational> out;
    for (const auto& item : *arr) out.push_back(to_rational(&item, where(key) + " entry"));
    return out;
  }

  std::vector<long> counts(const std::string& key) {
    std::vector<long> out;
    for (const auto& r : rationals(key)) {
      if (!r.is_integer() || r.sign() < 0) fail(node(key), where(key) + " entries must be nonnegative integers");
      out.push_back(r.to_long());
    }
    return out;
  }

  /// nu lists: an inline table {label = count, ...} or an array of counts.
  std::vector<LabeledCount> labeled(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return {};
    std::vector<LabeledCount> out;
    if (const auto* t = n->as_table()) {
      for (const auto& [k, v] : *t) {
        const auto* i = v.as_integer();
        if (!i || i->get() < 0) fail(&v, where(key) + "." + std::string(k.str()) + " must be a nonnegative integer");
        out.emplace_back(std::string(k.str()), static_cast<long>(i->get()));
      }
      return out;
    }
    const auto values = counts(key);
    for (std::size_t i = 0; i < values.size(); ++i) out.emplace_back("s" + std::to_string(i + 1), values[i]);
    return out;
  }

  std::optional<Table> table(const std::string& key) {
    const toml::node* n = node(key);
    if (!n) return std::nullopt;
    const auto* t = n->as_table();
    if (!t) fail(n, where(key) + " must be a table");
    return Table(*t, source_, where(key));
  }

  template <class T>
  T require(std::optional<T> v, const std::string& key) const {
    if (!v) fail(nullptr, where(key) + " is required");
    return *v;
  }

  void finish() const {
    for (const auto& [k, v] : t_) {
      if (!used_.count(std::string(k.str()))) fail(&v, "unknown key " + where(std::string(k.str())));
    }
  }

  void forbid(std::initializer_list<const char*> keys, const std::string& kind) {
    for (const char* k : keys) {
      if (has(k)) fail(t_.get(k), std::string(k) + " does not belong to a " + kind + " spec");
    }
  }

 private:
  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const toml::table& t_;
  std::string source_;
  std::string path_;
  std::set<std::string> used_;
};

FibrationSlot read_slot(Table t) {
  FibrationSlot s;
  for (const auto f : kSlotFields) s[f] = t.rational(to_string(f));
  t.finish();
  return s;
}

WeightOneData read_weight1(Table t) {
  WeightOneData d;
  d.h10 = t.require(t.count("h10"), "h10");
  d.h10_0 = t.count("h10_0").value_or(0);
  d.genus = t.count("genus").value_or(0);
  d.delta0 = t.rational("delta0").value_or(Rational());
  d.nu = t.labeled("nu");
  d.im_nbar_dims = t.counts("im_nbar_dims");
  d.nu_a = t.counts("nu_a");
  d.n_degen = t.count("n_degen").value_or(static_cast<long>(d.im_nbar_dims.size()));
  t.finish();
  return d;
}

WeightTwoData read_weight2(Table t, bool* degenerate) {
  WeightTwoData d;
  d.h20 = t.require(t.count("h20"), "h20");
  d.h11 = t.count("h11").value_or(0);
  d.h02 = t.count("h02").value_or(d.h20);
  d.h20_0 = t.count("h20_0").value_or(0);
  d.genus = t.count("genus").value_or(0);
  d.delta_zero_term = t.rational("delta_zero_term").value_or(Rational());
  d.nu = t.labeled("nu");
  d.lmhs_corrections.clear();
  for (const auto& r : t.rationals("lmhs_corrections")) {
    if (!r.is_integer()) t.fail(t.node("lmhs_corrections"), "lmhs_corrections entries must be integers");
    d.lmhs_corrections.push_back(r.to_long());
  }
  d.n_degen = t.count("n_degen").value_or(static_cast<long>(d.lmhs_corrections.size()));
  const auto deg = t.boolean("degenerate");
  if (degenerate) *degenerate = deg.value_or(d.n_degen > 0);
  t.finish();
  return d;
}

TriangleLedger read_ledger(Table t, long* genus) {
  TriangleLedger l;
  for (const auto id : {SlotId::F, SlotId::G, SlotId::HFix, SlotId::HVar, SlotId::HFull}) {
    if (auto sub = t.table(to_string(id))) l.slot(id) = read_slot(*sub);
  }
  if (auto w = t.table("weight2")) l.weight2 = read_weight2(*w, nullptr);
  l.delta20 = t.rational("delta20");
  if (auto v = t.table("v_data")) {
    VData d;
    d.h10_v = v->require(v->rational("h10_v"), "h10_v");
    d.delta_v = v->require(v->rational("delta_v"), "delta_v");
    d.rank_l10 = v->require(v->rational("rank_l10"), "rank_l10");
    d.deg_l10 = v->require(v->rational("deg_l10"), "deg_l10");
    v->finish();
    l.v_data = d;
  }
  *genus = t.count("genus").value_or(0);
  t.finish();
  return l;
}

FormulaInputs read_formulas(Table t) {
  FormulaInputs f;
  if (auto w = t.table("weight1")) f.weight1 = read_weight1(*w);
  if (auto w = t.table("weight2")) f.weight2 = read_weight2(*w, &f.weight2_degenerate);
  if (auto a = t.table("arakelov")) {
    ArakelovInput in;
    in.deg_hn0 = a->require(a->rational("deg_hn0"), "deg_hn0");
    in.rank_hn0 = a->count("rank_hn0").value_or(1);
    in.weight_n = a->count("weight_n").value_or(1);
    in.genus = a->count("genus").value_or(0);
    in.n_marked = a->count("n_marked").value_or(0);
    in.higgs_maximal = a->boolean("higgs_maximal").value_or(false);
    a->finish();
    f.arakelov = in;
  }
  if (auto a = t.table("fujita")) {
    FujitaData d;
    d.rank_a = a->count("rank_a").value_or(0);
    d.rank_uprime = a->count("rank_uprime").value_or(0);
    d.q_f = a->count("q_f").value_or(0);
    d.deg_a = a->rational("deg_a").value_or(Rational());
    d.h_n0 = a->count("h_n0").value_or(0);
    d.h_n0_0 = a->count("h_n0_0").value_or(0);
    d.deg_hn0 = a->rational("deg_hn0").value_or(Rational());
    d.n_marked = a->count("n_marked").value_or(0);
    d.higgs_maximal = a->boolean("higgs_maximal").value_or(false);
    d.genus = a->count("genus").value_or(0);
    d.weight_n = a->count("weight_n").value_or(1);
    a->finish();
    f.fujita = d;
  }
  if (auto a = t.table("local_system")) {
    LocalSystemInput in;
    in.h0v = a->count("h0v").value_or(0);
    in.h1v = a->count("h1v").value_or(0);
    in.delta0v = a->rational("delta0v").value_or(Rational());
    in.delta1v = a->rational("delta1v").value_or(Rational());
    in.genus = a->count("genus").value_or(0);
    in.nu_total = a->count("nu_total").value_or(0);
    f.graded_p = a->integer("p");
    a->finish();
    f.local_system = in;
  }
  t.finish();
  return f;
}

}  // namespace

FamilySpec parse_spec(std::string_view text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw Error(ErrorCode::SpecError, source + ":" + std::to_string(e.source().begin.line) + ":" +
                                          std::to_string(e.source().begin.column) + ": " +
                                          std::string(e.description()));
  }
  Table t(root, source, "");
  FamilySpec spec;
  spec.source = source;
  const std::string kind = t.require(t.string("kind"), "kind");
  if (kind == "weierstrass") {
    spec.kind = SpecKind::Weierstrass;
  } else if (kind == "k3_slices") {
    spec.kind = SpecKind::K3Slices;
  } else if (kind == "ledger") {
    spec.kind = SpecKind::LedgerOnly;
  } else {
    t.fail(t.node("kind"), "kind must be weierstrass, k3_slices or ledger");
  }
  spec.name = t.string("name").value_or(std::filesystem::path(source).stem().string());

  switch (spec.kind) {
    case SpecKind::Weierstrass:
      t.forbid({"G2", "G3", "t_samples", "base_genus"}, kind);
      spec.g2 = t.require(t.string("g2"), "g2");
      spec.g3 = t.require(t.string("g3"), "g3");
      break;
    case SpecKind::K3Slices:
      t.forbid({"g2", "g3", "pf"}, kind);
      spec.G2 = t.require(t.string("G2"), "G2");
      spec.G3 = t.require(t.string("G3"), "G3");
      spec.t_samples = t.rationals("t_samples");
      if (spec.t_samples.empty()) t.fail(nullptr, "t_samples must list at least one value");
      spec.base_genus = t.count("base_genus").value_or(0);
      break;
    case SpecKind::LedgerOnly:
      t.forbid({"g2", "g3", "G2", "G3", "t_samples", "base_genus", "level", "pf"}, kind);
      if (!t.has("ledger") && !t.has("formulas")) t.fail(nullptr, "a ledger spec needs [ledger] or [formulas]");
      break;
  }
  if (spec.kind != SpecKind::LedgerOnly) {
    const long level = t.integer("level").value_or(1);
    if (level < 1) t.fail(t.node("level"), "level must be positive");
    spec.level = static_cast<int>(level);
  }
  if (auto pf = t.table("pf")) {
    spec.pf.tolerance = pf->real("tolerance").value_or(spec.pf.tolerance);
    spec.pf.steps = static_cast<int>(pf->integer("steps").value_or(spec.pf.steps));
    spec.pf.radius = pf->real("radius");
    if (!(spec.pf.tolerance > 0) || spec.pf.steps < 2) pf->fail(nullptr, "pf.tolerance must be positive and pf.steps at least 2");
    pf->finish();
  }
  if (auto l = t.table("ledger")) spec.ledger = read_ledger(*l, &spec.ledger_genus);
  if (auto f = t.table("formulas")) spec.formulas = read_formulas(*f);
  t.finish();
  return spec;
}

FamilySpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SpecError, path.string() + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_spec(text.str(), path.string());
}

}  // namespace arakelov
