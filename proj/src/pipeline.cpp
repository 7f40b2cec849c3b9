#include "arakelov/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "arakelov/error.hpp"
#include "arakelov/formulas.hpp"
#include "arakelov/parse.hpp"

namespace arakelov {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Mat2i& m) { return Json::array({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}); }

namespace {

Json order_json(Order o) { return o == kInfiniteOrder ? Json(nullptr) : Json(o); }

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const SurfaceReport& r) {
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    fibers.push_back({
        {"place", f.place.to_string()},
        {"degree", f.place.degree()},
        {"type", f.type.name()},
        {"orders", Json::array({order_json(f.ord_g2), order_json(f.ord_g3), order_json(f.ord_delta)})},
        {"euler", f.euler},
        {"monodromy", to_json(f.monodromy)},
        {"monodromy_log", f.monodromy_log ? to_json(*f.monodromy_log) : Json(nullptr)},
    });
  }
  return {
      {"delta", to_json(r.delta_degree)}, {"deg_j", r.deg_j},           {"n_singular", r.n_singular},
      {"level", r.level},                 {"semistable", r.semistable}, {"isotrivial", r.isotrivial},
      {"euler_total", r.euler_total},     {"fibers", std::move(fibers)},
  };
}

Json to_json(const MonodromyCheck& c) {
  const TransportResult& t = c.result;
  return {
      {"place", c.place.to_string()},
      {"predicted", c.predicted.name()},
      {"root", complex_json(c.root)},
      {"radius", c.loop.radius},
      {"trace", complex_json(t.trace)},
      {"trace_err", c.trace_err},
      {"det", complex_json(t.det)},
      {"classified", t.classified_type ? Json(t.classified_type->name()) : Json(nullptr)},
      {"n_recovered", t.n_recovered ? Json(*t.n_recovered) : Json(nullptr)},
      {"lattice_monodromy", t.lattice_monodromy ? to_json(*t.lattice_monodromy) : Json(nullptr)},
      {"residual", t.residual},
      {"steps", t.steps_used},
      {"ok", c.ok},
  };
}

Json to_json(const std::vector<MonodromyCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

Json to_json(const IdentityCheck& c) {
  return {{"name", c.name}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"ok", c.ok}};
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::AuditFailure:
    case ErrorCode::MaximalityViolation:
    case ErrorCode::Overdetermined:
      return kExitCheckFailed;
    default:
      return kExitError;
  }
}

namespace {

struct Context {
  RunResult& run;
  Json warnings = Json::array();

  void fail(const std::string& what) { run.failures.push_back(what); }
  void warn(const std::string& what) { warnings.push_back(what); }
};

WeierstrassFamily minimal_family(const FamilySpec& spec, Context& ctx) {
  const Poly g2 = parse_poly(spec.g2);
  const Poly g3 = parse_poly(spec.g3);
  auto [minimal, reductions] = minimalize(build_family(g2, g3, spec.level));
  for (const auto& r : reductions) {
    ctx.warn("minimalized: divided out (" + r.place.to_string() + ")^4, ^6 " + std::to_string(r.count) +
             " time(s) at " + (r.place.is_infinity() ? std::string("infinity") : r.place.to_string()));
  }
  if (minimal.level != spec.level) {
    ctx.warn("minimal model has level " + std::to_string(minimal.level) + ", spec declared " +
             std::to_string(spec.level));
  }
  return minimal;
}

void surface_checks(const SurfaceReport& r, Context& ctx) {
  if (!r.arakelov_bound_ok) {
    ctx.fail("nonconstant J with " + std::to_string(r.n_singular) + " < 3 singular fibers");
  }
  if (Rational(r.euler_total) != Rational(12) * r.delta_degree) ctx.fail("euler_total != 12 delta");
}

Json elliptic_formulas(const SurfaceReport& r, Context& ctx) {
  Json out = Json::object();
  const FiberCountResiduals res = fiber_count_residuals(r);
  long sum_n = 0;
  for (const auto& f : r.fibers) {
    if (f.type.kind == FiberKind::In || f.type.kind == FiberKind::Instar) sum_n += static_cast<long>(f.type.n) * f.place.degree();
  }
  out["fiber_count"] = {
      {"n_singular", r.n_singular},
      {"delta", to_json(res.delta)},
      {"deg_j", res.deg_j},
      {"sum_n", sum_n},
      {"nu_plus1", to_json(res.implied_nu_plus1)},
      {"nu_plus2", to_json(res.implied_nu_plus2)},
  };
  if (!r.isotrivial) {
    ctx.warn("delta = " + r.delta_degree.to_string() + " and deg J = " + std::to_string(r.deg_j) +
             " differ in normalization: delta is sum n / 12, deg J is sum n");
    ctx.warn("fiber count: N - 2 delta - 1 = " + res.implied_nu_plus1.to_string() + ", N - 2 delta - 2 = " +
             res.implied_nu_plus2.to_string() + "; only N >= 3 is asserted");
  }
  if (r.semistable && !r.isotrivial) {
    const auto b = arakelov_inequality(r.delta_degree, 1, 1, 0, r.n_singular, false);
    out["arakelov_inequality"] = {
        {"deg_hn0", to_json(r.delta_degree)}, {"n_marked", r.n_singular}, {"bound", to_json(b.bound)},
        {"ok", b.ok},                         {"tight", b.tight},
    };
    if (!b.ok) ctx.fail("Arakelov inequality for the surface");

    long n = 0;
    for (const auto& f : r.fibers) n += f.place.degree();
    WeightOneData d;
    d.h10 = 1;
    d.n_degen = n;
    d.im_nbar_dims.assign(static_cast<std::size_t>(n), 1);
    d.nu_a.assign(static_cast<std::size_t>(n), 0);
    const Rational value = delta_weight1_degenerate(d);
    out["elliptic_weight1"] = {
        {"formula", to_json(value)},
        {"delta", to_json(r.delta_degree)},
        {"residual", to_json(value - r.delta_degree)},
    };
  }
  return out;
}

Json user_formulas(const FormulaInputs& in, Context& ctx) {
  Json out = Json::object();
  if (in.weight1) {
    Json w = {{"delta_weight1", to_json(delta_weight1(*in.weight1))}};
    if (in.weight1->n_degen > 0 || !in.weight1->im_nbar_dims.empty()) {
      w["delta_weight1_degenerate"] = to_json(delta_weight1_degenerate(*in.weight1));
    }
    out["weight1"] = std::move(w);
  }
  if (in.weight2) {
    out["weight2"] = {{"degenerate", in.weight2_degenerate},
                      {"delta_weight2", to_json(delta_weight2(*in.weight2, in.weight2_degenerate))}};
  }
  if (in.arakelov) {
    const ArakelovInput& a = *in.arakelov;
    try {
      const auto b = arakelov_inequality(a.deg_hn0, a.rank_hn0, a.weight_n, a.genus, a.n_marked, a.higgs_maximal);
      out["arakelov_inequality"] = {{"bound", to_json(b.bound)}, {"ok", b.ok}, {"tight", b.tight}};
      if (!b.ok) ctx.fail("Arakelov inequality");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MaximalityViolation) throw;
      out["arakelov_inequality"] = {{"error", e.what()}};
      ctx.fail("Arakelov inequality: Higgs-maximal but not tight");
    }
  }
  if (in.fujita) {
    Json checks = Json::array();
    for (const auto& c : fujita_check(*in.fujita)) {
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"residual", to_json(c.residual)}});
      if (!c.ok) ctx.fail("Fujita: " + c.name);
    }
    out["fujita"] = std::move(checks);
  }
  if (in.local_system) {
    const LocalSystemInput& s = *in.local_system;
    const auto cmp = compare_local_system_euler(s.h0v, s.h1v, s.delta0v, s.delta1v, s.genus, s.nu_total);
    Json ls = {
        {"euler", to_json(cmp.printed)},
        {"from_gradeds", to_json(cmp.from_gradeds)},
        {"discrepancy", to_json(cmp.discrepancy)},
    };
    if (in.graded_p) {
      ls["graded_h1"] = {{"p", *in.graded_p},
                         {"value", to_json(graded_h1(*in.graded_p, {{0, s.delta0v}, {1, s.delta1v}},
                                                     {{0, s.h0v}, {1, s.h1v}}, s.genus, s.nu_total))}};
    }
    if (!cmp.discrepancy.is_zero()) {
      ctx.warn("local system Euler characteristic as printed differs from -sum of gradeds by " +
               cmp.discrepancy.to_string());
    }
    out["local_system"] = std::move(ls);
  }
  return out;
}

bool has_any(const FormulaInputs& in) {
  return in.weight1 || in.weight2 || in.arakelov || in.fujita || in.local_system;
}

Json triangle_section(TriangleLedger l, long genus, Context& ctx) {
  Json out = Json::object();
  for (const auto id : {SlotId::F, SlotId::G, SlotId::HFix, SlotId::HVar, SlotId::HFull}) {
    if (!l.slot(id)) continue;
    for (const auto& v : slot_violations(*l.slot(id))) ctx.fail("slot " + to_string(id) + ": " + v);
  }
  for (const auto& w : l.warnings) ctx.warn(w);
  const TriangleLedger full = complete_h_slots(l);

  const bool split_ready = l.f && l.g && l.h_fix && (l.h_var || l.h_full);
  if (split_ready) {
    std::vector<IdentityCheck> checks;
    try {
      checks = check_prop56(l);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingSlot) throw;
      try {
        const SolvedField s = solve_missing(l);
        out["solved"] = {{"field", s.name()}, {"value", to_json(s.value)}};
        (*l.slot(s.slot))[s.field] = s.value;
        checks = check_prop56(l);
      } catch (const Error& inner) {
        if (inner.code() == ErrorCode::Overdetermined) {
          out["solved"] = {{"error", inner.what()}};
          ctx.fail("split identities: inconsistent values for the one unknown field");
        } else if (inner.code() == ErrorCode::Underdetermined) {
          ctx.warn(std::string("split identities not evaluated: ") + inner.what());
        } else {
          throw;
        }
      }
    }
    if (!checks.empty()) {
      Json list = Json::array();
      for (const auto& c : checks) {
        list.push_back(to_json(c));
        if (!c.ok) ctx.fail("identity " + c.name);
      }
      out["identities"] = std::move(list);
    }
    try {
      Json fj = Json::array();
      for (const auto& c : check_fujita_ranks(l, *full.h_full)) {
        fj.push_back({{"name", c.name}, {"ok", c.ok}, {"residual", to_json(c.residual)}});
        if (!c.ok) ctx.fail("ranks: " + c.name);
      }
      out["fujita_ranks"] = std::move(fj);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingSlot) throw;
    }
  } else {
    ctx.warn("split identities not evaluated: slots f, g, h_fix and one of h_var, h_full are required");
  }

  if (l.weight2 || l.delta20) {
    try {
      const Thm58Check c = check_thm58(l, genus);
      out["delta20_identity"] = {{"lhs", to_json(c.lhs)},
                                 {"rhs", to_json(c.rhs)},
                                 {"nu", to_json(c.residual)},
                                 {"ok", c.ok}};
      if (!c.ok) ctx.fail("delta20 identity: negative nu " + c.residual.to_string());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingSlot) throw;
      ctx.warn(std::string("delta20 identity not evaluated: ") + e.what());
    }
  }
  if (l.v_data) {
    try {
      const Thm513Check c = check_thm513(l, genus);
      out["delta20_bound"] = {{"delta20", to_json(c.delta20)},
                              {"bound", to_json(c.bound)},
                              {"ok", c.ok_main},
                              {"ok_corollary", c.ok_corollary}};
      if (!c.ok_main) ctx.fail("delta20 lower bound");
      if (!c.ok_corollary) ctx.fail("delta20 >= delta_v");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingSlot) throw;
      ctx.warn(std::string("delta20 bound not evaluated: ") + e.what());
    }
  }
  return out;
}

MonodromyOptions monodromy_options(const PFOptions& pf) {
  MonodromyOptions o;
  o.transport.tolerance = pf.tolerance;
  o.transport.steps = pf.steps;
  o.radius = pf.radius;
  return o;
}

Json monodromy_section(const WeierstrassFamily& minimal, const PFOptions& pf, Context& ctx, Json& global) {
  const MonodromyOptions opts = monodromy_options(pf);
  const auto checks = verify_monodromy(minimal, pf.tolerance, opts);
  for (const auto& c : checks) {
    if (!c.ok) ctx.fail("monodromy at " + c.place.to_string() + " (" + c.predicted.name() + ")");
  }
  const GlobalRelation g = global_monodromy_relation(build_pf(minimal, DiagonalForm::Discriminant), opts.transport);
  global = {{"loops", g.loops}, {"defect", g.defect}, {"ok", g.defect < kClassifyThreshold}};
  if (g.defect >= kClassifyThreshold) ctx.fail("global monodromy relation");
  return to_json(checks);
}

void finish(RunResult& run, Context& ctx) {
  run.report["warnings"] = std::move(ctx.warnings);
  Json failures = Json::array();
  for (const auto& f : run.failures) failures.push_back(f);
  run.report["failures"] = std::move(failures);
  run.exit_code = run.failures.empty() ? kExitOk : kExitCheckFailed;
}

void header(RunResult& run, const FamilySpec& spec) {
  run.report["name"] = spec.name;
  run.report["kind"] = to_string(spec.kind);
}

}  // namespace

RunResult run_analyze(const FamilySpec& spec) {
  RunResult run;
  Context ctx{run};
  header(run, spec);
  Json formulas = Json::object();
  std::optional<TriangleLedger> ledger = spec.ledger;
  long genus = spec.ledger_genus;

  switch (spec.kind) {
    case SpecKind::Weierstrass: {
      const WeierstrassFamily minimal = minimal_family(spec, ctx);
      const SurfaceReport r = surface_report(minimal);
      run.report["surface"] = to_json(r);
      surface_checks(r, ctx);
      if (!r.isotrivial) {
        Json global;
        run.report["monodromy"] = monodromy_section(minimal, spec.pf, ctx, global);
        run.report["monodromy_global"] = std::move(global);
      } else {
        ctx.warn("constant J: monodromy verification skipped");
      }
      formulas = elliptic_formulas(r, ctx);
      break;
    }
    case SpecKind::K3Slices: {
      const auto slices = k3_slice_reports(parse_bipoly(spec.G2), parse_bipoly(spec.G3), spec.level, spec.t_samples);
      Json list = Json::array();
      for (const auto& s : slices.slices) {
        Json row = {{"t", to_json(s.t)}};
        if (s.report) {
          row["delta"] = to_json(s.report->delta_degree);
          row["deg_j"] = s.report->deg_j;
          row["n_singular"] = s.report->n_singular;
        } else {
          row["error"] = s.error.value_or("degenerate");
        }
        list.push_back(std::move(row));
      }
      run.report["slices"] = std::move(list);
      TriangleLedger derived = ledger_from_k3(slices, spec.base_genus);
      const SliceProfile& p = *slices.generic;
      run.report["generic"] = {{"delta", to_json(p.delta)}, {"deg_j", p.deg_j},
                               {"n_singular", p.n_singular}, {"fibers", p.fiber_multiset},
                               {"support", p.support}};
      run.report["surface"] = to_json(p.representative);
      surface_checks(p.representative, ctx);
      formulas = elliptic_formulas(p.representative, ctx);
      if (ledger) {
        for (const auto id : {SlotId::F, SlotId::G, SlotId::HFix, SlotId::HVar, SlotId::HFull}) {
          if (!derived.slot(id)) derived.slot(id) = ledger->slot(id);
        }
        if (!derived.v_data) derived.v_data = ledger->v_data;
        for (const auto& w : ledger->warnings) derived.warnings.push_back(w);
      } else {
        genus = spec.base_genus;
      }
      ledger = std::move(derived);
      break;
    }
    case SpecKind::LedgerOnly:
      break;
  }

  if (has_any(spec.formulas)) formulas["user"] = user_formulas(spec.formulas, ctx);
  if (!formulas.empty()) run.report["formulas"] = std::move(formulas);
  if (ledger) run.report["triangle"] = triangle_section(*ledger, genus, ctx);
  finish(run, ctx);
  return run;
}

RunResult run_monodromy(const FamilySpec& spec, const MonodromyOverrides& overrides) {
  if (spec.kind != SpecKind::Weierstrass) {
    throw Error(ErrorCode::SpecError, spec.source + ": monodromy needs a weierstrass spec, got " + to_string(spec.kind));
  }
  RunResult run;
  Context ctx{run};
  header(run, spec);
  PFOptions pf = spec.pf;
  if (overrides.tolerance) pf.tolerance = *overrides.tolerance;
  if (overrides.steps) pf.steps = *overrides.steps;
  if (overrides.radius) pf.radius = *overrides.radius;
  const WeierstrassFamily minimal = minimal_family(spec, ctx);
  if (minimal.j.is_constant()) {
    throw Error(ErrorCode::IsotrivialFamily, "J is constant; there is no monodromy to verify");
  }
  Json global;
  run.report["monodromy"] = monodromy_section(minimal, pf, ctx, global);
  run.report["monodromy_global"] = std::move(global);
  finish(run, ctx);
  return run;
}

// ---------------------------------------------------------------------------

namespace {

CorpusRow corpus_row(const std::filesystem::path& file) {
  CorpusRow row;
  row.file = file.filename().string();
  row.name = file.stem().string();
  try {
    const FamilySpec spec = load_spec(file);
    row.name = spec.name;
    const RunResult run = run_analyze(spec);
    row.exit_code = run.exit_code;
    if (run.report.contains("surface")) {
      const Json& s = run.report["surface"];
      row.delta = Rational::parse(s["delta"].get<std::string>());
      row.deg_j = s["deg_j"].get<int>();
      row.n_singular = s["n_singular"].get<int>();
      row.nonconstant_j = !s["isotrivial"].get<bool>();
      row.n_bound_ok = !row.nonconstant_j || row.n_singular >= 3;
      row.euler_ok = Rational(s["euler_total"].get<int>()) == Rational(12) * row.delta;
    }
    if (run.report.contains("monodromy")) {
      bool ok = true;
      for (const auto& c : run.report["monodromy"]) ok = ok && c["ok"].get<bool>();
      if (run.report.contains("monodromy_global")) ok = ok && run.report["monodromy_global"]["ok"].get<bool>();
      row.monodromy_ok = ok;
    }
  } catch (const Error& e) {
    row.error = e.what();
    row.exit_code = exit_code_for(e);
    if (e.code() == ErrorCode::AuditFailure) row.euler_ok = false;
  }
  return row;
}

}  // namespace

CorpusSummary run_corpus(const std::filesystem::path& dir, unsigned threads) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::SpecError, dir.string() + ": not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".toml") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  CorpusSummary summary;
  summary.rows.resize(files.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < files.size(); k = next++) summary.rows[k] = corpus_row(files[k]);
    });
  }
  for (auto& t : pool) t.join();

  bool check_failed = false, errored = false;
  for (const auto& r : summary.rows) {
    if (!r.n_bound_ok || !r.euler_ok || r.exit_code == kExitCheckFailed) check_failed = true;
    if (r.exit_code == kExitError) errored = true;
  }
  summary.exit_code = check_failed ? kExitCheckFailed : (errored ? kExitError : kExitOk);
  return summary;
}

Json to_json(const CorpusSummary& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json row = {{"file", r.file}, {"name", r.name}};
    if (r.error) {
      row["error"] = *r.error;
    } else {
      row["delta"] = to_json(r.delta);
      row["deg_j"] = r.deg_j;
      row["n_singular"] = r.n_singular;
      row["n_bound_ok"] = r.n_bound_ok;
      row["euler_ok"] = r.euler_ok;
      row["monodromy_ok"] = r.monodromy_ok ? Json(*r.monodromy_ok) : Json(nullptr);
    }
    row["exit_code"] = r.exit_code;
    rows.push_back(std::move(row));
  }
  return {{"families", std::move(rows)}, {"exit_code", s.exit_code}};
}

std::string to_text(const CorpusSummary& s) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-8s %-6s %-4s %-5s %-6s %-9s\n", "family", "delta", "deg_J", "N",
                "N>=3", "euler", "monodromy");
  out << line;
  for (const auto& r : s.rows) {
    if (r.error) {
      out << r.file << "  error: " << *r.error << "\n";
      continue;
    }
    const char* mono = !r.monodromy_ok ? "-" : (*r.monodromy_ok ? "ok" : "FAIL");
    std::snprintf(line, sizeof line, "%-28s %-8s %-6d %-4d %-5s %-6s %-9s\n", r.file.c_str(),
                  r.delta.to_string().c_str(), r.deg_j, r.n_singular,
                  !r.nonconstant_j ? "-" : (r.n_bound_ok ? "ok" : "FAIL"), r.euler_ok ? "ok" : "FAIL", mono);
    out << line;
  }
  out << s.rows.size() << " famil" << (s.rows.size() == 1 ? "y" : "ies") << ", exit " << s.exit_code << "\n";
  return out.str();
}

std::string to_text(const Json& report) {
  std::ostringstream out;
  out << report.value("name", "") << " (" << report.value("kind", "") << ")\n";
  if (report.contains("surface")) {
    const Json& s = report["surface"];
    out << "delta " << s["delta"].get<std::string>() << ", deg J " << s["deg_j"] << ", N " << s["n_singular"]
        << ", level " << s["level"] << ", euler " << s["euler_total"] << "\n";
    for (const auto& f : s["fibers"]) {
      out << "  " << f["type"].get<std::string>() << " at " << f["place"].get<std::string>() << " (degree "
          << f["degree"] << ")\n";
    }
  }
  if (report.contains("monodromy")) {
    for (const auto& c : report["monodromy"]) {
      out << "  monodromy " << c["place"].get<std::string>() << ": predicted " << c["predicted"].get<std::string>()
          << ", trace error " << c["trace_err"].get<double>() << (c["ok"].get<bool>() ? ", ok" : ", MISMATCH") << "\n";
    }
  }
  if (report.contains("monodromy_global")) {
    out << "  global relation defect " << report["monodromy_global"]["defect"].get<double>() << "\n";
  }
  if (report.contains("formulas")) {
    for (const auto& [key, value] : report["formulas"].items()) out << "  " << key << ": " << value.dump() << "\n";
  }
  if (report.contains("triangle")) {
    for (const auto& [key, value] : report["triangle"].items()) {
      if (key != "identities") out << "  " << key << ": " << value.dump() << "\n";
    }
  }
  if (report.contains("triangle") && report["triangle"].contains("identities")) {
    for (const auto& c : report["triangle"]["identities"]) {
      out << "  " << (c["ok"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << ": "
          << c["lhs"].get<std::string>() << " vs " << c["rhs"].get<std::string>() << "\n";
    }
  }
  for (const auto& w : report.value("warnings", Json::array())) out << "warning: " << w.get<std::string>() << "\n";
  for (const auto& f : report.value("failures", Json::array())) out << "FAILED: " << f.get<std::string>() << "\n";
  return out.str();
}

}  // namespace arakelov
