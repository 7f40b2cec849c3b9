#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arakelov/formulas.hpp"
#include "arakelov/rational.hpp"
#include "arakelov/triangle.hpp"

namespace arakelov {

enum class SpecKind { Weierstrass, K3Slices, LedgerOnly };
std::string to_string(SpecKind k);  // "weierstrass", "k3_slices", "ledger"

struct PFOptions {
  double tolerance = 1e-6;
  int steps = 4096;
  std::optional<double> radius;
};

struct ArakelovInput {
  Rational deg_hn0;
  long rank_hn0 = 1;
  long weight_n = 1;
  long genus = 0;
  long n_marked = 0;
  bool higgs_maximal = false;
};

struct LocalSystemInput {
  long h0v = 0, h1v = 0;
  Rational delta0v, delta1v;
  long genus = 0;
  long nu_total = 0;
};

/// Optional formula evaluations requested by a spec's [formulas] table.
struct FormulaInputs {
  std::optional<WeightOneData> weight1;
  std::optional<WeightTwoData> weight2;
  bool weight2_degenerate = false;
  std::optional<ArakelovInput> arakelov;
  std::optional<FujitaData> fujita;
  std::optional<LocalSystemInput> local_system;
  std::optional<long> graded_p;  // evaluate graded_h1 on the local_system data at this p
};

struct FamilySpec {
  SpecKind kind = SpecKind::Weierstrass;
  std::string name;
  std::string source;  // file the spec came from, for messages

  // weierstrass
  std::string g2, g3;
  // k3_slices
  std::string G2, G3;
  std::vector<Rational> t_samples;
  long base_genus = 0;

  int level = 1;
  PFOptions pf;
  std::optional<TriangleLedger> ledger;
  long ledger_genus = 0;
  FormulaInputs formulas;
};

/// Throws Error(SpecError) with "source:line:column: message" on malformed
/// TOML, unknown keys, missing or foreign fields for the declared kind.
/// Polynomial strings are kept verbatim and parsed by the pipeline.
FamilySpec parse_spec(std::string_view text, const std::string& source = "<string>");
FamilySpec load_spec(const std::filesystem::path& path);

}  // namespace arakelov
