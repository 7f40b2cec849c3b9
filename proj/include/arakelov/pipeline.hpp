#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arakelov/error.hpp"
#include "arakelov/picard_fuchs.hpp"
#include "arakelov/spec.hpp"
#include "arakelov/triangle.hpp"
#include "arakelov/weierstrass.hpp"

namespace arakelov {

using Json = nlohmann::ordered_json;

enum ExitCode { kExitOk = 0, kExitError = 1, kExitCheckFailed = 2 };

Json to_json(const Rational& r);
Json to_json(const Mat2i& m);
Json to_json(const SurfaceReport& r);
Json to_json(const MonodromyCheck& c);
Json to_json(const std::vector<MonodromyCheck>& checks);
Json to_json(const IdentityCheck& c);

/// A finished run: the report, its exit code, and the failed checks by name.
struct RunResult {
  Json report = Json::object();
  int exit_code = kExitOk;
  std::vector<std::string> failures;
};

/// The analyze subcommand. Operational errors propagate as Error; failed
/// checks land in `failures` with exit code 2.
RunResult run_analyze(const FamilySpec& spec);

/// Monodromy verification with optional overrides of the spec's pf table.
/// Throws IsotrivialFamily for constant J.
struct MonodromyOverrides {
  std::optional<double> tolerance;
  std::optional<int> steps;
  std::optional<double> radius;
};
RunResult run_monodromy(const FamilySpec& spec, const MonodromyOverrides& overrides = {});

/// Error-to-exit mapping: identity failures raised as errors count as check
/// failures, everything else is operational.
int exit_code_for(const Error& e);

struct CorpusRow {
  std::string file;
  std::string name;
  std::optional<std::string> error;
  Rational delta;
  int deg_j = 0;
  int n_singular = 0;
  bool nonconstant_j = false;
  bool n_bound_ok = true;
  bool euler_ok = true;
  std::optional<bool> monodromy_ok;  // absent for constant J and non-Weierstrass specs
  int exit_code = kExitOk;
};

struct CorpusSummary {
  std::vector<CorpusRow> rows;  // ordered by file name
  int exit_code = kExitOk;
};

/// Runs analyze on every *.toml file of `dir` concurrently.
CorpusSummary run_corpus(const std::filesystem::path& dir, unsigned threads = 0);
Json to_json(const CorpusSummary& s);
std::string to_text(const CorpusSummary& s);

/// Human-readable rendering of an analyze or monodromy report.
std::string to_text(const Json& report);

}  // namespace arakelov
