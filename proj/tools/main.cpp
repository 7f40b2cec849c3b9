#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "arakelov/error.hpp"
#include "arakelov/pipeline.hpp"
#include "arakelov/spec.hpp"

namespace {

using namespace arakelov;

struct Output {
  std::string out;
  bool text = false;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("arakelov");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("ARAKELOV_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

int emit(const std::string& body, const Output& o) {
  if (o.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << body)) {
    spdlog::error("cannot write {}", o.out);
    return kExitError;
  }
  spdlog::info("wrote {}", o.out);
  return 0;
}

int finish(const RunResult& run, const Output& o) {
  for (const auto& f : run.failures) spdlog::warn("check failed: {}", f);
  if (int rc = emit(o.text ? to_text(run.report) : run.report.dump(2) + "\n", o)) return rc;
  return run.exit_code;
}

template <class F>
int guarded(const std::string& what, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << what << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << what << ": " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Hodge-Arakelov invariants of Weierstrass fibrations and triangle ledgers"};
  app.require_subcommand(1);

  Output o;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    auto* json = sub->add_flag("--json", "JSON output (default)");
    sub->add_flag("--text", o.text, "human-readable output")->excludes(json);
  };

  std::string spec_path;
  auto* analyze = app.add_subcommand("analyze", "run the full pipeline on a spec");
  analyze->add_option("spec", spec_path, "TOML family spec")->required();
  add_output(analyze);

  MonodromyOverrides overrides;
  auto* monodromy = app.add_subcommand("monodromy", "verify local monodromy numerically");
  monodromy->add_option("spec", spec_path, "TOML family spec")->required();
  monodromy->add_option("--tolerance", overrides.tolerance, "transport residual tolerance")->check(CLI::PositiveNumber);
  monodromy->add_option("--steps", overrides.steps, "initial RK4 steps per loop")->check(CLI::Range(2, 1 << 24));
  monodromy->add_option("--radius", overrides.radius, "loop radius override")->check(CLI::PositiveNumber);
  add_output(monodromy);

  std::string corpus_dir;
  unsigned threads = 0;
  auto* corpus = app.add_subcommand("corpus", "analyze every spec in a directory");
  corpus->add_option("dir", corpus_dir, "directory of TOML specs")->required();
  corpus->add_option("--threads", threads, "worker threads (default: hardware)");
  add_output(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  if (analyze->parsed()) {
    return guarded(spec_path, [&] {
      const FamilySpec spec = load_spec(spec_path);
      spdlog::info("analyze {} ({})", spec.name, to_string(spec.kind));
      return finish(run_analyze(spec), o);
    });
  }
  if (monodromy->parsed()) {
    return guarded(spec_path, [&] {
      const FamilySpec spec = load_spec(spec_path);
      spdlog::info("monodromy {}", spec.name);
      return finish(run_monodromy(spec, overrides), o);
    });
  }
  return guarded(corpus_dir, [&] {
    const CorpusSummary s = run_corpus(corpus_dir, threads);
    for (const auto& r : s.rows) {
      if (r.error) spdlog::warn("{}: {}", r.file, *r.error);
    }
    if (int rc = emit(o.text ? to_text(s) : to_json(s).dump(2) + "\n", o)) return rc;
    return s.exit_code;
  });
}
