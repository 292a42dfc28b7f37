#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "windtree/cayley.hpp"
#include "windtree/counting.hpp"
#include "windtree/energy_bound.hpp"
#include "windtree/errors.hpp"
#include "windtree/gg_bound.hpp"
#include "windtree/pipeline.hpp"
#include "windtree/quadratic.hpp"

using namespace windtree;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;

// Raised for a well-formed run whose check does not hold.
struct VerificationFailure : Error {
  using Error::Error;
};

std::vector<double> grid(double step, double max) {
  if (!(step > 0.0)) throw InvalidArgument("--step must be positive");
  std::vector<double> out;
  for (int k = 1; k * step <= max + 1e-9; ++k) out.push_back(k * step);
  if (out.empty()) throw InvalidArgument("empty threshold grid");
  return out;
}

void emit_csv(const CountSeries& series, const std::string& path) {
  if (path.empty() || path == "-") {
    series.write_csv(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path + " for writing");
  series.write_csv(out);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for the square-obstacle wind-tree bound"};
  app.require_subcommand(1);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "assemble the critical exponent bound (JSON)");
  bool published_constants = false;
  int cone_radius = 10;
  pipeline->add_flag("--published-constants", published_constants, "use the published E and mu0");
  pipeline->add_option("--cone-radius", cone_radius, "ball radius for the automaton")->capture_default_str();

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "maximize the energy bound");
  double eta = 0.5, area = 2.0 * std::numbers::pi, energy_tol = 1e-10;
  energy_cmd->add_option("--eta", eta)->capture_default_str();
  energy_cmd->add_option("--area", area)->capture_default_str();
  energy_cmd->add_option("--tol", energy_tol)->capture_default_str();

  // gg
  auto* gg = app.add_subcommand("gg", "optimize the Gabber-Galil bound");
  std::string automaton_path = "builtin";
  double gg_tol = 1e-10;
  gg->add_option("--automaton", automaton_path, "JSON file or 'builtin'")->capture_default_str();
  gg->add_option("--tol", gg_tol)->capture_default_str();

  // cone-verify
  auto* cone = app.add_subcommand("cone-verify", "check the cone-type successor table");
  int radius = 10;
  cone->add_option("--radius", radius)->capture_default_str();

  // orbital / cylinders
  std::string group = "gamma0", sigma = "pm", csv_path;
  double rmax = 10.0, lmax = 64.0, step = 0.0;
  int depth = 0;
  auto* orbital = app.add_subcommand("orbital", "orbital counts n(R) as CSV");
  orbital->add_option("--group", group, "gamma0|kernel|bad")->capture_default_str();
  orbital->add_option("--sigma", sigma, "pm|mp")->capture_default_str();
  orbital->add_option("--rmax", rmax)->capture_default_str();
  orbital->add_option("--step", step, "grid spacing (default 0.5)");
  orbital->add_option("--depth", depth, "word length bound (default 400)");
  orbital->add_option("--csv", csv_path, "output file, stdout when omitted");

  auto* cylinders = app.add_subcommand("cylinders", "cylinder counts N(L) as CSV");
  cylinders->add_option("--group", group, "gamma0|kernel|bad")->capture_default_str();
  cylinders->add_option("--sigma", sigma, "pm|mp")->capture_default_str();
  cylinders->add_option("--lmax", lmax)->capture_default_str();
  cylinders->add_option("--step", step, "grid spacing (default 1)");
  cylinders->add_option("--depth", depth, "word length bound (default 12)");
  cylinders->add_option("--csv", csv_path, "output file, stdout when omitted");

  // veech-check
  auto* veech = app.add_subcommand("veech-check", "Calta-McMullen test for Pi(a, b)");
  std::string a_text, b_text;
  veech->add_option("--a", a_text, "p/q or p/q + r/s*sqrt(D)")->required();
  veech->add_option("--b", b_text, "p/q or p/q + r/s*sqrt(D)")->required();

  auto* relators = app.add_subcommand("relators-check", "audit the primitive relators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*pipeline) {
      PipelineConfig cfg = published_constants ? PipelineConfig::published_constants() : PipelineConfig();
      cfg.cone_radius = cone_radius;
      BoundReport report;
      try {
        report = full_pipeline(cfg);
      } catch (const InvalidArgument&) {
        throw;
      } catch (const Error& e) {
        throw VerificationFailure(e.what());
      }
      print(report.to_json());
      return kPass;
    }

    if (*energy_cmd) {
      if (!(energy_tol > 0.0)) throw InvalidArgument("--tol must be positive");
      const EnergyOptimum opt = maximize_energy(EnergyConfig(eta, area), energy_tol);
      print({{"L", opt.params.L},
             {"R", opt.params.R},
             {"E", opt.energy},
             {"admissibility", admissibility_value(opt.params)}});
      return kPass;
    }

    if (*gg) {
      if (!(gg_tol > 0.0)) throw InvalidArgument("--tol must be positive");
      TypeAutomaton aut = TypeAutomaton::builtin();
      if (automaton_path != "builtin") {
        std::ifstream in(automaton_path);
        if (!in) throw InvalidArgument("cannot read " + automaton_path);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          throw ParseError(e.what());
        }
        aut = TypeAutomaton::from_json(j);
      }
      const GgOptimum opt = optimize(aut, gg_tol);
      print({{"c", opt.c.values()},
             {"value", opt.value},
             {"bound", opt.bound},
             {"diverged", opt.diverged}});
      return opt.diverged ? kFailure : kPass;
    }

    if (*cone) {
      if (radius < 1 || radius > 16) throw InvalidArgument("--radius must lie in [1, 16]");
      const ConeTypeReport r = verify_cone_types(radius);
      json j = {{"pass", r.pass}, {"checked", r.checked}};
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      if (r.automaton) j["automaton"] = r.automaton->to_json();
      print(j);
      return r.pass ? kPass : kFailure;
    }

    if (*orbital) {
      const Subgroup s = Subgroup::parse(group, sigma);
      const auto thresholds = grid(step > 0 ? step : 0.5, rmax);
      CountSeries series = s.kind == SubgroupKind::Gamma0 && depth == 0
                               ? orbital_series_exact(thresholds)
                               : orbital_series_bfs(s, thresholds, depth > 0 ? depth : 400);
      emit_csv(series, csv_path);
      return kPass;
    }

    if (*cylinders) {
      const Subgroup s = Subgroup::parse(group, sigma);
      const auto lengths = grid(step > 0 ? step : 1.0, lmax);
      emit_csv(cylinder_series(s, lengths, depth > 0 ? depth : 12), csv_path);
      return kPass;
    }

    if (*veech) {
      const QuadraticNumber a = QuadraticNumber::parse(a_text);
      const QuadraticNumber b = QuadraticNumber::parse(b_text);
      const bool is_veech = calta_mcmullen_is_veech(a, b);
      print({{"a", a.to_string()}, {"b", b.to_string()}, {"veech", is_veech}});
      return kPass;
    }

    if (*relators) {
      const RelatorReport r = relators_check(5);
      print({{"pass", r.pass}, {"failures", r.failures}});
      return r.pass ? kPass : kFailure;
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
