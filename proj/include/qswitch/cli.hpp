#pragma once

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qswitch/errors.hpp"
#include "qswitch/sweep.hpp"

namespace qswitch {

inline void print_figure_presets(std::ostream& os) {
  os << "figure  measure  dz   inputs\n";
  const FigureId figures[] = {FigureId::k2a, FigureId::k2b, FigureId::k2c,
                              FigureId::k2d, FigureId::k2e, FigureId::k2f,
                              FigureId::k2g, FigureId::k2h, FigureId::k3a,
                              FigureId::k3b};
  for (FigureId id : figures) {
    const FigurePreset preset = figure_preset(id);
    os << to_string(id) << "      " << to_string(preset.measure);
    os << std::string(9 - to_string(preset.measure).size(), ' ');
    os << preset.dz << "  "
       << (preset.parametrized ? "parametrized family" : "fixed pair") << "\n";
  }
  os << "custom  choose measure/dz/ranges via flags\n";
}

// Batch driver entry point. Exit codes: 0 success, 2 invalid arguments or
// sweep spec, 1 output failure.
inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Quantum-switch coherence sweeps (CSV batch driver)"};

  std::string figure = "custom";
  std::string measure = "l1";
  std::string out_path;
  double dz = 0.0;
  int t_steps = 101;
  int a_steps = 101;
  double t_start = 0.0;
  double t_stop = std::numbers::pi / 2.0;
  double a_start = 0.0;
  double a_stop = std::numbers::pi / 2.0;
  long long shots = 0;
  std::uint64_t seed = 0;
  bool parametrized = false;
  bool list_figures = false;

  app.add_option("--figure", figure,
                 "Figure preset (2a..2h, 3a, 3b) or \"custom\"");
  app.add_option("--measure", measure,
                 "Measure for custom sweeps: l1, re, delta, overlap");
  app.add_option("--dz", dz, "DM interaction intensity (overrides preset)");
  app.add_option("--t-steps", t_steps, "Points on the t grid");
  app.add_option("--a-steps", a_steps, "Points on the family-parameter grid");
  app.add_option("--t-start", t_start, "First t value");
  app.add_option("--t-stop", t_stop, "Last t value");
  app.add_option("--a-start", a_start, "First family-parameter value");
  app.add_option("--a-stop", a_stop, "Last family-parameter value");
  app.add_option("--shots", shots,
                 "Swap-test shots for measure=overlap (0 = exact)");
  app.add_option("--seed", seed, "Base RNG seed for sampled sweeps");
  app.add_flag("--parametrized", parametrized,
               "Sweep the input family instead of the fixed pair (custom)");
  app.add_option("--out", out_path, "Output CSV path");
  app.add_flag("--list-figures", list_figures, "Print the preset table");
  app.set_config("--config", "",
                 "Read options from a key=value file (# comments, flags win)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list_figures) {
    print_figure_presets(std::cout);
    return 0;
  }

  try {
    const FigureId id = figure_from_string(figure);
    SweepSpec spec = make_preset_spec(id);

    if (id == FigureId::kCustom) {
      if (measure == "l1") {
        spec.measure = SweepMeasure::kL1;
      } else if (measure == "re") {
        spec.measure = SweepMeasure::kRe;
      } else if (measure == "delta") {
        spec.measure = SweepMeasure::kDelta;
      } else if (measure == "overlap") {
        spec.measure = SweepMeasure::kOverlap;
      } else {
        throw InvalidSpec("measure: unknown measure \"" + measure +
                          "\" (expected l1, re, delta, overlap)");
      }
      spec.parametrized = parametrized;
    } else {
      if (app.count("--measure") > 0) {
        std::cerr << "note: --measure is bound by figure " << to_string(id)
                  << " and was ignored\n";
      }
      if (app.count("--parametrized") > 0) {
        std::cerr << "note: --parametrized is bound by figure " << to_string(id)
                  << " and was ignored\n";
      }
    }

    if (app.count("--dz") > 0) spec.dz = dz;
    spec.t_range = {t_start, t_stop, t_steps};
    spec.a_range = {a_start, a_stop, a_steps};
    spec.shots = shots;
    spec.seed = seed;
    spec.output_path = out_path;

    if (spec.output_path.empty()) {
      std::cerr << "error: --out is required (or use --list-figures)\n";
      return 2;
    }

    const std::vector<SweepRow> rows = run_sweep(spec);
    write_csv(rows, spec.output_path);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qswitch
