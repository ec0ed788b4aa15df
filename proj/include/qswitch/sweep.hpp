#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qswitch/coherence.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/estimator.hpp"
#include "qswitch/switch_model.hpp"

namespace qswitch {

// Figure presets: the 2x/3x grids differ only in measure, DM intensity and
// whether the input pair is the fixed demo pair or the one-parameter family.
enum class FigureId {
  k2a, k2b, k2c, k2d, k2e, k2f, k2g, k2h, k3a, k3b, kCustom
};

enum class SweepMeasure { kL1, kRe, kDelta, kOverlap };

inline constexpr std::string_view to_string(SweepMeasure m) {
  switch (m) {
    case SweepMeasure::kL1: return "l1";
    case SweepMeasure::kRe: return "re";
    case SweepMeasure::kDelta: return "delta";
    case SweepMeasure::kOverlap: return "overlap";
  }
  return "l1";
}

inline constexpr std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::k2a: return "2a";
    case FigureId::k2b: return "2b";
    case FigureId::k2c: return "2c";
    case FigureId::k2d: return "2d";
    case FigureId::k2e: return "2e";
    case FigureId::k2f: return "2f";
    case FigureId::k2g: return "2g";
    case FigureId::k2h: return "2h";
    case FigureId::k3a: return "3a";
    case FigureId::k3b: return "3b";
    case FigureId::kCustom: return "custom";
  }
  return "custom";
}

inline FigureId figure_from_string(const std::string& name) {
  static const std::pair<std::string_view, FigureId> table[] = {
      {"2a", FigureId::k2a}, {"2b", FigureId::k2b}, {"2c", FigureId::k2c},
      {"2d", FigureId::k2d}, {"2e", FigureId::k2e}, {"2f", FigureId::k2f},
      {"2g", FigureId::k2g}, {"2h", FigureId::k2h}, {"3a", FigureId::k3a},
      {"3b", FigureId::k3b}, {"custom", FigureId::kCustom}};
  for (const auto& [key, id] : table) {
    if (name == key) return id;
  }
  throw InvalidSpec("figure_id: unknown figure \"" + name +
                    "\" (expected 2a..2h, 3a, 3b, or custom)");
}

// Inclusive linear grid description.
struct GridRange {
  double start = 0.0;
  double stop = std::numbers::pi / 2.0;
  int steps = 101;
};

// Full description of one batch run.
struct SweepSpec {
  FigureId figure_id = FigureId::kCustom;
  GridRange t_range{};
  GridRange a_range{};
  // false: both input qubits come from the fixed demo pair below; true: they
  // are drawn from the one-parameter family swept over a_range.
  bool parametrized = false;
  double dz = 0.0;
  SweepMeasure measure = SweepMeasure::kL1;
  long long shots = 0;
  std::uint64_t seed = 0;
  std::string output_path;
};

// One evaluated grid point. For fixed-pair sweeps the a column holds the
// sentinel below (the family parameter does not apply).
struct SweepRow {
  double t = 0.0;
  double a = 0.0;
  double dz = 0.0;
  SweepMeasure measure = SweepMeasure::kL1;
  double value = 0.0;
};

inline constexpr double kFixedPairSentinel = -1.0;

// The fixed demonstration pair (amplitude ratios 1:3 and 3:1).
inline QubitState fixed_state_a() {
  const double inv = 1.0 / std::sqrt(10.0);
  return {inv, 3.0 * inv};
}

inline QubitState fixed_state_b() {
  const double inv = 1.0 / std::sqrt(10.0);
  return {3.0 * inv, inv};
}

// One-parameter input family: the first qubit is sin(a)|0> + cos(a)|1>, the
// second its mirror cos(a)|0> + sin(a)|1>.
inline QubitState family_state_a(double a) { return QubitState::from_angle(a); }
inline QubitState family_state_b(double a) {
  return QubitState::from_angle(std::numbers::pi / 2.0 - a);
}

struct FigurePreset {
  SweepMeasure measure = SweepMeasure::kL1;
  double dz = 0.0;
  bool parametrized = false;
};

// measure and the fixed-vs-family choice are the identity of a figure; dz is
// a per-figure default that callers may override.
inline FigurePreset figure_preset(FigureId id) {
  switch (id) {
    case FigureId::k2a: return {SweepMeasure::kL1, 0.0, false};
    case FigureId::k2b: return {SweepMeasure::kL1, 0.0, true};
    case FigureId::k2c: return {SweepMeasure::kL1, 0.5, false};
    case FigureId::k2d: return {SweepMeasure::kL1, 0.5, true};
    case FigureId::k2e: return {SweepMeasure::kRe, 0.0, false};
    case FigureId::k2f: return {SweepMeasure::kRe, 0.0, true};
    case FigureId::k2g: return {SweepMeasure::kRe, 0.5, false};
    case FigureId::k2h: return {SweepMeasure::kRe, 0.5, true};
    case FigureId::k3a: return {SweepMeasure::kDelta, 0.5, false};
    case FigureId::k3b: return {SweepMeasure::kDelta, 0.5, true};
    case FigureId::kCustom: return {};
  }
  return {};
}

// Default spec for a figure: preset bindings plus the default grids.
inline SweepSpec make_preset_spec(FigureId id) {
  SweepSpec spec;
  spec.figure_id = id;
  if (id != FigureId::kCustom) {
    const FigurePreset preset = figure_preset(id);
    spec.measure = preset.measure;
    spec.dz = preset.dz;
    spec.parametrized = preset.parametrized;
  }
  return spec;
}

inline void validate_spec(const SweepSpec& spec) {
  if (spec.t_range.steps < 2) {
    throw InvalidSpec("t_range.steps: must be at least 2");
  }
  if (!(spec.t_range.start < spec.t_range.stop)) {
    throw InvalidSpec("t_range: start must be less than stop");
  }
  if (spec.parametrized) {
    if (spec.a_range.steps < 2) {
      throw InvalidSpec("a_range.steps: must be at least 2");
    }
    if (!(spec.a_range.start < spec.a_range.stop)) {
      throw InvalidSpec("a_range: start must be less than stop");
    }
  }
  if (spec.dz < 0.0) {
    throw InvalidSpec("dz: must be nonnegative");
  }
  if (spec.shots < 0) {
    throw InvalidSpec("shots: must be nonnegative");
  }
}

namespace detail {

inline double grid_point(const GridRange& range, int i) {
  return range.start +
         static_cast<double>(i) * (range.stop - range.start) /
             static_cast<double>(range.steps - 1);
}

inline double sweep_value(const SweepSpec& spec, const QubitState& a,
                          const QubitState& b, double t,
                          std::uint64_t row_index) {
  switch (spec.measure) {
    case SweepMeasure::kL1:
      return spec.dz == 0.0 ? c_l1_switch(a, b, t).value
                            : c_l1_switch_dm(a, b, t, spec.dz).value;
    case SweepMeasure::kRe: {
      const SwitchRegister reg = prepare_register(a, b, ControlBit::kOne);
      const SwitchRegister evolved =
          spec.dz != 0.0 ? evolve_dm(reg, t, spec.dz) : evolve(reg, t);
      return c_re(rho_ab(evolved)).value;
    }
    case SweepMeasure::kDelta:
      return c_delta_abs(a, b, t, spec.dz);
    case SweepMeasure::kOverlap:
      return estimate_at(a, b, t, spec.dz, spec.shots, spec.seed + row_index)
          .overlap;
  }
  return 0.0;
}

}  // namespace detail

// Evaluates the selected measure over the grid, t as the outer loop and the
// family parameter as the inner one. Sampled overlap rows are seeded with
// spec.seed + row index so reruns are reproducible row by row.
inline std::vector<SweepRow> run_sweep(SweepSpec spec) {
  if (spec.figure_id != FigureId::kCustom) {
    const FigurePreset preset = figure_preset(spec.figure_id);
    spec.measure = preset.measure;
    spec.parametrized = preset.parametrized;
  }
  validate_spec(spec);

  std::vector<SweepRow> rows;
  const int a_steps = spec.parametrized ? spec.a_range.steps : 1;
  rows.reserve(static_cast<std::size_t>(spec.t_range.steps) *
               static_cast<std::size_t>(a_steps));

  std::uint64_t row_index = 0;
  for (int ti = 0; ti < spec.t_range.steps; ++ti) {
    const double t = detail::grid_point(spec.t_range, ti);
    for (int ai = 0; ai < a_steps; ++ai) {
      SweepRow row;
      row.t = t;
      row.dz = spec.dz;
      row.measure = spec.measure;
      if (spec.parametrized) {
        const double a = detail::grid_point(spec.a_range, ai);
        row.a = a;
        row.value = detail::sweep_value(spec, family_state_a(a),
                                        family_state_b(a), t, row_index);
      } else {
        row.a = kFixedPairSentinel;
        row.value = detail::sweep_value(spec, fixed_state_a(), fixed_state_b(),
                                        t, row_index);
      }
      rows.push_back(row);
      ++row_index;
    }
  }
  return rows;
}

// CSV with header `t,a,dz,measure,value`, 12 significant digits, rows in the
// order produced by run_sweep. Reruns of the same spec are byte-identical.
inline void write_csv(const std::vector<SweepRow>& rows,
                      const std::string& path) {
  if (rows.empty()) {
    throw InvalidSpec("rows: refusing to write an empty sweep");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("write_csv: cannot open \"" + path + "\" for writing");
  }
  const auto format = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  out << "t,a,dz,measure,value\n";
  for (const SweepRow& row : rows) {
    out << format(row.t) << ',' << format(row.a) << ',' << format(row.dz)
        << ',' << to_string(row.measure) << ',' << format(row.value) << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("write_csv: failed while writing \"" + path + "\"");
  }
}

}  // namespace qswitch
