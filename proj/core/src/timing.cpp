#include "scgame/timing.hpp"

#include <cmath>
#include <stdexcept>

namespace scg {

namespace {

void check_cfg(const TimingConfig& cfg) {
  if (cfg.omega0 <= 0 || cfg.mass <= 0 || cfg.site_pitch <= 0 ||
      cfg.delta_n_max <= 0 || cfg.tau_meas < 0 || cfg.tau_se_gates < 0 ||
      cfg.aod_switch < 0 || cfg.grid_cols < 1 || cfg.grid_rows < 1 ||
      cfg.buffer_fraction < 0)
    throw std::invalid_argument("timing: config values out of range");
}

int ceil_log2(int x) {
  int b = 0;
  while ((1 << b) < x) ++b;
  return b;
}

}  // namespace

double shuttle_time(double length_m, ShuttleProfile profile, const TimingConfig& cfg) {
  check_cfg(cfg);
  if (!(length_m > 0))
    throw std::invalid_argument("shuttle_time: length must be positive");
  const double ml2 = cfg.mass * length_m * length_m;
  const double w = cfg.omega0;
  switch (profile) {
    case ShuttleProfile::ConstantVelocity:
      return std::sqrt(ml2 / (2.0 * kHbar * w * cfg.delta_n_max));
    case ShuttleProfile::ConstantJerk:
      return std::pow(36.0 * ml2 / (kHbar * w * w * w * cfg.delta_n_max), 0.25);
    case ShuttleProfile::Sta:
      return std::pow(3600.0 * ml2 / (kHbar * std::pow(w, 5) * cfg.delta_n_max),
                      1.0 / 6.0);
  }
  throw std::invalid_argument("shuttle_time: unknown profile");
}

int aod_sort_steps(int d) {
  if (d < 2) throw std::invalid_argument("aod_sort_steps: d must be >= 2");
  return ceil_log2(d) + 1;
}

double hadamard_time(int d, HadamardMethod method, const TimingConfig& cfg) {
  check_cfg(cfg);
  if (d < 2) throw std::invalid_argument("hadamard_time: d must be >= 2");
  const double L = cfg.site_pitch;
  if (method.kind == HadamardMethod::Kind::DirectRotation) {
    // Outermost atom sweeps a quarter arc of radius half the array diagonal;
    // one trap handoff applies the transversal single-qubit layer.
    const double radius = std::numbers::sqrt2 * (d - 1) * L / 2.0;
    const double arc = (std::numbers::pi / 2.0) * radius;
    double t = shuttle_time(arc, cfg.profile, cfg) + cfg.aod_switch;
    return method.space_efficient ? 2.0 * t : t;
  }
  // Reflection sort: each pass moves at most a full array width.
  double t = aod_sort_steps(d) * shuttle_time(d * L, cfg.profile, cfg);
  return method.space_efficient ? 2.0 * t : t;
}

double fold_transversal_s_time(int d, bool space_efficient, const TimingConfig& cfg) {
  check_cfg(cfg);
  if (d < 2) throw std::invalid_argument("fold_transversal_s_time: d must be >= 2");
  // The fold reflects the doubled mid-cycle array (2d-1 sites per side)
  // about its main diagonal. Log-depth reflection passes with legs up to the
  // far-corner distance, and the atoms shuttle back afterwards.
  const double leg = std::numbers::sqrt2 * (d - 1) * cfg.site_pitch;
  const int passes = ceil_log2(2 * d - 1) + 1;
  double t = 2.0 * passes * shuttle_time(leg, cfg.profile, cfg);
  return space_efficient ? 2.0 * t : t;
}

double se_shuttle_gates_time(int d, const TimingConfig& cfg) {
  check_cfg(cfg);
  if (d < 2) throw std::invalid_argument("se_shuttle_gates_time: d must be >= 2");
  // Syndrome array shuttles across the block and back, plus four
  // plaquette-step legs for the entangling rounds.
  const double L = cfg.site_pitch;
  return 2.0 * shuttle_time(d * L, cfg.profile, cfg) +
         4.0 * shuttle_time(std::numbers::sqrt2 * L, cfg.profile, cfg);
}

DurationTable mode_durations(int d, const TimingConfig& cfg) {
  check_cfg(cfg);
  if (d < 2) throw std::invalid_argument("mode_durations: d must be >= 2");
  DurationTable t;
  t.d = d;
  t.cfg = cfg;
  t.tau_se = cfg.tau_se_gates + cfg.tau_meas;
  t.tau_cx = 2.0 * shuttle_time(d * cfg.site_pitch, cfg.profile, cfg);
  t.tau_h = hadamard_time(d, HadamardMethod{}, cfg);
  t.tau_mx = cfg.tau_meas;
  t.tau_mz = cfg.tau_meas;
  t.tau_prep0 = 2.0 * t.tau_se;
  t.tau_prep_plus = 2.0 * t.tau_se;
  const double pitch = t.cell_pitch();
  t.tau_swap = shuttle_time(pitch, cfg.profile, cfg);

  // Mean route: horizontal leg then vertical leg, averaged over ordered
  // pairs of distinct cells.
  double sum = 0.0;
  long pairs = 0;
  auto leg = [&](int delta) {
    return delta == 0
               ? 0.0
               : shuttle_time(delta * pitch, cfg.profile, cfg);
  };
  for (int c1 = 0; c1 < cfg.grid_cols; ++c1)
    for (int r1 = 0; r1 < cfg.grid_rows; ++r1)
      for (int c2 = 0; c2 < cfg.grid_cols; ++c2)
        for (int r2 = 0; r2 < cfg.grid_rows; ++r2) {
          if (c1 == c2 && r1 == r2) continue;
          sum += leg(std::abs(c1 - c2)) + leg(std::abs(r1 - r2));
          ++pairs;
        }
  t.tau_r = pairs > 0 ? sum / pairs : 0.0;
  return t;
}

DurationTable pinned_durations() {
  DurationTable t;
  t.d = 9;
  t.cfg = TimingConfig{};
  t.tau_se = 120e-6;
  t.tau_cx = 150e-6;
  t.tau_h = 90e-6;
  t.tau_mx = 100e-6;
  t.tau_mz = 100e-6;
  t.tau_r = 220e-6;
  t.tau_prep0 = 240e-6;
  t.tau_prep_plus = 240e-6;
  t.tau_swap = shuttle_time(t.cell_pitch(), t.cfg.profile, t.cfg);
  return t;
}

}  // namespace scg
