#pragma once

// Discrete-event models of the magic-state factories.
//
// The T factory runs the distillation block as a conveyor clocked by the
// routing step tau_mv = tau_cx/2 + tau_se: buffer-load steps, one feed step
// per remaining data qubit, then a tail step that clears the block. Each
// feed consumes one injected state from the measurement block, whose n_mb
// cells each take tau_inject + tau_cx + tau_meas per state and run
// staggered. A feed whose state is not ready yet stalls the conveyor;
// decoding itself never blocks a step. The reorder option overlaps the last
// two buffer loads with the first feeds.
//
// The Y factory is two cells: prepare |+>, then three clocked gate slots of
// max(tau_cx, tau_meas) + tau_se each.

#include <string>
#include <vector>

#include "scgame/css_code.hpp"
#include "scgame/game.hpp"
#include "scgame/timing.hpp"

namespace scg {

struct FactoryConfig {
  StabilizerTable code;
  int n_mb = 4;              // measurement-block cells
  bool reorder = true;       // overlap tail of the buffer load with feeds
  DurationTable timing;
  double tau_inject = -1.0;  // seconds; < 0 derives 4 * tau_se

  static FactoryConfig defaults();
};

struct FactoryStep {
  enum class Kind { Head, Feed, Tail };
  Kind kind = Kind::Head;
  int index = 0;
  double start = 0;     // seconds
  double duration = 0;  // tau_mv
  double wait = 0;      // stall before the step could begin
};

struct FactoryReport {
  double total_seconds = 0;
  double tau_mv = 0;
  double cell_cycle = 0;  // injection cell service time
  int steps = 0;
  int stalled_steps = 0;
  int states_consumed = 0;
  std::vector<FactoryStep> trace;
};

FactoryReport simulate_t_factory(const FactoryConfig& cfg);

struct YFactoryReport {
  double total_seconds = 0;
  double prep_seconds = 0;
  double slot_seconds = 0;  // per gate slot
  int slots = 0;
  std::vector<std::string> slot_gates;
  Schedule schedule;  // two-cell realization, replayable on the grid
};

YFactoryReport simulate_y_factory(const DurationTable& timing);

// Magic states delivered per logical cycle by n parallel factories.
double aggregate_throughput(int n_factories, double tau_factory_seconds,
                            double tau_cycle_seconds);

}  // namespace scg
