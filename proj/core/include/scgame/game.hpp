#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scgame/timing.hpp"

namespace scg {

// Cell modes. A cell is one surface-code patch position of the grid; Empty
// positions are tracked as cells so swaps and preparations stay local.
enum class Mode { Empty, Idle, Se, Cx, H, Mx, Mz, Prep0, PrepPlus, PrepT, PrepY, PrepPhi };

enum class Rule { R1, R2, R3, R4, R5, R6 };

const char* mode_name(Mode m);
const char* rule_name(Rule r);

enum class PrepState { Zero, Plus, T, Y, Phi };

Mode prep_mode(PrepState s);

struct Cell {
  int id = -1;
  int col = 0;
  int row = 0;
  Mode mode = Mode::Empty;
  double acc_error = 0.0;
  // Set while a gate sits interrupted in SE; names the mode to resume.
  std::optional<Mode> suspended;
  // CX partner position while the pair is mid-gate.
  std::optional<std::pair<int, int>> partner;
  // Factory-overlap cells skip the CX return leg.
  bool factory_member = false;
};

struct Factory {
  PrepState product = PrepState::T;
  std::vector<std::pair<int, int>> cells;  // footprint; outputs appear adjacent
};

struct GridState {
  int cols = 0;
  int rows = 0;
  std::vector<Cell> cells;  // row-major
  std::vector<Factory> factories;

  bool in_bounds(int col, int row) const {
    return col >= 0 && col < cols && row >= 0 && row < rows;
  }
  Cell& at(int col, int row);
  const Cell& at(int col, int row) const;
  bool factory_adjacent(int col, int row, PrepState product) const;
};

GridState make_grid(int cols, int rows);

struct GameConfig {
  double p_budget = 0.01;
  // Accumulation rates per second while a cell sits in the given mode.
  double rate_idle = 10.0;
  double rate_h = 10.0;
  double rate_cx = 10.0;
  int se_rounds = 1;
  // Error parameter added when a preparation completes.
  double prep_error_zero = 1e-3;
  double prep_error_plus = 1e-3;
  double prep_error_t = 1e-3;
  double prep_error_y = 1e-3;
  double prep_error_phi = 1e-3;
  // Stand-in durations for factory-backed preparations at game level.
  double prep_t_seconds = 3.4e-3;
  double prep_y_seconds = 1.1e-3;
  double prep_phi_seconds = 2.0e-3;
};

void validate_config(const GameConfig& cfg);

struct Violation {
  enum class Kind { Rule, BudgetInfeasible, Parse };
  Kind kind = Kind::Rule;
  std::optional<Rule> rule;
  std::string detail;
  int line = -1;  // schedule line when known
};

struct TransitionContext {
  std::optional<std::pair<int, int>> partner;  // required for entering Cx
};

struct TransitionResult {
  bool ok = false;
  std::optional<Violation> violation;
};

// Checks a single mode change of the cell at (col,row) against the rules;
// pure, no state update.
TransitionResult validate_transition(const GridState& grid, int col, int row,
                                     Mode to, const TransitionContext& ctx = {});

enum class OpKind { Prep, Se, H, Cx, Route, Mx, Mz };

struct Op {
  OpKind kind = OpKind::Se;
  int col = 0, row = 0;
  int col2 = 0, row2 = 0;           // cx partner or route destination
  PrepState state = PrepState::Zero;
  double not_before = 0.0;          // earliest start, seconds
  bool timed = false;
  int line = -1;
};

using Schedule = std::vector<Op>;

// Line format: "[time] op args" with coordinates "col row", ops
// prep/se/h/cx/route/mx/mz, prep states zero|plus|t|y|phi. '#' comments.
Schedule parse_schedule(std::istream& in);
Schedule parse_schedule_file(const std::string& path);
std::string format_schedule(const Schedule& sched);

struct TimelineEvent {
  enum class Kind { Transition, Move };
  Kind kind = Kind::Transition;
  double time = 0.0;
  int cell_id = -1;
  int col = 0, row = 0;       // position when the event commits (origin for moves)
  Mode from = Mode::Empty, to = Mode::Empty;
  int to_col = 0, to_row = 0; // move destination
  double acc_after = 0.0;
  bool auto_inserted = false; // SE the engine interposed for the budget
};

struct Timeline {
  std::vector<TimelineEvent> events;  // sorted by (time, emission order)
  GridState final_grid;
  double makespan = 0.0;
  std::map<int, int> se_entries;       // per cell id, explicit + inserted
  std::map<int, int> auto_se_entries;  // inserted only
};

struct RunResult {
  std::optional<Timeline> timeline;
  std::optional<Violation> violation;
  bool ok() const { return timeline.has_value(); }
};

// Executes the schedule with per-cell sequencing. Accumulated error grows at
// the configured rates in Idle/H/Cx (CX partners contribute to each other),
// and the engine interposes SE whenever the next uninterruptible step would
// push a cell past p_budget. Splitting points: shuttle legs for H and CX,
// cell-pitch steps for routing, anywhere while idling.
RunResult run_schedule(GridState grid, const Schedule& sched,
                       const GameConfig& cfg, const DurationTable& durations);

}  // namespace scg
