#include "scgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scg {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Empty: return "Empty";
    case Mode::Idle: return "Idle";
    case Mode::Se: return "SE";
    case Mode::Cx: return "CX";
    case Mode::H: return "H";
    case Mode::Mx: return "MX";
    case Mode::Mz: return "MZ";
    case Mode::Prep0: return "Prep0";
    case Mode::PrepPlus: return "Prep+";
    case Mode::PrepT: return "PrepT";
    case Mode::PrepY: return "PrepY";
    case Mode::PrepPhi: return "PrepPhi";
  }
  return "?";
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6: return "R6";
  }
  return "?";
}

Mode prep_mode(PrepState s) {
  switch (s) {
    case PrepState::Zero: return Mode::Prep0;
    case PrepState::Plus: return Mode::PrepPlus;
    case PrepState::T: return Mode::PrepT;
    case PrepState::Y: return Mode::PrepY;
    case PrepState::Phi: return Mode::PrepPhi;
  }
  return Mode::Prep0;
}

Cell& GridState::at(int col, int row) {
  if (!in_bounds(col, row)) throw std::out_of_range("GridState::at");
  return cells[static_cast<std::size_t>(row) * cols + col];
}

const Cell& GridState::at(int col, int row) const {
  if (!in_bounds(col, row)) throw std::out_of_range("GridState::at");
  return cells[static_cast<std::size_t>(row) * cols + col];
}

bool GridState::factory_adjacent(int col, int row, PrepState product) const {
  for (const auto& f : factories) {
    if (f.product != product) continue;
    for (auto [fc, fr] : f.cells)
      if (std::abs(fc - col) + std::abs(fr - row) == 1) return true;
  }
  return false;
}

GridState make_grid(int cols, int rows) {
  if (cols < 1 || rows < 1) throw std::invalid_argument("make_grid: bad size");
  GridState g;
  g.cols = cols;
  g.rows = rows;
  g.cells.resize(static_cast<std::size_t>(cols) * rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Cell& cell = g.cells[static_cast<std::size_t>(r) * cols + c];
      cell.id = r * cols + c;
      cell.col = c;
      cell.row = r;
    }
  return g;
}

void validate_config(const GameConfig& cfg) {
  if (!(cfg.p_budget > 0)) throw std::invalid_argument("game config: p_budget must be positive");
  if (cfg.rate_idle < 0 || cfg.rate_h < 0 || cfg.rate_cx < 0)
    throw std::invalid_argument("game config: rates must be non-negative");
  if (cfg.se_rounds < 1) throw std::invalid_argument("game config: se_rounds must be >= 1");
  for (double e : {cfg.prep_error_zero, cfg.prep_error_plus, cfg.prep_error_t,
                   cfg.prep_error_y, cfg.prep_error_phi})
    if (e < 0 || e >= cfg.p_budget)
      throw std::invalid_argument("game config: prep errors must lie in [0, p_budget)");
  if (cfg.prep_t_seconds < 0 || cfg.prep_y_seconds < 0 || cfg.prep_phi_seconds < 0)
    throw std::invalid_argument("game config: prep durations must be non-negative");
}

namespace {

bool is_prep(Mode m) {
  return m == Mode::Prep0 || m == Mode::PrepPlus || m == Mode::PrepT ||
         m == Mode::PrepY || m == Mode::PrepPhi;
}

bool is_measure(Mode m) { return m == Mode::Mx || m == Mode::Mz; }

TransitionResult breach(Rule r, std::string detail) {
  return TransitionResult{false, Violation{Violation::Kind::Rule, r, std::move(detail), -1}};
}

}  // namespace

TransitionResult validate_transition(const GridState& grid, int col, int row,
                                     Mode to, const TransitionContext& ctx) {
  if (!grid.in_bounds(col, row))
    return TransitionResult{
        false, Violation{Violation::Kind::Parse, std::nullopt,
                         "cell position out of bounds", -1}};
  const Cell& c = grid.at(col, row);
  const Mode from = c.mode;

  if (from == Mode::Empty) {
    if (to == Mode::Prep0 || to == Mode::PrepPlus) return {true, std::nullopt};
    if (to == Mode::PrepT || to == Mode::PrepY || to == Mode::PrepPhi) {
      PrepState product = to == Mode::PrepT   ? PrepState::T
                          : to == Mode::PrepY ? PrepState::Y
                                              : PrepState::Phi;
      if (grid.factory_adjacent(col, row, product)) return {true, std::nullopt};
      return breach(Rule::R1,
                    std::string("preparation of ") + mode_name(to) +
                        " requires an adjacent matching factory");
    }
    return breach(Rule::R1, std::string("an Empty cell cannot enter ") + mode_name(to) +
                                "; it must be prepared first");
  }
  if (is_prep(from)) {
    if (to == Mode::Idle) return {true, std::nullopt};
    return breach(Rule::R1, std::string("a preparing cell settles to Idle, not ") +
                                mode_name(to));
  }
  if (from == Mode::Idle) {
    switch (to) {
      case Mode::Se: return {true, std::nullopt};
      case Mode::H: return {true, std::nullopt};
      case Mode::Cx: {
        if (!ctx.partner)
          return breach(Rule::R4, "CX requires a partner cell");
        auto [pc, pr] = *ctx.partner;
        if (!grid.in_bounds(pc, pr))
          return breach(Rule::R4, "CX partner out of bounds");
        if (std::abs(pc - col) + std::abs(pr - row) != 1)
          return breach(Rule::R4, "CX cells must be adjacent");
        Mode pm = grid.at(pc, pr).mode;
        if (pm != Mode::Idle && pm != Mode::Cx)
          return breach(Rule::R4, std::string("CX partner is ") + mode_name(pm) +
                                      ", not Idle");
        return {true, std::nullopt};
      }
      case Mode::Mx:
      case Mode::Mz: return {true, std::nullopt};
      case Mode::Empty:
        return breach(Rule::R6, "cells become Empty only through measurement");
      case Mode::Prep0:
      case Mode::PrepPlus:
      case Mode::PrepT:
      case Mode::PrepY:
      case Mode::PrepPhi:
        return breach(Rule::R1, "preparation starts from an Empty cell");
      default:
        return breach(Rule::R2, "no-op transition");
    }
  }
  if (from == Mode::Se) {
    if (to == Mode::Idle) return {true, std::nullopt};
    if (to == Mode::H) {
      if (c.suspended == Mode::H) return {true, std::nullopt};
      return breach(Rule::R3, "SE can resume H only for a cell split mid-H");
    }
    if (to == Mode::Cx) {
      if (c.suspended == Mode::Cx) return {true, std::nullopt};
      return breach(Rule::R4, "SE can resume CX only for a cell split mid-CX");
    }
    return breach(Rule::R2, std::string("SE completes to Idle or its interrupted gate, not ") +
                                mode_name(to));
  }
  if (from == Mode::H) {
    if (to == Mode::Se || to == Mode::Idle) return {true, std::nullopt};
    return breach(Rule::R3, std::string("H finishes to Idle or splits into SE, not ") +
                                mode_name(to));
  }
  if (from == Mode::Cx) {
    if (to == Mode::Se || to == Mode::Idle) return {true, std::nullopt};
    return breach(Rule::R4, std::string("CX finishes to Idle or splits into SE, not ") +
                                mode_name(to));
  }
  // Measurements.
  if (to == Mode::Empty) return {true, std::nullopt};
  return breach(Rule::R6, std::string("a measured cell empties; it cannot enter ") +
                              mode_name(to));
}

namespace {

// Relative slack on the budget comparison so that "reaches the budget
// exactly at a boundary" never counts as a crossing.
constexpr double kBudgetSlack = 1e-9;

class Engine {
 public:
  Engine(GridState grid, const Schedule& sched, const GameConfig& cfg,
         const DurationTable& dur)
      : grid_(std::move(grid)), sched_(sched), cfg_(cfg), dur_(dur) {
    free_.assign(grid_.cells.size(), 0.0);
  }

  RunResult run() {
    validate_config(cfg_);
    for (const Op& op : sched_) {
      switch (op.kind) {
        case OpKind::Prep: do_prep(op); break;
        case OpKind::Se: do_se(op); break;
        case OpKind::H: do_h(op); break;
        case OpKind::Cx: do_cx(op); break;
        case OpKind::Route: do_route(op); break;
        case OpKind::Mx: do_measure(op, Mode::Mx); break;
        case OpKind::Mz: do_measure(op, Mode::Mz); break;
      }
      if (fail_) return RunResult{std::nullopt, fail_};
    }
    Timeline tl;
    tl.events = std::move(events_);
    std::stable_sort(tl.events.begin(), tl.events.end(),
                     [](const TimelineEvent& a, const TimelineEvent& b) {
                       return a.time < b.time;
                     });
    for (const auto& ev : tl.events) {
      tl.makespan = std::max(tl.makespan, ev.time);
      if (ev.kind == TimelineEvent::Kind::Transition && ev.to == Mode::Se) {
        ++tl.se_entries[ev.cell_id];
        if (ev.auto_inserted) ++tl.auto_se_entries[ev.cell_id];
      }
    }
    for (double f : free_) tl.makespan = std::max(tl.makespan, f);
    tl.final_grid = std::move(grid_);
    return RunResult{std::move(tl), std::nullopt};
  }

 private:
  GridState grid_;
  const Schedule& sched_;
  const GameConfig& cfg_;
  const DurationTable& dur_;
  std::vector<double> free_;
  std::vector<TimelineEvent> events_;
  std::optional<Violation> fail_;

  double se_total() const { return dur_.tau_se * cfg_.se_rounds; }
  double budget_cap() const { return cfg_.p_budget * (1.0 + kBudgetSlack); }

  bool bounds_ok(const Op& op, int col, int row) {
    if (grid_.in_bounds(col, row)) return true;
    fail_ = Violation{Violation::Kind::Parse, std::nullopt,
                      "cell position out of bounds", op.line};
    return false;
  }

  // Validates and applies a mode change, emitting the event. Returns false
  // and records the violation when the rules forbid it.
  bool commit(double t, Cell& c, Mode to, const TransitionContext& ctx,
              int line, bool auto_inserted) {
    auto res = validate_transition(grid_, c.col, c.row, to, ctx);
    if (!res.ok) {
      fail_ = res.violation;
      fail_->line = line;
      return false;
    }
    Mode from = c.mode;
    if ((from == Mode::H || from == Mode::Cx) && to == Mode::Se)
      c.suspended = from;
    if (from == Mode::Se) {
      c.acc_error = 0.0;  // the decoder consumed the syndrome record
      if (c.suspended && to == *c.suspended) c.suspended.reset();
    }
    if (is_measure(from) && to == Mode::Empty) {
      c.acc_error = 0.0;
      c.partner.reset();
      c.suspended.reset();
    }
    c.mode = to;
    TimelineEvent ev;
    ev.kind = TimelineEvent::Kind::Transition;
    ev.time = t;
    ev.cell_id = c.id;
    ev.col = c.col;
    ev.row = c.row;
    ev.from = from;
    ev.to = to;
    ev.acc_after = c.acc_error;
    ev.auto_inserted = auto_inserted;
    events_.push_back(ev);
    return true;
  }

  // Full in-place SE (pair of transitions); also used for interpositions.
  bool insert_se(Cell& c, double& t, int line, bool auto_inserted) {
    if (!commit(t, c, Mode::Se, {}, line, auto_inserted)) return false;
    t += se_total();
    Mode resume = c.suspended.value_or(Mode::Idle);
    return commit(t, c, resume, restore_ctx(c), line, auto_inserted);
  }

  TransitionContext restore_ctx(const Cell& c) const {
    TransitionContext ctx;
    if (c.suspended == Mode::Cx) ctx.partner = c.partner;
    return ctx;
  }

  // Brings an Idle (or Empty) cell's clock to at least `target`, accruing
  // idle error and interposing SE at budget crossings. Crossing exactly at
  // `target` does not trigger an SE.
  double advance_idle(Cell& c, double target, int line) {
    double t = free_[c.id];
    if (t >= target) return t;
    if (c.mode != Mode::Idle || cfg_.rate_idle <= 0) {
      free_[c.id] = target;
      return target;
    }
    while (t < target) {
      double window = target - t;
      double projected = c.acc_error + cfg_.rate_idle * window;
      if (projected > budget_cap()) {
        double ttb = (cfg_.p_budget - c.acc_error) / cfg_.rate_idle;
        t += ttb;
        c.acc_error = cfg_.p_budget;
        if (!insert_se(c, t, line, true)) return t;
      } else {
        c.acc_error = std::min(projected, cfg_.p_budget);
        t = target;
      }
    }
    free_[c.id] = t;
    return t;
  }

  double prep_duration(PrepState s) const {
    switch (s) {
      case PrepState::Zero: return dur_.tau_prep0;
      case PrepState::Plus: return dur_.tau_prep_plus;
      case PrepState::T: return cfg_.prep_t_seconds;
      case PrepState::Y: return cfg_.prep_y_seconds;
      case PrepState::Phi: return cfg_.prep_phi_seconds;
    }
    return 0.0;
  }

  double prep_error(PrepState s) const {
    switch (s) {
      case PrepState::Zero: return cfg_.prep_error_zero;
      case PrepState::Plus: return cfg_.prep_error_plus;
      case PrepState::T: return cfg_.prep_error_t;
      case PrepState::Y: return cfg_.prep_error_y;
      case PrepState::Phi: return cfg_.prep_error_phi;
    }
    return 0.0;
  }

  void do_prep(const Op& op) {
    if (!bounds_ok(op, op.col, op.row)) return;
    Cell& c = grid_.at(op.col, op.row);
    double t = std::max(free_[c.id], op.not_before);
    if (!commit(t, c, prep_mode(op.state), {}, op.line, false)) return;
    t += prep_duration(op.state);
    if (!commit(t, c, Mode::Idle, {}, op.line, false)) return;
    c.acc_error = prep_error(op.state);
    events_.back().acc_after = c.acc_error;
    free_[c.id] = t;
  }

  void do_se(const Op& op) {
    if (!bounds_ok(op, op.col, op.row)) return;
    Cell& c = grid_.at(op.col, op.row);
    double t = advance_idle(c, op.not_before, op.line);
    if (fail_) return;
    if (!insert_se(c, t, op.line, false)) return;
    free_[c.id] = t;
  }

  void do_h(const Op& op) {
    if (!bounds_ok(op, op.col, op.row)) return;
    Cell& c = grid_.at(op.col, op.row);
    double t = advance_idle(c, op.not_before, op.line);
    if (fail_) return;
    if (!commit(t, c, Mode::H, {}, op.line, false)) return;
    // Rotation ramp, then the transversal gate layer at the trap handoff.
    const double legs[2] = {std::max(dur_.tau_h - dur_.cfg.aod_switch, 0.0),
                            std::min(dur_.cfg.aod_switch, dur_.tau_h)};
    for (double leg : legs) {
      if (leg <= 0) continue;
      double inc = cfg_.rate_h * leg;
      if (inc > budget_cap()) {
        fail_ = Violation{Violation::Kind::BudgetInfeasible, std::nullopt,
                          "one H leg alone exceeds the error budget", op.line};
        return;
      }
      if (c.acc_error + inc > budget_cap()) {
        if (!insert_se(c, t, op.line, true)) return;
      }
      c.acc_error += inc;
      t += leg;
    }
    if (!commit(t, c, Mode::Idle, {}, op.line, false)) return;
    free_[c.id] = t;
  }

  void do_cx(const Op& op) {
    if (!bounds_ok(op, op.col, op.row) || !bounds_ok(op, op.col2, op.row2)) return;
    if (op.col == op.col2 && op.row == op.row2) {
      fail_ = Violation{Violation::Kind::Rule, Rule::R4,
                        "CX requires two distinct cells", op.line};
      return;
    }
    Cell& a = grid_.at(op.col, op.row);
    Cell& b = grid_.at(op.col2, op.row2);
    double t = std::max({op.not_before, free_[a.id], free_[b.id]});
    // Idle both cells up to a common start; an interposed SE on one side
    // extends the other side's wait.
    while (true) {
      double ta = advance_idle(a, t, op.line);
      if (fail_) return;
      double tb = advance_idle(b, t, op.line);
      if (fail_) return;
      double t2 = std::max(ta, tb);
      if (t2 <= t) break;
      t = t2;
    }
    TransitionContext ctx_a{std::make_pair(b.col, b.row)};
    TransitionContext ctx_b{std::make_pair(a.col, a.row)};
    if (!commit(t, a, Mode::Cx, ctx_a, op.line, false)) return;
    if (!commit(t, b, Mode::Cx, ctx_b, op.line, false)) return;
    a.partner = {b.col, b.row};
    b.partner = {a.col, a.row};
    // Factory-overlap pairs skip the return leg.
    const int n_legs = (a.factory_member || b.factory_member) ? 1 : 2;
    const double leg = dur_.tau_cx / 2.0;
    for (int i = 0; i < n_legs; ++i) {
      // Both cells accrue their own and the partner's gate-mode rate.
      double inc = 2.0 * cfg_.rate_cx * leg;
      if (inc > budget_cap()) {
        fail_ = Violation{Violation::Kind::BudgetInfeasible, std::nullopt,
                          "one CX leg alone exceeds the error budget", op.line};
        return;
      }
      if (std::max(a.acc_error, b.acc_error) + inc > budget_cap()) {
        // The pair splits together.
        if (!commit(t, a, Mode::Se, {}, op.line, true)) return;
        if (!commit(t, b, Mode::Se, {}, op.line, true)) return;
        t += se_total();
        if (!commit(t, a, Mode::Cx, restore_ctx(a), op.line, true)) return;
        if (!commit(t, b, Mode::Cx, restore_ctx(b), op.line, true)) return;
      }
      a.acc_error += inc;
      b.acc_error += inc;
      t += leg;
    }
    if (!commit(t, a, Mode::Idle, {}, op.line, false)) return;
    if (!commit(t, b, Mode::Idle, {}, op.line, false)) return;
    a.partner.reset();
    b.partner.reset();
    free_[a.id] = t;
    free_[b.id] = t;
  }

  void do_measure(const Op& op, Mode basis) {
    if (!bounds_ok(op, op.col, op.row)) return;
    Cell& c = grid_.at(op.col, op.row);
    double t = advance_idle(c, op.not_before, op.line);
    if (fail_) return;
    if (!commit(t, c, basis, {}, op.line, false)) return;
    t += (basis == Mode::Mx) ? dur_.tau_mx : dur_.tau_mz;
    if (!commit(t, c, Mode::Empty, {}, op.line, false)) return;
    free_[c.id] = t;
  }

  void do_route(const Op& op) {
    if (!bounds_ok(op, op.col, op.row) || !bounds_ok(op, op.col2, op.row2)) return;
    {
      const Cell& c0 = grid_.at(op.col, op.row);
      if (c0.mode != Mode::Idle) {
        fail_ = Violation{Violation::Kind::Rule, Rule::R5,
                          std::string("route requires an Idle cell, found ") +
                              mode_name(c0.mode),
                          op.line};
        return;
      }
    }
    double t = advance_idle(grid_.at(op.col, op.row), op.not_before, op.line);
    if (fail_) return;
    int cc = op.col, cr = op.row;
    auto step_to = [&](int nc, int nr) -> bool {
      Cell& mover = grid_.at(cc, cr);
      Cell& target = grid_.at(nc, nr);
      // The lane may still be in use; idle in place until it clears.
      if (free_[target.id] > t) {
        free_[mover.id] = t;
        t = advance_idle(mover, free_[target.id], op.line);
        if (fail_) return false;
      }
      if (target.mode != Mode::Empty) {
        fail_ = Violation{Violation::Kind::Rule, Rule::R5,
                          "swap target (" + std::to_string(nc) + "," +
                              std::to_string(nr) + ") is not Empty",
                          op.line};
        return false;
      }
      double inc = cfg_.rate_idle * dur_.tau_swap;
      if (inc > budget_cap()) {
        fail_ = Violation{Violation::Kind::BudgetInfeasible, std::nullopt,
                          "one routing step alone exceeds the error budget",
                          op.line};
        return false;
      }
      if (mover.acc_error + inc > budget_cap()) {
        if (!insert_se(mover, t, op.line, true)) return false;
      }
      mover.acc_error = std::min(mover.acc_error + inc, cfg_.p_budget);
      t += dur_.tau_swap;
      TimelineEvent ev;
      ev.kind = TimelineEvent::Kind::Move;
      ev.time = t;
      ev.cell_id = mover.id;
      ev.col = cc;
      ev.row = cr;
      ev.to_col = nc;
      ev.to_row = nr;
      ev.acc_after = mover.acc_error;
      events_.push_back(ev);
      // Swap the structs and restore position fields.
      std::swap(grid_.at(cc, cr), grid_.at(nc, nr));
      grid_.at(cc, cr).col = cc;
      grid_.at(cc, cr).row = cr;
      grid_.at(nc, nr).col = nc;
      grid_.at(nc, nr).row = nr;
      free_[grid_.at(cc, cr).id] = t;
      free_[grid_.at(nc, nr).id] = t;
      cc = nc;
      cr = nr;
      return true;
    };
    // Horizontal leg first, then vertical.
    while (cc != op.col2) {
      if (!step_to(cc + (op.col2 > cc ? 1 : -1), cr)) return;
    }
    while (cr != op.row2) {
      if (!step_to(cc, cr + (op.row2 > cr ? 1 : -1))) return;
    }
  }
};

}  // namespace

RunResult run_schedule(GridState grid, const Schedule& sched,
                       const GameConfig& cfg, const DurationTable& durations) {
  Engine engine(std::move(grid), sched, cfg, durations);
  return engine.run();
}

namespace {

std::optional<PrepState> parse_prep_state(const std::string& s) {
  if (s == "0" || s == "zero") return PrepState::Zero;
  if (s == "+" || s == "plus") return PrepState::Plus;
  if (s == "t") return PrepState::T;
  if (s == "y") return PrepState::Y;
  if (s == "phi") return PrepState::Phi;
  return std::nullopt;
}

const char* prep_state_name(PrepState s) {
  switch (s) {
    case PrepState::Zero: return "zero";
    case PrepState::Plus: return "plus";
    case PrepState::T: return "t";
    case PrepState::Y: return "y";
    case PrepState::Phi: return "phi";
  }
  return "?";
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("schedule line " + std::to_string(line) + ": " + what);
}

}  // namespace

Schedule parse_schedule(std::istream& in) {
  Schedule sched;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;

    Op op;
    op.line = lineno;
    std::size_t i = 0;
    // A leading numeric token is a start-time constraint.
    {
      char* end = nullptr;
      double v = std::strtod(tok[0].c_str(), &end);
      if (end && *end == '\0' && end != tok[0].c_str()) {
        if (v < 0) parse_fail(lineno, "negative start time");
        op.not_before = v;
        op.timed = true;
        i = 1;
      }
    }
    if (i >= tok.size()) parse_fail(lineno, "missing operation");
    const std::string& name = tok[i++];
    auto need_ints = [&](int count) {
      std::vector<int> vals;
      for (int j = 0; j < count; ++j) {
        if (i >= tok.size()) parse_fail(lineno, "missing argument for " + name);
        try {
          std::size_t used = 0;
          int v = std::stoi(tok[i], &used);
          if (used != tok[i].size()) throw std::invalid_argument("");
          vals.push_back(v);
        } catch (const std::exception&) {
          parse_fail(lineno, "bad integer '" + tok[i] + "'");
        }
        ++i;
      }
      return vals;
    };

    if (name == "prep") {
      auto v = need_ints(2);
      op.kind = OpKind::Prep;
      op.col = v[0];
      op.row = v[1];
      if (i >= tok.size()) parse_fail(lineno, "prep needs a state");
      auto st = parse_prep_state(tok[i]);
      if (!st) parse_fail(lineno, "unknown prep state '" + tok[i] + "'");
      op.state = *st;
      ++i;
    } else if (name == "se" || name == "h" || name == "mx" || name == "mz") {
      auto v = need_ints(2);
      op.kind = name == "se" ? OpKind::Se
                : name == "h" ? OpKind::H
                : name == "mx" ? OpKind::Mx
                               : OpKind::Mz;
      op.col = v[0];
      op.row = v[1];
    } else if (name == "cx" || name == "route") {
      auto v = need_ints(4);
      op.kind = name == "cx" ? OpKind::Cx : OpKind::Route;
      op.col = v[0];
      op.row = v[1];
      op.col2 = v[2];
      op.row2 = v[3];
    } else {
      parse_fail(lineno, "unknown operation '" + name + "'");
    }
    if (i != tok.size()) parse_fail(lineno, "trailing tokens");
    sched.push_back(op);
  }
  return sched;
}

Schedule parse_schedule_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open schedule file: " + path);
  return parse_schedule(f);
}

std::string format_schedule(const Schedule& sched) {
  std::ostringstream out;
  for (const Op& op : sched) {
    if (op.timed) {
      std::ostringstream ts;
      ts.precision(12);
      ts << op.not_before;
      out << ts.str() << ' ';
    }
    switch (op.kind) {
      case OpKind::Prep:
        out << "prep " << op.col << ' ' << op.row << ' ' << prep_state_name(op.state);
        break;
      case OpKind::Se: out << "se " << op.col << ' ' << op.row; break;
      case OpKind::H: out << "h " << op.col << ' ' << op.row; break;
      case OpKind::Mx: out << "mx " << op.col << ' ' << op.row; break;
      case OpKind::Mz: out << "mz " << op.col << ' ' << op.row; break;
      case OpKind::Cx:
        out << "cx " << op.col << ' ' << op.row << ' ' << op.col2 << ' ' << op.row2;
        break;
      case OpKind::Route:
        out << "route " << op.col << ' ' << op.row << ' ' << op.col2 << ' ' << op.row2;
        break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace scg
