#include "scgame/factory_sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace scg {

FactoryConfig FactoryConfig::defaults() {
  FactoryConfig cfg;
  cfg.code = reed_muller15();
  cfg.timing = pinned_durations();
  return cfg;
}

FactoryReport simulate_t_factory(const FactoryConfig& cfg) {
  const StabilizerTable& code = cfg.code;
  if (code.n < 3 || code.k < 1 || code.m_x() < 1)
    throw std::invalid_argument("factory: need a distillation code");
  if (cfg.n_mb < 1) throw std::invalid_argument("factory: n_mb < 1");
  const DurationTable& tm = cfg.timing;
  if (tm.tau_cx <= 0 || tm.tau_se <= 0)
    throw std::invalid_argument("factory: timing not initialized");

  const double tau_mv = tm.tau_cx / 2.0 + tm.tau_se;
  const double tau_inject = cfg.tau_inject < 0 ? 4.0 * tm.tau_se : cfg.tau_inject;
  const double tau_meas = std::max(tm.tau_mx, tm.tau_mz);
  const double cell_cycle = tau_inject + tm.tau_cx + tau_meas;

  const int head = code.m_x() + code.k;
  const int feeds = code.n - code.m_x();
  const int overlap = cfg.reorder ? std::min(2, head - 1) : 0;
  const int head_steps = head - overlap;
  const int total_steps = head_steps + feeds + 1;

  FactoryReport rep;
  rep.tau_mv = tau_mv;
  rep.cell_cycle = cell_cycle;
  rep.steps = total_steps;
  rep.states_consumed = feeds;

  double t = 0;
  for (int s = 0; s < total_steps; ++s) {
    FactoryStep step;
    step.index = s;
    step.duration = tau_mv;
    if (s < head_steps) {
      step.kind = FactoryStep::Kind::Head;
    } else if (s < head_steps + feeds) {
      step.kind = FactoryStep::Kind::Feed;
      const int feed_index = s - head_steps;
      const double ready = (feed_index + 1) * cell_cycle / cfg.n_mb;
      if (ready > t) {
        step.wait = ready - t;
        ++rep.stalled_steps;
      }
    } else {
      step.kind = FactoryStep::Kind::Tail;
    }
    step.start = t + step.wait;
    t = step.start + tau_mv;
    rep.trace.push_back(step);
  }
  rep.total_seconds = t;
  return rep;
}

YFactoryReport simulate_y_factory(const DurationTable& timing) {
  if (timing.tau_cx <= 0 || timing.tau_se <= 0)
    throw std::invalid_argument("y factory: timing not initialized");
  YFactoryReport rep;
  rep.prep_seconds = timing.tau_prep_plus;
  rep.slot_seconds = std::max(timing.tau_cx, std::max(timing.tau_mx, timing.tau_mz)) +
                     timing.tau_se;
  rep.slots = 3;
  rep.slot_gates = {"CX", "H", "CX"};
  rep.total_seconds = rep.prep_seconds + rep.slots * rep.slot_seconds;

  auto push = [&rep](OpKind k, int c0, int r0, int c1 = -1, int r1 = -1,
                     PrepState st = PrepState::Zero) {
    Op op;
    op.kind = k;
    op.col = c0;
    op.row = r0;
    op.col2 = c1;
    op.row2 = r1;
    op.state = st;
    rep.schedule.push_back(op);
  };
  push(OpKind::Prep, 0, 0, -1, -1, PrepState::Plus);
  push(OpKind::Prep, 1, 0, -1, -1, PrepState::Zero);
  push(OpKind::Cx, 0, 0, 1, 0);
  push(OpKind::H, 0, 0);
  push(OpKind::Cx, 0, 0, 1, 0);
  push(OpKind::Mz, 1, 0);
  return rep;
}

double aggregate_throughput(int n_factories, double tau_factory_seconds,
                            double tau_cycle_seconds) {
  if (n_factories < 0) throw std::invalid_argument("throughput: negative count");
  if (n_factories == 0) return 0.0;
  if (tau_factory_seconds <= 0 || tau_cycle_seconds <= 0)
    throw std::invalid_argument("throughput: non-positive durations");
  return n_factories * tau_cycle_seconds / tau_factory_seconds;
}

}  // namespace scg
