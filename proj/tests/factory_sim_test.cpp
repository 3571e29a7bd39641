#include "scgame/factory_sim.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace scg {
namespace {

FactoryConfig base() { return FactoryConfig::defaults(); }

TEST(TFactory, ConveyorClock) {
  auto rep = simulate_t_factory(base());
  EXPECT_DOUBLE_EQ(rep.tau_mv, 195e-6);
  EXPECT_DOUBLE_EQ(rep.cell_cycle, 730e-6);
}

TEST(TFactory, IdealPipeline) {
  auto cfg = base();
  cfg.reorder = false;
  cfg.n_mb = 5;
  auto rep = simulate_t_factory(cfg);
  EXPECT_EQ(rep.steps, 17);  // 5 buffer loads + 11 feeds + tail
  EXPECT_EQ(rep.stalled_steps, 0);
  EXPECT_EQ(rep.states_consumed, 11);
  EXPECT_NEAR(rep.total_seconds, 3.315e-3, 1e-12);
}

TEST(TFactory, ReorderedDefault) {
  auto rep = simulate_t_factory(base());  // n_mb = 4, reorder on
  EXPECT_EQ(rep.steps, 15);
  EXPECT_EQ(rep.stalled_steps, 0);
  EXPECT_NEAR(rep.total_seconds, 2.925e-3, 1e-12);
  EXPECT_GE(rep.total_seconds, 2.7e-3);
  EXPECT_LE(rep.total_seconds, 3.3e-3);
}

TEST(TFactory, InjectionSaturation) {
  double prev = 0;
  double at4 = 0, at8 = 0;
  for (int n_mb = 1; n_mb <= 8; ++n_mb) {
    auto cfg = base();
    cfg.n_mb = n_mb;
    auto rep = simulate_t_factory(cfg);
    if (n_mb > 1) EXPECT_LE(rep.total_seconds, prev) << n_mb;
    if (n_mb == 1) EXPECT_GT(rep.stalled_steps, 0);
    if (n_mb == 4) at4 = rep.total_seconds;
    if (n_mb == 8) at8 = rep.total_seconds;
    prev = rep.total_seconds;
  }
  EXPECT_DOUBLE_EQ(at4, at8);  // four injection cells already keep up
}

TEST(TFactory, TraceShape) {
  auto rep = simulate_t_factory(base());
  ASSERT_EQ(rep.trace.size(), static_cast<std::size_t>(rep.steps));
  int feeds = 0;
  double last_start = -1;
  for (const auto& step : rep.trace) {
    EXPECT_DOUBLE_EQ(step.duration, 195e-6);
    EXPECT_GE(step.start, last_start);
    last_start = step.start;
    if (step.kind == FactoryStep::Kind::Feed) ++feeds;
  }
  EXPECT_EQ(feeds, 11);
  EXPECT_EQ(rep.trace.front().kind, FactoryStep::Kind::Head);
  EXPECT_EQ(rep.trace.back().kind, FactoryStep::Kind::Tail);
}

TEST(TFactory, StallsShiftLaterSteps) {
  auto cfg = base();
  cfg.n_mb = 1;
  auto rep = simulate_t_factory(cfg);
  EXPECT_GT(rep.stalled_steps, 0);
  // Total time is the last step end, which exceeds steps * tau_mv when stalled.
  EXPECT_GT(rep.total_seconds, rep.steps * rep.tau_mv);
  double waits = 0;
  for (const auto& step : rep.trace) waits += step.wait;
  EXPECT_NEAR(rep.total_seconds, rep.steps * rep.tau_mv + waits, 1e-12);
}

TEST(TFactory, Guards) {
  auto cfg = base();
  cfg.n_mb = 0;
  EXPECT_THROW(simulate_t_factory(cfg), std::invalid_argument);
  cfg = base();
  cfg.timing = DurationTable{};
  EXPECT_THROW(simulate_t_factory(cfg), std::invalid_argument);
  cfg = base();
  cfg.code = StabilizerTable{};
  EXPECT_THROW(simulate_t_factory(cfg), std::invalid_argument);
}

TEST(YFactory, TwoCellSchedule) {
  auto rep = simulate_y_factory(pinned_durations());
  EXPECT_DOUBLE_EQ(rep.prep_seconds, 240e-6);
  EXPECT_DOUBLE_EQ(rep.slot_seconds, 270e-6);
  EXPECT_EQ(rep.slots, 3);
  ASSERT_EQ(rep.slot_gates.size(), 3u);
  EXPECT_EQ(rep.slot_gates[1], "H");
  EXPECT_NEAR(rep.total_seconds, 1050e-6, 1e-12);

  auto grid = make_grid(2, 1);
  auto res = run_schedule(grid, rep.schedule, GameConfig{}, pinned_durations());
  EXPECT_TRUE(res.ok()) << (res.violation ? res.violation->detail : "");
}

TEST(YFactory, FitsInTwoLogicalCycles) {
  auto rep = simulate_y_factory(pinned_durations());
  EXPECT_LE(rep.total_seconds, 2 * 610e-6);
}

TEST(Throughput, TableOneRate) {
  double rate = aggregate_throughput(25, 2.925e-3, 610e-6);
  EXPECT_NEAR(rate, 5.21367521367521, 1e-10);
  EXPECT_EQ(static_cast<int>(std::floor(rate)), 5);
}

TEST(Throughput, EdgeCases) {
  EXPECT_DOUBLE_EQ(aggregate_throughput(0, 2.925e-3, 610e-6), 0.0);
  EXPECT_THROW(aggregate_throughput(-1, 2.925e-3, 610e-6), std::invalid_argument);
  EXPECT_THROW(aggregate_throughput(5, 0.0, 610e-6), std::invalid_argument);
  EXPECT_THROW(aggregate_throughput(5, 2.925e-3, -1.0), std::invalid_argument);
}

}  // namespace
}  // namespace scg
