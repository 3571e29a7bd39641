#include "scgame/compiler.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "scgame/stab_oracle.hpp"

namespace scg {
namespace {

Circuit parse(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

// Applies the transcript to a fresh tableau, reproducing the compiler's
// fixed measurement branches, then lays the pending frame on top.
Tableau replay(const LoweredSchedule& lowered, int width) {
  int slots = width;
  for (const auto& ev : lowered.transcript)
    slots = std::max({slots, ev.a + 1, ev.b + 1});
  Tableau tab(slots);
  auto reset = [&tab](int q) {
    if (tab.measure_z(q, 0) == 1) tab.x(q);
  };
  for (const auto& ev : lowered.transcript) {
    switch (ev.kind) {
      case LogicalEvent::Kind::PrepAncilla:
        reset(ev.a);
        if (ev.state == PrepState::Plus) tab.h(ev.a);
        if (ev.state == PrepState::Y) {
          tab.h(ev.a);
          tab.s(ev.a);
        }
        break;
      case LogicalEvent::Kind::Cx:
        tab.cx(ev.a, ev.b);
        break;
      case LogicalEvent::Kind::Hadamard:
        tab.h(ev.a);
        break;
      case LogicalEvent::Kind::MeasureZ:
        EXPECT_EQ(tab.measure_z(ev.a, ev.forced), ev.forced);
        break;
      case LogicalEvent::Kind::MeasureX:
        EXPECT_EQ(tab.measure_x(ev.a, ev.forced), ev.forced);
        break;
      case LogicalEvent::Kind::Relabel:
      case LogicalEvent::Kind::FrameX:
      case LogicalEvent::Kind::FrameZ:
        break;  // bookkeeping; the final frame is applied below
    }
  }
  for (int q = 0; q < width; ++q) {
    int slot = lowered.slot_of_qubit[q];
    if (lowered.frame.x(q)) tab.x(slot);
    if (lowered.frame.z(q)) tab.z(slot);
  }
  return tab;
}

void expect_equivalent(const Circuit& c, const LoweredSchedule& lowered) {
  Tableau direct(std::max(c.width, 1));
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: direct.h(g.q0); break;
      case GateKind::S: direct.s(g.q0); break;
      case GateKind::Sdg: direct.sdg(g.q0); break;
      case GateKind::X: direct.x(g.q0); break;
      case GateKind::Y: direct.y(g.q0); break;
      case GateKind::Z: direct.z(g.q0); break;
      case GateKind::Cx: direct.cx(g.q0, g.q1); break;
      default: FAIL() << "non-Clifford gate in equivalence circuit";
    }
  }
  Tableau tab = replay(lowered, std::max(c.width, 1));
  for (const Pauli& gen : direct.canonical_stabilizers()) {
    Pauli mapped = Pauli::identity(tab.num_qubits());
    for (int q = 0; q < c.width; ++q) {
      int slot = lowered.slot_of_qubit[q];
      mapped.x[slot] = gen.x[q];
      mapped.z[slot] = gen.z[q];
    }
    mapped.negative = gen.negative;
    EXPECT_TRUE(tab.stabilizes(mapped));
  }
}

TEST(CircuitParser, BasicForm) {
  auto c = parse("H 0\nCX 0 1\nT 1\nMZ 1\n");
  EXPECT_EQ(c.width, 2);
  ASSERT_EQ(c.gates.size(), 4u);
  EXPECT_EQ(c.gates[1].kind, GateKind::Cx);
  EXPECT_EQ(c.gates[1].q1, 1);
  EXPECT_EQ(circuit_depth(c), 4);
  EXPECT_EQ(t_count(c), 1);
}

TEST(CircuitParser, EmptyAndComments) {
  auto c = parse("# nothing here\n\n");
  EXPECT_EQ(c.width, 0);
  EXPECT_TRUE(c.gates.empty());
  EXPECT_EQ(circuit_depth(c), 0);
}

TEST(CircuitParser, Errors) {
  EXPECT_THROW(parse("CX 0 0\n"), std::invalid_argument);
  EXPECT_THROW(parse("H\n"), std::invalid_argument);
  EXPECT_THROW(parse("H x\n"), std::invalid_argument);
  EXPECT_THROW(parse("FOO 1\n"), std::invalid_argument);
  EXPECT_THROW(parse("H 0 1\n"), std::invalid_argument);
}

TEST(CircuitParser, FormatRoundTrip) {
  auto c = parse("H 0\nSDG 2\nCX 0 1\nMX 2\n");
  std::istringstream in(format_circuit(c));
  auto again = parse_circuit(in);
  EXPECT_EQ(again.width, c.width);
  ASSERT_EQ(again.gates.size(), c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    EXPECT_EQ(again.gates[i].kind, c.gates[i].kind);
    EXPECT_EQ(again.gates[i].q0, c.gates[i].q0);
  }
}

TEST(Layers, PartitionWithoutOperandClashes) {
  auto c = random_clifford_circuit(6, 60, 9);
  auto layers = asap_layers(c);
  std::size_t total = 0;
  for (const auto& layer : layers) {
    total += layer.size();
    std::vector<int> used;
    for (int gi : layer) {
      const Gate& g = c.gates[gi];
      EXPECT_EQ(std::count(used.begin(), used.end(), g.q0), 0);
      used.push_back(g.q0);
      if (g.q1 >= 0) {
        EXPECT_EQ(std::count(used.begin(), used.end(), g.q1), 0);
        used.push_back(g.q1);
      }
    }
  }
  EXPECT_EQ(total, c.gates.size());
}

TEST(RandomCircuits, DeterministicPerSeed) {
  auto a = random_clifford_circuit(5, 30, 12);
  auto b = random_clifford_circuit(5, 30, 12);
  ASSERT_EQ(a.gates.size(), b.gates.size());
  for (std::size_t i = 0; i < a.gates.size(); ++i) {
    EXPECT_EQ(a.gates[i].kind, b.gates[i].kind);
    EXPECT_EQ(a.gates[i].q0, b.gates[i].q0);
    EXPECT_EQ(a.gates[i].q1, b.gates[i].q1);
  }
  auto other = random_clifford_circuit(5, 30, 13);
  bool differs = false;
  for (std::size_t i = 0; i < a.gates.size(); ++i)
    if (a.gates[i].kind != other.gates[i].kind || a.gates[i].q0 != other.gates[i].q0)
      differs = true;
  EXPECT_TRUE(differs);
}

TEST(Layout, CorridorStructure) {
  LayoutConfig layout;
  layout.width = 5;
  layout.t_ports = 2;
  layout.y_ports = 1;
  auto p = plan_layout(layout);
  EXPECT_GE(p.grid.cols, 6);
  EXPECT_GE(p.grid.rows, 5);
  ASSERT_EQ(p.qubit_cell.size(), 5u);
  for (auto [c, r] : p.qubit_cell) {
    EXPECT_EQ(c % 2, 0);
    EXPECT_EQ(r % 2, 0);
    EXPECT_GE(r, 2);
  }
  for (std::size_t i = 0; i < p.qubit_cell.size(); ++i)
    for (std::size_t j = i + 1; j < p.qubit_cell.size(); ++j)
      EXPECT_NE(p.qubit_cell[i], p.qubit_cell[j]);

  ASSERT_EQ(p.t_sites.size(), 2u);
  ASSERT_EQ(p.y_sites.size(), 1u);
  for (auto [c, r] : p.t_sites) {
    EXPECT_EQ(r, 1);
    EXPECT_TRUE(p.grid.factory_adjacent(c, r, PrepState::T));
  }
  EXPECT_TRUE(p.grid.factory_adjacent(p.y_sites[0].first, p.y_sites[0].second,
                                      PrepState::Y));
  EXPECT_EQ(p.grid.factories.size(), 3u);
}

TEST(Lowering, SchedulesRunLegally) {
  for (const char* text : {"H 0\n", "CX 0 1\n", "S 0\n", "SDG 1\n", "T 0\n",
                           "H 0\nCX 0 1\nS 1\nH 1\nMZ 0\n"}) {
    auto c = parse(text);
    auto lowered = compile_circuit(c, CompilerConfig{});
    auto res = run_schedule(lowered.placement.grid, lowered.ops, GameConfig{},
                            pinned_durations());
    EXPECT_TRUE(res.ok()) << text << (res.violation ? res.violation->detail : "");
  }
}

TEST(Lowering, QubitsReturnHome) {
  auto c = parse("CX 0 3\nCX 3 0\nS 2\n");
  auto lowered = compile_circuit(c, CompilerConfig{});
  auto res = run_schedule(lowered.placement.grid, lowered.ops, GameConfig{},
                          pinned_durations());
  ASSERT_TRUE(res.ok());
  const auto& grid = res.timeline->final_grid;
  for (int q = 0; q < c.width; ++q) {
    auto [col, row] = lowered.placement.qubit_cell[q];
    EXPECT_EQ(grid.at(col, row).mode, Mode::Idle) << q;
  }
}

TEST(Lowering, TranscriptShapes) {
  auto lowered = compile_circuit(parse("S 0\n"), CompilerConfig{});
  std::vector<LogicalEvent::Kind> kinds;
  for (const auto& ev : lowered.transcript) kinds.push_back(ev.kind);
  ASSERT_GE(kinds.size(), 4u);
  EXPECT_EQ(kinds[0], LogicalEvent::Kind::PrepAncilla);
  EXPECT_EQ(lowered.transcript[0].state, PrepState::Y);
  EXPECT_EQ(kinds[1], LogicalEvent::Kind::Cx);
  EXPECT_EQ(kinds[2], LogicalEvent::Kind::MeasureZ);
  EXPECT_EQ(kinds[3], LogicalEvent::Kind::Relabel);
  // The output slot moved off the starting slot.
  EXPECT_NE(lowered.slot_of_qubit[0], 0);
}

TEST(Lowering, StallAccounting) {
  auto s = compile_circuit(parse("S 0\n"), CompilerConfig{});
  EXPECT_EQ(s.stats.layers, 1);
  EXPECT_EQ(s.stats.y_stall_cycles, 1);  // the port refills every other cycle
  EXPECT_EQ(s.stats.cycles, 2);

  auto t2 = compile_circuit(parse("T 0\nT 1\n"), CompilerConfig{});
  EXPECT_EQ(t2.stats.layers, 1);
  EXPECT_EQ(t2.stats.t_count, 2);
  EXPECT_EQ(t2.stats.t_stall_cycles, 1);  // one port, two states in the layer
  EXPECT_GE(t2.stats.cycles, 2);

  auto h = compile_circuit(parse("H 0\nH 1\n"), CompilerConfig{});
  EXPECT_EQ(h.stats.cycles, 1);
}

TEST(Lowering, RejectsUseAfterMeasure) {
  EXPECT_THROW(compile_circuit(parse("MZ 0\nH 0\n"), CompilerConfig{}),
               std::invalid_argument);
}

TEST(Lowering, RemoteCxUnsupported) {
  CompilerConfig cfg;
  cfg.use_remote_cx = true;
  EXPECT_THROW(compile_circuit(parse("CX 0 1\n"), cfg), std::invalid_argument);
}

TEST(Equivalence, HandPickedCircuits) {
  for (const char* text :
       {"H 0\n", "S 0\nS 0\n", "H 0\nCX 0 1\n", "X 0\nS 0\n", "SDG 0\nS 0\n",
        "H 0\nS 0\nH 1\nCX 1 0\nZ 1\n"}) {
    auto c = parse(text);
    for (unsigned seed : {1u, 2u, 3u}) {
      CompilerConfig cfg;
      cfg.seed = seed;
      expect_equivalent(c, compile_circuit(c, cfg));
    }
  }
}

TEST(Equivalence, RandomCliffordCircuits) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int width = 1 + static_cast<int>(rng() % 8u);
    auto c = random_clifford_circuit(width, 15, 1000 + trial);
    CompilerConfig cfg;
    cfg.seed = 10 + trial;
    auto lowered = compile_circuit(c, cfg);
    expect_equivalent(c, lowered);
    auto res = run_schedule(lowered.placement.grid, lowered.ops, GameConfig{},
                            pinned_durations());
    EXPECT_TRUE(res.ok()) << trial;
  }
}

TEST(Aggregate, TableOneNumbers) {
  AggregateModel m;
  m.depth = 2e7;
  m.t_count = 1e8;
  m.states_per_cycle = 5;
  m.tau_cycle = 610e-6;
  auto r = aggregate_makespan(m);
  EXPECT_DOUBLE_EQ(r.effective_depth, 2e7);
  EXPECT_NEAR(r.makespan_seconds, 12200.0, 1e-6);
}

TEST(Aggregate, MagicStateBound) {
  AggregateModel m;
  m.depth = 100;
  m.t_count = 1000;
  m.states_per_cycle = 2;
  m.tau_cycle = 1e-3;
  auto r = aggregate_makespan(m);
  EXPECT_DOUBLE_EQ(r.effective_depth, 500.0);  // t-limited
  m.t_count = 0;
  EXPECT_DOUBLE_EQ(aggregate_makespan(m).effective_depth, 100.0);
}

TEST(Aggregate, SyntheticWorkloadShape) {
  WorkloadSpec spec;
  auto w = synthetic_workload(spec);
  EXPECT_EQ(w.width, 100);
  EXPECT_DOUBLE_EQ(w.depth, 2e7);
  EXPECT_DOUBLE_EQ(w.t_count, 1e8);
  spec.t_per_layer = 0;
  EXPECT_THROW(synthetic_workload(spec), std::invalid_argument);
}

TEST(Frame, ConjugationRules) {
  PauliFrame f(2);
  f.flip_x(0);
  f.through_h(0);
  EXPECT_FALSE(f.x(0));
  EXPECT_TRUE(f.z(0));
  f.through_s(0);  // no x component, z unchanged
  EXPECT_TRUE(f.z(0));
  f.flip_x(0);
  f.through_cx(0, 1);
  EXPECT_TRUE(f.x(1));  // x copies control -> target
  EXPECT_TRUE(f.z(0));  // z copies target -> control (z1 was 0)
}

}  // namespace
}  // namespace scg
