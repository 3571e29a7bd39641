#pragma once

// Lowers logical circuits onto the cell grid. Data qubits live on even
// columns (from column 2) and even rows (from row 2); odd columns and odd
// rows are open corridors; row 0 holds factory ports. Gates become gadgets:
//
//   CX    route the control's patch next to the target, transversal CX,
//         route back.
//   S     fetch a Y eigenstate from a Y port, CX from the ancilla onto the
//         qubit, MZ the qubit; the output continues in the ancilla's cell
//         and is routed home. Outcome 1 leaves an X*Z frame correction.
//   T     same teleport shape fed from a T port; on outcome 1 the S
//         correction is applied lazily with a further Y fetch.
//   H     in place.
//
// Corrections never touch the schedule: they are tracked as a Pauli frame.
// Measurement outcomes are not sampled here; the compiler fixes them from
// its seed and records them in the transcript so a replay can check the
// lowered semantics against the plain circuit.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scgame/game.hpp"

namespace scg {

enum class GateKind { H, S, Sdg, T, X, Y, Z, Cx, Mx, Mz };

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;  // CX target
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
};

// One gate per line: "H 0", "S 2", "T 1", "CX 0 1", "MX 3", "MZ 0".
// '#' starts a comment. Width is one past the highest referenced qubit.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_file(const std::string& path);
std::string format_circuit(const Circuit& c);

// Earliest-slot layering; each gate lands in the first layer after all its
// operands are free. Returns gate indices per layer.
std::vector<std::vector<int>> asap_layers(const Circuit& c);
int circuit_depth(const Circuit& c);
int t_count(const Circuit& c);

Circuit random_clifford_circuit(int width, int gates, unsigned seed);

// Pauli record keeping for teleport corrections: X^x Z^z per qubit.
class PauliFrame {
 public:
  explicit PauliFrame(int n) : x_(n, 0), z_(n, 0) {}
  int size() const { return static_cast<int>(x_.size()); }
  bool x(int q) const { return x_[q] != 0; }
  bool z(int q) const { return z_[q] != 0; }
  void flip_x(int q) { x_[q] ^= 1; }
  void flip_z(int q) { z_[q] ^= 1; }
  // Conjugation by the named Clifford, so the frame can stay behind it.
  void through_h(int q) { std::swap(x_[q], z_[q]); }
  void through_s(int q) { z_[q] ^= x_[q]; }
  void through_cx(int c, int t) {
    x_[t] ^= x_[c];
    z_[c] ^= z_[t];
  }

 private:
  std::vector<std::uint8_t> x_, z_;
};

// Semantic transcript of the lowered program over tableau slots. Logical
// qubit q starts in slot q; Relabel moves it after a teleport.
struct LogicalEvent {
  enum class Kind { PrepAncilla, Cx, Hadamard, MeasureZ, MeasureX, Relabel, FrameX, FrameZ };
  Kind kind = Kind::Cx;
  int a = -1;  // slot (or logical qubit for Relabel/Frame*)
  int b = -1;  // CX target slot; Relabel's new slot
  PrepState state = PrepState::Zero;
  int forced = 0;  // fixed measurement outcome
};

struct LayoutConfig {
  int width = 1;
  int t_ports = 1;  // T factory ports on row 0
  int y_ports = 1;
};

struct Placement {
  GridState grid;
  std::vector<std::pair<int, int>> qubit_cell;  // logical qubit -> home cell
  std::vector<std::pair<int, int>> t_sites;     // prep sites next to T ports
  std::vector<std::pair<int, int>> y_sites;
};

Placement plan_layout(const LayoutConfig& layout);

struct CompilerConfig {
  LayoutConfig layout;
  unsigned seed = 1;  // drives the fixed measurement outcomes
  // Entangled-pair CX instead of routing. Needs a Phi port, which no layout
  // provides yet, so enabling this reports the gap instead of lowering.
  bool use_remote_cx = false;
};

struct CompileStats {
  int layers = 0;
  int t_stall_cycles = 0;  // extra cycles waiting on T ports
  int y_stall_cycles = 0;
  int cycles = 0;  // layers + stalls
  int t_count = 0;
};

struct LoweredSchedule {
  Placement placement;
  Schedule ops;
  std::vector<LogicalEvent> transcript;
  std::vector<int> slot_of_qubit;  // final slot map after relabels
  PauliFrame frame{0};             // final pending corrections
  CompileStats stats;
};

// Lowers gate by gate in layer order. Throws std::invalid_argument for
// gates on already-measured qubits.
LoweredSchedule compile_circuit(const Circuit& c, const CompilerConfig& cfg);

// Aggregate path for workloads far too large to lower explicitly. The
// magic-state pipeline bounds progress: a layer cannot retire faster than
// its T states arrive, so depth stretches to t_count over the per-cycle
// consumption rate when that is the bottleneck.
struct AggregateModel {
  double depth = 0;
  double t_count = 0;
  double states_per_cycle = 1;  // already floored by the caller
  double tau_cycle = 0;
};

struct AggregateResult {
  double effective_depth = 0;
  double makespan_seconds = 0;
};

AggregateResult aggregate_makespan(const AggregateModel& m);

struct WorkloadSpec {
  int width = 100;
  double t_count = 1e8;
  double t_per_layer = 5;
};

struct SyntheticWorkload {
  int width = 0;
  double depth = 0;
  double t_count = 0;
};

// Shapes a synthetic workload: enough layers to spread t_count at the
// given density.
SyntheticWorkload synthetic_workload(const WorkloadSpec& spec);

}  // namespace scg
