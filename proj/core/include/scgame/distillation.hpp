#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scgame/css_code.hpp"

namespace scg {

enum class DistillTarget { T, S, Bell, Identity };

// One multitarget-CX layer: a control fanning out over the remainder of a
// table row's support.
struct CxLayer {
  int control = 0;
  std::vector<int> targets;
};

// Measured distillation circuit on n + k qubits. Code qubits are 0..n-1 in
// table column order, auxiliaries n..n+k-1. The auxiliaries end holding the
// k distilled outputs; the code qubits are measured.
struct DistillationCircuit {
  StabilizerTable code;
  DistillTarget target = DistillTarget::T;
  int width = 0;
  std::vector<int> plus_init;                  // qubits initialized in |+>
  std::vector<CxLayer> prep_layers;            // m_x encoding layers, then k Bell layers
  std::vector<std::string> transversal_layer;  // per code qubit; empty for Identity
  Basis measurement_basis = Basis::X;
};

struct PipeEvent {
  enum class Kind { FeedInit, BufferCx, Advance, MeasureTransversal };
  Kind kind{};
  int qubit = -1;        // circuit qubit the event acts on
  int buffer_slot = -1;  // BufferCx only: slot acting as control
};

// Streaming rearrangement: the X-pivot qubits and the auxiliaries stay
// resident (the buffer) while the remaining code qubits pass through one by
// one, then the buffer drains.
struct PipelinedSchedule {
  int buffer_size = 0;
  int feed_count = 0;
  int routing_rounds = 0;          // feed_count + buffer_size
  std::vector<int> buffer_qubits;  // slot order: X pivots, then auxiliaries
  std::vector<PipeEvent> steps;
};

struct DistillationAnalysis {
  double accept_prob = 1.0;
  double out_error = 0.0;      // conditioned on acceptance
  double leading_coeff = 0.0;  // out_error ~ leading_coeff * p^leading_power
  int leading_power = 0;
};

// Requires a standard-form table. T pairs only with the [[15,1,3]] table,
// S and Bell with [[7,1,3]]; Identity accepts any table with k >= 1.
DistillationCircuit build_circuit(const StabilizerTable& code, DistillTarget target);

PipelinedSchedule pipeline(const DistillationCircuit& circ);

// Exact output error of one round under independent Z flips with rate p at
// each transversal location, by enumeration of all 2^n patterns (n <= 20).
// Detection post-selects on a clean syndrome; correction always accepts and
// applies the minimum-weight coset decoder, limited to corrections of
// weight <= t.
DistillationAnalysis analyze_detection(const StabilizerTable& code, double p);
DistillationAnalysis analyze_correction(const StabilizerTable& code, double p, int t);

// (control, target) CX lists in flat layer order and in pipelined order;
// both prepare the same state. Used by the tableau replay checks.
std::vector<std::pair<int, int>> flat_cx_sequence(const DistillationCircuit& circ);
std::vector<std::pair<int, int>> pipelined_cx_sequence(const DistillationCircuit& circ,
                                                       const PipelinedSchedule& sched);

}  // namespace scg
