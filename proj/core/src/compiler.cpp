#include "scgame/compiler.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scg {

namespace {

[[noreturn]] void circuit_fail(int line, const std::string& what) {
  throw std::invalid_argument("circuit line " + std::to_string(line) + ": " + what);
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool is_two_qubit(GateKind k) { return k == GateKind::Cx; }

}  // namespace

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    std::string name;
    if (!(ls >> name)) continue;
    name = upper(name);
    Gate g;
    if (name == "H") g.kind = GateKind::H;
    else if (name == "S") g.kind = GateKind::S;
    else if (name == "SDG") g.kind = GateKind::Sdg;
    else if (name == "T") g.kind = GateKind::T;
    else if (name == "X") g.kind = GateKind::X;
    else if (name == "Y") g.kind = GateKind::Y;
    else if (name == "Z") g.kind = GateKind::Z;
    else if (name == "CX") g.kind = GateKind::Cx;
    else if (name == "MX") g.kind = GateKind::Mx;
    else if (name == "MZ") g.kind = GateKind::Mz;
    else circuit_fail(lineno, "unknown gate '" + name + "'");

    if (!(ls >> g.q0) || g.q0 < 0) circuit_fail(lineno, "bad qubit index");
    if (is_two_qubit(g.kind)) {
      if (!(ls >> g.q1) || g.q1 < 0) circuit_fail(lineno, "CX needs a target qubit");
      if (g.q1 == g.q0) circuit_fail(lineno, "CX operands must differ");
    }
    std::string extra;
    if (ls >> extra) circuit_fail(lineno, "trailing tokens");
    c.width = std::max({c.width, g.q0 + 1, g.q1 + 1});
    c.gates.push_back(g);
  }
  return c;
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open circuit file: " + path);
  return parse_circuit(f);
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: out << "H " << g.q0; break;
      case GateKind::S: out << "S " << g.q0; break;
      case GateKind::Sdg: out << "SDG " << g.q0; break;
      case GateKind::T: out << "T " << g.q0; break;
      case GateKind::X: out << "X " << g.q0; break;
      case GateKind::Y: out << "Y " << g.q0; break;
      case GateKind::Z: out << "Z " << g.q0; break;
      case GateKind::Cx: out << "CX " << g.q0 << ' ' << g.q1; break;
      case GateKind::Mx: out << "MX " << g.q0; break;
      case GateKind::Mz: out << "MZ " << g.q0; break;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> asap_layers(const Circuit& c) {
  std::vector<std::vector<int>> layers;
  std::vector<int> avail(c.width, 0);
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    const Gate& g = c.gates[i];
    int layer = avail[g.q0];
    if (g.q1 >= 0) layer = std::max(layer, avail[g.q1]);
    if (layer >= static_cast<int>(layers.size())) layers.resize(layer + 1);
    layers[layer].push_back(i);
    avail[g.q0] = layer + 1;
    if (g.q1 >= 0) avail[g.q1] = layer + 1;
  }
  return layers;
}

int circuit_depth(const Circuit& c) {
  return static_cast<int>(asap_layers(c).size());
}

int t_count(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::T) ++n;
  return n;
}

Circuit random_clifford_circuit(int width, int gates, unsigned seed) {
  if (width < 1) throw std::invalid_argument("random_clifford_circuit: width < 1");
  Circuit c;
  c.width = width;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> kind_pick(0, width > 1 ? 2 : 1);
  std::uniform_int_distribution<int> qubit_pick(0, width - 1);
  for (int i = 0; i < gates; ++i) {
    Gate g;
    int k = kind_pick(rng);
    g.q0 = qubit_pick(rng);
    if (k == 0) g.kind = GateKind::H;
    else if (k == 1) g.kind = GateKind::S;
    else {
      g.kind = GateKind::Cx;
      do g.q1 = qubit_pick(rng); while (g.q1 == g.q0);
    }
    c.gates.push_back(g);
  }
  return c;
}

Placement plan_layout(const LayoutConfig& layout) {
  if (layout.width < 1) throw std::invalid_argument("layout: width < 1");
  if (layout.t_ports < 1 || layout.y_ports < 1)
    throw std::invalid_argument("layout: need at least one port of each kind");
  const int per_row = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(layout.width))));
  const int qrows = (layout.width + per_row - 1) / per_row;
  const int ports = layout.t_ports + layout.y_ports;
  // Data columns start at 2 so every home has a corridor column on its left
  // for gadget ancillas.
  const int cols = std::max(2 * per_row + 1, 2 * ports - 1);
  const int rows = 2 * qrows + 1;

  Placement p;
  p.grid = make_grid(cols, rows);
  for (int i = 0; i < layout.t_ports; ++i) {
    int col = 2 * i;
    p.grid.at(col, 0).factory_member = true;
    p.grid.factories.push_back(Factory{PrepState::T, {{col, 0}}});
    p.t_sites.emplace_back(col, 1);
  }
  for (int i = 0; i < layout.y_ports; ++i) {
    int col = 2 * (layout.t_ports + i);
    p.grid.at(col, 0).factory_member = true;
    p.grid.factories.push_back(Factory{PrepState::Y, {{col, 0}}});
    p.y_sites.emplace_back(col, 1);
  }
  for (int q = 0; q < layout.width; ++q)
    p.qubit_cell.emplace_back(2 + 2 * (q % per_row), 2 + 2 * (q / per_row));
  return p;
}

namespace {

class Lowerer {
 public:
  Lowerer(const Circuit& c, const CompilerConfig& cfg)
      : circuit_(c), rng_(cfg.seed), remote_cx_(cfg.use_remote_cx) {
    LayoutConfig layout = cfg.layout;
    layout.width = std::max(layout.width, std::max(c.width, 1));
    out_.placement = plan_layout(layout);
    layout_ = layout;
    const int w = layout.width;
    out_.slot_of_qubit.resize(w);
    for (int q = 0; q < w; ++q) out_.slot_of_qubit[q] = q;
    out_.frame = PauliFrame(w);
    next_slot_ = w;
    measured_.assign(w, false);
  }

  LoweredSchedule run() {
    // Data qubits start in |0>, matching a fresh tableau; the transcript
    // needs no event for them.
    for (int q = 0; q < layout_.width; ++q) {
      auto [c, r] = home(q);
      push_prep(c, r, PrepState::Zero);
    }
    auto layers = asap_layers(circuit_);
    out_.stats.layers = static_cast<int>(layers.size());
    out_.stats.t_count = t_count(circuit_);
    for (const auto& layer : layers) {
      int n_t = 0, n_y = 0;
      for (int gi : layer) {
        const Gate& g = circuit_.gates[gi];
        if (g.kind == GateKind::T) ++n_t;
        if (g.kind == GateKind::S || g.kind == GateKind::Sdg) ++n_y;
        lower(g);
      }
      n_y += lazy_y_in_layer_;
      lazy_y_in_layer_ = 0;
      int t_extra = n_t > 0 ? (n_t + layout_.t_ports - 1) / layout_.t_ports - 1 : 0;
      // A Y port refills every other cycle.
      int y_extra = n_y > 0 ? (2 * n_y + layout_.y_ports - 1) / layout_.y_ports - 1 : 0;
      out_.stats.t_stall_cycles += t_extra;
      out_.stats.y_stall_cycles += y_extra;
      out_.stats.cycles += 1 + std::max(t_extra, y_extra);
    }
    return std::move(out_);
  }

 private:
  const Circuit& circuit_;
  LayoutConfig layout_;
  LoweredSchedule out_;
  std::mt19937 rng_;
  bool remote_cx_ = false;
  std::vector<bool> measured_;
  std::vector<int> free_slots_;
  int next_slot_ = 0;
  int next_t_port_ = 0;
  int next_y_port_ = 0;
  int lazy_y_in_layer_ = 0;

  std::pair<int, int> home(int q) const { return out_.placement.qubit_cell[q]; }

  int alloc_slot() {
    if (!free_slots_.empty()) {
      int s = free_slots_.back();
      free_slots_.pop_back();
      return s;
    }
    return next_slot_++;
  }

  int forced_bit() { return static_cast<int>(rng_() & 1u); }

  void check_live(int q) {
    if (measured_[q])
      throw std::invalid_argument("gate on already-measured qubit " + std::to_string(q));
  }

  void push_route(int c0, int r0, int c1, int r1) {
    if (c0 == c1 && r0 == r1) return;
    Op op;
    op.kind = OpKind::Route;
    op.col = c0;
    op.row = r0;
    op.col2 = c1;
    op.row2 = r1;
    out_.ops.push_back(op);
  }

  void push_single(OpKind k, int col, int row) {
    Op op;
    op.kind = k;
    op.col = col;
    op.row = row;
    out_.ops.push_back(op);
  }

  void push_prep(int col, int row, PrepState s) {
    Op op;
    op.kind = OpKind::Prep;
    op.col = col;
    op.row = row;
    op.state = s;
    out_.ops.push_back(op);
  }

  void push_cx(int c0, int r0, int c1, int r1) {
    Op op;
    op.kind = OpKind::Cx;
    op.col = c0;
    op.row = r0;
    op.col2 = c1;
    op.row2 = r1;
    out_.ops.push_back(op);
  }

  void event(LogicalEvent e) { out_.transcript.push_back(e); }

  void lower(const Gate& g) {
    switch (g.kind) {
      case GateKind::H: lower_h(g.q0); break;
      case GateKind::S: lower_s(g.q0, false); break;
      case GateKind::Sdg: lower_s(g.q0, true); break;
      case GateKind::T: lower_t(g.q0); break;
      case GateKind::X:
        check_live(g.q0);
        out_.frame.flip_x(g.q0);
        event({LogicalEvent::Kind::FrameX, g.q0, -1, PrepState::Zero, 0});
        break;
      case GateKind::Z:
        check_live(g.q0);
        out_.frame.flip_z(g.q0);
        event({LogicalEvent::Kind::FrameZ, g.q0, -1, PrepState::Zero, 0});
        break;
      case GateKind::Y:
        check_live(g.q0);
        out_.frame.flip_x(g.q0);
        out_.frame.flip_z(g.q0);
        event({LogicalEvent::Kind::FrameX, g.q0, -1, PrepState::Zero, 0});
        event({LogicalEvent::Kind::FrameZ, g.q0, -1, PrepState::Zero, 0});
        break;
      case GateKind::Cx: lower_cx(g.q0, g.q1); break;
      case GateKind::Mx: lower_measure(g.q0, true); break;
      case GateKind::Mz: lower_measure(g.q0, false); break;
    }
  }

  void lower_h(int q) {
    check_live(q);
    auto [c, r] = home(q);
    push_single(OpKind::H, c, r);
    event({LogicalEvent::Kind::Hadamard, out_.slot_of_qubit[q], -1, PrepState::Zero, 0});
    out_.frame.through_h(q);
  }

  void lower_cx(int qc, int qt) {
    check_live(qc);
    check_live(qt);
    if (remote_cx_)
      throw std::invalid_argument(
          "remote CX requires an entangled-pair port; none available");
    auto [c0, r0] = home(qc);
    auto [c1, r1] = home(qt);
    const int corridor = r0 - 1;
    const int side = c1 - 1;  // corridor column left of the target
    push_route(c0, r0, c0, corridor);
    push_route(c0, corridor, side, corridor);
    push_route(side, corridor, side, r1);
    push_cx(side, r1, c1, r1);
    push_route(side, r1, side, corridor);
    push_route(side, corridor, c0, corridor);
    push_route(c0, corridor, c0, r0);
    event({LogicalEvent::Kind::Cx, out_.slot_of_qubit[qc], out_.slot_of_qubit[qt],
           PrepState::Zero, 0});
    out_.frame.through_cx(qc, qt);
  }

  // Teleports the qubit through a fetched ancilla: CX from the ancilla onto
  // the qubit, MZ the qubit, output continues in the ancilla cell and is
  // routed home.
  void teleport(int q, std::pair<int, int> site, PrepState state, int anc_slot,
                int forced) {
    auto [c, r] = home(q);
    const int side = c - 1;
    push_prep(site.first, site.second, state);
    push_route(site.first, site.second, side, r);
    push_cx(side, r, c, r);
    push_single(OpKind::Mz, c, r);
    push_route(side, r, c, r);
    event({LogicalEvent::Kind::PrepAncilla, anc_slot, -1, state, 0});
    event({LogicalEvent::Kind::Cx, anc_slot, out_.slot_of_qubit[q], PrepState::Zero, 0});
    event({LogicalEvent::Kind::MeasureZ, out_.slot_of_qubit[q], -1, PrepState::Zero, forced});
    event({LogicalEvent::Kind::Relabel, q, anc_slot, PrepState::Zero, 0});
    free_slots_.push_back(out_.slot_of_qubit[q]);
    out_.slot_of_qubit[q] = anc_slot;
  }

  void lower_s(int q, bool dagger) {
    check_live(q);
    auto site = out_.placement.y_sites[next_y_port_++ % layout_.y_ports];
    int anc = alloc_slot();
    int forced = forced_bit();
    teleport(q, site, PrepState::Y, anc, forced);
    out_.frame.through_s(q);
    if (forced) {
      out_.frame.flip_x(q);
      out_.frame.flip_z(q);
      event({LogicalEvent::Kind::FrameX, q, -1, PrepState::Zero, 0});
      event({LogicalEvent::Kind::FrameZ, q, -1, PrepState::Zero, 0});
    }
    if (dagger) {
      // S-dagger = S then Z.
      out_.frame.flip_z(q);
      event({LogicalEvent::Kind::FrameZ, q, -1, PrepState::Zero, 0});
    }
  }

  void lower_t(int q) {
    check_live(q);
    auto site = out_.placement.t_sites[next_t_port_++ % layout_.t_ports];
    int anc = alloc_slot();
    int forced = forced_bit();
    teleport(q, site, PrepState::T, anc, forced);
    // An X frame component flips how the outcome is read; the S fix-up is
    // applied for the effective outcome.
    int effective = forced ^ (out_.frame.x(q) ? 1 : 0);
    if (effective) {
      lower_s(q, false);
      ++lazy_y_in_layer_;
    }
  }

  void lower_measure(int q, bool x_basis) {
    check_live(q);
    auto [c, r] = home(q);
    push_single(x_basis ? OpKind::Mx : OpKind::Mz, c, r);
    int forced = forced_bit();
    event({x_basis ? LogicalEvent::Kind::MeasureX : LogicalEvent::Kind::MeasureZ,
           out_.slot_of_qubit[q], -1, PrepState::Zero, forced});
    measured_[q] = true;
  }
};

}  // namespace

LoweredSchedule compile_circuit(const Circuit& c, const CompilerConfig& cfg) {
  Lowerer lowerer(c, cfg);
  return lowerer.run();
}

AggregateResult aggregate_makespan(const AggregateModel& m) {
  if (m.tau_cycle <= 0) throw std::invalid_argument("aggregate: tau_cycle <= 0");
  double rate = std::max(1.0, m.states_per_cycle);
  double t_layers = m.t_count > 0 ? std::ceil(m.t_count / rate) : 0.0;
  AggregateResult r;
  r.effective_depth = std::max(m.depth, t_layers);
  r.makespan_seconds = r.effective_depth * m.tau_cycle;
  return r;
}

SyntheticWorkload synthetic_workload(const WorkloadSpec& spec) {
  if (spec.width < 1 || spec.t_per_layer <= 0 || spec.t_count < 0)
    throw std::invalid_argument("workload: bad parameters");
  SyntheticWorkload w;
  w.width = spec.width;
  w.t_count = spec.t_count;
  w.depth = std::ceil(spec.t_count / spec.t_per_layer);
  return w;
}

}  // namespace scg
