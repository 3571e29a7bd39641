#include "scgame/distillation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace scg {

namespace {

// Pivot column of each X row; rows are in reduced echelon form so pivots are
// the leading ones and appear in no other row.
std::vector<int> x_pivots(const StabilizerTable& code) {
  std::vector<int> pivots;
  for (const auto& row : code.x_rows) {
    int p = -1;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c]) { p = static_cast<int>(c); break; }
    if (p < 0) throw std::invalid_argument("build_circuit: zero X row");
    pivots.push_back(p);
  }
  return pivots;
}

std::string transversal_label(DistillTarget t) {
  switch (t) {
    case DistillTarget::T: return "T";
    case DistillTarget::S: return "S";
    case DistillTarget::Bell: return "BELL";
    case DistillTarget::Identity: return "";
  }
  return "";
}

}  // namespace

DistillationCircuit build_circuit(const StabilizerTable& code, DistillTarget target) {
  validate(code);
  if (!is_standard_form(code))
    throw std::invalid_argument("build_circuit: table must be in standard form");
  if (code.k < 1)
    throw std::invalid_argument("build_circuit: need k >= 1 for an output");
  auto is_shape = [&](int n, int k, int d) {
    return code.n == n && code.k == k && code.d == d;
  };
  if (target == DistillTarget::T && !is_shape(15, 1, 3))
    throw std::invalid_argument("build_circuit: T distillation requires the [[15,1,3]] table");
  if ((target == DistillTarget::S || target == DistillTarget::Bell) && !is_shape(7, 1, 3))
    throw std::invalid_argument("build_circuit: S/Bell distillation requires the [[7,1,3]] table");

  DistillationCircuit circ;
  circ.code = code;
  circ.target = target;
  circ.width = code.n + code.k;

  auto pivots = x_pivots(code);
  circ.plus_init = pivots;
  for (int j = 0; j < code.k; ++j) circ.plus_init.push_back(code.n + j);

  // Encoding: each X row becomes a fan-out from its pivot.
  for (int i = 0; i < code.m_x(); ++i) {
    CxLayer layer;
    layer.control = pivots[i];
    for (int qb : support_of(code.x_rows[i]))
      if (qb != pivots[i]) layer.targets.push_back(qb);
    circ.prep_layers.push_back(std::move(layer));
  }
  // Bell part: auxiliary j fans out over the support of logical X_j.
  for (int j = 0; j < code.k; ++j) {
    CxLayer layer;
    layer.control = code.n + j;
    layer.targets = support_of(code.logical_x[j]);
    circ.prep_layers.push_back(std::move(layer));
  }

  if (target != DistillTarget::Identity)
    circ.transversal_layer.assign(code.n, transversal_label(target));
  circ.measurement_basis = Basis::X;
  return circ;
}

PipelinedSchedule pipeline(const DistillationCircuit& circ) {
  const StabilizerTable& code = circ.code;
  auto pivots = x_pivots(code);

  PipelinedSchedule sched;
  sched.buffer_size = code.m_x() + code.k;
  sched.feed_count = code.n - code.m_x();
  sched.routing_rounds = sched.feed_count + sched.buffer_size;
  sched.buffer_qubits = pivots;
  for (int j = 0; j < code.k; ++j) sched.buffer_qubits.push_back(code.n + j);

  std::vector<bool> is_pivot(code.n, false);
  for (int p : pivots) is_pivot[p] = true;

  auto slot_acts_on = [&](int slot, int qubit) {
    if (slot < code.m_x()) return code.x_rows[slot][qubit] != 0;
    return circ.code.logical_x[slot - code.m_x()][qubit] != 0;
  };

  // Feeds stream in column order; a feed receives a CX from every buffer
  // slot whose row covers it, then proceeds to its transversal gate and
  // measurement.
  for (int f = 0; f < code.n; ++f) {
    if (is_pivot[f]) continue;
    sched.steps.push_back({PipeEvent::Kind::FeedInit, f, -1});
    for (int slot = 0; slot < sched.buffer_size; ++slot)
      if (slot_acts_on(slot, f))
        sched.steps.push_back({PipeEvent::Kind::BufferCx, f, slot});
    sched.steps.push_back({PipeEvent::Kind::Advance, f, -1});
    sched.steps.push_back({PipeEvent::Kind::MeasureTransversal, f, -1});
  }
  // Drain: pivots take their pending Bell-layer CXs (a logical X support may
  // include pivot columns), then leave to be measured; auxiliaries exit last
  // carrying the outputs.
  for (int i = 0; i < code.m_x(); ++i) {
    int p = pivots[i];
    for (int j = 0; j < code.k; ++j)
      if (circ.code.logical_x[j][p])
        sched.steps.push_back({PipeEvent::Kind::BufferCx, p, code.m_x() + j});
    sched.steps.push_back({PipeEvent::Kind::Advance, p, -1});
    sched.steps.push_back({PipeEvent::Kind::MeasureTransversal, p, -1});
  }
  for (int j = 0; j < code.k; ++j)
    sched.steps.push_back({PipeEvent::Kind::Advance, code.n + j, -1});
  return sched;
}

namespace {

struct EnumMasks {
  std::vector<std::uint32_t> checks;
  std::vector<std::uint32_t> logicals;
};

EnumMasks make_masks(const StabilizerTable& code) {
  if (code.n > 20)
    throw std::invalid_argument("analyze: enumeration limited to n <= 20");
  EnumMasks m;
  auto to_mask = [](const BitRow& r) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i]) v |= (1u << i);
    return v;
  };
  for (const auto& row : code.x_rows) m.checks.push_back(to_mask(row));
  for (const auto& row : code.logical_x) m.logicals.push_back(to_mask(row));
  return m;
}

void check_rate(double p) {
  if (!(p >= 0.0) || p > 0.1)
    throw std::invalid_argument("analyze: p must lie in [0, 0.1]");
}

bool clean_syndrome(const EnumMasks& m, std::uint32_t e) {
  for (auto c : m.checks)
    if (std::popcount(e & c) & 1) return false;
  return true;
}

bool flips_logical(const EnumMasks& m, std::uint32_t e) {
  for (auto l : m.logicals)
    if (std::popcount(e & l) & 1) return true;
  return false;
}

void fill_leading(DistillationAnalysis& a, const std::vector<double>& bad_count) {
  for (std::size_t w = 1; w < bad_count.size(); ++w) {
    if (bad_count[w] > 0) {
      a.leading_coeff = bad_count[w];
      a.leading_power = static_cast<int>(w);
      return;
    }
  }
  a.leading_coeff = 0.0;
  a.leading_power = 0;
}

}  // namespace

DistillationAnalysis analyze_detection(const StabilizerTable& code, double p) {
  check_rate(p);
  EnumMasks m = make_masks(code);
  const int n = code.n;
  std::vector<double> pw(n + 1);
  for (int w = 0; w <= n; ++w)
    pw[w] = std::pow(p, w) * std::pow(1.0 - p, n - w);

  double accept = 0.0, bad = 0.0;
  std::vector<double> bad_count(n + 1, 0.0);
  for (std::uint32_t e = 0; e < (1u << n); ++e) {
    if (!clean_syndrome(m, e)) continue;
    int w = std::popcount(e);
    accept += pw[w];
    if (flips_logical(m, e)) {
      bad += pw[w];
      bad_count[w] += 1.0;
    }
  }
  DistillationAnalysis a;
  a.accept_prob = accept;
  a.out_error = accept > 0.0 ? bad / accept : 0.0;
  fill_leading(a, bad_count);
  return a;
}

DistillationAnalysis analyze_correction(const StabilizerTable& code, double p, int t) {
  check_rate(p);
  if (t < 0 || t > (code.d - 1) / 2)
    throw std::invalid_argument("analyze_correction: t must lie in [0, (d-1)/2]");
  EnumMasks m = make_masks(code);
  const int n = code.n;
  const int n_checks = static_cast<int>(m.checks.size());

  auto syndrome_of = [&](std::uint32_t e) {
    std::uint32_t s = 0;
    for (int c = 0; c < n_checks; ++c)
      if (std::popcount(e & m.checks[c]) & 1) s |= (1u << c);
    return s;
  };

  // Coset leaders in (weight, numeric) order. Enumerating masks by weight.
  std::unordered_map<std::uint32_t, std::uint32_t> leader;
  for (int w = 0; w <= n && leader.size() < (1u << n_checks); ++w) {
    for (std::uint32_t e = 0; e < (1u << n); ++e) {
      if (std::popcount(e) != w) continue;
      std::uint32_t s = syndrome_of(e);
      leader.emplace(s, e);
    }
  }

  std::vector<double> pw(n + 1);
  for (int w = 0; w <= n; ++w)
    pw[w] = std::pow(p, w) * std::pow(1.0 - p, n - w);

  double bad = 0.0;
  std::vector<double> bad_count(n + 1, 0.0);
  for (std::uint32_t e = 0; e < (1u << n); ++e) {
    std::uint32_t l = leader.at(syndrome_of(e));
    // Corrections heavier than t are out of reach; the error stands.
    std::uint32_t residual = (std::popcount(l) <= t) ? (e ^ l) : e;
    if (flips_logical(m, residual)) {
      int w = std::popcount(e);
      bad += pw[w];
      bad_count[w] += 1.0;
    }
  }
  DistillationAnalysis a;
  a.accept_prob = 1.0;
  a.out_error = bad;
  fill_leading(a, bad_count);
  return a;
}

std::vector<std::pair<int, int>> flat_cx_sequence(const DistillationCircuit& circ) {
  std::vector<std::pair<int, int>> seq;
  for (const auto& layer : circ.prep_layers)
    for (int t : layer.targets) seq.emplace_back(layer.control, t);
  return seq;
}

std::vector<std::pair<int, int>> pipelined_cx_sequence(const DistillationCircuit& circ,
                                                       const PipelinedSchedule& sched) {
  std::vector<std::pair<int, int>> seq;
  for (const auto& ev : sched.steps)
    if (ev.kind == PipeEvent::Kind::BufferCx)
      seq.emplace_back(sched.buffer_qubits.at(ev.buffer_slot), ev.qubit);
  (void)circ;
  return seq;
}

}  // namespace scg
