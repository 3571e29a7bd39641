// Command line front end over the core library. Every subcommand writes a
// deterministic report (JSON, CSV or the line-based schedule format) so runs
// with identical inputs diff clean.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scgame/compiler.hpp"
#include "scgame/css_code.hpp"
#include "scgame/distillation.hpp"
#include "scgame/estimator.hpp"
#include "scgame/factory_sim.hpp"
#include "scgame/game.hpp"
#include "scgame/stab_oracle.hpp"
#include "scgame/timing.hpp"

namespace {

using namespace scg;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

StabilizerTable resolve_code(const std::string& name) {
  std::ifstream probe(name);
  if (probe.good()) return load_code_table_file(name);
  return builtin_code(name);
}

std::pair<int, int> parse_pair(const std::string& text, char sep,
                               const std::string& what) {
  auto pos = text.find(sep);
  if (pos == std::string::npos)
    throw CLI::ValidationError(what, "expected <a>" + std::string(1, sep) +
                                         "<b>, got '" + text + "'");
  try {
    std::size_t u0 = 0, u1 = 0;
    int a = std::stoi(text.substr(0, pos), &u0);
    int b = std::stoi(text.substr(pos + 1), &u1);
    if (u0 != pos || u1 != text.size() - pos - 1) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected <a>" + std::string(1, sep) +
                                         "<b>, got '" + text + "'");
  }
}

ShuttleProfile parse_profile(const std::string& name) {
  if (name == "sta") return ShuttleProfile::Sta;
  if (name == "cj") return ShuttleProfile::ConstantJerk;
  if (name == "cv") return ShuttleProfile::ConstantVelocity;
  throw CLI::ValidationError("--profile", "expected sta|cj|cv, got '" + name + "'");
}

DurationTable resolve_durations(const std::string& timing, int d,
                                const std::string& profile) {
  if (timing == "pinned") {
    if (d != 9)
      throw CLI::ValidationError("--timing",
                                 "pinned durations are tabulated for d = 9");
    return pinned_durations();
  }
  if (timing == "physics") {
    TimingConfig cfg;
    cfg.profile = parse_profile(profile);
    return mode_durations(d, cfg);
  }
  throw CLI::ValidationError("--timing", "expected pinned|physics, got '" +
                                             timing + "'");
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string json_string_array(const std::vector<std::string>& items,
                              const std::string& indent) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << "\n" << indent << "  \"" << items[i] << "\"";
    if (i + 1 < items.size()) out << ",";
  }
  if (!items.empty()) out << "\n" << indent;
  out << "]";
  return out.str();
}

// --- distill -----------------------------------------------------------------

int run_distill(const std::string& code_name, const std::string& gate, double p,
                const std::string& mode) {
  StabilizerTable code = resolve_code(code_name);
  if (!is_standard_form(code)) code = standard_form(code);

  DistillTarget target;
  if (gate == "T") target = DistillTarget::T;
  else if (gate == "S") target = DistillTarget::S;
  else if (gate == "Bell") target = DistillTarget::Bell;
  else if (gate == "I") target = DistillTarget::Identity;
  else
    throw CLI::ValidationError("--gate", "expected T|S|Bell|I, got '" + gate + "'");

  DistillationAnalysis analysis;
  if (mode == "detect") {
    analysis = analyze_detection(code, p);
  } else if (mode.rfind("correct:", 0) == 0) {
    int t = 0;
    try {
      t = std::stoi(mode.substr(8));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--mode", "expected correct:<t>, got '" + mode + "'");
    }
    analysis = analyze_correction(code, p, t);
  } else {
    throw CLI::ValidationError("--mode",
                               "expected detect or correct:<t>, got '" + mode + "'");
  }

  auto circ = build_circuit(code, target);
  auto sched = pipeline(circ);

  std::ostringstream out;
  out << "{\n";
  out << "  \"code\": \"" << code_name << "\",\n";
  out << "  \"n\": " << code.n << ",\n";
  out << "  \"k\": " << code.k << ",\n";
  out << "  \"gate\": \"" << gate << "\",\n";
  out << "  \"p\": " << fmt(p) << ",\n";
  out << "  \"mode\": \"" << mode << "\",\n";
  out << "  \"accept_prob\": " << fmt(analysis.accept_prob) << ",\n";
  out << "  \"out_error\": " << fmt(analysis.out_error) << ",\n";
  out << "  \"leading_coeff\": " << fmt(analysis.leading_coeff) << ",\n";
  out << "  \"leading_power\": " << analysis.leading_power << ",\n";
  out << "  \"pipeline\": {\n";
  out << "    \"buffer_size\": " << sched.buffer_size << ",\n";
  out << "    \"feed_count\": " << sched.feed_count << ",\n";
  out << "    \"routing_rounds\": " << sched.routing_rounds << ",\n";
  out << "    \"buffer_qubits\": [";
  for (std::size_t i = 0; i < sched.buffer_qubits.size(); ++i) {
    if (i) out << ", ";
    out << sched.buffer_qubits[i];
  }
  out << "],\n";
  out << "    \"events\": [\n";
  for (std::size_t i = 0; i < sched.steps.size(); ++i) {
    const PipeEvent& ev = sched.steps[i];
    const char* kind = "";
    switch (ev.kind) {
      case PipeEvent::Kind::FeedInit: kind = "feed_init"; break;
      case PipeEvent::Kind::BufferCx: kind = "buffer_cx"; break;
      case PipeEvent::Kind::Advance: kind = "advance"; break;
      case PipeEvent::Kind::MeasureTransversal: kind = "measure_transversal"; break;
    }
    out << "      {\"kind\": \"" << kind << "\"";
    if (ev.qubit >= 0) out << ", \"qubit\": " << ev.qubit;
    if (ev.buffer_slot >= 0) out << ", \"buffer_slot\": " << ev.buffer_slot;
    out << "}";
    if (i + 1 < sched.steps.size()) out << ",";
    out << "\n";
  }
  out << "    ]\n";
  out << "  }\n";
  out << "}\n";
  std::cout << out.str();
  return 0;
}

// --- timing ------------------------------------------------------------------

int run_timing(int d, const std::string& profile, const std::string& sweep) {
  int d_lo = d, d_hi = d;
  if (!sweep.empty()) {
    auto [lo, hi] = parse_pair(sweep, ':', "--sweep");
    d_lo = lo;
    d_hi = hi;
    if (d_lo < 2 || d_hi < d_lo)
      throw CLI::ValidationError("--sweep", "need 2 <= dmin <= dmax");
  }
  TimingConfig cfg;
  cfg.profile = parse_profile(profile);
  std::ostringstream out;
  out << "d,tau_SE,tau_CX,tau_H_direct,tau_H_aod,tau_r,tau_foldS\n";
  for (int dv = d_lo; dv <= d_hi; ++dv) {
    auto t = mode_durations(dv, cfg);
    HadamardMethod aod;
    aod.kind = HadamardMethod::Kind::AodSort;
    out << dv << ',' << fmt(t.tau_se) << ',' << fmt(t.tau_cx) << ','
        << fmt(hadamard_time(dv, HadamardMethod{}, cfg)) << ','
        << fmt(hadamard_time(dv, aod, cfg)) << ',' << fmt(t.tau_r) << ','
        << fmt(fold_transversal_s_time(dv, false, cfg)) << '\n';
  }
  std::cout << out.str();
  return 0;
}

// --- compile -----------------------------------------------------------------

double cycle_time(const DurationTable& t) {
  double ops = std::max(std::max(t.tau_h, t.tau_cx), std::max(t.tau_mx, t.tau_mz));
  return t.tau_r + ops + 2.0 * t.tau_se;
}

int run_compile_random(const std::vector<std::string>& tokens, double throughput,
                       const DurationTable& durations, const std::string& out_path) {
  WorkloadSpec spec;
  for (const std::string& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--random", "expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    try {
      if (key == "W" || key == "w") spec.width = std::stoi(value);
      else if (key == "tcount") spec.t_count = std::stod(value);
      else if (key == "tperlayer") spec.t_per_layer = std::stod(value);
      else
        throw CLI::ValidationError("--random", "unknown key '" + key + "'");
    } catch (const CLI::ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--random", "bad value in '" + tok + "'");
    }
  }
  auto workload = synthetic_workload(spec);
  AggregateModel m;
  m.depth = workload.depth;
  m.t_count = workload.t_count;
  m.states_per_cycle = throughput;
  m.tau_cycle = cycle_time(durations);
  auto r = aggregate_makespan(m);

  std::ostringstream out;
  out << "{\n";
  out << "  \"width\": " << workload.width << ",\n";
  out << "  \"depth\": " << fmt(workload.depth) << ",\n";
  out << "  \"t_count\": " << fmt(workload.t_count) << ",\n";
  out << "  \"states_per_cycle\": " << fmt(throughput) << ",\n";
  out << "  \"tau_cycle_seconds\": " << fmt(m.tau_cycle) << ",\n";
  out << "  \"effective_depth\": " << fmt(r.effective_depth) << ",\n";
  out << "  \"makespan_seconds\": " << fmt(r.makespan_seconds) << "\n";
  out << "}\n";
  write_out(out_path, out.str());
  return 0;
}

int run_compile(const std::string& circuit_path,
                const std::vector<std::string>& random_tokens, double throughput,
                const std::string& grid, const std::string& timing, int d,
                const std::string& profile, unsigned seed, int t_ports,
                int y_ports, const std::string& out_path) {
  DurationTable durations = resolve_durations(timing, d, profile);
  if (!random_tokens.empty())
    return run_compile_random(random_tokens, throughput, durations, out_path);
  if (circuit_path.empty())
    throw CLI::ValidationError("compile", "need --circuit or --random");

  auto circ = parse_circuit_file(circuit_path);
  auto [cols, rows] = parse_pair(grid, 'x', "--grid");
  if (cols < 1 || rows < 1)
    throw CLI::ValidationError("--grid", "need positive dimensions");
  if (circ.width > cols * rows)
    throw CLI::ValidationError(
        "--grid", "circuit needs " + std::to_string(circ.width) +
                      " cells, grid holds " + std::to_string(cols * rows));

  CompilerConfig cfg;
  cfg.seed = seed;
  cfg.layout.t_ports = t_ports;
  cfg.layout.y_ports = y_ports;
  auto lowered = compile_circuit(circ, cfg);
  auto res = run_schedule(lowered.placement.grid, lowered.ops, GameConfig{},
                          durations);
  if (!res.ok()) {
    std::cerr << "lowered schedule violates the rules: "
              << res.violation->detail << "\n";
    return 1;
  }

  std::string schedule_text = format_schedule(lowered.ops);
  bool json = out_path.size() >= 5 &&
              out_path.compare(out_path.size() - 5, 5, ".json") == 0;
  if (!json) {
    std::ostringstream out;
    out << schedule_text;
    out << "# makespan_seconds " << fmt(res.timeline->makespan) << "\n";
    write_out(out_path, out.str());
    return 0;
  }
  std::ostringstream out;
  out << "{\n";
  out << "  \"width\": " << circ.width << ",\n";
  out << "  \"gates\": " << circ.gates.size() << ",\n";
  out << "  \"layers\": " << lowered.stats.layers << ",\n";
  out << "  \"cycles\": " << lowered.stats.cycles << ",\n";
  out << "  \"t_count\": " << lowered.stats.t_count << ",\n";
  out << "  \"t_stall_cycles\": " << lowered.stats.t_stall_cycles << ",\n";
  out << "  \"y_stall_cycles\": " << lowered.stats.y_stall_cycles << ",\n";
  out << "  \"grid_cols\": " << lowered.placement.grid.cols << ",\n";
  out << "  \"grid_rows\": " << lowered.placement.grid.rows << ",\n";
  out << "  \"makespan_seconds\": " << fmt(res.timeline->makespan) << ",\n";
  out << "  \"ops\": " << json_string_array(split_lines(schedule_text), "  ")
      << "\n";
  out << "}\n";
  write_out(out_path, out.str());
  return 0;
}

// --- factory -----------------------------------------------------------------

const char* step_kind_name(FactoryStep::Kind k) {
  switch (k) {
    case FactoryStep::Kind::Head: return "head";
    case FactoryStep::Kind::Feed: return "feed";
    case FactoryStep::Kind::Tail: return "tail";
  }
  return "?";
}

int run_factory(const std::string& code_name, int n_mb, bool reorder,
                const std::string& timing, int d, const std::string& profile,
                double tau_inject, const std::string& trace_path,
                const std::string& sweep, bool y_factory) {
  DurationTable durations = resolve_durations(timing, d, profile);
  if (y_factory) {
    auto rep = simulate_y_factory(durations);
    std::ostringstream out;
    out << "{\n";
    out << "  \"prep_seconds\": " << fmt(rep.prep_seconds) << ",\n";
    out << "  \"slot_seconds\": " << fmt(rep.slot_seconds) << ",\n";
    out << "  \"slots\": " << rep.slots << ",\n";
    out << "  \"slot_gates\": [";
    for (std::size_t i = 0; i < rep.slot_gates.size(); ++i) {
      if (i) out << ", ";
      out << "\"" << rep.slot_gates[i] << "\"";
    }
    out << "],\n";
    out << "  \"total_seconds\": " << fmt(rep.total_seconds) << ",\n";
    out << "  \"schedule\": "
        << json_string_array(split_lines(format_schedule(rep.schedule)), "  ")
        << "\n";
    out << "}\n";
    std::cout << out.str();
    return 0;
  }

  FactoryConfig cfg;
  cfg.code = resolve_code(code_name);
  if (!is_standard_form(cfg.code)) cfg.code = standard_form(cfg.code);
  cfg.timing = durations;
  cfg.reorder = reorder;
  cfg.tau_inject = tau_inject;

  if (!sweep.empty()) {
    auto [lo, hi] = parse_pair(sweep, ':', "--sweep");
    if (lo < 1 || hi < lo)
      throw CLI::ValidationError("--sweep", "need 1 <= nmin <= nmax");
    std::ostringstream out;
    out << "n_mb,steps,stalled_steps,total_seconds\n";
    for (int n = lo; n <= hi; ++n) {
      cfg.n_mb = n;
      auto rep = simulate_t_factory(cfg);
      out << n << ',' << rep.steps << ',' << rep.stalled_steps << ','
          << fmt(rep.total_seconds) << '\n';
    }
    std::cout << out.str();
    return 0;
  }

  cfg.n_mb = n_mb;
  auto rep = simulate_t_factory(cfg);
  std::ostringstream out;
  out << "{\n";
  out << "  \"code\": \"" << code_name << "\",\n";
  out << "  \"n_mb\": " << n_mb << ",\n";
  out << "  \"reorder\": " << (reorder ? "true" : "false") << ",\n";
  out << "  \"tau_mv_seconds\": " << fmt(rep.tau_mv) << ",\n";
  out << "  \"cell_cycle_seconds\": " << fmt(rep.cell_cycle) << ",\n";
  out << "  \"steps\": " << rep.steps << ",\n";
  out << "  \"stalled_steps\": " << rep.stalled_steps << ",\n";
  out << "  \"states_consumed\": " << rep.states_consumed << ",\n";
  out << "  \"total_seconds\": " << fmt(rep.total_seconds) << "\n";
  out << "}\n";
  std::cout << out.str();

  if (!trace_path.empty()) {
    std::ostringstream csv;
    csv << "index,kind,start,duration,wait\n";
    for (const auto& step : rep.trace)
      csv << step.index << ',' << step_kind_name(step.kind) << ','
          << fmt(step.start) << ',' << fmt(step.duration) << ','
          << fmt(step.wait) << '\n';
    write_out(trace_path, csv.str());
  }
  return 0;
}

// --- estimate ----------------------------------------------------------------

int run_estimate(const std::string& preset_name, const std::string& config_path,
                 const std::string& format) {
  ArchitectureConfig base;
  if (!preset_name.empty()) base = preset(preset_name);
  ArchitectureConfig cfg =
      config_path.empty() ? base : load_architecture_config_file(config_path, base);
  auto e = estimate(cfg);
  if (format == "table") std::cout << emit_table(e);
  else if (format == "csv") std::cout << emit_csv(e);
  else if (format == "json") std::cout << emit_json(e);
  else
    throw CLI::ValidationError("--format",
                               "expected table|csv|json, got '" + format + "'");
  return e.feasible ? 0 : 2;
}

// --- validate ----------------------------------------------------------------

int run_validate(const std::string& schedule_path, const std::string& grid,
                 const std::vector<std::string>& t_cells,
                 const std::vector<std::string>& y_cells,
                 const std::vector<std::string>& phi_cells,
                 const std::string& timing, int d, const std::string& profile,
                 double budget) {
  auto [cols, rows] = parse_pair(grid, 'x', "--grid");
  if (cols < 1 || rows < 1)
    throw CLI::ValidationError("--grid", "need positive dimensions");
  GridState g = make_grid(cols, rows);
  auto add_factories = [&g](const std::vector<std::string>& cells, PrepState s,
                            const char* flag) {
    for (const std::string& text : cells) {
      auto [c, r] = parse_pair(text, ',', flag);
      if (!g.in_bounds(c, r))
        throw CLI::ValidationError(flag, "cell " + text + " out of bounds");
      g.at(c, r).factory_member = true;
      g.factories.push_back(Factory{s, {{c, r}}});
    }
  };
  add_factories(t_cells, PrepState::T, "--t-factory");
  add_factories(y_cells, PrepState::Y, "--y-factory");
  add_factories(phi_cells, PrepState::Phi, "--phi-factory");

  GameConfig cfg;
  cfg.p_budget = budget;
  Schedule sched;
  try {
    sched = parse_schedule_file(schedule_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << schedule_path << ": " << e.what() << "\n";
    return 1;
  }
  auto res =
      run_schedule(std::move(g), sched, cfg, resolve_durations(timing, d, profile));
  if (!res.ok()) {
    const Violation& v = *res.violation;
    std::cerr << schedule_path << ":";
    if (v.line >= 0) std::cerr << " line " << v.line << ":";
    if (v.rule) std::cerr << " " << rule_name(*v.rule) << ":";
    std::cerr << " " << v.detail << "\n";
    return 1;
  }
  const Timeline& tl = *res.timeline;
  int autos = 0;
  for (const auto& [cell, count] : tl.auto_se_entries) autos += count;
  std::cout << "ok: " << tl.events.size() << " events, makespan "
            << fmt(tl.makespan) << " s, " << autos
            << " interposed SE round(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transversal surface-code game toolkit"};
  app.require_subcommand(1);

  // distill
  auto* distill = app.add_subcommand("distill", "analyze a distillation block");
  std::string di_code = "reed_muller15", di_gate = "T", di_mode = "detect";
  double di_p = 1e-4;
  distill->add_option("--code", di_code, "built-in code name or table file");
  distill->add_option("--gate", di_gate, "T|S|Bell|I");
  distill->add_option("--p", di_p, "physical error rate");
  distill->add_option("--mode", di_mode, "detect or correct:<t>");

  // timing
  auto* timing = app.add_subcommand("timing", "per-mode durations from the shuttle model");
  int ti_d = 9;
  std::string ti_profile = "sta", ti_sweep;
  timing->add_option("--d", ti_d, "code distance");
  timing->add_option("--profile", ti_profile, "sta|cj|cv transport ramp");
  timing->add_option("--sweep", ti_sweep, "dmin:dmax range instead of a single d");

  // compile
  auto* compile = app.add_subcommand("compile", "lower a circuit to a grid schedule");
  std::string co_circuit, co_grid = "25x5", co_timing = "pinned", co_profile = "sta";
  std::string co_out;
  std::vector<std::string> co_random;
  double co_throughput = 5.0;
  int co_d = 9, co_t_ports = 1, co_y_ports = 1;
  unsigned co_seed = 1;
  compile->add_option("--circuit", co_circuit, "gate list file");
  compile->add_option("--random", co_random,
                      "synthetic workload, e.g. W=100 tcount=1e8 tperlayer=5")
      ->expected(3);
  compile->add_option("--throughput", co_throughput,
                      "magic states per cycle for the synthetic path");
  compile->add_option("--grid", co_grid, "logical region, <cols>x<rows>");
  compile->add_option("--timing", co_timing, "pinned|physics");
  compile->add_option("--d", co_d, "code distance for physics timing");
  compile->add_option("--profile", co_profile, "sta|cj|cv transport ramp");
  compile->add_option("--seed", co_seed, "teleport outcome seed");
  compile->add_option("--t-ports", co_t_ports, "T factory ports in the layout");
  compile->add_option("--y-ports", co_y_ports, "Y factory ports in the layout");
  compile->add_option("--out", co_out,
                      "output file; .json selects the JSON report");

  // factory
  auto* factory = app.add_subcommand("factory", "simulate a magic-state factory");
  std::string fa_code = "reed_muller15", fa_timing = "pinned", fa_profile = "sta";
  std::string fa_trace, fa_sweep;
  int fa_nmb = 4, fa_d = 9;
  bool fa_no_reorder = false, fa_y = false;
  double fa_tau_inject = -1.0;
  factory->add_option("--code", fa_code, "built-in code name or table file");
  factory->add_option("--nmb", fa_nmb, "injection cells in the measurement block");
  factory->add_flag("--no-reorder", fa_no_reorder, "disable buffer-load overlap");
  factory->add_option("--timing", fa_timing, "pinned|physics");
  factory->add_option("--d", fa_d, "code distance for physics timing");
  factory->add_option("--profile", fa_profile, "sta|cj|cv transport ramp");
  factory->add_option("--tau-inject", fa_tau_inject,
                      "injection seconds; negative derives 4*tau_SE");
  factory->add_option("--trace", fa_trace, "write the per-step CSV trace here");
  factory->add_option("--sweep", fa_sweep, "nmin:nmax CSV sweep over --nmb");
  factory->add_flag("--y", fa_y, "report the catalytic Y factory instead");

  // estimate
  auto* est = app.add_subcommand("estimate", "end-to-end resource estimate");
  std::string es_preset, es_config, es_format = "table";
  est->add_option("--preset", es_preset, "table1|zoned-baseline");
  est->add_option("--config", es_config, "key = value config file");
  est->add_option("--format", es_format, "table|csv|json");

  // validate
  auto* validate = app.add_subcommand("validate", "rule-check a schedule file");
  std::string va_schedule, va_grid = "25x5", va_timing = "pinned", va_profile = "sta";
  std::vector<std::string> va_t, va_y, va_phi;
  int va_d = 9;
  double va_budget = 0.01;
  validate->add_option("schedule", va_schedule, "schedule file")->required();
  validate->add_option("--grid", va_grid, "<cols>x<rows>");
  validate->add_option("--t-factory", va_t, "T factory cell <col>,<row>");
  validate->add_option("--y-factory", va_y, "Y factory cell <col>,<row>");
  validate->add_option("--phi-factory", va_phi, "Bell factory cell <col>,<row>");
  validate->add_option("--timing", va_timing, "pinned|physics");
  validate->add_option("--d", va_d, "code distance for physics timing");
  validate->add_option("--profile", va_profile, "sta|cj|cv transport ramp");
  validate->add_option("--budget", va_budget, "accumulated error budget per cell");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*distill) return run_distill(di_code, di_gate, di_p, di_mode);
    if (*timing) return run_timing(ti_d, ti_profile, ti_sweep);
    if (*compile)
      return run_compile(co_circuit, co_random, co_throughput, co_grid, co_timing,
                         co_d, co_profile, co_seed, co_t_ports, co_y_ports, co_out);
    if (*factory)
      return run_factory(fa_code, fa_nmb, !fa_no_reorder, fa_timing, fa_d,
                         fa_profile, fa_tau_inject, fa_trace, fa_sweep, fa_y);
    if (*est) return run_estimate(es_preset, es_config, es_format);
    if (*validate)
      return run_validate(va_schedule, va_grid, va_t, va_y, va_phi, va_timing,
                          va_d, va_profile, va_budget);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
