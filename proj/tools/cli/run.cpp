// Copyright 2026 The rotframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "rotframe/error.hpp"
#include "rotframe/ionization.hpp"
#include "rotframe/transitions.hpp"
#include "rotframe/units.hpp"

namespace rotframe::cli {

namespace {

using nlohmann::ordered_json;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  // Shortest %g form that reads back to the same double.
  char buf[32];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["mode"] = mode_name(c.mode);
  j["preset"] = c.preset;
  j["n0"] = c.n0;
  j["initial_state"] = {c.initial.n, c.initial.l, c.initial.mu};
  j["amplitude_vspm"] = c.amplitude_vspm ? ordered_json(*c.amplitude_vspm) : ordered_json();
  j["photon_energy_ev"] = c.photon_energy_ev ? ordered_json(*c.photon_energy_ev) : ordered_json();
  if (c.sweep) {
    j["sweep"] = {{"axis", c.mode == Mode::spectrum ? "photon_energy_ev" : "amplitude_vspm"},
                  {"start", c.sweep->start},
                  {"stop", c.sweep->stop},
                  {"count", c.sweep->count},
                  {"spacing", c.sweep->spacing == AxisSpacing::linear ? "linear" : "log"}};
  }
  j["reduced_mass"] = c.reduced_mass;
  j["drop_a2"] = c.drop_a2;
  j["threads"] = c.threads;
  j["output_path"] = c.output_path;
  j["w_threshold"] = c.w_threshold;
  if (c.fail_point) j["fail_point"] = *c.fail_point;
  return j;
}

ScanSettings scan_settings(const RunConfig& c, const std::vector<LaserField>& lasers) {
  ScanSettings s;
  s.n0 = c.n0;
  s.initial = c.initial;
  s.model.reduced_mass = c.reduced_mass;
  s.model.keep_a2 = !c.drop_a2;
  s.threads = c.threads;
  s.degeneracy_gap = c.degeneracy_gap;
  s.diagonalize.residual_tolerance = c.residual_tolerance;
  s.diagonalize.orthonormality_tolerance = c.orthonormality_tolerance;
  if (c.fail_point && *c.fail_point < lasers.size()) {
    const LaserField bad = lasers[*c.fail_point];
    const DiagonalizeOptions opts = s.diagonalize;
    const std::size_t index = *c.fail_point;
    s.diagonalizer = [bad, opts, index](const PseudoHamiltonianMatrix& h) {
      if (h.laser.amplitude == bad.amplitude && h.laser.omega == bad.omega) {
        throw NumericError("injected eigensolver failure",
                           "debug.fail_point=" + std::to_string(index));
      }
      return diagonalize(h, opts);
    };
  }
  return s;
}

ordered_json degeneracy_json(const std::vector<DegeneratePair>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pairs) out.push_back({p.first, p.second, p.gap});
  return out;
}

struct Job {
  const RunConfig& config;
  std::ostream& csv;
  std::ostream& log;
  ordered_json points = ordered_json::array();
  std::size_t failed = 0;
};

void run_transitions(Job& job) {
  const RunConfig& c = job.config;
  // Axis in I/O units and the matching fields.
  std::vector<double> axis;
  std::vector<LaserField> lasers;
  if (c.mode == Mode::spectrum || c.mode == Mode::point) {
    axis = c.mode == Mode::point ? std::vector<double>{*c.photon_energy_ev} : c.sweep->values();
    const double a = convert_vector_potential(*c.amplitude_vspm);
    for (double ev : axis) lasers.push_back({a, ev_to_hartree(ev)});
  } else {
    axis = c.sweep->values();
    const double w = ev_to_hartree(*c.photon_energy_ev);
    for (double vspm : axis) lasers.push_back({convert_vector_potential(vspm), w});
  }
  const ScanSettings settings = scan_settings(c, lasers);
  const QuantumNumbers& q0 = c.initial;
  const std::string initial =
      std::to_string(q0.n) + "," + std::to_string(q0.l) + "," + std::to_string(q0.mu);

  auto sink = [&](const ScanPoint& p) {
    const std::string x = num(axis[p.index]);
    ordered_json meta = {{"index", p.index}, {"axis_value", axis[p.index]}};
    if (!p.ok) {
      ++job.failed;
      job.csv << x << ',' << initial << ",nan,nan,nan,nan,failed\n";
      meta["status"] = "failed";
      meta["error"] = p.error;
      job.log << "point " << p.index << " (" << x << ") failed: " << p.error << '\n';
    } else {
      const TransitionTable& t = *p.table;
      const int flag = t.degenerate() ? 1 : 0;
      for (const auto& [f, w] : t.probabilities) {
        if (c.w_threshold > 0.0 && w < c.w_threshold) continue;
        job.csv << x << ',' << initial << ',' << f.n << ',' << f.l << ',' << f.mu << ','
                << num(w) << ',' << flag << '\n';
      }
      meta["status"] = "ok";
      meta["row_sum"] = t.row_sum();
      meta["degenerate_pairs"] = degeneracy_json(t.degeneracies);
    }
    job.csv.flush();
    job.points.push_back(meta);
  };

  if (c.mode == Mode::spectrum || c.mode == Mode::point) {
    std::vector<double> omegas;
    for (const auto& l : lasers) omegas.push_back(l.omega);
    spectrum_scan(lasers.front().amplitude, omegas, settings, sink);
  } else {
    std::vector<double> amplitudes;
    for (const auto& l : lasers) amplitudes.push_back(l.amplitude);
    intensity_scan(lasers.front().omega, amplitudes, settings, sink);
  }
}

void run_ionization(Job& job) {
  const RunConfig& c = job.config;
  const std::vector<double> axis = c.sweep->values();
  const double w = ev_to_hartree(*c.photon_energy_ev);
  std::vector<LaserField> lasers;
  std::vector<double> amplitudes;
  for (double vspm : axis) {
    lasers.push_back({convert_vector_potential(vspm), w});
    amplitudes.push_back(lasers.back().amplitude);
  }
  const ScanSettings settings = scan_settings(c, lasers);
  const std::string omega_ev = num(*c.photon_energy_ev);

  auto sink = [&](const IonizationPoint& p) {
    const std::string a = num(axis[p.index]);
    ordered_json meta = {{"index", p.index}, {"axis_value", axis[p.index]}};
    if (!p.ok) {
      ++job.failed;
      job.csv << a << ',' << omega_ev << ",nan,nan,nan,nan,nan,nan,failed\n";
      meta["status"] = "failed";
      meta["error"] = p.error;
      job.log << "point " << p.index << " (" << a << ") failed: " << p.error << '\n';
    } else {
      const std::string head = a + ',' + omega_ev + ',' + std::to_string(p.tracked.index) + ',' +
                               num(p.tracked.overlap) + ',';
      if (p.result.records.empty()) {
        job.csv << head << num(p.energy) << ",nan,nan,nan,0\n";
      }
      for (const IonizationRecord& r : p.result.records) {
        job.csv << head << num(r.E_i) << ',' << r.mu_branch << ',' << num(hartree_to_ev(r.E_f0))
                << ',' << num(r.eta) << ',' << num(r.sigma) << '\n';
      }
      meta["status"] = "ok";
      meta["dressed_index"] = p.tracked.index;
      meta["overlap"] = p.tracked.overlap;
      meta["ambiguous"] = p.tracked.ambiguous;
      if (p.tracked.ambiguous) meta["warning"] = p.tracked.warning;
      meta["total_rate"] = p.result.total_rate;
      meta["total_sigma_pia02"] = p.result.total_sigma;
      meta["open_branches"] = p.result.records.size();
    }
    job.csv.flush();
    job.points.push_back(meta);
  };
  ionization_intensity_scan(w, amplitudes, settings, sink);
}

}  // namespace

std::string metadata_path(const std::string& csv_path) { return csv_path + ".meta.json"; }

int run(const RunConfig& config, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  std::ofstream csv(config.output_path, std::ios::trunc);
  if (!csv) {
    log << "error: cannot open " << config.output_path << " for writing\n";
    return kExitIo;
  }
  csv << (config.mode == Mode::ionization ? kIonizationHeader : kTransitionHeader) << '\n';

  Job job{config, csv, log};
  if (config.mode == Mode::ionization) {
    run_ionization(job);
  } else {
    run_transitions(job);
  }
  csv.close();
  if (!csv) {
    log << "error: writing " << config.output_path << " failed\n";
    return kExitIo;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = job.failed > 0 ? kExitFailedPoint : kExitOk;

  ordered_json meta;
  meta["tool"] = "rotframe";
  meta["version"] = ROTFRAME_VERSION;
  meta["constants"] = std::string(PhysicalConstants::version);
  meta["config"] = config_json(config);
  meta["tolerances"] = {{"degeneracy_gap_hartree", config.degeneracy_gap},
                        {"eigen_residual_relative", config.residual_tolerance},
                        {"orthonormality", config.orthonormality_tolerance}};
  meta["units"] = {{"axis_value", config.mode == Mode::intensity ? "V s / m" : "eV"},
                   {"A_vspm", "V s / m"},
                   {"E_i_hartree", "hartree"},
                   {"E_f0_eV", "eV"},
                   {"sigma_pia02", "pi a0^2"}};
  ordered_json caveats = ordered_json::array();
  caveats.push_back(
      "W rows of near-degenerate points (degenerate_flag=1) depend on the choice of basis "
      "inside the degenerate subspace");
  if (config.mode == Mode::ionization) {
    caveats.push_back(
        "absolute cross sections are normalised against the weak-field one-photon limit; "
        "strong-field values carry no independent check");
    caveats.push_back("dressed_index is the state with the largest weight on the initial state; "
                      "overlap < 0.5 means it is strongly mixed");
  }
  meta["caveats"] = caveats;
  meta["points"] = job.points;
  meta["failed_points"] = job.failed;
  meta["wall_time_s"] = wall;
  meta["exit_code"] = code;

  std::ofstream side(metadata_path(config.output_path), std::ios::trunc);
  if (!side) {
    log << "error: cannot write " << metadata_path(config.output_path) << '\n';
    return kExitIo;
  }
  side << meta.dump(2) << '\n';
  if (!side) return kExitIo;
  log << "wrote " << config.output_path << " (" << job.points.size() << " points, " << job.failed
      << " failed, " << wall << " s)\n";
  return code;
}

}  // namespace rotframe::cli
