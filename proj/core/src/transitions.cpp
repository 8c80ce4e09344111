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

#include "rotframe/transitions.hpp"

#include <cmath>
#include <complex>
#include <map>

#include "rotframe/error.hpp"

namespace rotframe {

namespace {

Eigen::Index row_of(const EigenDecomposition& decomp, const QuantumNumbers& q) {
  if (!decomp.basis) throw DomainError("decomposition carries no basis");
  return static_cast<Eigen::Index>(decomp.basis->index_of(q));
}

}  // namespace

double averaged_probability(const EigenDecomposition& decomp, const QuantumNumbers& from,
                            const QuantumNumbers& to) {
  const Eigen::Index a = row_of(decomp, from);
  const Eigen::Index b = row_of(decomp, to);
  const Eigen::MatrixXd& c = decomp.coefficients;
  double w = 0.0;
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    const double ca = c(a, i) * c(a, i);
    const double cb = c(b, i) * c(b, i);
    w += ca * cb;
  }
  return w;
}

double time_resolved_probability(const EigenDecomposition& decomp, const QuantumNumbers& from,
                                 const QuantumNumbers& to, double t) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  const Eigen::Index a = row_of(decomp, from);
  const Eigen::Index b = row_of(decomp, to);
  const Eigen::MatrixXd& c = decomp.coefficients;
  std::complex<double> amp = 0.0;
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    const double weight = c(a, i) * c(b, i);
    if (weight == 0.0) continue;
    const double phase = (decomp.energies(i) - to.mu * decomp.laser.omega) * t;
    amp += weight * std::polar(1.0, -phase);
  }
  return std::norm(amp);
}

Eigen::MatrixXd transition_matrix(const EigenDecomposition& decomp) {
  const Eigen::MatrixXd s = decomp.coefficients.cwiseAbs2();
  const Eigen::Index d = s.rows();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
  w.selfadjointView<Eigen::Lower>().rankUpdate(s);
  w.triangularView<Eigen::StrictlyUpper>() = w.transpose();
  return w;
}

double TransitionTable::row_sum() const {
  double s = 0.0;
  for (const auto& [q, w] : probabilities) s += w;
  return s;
}

double TransitionTable::probability(const QuantumNumbers& final) const {
  for (const auto& [q, w] : probabilities)
    if (q == final) return w;
  throw DomainError("state " + final.to_string() + " not in transition table");
}

TransitionTable transition_table(const EigenDecomposition& decomp, const QuantumNumbers& initial,
                                 double degeneracy_gap) {
  const Eigen::Index a = row_of(decomp, initial);
  TransitionTable t;
  t.initial = initial;
  t.laser = decomp.laser;
  t.n0 = decomp.basis->n0();

  const Eigen::MatrixXd& c = decomp.coefficients;
  const Eigen::VectorXd weight = c.row(a).cwiseAbs2().transpose();
  const Eigen::VectorXd row = c.cwiseAbs2() * weight;
  t.probabilities.reserve(decomp.basis->size());
  for (std::size_t f = 0; f < decomp.basis->size(); ++f)
    t.probabilities.emplace_back((*decomp.basis)[f], row(static_cast<Eigen::Index>(f)));

  // The initial state lives in exactly one block; only its pairs matter.
  int initial_block = -1;
  for (Eigen::Index i = 0; i < c.cols() && initial_block < 0; ++i)
    if (c(a, i) != 0.0) initial_block = decomp.block[i];
  for (const DegeneratePair& p : near_degeneracies(decomp, degeneracy_gap))
    if (decomp.block[p.first] == initial_block) t.degeneracies.push_back(p);
  return t;
}

double row_change(const TransitionTable& coarse, const TransitionTable& fine) {
  std::map<QuantumNumbers, double> diff;
  for (const auto& [q, w] : fine.probabilities) diff[q] += w;
  for (const auto& [q, w] : coarse.probabilities) diff[q] -= w;
  double total = 0.0;
  for (const auto& [q, d] : diff) total += std::abs(d);
  return total;
}

ScanPoint evaluate_point(const LaserField& laser, const ScanSettings& settings) {
  ScanPoint p;
  p.laser = laser;
  try {
    static thread_local std::shared_ptr<const BasisSet> basis;
    if (!basis || basis->n0() != settings.n0) basis = std::make_shared<const BasisSet>(settings.n0);
    const PseudoHamiltonianMatrix h = assemble(basis, laser, settings.model);
    const EigenDecomposition d = settings.diagonalizer ? settings.diagonalizer(h)
                                                       : diagonalize(h, settings.diagonalize);
    p.table = transition_table(d, settings.initial, settings.degeneracy_gap);
    p.ok = true;
  } catch (const Error& e) {
    p.ok = false;
    p.error = e.what();
  }
  return p;
}

namespace {

ScanSummary run_scan(const std::vector<double>& axis,
                     const std::function<LaserField(double)>& field_at,
                     const ScanSettings& settings, const ScanSink& sink) {
  BasisSet check(settings.n0);
  check.index_of(settings.initial);
  ScanSummary summary;
  run_ordered<ScanPoint>(
      axis.size(), settings.threads,
      [&](std::size_t i) {
        LaserField laser = field_at(axis[i]);
        ScanPoint p = evaluate_point(laser, settings);
        p.index = i;
        p.axis_value = axis[i];
        return p;
      },
      [&](const ScanPoint& p) {
        ++summary.points;
        if (!p.ok) ++summary.failed;
        sink(p);
      });
  return summary;
}

}  // namespace

ScanSummary spectrum_scan(double amplitude, const std::vector<double>& omegas,
                          const ScanSettings& settings, const ScanSink& sink) {
  require_increasing(omegas, "photon energy axis");
  LaserField{amplitude, 1.0}.validate();
  return run_scan(omegas, [&](double w) { return LaserField{amplitude, w}; }, settings, sink);
}

ScanSummary intensity_scan(double omega, const std::vector<double>& amplitudes,
                           const ScanSettings& settings, const ScanSink& sink) {
  require_increasing(amplitudes, "amplitude axis");
  if (!amplitudes.empty() && amplitudes.front() < 0.0) {
    throw DomainError("amplitude axis must be non-negative");
  }
  LaserField{0.0, omega}.validate();
  return run_scan(amplitudes, [&](double a) { return LaserField{a, omega}; }, settings, sink);
}

std::vector<ScanPoint> collect_spectrum(double amplitude, const std::vector<double>& omegas,
                                        const ScanSettings& settings) {
  std::vector<ScanPoint> out;
  spectrum_scan(amplitude, omegas, settings, [&](const ScanPoint& p) { out.push_back(p); });
  return out;
}

std::vector<ScanPoint> collect_intensity(double omega, const std::vector<double>& amplitudes,
                                         const ScanSettings& settings) {
  std::vector<ScanPoint> out;
  intensity_scan(omega, amplitudes, settings, [&](const ScanPoint& p) { out.push_back(p); });
  return out;
}

// ------------------------------------------------------------------ axes

std::vector<double> make_axis(double start, double stop, int count, AxisSpacing spacing) {
  if (count < 1) throw DomainError("axis needs at least one point");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw DomainError("axis bounds must be finite");
  if (count > 1 && !(stop > start)) throw DomainError("axis stop must exceed start");
  if (spacing == AxisSpacing::logarithmic && !(start > 0.0)) {
    throw DomainError("logarithmic axis needs a positive start");
  }
  std::vector<double> axis(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    axis[i] = spacing == AxisSpacing::linear
                  ? start + f * (stop - start)
                  : std::exp(std::log(start) + f * (std::log(stop) - std::log(start)));
  }
  axis.front() = start;
  if (count > 1) axis.back() = stop;
  return axis;
}

AxisSpacing parse_axis_spacing(const std::string& name) {
  if (name == "linear" || name == "lin") return AxisSpacing::linear;
  if (name == "log" || name == "logarithmic") return AxisSpacing::logarithmic;
  throw ConfigError("unknown axis spacing '" + name + "' (expected linear or log)");
}

void require_increasing(const std::vector<double>& axis, const std::string& what) {
  if (axis.empty()) throw DomainError(what + " is empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i])) throw DomainError(what + " has a non-finite value");
    if (i > 0 && !(axis[i] > axis[i - 1])) throw DomainError(what + " must be strictly increasing");
  }
}

}  // namespace rotframe
