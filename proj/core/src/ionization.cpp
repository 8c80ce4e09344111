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

#include "rotframe/ionization.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "detail/hydrogenic.hpp"
#include "rotframe/error.hpp"
#include "rotframe/specfun.hpp"

namespace rotframe {

void ContinuumState::validate() const {
  if (!(energy > 0.0) || !std::isfinite(energy)) throw DomainError("continuum energy must be > 0");
  if (l < 0 || mu < -l || mu > l) throw DomainError("continuum state needs |mu| <= l");
}

double photoelectron_energy(double E_i, int mu_branch, double omega) {
  return E_i - mu_branch * omega;
}

double eta_index(double E_i, double omega, int mu_branch, double mass) {
  if (!(omega > 0.0)) throw DomainError("eta_index needs omega > 0");
  return (E_i + 0.5 * mass) / omega - mu_branch;
}

double continuum_radial_moment(double energy, int l_final, int n, int l, int power) {
  using specfun::HighComplex;
  using specfun::HighReal;
  if (!(energy > 0.0)) throw DomainError("continuum energy must be > 0");
  if (l_final < 0) throw DomainError("continuum partial wave must be >= 0");
  detail::require_shell(n, l);
  const int u = l + l_final + power + 1;
  if (u <= 0) throw DomainError("radial integrand is not integrable at the origin");

  // R_El = sqrt(2/(pi k)) C_l(eta) k^{l+1} r^l e^{-ikr} M(l+1-i eta, 2l+2, 2ikr),
  // bound side in t = 2r/n: e^{-r/n - ikr} = e^{-s t}, 2ikr = (ikn) t.
  const double k = std::sqrt(2.0 * energy);
  const double eta = -1.0 / k;
  const HighComplex ikn(HighReal(0), HighReal(k) * n);
  const HighComplex s = (HighComplex(1) + ikn) / 2;
  const specfun::KummerParams<HighComplex> bound{HighComplex(l + 1 - n), HighReal(2 * l + 2)};
  const specfun::KummerParams<HighComplex> cont{HighComplex(HighReal(l_final + 1), HighReal(-eta)),
                                                HighReal(2 * l_final + 2)};
  const HighComplex value =
      specfun::laplace_1f1_product<HighComplex>(s, HighReal(u), bound, cont, ikn);
  const HighReal pref = detail::bound_normalisation(n, l) *
                        boost::multiprecision::pow(HighReal(n) / 2, u);
  const double outer = std::sqrt(2.0 / (std::numbers::pi * k)) *
                       specfun::coulomb_normalization(l_final, eta) * std::pow(k, l_final + 1);
  // The product is real; the imaginary part is rounding residue.
  return outer * static_cast<double>((pref * value).real());
}

namespace {

// Unit-mass radial pieces, scaled to mass m:
//   <f_E|p|b>_m = sqrt(m) <f_{E/m}|p|b>_1,  <f_E|b>_m = <f_{E/m}|b>_1 / sqrt(m).
double px_unit(double energy, int l_final, int mu_final, const QuantumNumbers& b, double x_radial) {
  const double ang = angular_x(l_final, mu_final, b.l, b.mu);
  return (b.l - l_final) * (bound_energy(b.n) - energy) * ang * x_radial;
}

}  // namespace

double bound_free_px(const ContinuumState& final, const QuantumNumbers& bound, double mass) {
  final.validate();
  if (!bound.valid()) throw DomainError("invalid bound state");
  if (std::abs(final.l - bound.l) != 1 || std::abs(final.mu - bound.mu) != 1) return 0.0;
  const double e = final.energy / mass;
  const double x = continuum_radial_moment(e, final.l, bound.n, bound.l, 3);
  return std::sqrt(mass) * px_unit(e, final.l, final.mu, bound, x);
}

double bound_free_overlap(const ContinuumState& final, const QuantumNumbers& bound, double mass) {
  final.validate();
  if (!bound.valid()) throw DomainError("invalid bound state");
  if (final.l != bound.l || final.mu != bound.mu) return 0.0;
  const double e = final.energy / mass;
  return continuum_radial_moment(e, final.l, bound.n, bound.l, 2) / std::sqrt(mass);
}

namespace {

// Amplitudes H''_l for one branch, caching radial integrals by (l_f, n, l_b).
class BranchAmplitudes {
 public:
  BranchAmplitudes(const EigenDecomposition& decomp, std::size_t dressed, double energy)
      : decomp_(decomp), dressed_(dressed), mass_(decomp.model.mass()), energy_(energy) {}

  std::complex<double> amplitude(int l_final, int mu_final) {
    const BasisSet& basis = *decomp_.basis;
    const double a = decomp_.laser.amplitude;
    if (a == 0.0) return 0.0;
    const double e = energy_ / mass_;
    const auto col = static_cast<Eigen::Index>(dressed_);
    double sum = 0.0;
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const double c = decomp_.coefficients(static_cast<Eigen::Index>(row), col);
      if (c == 0.0) continue;
      const QuantumNumbers& b = basis[row];
      if (std::abs(b.l - l_final) == 1 && std::abs(b.mu - mu_final) == 1) {
        const double px =
            std::sqrt(mass_) * px_unit(e, l_final, mu_final, b, radial(l_final, b.n, b.l, 3));
        sum += c * a * px / mass_;
      } else if (decomp_.model.keep_a2 && b.l == l_final && b.mu == mu_final) {
        const double ovl = radial(l_final, b.n, b.l, 2) / std::sqrt(mass_);
        sum += c * a * a / (2.0 * mass_) * ovl;
      }
    }
    return sum;
  }

 private:
  double radial(int l_final, int n, int l, int power) {
    const auto key = std::make_tuple(l_final, n, l, power);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, continuum_radial_moment(energy_ / mass_, l_final, n, l, power)).first;
    }
    return it->second;
  }

  const EigenDecomposition& decomp_;
  std::size_t dressed_;
  double mass_;
  double energy_;
  std::map<std::tuple<int, int, int, int>, double> cache_;
};

void require_dressed(const EigenDecomposition& decomp, std::size_t dressed_index) {
  if (!decomp.basis) throw DomainError("ionization needs a decomposition with a basis");
  if (dressed_index >= static_cast<std::size_t>(decomp.size())) {
    throw DomainError("dressed state index out of range");
  }
}

}  // namespace

std::complex<double> bound_free_element(const EigenDecomposition& decomp,
                                        std::size_t dressed_index, const ContinuumState& final) {
  require_dressed(decomp, dressed_index);
  final.validate();
  return BranchAmplitudes(decomp, dressed_index, final.energy).amplitude(final.l, final.mu);
}

IonizationResult ionize(const EigenDecomposition& decomp, std::size_t dressed_index,
                        const IonizationOptions& options) {
  require_dressed(decomp, dressed_index);
  const double omega = decomp.laser.omega;
  const double a = decomp.laser.amplitude;
  const double mass = decomp.model.mass();
  const double alpha = PhysicalConstants::codata2018().fine_structure_alpha;
  const int lmax = options.max_partial_wave >= 0 ? options.max_partial_wave : decomp.basis->n0();
  const double e_i = decomp.energies(static_cast<Eigen::Index>(dressed_index));

  IonizationResult out;
  for (int mu = -lmax; mu <= lmax; ++mu) {
    const double e_f0 = photoelectron_energy(e_i, mu, omega);
    if (!(e_f0 > 0.0)) continue;
    IonizationRecord rec;
    rec.dressed_index = dressed_index;
    rec.E_i = e_i;
    rec.mu_branch = mu;
    rec.E_f0 = e_f0;
    rec.eta = eta_index(e_i, omega, mu, mass);
    rec.beta_l.assign(static_cast<std::size_t>(lmax) + 1, 0.0);

    const double v = std::sqrt(2.0 * e_f0 / mass);
    BranchAmplitudes amps(decomp, dressed_index, e_f0);
    double sum_h2 = 0.0;
    double sum_b2 = 0.0;
    for (int l = std::abs(mu); l <= lmax; ++l) {
      const std::complex<double> h = amps.amplitude(l, mu);
      sum_h2 += std::norm(h);
      if (a > 0.0) {
        const std::complex<double> beta = std::sqrt(std::numbers::pi / (2.0 * v)) * h / a;
        rec.beta_l[static_cast<std::size_t>(l)] = beta;
        sum_b2 += std::norm(beta);
      }
    }
    rec.rate = 2.0 * std::numbers::pi * sum_h2;
    rec.sigma = 16.0 * alpha * v / omega * sum_b2;
    out.total_rate += rec.rate;
    out.total_sigma += rec.sigma;
    out.records.push_back(std::move(rec));
  }
  return out;
}

double ionization_rate(const EigenDecomposition& decomp, std::size_t dressed_index,
                       const IonizationOptions& options) {
  return ionize(decomp, dressed_index, options).total_rate;
}

double cross_section(const EigenDecomposition& decomp, std::size_t dressed_index,
                     const IonizationOptions& options) {
  return ionize(decomp, dressed_index, options).total_sigma;
}

ScanSummary ionization_intensity_scan(double omega, const std::vector<double>& amplitudes,
                                      const ScanSettings& settings, const IonizationSink& sink,
                                      const IonizationOptions& options) {
  require_increasing(amplitudes, "amplitude axis");
  if (amplitudes.front() < 0.0) throw DomainError("amplitude axis must be non-negative");
  LaserField{0.0, omega}.validate();
  const auto basis = std::make_shared<const BasisSet>(settings.n0);
  basis->index_of(settings.initial);

  ScanSummary summary;
  run_ordered<IonizationPoint>(
      amplitudes.size(), settings.threads,
      [&](std::size_t i) {
        IonizationPoint p;
        p.index = i;
        p.laser = LaserField{amplitudes[i], omega};
        try {
          const PseudoHamiltonianMatrix h = assemble(basis, p.laser, settings.model);
          const EigenDecomposition d = settings.diagonalizer
                                           ? settings.diagonalizer(h)
                                           : diagonalize(h, settings.diagonalize);
          p.tracked = track_state(d, settings.initial);
          p.energy = d.energies(static_cast<Eigen::Index>(p.tracked.index));
          p.result = ionize(d, p.tracked.index, options);
          p.ok = true;
        } catch (const Error& e) {
          p.ok = false;
          p.error = e.what();
        }
        return p;
      },
      [&](const IonizationPoint& p) {
        ++summary.points;
        if (!p.ok) ++summary.failed;
        sink(p);
      });
  return summary;
}

}  // namespace rotframe
