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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rotframe/error.hpp"
#include "rotframe/ionization.hpp"

namespace rotframe {
namespace {

EigenDecomposition solve(int n0, double a, double w, ModelOptions model = {}) {
  return diagonalize(assemble(BasisSet(n0), LaserField{a, w}, model));
}

std::size_t ground(const EigenDecomposition& d) { return track_state(d, {1, 0, 0}).index; }

TEST(Kinematics, PhotoelectronEnergyAndEta) {
  EXPECT_EQ(photoelectron_energy(-0.5, 0, 0.7), -0.5);
  EXPECT_DOUBLE_EQ(photoelectron_energy(-0.5, -1, 0.7), 0.7 - 0.5);
  EXPECT_EQ(eta_index(-0.5, 0.3, 0), 0.0);
  for (double ei : {-0.5, -0.31, 0.02}) {
    for (double w : {0.087, 0.5, 1.3}) {
      for (int mu : {-7, -1, 0, 2}) {
        const double ef = photoelectron_energy(ei, mu, w);
        EXPECT_NEAR(eta_index(ei, w, mu) * w - 0.5, ef, 1e-14);
        EXPECT_NEAR(photoelectron_energy(ei, mu - 1, w) - ef, w, 1e-15);
        EXPECT_NEAR(eta_index(ei, w, mu, 0.9) * w - 0.45, ef, 1e-14);
      }
    }
  }
  EXPECT_THROW(eta_index(-0.5, 0.0, -1), DomainError);
}

TEST(Continuum, StateValidation) {
  EXPECT_THROW((ContinuumState{0.0, 1, 0}.validate()), DomainError);
  EXPECT_THROW((ContinuumState{0.3, 1, 2}.validate()), DomainError);
  EXPECT_NO_THROW((ContinuumState{0.3, 2, -2}.validate()));
}

TEST(Continuum, RadialMomentAgainstQuadrature) {
  struct Case {
    double e;
    int lf, n, l, power;
  };
  for (Case c : {Case{0.235, 1, 1, 0, 3}, Case{0.235, 1, 1, 0, 2}, Case{0.05, 2, 3, 1, 3},
                 Case{1.2, 0, 4, 1, 3}, Case{0.6, 3, 6, 2, 3}, Case{0.02, 5, 9, 4, 3},
                 Case{0.3, 2, 5, 2, 2}}) {
    const double want = oracle::bound_free_moment_quadrature(c.e, c.lf, c.n, c.l, c.power);
    const double got = continuum_radial_moment(c.e, c.lf, c.n, c.l, c.power);
    EXPECT_NEAR(got, want, 1e-8 * std::abs(want) + 1e-12)
        << c.e << ' ' << c.lf << ' ' << c.n << ' ' << c.l << ' ' << c.power;
  }
  EXPECT_THROW(continuum_radial_moment(-0.1, 1, 1, 0, 3), DomainError);
  EXPECT_THROW(continuum_radial_moment(0.1, 1, 1, 1, 3), DomainError);
}

TEST(Continuum, MomentumElementAgainstGradientForm) {
  // Phased element i^{l_b - l_f} (-i) <f|d/dx|b>, gradient form by quadrature.
  for (double e : {0.235, 0.97}) {
    for (QuantumNumbers b : {QuantumNumbers{1, 0, 0}, QuantumNumbers{3, 1, -1}, QuantumNumbers{4, 2, 1}}) {
      for (int lf = std::max(0, b.l - 1); lf <= b.l + 1; lf += 2) {
        for (int muf : {b.mu - 1, b.mu + 1}) {
          if (std::abs(muf) > lf) continue;
          const double sign = b.l - lf == 1 ? 1.0 : -1.0;
          const double want = sign * oracle::angular_x_quadrature(lf, muf, b.l, b.mu) *
                              oracle::bound_free_gradient_quadrature(e, lf, b.n, b.l);
          const double got = bound_free_px({e, lf, muf}, b);
          EXPECT_NEAR(got, want, 1e-7 * std::abs(want) + 1e-12)
              << e << ' ' << b.to_string() << ' ' << lf << ' ' << muf;
        }
      }
    }
  }
}

TEST(Continuum, SelectionRules) {
  EXPECT_EQ(bound_free_px({0.3, 1, 0}, {1, 0, 0}), 0.0);   // delta mu = 0
  EXPECT_EQ(bound_free_px({0.3, 2, -1}, {1, 0, 0}), 0.0);  // delta l = 2
  EXPECT_EQ(bound_free_overlap({0.3, 1, 0}, {2, 0, 0}), 0.0);
  EXPECT_NEAR(bound_free_overlap({0.3, 0, 0}, {2, 0, 0}), 0.0, 1e-12);
}

TEST(Continuum, MassScaling) {
  const ContinuumState f{0.4, 1, -1};
  const double m = 0.95;
  EXPECT_NEAR(bound_free_px(f, {1, 0, 0}, m), std::sqrt(m) * bound_free_px({0.4 / m, 1, -1}, {1, 0, 0}),
              1e-15);
}

TEST(Element, ZeroAndForbidden) {
  const auto d0 = solve(4, 0.0, 0.8);
  EXPECT_EQ(bound_free_element(d0, ground(d0), {0.3, 1, -1}), 0.0);
  EXPECT_EQ(ionization_rate(d0, ground(d0)), 0.0);

  ModelOptions no_a2;
  no_a2.keep_a2 = false;
  const auto d = solve(4, 0.01, 0.8, no_a2);
  // l_f = 3 is out of reach of the l <= 1 states of an n0 = 2 basis
  const auto d2 = solve(2, 0.01, 0.8, no_a2);
  EXPECT_EQ(bound_free_element(d2, ground(d2), {0.3, 3, 3}), 0.0);
  EXPECT_NE(bound_free_element(d, ground(d), {0.3, 1, -1}), 0.0);
  EXPECT_THROW(bound_free_element(d, 10000, {0.3, 1, -1}), DomainError);
}

TEST(Ionization, EinsteinLimit) {
  const double w = ev_to_hartree(20.0);
  const auto d = solve(6, 1e-6, w);
  const auto r = ionize(d, ground(d));
  ASSERT_FALSE(r.records.empty());
  const IonizationRecord* one = nullptr;
  for (const auto& rec : r.records)
    if (rec.mu_branch == -1) one = &rec;
  ASSERT_NE(one, nullptr);
  EXPECT_NEAR(one->E_f0, w - 0.5, 1e-10);
  EXPECT_NEAR(one->eta, 1.0, 1e-10);
  for (std::size_t i = 1; i < r.records.size(); ++i)
    EXPECT_LT(r.records[i - 1].mu_branch, r.records[i].mu_branch);
}

TEST(Ionization, WeakFieldCrossSectionMatchesStobbe) {
  for (double ev : {14.0, 20.0, 40.0}) {
    const double w = ev_to_hartree(ev);
    const auto d = solve(6, 1e-4, w);
    const double sigma = cross_section(d, ground(d));
    EXPECT_NEAR(sigma / oracle::stobbe_cross_section(w), 1.0, 1e-3) << ev;
  }
}

TEST(Ionization, PerturbativeScaling) {
  const double w = ev_to_hartree(20.0);
  const auto d1 = solve(6, 1e-5, w), d2 = solve(6, 2e-5, w);
  const auto r1 = ionize(d1, ground(d1)), r2 = ionize(d2, ground(d2));
  EXPECT_NEAR(r2.total_rate / r1.total_rate, 4.0, 1e-4);
  EXPECT_NEAR(r2.total_sigma / r1.total_sigma, 1.0, 1e-4);
}

TEST(Ionization, ClosedLowestChannel) {
  // Below threshold the first open branch needs two photons: rate ~ A^4.
  const double w = 0.3;
  const auto d1 = solve(5, 1e-3, w), d2 = solve(5, 2e-3, w);
  const auto r1 = ionize(d1, ground(d1)), r2 = ionize(d2, ground(d2));
  for (const auto& rec : r1.records) EXPECT_LE(rec.mu_branch, -2);
  EXPECT_GT(r1.total_rate, 0.0);
  EXPECT_NEAR(r2.total_rate / r1.total_rate, 16.0, 0.2);
}

TEST(Ionization, NoOpenChannel) {
  const auto d = solve(3, 0.01, 0.05);
  const auto r = ionize(d, ground(d));
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.total_rate, 0.0);
  EXPECT_EQ(r.total_sigma, 0.0);
}

TEST(Ionization, PartialAmplitudesTwoRoutes) {
  // Strongly dressed state: analytic amplitudes against quadrature over the
  // expansion coefficients.
  const double w = ev_to_hartree(20.0);
  const double a = 0.05;
  const auto d = solve(6, a, w);
  const std::size_t i = ground(d);
  const auto r = ionize(d, i);
  for (const auto& rec : r.records) {
    if (rec.mu_branch < -2) continue;
    const double v = std::sqrt(2.0 * rec.E_f0);
    double largest = 0.0;
    for (const auto& b : rec.beta_l) largest = std::max(largest, std::abs(b));
    for (int l = std::abs(rec.mu_branch); l <= 6; ++l) {
      const double h = oracle::partial_amplitude_quadrature(d, i, rec.E_f0, l, rec.mu_branch);
      const std::complex<double> beta = std::sqrt(std::numbers::pi / (2.0 * v)) * h / a;
      EXPECT_LE(std::abs(rec.beta_l[static_cast<std::size_t>(l)] - beta), 1e-6 * largest)
          << "mu=" << rec.mu_branch << " l=" << l;
    }
  }
}

TEST(Ionization, IntensityScan) {
  ScanSettings s;
  s.n0 = 8;
  const double w = ev_to_hartree(2.37);
  std::vector<IonizationPoint> points;
  ionization_intensity_scan(w, {0.01, 0.05, 0.1, 0.2}, s,
                            [&](const IonizationPoint& p) { points.push_back(p); });
  ASSERT_EQ(points.size(), 4u);
  double last = -1.0;
  for (const auto& p : points) {
    ASSERT_TRUE(p.ok) << p.error;
    ASSERT_GE(p.result.records.size(), 2u);
    for (std::size_t k = 1; k < p.result.records.size(); ++k) {
      const auto &lo = p.result.records[k - 1], &hi = p.result.records[k];
      EXPECT_EQ(hi.mu_branch, lo.mu_branch + 1);
      EXPECT_NEAR(lo.E_f0 - hi.E_f0, w, 1e-15);
    }
    EXPECT_EQ(p.energy, p.result.records.front().E_i);
    const double ef = p.result.records.back().E_f0 + p.result.records.back().mu_branch * w;
    EXPECT_GT(ef, last);
    last = ef;
  }
  EXPECT_THROW(ionization_intensity_scan(w, {0.1, 0.05}, s, [](const IonizationPoint&) {}),
               DomainError);
}

}  // namespace
}  // namespace rotframe
