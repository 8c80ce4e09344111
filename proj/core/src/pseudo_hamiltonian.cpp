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

#include "rotframe/pseudo_hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "rotframe/error.hpp"

namespace rotframe {

double LaserField::wavenumber() const {
  return omega * PhysicalConstants::codata2018().fine_structure_alpha;
}

void LaserField::validate() const {
  if (!std::isfinite(amplitude) || amplitude < 0.0) {
    throw DomainError("laser amplitude must be finite and >= 0");
  }
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError("laser photon energy must be finite and > 0");
  }
}

LaserField LaserField::from_lab_units(double amplitude_vspm, double photon_energy_ev) {
  LaserField field{convert_vector_potential(amplitude_vspm), ev_to_hartree(photon_energy_ev)};
  field.validate();
  return field;
}

PseudoHamiltonianMatrix assemble(std::shared_ptr<const BasisSet> basis, const LaserField& laser,
                                 const ModelOptions& model) {
  if (!basis || basis->size() == 0) throw DomainError("assemble: empty basis");
  laser.validate();
  const double mass = model.mass();
  const double a = laser.amplitude;
  const double a2_term = model.keep_a2 ? a * a / (2.0 * mass) : 0.0;
  const auto dim = static_cast<Eigen::Index>(basis->size());

  PseudoHamiltonianMatrix h{basis, laser, model, Eigen::MatrixXd::Zero(dim, dim)};
  for (Eigen::Index i = 0; i < dim; ++i) {
    const QuantumNumbers& q = (*basis)[static_cast<std::size_t>(i)];
    h.entries(i, i) = bound_energy(q.n, mass) + q.mu * laser.omega + a2_term;
  }
  if (a == 0.0) return h;

  // A p_x / m with p_x scaling as m: the coupling is A times the unit-mass element.
  const auto table = RadialTable::shared(basis->n0());
  const int n0 = basis->n0();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const QuantumNumbers& lo = (*basis)[static_cast<std::size_t>(i)];
    for (int dmu : {-1, 1}) {
      const int mu = lo.mu + dmu;
      for (int n = lo.l + 2; n <= n0; ++n) {
        const QuantumNumbers hi{n, lo.l + 1, mu};
        if (!hi.valid()) continue;
        const auto j = static_cast<Eigen::Index>(basis->index_of(hi));
        const double value = a * px_matrix_element(*table, lo, hi);
        h.entries(i, j) = value;
        h.entries(j, i) = value;
      }
    }
  }
  return h;
}

PseudoHamiltonianMatrix assemble(const BasisSet& basis, const LaserField& laser,
                                 const ModelOptions& model) {
  return assemble(std::make_shared<const BasisSet>(basis), laser, model);
}

PseudoHamiltonianMatrix diagonal_shift(PseudoHamiltonianMatrix matrix, double delta) {
  matrix.entries.diagonal().array() += delta;
  return matrix;
}

namespace {

template <class T>
T to_little_endian(T value) {
  if constexpr (std::endian::native == std::endian::little) {
    return value;
  } else {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    for (std::size_t k = 0; k < sizeof(T) / 2; ++k) std::swap(bytes[k], bytes[sizeof(T) - 1 - k]);
    std::memcpy(&value, bytes, sizeof(T));
    return value;
  }
}

template <class T>
void put(std::ostream& out, T value) {
  value = to_little_endian(value);
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  return to_little_endian(value);
}

}  // namespace

void write_matrix_dump(const PseudoHamiltonianMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  const Eigen::Index dim = matrix.dimension();
  put<std::uint64_t>(out, static_cast<std::uint64_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) put<double>(out, matrix.entries(i, j));
  if (!out) throw IoError("write to " + path.string() + " failed");
}

Eigen::MatrixXd read_matrix_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const auto dim = static_cast<Eigen::Index>(get<std::uint64_t>(in));
  if (!in) throw IoError(path.string() + ": truncated header");
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = get<double>(in);
  if (!in) throw IoError(path.string() + ": truncated matrix data");
  return m;
}

}  // namespace rotframe
