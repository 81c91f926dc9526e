// Copyright 2026 The repeaterlab Authors
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

#include "repeaterlab/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace repeaterlab {

namespace {

using Eigen::MatrixXcd;
using std::complex;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kSpectrumTol = 1e-10;
constexpr double kDiagonalTol = 1e-9;
constexpr int kMaxQubits = 6;

int bit_of(int index, int qubit, int n) { return (index >> (n - 1 - qubit)) & 1; }

// Index with the bits of `qubits` replaced by the bits of `sub` (in the
// order the qubits are listed); all other bits come from `rest_spread`.
int compose_index(int rest_spread, int sub, std::span<const int> qubits, int n) {
  int index = rest_spread;
  for (std::size_t r = 0; r < qubits.size(); ++r) {
    const int bit = (sub >> (qubits.size() - 1 - r)) & 1;
    index |= bit << (n - 1 - qubits[r]);
  }
  return index;
}

// Enumerates basis indices of the non-listed qubits, with zeros in the
// listed positions.
std::vector<int> rest_indices(std::span<const int> qubits, int n) {
  std::vector<int> shifts;
  for (int q = 0; q < n; ++q) {
    bool listed = false;
    for (int l : qubits) {
      listed = listed || l == q;
    }
    if (!listed) {
      shifts.push_back(n - 1 - q);
    }
  }
  std::vector<int> out(std::size_t(1) << shifts.size(), 0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    int spread = 0;
    for (std::size_t b = 0; b < shifts.size(); ++b) {
      spread |= ((r >> (shifts.size() - 1 - b)) & 1) << shifts[b];
    }
    out[r] = spread;
  }
  return out;
}

MatrixXcd embed_gate(const MatrixXcd& gate, std::span<const int> qubits, int n) {
  const int dim = 1 << n;
  const int sub_dim = 1 << qubits.size();
  MatrixXcd full = MatrixXcd::Zero(dim, dim);
  for (int rest : rest_indices(qubits, n)) {
    for (int si = 0; si < sub_dim; ++si) {
      for (int sj = 0; sj < sub_dim; ++sj) {
        full(compose_index(rest, si, qubits, n),
             compose_index(rest, sj, qubits, n)) = gate(si, sj);
      }
    }
  }
  return full;
}

MatrixXcd partial_trace(const MatrixXcd& m, std::span<const int> qubits, int n) {
  const auto rest = rest_indices(qubits, n);
  const int sub_dim = 1 << qubits.size();
  MatrixXcd out = MatrixXcd::Zero(rest.size(), rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      complex<double> sum = 0.0;
      for (int s = 0; s < sub_dim; ++s) {
        sum += m(compose_index(rest[i], s, qubits, n),
                 compose_index(rest[j], s, qubits, n));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

// reduced (over the non-listed qubits) tensored with the identity on the
// listed qubits, placed back in the original qubit order.
MatrixXcd embed_with_identity(const MatrixXcd& reduced,
                              std::span<const int> qubits, int n) {
  const auto rest = rest_indices(qubits, n);
  const int dim = 1 << n;
  const int sub_dim = 1 << qubits.size();
  MatrixXcd full = MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      for (int s = 0; s < sub_dim; ++s) {
        full(compose_index(rest[i], s, qubits, n),
             compose_index(rest[j], s, qubits, n)) = reduced(i, j);
      }
    }
  }
  return full;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void check_unitary(const MatrixXcd& gate) {
  const MatrixXcd delta =
      gate.adjoint() * gate - MatrixXcd::Identity(gate.rows(), gate.cols());
  if (delta.cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("gate is not unitary");
  }
}

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw std::out_of_range("qubit index out of range");
  }
}

DensityMatrix noisy_gate(const DensityMatrix& rho, const MatrixXcd& gate,
                         std::vector<int> qubits, double reliability) {
  check_unitary(gate);
  if (!(reliability >= 0.0 && reliability <= 1.0)) {
    throw std::domain_error("reliability must lie in [0, 1]");
  }
  const int n = rho.n_qubits();
  const MatrixXcd u = embed_gate(gate, qubits, n);
  const MatrixXcd ideal = u * rho.matrix() * u.adjoint();
  const double depol = (1.0 - reliability) / double(1 << qubits.size());
  const MatrixXcd rest =
      embed_with_identity(partial_trace(rho.matrix(), qubits, n), qubits, n);
  return DensityMatrix(n, reliability * ideal + depol * rest);
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
    throw std::domain_error("density matrix supports 1 to 6 qubits");
  }
  const int dim = 1 << n_qubits_;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("density matrix has wrong dimension");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::runtime_error("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - complex<double>(1.0)) > kTraceTol) {
    throw std::runtime_error("density matrix trace is not one");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(matrix_,
                                                  Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kSpectrumTol) {
    throw std::runtime_error("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_bell_pairs(
    std::span<const BellDiagonalState> pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("need at least one pair");
  }
  MatrixXcd rho = MatrixXcd::Identity(1, 1);
  for (const BellDiagonalState& s : pairs) {
    MatrixXcd pair = MatrixXcd::Zero(4, 4);
    for (int phase = 0; phase < 2; ++phase) {
      for (int amp = 0; amp < 2; ++amp) {
        const Eigen::Vector4cd v = bell_state_vector(phase, amp);
        pair += s.component(phase, amp) * (v * v.adjoint());
      }
    }
    rho = kron(rho, pair);
  }
  return DensityMatrix(2 * static_cast<int>(pairs.size()), std::move(rho));
}

DensityMatrix DensityMatrix::from_pure(const Eigen::VectorXcd& amplitudes) {
  int n = 0;
  while ((1 << n) < amplitudes.size()) {
    ++n;
  }
  return DensityMatrix(n, amplitudes * amplitudes.adjoint());
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard_gate() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Eigen::Matrix2cd rotation_x(double theta) {
  Eigen::Matrix2cd m;
  const complex<double> c = std::cos(theta / 2.0);
  const complex<double> s = complex<double>(0.0, -std::sin(theta / 2.0));
  m << c, s, s, c;
  return m;
}

Eigen::Matrix4cd cnot_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Eigen::Vector4cd bell_state_vector(int phase, int amp) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  if (amp == 0) {
    v(0) = s;                          // |00>
    v(3) = phase == 0 ? s : -s;        // |11>
  } else {
    v(1) = s;                          // |01>
    v(2) = phase == 0 ? s : -s;        // |10>
  }
  return v;
}

DensityMatrix apply_noisy_one_qubit(const DensityMatrix& rho,
                                    const Eigen::Matrix2cd& gate, int target,
                                    double p1) {
  check_qubit(target, rho.n_qubits());
  return noisy_gate(rho, gate, {target}, p1);
}

DensityMatrix apply_noisy_two_qubit(const DensityMatrix& rho,
                                    const Eigen::Matrix4cd& gate, int q_a,
                                    int q_b, double p2) {
  check_qubit(q_a, rho.n_qubits());
  check_qubit(q_b, rho.n_qubits());
  if (q_a == q_b) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
  return noisy_gate(rho, gate, {q_a, q_b}, p2);
}

std::array<PovmOutcome, 2> measure_povm(const DensityMatrix& rho, int target,
                                        double eta) {
  const int n = rho.n_qubits();
  check_qubit(target, n);
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("eta must lie in [0, 1]");
  }
  const std::vector<int> qubits{target};
  const auto rest = rest_indices(qubits, n);
  const int rest_dim = static_cast<int>(rest.size());

  // <b| rho |b> blocks on the target qubit.
  std::array<MatrixXcd, 2> block;
  for (int b = 0; b < 2; ++b) {
    block[b] = MatrixXcd::Zero(rest_dim, rest_dim);
    for (int i = 0; i < rest_dim; ++i) {
      for (int j = 0; j < rest_dim; ++j) {
        block[b](i, j) = rho.matrix()(compose_index(rest[i], b, qubits, n),
                                      compose_index(rest[j], b, qubits, n));
      }
    }
  }

  auto make_outcome = [&](int readout) {
    const MatrixXcd unnormalized =
        eta * block[readout] + (1.0 - eta) * block[readout ^ 1];
    const double probability = unnormalized.trace().real();
    MatrixXcd post;
    if (probability > 1e-15) {
      post = unnormalized / probability;
    } else {
      post = MatrixXcd::Identity(rest_dim, rest_dim) / double(rest_dim);
    }
    return PovmOutcome{readout, probability, DensityMatrix(n - 1, post)};
  };
  return {make_outcome(0), make_outcome(1)};
}

BellDiagonalState bell_components(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument("bell_components needs a two-qubit state");
  }
  double comps[2][2];
  for (int pi = 0; pi < 2; ++pi) {
    for (int ai = 0; ai < 2; ++ai) {
      const Eigen::Vector4cd vi = bell_state_vector(pi, ai);
      for (int pj = 0; pj < 2; ++pj) {
        for (int aj = 0; aj < 2; ++aj) {
          const Eigen::Vector4cd vj = bell_state_vector(pj, aj);
          const complex<double> elem = (vi.adjoint() * rho.matrix() * vj)(0, 0);
          if (pi == pj && ai == aj) {
            comps[pi][ai] = elem.real();
          } else if (std::abs(elem) > kDiagonalTol) {
            throw std::runtime_error("state is not Bell diagonal");
          }
        }
      }
    }
  }
  return make_bell_diagonal(comps[0][0], comps[1][1], comps[0][1], comps[1][0]);
}

StepResult oracle_purification_step(const BellDiagonalState& s1,
                                    const BellDiagonalState& s2, Scheme scheme,
                                    const NoiseParams& noise) {
  noise.validate();
  if (scheme != Scheme::A && scheme != Scheme::B) {
    throw std::invalid_argument("oracle purification step handles schemes A and B");
  }
  const bool rotate = scheme == Scheme::B;
  const BellDiagonalState kept = rotate ? s1 : twirl(s1);
  const BellDiagonalState meas = rotate ? s2 : twirl(s2);
  const std::array<BellDiagonalState, 2> pairs{kept, meas};
  DensityMatrix rho = DensityMatrix::from_bell_pairs(pairs);

  // Location A holds qubits (0, 2), location B holds (1, 3). Each side acts
  // with one joint two-qubit gate of reliability p2; for scheme B the local
  // pi/2 x-rotations (opposite signs at the two locations) are folded in.
  Eigen::Matrix4cd gate_a = cnot_gate();
  Eigen::Matrix4cd gate_b = cnot_gate();
  if (rotate) {
    const Eigen::Matrix2cd rot_a = rotation_x(M_PI / 2.0);
    const Eigen::Matrix2cd rot_b = rotation_x(-M_PI / 2.0);
    gate_a = cnot_gate() * Eigen::Matrix4cd(kron(rot_a, rot_a));
    gate_b = cnot_gate() * Eigen::Matrix4cd(kron(rot_b, rot_b));
  }
  rho = apply_noisy_two_qubit(rho, gate_a, 0, 2, noise.p2);
  rho = apply_noisy_two_qubit(rho, gate_b, 1, 3, noise.p2);

  // Measure both qubits of the second pair; postselect coincident readouts.
  const auto first = measure_povm(rho, 2, noise.eta);
  double p_even = 0.0;
  MatrixXcd mixture = MatrixXcd::Zero(4, 4);
  for (const PovmOutcome& o2 : first) {
    const auto second = measure_povm(o2.post_state, 2, noise.eta);
    const PovmOutcome& o3 = second[o2.outcome];
    const double weight = o2.probability * o3.probability;
    p_even += weight;
    mixture += weight * o3.post_state.matrix();
  }
  if (p_even <= 0.0) {
    throw std::runtime_error("postselection has vanishing probability");
  }
  BellDiagonalState out = bell_components(DensityMatrix(2, mixture / p_even));
  if (scheme == Scheme::A) {
    out = twirl(out);
  }
  return StepResult{out, p_even};
}

BellDiagonalState oracle_connection(const BellDiagonalState& s1,
                                    const BellDiagonalState& s2,
                                    const NoiseParams& noise) {
  noise.validate();
  const std::array<BellDiagonalState, 2> pairs{s1, s2};
  DensityMatrix rho = DensityMatrix::from_bell_pairs(pairs);

  // Bell measurement on the middle qubits (1, 2): noisy CNOT, then qubit 1 is
  // read in the rotated basis (exact Hadamard + eta-quality readout) and
  // qubit 2 in the computational basis.
  rho = apply_noisy_two_qubit(rho, cnot_gate(), 1, 2, noise.p2);
  rho = apply_noisy_one_qubit(rho, hadamard_gate(), 1, 1.0);

  struct Branch {
    double probability;
    BellDiagonalState state;
  };
  std::vector<Branch> branches;
  for (const PovmOutcome& mu : measure_povm(rho, 1, noise.eta)) {
    for (const PovmOutcome& nu : measure_povm(mu.post_state, 1, noise.eta)) {
      // Outcome-conditioned correction on the far qubit, one p1-reliable
      // one-qubit operation even when it is the identity.
      Eigen::Matrix2cd correction = Eigen::Matrix2cd::Identity();
      if (mu.outcome == 1) {
        correction = pauli_z() * correction;
      }
      if (nu.outcome == 1) {
        correction = correction * pauli_x();
      }
      const DensityMatrix fixed =
          apply_noisy_one_qubit(nu.post_state, correction, 1, noise.p1);
      branches.push_back(
          Branch{mu.probability * nu.probability, bell_components(fixed)});
    }
  }

  // The result must not depend on which outcome occurred.
  for (const Branch& b : branches) {
    if (max_component_distance(b.state, branches[0].state) > kDiagonalTol) {
      throw std::runtime_error(
          "connection result depends on the measurement outcome");
    }
  }
  double out[4] = {0.0, 0.0, 0.0, 0.0};
  for (const Branch& b : branches) {
    out[0] += b.probability * b.state.a;
    out[1] += b.probability * b.state.b;
    out[2] += b.probability * b.state.c;
    out[3] += b.probability * b.state.d;
  }
  return make_bell_diagonal(out[0], out[1], out[2], out[3]);
}

}  // namespace repeaterlab
