#pragma once

#include <array>

#include <Eigen/Dense>

#include "partsep/quantum.hpp"

namespace partsep {

// Three-qubit quantities. Amplitude psi^{ijk} sits at flat index 4i + 2j + k.

using Vector8cd = Eigen::Matrix<cplx, 8, 1>;
using Matrix8cd = Eigen::Matrix<cplx, 8, 8>;

/// eps = [[0, 1], [-1, 0]].
Eigen::Matrix2cd epsilon();

struct FtsCovariants {
  std::array<Eigen::Matrix2cd, 3> gamma;  // symmetric
  Vector8cd T;
  cplx q;
  double Y_norm_sq = 0;
};

/// n, y, s_a, g_a, t, tau^2. Zero vector maps to all zeros.
struct InvariantVector {
  double n = 0, y = 0;
  std::array<double, 3> s{}, g{};
  double t = 0, tau_sq = 0;

  /// In the fixed order n, y, s1, s2, s3, g1, g2, g3, t, tau2.
  std::array<double, 10> values() const { return {n, y, s[0], s[1], s[2], g[0], g[1], g[2], t, tau_sq}; }
  static constexpr std::array<const char*, 10> names = {"n", "y", "s1", "s2", "s3", "g1", "g2", "g3", "t", "tau2"};
};

struct SudberyVector {
  double I0 = 0, I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0;
  double I(int a) const { return a == 1 ? I1 : a == 2 ? I2 : I3; }
};

/// Parameters of the LU canonical form
/// sqrt(e0)|000> + e^{i alpha} sqrt(e1)|100> + sqrt(e2)|101> + sqrt(e3)|110> + sqrt(e4)|111>.
struct CanonicalParams {
  double alpha = 0;
  std::array<double, 5> eta{};

  double delta() const;
  void validate() const;
};

struct JInvariants {
  double J1 = 0, J2 = 0, J3 = 0, J4 = 0, J5 = 0;
  double J(int a) const { return a == 1 ? J1 : a == 2 ? J2 : J3; }
};

/// Throws DimensionError unless dims are exactly (2,2,2).
void require_three_qubits(const StateVector& psi);

Eigen::Matrix2cd gamma(const StateVector& psi, int a);
/// The three printed epsilon contractions for T; `form` is 0, 1 or 2.
Vector8cd T_contraction(const StateVector& psi, int form);
/// q by its six-epsilon contraction.
cplx q_scalar(const StateVector& psi);
/// Y(psi) = -(g1 eps ⊗ I ⊗ I) - (I ⊗ g2 eps ⊗ I) - (I ⊗ I ⊗ g3 eps).
Matrix8cd Y_operator(const std::array<Eigen::Matrix2cd, 3>& gammas);

FtsCovariants fts_covariants(const StateVector& psi);
InvariantVector indicator_vector(const StateVector& psi);
InvariantVector indicator_vector(const FtsCovariants& c, double norm_sq);

/// tau = 4|Det| = 2|q|.
double three_tangle(const StateVector& psi);
/// Det(psi) := -q/2.
cplx cayley_det(const StateVector& psi);

SudberyVector sudbery_invariants(const StateVector& psi);
/// Kempe invariant for one ordered pair (b, c) of distinct parties.
double kempe_invariant(const StateVector& psi, int b, int c);

StateVector schmidt_canonical_state(const CanonicalParams& p);
JInvariants j_invariants(const CanonicalParams& p);

/// Square roots of the eigenvalues of omega * spin_flip(omega), descending.
/// Computed from the Hermitian matrix D^{1/2} V^† omega~ V D^{1/2} on the support of omega.
Eigen::Vector4d wootters_lambdas(const DensityMatrix& omega);
/// Same values from the non-Hermitian product directly, for cross-checks.
Eigen::Vector4d wootters_lambdas_nonhermitian(const DensityMatrix& omega);
Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& omega);
double wootters_concurrence(const DensityMatrix& omega);
double fidelity_concurrence(const DensityMatrix& omega);
/// 2|chi00 chi11 - chi01 chi10| for a two-qubit vector, divided by its squared norm.
double pure_concurrence(const Eigen::VectorXcd& chi);

}  // namespace partsep
