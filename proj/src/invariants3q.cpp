#include "partsep/invariants3q.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "partsep/errors.hpp"

namespace partsep {

namespace {

// eps_{x x'} as a number: nonzero only for x != x'.
inline double eps(int x, int xp) { return x == xp ? 0.0 : (x == 0 ? 1.0 : -1.0); }

inline cplx at(const StateVector& psi, int i, int j, int k) { return psi.amp(4 * i + 2 * j + k); }

}  // namespace

Eigen::Matrix2cd epsilon() {
  Eigen::Matrix2cd e;
  e << 0, 1, -1, 0;
  return e;
}

void require_three_qubits(const StateVector& psi) {
  if (psi.dims != Dims{2, 2, 2}) throw DimensionError("three-qubit quantity needs dims (2,2,2)");
}

Eigen::Matrix2cd gamma(const StateVector& psi, int a) {
  require_three_qubits(psi);
  if (a < 1 || a > 3) throw ArgumentError("gamma: party must be 1, 2 or 3");
  Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
  for (int x = 0; x < 2; ++x)
    for (int xp = 0; xp < 2; ++xp) {
      cplx acc = 0;
      // contract the two parties other than a
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          const int up = 1 - u, vp = 1 - v;
          const double e = eps(u, up) * eps(v, vp);
          if (a == 1) acc += e * at(psi, x, u, v) * at(psi, xp, up, vp);
          else if (a == 2) acc += eps(v, vp) * eps(u, up) * at(psi, u, x, v) * at(psi, up, xp, vp);
          else acc += e * at(psi, u, v, x) * at(psi, up, vp, xp);
        }
      g(x, xp) = acc;
    }
  return g;
}

Vector8cd T_contraction(const StateVector& psi, int form) {
  require_three_qubits(psi);
  Vector8cd T = Vector8cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        cplx acc = 0;
        for (int l = 0; l < 2; ++l)
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
              const int lp = 1 - l, mp = 1 - m, np = 1 - n;
              const double e = eps(l, lp) * eps(m, mp) * eps(n, np);
              if (form == 0) acc += e * at(psi, i, m, n) * at(psi, l, mp, np) * at(psi, lp, j, k);
              else if (form == 1) acc += e * at(psi, l, j, n) * at(psi, lp, m, np) * at(psi, i, mp, k);
              else acc += e * at(psi, l, m, k) * at(psi, lp, mp, n) * at(psi, i, j, np);
            }
        T(4 * i + 2 * j + k) = -acc;
      }
  return T;
}

cplx q_scalar(const StateVector& psi) {
  require_three_qubits(psi);
  cplx acc = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
              const int ip = 1 - i, jp = 1 - j, kp = 1 - k, lp = 1 - l, mp = 1 - m, np = 1 - n;
              const double e = eps(i, ip) * eps(j, jp) * eps(k, kp) * eps(l, lp) * eps(m, mp) * eps(n, np);
              acc += e * at(psi, i, k, l) * at(psi, j, kp, lp) * at(psi, ip, m, n) * at(psi, jp, mp, np);
            }
  return acc;
}

Matrix8cd Y_operator(const std::array<Eigen::Matrix2cd, 3>& gammas) {
  const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  auto kron3 = [](const Eigen::Matrix2cd& A, const Eigen::Matrix2cd& B, const Eigen::Matrix2cd& C) {
    Matrix8cd K;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) K(r, c) = A(r >> 2, c >> 2) * B((r >> 1) & 1, (c >> 1) & 1) * C(r & 1, c & 1);
    return K;
  };
  const Eigen::Matrix2cd e = epsilon();
  return -kron3(gammas[0] * e, I, I) - kron3(I, gammas[1] * e, I) - kron3(I, I, gammas[2] * e);
}

FtsCovariants fts_covariants(const StateVector& psi) {
  require_three_qubits(psi);
  FtsCovariants c;
  for (int a = 0; a < 3; ++a) c.gamma[static_cast<std::size_t>(a)] = gamma(psi, a + 1);
  c.T = T_contraction(psi, 0);
  c.q = q_scalar(psi);
  c.Y_norm_sq = 4.0 * (c.gamma[0].squaredNorm() + c.gamma[1].squaredNorm() + c.gamma[2].squaredNorm());
  return c;
}

InvariantVector indicator_vector(const FtsCovariants& c, double norm_sq) {
  InvariantVector v;
  v.n = norm_sq;
  for (std::size_t a = 0; a < 3; ++a) v.g[a] = c.gamma[a].squaredNorm();
  for (std::size_t a = 0; a < 3; ++a) v.s[a] = v.g[(a + 1) % 3] + v.g[(a + 2) % 3];
  v.y = 2.0 / 3.0 * (v.g[0] + v.g[1] + v.g[2]);
  v.t = 4.0 * c.T.squaredNorm();
  v.tau_sq = 4.0 * std::norm(c.q);
  return v;
}

InvariantVector indicator_vector(const StateVector& psi) { return indicator_vector(fts_covariants(psi), psi.norm_sq()); }

cplx cayley_det(const StateVector& psi) { return -q_scalar(psi) / 2.0; }

double three_tangle(const StateVector& psi) { return 4.0 * std::abs(cayley_det(psi)); }

double kempe_invariant(const StateVector& psi, int b, int c) {
  require_three_qubits(psi);
  if (b == c || b < 1 || c < 1 || b > 3 || c > 3) throw ArgumentError("kempe_invariant: need two distinct parties");
  if (b > c) std::swap(b, c);
  const Eigen::MatrixXcd pb = reduced_matrix(psi, {b});
  const Eigen::MatrixXcd pc = reduced_matrix(psi, {c});
  const Eigen::MatrixXcd pbc = reduced_matrix(psi, {b, c});
  Eigen::Matrix4cd kron;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) kron(r, s) = pb(r >> 1, s >> 1) * pc(r & 1, s & 1);
  return 3.0 * (kron * pbc).trace().real() - (pb * pb * pb).trace().real() - (pc * pc * pc).trace().real();
}

SudberyVector sudbery_invariants(const StateVector& psi) {
  require_three_qubits(psi);
  SudberyVector s;
  s.I0 = psi.norm_sq();
  auto purity = [&](int a) {
    Eigen::MatrixXcd r = reduced_matrix(psi, {a});
    return (r * r).trace().real();
  };
  s.I1 = purity(1);
  s.I2 = purity(2);
  s.I3 = purity(3);
  const double k23 = kempe_invariant(psi, 2, 3), k13 = kempe_invariant(psi, 1, 3), k12 = kempe_invariant(psi, 1, 2);
  const double scale = std::max(1.0, std::pow(s.I0, 3));
  if (std::abs(k23 - k13) > 1e-10 * scale || std::abs(k23 - k12) > 1e-10 * scale)
    throw ConsistencyError("sudbery_invariants: Kempe invariant differs between party pairs");
  s.I4 = k23;
  s.I5 = std::norm(cayley_det(psi));
  return s;
}

double CanonicalParams::delta() const {
  const cplx a = std::sqrt(eta[1] * eta[4]) * std::polar(1.0, alpha);
  return std::norm(a - std::sqrt(eta[2] * eta[3]));
}

void CanonicalParams::validate() const {
  double sum = 0;
  for (double e : eta) {
    if (!(e >= 0)) throw ValidationError("canonical params: eta must be non-negative");
    sum += e;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("canonical params: eta must sum to 1");
  if (!(alpha >= 0 && alpha <= M_PI)) throw ValidationError("canonical params: alpha must lie in [0, pi]");
}

StateVector schmidt_canonical_state(const CanonicalParams& p) {
  p.validate();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  v(0) = std::sqrt(p.eta[0]);
  v(4) = std::polar(std::sqrt(p.eta[1]), p.alpha);
  v(5) = std::sqrt(p.eta[2]);
  v(6) = std::sqrt(p.eta[3]);
  v(7) = std::sqrt(p.eta[4]);
  return StateVector({2, 2, 2}, std::move(v));
}

JInvariants j_invariants(const CanonicalParams& p) {
  p.validate();
  const auto& e = p.eta;
  const double D = p.delta();
  return {D, e[0] * e[2], e[0] * e[3], e[0] * e[4], e[0] * (D + e[2] * e[3] - e[1] * e[4])};
}

Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& omega) {
  const Eigen::Matrix2cd e = epsilon();
  Eigen::Matrix4cd ee;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) ee(r, c) = e(r >> 1, c >> 1) * e(r & 1, c & 1);
  return ee * omega.conjugate() * ee;
}

namespace {

void require_two_qubits(const DensityMatrix& omega) {
  if (omega.dims != Dims{2, 2}) throw DimensionError("two-qubit quantity needs dims (2,2)");
}

}  // namespace

Eigen::Vector4d wootters_lambdas(const DensityMatrix& omega) {
  require_two_qubits(omega);
  const Eigen::Matrix4cd w = omega.mat;
  auto sd = spectral_decomposition(omega.mat);
  const int r = sd.rank;
  Eigen::MatrixXcd B = sd.vectors.leftCols(r);
  for (int k = 0; k < r; ++k) B.col(k) *= std::sqrt(sd.values(k));
  Eigen::MatrixXcd R = B.adjoint() * spin_flip(w) * B;
  R = 0.5 * (R + R.adjoint()).eval();
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(R, Eigen::EigenvaluesOnly).eigenvalues();
  Eigen::Vector4d lam = Eigen::Vector4d::Zero();
  for (int k = 0; k < r; ++k) lam(k) = std::sqrt(std::max(0.0, ev(r - 1 - k)));
  return lam;
}

Eigen::Vector4d wootters_lambdas_nonhermitian(const DensityMatrix& omega) {
  require_two_qubits(omega);
  const Eigen::Matrix4cd w = omega.mat;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(w * spin_flip(w), false);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) {
    double re = es.eigenvalues()(k).real();
    if (re < -1e-10) throw ConsistencyError("wootters: negative eigenvalue of omega * spin-flipped omega");
    l[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, re));
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return {l[0], l[1], l[2], l[3]};
}

double wootters_concurrence(const DensityMatrix& omega) {
  auto l = wootters_lambdas(omega);
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double fidelity_concurrence(const DensityMatrix& omega) { return wootters_lambdas(omega).sum(); }

double pure_concurrence(const Eigen::VectorXcd& chi) {
  if (chi.size() != 4) throw DimensionError("pure_concurrence: needs a two-qubit vector");
  const double nn = chi.squaredNorm();
  if (nn == 0) return 0.0;
  return 2.0 * std::abs(chi(0) * chi(3) - chi(1) * chi(2)) / nn;
}

}  // namespace partsep
