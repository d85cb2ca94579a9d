#include <doctest.h>

#include <cmath>

#include "partsep/errors.hpp"
#include "partsep/invariants3q.hpp"

using namespace partsep;
using Eigen::VectorXcd;

namespace {

StateVector from(std::initializer_list<std::pair<int, cplx>> terms) {
  VectorXcd v = VectorXcd::Zero(8);
  for (auto [i, a] : terms) v(i) = a;
  return {{2, 2, 2}, v / v.norm()};
}

const double r2 = 1 / std::sqrt(2.0);
StateVector ghz() { return from({{0, 1}, {7, 1}}); }
StateVector w() { return from({{4, 1}, {2, 1}, {1, 1}}); }
StateVector product() { return from({{0, 1}}); }
// |0>_1 ⊗ |B>_23
StateVector bisep1() { return from({{0, r2}, {3, r2}}); }
StateVector bisep2() { return from({{0, r2}, {5, r2}}); }
StateVector bisep3() { return from({{0, r2}, {6, r2}}); }

// Reduced density of two qubits from a pure three-qubit state, via explicit sums.
DensityMatrix pair_state(const StateVector& psi, int b, int c) { return DensityMatrix({2, 2}, reduced_matrix(psi, {b, c}) / psi.norm_sq()); }

}  // namespace

TEST_CASE("covariants of named states") {
  auto g = fts_covariants(ghz());
  Eigen::Matrix2cd half_off;
  half_off << 0, 0.5, 0.5, 0;
  for (int a = 0; a < 3; ++a) CHECK((g.gamma[a] - half_off).norm() < 1e-15);
  CHECK(std::abs(std::abs(g.q) - 0.5) < 1e-15);

  auto p = fts_covariants(product());
  for (int a = 0; a < 3; ++a) CHECK(p.gamma[a].norm() < 1e-15);
  CHECK(p.T.norm() < 1e-15);
  CHECK(std::abs(p.q) < 1e-15);

  auto b = fts_covariants(bisep1());
  CHECK(b.gamma[0].norm() > 0.1);
  CHECK(b.gamma[1].norm() < 1e-15);
  CHECK(b.gamma[2].norm() < 1e-15);
  CHECK(b.T.norm() < 1e-15);
  CHECK(std::abs(b.q) < 1e-15);

  CHECK_THROWS_AS(fts_covariants(StateVector({2, 2}, VectorXcd::Zero(4))), DimensionError);
}

TEST_CASE("covariant identities on random states") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto psi = random_state({2, 2, 2}, rng);
    psi.amp *= 0.5 + trial % 3;  // unnormalized as well
    auto c = fts_covariants(psi);
    for (int a = 0; a < 3; ++a) {
      CHECK((c.gamma[a] - c.gamma[a].transpose()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(2.0 * c.gamma[a].determinant() - c.q) < 1e-10 * std::pow(psi.norm_sq(), 2));
    }
    const double sc = std::pow(psi.norm_sq(), 1.5);
    for (int f = 1; f < 3; ++f) CHECK((T_contraction(psi, f) - c.T).norm() < 1e-10 * sc);
    auto Y = Y_operator(c.gamma);
    Vector8cd psi8 = psi.amp;
    CHECK((Y * psi8 / 3.0 - c.T).norm() < 1e-10 * sc);
    const Eigen::Matrix2cd e = epsilon();
    // -(g1 eps ⊗ I ⊗ I) psi
    Vector8cd t1;
    Eigen::Matrix2cd ge = c.gamma[0] * e;
    for (int i = 0; i < 2; ++i)
      for (int jk = 0; jk < 4; ++jk) t1(4 * i + jk) = -(ge(i, 0) * psi8(jk) + ge(i, 1) * psi8(4 + jk));
    CHECK((t1 - c.T).norm() < 1e-10 * sc);
    CHECK(std::abs(Y.squaredNorm() - c.Y_norm_sq) < 1e-10 * psi.norm_sq() * psi.norm_sq());
  }
}

TEST_CASE("indicator values of named states") {
  auto g = indicator_vector(ghz());
  CHECK(g.n == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(g.y - 1.0) < 1e-14);
  for (int a = 0; a < 3; ++a) {
    CHECK(std::abs(g.s[a] - 1.0) < 1e-14);
    CHECK(std::abs(g.g[a] - 0.5) < 1e-14);
  }
  CHECK(std::abs(g.t - 1.0) < 1e-14);
  CHECK(std::abs(g.tau_sq - 1.0) < 1e-14);
  CHECK(std::abs(three_tangle(ghz()) - 1.0) < 1e-14);

  auto wv = indicator_vector(w());
  CHECK(std::abs(wv.t - 16.0 / 27.0) < 1e-14);
  CHECK(std::abs(wv.tau_sq) < 1e-15);
  CHECK(std::abs(three_tangle(w())) < 1e-15);
  for (int a = 0; a < 3; ++a) CHECK(std::abs(wv.g[a] - 4.0 / 9.0) < 1e-14);

  auto z = indicator_vector(StateVector({2, 2, 2}, VectorXcd::Zero(8)));
  for (double v : z.values()) CHECK(v == 0.0);

  for (const auto& b : {bisep1(), bisep2(), bisep3()}) CHECK(three_tangle(b) < 1e-15);
}

TEST_CASE("vanishing patterns of the seven pure classes") {
  // rows: n y s1 s2 s3 g1 g2 g3 t tau2 ; 1 = positive
  const std::vector<std::pair<StateVector, std::array<int, 10>>> rows = {
      {StateVector({2, 2, 2}, VectorXcd::Zero(8)), {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {product(), {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {bisep1(), {1, 1, 0, 1, 1, 1, 0, 0, 0, 0}},
      {bisep2(), {1, 1, 1, 0, 1, 0, 1, 0, 0, 0}},
      {bisep3(), {1, 1, 1, 1, 0, 0, 0, 1, 0, 0}},
      {w(), {1, 1, 1, 1, 1, 1, 1, 1, 1, 0}},
      {ghz(), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
  };
  for (const auto& [psi, pat] : rows) {
    auto v = indicator_vector(psi).values();
    for (std::size_t k = 0; k < 10; ++k) CHECK((v[k] > 1e-7) == (pat[k] == 1));
  }
}

TEST_CASE("Sudbery relations") {
  auto p = sudbery_invariants(product());
  CHECK(std::abs(p.I0 - 1) < 1e-14);
  CHECK(std::abs(p.I1 - 1) < 1e-14);
  CHECK(std::abs(p.I2 - 1) < 1e-14);
  CHECK(std::abs(p.I3 - 1) < 1e-14);
  CHECK(std::abs(p.I4 - 1) < 1e-14);
  CHECK(std::abs(p.I5) < 1e-15);

  // GHZ: tau^2 = 1 pins I5 through tau^2 = 16 I5
  CHECK(std::abs(sudbery_invariants(ghz()).I5 - 1.0 / 16.0) < 1e-14);

  Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    auto psi = random_state({2, 2, 2}, rng);
    auto v = indicator_vector(psi);
    auto s = sudbery_invariants(psi);
    const double I0 = s.I0, sumI = s.I1 + s.I2 + s.I3;
    CHECK(std::abs(v.n - I0) < 1e-9);
    CHECK(std::abs(v.y - (2 * I0 * I0 - 2.0 / 3.0 * sumI)) < 1e-9);
    for (int a = 1; a <= 3; ++a) {
      int b = a % 3 + 1, c = b % 3 + 1;
      CHECK(std::abs(v.s[a - 1] - 2 * (I0 * I0 - s.I(a))) < 1e-9);
      CHECK(std::abs(v.g[a - 1] - (I0 * I0 + s.I(a) - s.I(b) - s.I(c))) < 1e-9);
    }
    CHECK(std::abs(v.t - (8.0 / 3.0 * s.I4 + 10.0 / 3.0 * I0 * I0 * I0 - 2 * I0 * sumI)) < 1e-9);
    CHECK(std::abs(v.tau_sq - 16 * s.I5) < 1e-9);
  }
}

TEST_CASE("canonical form and J invariants") {
  CanonicalParams ghzp{0, {0.5, 0, 0, 0, 0.5}};
  auto gs = schmidt_canonical_state(ghzp);
  CHECK((gs.amp - ghz().amp).norm() < 1e-15);
  auto J = j_invariants(ghzp);
  CHECK(std::abs(J.J4 - 0.25) < 1e-15);
  CHECK(J.J1 == 0);
  CHECK(J.J5 == 0);

  CanonicalParams wp{0, {1.0 / 3, 0, 1.0 / 3, 1.0 / 3, 0}};
  auto wj = j_invariants(wp);
  CHECK(std::abs(wj.J1 - 1.0 / 9) < 1e-15);
  CHECK(std::abs(wj.J2 - 1.0 / 9) < 1e-15);
  CHECK(std::abs(wj.J3 - 1.0 / 9) < 1e-15);
  CHECK(std::abs(wj.J5 - 2.0 / 27) < 1e-15);
  CHECK(std::abs(indicator_vector(schmidt_canonical_state(wp)).t - 16.0 / 27) < 1e-14);

  const double s7 = std::sqrt(7.0);
  const double e0 = (5 - s7) / 6, e1 = (1 + s7) / 24;
  CanonicalParams mp{M_PI, {e0, e1, e1, e1, e1}};
  CHECK(std::abs(indicator_vector(schmidt_canonical_state(mp)).t - (10 + 7 * s7) / 54) < 1e-14);

  auto pj = j_invariants(CanonicalParams{0, {1, 0, 0, 0, 0}});
  CHECK(pj.J1 + pj.J2 + pj.J3 + pj.J4 + pj.J5 == 0);

  CHECK_THROWS_AS(schmidt_canonical_state(CanonicalParams{0, {0.5, 0.5, 0.5, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(schmidt_canonical_state(CanonicalParams{4.0, {1, 0, 0, 0, 0}}), ValidationError);

  Rng rng(8);
  std::uniform_real_distribution<double> U(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    CanonicalParams p;
    double sum = 0;
    for (auto& e : p.eta) sum += (e = U(rng));
    for (auto& e : p.eta) e /= sum;
    p.alpha = M_PI * U(rng);
    auto J = j_invariants(p);
    auto v = indicator_vector(schmidt_canonical_state(p));
    CHECK(std::abs(v.y - (4 * J.J4 + 8.0 / 3.0 * (J.J1 + J.J2 + J.J3))) < 1e-9);
    for (int a = 1; a <= 3; ++a) {
      CHECK(std::abs(v.s[a - 1] - 4 * (J.J4 + J.J1 + J.J2 + J.J3 - J.J(a))) < 1e-9);
      CHECK(std::abs(v.g[a - 1] - (2 * J.J4 + 4 * J.J(a))) < 1e-9);
    }
    CHECK(std::abs(v.t - (4 * J.J4 + 8 * J.J5)) < 1e-9);
    CHECK(std::abs(v.tau_sq - 16 * J.J4 * J.J4) < 1e-9);
  }
}

TEST_CASE("Wootters concurrence and fidelity") {
  VectorXcd bell = VectorXcd::Zero(4);
  bell(0) = bell(3) = r2;
  DensityMatrix B({2, 2}, bell * bell.adjoint());
  CHECK(std::abs(wootters_concurrence(B) - 1) < 1e-12);
  CHECK(std::abs(fidelity_concurrence(B) - 1) < 1e-12);
  DensityMatrix mm({2, 2}, Eigen::MatrixXcd::Identity(4, 4) / 4.0);
  auto l = wootters_lambdas(mm);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(l(k) - 0.25) < 1e-14);
  CHECK(std::abs(fidelity_concurrence(mm) - 1) < 1e-14);

  Rng rng(4);
  auto prod = tensor(random_state({2}, rng), random_state({2}, rng));
  CHECK(wootters_concurrence(DensityMatrix::pure(prod)) < 1e-7);

  for (int trial = 0; trial < 200; ++trial) {
    auto psi = random_state({2, 2, 2}, rng);
    auto v = indicator_vector(psi);
    const double tau = three_tangle(psi);
    for (int a = 1; a <= 3; ++a) {
      int b = a % 3 + 1, c = b % 3 + 1;
      auto om = pair_state(psi, std::min(b, c), std::max(b, c));
      double cc = wootters_concurrence(om), F = fidelity_concurrence(om);
      CHECK(std::abs(cc * cc - (v.g[a - 1] - tau / 2)) < 1e-9);
      CHECK(std::abs(F * F - (v.g[a - 1] + tau / 2)) < 1e-9);
      CHECK((wootters_lambdas(om) - wootters_lambdas_nonhermitian(om)).cwiseAbs().maxCoeff() < 1e-6);
    }
    for (int a = 1; a <= 3; ++a) {
      int b = a % 3 + 1, c = b % 3 + 1;
      auto ab = pair_state(psi, std::min(a, b), std::max(a, b));
      auto ac = pair_state(psi, std::min(a, c), std::max(a, c));
      double cab = wootters_concurrence(ab), cac = wootters_concurrence(ac);
      double fab = fidelity_concurrence(ab), fac = fidelity_concurrence(ac);
      CHECK(std::abs(v.s[a - 1] - (cab * cab + cac * cac + tau)) < 1e-9);
      CHECK(std::abs(v.s[a - 1] - (fab * fab + fac * fac - tau)) < 1e-9);
      CHECK(std::abs(v.g[a - 1] - 0.5 * (v.s[b - 1] + v.s[c - 1] - v.s[a - 1])) < 1e-10);
    }
  }
  CHECK_THROWS_AS(wootters_concurrence(DensityMatrix({2}, Eigen::MatrixXcd::Identity(2, 2) / 2.0)), DimensionError);
}

TEST_CASE("pure concurrence") {
  VectorXcd bell = VectorXcd::Zero(4);
  bell(0) = bell(3) = r2;
  CHECK(std::abs(pure_concurrence(bell) - 1) < 1e-15);
  CHECK(pure_concurrence(tensor(random_state({2}, 1u), random_state({2}, 2u)).amp) < 1e-15);
}
