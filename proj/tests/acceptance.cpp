// Acceptance checks, one per criterion: `acceptance --criterion N` prints a
// single PASS/FAIL line and exits nonzero on failure.

#include <CLI11.hpp>

#include <bitset>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "partsep/classifier.hpp"
#include "partsep/corpus.hpp"

using namespace partsep;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
    }
    pass = pass && ok;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

const Dims kQ3 = {2, 2, 2};

// Local maps with singular values in [0.3, 1], rescaled to unit determinant.
std::vector<MatrixXcd> local_sl(Rng& rng) {
  std::uniform_real_distribution<double> U(0.3, 1);
  std::vector<MatrixXcd> ops;
  for (int k = 0; k < 3; ++k) {
    MatrixXcd m = random_unitary(2, rng) * Eigen::Vector2cd(1, U(rng)).asDiagonal() * random_unitary(2, rng);
    ops.push_back(m / std::sqrt(m.determinant()));
  }
  return ops;
}

std::array<double, 10> values(const StateVector& psi) { return indicator_vector(psi).values(); }

// n y s1 s2 s3 g1 g2 g3 t tau2, 1 = positive
const std::vector<std::pair<StateVector, std::array<int, 10>>>& pure_reps() {
  static const std::vector<std::pair<StateVector, std::array<int, 10>>> r = {
      {StateVector(kQ3, VectorXcd::Zero(8)), {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {basis_state(kQ3, {0, 1, 0}), {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {bisep_state(1), {1, 1, 0, 1, 1, 1, 0, 0, 0, 0}},
      {bisep_state(2), {1, 1, 1, 0, 1, 0, 1, 0, 0, 0}},
      {bisep_state(3), {1, 1, 1, 1, 0, 0, 0, 1, 0, 0}},
      {w_state(), {1, 1, 1, 1, 1, 1, 1, 1, 1, 0}},
      {ghz_state(), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
  };
  return r;
}

bool pattern_matches(const StateVector& psi, const std::array<int, 10>& want, double thr) {
  const double nn = psi.norm_sq();
  auto v = nn > 0 ? values(psi.normalized()) : std::array<double, 10>{};
  v[0] = nn;
  for (std::size_t k = 0; k < 10; ++k)
    if ((v[k] > thr) != (want[k] == 1)) return false;
  return true;
}

// 1: W
void c1(Outcome& o) {
  auto v = indicator_vector(w_state());
  o.require(std::abs(v.t - 16.0 / 27.0) <= 1e-10, "t(W) = " + fmt(v.t));
  o.require(std::abs(v.tau_sq) <= 1e-12, "tau2(W) = " + fmt(v.tau_sq));
  o.detail << "t(W) - 16/27 = " << fmt(v.t - 16.0 / 27.0) << ", tau2(W) = " << fmt(v.tau_sq);
}

// 2: GHZ saturates every function at 1.
void c2(Outcome& o) {
  auto v = values(ghz_state());
  for (std::size_t k = 0; k < 10; ++k) {
    const bool ok = std::abs(v[k] - 1) <= 1e-10;
    o.require(ok, std::string(InvariantVector::names[k]) + "(GHZ) = " + std::to_string(v[k]));
  }
}

// 3: t(psi_m)
void c3(Outcome& o) {
  const double want = (10 + 7 * std::sqrt(7.0)) / 54;
  const double t = indicator_vector(psi_m_state()).t;
  o.require(std::abs(t - want) <= 1e-9, "t(psi_m) = " + std::to_string(t));
  o.detail << "t(psi_m) = " << t << " (residual " << fmt(t - want) << ")";
}

// 4: vanishing patterns of the seven pure classes
void c4(Outcome& o) {
  int k = 0;
  for (const auto& [psi, pat] : pure_reps()) o.require(pattern_matches(psi, pat, 1e-7), "class #" + std::to_string(k++));
  o.detail << "7 representatives matched";
}

// 5: identities on random states and canonical parameters
void c5(Outcome& o) {
  Rng rng(5005);
  double ckw = 0, gs = 0, detq = 0, sud = 0, jrel = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto psi = random_state(kQ3, rng);
    auto cov = fts_covariants(psi);
    auto v = indicator_vector(cov, 1.0);
    const double tau = three_tangle(psi);
    double s[3];
    for (int a = 0; a < 3; ++a) {
      Eigen::MatrixXcd ra = reduced_matrix(psi, {a + 1});
      s[a] = 2 * (1 - ra.squaredNorm());  // linear entropy oracle
    }
    for (int a = 1; a <= 3; ++a) {
      const int b = a % 3 + 1, c = b % 3 + 1;
      auto pc = [&](int x, int y) { return wootters_concurrence(DensityMatrix({2, 2}, reduced_matrix(psi, {std::min(x, y), std::max(x, y)}))); };
      const double cab = pc(a, b), cac = pc(a, c);
      ckw = std::max(ckw, std::abs(s[a - 1] - (cab * cab + cac * cac + tau)));
      gs = std::max(gs, std::abs(v.g[a - 1] - 0.5 * (s[b - 1] + s[c - 1] - s[a - 1])));
      detq = std::max(detq, std::abs(2.0 * cov.gamma[a - 1].determinant() - cov.q));
    }
    auto I = sudbery_invariants(psi);
    const double sumI = I.I1 + I.I2 + I.I3;
    double r = std::abs(v.n - I.I0);
    r = std::max(r, std::abs(v.y - (2 * I.I0 * I.I0 - 2.0 / 3.0 * sumI)));
    for (int a = 1; a <= 3; ++a) {
      const int b = a % 3 + 1, c = b % 3 + 1;
      r = std::max(r, std::abs(v.s[a - 1] - 2 * (I.I0 * I.I0 - I.I(a))));
      r = std::max(r, std::abs(v.g[a - 1] - (I.I0 * I.I0 + I.I(a) - I.I(b) - I.I(c))));
    }
    r = std::max(r, std::abs(v.t - (8.0 / 3.0 * I.I4 + 10.0 / 3.0 * std::pow(I.I0, 3) - 2 * I.I0 * sumI)));
    r = std::max(r, std::abs(v.tau_sq - 16 * I.I5));
    sud = std::max(sud, r);
  }
  std::uniform_real_distribution<double> U(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    CanonicalParams p;
    double sum = 0;
    for (auto& e : p.eta) sum += (e = U(rng));
    for (auto& e : p.eta) e /= sum;
    p.alpha = M_PI * U(rng);
    auto J = j_invariants(p);
    auto v = indicator_vector(schmidt_canonical_state(p));
    double r = std::abs(v.y - (4 * J.J4 + 8.0 / 3.0 * (J.J1 + J.J2 + J.J3)));
    for (int a = 1; a <= 3; ++a) {
      r = std::max(r, std::abs(v.s[a - 1] - 4 * (J.J4 + J.J1 + J.J2 + J.J3 - J.J(a))));
      r = std::max(r, std::abs(v.g[a - 1] - (2 * J.J4 + 4 * J.J(a))));
    }
    r = std::max(r, std::abs(v.t - (4 * J.J4 + 8 * J.J5)));
    r = std::max(r, std::abs(v.tau_sq - 16 * J.J4 * J.J4));
    jrel = std::max(jrel, r);
  }
  o.require(ckw <= 1e-9, "CKW " + fmt(ckw));
  o.require(gs <= 1e-10, "g from s " + fmt(gs));
  o.require(detq <= 1e-10, "2 det gamma - q " + fmt(detq));
  o.require(sud <= 1e-9, "Sudbery " + fmt(sud));
  o.require(jrel <= 1e-9, "J relations " + fmt(jrel));
  if (o.pass) o.detail << "max residuals: CKW " << fmt(ckw) << ", g " << fmt(gs) << ", det " << fmt(detq) << ", Sudbery " << fmt(sud) << ", J " << fmt(jrel);
}

// 6: LU invariance and LSL pattern preservation
void c6(Outcome& o) {
  Rng rng(6006);
  double drift = 0;
  int broken = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto psi = random_state(kQ3, rng);
    auto moved = apply_local(psi, random_local_unitary(kQ3, rng));
    auto a = values(psi), b = values(moved);
    for (std::size_t k = 0; k < 10; ++k) drift = std::max(drift, std::abs(a[k] - b[k]));
    const auto& [rep, pat] = pure_reps()[static_cast<std::size_t>(trial % 7)];
    if (!pattern_matches(apply_local(rep, local_sl(rng)), pat, 1e-7)) ++broken;
  }
  o.require(drift <= 1e-9, "LU drift " + fmt(drift));
  o.require(broken == 0, std::to_string(broken) + " patterns changed under LSL maps");
  if (o.pass) o.detail << "LU drift " << fmt(drift) << ", 500 LSL images kept their pattern";
}

// 7: range of the ten functions on unit vectors
void c7(Outcome& o) {
  Rng rng(7007);
  double lo = 1, hi = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    auto v = values(random_state(kQ3, rng));
    for (double x : v) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  o.require(lo >= -1e-12 && hi <= 1 + 1e-12, "range [" + fmt(lo) + ", " + fmt(hi) + "]");
  if (o.pass) o.detail << "observed range [" << fmt(lo) << ", " << hi << "]";
}

// 8: roofs of the concurrence against closed forms
void c8(Outcome& o) {
  Rng rng(8008);
  const PureFunction c = [](const StateVector& s) { return pure_concurrence(s.amp); };
  double lo = 0, hi = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto psi = random_state(kQ3, rng);
    DensityMatrix om({2, 2}, reduced_matrix(psi, {1, 2}));
    RoofOptions opt;
    opt.restarts = 32;
    opt.seed = static_cast<std::uint64_t>(trial);
    auto a = convex_roof(om, c, opt);
    auto b = concave_roof(om, c, opt);
    verify_certificate(om, c, a);
    verify_certificate(om, c, b);
    lo = std::max(lo, std::abs(a.value - wootters_concurrence(om)));
    hi = std::max(hi, std::abs(b.value - fidelity_concurrence(om)));
  }
  o.require(lo <= 1e-4, "convex roof off by " + fmt(lo));
  o.require(hi <= 1e-4, "concave roof off by " + fmt(hi));
  if (o.pass) o.detail << "max deviation: convex " << fmt(lo) << ", concave " << fmt(hi);
}

// 9: the two Bell-pair mixtures
void c9(Outcome& o) {
  auto c22 = c22_mixture(1);
  auto g1 = column_function(4, FunctionSet::Fts);
  auto m22 = membership_certificate(c22, g1);
  verify_certificate(c22, g1, m22.result);
  auto n22 = npt_side_information(c22);
  o.require(m22.result.value <= 1e-5, "g1 roof " + fmt(m22.result.value));
  o.require(n22.min_eig[2] >= -1e-10, "rho23 not PPT");
  o.require(n22.min_eig[0] < -1e-3 && n22.min_eig[1] < -1e-3, "rho12/rho13 not NPT");
  auto v22 = classify_mixed_3q(c22);
  o.require(v22.class_name() == "C2.2.1", "class " + v22.class_name());

  auto c21 = c21_mixture();
  auto t = column_function(7, FunctionSet::Fts);
  auto m21 = membership_certificate(c21, t);
  verify_certificate(c21, t, m21.result);
  auto n21 = npt_side_information(c21);
  o.require(m21.result.value <= 1e-5, "t roof " + fmt(m21.result.value));
  for (double e : n21.min_eig) o.require(e < -1e-3, "reduction not NPT");
  auto v21 = classify_mixed_3q(c21);
  o.require(v21.class_name() == "C2.1", "class " + v21.class_name());
  if (o.pass) o.detail << "g1 roof " << fmt(m22.result.value) << " -> C2.2.1; t roof " << fmt(m21.result.value) << " -> C2.1";
}

// 10: lattice counts
void c10(Outcome& o) {
  o.require(all_partitions(3).size() == 5, "partitions(3)");
  o.require(enumerate_proper_labels(3).size() == 9, "proper labels(3)");
  o.require(enumerate_ps_classes(3).size() == 20, "classes(3)");
  o.require(enumerate_node_classes(label_poset(3, true)).size() == 21, "classes with W");
  auto parts = all_partitions(4);
  o.require(parts.size() == 15, "partitions(4)");
  // oracle: every subset of the 15 partitions, kept if pairwise incomparable
  const int P = static_cast<int>(parts.size());
  std::vector<std::uint32_t> comparable(static_cast<std::size_t>(P), 0);
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j)
      if (i != j && (refines(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)]) || refines(parts[static_cast<std::size_t>(j)], parts[static_cast<std::size_t>(i)])))
        comparable[static_cast<std::size_t>(i)] |= 1u << j;
  std::size_t oracle = 0;
  for (std::uint32_t s = 1; s < (1u << P); ++s) {
    bool ok = true;
    for (int i = 0; i < P && ok; ++i)
      if (s >> i & 1u) ok = (comparable[static_cast<std::size_t>(i)] & s) == 0;
    oracle += ok;
  }
  const auto n4 = enumerate_proper_labels(4).size();
  o.require(n4 == oracle, "proper labels(4) " + std::to_string(n4) + " vs oracle " + std::to_string(oracle));
  if (o.pass) o.detail << "n=3: 5/9/20/21; n=4: 15 partitions, " << n4 << " proper labels";
}

// 11: partial order on proper labels; geometric-mean inequality
void c11(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    auto L = enumerate_proper_labels(n);
    const std::size_t N = L.size();
    std::vector<std::bitset<512>> leq(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) leq[i][j] = label_leq(L[i], L[j]);
    for (std::size_t i = 0; i < N; ++i) {
      o.require(leq[i][i], "reflexivity n=" + std::to_string(n));
      for (std::size_t j = 0; j < N; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) o.require(false, "antisymmetry n=" + std::to_string(n));
        // leq[i][j] implies everything above j is above i
        if (leq[i][j] && (leq[j] & ~leq[i]).any()) o.require(false, "transitivity n=" + std::to_string(n));
      }
    }
  }
  Rng rng(1111);
  std::uniform_real_distribution<double> U(0, 1);
  std::uniform_int_distribution<int> rows(1, 6), cols(1, 5);
  double worst = 1;
  for (int trial = 0; trial < 10000; ++trial) {
    const int r = rows(rng), q = cols(rng);
    Eigen::MatrixXd x(r, q);
    for (auto& v : x.reshaped()) v = U(rng);
    Eigen::VectorXd p(r);
    for (auto& v : p) v = U(rng);
    p /= p.sum();
    auto s = geometric_mean_slacks(p, x);
    worst = std::min({worst, s.holder, s.averaging});
  }
  o.require(worst >= -1e-12, "slack " + fmt(worst));
  if (o.pass) o.detail << "order axioms hold for n <= 4; min slack " << fmt(worst);
}

// 12: equality in Tsallis-2 subadditivity for rank <= 2 two-qubit states
void c12(Outcome& o) {
  Rng rng(1212);
  auto s2 = [](const MatrixXcd& m) { return 1 - m.squaredNorm(); };
  int equal = 0, bad = 0;
  double converse = 0;
  for (int trial = 0; trial < 500; ++trial) {
    // Every fifth draw has a pure factor on party 1 or 2 so equality occurs.
    StateVector psi = random_state(kQ3, rng);
    if (trial % 10 == 0) {
      psi = tensor(random_state({2}, rng), random_state({2, 2}, rng));
    } else if (trial % 10 == 5) {
      auto chi = random_state({2, 2}, rng), phi = random_state({2}, rng);
      VectorXcd v(8);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) v(4 * i + 2 * j + k) = chi.amp(2 * i + k) * phi.amp(j);
      psi = StateVector(kQ3, v);
    }
    MatrixXcd rho = reduced_matrix(psi, {1, 2});
    MatrixXcd r1 = partial_trace(rho, {2, 2}, {1}), r2 = partial_trace(rho, {2, 2}, {2});
    const double gap = s2(r1) + s2(r2) - s2(rho);
    if (std::abs(gap) > 1e-9) continue;
    ++equal;
    const MatrixXcd prod = tensor(DensityMatrix({2}, r1, true), DensityMatrix({2}, r2, true)).mat;
    const bool product = trace_distance(rho, prod) <= 1e-6;
    const bool pure_factor = std::abs(r1.squaredNorm() - 1) <= 1e-6 || std::abs(r2.squaredNorm() - 1) <= 1e-6;
    if (!(product && pure_factor)) ++bad;
  }
  for (int trial = 0; trial < 100; ++trial) {
    MatrixXcd r1 = random_density({2}, 2, rng).mat;
    auto phi = random_state({2}, rng);
    MatrixXcd rho = tensor(DensityMatrix({2}, r1, true), DensityMatrix::pure(phi)).mat;
    converse = std::max(converse, std::abs(s2(rho) - s2(r1)));
  }
  o.require(bad == 0, std::to_string(bad) + " equality cases without a pure product structure");
  o.require(equal >= 50, "too few equality cases (" + std::to_string(equal) + ")");
  o.require(converse <= 1e-10, "converse residual " + fmt(converse));
  if (o.pass) o.detail << equal << " equality cases, all products with a pure factor; converse residual " << fmt(converse);
}

// 13: additive von Neumann g1 misses genuine entanglement
void c13(Outcome& o) {
  auto psi = neumann_state();
  auto S = [&](std::vector<int> k) { return von_neumann_entropy(density_spectrum(reduced_matrix(psi, std::move(k)))); };
  const double s1 = S({1}), s2 = S({2}), s3 = S({3});
  const double g1 = (s2 + s3 - s1) / 2;
  o.require(std::abs(g1) <= 1e-10, "g1 = " + fmt(g1));
  o.require(s1 > 0.5 && s2 > 0.5 && s3 > 0.5, "a single-party entropy <= 0.5");
  if (o.pass) o.detail << "g1 = " << fmt(g1) << " with S = " << s1 << ", " << s2 << ", " << s3;
}

struct Criterion {
  void (*run)(Outcome&);
  double budget_s;
};

const Criterion kCriteria[13] = {
    {c1, 1}, {c2, 1}, {c3, 1}, {c4, 1}, {c5, 10}, {c6, 10}, {c7, 10}, {c8, 120}, {c9, 120}, {c10, 30}, {c11, 30}, {c12, 30}, {c13, 1},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int n = 0;
  app.add_option("--criterion", n, "criterion number")->required()->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kCriteria[n - 1].run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs <= kCriteria[n - 1].budget_s, "over budget (" + std::to_string(secs) + " s)");
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << "  [" << std::fixed << std::setprecision(2) << secs << " s]\n";
  return o.pass ? 0 : 1;
}
