#include "partsep/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "partsep/errors.hpp"

namespace partsep {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

Eigen::MatrixXcd Decomposition::reconstruct() const {
  const int d = total_dim(dims);
  MatrixXcd rho = MatrixXcd::Zero(d, d);
  for (int i = 0; i < m(); ++i) {
    const auto& a = states[static_cast<std::size_t>(i)].amp;
    rho.noalias() += p[static_cast<std::size_t>(i)] * a * a.adjoint();
  }
  return rho;
}

double Decomposition::average(const PureFunction& f) const {
  double s = 0;
  for (int i = 0; i < m(); ++i) s += p[static_cast<std::size_t>(i)] * f(states[static_cast<std::size_t>(i)]);
  return s;
}

void RoofOptions::validate() const {
  if (m < 0) throw ArgumentError("roof: m must be >= 0");
  if (restarts < 1) throw ArgumentError("roof: restarts must be >= 1");
  if (!(tol >= 0)) throw ArgumentError("roof: tol must be >= 0");
  if (max_iters < 1) throw ArgumentError("roof: max_iters must be >= 1");
  if (jobs < 1) throw ArgumentError("roof: jobs must be >= 1");
}

namespace {

constexpr double kDropWeight = 1e-14;

bool is_isometry(const MatrixXcd& U, double tol) {
  return (U.adjoint() * U - MatrixXcd::Identity(U.cols(), U.cols())).cwiseAbs().maxCoeff() <= tol;
}

// exp(A) for anti-Hermitian A via the spectrum of the Hermitian -iA.
MatrixXcd expm_skew(const MatrixXcd& A) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(cplx(0, -1) * A);
  VectorXcd ph = (cplx(0, 1) * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Unitary whose first r columns are the isometry U.
MatrixXcd complete_unitary(const MatrixXcd& U, Rng& rng) {
  const auto m = U.rows(), r = U.cols();
  MatrixXcd M(m, m);
  M.leftCols(r) = U;
  if (m > r) M.rightCols(m - r) = random_unitary(static_cast<int>(m), rng).leftCols(m - r);
  MatrixXcd Q = Eigen::HouseholderQR<MatrixXcd>(M).householderQ();
  Q.leftCols(r) = U;
  return Q;
}

struct Problem {
  Dims dims;
  int d = 0, r = 0, m = 0;
  MatrixXcd W;  // d x r, columns sqrt(lambda_k) e_k
  const PureFunction* f = nullptr;
  double sign = 1;  // -1 to maximize

  // Homogeneous extension |z|^2 f(z/|z|), signed.
  double member(const VectorXcd& z) const {
    const double nn = z.squaredNorm();
    if (nn < kDropWeight) return 0.0;
    return sign * nn * (*f)(StateVector(dims, z / std::sqrt(nn)));
  }

  MatrixXcd members(const MatrixXcd& V) const { return W * V.leftCols(r).transpose(); }

  double value(const MatrixXcd& V) const {
    MatrixXcd Z = members(V);
    double s = 0;
    for (int i = 0; i < m; ++i) s += member(Z.col(i));
    return s;
  }

  // Riemannian gradient for V <- exp(A) V, as an anti-Hermitian matrix.
  MatrixXcd gradient(const MatrixXcd& V) const {
    MatrixXcd Z = members(V);
    MatrixXcd G = MatrixXcd::Zero(d, m);
    for (int i = 0; i < m; ++i) {
      VectorXcd z = Z.col(i);
      const double nz = z.norm();
      if (nz * nz < kDropWeight) continue;
      const double h = 1e-6 * nz;
      for (int c = 0; c < d; ++c) {
        const cplx z0 = z(c);
        double parts[2];
        for (int k = 0; k < 2; ++k) {
          const cplx step = k == 0 ? cplx(h, 0) : cplx(0, h);
          z(c) = z0 + step;
          const double up = member(z);
          z(c) = z0 - step;
          parts[k] = (up - member(z)) / (2 * h);
          z(c) = z0;
        }
        G(c, i) = cplx(parts[0], parts[1]);
      }
    }
    MatrixXcd N = G.adjoint() * Z;
    return 0.5 * (N.conjugate() - N.transpose());
  }
};

struct RestartOutcome {
  double value = 0;
  MatrixXcd V;
  bool converged = false;
};

double inner(const MatrixXcd& a, const MatrixXcd& b) { return (a.conjugate().cwiseProduct(b)).sum().real(); }

// Polak-Ribiere conjugate gradient in the Lie algebra with Armijo backtracking.
RestartOutcome descend(const Problem& P, MatrixXcd V, const RoofOptions& opt, double target) {
  double phi = P.value(V);
  double eta = -1;
  int stalled = 0;
  RestartOutcome out;
  MatrixXcd G = P.gradient(V);
  MatrixXcd D = -G;
  for (int it = 0; it < opt.max_iters; ++it) {
    if (phi <= target) {
      out.converged = true;
      break;
    }
    const double g2 = G.squaredNorm();
    if (g2 < 1e-20) {
      out.converged = true;
      break;
    }
    double slope = inner(G, D);
    if (slope >= 0) {
      D = -G;
      slope = -g2;
    }
    if (eta < 0) eta = 0.5 / std::sqrt(D.squaredNorm());
    eta *= 2;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt, eta *= 0.5) {
      MatrixXcd Vn = expm_skew(eta * D) * V;
      const double pn = P.value(Vn);
      if (pn <= phi + 1e-4 * eta * slope) {
        stalled = phi - pn < 1e-13 * std::max(1.0, std::abs(phi)) ? stalled + 1 : 0;
        V = std::move(Vn);
        phi = pn;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // A failed search along a conjugate direction gets one retry along -G.
      if (D.isApprox(-G)) {
        out.converged = true;
        break;
      }
      D = -G;
      eta = 0.5 / std::sqrt(g2);
      continue;
    }
    if (stalled >= 10) {
      out.converged = true;
      break;
    }
    MatrixXcd Gn = P.gradient(V);
    const double beta = std::max(0.0, inner(Gn, Gn - G) / g2);
    D = -Gn + beta * D;
    G = std::move(Gn);
  }
  out.value = phi;
  out.V = std::move(V);
  return out;
}

Rng restart_rng(std::uint64_t seed, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(k)};
  return Rng(seq);
}

RoofResult run_roof(const DensityMatrix& rho, const PureFunction& f, const RoofOptions& opt, double sign) {
  opt.validate();
  if (!f) throw ArgumentError("roof: empty function handle");
  const auto spec = spectral_decomposition(rho.mat);
  Problem P;
  P.dims = rho.dims;
  P.d = rho.dim();
  P.r = spec.rank;
  P.f = &f;
  P.sign = sign;
  if (P.r == 0) throw ValidationError("roof: density matrix has no support");
  P.W = spec.vectors.leftCols(P.r) * spec.values.head(P.r).cwiseSqrt().cast<cplx>().asDiagonal();
  const int d2 = P.d * P.d;
  P.m = opt.m > 0 ? opt.m : std::min(d2, std::max(2 * P.r, P.r + 2));
  if (P.m < P.r) throw ArgumentError("roof: m must be at least rank(rho) = " + std::to_string(P.r));
  if (opt.warm_start.size() != 0 && (opt.warm_start.cols() != P.r || opt.warm_start.rows() > P.m || !is_isometry(opt.warm_start, 1e-8)))
    throw ArgumentError("roof: warm start must be an isometry with rank(rho) columns and at most m rows");

  // Targets are stated for the reported (unsigned) value.
  const double target = sign > 0 ? opt.target : -std::numeric_limits<double>::infinity();

  auto start = [&](int k) {
    Rng rng = restart_rng(opt.seed, k);
    if (k > 0) return random_unitary(P.m, rng);
    if (opt.warm_start.size() == 0) return MatrixXcd(MatrixXcd::Identity(P.m, P.m));
    MatrixXcd U = MatrixXcd::Zero(P.m, P.r);
    U.topRows(opt.warm_start.rows()) = opt.warm_start;
    return complete_unitary(U, rng);
  };

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opt.restarts));
  int used = 0;
  bool hit = false;
  while (used < opt.restarts && !hit) {
    const int batch = std::min(opt.jobs, opt.restarts - used);
    auto work = [&](int k) { outcomes[static_cast<std::size_t>(k)] = descend(P, start(k), opt, target); };
    if (batch == 1) {
      work(used);
    } else {
      std::vector<std::thread> pool;
      for (int k = used; k < used + batch; ++k) pool.emplace_back(work, k);
      for (auto& t : pool) t.join();
    }
    // Only restarts up to the first hit count, so results do not depend on jobs.
    for (int k = used; k < used + batch; ++k)
      if (outcomes[static_cast<std::size_t>(k)].value <= target) {
        used = k + 1;
        hit = true;
        break;
      }
    if (!hit) used += batch;
  }

  int best = 0;
  for (int k = 1; k < used; ++k)
    if (outcomes[static_cast<std::size_t>(k)].value < outcomes[static_cast<std::size_t>(best)].value) best = k;
  const auto& o = outcomes[static_cast<std::size_t>(best)];

  RoofResult res;
  res.decomposition = decomposition_from_isometry(spec, o.V.leftCols(P.r), rho.dims);
  res.value = res.decomposition.average(f);
  res.converged = o.converged;
  res.restarts_used = used;
  res.m = P.m;
  res.seed = opt.seed;
  res.maximized = sign < 0;
  return res;
}

}  // namespace

Decomposition decomposition_from_isometry(const SpectralDecomposition& spec, const MatrixXcd& U, const Dims& dims) {
  const int r = spec.rank;
  if (U.cols() != r) throw ValidationError("isometry has " + std::to_string(U.cols()) + " columns, rank is " + std::to_string(r));
  if (U.rows() < r || !is_isometry(U, 1e-10)) throw ValidationError("U is not an isometry (U^dagger U != I within 1e-10)");
  MatrixXcd Z = spec.vectors.leftCols(r) * spec.values.head(r).cwiseSqrt().cast<cplx>().asDiagonal() * U.transpose();
  Decomposition dec;
  dec.dims = dims;
  for (Eigen::Index i = 0; i < Z.cols(); ++i) {
    const double w = Z.col(i).squaredNorm();
    if (w < kDropWeight) continue;
    dec.p.push_back(w);
    dec.states.emplace_back(dims, Z.col(i) / std::sqrt(w));
  }
  return dec;
}

MatrixXcd isometry_of(const DensityMatrix& rho, const Decomposition& d) {
  const auto spec = spectral_decomposition(rho.mat);
  MatrixXcd Z(rho.dim(), d.m());
  for (int i = 0; i < d.m(); ++i) Z.col(i) = std::sqrt(d.p[static_cast<std::size_t>(i)]) * d.states[static_cast<std::size_t>(i)].amp;
  // Z = W U^T with W = E sqrt(Lambda), so U^T = Lambda^{-1/2} E^dagger Z.
  MatrixXcd Ut = spec.values.head(spec.rank).cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * spec.vectors.leftCols(spec.rank).adjoint() * Z;
  MatrixXcd U = Ut.transpose();
  if (!is_isometry(U, 1e-8)) throw ValidationError("decomposition does not belong to this density matrix");
  return U;
}

RoofResult convex_roof(const DensityMatrix& rho, const PureFunction& f, const RoofOptions& opt) {
  RoofResult res = run_roof(rho, f, opt, 1.0);
  const int d2 = rho.dim() * rho.dim();
  if (opt.escalate && res.value > opt.tol && res.m < d2) {
    RoofOptions more = opt;
    more.m = std::min(d2, 2 * res.m);
    try {
      more.warm_start = isometry_of(rho, res.decomposition);
    } catch (const ValidationError&) {
    }
    RoofResult second = run_roof(rho, f, more, 1.0);
    second.restarts_used += res.restarts_used;
    if (second.value < res.value) res = std::move(second);
    else res.restarts_used = second.restarts_used;
  }
  return res;
}

RoofResult concave_roof(const DensityMatrix& rho, const PureFunction& f, const RoofOptions& opt) {
  return run_roof(rho, f, opt, -1.0);
}

void verify_certificate(const DensityMatrix& rho, const PureFunction& f, const RoofResult& r) {
  const auto& dec = r.decomposition;
  if (dec.dims != rho.dims) throw ConsistencyError("certificate dims differ from the state");
  for (int i = 0; i < dec.m(); ++i) {
    if (dec.p[static_cast<std::size_t>(i)] < 0) throw ConsistencyError("certificate has a negative weight");
    if (std::abs(dec.states[static_cast<std::size_t>(i)].norm_sq() - 1) > 1e-10) throw ConsistencyError("certificate member is not normalized");
  }
  const double err = (dec.reconstruct() - rho.mat).cwiseAbs().maxCoeff();
  if (err > 1e-8) throw ConsistencyError("certificate reconstructs rho only to " + std::to_string(err));
  const double v = dec.average(f);
  if (std::abs(v - r.value) > 1e-10) throw ConsistencyError("certificate averages to " + std::to_string(v) + ", reported " + std::to_string(r.value));
}

MembershipCertificate membership_certificate(const DensityMatrix& rho, const PureFunction& f, RoofOptions opt) {
  if (opt.target < 0) opt.target = 1e-2 * opt.tol;
  opt.escalate = true;
  MembershipCertificate c;
  c.result = convex_roof(rho, f, opt);
  c.verdict = c.result.value <= opt.tol ? Membership::In : Membership::Unknown;
  return c;
}

MembershipCertificate membership_certificate(const DensityMatrix& rho, const Label& label, const EntropySpec& entropy, RoofOptions opt) {
  if (label.size() == 0) throw ArgumentError("membership: empty label");
  if (label.n() != rho.n()) throw ArgumentError("membership: label and state have different party counts");
  const EntropySpec e = entropy.normalize();
  e.validate();
  if (!e.concave()) throw ArgumentError("membership: entropy " + e.str() + " is not concave");
  // Product rather than geometric mean: same zero set, but smooth at it.
  const IndicatorSpec spec{label, e, IndicatorSpec::Combiner::Product, IndicatorSpec::BlockCombiner::ArithmeticMean};
  PureFunction f = [spec](const StateVector& psi) { return spec(psi); };
  return membership_certificate(rho, f, std::move(opt));
}

json to_json(const Decomposition& d) {
  json j;
  j["m"] = d.m();
  j["p"] = d.p;
  json states = json::array();
  for (const auto& s : d.states) states.push_back(complex_array(s.amp));
  j["states"] = std::move(states);
  return j;
}

json to_json(const RoofResult& r) {
  json j;
  j["value"] = r.value;
  j["bound"] = r.maximized ? "lower" : "upper";
  j["converged"] = r.converged;
  j["restarts_used"] = r.restarts_used;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["decomposition"] = to_json(r.decomposition);
  return j;
}

}  // namespace partsep
