#include "partsep/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "partsep/errors.hpp"

namespace partsep {

int total_dim(const Dims& dims) {
  if (dims.empty()) throw DimensionError("dims: empty");
  long long D = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionError("dims: non-positive subsystem dimension");
    D *= d;
    if (D > kMaxTotalDim) throw DimensionError("dims: total dimension exceeds " + std::to_string(kMaxTotalDim));
  }
  return static_cast<int>(D);
}

StateVector::StateVector(Dims d, Eigen::VectorXcd a) : dims(std::move(d)), amp(std::move(a)) {
  if (amp.size() != total_dim(dims))
    throw DimensionError("state: " + std::to_string(amp.size()) + " amplitudes for total dimension " + std::to_string(total_dim(dims)));
}

StateVector StateVector::normalized() const {
  double nn = amp.norm();
  if (nn == 0.0) throw ValidationError("state: cannot normalize the zero vector");
  return StateVector(dims, amp / nn);
}

DensityMatrix::DensityMatrix(Dims d, Eigen::MatrixXcd m, bool trusted) : dims(std::move(d)), mat(std::move(m)) {
  const int D = total_dim(dims);
  if (mat.rows() != D || mat.cols() != D) throw DimensionError("density: matrix side does not match dims");
  if (trusted) return;
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw ValidationError("density: not Hermitian within 1e-12");
  if (std::abs(mat.trace() - cplx(1.0)) > 1e-10) throw ValidationError("density: trace differs from 1 by more than 1e-10");
  density_spectrum(mat);
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  auto p = psi.normalized();
  return DensityMatrix(p.dims, p.amp * p.amp.adjoint(), true);
}

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& h, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::Index D = h.rows();
  SpectralDecomposition s;
  s.values = es.eigenvalues().reverse();
  s.vectors = es.eigenvectors().rowwise().reverse();
  for (Eigen::Index i = 0; i < D; ++i) {
    if (s.values(i) < cutoff) s.values(i) = 0.0;
    else ++s.rank;
  }
  return s;
}

Eigen::VectorXd density_spectrum(const Eigen::MatrixXcd& rho) {
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho, Eigen::EigenvaluesOnly).eigenvalues().reverse();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-10) throw ValidationError("density: eigenvalue " + std::to_string(ev(i)) + " below -1e-10");
    if (ev(i) < 1e-12) ev(i) = 0;  // same rank cutoff as spectral_decomposition
  }
  return ev;
}

namespace {

void check_subsystem(const Dims& dims, int s) {
  if (s < 1 || s > static_cast<int>(dims.size()))
    throw ArgumentError("subsystem " + std::to_string(s) + " outside 1.." + std::to_string(dims.size()));
}

// Ordering of the full index as (kept digits, traced digits), both blocks
// keeping the original slowest-first order.
struct Split {
  int Dk = 1, Dt = 1;
  std::vector<int> perm;  // perm[k * Dt + t] = full index
};

Split split_index(const Dims& dims, std::vector<int>& keep) {
  if (keep.empty()) throw ArgumentError("partial trace: empty keep set");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) throw ArgumentError("partial trace: repeated subsystem");
  for (int s : keep) check_subsystem(dims, s);
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int s : keep) kept[static_cast<std::size_t>(s - 1)] = true;
  Split sp;
  for (int a = 0; a < n; ++a) (kept[static_cast<std::size_t>(a)] ? sp.Dk : sp.Dt) *= dims[static_cast<std::size_t>(a)];
  const int D = sp.Dk * sp.Dt;
  sp.perm.resize(static_cast<std::size_t>(D));
  for (int f = 0; f < D; ++f) {
    int rem = f, k = 0, t = 0, kw = 1, tw = 1;
    for (int a = n - 1; a >= 0; --a) {
      int d = dims[static_cast<std::size_t>(a)];
      int digit = rem % d;
      rem /= d;
      if (kept[static_cast<std::size_t>(a)]) {
        k += digit * kw;
        kw *= d;
      } else {
        t += digit * tw;
        tw *= d;
      }
    }
    sp.perm[static_cast<std::size_t>(k * sp.Dt + t)] = f;
  }
  return sp;
}

std::vector<int> digits_of(int f, const Dims& dims) {
  std::vector<int> dg(dims.size());
  for (int a = static_cast<int>(dims.size()) - 1; a >= 0; --a) {
    dg[static_cast<std::size_t>(a)] = f % dims[static_cast<std::size_t>(a)];
    f /= dims[static_cast<std::size_t>(a)];
  }
  return dg;
}

int index_of(const std::vector<int>& dg, const Dims& dims) {
  int f = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) f = f * dims[a] + dg[a];
  return f;
}

}  // namespace

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, const Dims& dims, std::vector<int> keep) {
  const int D = total_dim(dims);
  if (rho.rows() != D || rho.cols() != D) throw DimensionError("partial trace: matrix side does not match dims");
  const auto sp = split_index(dims, keep);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(sp.Dk, sp.Dk);
  for (int i = 0; i < sp.Dk; ++i)
    for (int j = 0; j < sp.Dk; ++j) {
      cplx acc = 0;
      for (int t = 0; t < sp.Dt; ++t)
        acc += rho(sp.perm[static_cast<std::size_t>(i * sp.Dt + t)], sp.perm[static_cast<std::size_t>(j * sp.Dt + t)]);
      out(i, j) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  auto k = keep;
  auto m = partial_trace(rho.mat, rho.dims, k);
  std::sort(k.begin(), k.end());
  Dims d;
  for (int s : k) d.push_back(rho.dims[static_cast<std::size_t>(s - 1)]);
  return DensityMatrix(d, std::move(m), true);
}

Eigen::MatrixXcd reduced_matrix(const StateVector& psi, std::vector<int> keep) {
  const auto sp = split_index(psi.dims, keep);
  Eigen::MatrixXcd M(sp.Dk, sp.Dt);
  for (int k = 0; k < sp.Dk; ++k)
    for (int t = 0; t < sp.Dt; ++t) M(k, t) = psi.amp(sp.perm[static_cast<std::size_t>(k * sp.Dt + t)]);
  return M * M.adjoint();
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, const Dims& dims, int subsystem) {
  check_subsystem(dims, subsystem);
  const int D = total_dim(dims);
  if (rho.rows() != D || rho.cols() != D) throw DimensionError("partial transpose: matrix side does not match dims");
  const std::size_t s = static_cast<std::size_t>(subsystem - 1);
  Eigen::MatrixXcd out(D, D);
  for (int r = 0; r < D; ++r) {
    auto dr = digits_of(r, dims);
    for (int c = 0; c < D; ++c) {
      auto dc = digits_of(c, dims);
      std::swap(dr[s], dc[s]);
      out(index_of(dr, dims), index_of(dc, dims)) = rho(r, c);
      std::swap(dr[s], dc[s]);
    }
  }
  return out;
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, int subsystem) { return partial_transpose(rho.mat, rho.dims, subsystem); }

double min_pt_eigenvalue(const DensityMatrix& rho, int subsystem) {
  Eigen::MatrixXcd pt = partial_transpose(rho, subsystem);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(pt, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

bool is_ppt(const DensityMatrix& rho, double floor) {
  const auto& d = rho.dims;
  bool ok = d.size() == 2 && ((d[0] == 2 && (d[1] == 2 || d[1] == 3)) || (d[0] == 3 && d[1] == 2));
  if (!ok) throw DimensionError("is_ppt: PPT decides separability only for 2x2, 2x3 and 3x2 systems");
  return min_pt_eigenvalue(rho, 1) >= floor;
}

StateVector apply_on(const StateVector& psi, int subsystem, const Eigen::MatrixXcd& m) {
  check_subsystem(psi.dims, subsystem);
  const std::size_t s = static_cast<std::size_t>(subsystem - 1);
  const int d = psi.dims[s];
  if (m.rows() != d || m.cols() != d) throw DimensionError("apply_on: operator size does not match the subsystem");
  // View the amplitudes as (outer, d, inner) and act on the middle index.
  int inner = 1;
  for (std::size_t a = s + 1; a < psi.dims.size(); ++a) inner *= psi.dims[a];
  const int outer = static_cast<int>(psi.amp.size()) / (d * inner);
  Eigen::VectorXcd out(psi.amp.size());
  for (int o = 0; o < outer; ++o) {
    Eigen::Map<const Eigen::MatrixXcd, 0, Eigen::OuterStride<>> in(psi.amp.data() + o * d * inner, inner, d, Eigen::OuterStride<>(inner));
    Eigen::Map<Eigen::MatrixXcd, 0, Eigen::OuterStride<>> res(out.data() + o * d * inner, inner, d, Eigen::OuterStride<>(inner));
    res = in * m.transpose();
  }
  return StateVector(psi.dims, std::move(out));
}

StateVector apply_local(const StateVector& psi, const std::vector<Eigen::MatrixXcd>& ops) {
  if (ops.size() != psi.dims.size()) throw DimensionError("apply_local: one operator per subsystem required");
  StateVector out = psi;
  for (std::size_t a = 0; a < ops.size(); ++a) out = apply_on(out, static_cast<int>(a) + 1, ops[a]);
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Dims d = a.dims;
  d.insert(d.end(), b.dims.begin(), b.dims.end());
  Eigen::VectorXcd v(a.amp.size() * b.amp.size());
  for (Eigen::Index i = 0; i < a.amp.size(); ++i) v.segment(i * b.amp.size(), b.amp.size()) = a.amp(i) * b.amp;
  return StateVector(std::move(d), std::move(v));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims d = a.dims;
  d.insert(d.end(), b.dims.begin(), b.dims.end());
  const Eigen::Index A = a.mat.rows(), B = b.mat.rows();
  Eigen::MatrixXcd m(A * B, A * B);
  for (Eigen::Index i = 0; i < A; ++i)
    for (Eigen::Index j = 0; j < A; ++j) m.block(i * B, j * B, B, B) = a.mat(i, j) * b.mat;
  return DensityMatrix(std::move(d), std::move(m), true);
}

StateVector basis_state(const Dims& dims, const std::vector<int>& digits) {
  if (digits.size() != dims.size()) throw DimensionError("basis_state: digit count does not match dims");
  for (std::size_t a = 0; a < dims.size(); ++a)
    if (digits[a] < 0 || digits[a] >= dims[a]) throw ArgumentError("basis_state: digit out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(total_dim(dims));
  v(index_of(digits, dims)) = 1.0;
  return StateVector(dims, std::move(v));
}

double von_neumann_entropy(const Eigen::VectorXd& spectrum) {
  double s = 0;
  for (double l : spectrum)
    if (l > 0) s -= l * std::log(l);  // 0 ln 0 = 0
  return s;
}

namespace {

double power_trace(const Eigen::VectorXd& spectrum, double q) {
  double s = 0;
  for (double l : spectrum)
    if (l > 0) s += std::pow(l, q);
  return s;
}

}  // namespace

double tsallis_entropy(const Eigen::VectorXd& spectrum, double q) {
  if (!(q > 0)) throw ArgumentError("tsallis_entropy: q must be positive");
  if (q == 1.0) return von_neumann_entropy(spectrum);
  return (power_trace(spectrum, q) - 1.0) / (1.0 - q);
}

double renyi_entropy(const Eigen::VectorXd& spectrum, double q) {
  if (!(q > 0)) throw ArgumentError("renyi_entropy: q must be positive");
  if (q == 1.0) throw ArgumentError("renyi_entropy: q = 1 is the von Neumann limit, use von_neumann_entropy");
  return std::log(power_trace(spectrum, q)) / (1.0 - q);
}

double concurrence_squared(const Eigen::VectorXd& spectrum) {
  const double d = static_cast<double>(spectrum.size());
  if (d < 2) return 0.0;
  return d / (d - 1.0) * (1.0 - spectrum.squaredNorm());
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(density_spectrum(rho.mat)); }
double tsallis_entropy(const DensityMatrix& rho, double q) { return tsallis_entropy(density_spectrum(rho.mat), q); }
double renyi_entropy(const DensityMatrix& rho, double q) { return renyi_entropy(density_spectrum(rho.mat), q); }
double concurrence_squared(const DensityMatrix& rho) { return concurrence_squared(density_spectrum(rho.mat)); }

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd diff = a - b;
  return 0.5 * Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(diff, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().sum();
}

namespace {

Eigen::MatrixXcd ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      double re = g(rng);
      double im = g(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

}  // namespace

Eigen::MatrixXcd random_unitary(int d, Rng& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(d, d, rng));
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Phase fix makes the distribution Haar.
  for (int i = 0; i < d; ++i) {
    cplx r = R(i, i);
    Q.col(i) *= std::abs(r) > 0 ? r / std::abs(r) : cplx(1.0);
  }
  return Q;
}

StateVector random_state(const Dims& dims, Rng& rng) {
  Eigen::VectorXcd v = ginibre(total_dim(dims), 1, rng).col(0);
  return StateVector(dims, v / v.norm());
}

StateVector random_state(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dims, rng);
}

std::vector<Eigen::MatrixXcd> random_local_unitary(const Dims& dims, Rng& rng) {
  total_dim(dims);
  std::vector<Eigen::MatrixXcd> out;
  for (int d : dims) out.push_back(random_unitary(d, rng));
  return out;
}

std::vector<Eigen::MatrixXcd> random_local_unitary(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_local_unitary(dims, rng);
}

std::vector<Eigen::MatrixXcd> random_local_invertible(const Dims& dims, Rng& rng) {
  total_dim(dims);
  std::vector<Eigen::MatrixXcd> out;
  for (int d : dims) {
    Eigen::MatrixXcd m;
    do {
      m = ginibre(d, d, rng);
    } while (std::abs(m.determinant()) < 1e-6);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Eigen::MatrixXcd> random_local_invertible(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_local_invertible(dims, rng);
}

DensityMatrix random_density(const Dims& dims, int rank, Rng& rng) {
  const int D = total_dim(dims);
  if (rank < 1 || rank > D) throw ArgumentError("random_density: rank outside 1..dim");
  Eigen::MatrixXcd G = ginibre(D, rank, rng);
  Eigen::MatrixXcd rho = G * G.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(dims, std::move(rho), true);
}

}  // namespace partsep
