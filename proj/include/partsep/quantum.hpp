#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace partsep {

using cplx = std::complex<double>;
using Dims = std::vector<int>;
using Rng = std::mt19937_64;

inline constexpr int kMaxTotalDim = 4096;

/// Checks every dim >= 1 and the product <= 4096; returns the product.
int total_dim(const Dims& dims);

/// Amplitudes over the tensor product, subsystem 1 slowest.
/// No normalization is implied.
struct StateVector {
  Dims dims;
  Eigen::VectorXcd amp;

  StateVector() = default;
  StateVector(Dims d, Eigen::VectorXcd a);

  int n() const { return static_cast<int>(dims.size()); }
  double norm_sq() const { return amp.squaredNorm(); }
  StateVector normalized() const;
};

/// Hermitian, PSD, unit trace (checked on construction unless `trusted`).
struct DensityMatrix {
  Dims dims;
  Eigen::MatrixXcd mat;

  DensityMatrix() = default;
  DensityMatrix(Dims d, Eigen::MatrixXcd m, bool trusted = false);
  static DensityMatrix pure(const StateVector& psi);

  int n() const { return static_cast<int>(dims.size()); }
  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Descending eigenvalues; entries below `cutoff` zeroed. `rank` counts the rest.
struct SpectralDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  int rank = 0;
};

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& h, double cutoff = 1e-12);

/// Eigenvalues of a density matrix, descending, with drift above -1e-10
/// clipped to zero and entries below 1e-12 zeroed. Anything below -1e-10
/// is a ValidationError.
Eigen::VectorXd density_spectrum(const Eigen::MatrixXcd& rho);

// Subsystem indices below are 1-based.

/// Reduced matrix on `keep` (any order; result uses ascending order).
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, const Dims& dims, std::vector<int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
/// tr_{complement}|psi><psi| without forming the full projector.
Eigen::MatrixXcd reduced_matrix(const StateVector& psi, std::vector<int> keep);

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, const Dims& dims, int subsystem);
Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, int subsystem);
double min_pt_eigenvalue(const DensityMatrix& rho, int subsystem = 1);
/// Decides separability for 2x2 and 2x3 systems; other dims throw DimensionError.
bool is_ppt(const DensityMatrix& rho, double floor = -1e-10);

/// Apply one operator per subsystem: (A1 ⊗ ... ⊗ An)|psi>.
StateVector apply_local(const StateVector& psi, const std::vector<Eigen::MatrixXcd>& ops);
/// Apply M to the single factor `subsystem`.
StateVector apply_on(const StateVector& psi, int subsystem, const Eigen::MatrixXcd& m);

StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Basis product state |i1 i2 ...>.
StateVector basis_state(const Dims& dims, const std::vector<int>& digits);

// Entropies of a density matrix (natural log).
double von_neumann_entropy(const Eigen::VectorXd& spectrum);
double tsallis_entropy(const Eigen::VectorXd& spectrum, double q);
double renyi_entropy(const Eigen::VectorXd& spectrum, double q);
double concurrence_squared(const Eigen::VectorXd& spectrum);

double von_neumann_entropy(const DensityMatrix& rho);
double tsallis_entropy(const DensityMatrix& rho, double q);
double renyi_entropy(const DensityMatrix& rho, double q);
double concurrence_squared(const DensityMatrix& rho);

/// Trace norm of a Hermitian difference, half of sum |eigenvalues|.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

Eigen::MatrixXcd random_unitary(int d, Rng& rng);
StateVector random_state(const Dims& dims, Rng& rng);
StateVector random_state(const Dims& dims, std::uint64_t seed);
std::vector<Eigen::MatrixXcd> random_local_unitary(const Dims& dims, Rng& rng);
std::vector<Eigen::MatrixXcd> random_local_unitary(const Dims& dims, std::uint64_t seed);
std::vector<Eigen::MatrixXcd> random_local_invertible(const Dims& dims, Rng& rng);
std::vector<Eigen::MatrixXcd> random_local_invertible(const Dims& dims, std::uint64_t seed);
/// Random density matrix of the given rank from a Ginibre matrix.
DensityMatrix random_density(const Dims& dims, int rank, Rng& rng);

}  // namespace partsep
