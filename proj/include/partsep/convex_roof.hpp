#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "partsep/indicators.hpp"
#include "partsep/json_io.hpp"
#include "partsep/quantum.hpp"

namespace partsep {

// Called on unit vectors only. Must be safe to call from several threads.
using PureFunction = std::function<double(const StateVector&)>;

struct Decomposition {
  Dims dims;
  std::vector<double> p;
  std::vector<StateVector> states;

  int m() const { return static_cast<int>(p.size()); }
  Eigen::MatrixXcd reconstruct() const;
  double average(const PureFunction& f) const;
};

struct RoofOptions {
  int m = 0;  // 0 picks min(d^2, max(2r, r+2))
  int restarts = 32;
  std::uint64_t seed = 1;
  double tol = 1e-5;
  int max_iters = 500;
  int jobs = 1;
  // Stop launching restarts once a value at or below this is found.
  double target = -1;
  // Retry once with min(d^2, 2m) members when the best value stays above tol.
  bool escalate = false;
  // Optional starting isometry (rows = members); used by restart 0.
  Eigen::MatrixXcd warm_start;

  void validate() const;
};

// value is an upper bound for convex_roof and a lower bound for concave_roof.
// Neither direction certifies the other side.
struct RoofResult {
  double value = 0;
  Decomposition decomposition;
  bool converged = false;
  int restarts_used = 0;
  int m = 0;
  std::uint64_t seed = 0;
  bool maximized = false;
};

// psi_i ∝ sum_k U_ik sqrt(lambda_k) e_k over the r nonzero eigenpairs.
Decomposition decomposition_from_isometry(const SpectralDecomposition& spec, const Eigen::MatrixXcd& U, const Dims& dims);

// Inverse of decomposition_from_isometry: the m x r isometry behind d.
Eigen::MatrixXcd isometry_of(const DensityMatrix& rho, const Decomposition& d);

RoofResult convex_roof(const DensityMatrix& rho, const PureFunction& f, const RoofOptions& opt = {});
RoofResult concave_roof(const DensityMatrix& rho, const PureFunction& f, const RoofOptions& opt = {});

// Throws ConsistencyError unless the decomposition reconstructs rho within
// 1e-8 (max-norm) and averages f to the reported value within 1e-10.
void verify_certificate(const DensityMatrix& rho, const PureFunction& f, const RoofResult& r);

enum class Membership { In, Unknown };

struct MembershipCertificate {
  Membership verdict = Membership::Unknown;
  RoofResult result;
};

// IN when the roof of f drops to opt.tol; otherwise UNKNOWN, since a failed
// search says nothing about non-membership.
MembershipCertificate membership_certificate(const DensityMatrix& rho, const PureFunction& f, RoofOptions opt = {});
// f = product over the label of block-averaged normalized entropies.
MembershipCertificate membership_certificate(const DensityMatrix& rho, const Label& label, const EntropySpec& entropy, RoofOptions opt = {});

json to_json(const Decomposition& d);
json to_json(const RoofResult& r);

}  // namespace partsep
