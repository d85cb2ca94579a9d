#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "partsep/label.hpp"
#include "partsep/quantum.hpp"

namespace partsep {

/// The local function F applied to reduced states. All kinds vanish
/// exactly on pure states. `normalized` divides by the maximum over the
/// reduced dimension so values land in [0, 1].
struct EntropySpec {
  enum class Kind { VonNeumann, Tsallis, Renyi, ConcurrenceSq };
  Kind kind = Kind::Tsallis;
  double q = 2.0;
  bool normalized = false;

  static EntropySpec von_neumann() { return {Kind::VonNeumann, 1.0, false}; }
  static EntropySpec tsallis(double q = 2.0) { return {Kind::Tsallis, q, false}; }
  static EntropySpec renyi(double q) { return {Kind::Renyi, q, false}; }
  static EntropySpec concurrence_sq() { return {Kind::ConcurrenceSq, 2.0, false}; }
  EntropySpec normalize() const { auto e = *this; e.normalized = true; return e; }

  void validate() const;
  bool concave() const;
  /// Value on a spectrum of a d-dimensional reduced state.
  double operator()(const Eigen::VectorXd& spectrum) const;
  /// Same on a density matrix; quadratic kinds skip the eigensolver.
  double on_matrix(const Eigen::MatrixXcd& rho) const;
  std::string str() const;
  /// "tsallis:2", "vn", "renyi:0.5", "c2"; a trailing "/n" normalizes.
  static EntropySpec parse(const std::string& text);
};

/// F(pi_K) for a non-empty proper subset K (1-based). psi need not be
/// normalized; the reduced state is scaled to unit trace, and 0 maps to 0.
double f_K(const StateVector& psi, const std::vector<int>& K, const EntropySpec& F = {});

/// Sum over blocks; the trivial partition gives 0.
double f_alpha(const StateVector& psi, const Partition& alpha, const EntropySpec& F = {});
/// Product over the partitions of the label.
double f_label(const StateVector& psi, const Label& label, const EntropySpec& F = {});

/// Arithmetic mean over blocks; F must be concave.
double m_alpha(const StateVector& psi, const Partition& alpha, const EntropySpec& M = {});
/// Geometric mean over the partitions of the label; F must be concave.
double m_label(const StateVector& psi, const Label& label, const EntropySpec& M = {});

struct IndicatorSpec {
  enum class Combiner { Product, GeometricMean };
  enum class BlockCombiner { Sum, ArithmeticMean };
  Label label;
  EntropySpec entropy;
  Combiner combiner = Combiner::Product;
  BlockCombiner block = BlockCombiner::Sum;

  static IndicatorSpec additive(Label l, EntropySpec e = {}) { return {std::move(l), e, Combiner::Product, BlockCombiner::Sum}; }
  static IndicatorSpec monotone(Label l, EntropySpec e = {}) { return {std::move(l), e, Combiner::GeometricMean, BlockCombiner::ArithmeticMean}; }

  double operator()(const StateVector& psi) const;
};

/// The reduced-state function values for every non-empty proper subset,
/// indexed by bitmask (bit a-1 for party a). Entry 0 and the full mask are 0.
std::vector<double> subset_values(const StateVector& psi, const EntropySpec& F);

/// Finest partition whose f_alpha vanishes (<= threshold); n <= 6.
/// Throws ClassificationError if the vanishing set has no unique minimum.
Partition classify_pure_general(const StateVector& psi, const EntropySpec& F = {}, double threshold = 1e-10);

struct GeometricMeanSlacks {
  double holder = 0;     // prod_j ||x^(j)||_q - sum_i prod_j x_i^(j)
  double averaging = 0;  // prod_j (sum_i p_i x_i^(j))^(1/q) - sum_i p_i prod_j (x_i^(j))^(1/q)
};

/// Rows index ensemble members i, columns the q functions j.
GeometricMeanSlacks geometric_mean_slacks(const Eigen::VectorXd& p, const Eigen::MatrixXd& x);
bool geometric_mean_average_inequality_check(const Eigen::VectorXd& p, const Eigen::MatrixXd& x, double tol = 1e-12);

}  // namespace partsep
