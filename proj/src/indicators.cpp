#include "partsep/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "partsep/errors.hpp"

namespace partsep {

void EntropySpec::validate() const {
  if (!(q > 0)) throw ArgumentError("entropy: q must be positive");
  if (kind == Kind::Renyi && q == 1.0) throw ArgumentError("entropy: Renyi q = 1 is von Neumann");
}

bool EntropySpec::concave() const {
  switch (kind) {
    case Kind::VonNeumann:
    case Kind::Tsallis:
    case Kind::ConcurrenceSq:
      return true;
    case Kind::Renyi:
      return q < 1.0;
  }
  return false;
}

double EntropySpec::operator()(const Eigen::VectorXd& spectrum) const {
  validate();
  double v = 0;
  switch (kind) {
    case Kind::VonNeumann: v = von_neumann_entropy(spectrum); break;
    case Kind::Tsallis: v = tsallis_entropy(spectrum, q); break;
    case Kind::Renyi: v = renyi_entropy(spectrum, q); break;
    case Kind::ConcurrenceSq: v = concurrence_squared(spectrum); break;
  }
  if (!normalized) return v;
  const double d = static_cast<double>(spectrum.size());
  if (d < 2) return 0.0;
  double vmax = std::log(d);
  if (kind == Kind::Tsallis && q != 1.0) vmax = (1.0 - std::pow(d, 1.0 - q)) / (q - 1.0);
  if (kind == Kind::ConcurrenceSq) vmax = 1.0;
  return v / vmax;
}

double EntropySpec::on_matrix(const Eigen::MatrixXcd& rho) const {
  const bool quadratic = (kind == Kind::Tsallis && q == 2.0) || kind == Kind::ConcurrenceSq;
  if (!quadratic) return (*this)(density_spectrum(rho));
  validate();
  const double lin = std::max(0.0, 1.0 - rho.squaredNorm());
  const double d = static_cast<double>(rho.rows());
  if (d < 2) return 0.0;
  if (kind == Kind::ConcurrenceSq) return d / (d - 1.0) * lin;
  return normalized ? lin / (1.0 - 1.0 / d) : lin;
}

std::string EntropySpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::VonNeumann: os << "vn"; break;
    case Kind::Tsallis: os << "tsallis:" << q; break;
    case Kind::Renyi: os << "renyi:" << q; break;
    case Kind::ConcurrenceSq: os << "c2"; break;
  }
  if (normalized) os << "/n";
  return os.str();
}

EntropySpec EntropySpec::parse(const std::string& text) {
  std::string t = text;
  bool norm = false;
  if (t.size() > 2 && t.substr(t.size() - 2) == "/n") {
    norm = true;
    t.resize(t.size() - 2);
  }
  auto colon = t.find(':');
  std::string head = t.substr(0, colon);
  double q = 2.0;
  if (colon != std::string::npos) {
    try {
      q = std::stod(t.substr(colon + 1));
    } catch (const std::exception&) {
      throw ArgumentError("entropy: cannot read q in \"" + text + "\"");
    }
  }
  EntropySpec e;
  if (head == "vn" || head == "neumann") e = von_neumann();
  else if (head == "tsallis") e = tsallis(q);
  else if (head == "renyi") e = renyi(q);
  else if (head == "c2" || head == "concurrence") e = concurrence_sq();
  else throw ArgumentError("entropy: unknown kind \"" + head + "\"");
  e.normalized = norm;
  e.validate();
  return e;
}

namespace {

double dim_of(const StateVector& psi, unsigned mask) {
  double d = 1;
  for (int a = 0; a < psi.n(); ++a)
    if (mask >> a & 1u) d *= psi.dims[static_cast<std::size_t>(a)];
  return d;
}

// F on the reduced state of `mask`, evaluated on the smaller side of the cut.
double reduced_value(const StateVector& psi, unsigned mask, const EntropySpec& F) {
  const double nn = psi.norm_sq();
  if (nn == 0) return 0.0;
  const unsigned full = (1u << psi.n()) - 1u;
  if (mask == 0 || mask == full) return 0.0;
  unsigned side = dim_of(psi, mask) <= dim_of(psi, full ^ mask) ? mask : full ^ mask;
  std::vector<int> keep;
  for (int a = 0; a < psi.n(); ++a)
    if (side >> a & 1u) keep.push_back(a + 1);
  return F.on_matrix(reduced_matrix(psi, keep) / nn);
}

unsigned mask_of(const StateVector& psi, const std::vector<int>& K) {
  unsigned m = 0;
  for (int a : K) {
    if (a < 1 || a > psi.n()) throw ArgumentError("f_K: subsystem " + std::to_string(a) + " out of range");
    if (m >> (a - 1) & 1u) throw ArgumentError("f_K: repeated subsystem");
    m |= 1u << (a - 1);
  }
  return m;
}

void check_partition(const StateVector& psi, const Partition& alpha) {
  if (alpha.n() != psi.n()) throw ArgumentError("partition over " + std::to_string(alpha.n()) + " parties applied to a " + std::to_string(psi.n()) + "-party state");
}

void require_concave(const EntropySpec& M) {
  M.validate();
  if (!M.concave())
    throw ArgumentError("monotone indicator needs a concave entropy; " + M.str() + " is not concave, so averaging monotonicity would fail");
}

}  // namespace

double f_K(const StateVector& psi, const std::vector<int>& K, const EntropySpec& F) {
  F.validate();
  const unsigned m = mask_of(psi, K);
  const unsigned full = (1u << psi.n()) - 1u;
  if (m == 0 || m == full) throw ArgumentError("f_K: K must be a non-empty proper subset");
  return reduced_value(psi, m, F);
}

double f_alpha(const StateVector& psi, const Partition& alpha, const EntropySpec& F) {
  check_partition(psi, alpha);
  F.validate();
  double s = 0;
  for (int r = 0; r < alpha.size(); ++r) s += reduced_value(psi, alpha.block_mask(r), F);
  return s;
}

double f_label(const StateVector& psi, const Label& label, const EntropySpec& F) {
  double p = 1;
  for (const auto& a : label) p *= f_alpha(psi, a, F);
  return p;
}

double m_alpha(const StateVector& psi, const Partition& alpha, const EntropySpec& M) {
  require_concave(M);
  return f_alpha(psi, alpha, M) / alpha.size();
}

double m_label(const StateVector& psi, const Label& label, const EntropySpec& M) {
  double p = 1;
  for (const auto& a : label) p *= m_alpha(psi, a, M);
  return std::pow(p, 1.0 / label.size());
}

double IndicatorSpec::operator()(const StateVector& psi) const {
  if (block == BlockCombiner::ArithmeticMean && combiner == Combiner::GeometricMean) return m_label(psi, label, entropy);
  double acc = 1;
  for (const auto& a : label) {
    double v = f_alpha(psi, a, entropy);
    if (block == BlockCombiner::ArithmeticMean) v /= a.size();
    acc *= v;
  }
  return combiner == Combiner::GeometricMean ? std::pow(acc, 1.0 / label.size()) : acc;
}

std::vector<double> subset_values(const StateVector& psi, const EntropySpec& F) {
  F.validate();
  const unsigned full = (1u << psi.n()) - 1u;
  std::vector<double> v(full + 1u, 0.0);
  for (unsigned m = 1; m < full; ++m) {
    if ((full ^ m) < m) v[m] = v[full ^ m];
    else v[m] = reduced_value(psi, m, F);
  }
  return v;
}

Partition classify_pure_general(const StateVector& psi, const EntropySpec& F, double threshold) {
  if (psi.n() < 1 || psi.n() > 6) throw ArgumentError("classify_pure_general: n must be 1..6");
  if (psi.norm_sq() == 0) throw ClassificationError("classify_pure_general: zero vector has no separability pattern");
  const auto vals = subset_values(psi, F);
  std::vector<Partition> vanishing;
  for (const auto& a : all_partitions(psi.n())) {
    double s = 0;
    for (int r = 0; r < a.size(); ++r) s += vals[a.block_mask(r)];
    if (s <= threshold) vanishing.push_back(a);
  }
  // all_partitions is a linear extension of refinement, so a minimum, if any, comes first.
  const Partition& cand = vanishing.front();
  for (const auto& a : vanishing)
    if (!refines(cand, a)) throw ClassificationError("classify_pure_general: vanishing partitions " + cand.str() + " and " + a.str() + " have no common refinement below threshold");
  return cand;
}

GeometricMeanSlacks geometric_mean_slacks(const Eigen::VectorXd& p, const Eigen::MatrixXd& x) {
  if (p.size() != x.rows()) throw ArgumentError("geometric mean check: weight count differs from row count");
  if (x.cols() < 1) throw ArgumentError("geometric mean check: need at least one column");
  if ((p.array() < 0).any() || std::abs(p.sum() - 1.0) > 1e-12) throw ArgumentError("geometric mean check: weights must lie on the simplex");
  if ((x.array() < 0).any()) throw ArgumentError("geometric mean check: entries must be non-negative");
  const double q = static_cast<double>(x.cols());
  GeometricMeanSlacks s;
  double lhs = x.rowwise().prod().sum();
  double rhs = 1;
  for (Eigen::Index j = 0; j < x.cols(); ++j) rhs *= std::pow(x.col(j).array().pow(q).sum(), 1.0 / q);
  s.holder = rhs - lhs;
  double avg_lhs = (p.array() * x.rowwise().prod().array().pow(1.0 / q)).sum();
  double avg_rhs = 1;
  for (Eigen::Index j = 0; j < x.cols(); ++j) avg_rhs *= std::pow(p.dot(x.col(j)), 1.0 / q);
  s.averaging = avg_rhs - avg_lhs;
  return s;
}

bool geometric_mean_average_inequality_check(const Eigen::VectorXd& p, const Eigen::MatrixXd& x, double tol) {
  auto s = geometric_mean_slacks(p, x);
  return s.holder >= -tol && s.averaging >= -tol;
}

}  // namespace partsep
