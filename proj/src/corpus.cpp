#include "partsep/corpus.hpp"

#include <cmath>
#include <sstream>

#include "partsep/errors.hpp"

namespace partsep {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

const Dims kQ3 = {2, 2, 2};

StateVector superpose(const Dims& dims, const std::vector<std::pair<cplx, std::vector<int>>>& terms) {
  StateVector v(dims, VectorXcd::Zero(total_dim(dims)));
  for (const auto& [c, digits] : terms) v.amp += c * basis_state(dims, digits).amp;
  return v;
}

// |x>_a ⊗ |B> on the other two qubits.
StateVector bell_on(int a, int x) {
  std::vector<int> d0(3, 0), d1(3, 1);
  d0[static_cast<std::size_t>(a - 1)] = d1[static_cast<std::size_t>(a - 1)] = x;
  const double h = 1 / std::sqrt(2.0);
  return superpose(kQ3, {{h, d0}, {h, d1}});
}

MatrixXcd proj(const StateVector& s) { return s.amp * s.amp.adjoint(); }

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

CorpusCheck near(std::string what, std::function<double(const CorpusEntry&)> f, double expected, double tol) {
  return {what, [=](const CorpusEntry& e, const RoofOptions&) {
            const double v = f(e);
            return CheckOutcome{what, std::abs(v - expected) <= tol, "got " + num(v) + ", want " + num(expected) + " ± " + num(tol)};
          }};
}

CorpusCheck above(std::string what, std::function<double(const CorpusEntry&)> f, double bound) {
  return {what, [=](const CorpusEntry& e, const RoofOptions&) {
            const double v = f(e);
            return CheckOutcome{what, v > bound, "got " + num(v) + ", want > " + num(bound)};
          }};
}

CorpusCheck pure_class(PureClass want) {
  const std::string what = "pure class " + pure_class_name(want);
  return {what, [=](const CorpusEntry& e, const RoofOptions&) {
            try {
              auto v = classify_pure_3q(*e.pure);
              return CheckOutcome{what, v.cls == want, "got " + pure_class_name(v.cls)};
            } catch (const Error& ex) {
              return CheckOutcome{what, false, ex.what()};
            }
          }};
}

CorpusCheck finest_partition(std::string want) {
  const std::string what = "finest split " + want;
  return {what, [=](const CorpusEntry& e, const RoofOptions&) {
            auto p = classify_pure_general(*e.pure);
            return CheckOutcome{what, p == Partition::parse(want), "got " + p.str()};
          }};
}

CorpusCheck agrees_with_general() {
  const std::string what = "three-qubit and general pure verdicts agree";
  return {what, [=](const CorpusEntry& e, const RoofOptions&) {
            auto a = classify_pure_3q(*e.pure);
            auto b = classify_pure_general(*e.pure);
            return CheckOutcome{what, a.partition && *a.partition == b, (a.partition ? a.partition->str() : "none") + " vs " + b.str()};
          }};
}

CorpusCheck npt_pattern(std::array<bool, 3> want) {
  std::string what = "NPT reductions 12/13/23 = ";
  for (bool b : want) what += b ? "NPT " : "PPT ";
  what.pop_back();
  return {what, [=](const CorpusEntry& e, const RoofOptions&) {
            auto n = npt_side_information(e.rho);
            std::string d;
            for (std::size_t p = 0; p < 3; ++p) d += num(n.min_eig[p]) + (p < 2 ? ", " : "");
            // A clear margin: entangled pairs must go below -1e-3.
            bool ok = true;
            for (std::size_t p = 0; p < 3; ++p) ok = ok && (want[p] ? n.min_eig[p] < -1e-3 : n.min_eig[p] >= -1e-10);
            return CheckOutcome{what, ok, "min PT eigenvalues " + d};
          }};
}

CorpusCheck mixed_class(std::string want, FunctionSet set) {
  const std::string what = "mixed class " + want + (set == FunctionSet::Fts ? " (fts)" : " (mult)");
  return {what, [=](const CorpusEntry& e, const RoofOptions& ro) {
            MixedOptions mo;
            mo.roof = ro;
            mo.set = set;
            try {
              auto v = classify_mixed_3q(e.rho, mo);
              std::string c;
              for (const auto& s : v.candidates) c += (c.empty() ? "" : ",") + s;
              return CheckOutcome{what, v.resolved() && v.candidates.front() == want, "candidates " + c};
            } catch (const Error& ex) {
              return CheckOutcome{what, false, ex.what()};
            }
          }};
}

CorpusCheck roof_vanishes(int column) {
  const std::string what = std::string("roof of ") + kColumnNames[static_cast<std::size_t>(column)] + " <= tol";
  return {what, [=](const CorpusEntry& e, const RoofOptions& ro) {
            const auto f = column_function(column, FunctionSet::Fts);
            auto c = membership_certificate(e.rho, f, ro);
            try {
              verify_certificate(e.rho, f, c.result);
            } catch (const ConsistencyError& ex) {
              return CheckOutcome{what, false, ex.what()};
            }
            return CheckOutcome{what, c.verdict == Membership::In, "value " + num(c.result.value)};
          }};
}

auto inv(int k) {
  return [k](const CorpusEntry& e) { return indicator_vector(*e.pure).values()[static_cast<std::size_t>(k)]; };
}

double vn_of(const StateVector& psi, std::vector<int> keep) { return von_neumann_entropy(density_spectrum(reduced_matrix(psi, std::move(keep)))); }

CorpusEntry pure_entry(std::string name, std::string note, StateVector psi) {
  CorpusEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  e.rho = DensityMatrix::pure(psi);
  e.pure = std::move(psi);
  return e;
}

CorpusEntry mixed_entry(std::string name, std::string note, DensityMatrix rho) {
  CorpusEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  e.rho = std::move(rho);
  return e;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;

  auto b = pure_entry("bell", "two-qubit maximally entangled state", bell_state());
  b.checks.push_back(near("concurrence 1", [](const CorpusEntry& e) { return pure_concurrence(e.pure->amp); }, 1.0, 1e-12));
  b.checks.push_back(finest_partition("12"));
  out.push_back(std::move(b));

  auto w = pure_entry("w", "three-qubit W state", w_state());
  w.checks.push_back(pure_class(PureClass::W));
  w.checks.push_back(near("t = 16/27", inv(8), 16.0 / 27.0, 1e-10));
  w.checks.push_back(near("tau2 = 0", inv(9), 0.0, 1e-12));
  w.checks.push_back(agrees_with_general());
  out.push_back(std::move(w));

  auto g = pure_entry("ghz", "three-qubit GHZ state", ghz_state());
  g.checks.push_back(pure_class(PureClass::GHZ));
  g.checks.push_back(near("t = 1", inv(8), 1.0, 1e-10));
  g.checks.push_back(near("tau2 = 1", inv(9), 1.0, 1e-10));
  for (int a = 0; a < 3; ++a) g.checks.push_back(near("s" + std::to_string(a + 1) + " = 1", inv(2 + a), 1.0, 1e-10));
  for (int a = 0; a < 3; ++a) g.checks.push_back(near("g" + std::to_string(a + 1) + " = 1/2", inv(5 + a), 0.5, 1e-10));
  g.checks.push_back(npt_pattern({false, false, false}));
  g.checks.push_back(agrees_with_general());
  out.push_back(std::move(g));

  const PureClass bis[3] = {PureClass::Bisep1, PureClass::Bisep2, PureClass::Bisep3};
  const char* splits[3] = {"1|23", "2|13", "3|12"};
  for (int a = 1; a <= 3; ++a) {
    auto e = pure_entry(std::string("bisep-") + splits[a - 1], "product of one qubit with a Bell pair", bisep_state(a));
    e.checks.push_back(pure_class(bis[a - 1]));
    e.checks.push_back(finest_partition(splits[a - 1]));
    e.checks.push_back(agrees_with_general());
    out.push_back(std::move(e));
  }

  auto p = pure_entry("product", "fully product three-qubit state", basis_state(kQ3, {0, 0, 0}));
  p.checks.push_back(pure_class(PureClass::FullyProduct));
  p.checks.push_back(npt_pattern({false, false, false}));
  p.checks.push_back(agrees_with_general());
  out.push_back(std::move(p));

  for (int a = 1; a <= 3; ++a) {
    const std::string cls = "C2.2." + std::to_string(a);
    auto e = mixed_entry("c22-" + std::to_string(a), "even mixture of two Bell pairs sharing party " + std::to_string(a), c22_mixture(a));
    std::array<bool, 3> pattern{};
    // Pairs containing a are entangled; the other pair is not.
    pattern[0] = a == 1 || a == 2;
    pattern[1] = a == 1 || a == 3;
    pattern[2] = a == 2 || a == 3;
    e.checks.push_back(npt_pattern(pattern));
    e.checks.push_back(roof_vanishes(3 + a));
    e.checks.push_back(mixed_class(cls, FunctionSet::Fts));
    e.checks.push_back(mixed_class(cls, FunctionSet::Mult));
    out.push_back(std::move(e));
  }

  auto c21 = mixed_entry("c21", "three Bell-pair terms, every pair reduction entangled", c21_mixture());
  c21.checks.push_back(npt_pattern({true, true, true}));
  c21.checks.push_back(roof_vanishes(7));
  c21.checks.push_back(mixed_class("C2.1", FunctionSet::Fts));
  out.push_back(std::move(c21));

  auto m = pure_entry("psi-m", "local maximum of t away from GHZ", psi_m_state());
  m.checks.push_back(near("t = (10 + 7 sqrt 7)/54", inv(8), (10 + 7 * std::sqrt(7.0)) / 54, 1e-9));
  m.checks.push_back(pure_class(PureClass::GHZ));
  out.push_back(std::move(m));

  auto nm = pure_entry("neumann-counterexample", "dims (4,2,2); additive von Neumann g1 vanishes on a genuinely entangled state", neumann_state());
  auto g1 = [](const CorpusEntry& e) { return (vn_of(*e.pure, {2}) + vn_of(*e.pure, {3}) - vn_of(*e.pure, {1})) / 2; };
  nm.checks.push_back(near("von Neumann g1 = 0", g1, 0.0, 1e-10));
  nm.checks.push_back(near("S(1) = ln 4", [](const CorpusEntry& e) { return vn_of(*e.pure, {1}); }, std::log(4.0), 1e-10));
  nm.checks.push_back(near("S(2) = ln 2", [](const CorpusEntry& e) { return vn_of(*e.pure, {2}); }, std::log(2.0), 1e-10));
  nm.checks.push_back(near("S(3) = ln 2", [](const CorpusEntry& e) { return vn_of(*e.pure, {3}); }, std::log(2.0), 1e-10));
  nm.checks.push_back(finest_partition("123"));
  nm.checks.push_back(above("Tsallis-2 g1 > 0", [](const CorpusEntry& e) {
    const auto F = EntropySpec::tsallis(2);
    return (f_K(*e.pure, {2}, F) + f_K(*e.pure, {3}, F) - f_K(*e.pure, {1}, F)) / 2;
  }, 0.1));
  out.push_back(std::move(nm));
  return out;
}

}  // namespace

StateVector bell_state() {
  const double h = 1 / std::sqrt(2.0);
  return superpose({2, 2}, {{h, {0, 0}}, {h, {1, 1}}});
}

StateVector w_state() {
  const double h = 1 / std::sqrt(3.0);
  return superpose(kQ3, {{h, {0, 0, 1}}, {h, {0, 1, 0}}, {h, {1, 0, 0}}});
}

StateVector ghz_state() {
  const double h = 1 / std::sqrt(2.0);
  return superpose(kQ3, {{h, {0, 0, 0}}, {h, {1, 1, 1}}});
}

StateVector bisep_state(int a) {
  if (a < 1 || a > 3) throw ArgumentError("bisep_state: party must be 1..3");
  return bell_on(a, 0);
}

StateVector psi_m_state() {
  const double s7 = std::sqrt(7.0);
  const double c0 = std::sqrt((5 - s7) / 6), c1 = std::sqrt((1 + s7) / 6) / 2;
  return superpose(kQ3, {{c0, {0, 0, 0}}, {-c1, {1, 0, 0}}, {c1, {1, 0, 1}}, {c1, {1, 1, 0}}, {c1, {1, 1, 1}}});
}

StateVector neumann_state() {
  return superpose({4, 2, 2}, {{0.5, {0, 0, 0}}, {0.5, {1, 0, 1}}, {0.5, {2, 1, 0}}, {0.5, {3, 1, 1}}});
}

DensityMatrix c22_mixture(int a) {
  if (a < 1 || a > 3) throw ArgumentError("c22_mixture: party must be 1..3");
  const int b = a % 3 + 1, c = b % 3 + 1;
  return DensityMatrix(kQ3, 0.5 * proj(bell_on(b, 0)) + 0.5 * proj(bell_on(c, 0)));
}

DensityMatrix c21_mixture() { return DensityMatrix(kQ3, 0.25 * proj(bell_on(2, 0)) + 0.25 * proj(bell_on(3, 0)) + 0.5 * proj(bell_on(1, 1))); }

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  std::string names;
  for (const auto& e : corpus()) names += (names.empty() ? "" : ", ") + e.name;
  throw ArgumentError("no corpus entry \"" + name + "\"; known: " + names);
}

std::vector<CheckOutcome> verify_entry(const CorpusEntry& e, const RoofOptions& opt) {
  std::vector<CheckOutcome> out;
  for (const auto& c : e.checks) out.push_back(c.run(e, opt));
  return out;
}

json entry_json(const CorpusEntry& e) {
  json j = e.pure ? to_json(*e.pure) : to_json(e.rho);
  j["name"] = e.name;
  j["note"] = e.note;
  return j;
}

}  // namespace partsep
