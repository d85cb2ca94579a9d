#include "partsep/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "partsep/errors.hpp"

namespace partsep {

namespace {

// n y s1 s2 s3 g1 g2 g3 t tau2
constexpr std::array<std::pair<PureClass, std::array<int, 10>>, 7> kPureRows = {{
    {PureClass::Null, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {PureClass::FullyProduct, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {PureClass::Bisep1, {1, 1, 0, 1, 1, 1, 0, 0, 0, 0}},
    {PureClass::Bisep2, {1, 1, 1, 0, 1, 0, 1, 0, 0, 0}},
    {PureClass::Bisep3, {1, 1, 1, 1, 0, 0, 0, 1, 0, 0}},
    {PureClass::W, {1, 1, 1, 1, 1, 1, 1, 1, 1, 0}},
    {PureClass::GHZ, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
}};

std::string raw_vector(const InvariantVector& v) {
  std::ostringstream os;
  os.precision(17);
  const auto vals = v.values();
  for (std::size_t k = 0; k < vals.size(); ++k) os << (k ? ", " : "[") << InvariantVector::names[k] << "=" << vals[k];
  os << "]";
  return os.str();
}

}  // namespace

std::string pure_class_name(PureClass c) {
  switch (c) {
    case PureClass::Null: return "null";
    case PureClass::FullyProduct: return "1|2|3";
    case PureClass::Bisep1: return "1|23";
    case PureClass::Bisep2: return "2|13";
    case PureClass::Bisep3: return "3|12";
    case PureClass::W: return "W";
    case PureClass::GHZ: return "GHZ";
  }
  return "?";
}

PureClassVerdict classify_pure_3q(const StateVector& psi, double threshold) {
  require_three_qubits(psi);
  if (!(threshold >= 0)) throw ArgumentError("classify_pure_3q: threshold must be >= 0");
  PureClassVerdict v;
  v.values = indicator_vector(psi);
  // Vanishing is judged on the unit vector so the threshold does not depend on the norm.
  const double nn = psi.norm_sq();
  std::array<double, 10> unit{};
  if (nn > threshold) unit = indicator_vector(psi.normalized()).values();
  unit[0] = nn;
  for (std::size_t k = 0; k < 10; ++k) v.vanishing[k] = unit[k] <= threshold;
  for (const auto& [cls, row] : kPureRows) {
    bool ok = true;
    for (std::size_t k = 0; k < 10 && ok; ++k) ok = v.vanishing[k] == (row[k] == 0);
    if (!ok) continue;
    v.cls = cls;
    switch (cls) {
      case PureClass::Null: break;
      case PureClass::FullyProduct: v.partition = Partition::finest(3); break;
      case PureClass::Bisep1: v.partition = Partition::parse("1|23"); break;
      case PureClass::Bisep2: v.partition = Partition::parse("2|13"); break;
      case PureClass::Bisep3: v.partition = Partition::parse("3|12"); break;
      default: v.partition = Partition::trivial(3);
    }
    return v;
  }
  throw ClassificationError("classify_pure_3q: vanishing pattern matches no class at threshold " + std::to_string(threshold) + ": " + raw_vector(v.values));
}

json to_json(const PureClassVerdict& v) {
  json j;
  j["class"] = pure_class_name(v.cls);
  j["partition"] = v.partition ? json(v.partition->str()) : json(nullptr);
  json vals, pat;
  const auto arr = v.values.values();
  for (std::size_t k = 0; k < 10; ++k) {
    vals[InvariantVector::names[k]] = arr[k];
    pat[InvariantVector::names[k]] = v.vanishing[k] ? "=0" : ">0";
  }
  j["values"] = std::move(vals);
  j["pattern"] = std::move(pat);
  return j;
}

int column_index(const std::string& name) {
  for (int k = 0; k < kColumns; ++k)
    if (name == kColumnNames[static_cast<std::size_t>(k)]) return k;
  throw ArgumentError("unknown function \"" + name + "\"; expected one of y, s1..s3, g1..g3, t, tau2");
}

FunctionSet parse_function_set(const std::string& s) {
  if (s == "fts") return FunctionSet::Fts;
  if (s == "mult") return FunctionSet::Mult;
  throw ArgumentError("unknown function set \"" + s + "\"; expected fts or mult");
}

namespace {

double linear_entropy(const StateVector& psi, int a) {
  // Normalized, on the smaller side of a|rest.
  std::vector<int> keep;
  int da = psi.dims[static_cast<std::size_t>(a - 1)], rest = 1;
  for (int b = 1; b <= psi.n(); ++b)
    if (b != a) rest *= psi.dims[static_cast<std::size_t>(b - 1)];
  if (da <= rest) keep = {a};
  else
    for (int b = 1; b <= psi.n(); ++b)
      if (b != a) keep.push_back(b);
  return EntropySpec::tsallis(2).normalize().on_matrix(reduced_matrix(psi, keep));
}

}  // namespace

PureFunction column_function(int column, FunctionSet set) {
  if (column < 0 || column >= kColumns) throw ArgumentError("column out of range");
  if (set == FunctionSet::Fts || column == 8) {
    return [column](const StateVector& psi) {
      require_three_qubits(psi);
      return indicator_vector(psi).values()[static_cast<std::size_t>(column + 1)];
    };
  }
  return [column](const StateVector& psi) {
    if (psi.n() != 3) throw DimensionError("tripartite function applied to " + std::to_string(psi.n()) + " parties");
    const double l[3] = {linear_entropy(psi, 1), linear_entropy(psi, 2), linear_entropy(psi, 3)};
    switch (column) {
      case 0: return (l[0] + l[1] + l[2]) / 3;
      case 1: case 2: case 3: return l[column - 1];
      case 4: return l[1] * l[2];
      case 5: return l[0] * l[2];
      case 6: return l[0] * l[1];
      default: return l[0] * l[1] * l[2];
    }
  };
}

std::string flag_name(Flag f) {
  switch (f) {
    case Flag::Zero: return "ZERO";
    case Flag::PositiveUnknown: return "POSITIVE_UNKNOWN";
    case Flag::Excluded: return "EXCLUDED";
  }
  return "?";
}

std::array<bool, kColumns> NptInfo::excludes() const {
  std::array<bool, kColumns> ex{};
  // pair index: 0 = 12, 1 = 13, 2 = 23; the third party of each pair
  constexpr int other[3] = {3, 2, 1};
  constexpr int members[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (int p = 0; p < 3; ++p) {
    if (!entangled[static_cast<std::size_t>(p)]) continue;
    ex[0] = true;
    // rho_ab entangled rules out a|bc and b|ac ...
    for (int a : members[p]) ex[static_cast<std::size_t>(a)] = true;
    // ... and the union b|ac or a|bc, which is the g column of the third party.
    ex[static_cast<std::size_t>(3 + other[p])] = true;
  }
  return ex;
}

NptInfo npt_side_information(const DensityMatrix& rho, double floor) {
  if (rho.n() != 3) throw DimensionError("npt_side_information needs three parties");
  NptInfo info;
  const std::vector<std::vector<int>> pairs = {{1, 2}, {1, 3}, {2, 3}};
  for (std::size_t p = 0; p < 3; ++p) {
    auto red = partial_trace(rho, pairs[p]);
    info.min_eig[p] = min_pt_eigenvalue(red, 1);
    info.entangled[p] = info.min_eig[p] < floor;
  }
  return info;
}

const std::vector<ClassRow>& class_rows(bool with_w) {
  static const auto build = [](bool w) {
    std::vector<ClassRow> rows;
    auto add = [&](std::string name, std::array<int, kColumns> pos) { rows.push_back({std::move(name), pos}); };
    // y s1 s2 s3 g1 g2 g3 t tau2
    add("C3", {0, 0, 0, 0, 0, 0, 0, 0, 0});
    add("C2.8", {1, 0, 0, 0, 0, 0, 0, 0, 0});
    auto per_party = [&](const std::string& stem, auto make) {
      for (int a = 1; a <= 3; ++a) add(stem + "." + std::to_string(a), make(a));
    };
    auto s_only = [](std::initializer_list<int> parties) {
      std::array<int, kColumns> r{};
      r[0] = 1;
      for (int p : parties) r[static_cast<std::size_t>(p)] = 1;
      return r;
    };
    auto others = [](int a) { return std::pair<int, int>{a % 3 + 1, (a + 1) % 3 + 1}; };
    per_party("C2.7", [&](int a) { return s_only({a}); });
    per_party("C2.6", [&](int a) { auto [b, c] = others(a); return s_only({b, c}); });
    per_party("C2.5", [&](int a) {
      auto [b, c] = others(a);
      auto r = s_only({b, c});
      r[static_cast<std::size_t>(3 + a)] = 1;
      return r;
    });
    add("C2.4", s_only({1, 2, 3}));
    per_party("C2.3", [&](int a) {
      auto r = s_only({1, 2, 3});
      r[static_cast<std::size_t>(3 + a)] = 1;
      return r;
    });
    per_party("C2.2", [&](int a) {
      auto [b, c] = others(a);
      auto r = s_only({1, 2, 3});
      r[static_cast<std::size_t>(3 + b)] = r[static_cast<std::size_t>(3 + c)] = 1;
      return r;
    });
    add("C2.1", {1, 1, 1, 1, 1, 1, 1, 0, 0});
    if (w) {
      add("CW", {1, 1, 1, 1, 1, 1, 1, 1, 0});
      add("CGHZ", {1, 1, 1, 1, 1, 1, 1, 1, 1});
    } else {
      add("C1", {1, 1, 1, 1, 1, 1, 1, 1, 0});
    }
    return rows;
  };
  static const std::vector<ClassRow> full = build(true), ps = build(false);
  return with_w ? full : ps;
}

namespace {

// Direct subsets of each column in the inclusion hierarchy.
const std::array<std::vector<int>, kColumns>& subsets() {
  static const std::array<std::vector<int>, kColumns> s = {{
      {},         // y
      {0}, {0}, {0},  // s_a contains full separability
      {2, 3}, {1, 3}, {1, 2},  // g_a contains b|ac and c|ab
      {4, 5, 6},  // 2-sep
      {7},        // W
  }};
  return s;
}

int default_m(const DensityMatrix& rho) {
  const int r = spectral_decomposition(rho.mat).rank, d2 = rho.dim() * rho.dim();
  return std::min(d2, std::max(2 * r, r + 2));
}

}  // namespace

MixedClassVerdict classify_mixed_3q(const DensityMatrix& rho, const MixedOptions& opt) {
  if (rho.n() != 3) throw DimensionError("classify_mixed_3q needs three parties");
  const bool qubits = rho.dims == Dims{2, 2, 2};
  if (opt.set == FunctionSet::Fts && !qubits) throw DimensionError("the fts function set needs three qubits; use mult");
  opt.roof.validate();

  MixedClassVerdict v;
  v.with_w = qubits;
  v.flags.fill(Flag::PositiveUnknown);
  if (opt.side_information) v.npt = npt_side_information(rho, opt.ppt_floor);
  const auto excluded = opt.side_information ? v.npt.excludes() : std::array<bool, kColumns>{};
  const int columns = qubits ? kColumns : kColumns - 1;

  for (int k = 0; k < columns; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const PureFunction f = column_function(k, opt.set);
    const RoofResult* cert = nullptr;
    for (int j : subsets()[ks])
      if (v.flags[static_cast<std::size_t>(j)] == Flag::Zero) {
        cert = &*v.roofs[static_cast<std::size_t>(j)];
        break;
      }
    if (cert) {
      if (excluded[ks]) throw ConsistencyError(std::string("column ") + kColumnNames[ks] + " has a certified zero below it but an NPT reduction rules it out");
      // The subset's decomposition already lies in this column's zero set.
      RoofResult r;
      r.decomposition = cert->decomposition;
      r.value = r.decomposition.average(f);
      r.converged = true;
      r.m = r.decomposition.m();
      r.seed = opt.roof.seed;
      if (r.value > opt.roof.tol) {
        RoofOptions o = opt.roof;
        o.warm_start = isometry_of(rho, cert->decomposition);
        o.m = std::max<int>(o.m > 0 ? o.m : default_m(rho), static_cast<int>(o.warm_start.rows()));
        r = membership_certificate(rho, f, o).result;
      }
      if (r.value > opt.roof.tol)
        throw ConsistencyError(std::string("column ") + kColumnNames[ks] + " stays at " + std::to_string(r.value) + " although a subset certified zero");
      v.flags[ks] = Flag::Zero;
      v.roofs[ks] = std::move(r);
      continue;
    }
    if (excluded[ks]) {
      v.flags[ks] = Flag::Excluded;
      continue;
    }
    auto c = membership_certificate(rho, f, opt.roof);
    v.flags[ks] = c.verdict == Membership::In ? Flag::Zero : Flag::PositiveUnknown;
    v.roofs[ks] = std::move(c.result);
  }

  for (const auto& row : class_rows(qubits)) {
    bool ok = true;
    for (int k = 0; k < columns && ok; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      if (v.flags[ks] == Flag::Zero) ok = row.positive[ks] == 0;
      else if (v.flags[ks] == Flag::Excluded) ok = row.positive[ks] == 1;
    }
    if (ok) v.candidates.push_back(row.name);
  }
  if (v.candidates.empty()) throw ConsistencyError("no class agrees with the certified flags");
  return v;
}

json to_json(const NptInfo& n) {
  json j;
  const char* names[3] = {"12", "13", "23"};
  for (std::size_t p = 0; p < 3; ++p) j[names[p]] = {{"min_pt_eigenvalue", n.min_eig[p]}, {"entangled", n.entangled[p]}};
  return j;
}

json to_json(const MixedClassVerdict& v) {
  json j;
  j["class"] = v.class_name();
  j["candidates"] = v.candidates;
  json flags, values;
  const int columns = v.with_w ? kColumns : kColumns - 1;
  for (int k = 0; k < columns; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    flags[kColumnNames[ks]] = flag_name(v.flags[ks]);
    values[kColumnNames[ks]] = v.roofs[ks] ? json(v.roofs[ks]->value) : json(nullptr);
  }
  j["flags"] = std::move(flags);
  j["roof_values"] = std::move(values);
  j["npt"] = to_json(v.npt);
  return j;
}

}  // namespace partsep
