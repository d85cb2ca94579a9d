#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "partsep/convex_roof.hpp"
#include "partsep/invariants3q.hpp"

namespace partsep {

// ---- pure states ----

enum class PureClass { Null, FullyProduct, Bisep1, Bisep2, Bisep3, W, GHZ };

std::string pure_class_name(PureClass c);

struct PureClassVerdict {
  PureClass cls = PureClass::Null;
  std::optional<Partition> partition;  // finest split; none for the zero vector
  InvariantVector values;
  std::array<bool, 10> vanishing{};
};

// Matches the vanishing pattern of (n, y, s1..3, g1..3, t, tau2) against the
// seven pure classes; a pattern matching none throws ClassificationError.
PureClassVerdict classify_pure_3q(const StateVector& psi, double threshold = 1e-7);

json to_json(const PureClassVerdict& v);

// ---- mixed states ----

// Columns of the mixed verdict, each the roof of one pure function:
// y, s1, s2, s3, g1, g2, g3, t, tau2. The s_a column vanishes on D^{a|bc},
// g_a on D^{b|ac or c|ab}, y on full separability, t on 2-sep, tau2 on W.
inline constexpr int kColumns = 9;
inline constexpr std::array<const char*, kColumns> kColumnNames = {"y", "s1", "s2", "s3", "g1", "g2", "g3", "t", "tau2"};
int column_index(const std::string& name);

// Fts: the covariant-based functions (three qubits only).
// Mult: products of normalized linear entropies; works for any tripartite dims.
enum class FunctionSet { Fts, Mult };
FunctionSet parse_function_set(const std::string& s);

// Pure-state function for a column, for unit vectors of the given dims.
PureFunction column_function(int column, FunctionSet set);

enum class Flag { Zero, PositiveUnknown, Excluded };
std::string flag_name(Flag f);

// Negative certificates from partial transposes of the two-party reductions.
struct NptInfo {
  std::array<double, 3> min_eig{};  // pairs 12, 13, 23
  std::array<bool, 3> entangled{};
  // Columns whose zero set the entangled pairs rule out.
  std::array<bool, kColumns> excludes() const;
};

NptInfo npt_side_information(const DensityMatrix& rho, double floor = -1e-10);

struct ClassRow {
  std::string name;
  std::array<int, kColumns> positive;  // 1 = the roof is > 0 on this class
};

// Table of the 21 three-qubit classes (20 when the tau2 column is dropped).
const std::vector<ClassRow>& class_rows(bool with_w = true);

struct MixedOptions {
  RoofOptions roof;
  FunctionSet set = FunctionSet::Fts;
  bool side_information = true;
  double ppt_floor = -1e-10;
};

struct MixedClassVerdict {
  bool with_w = true;
  std::array<Flag, kColumns> flags{};
  std::array<std::optional<RoofResult>, kColumns> roofs;
  NptInfo npt;
  std::vector<std::string> candidates;

  bool resolved() const { return candidates.size() == 1; }
  std::string class_name() const { return resolved() ? candidates.front() : "AMBIGUOUS"; }
};

// Each column is a membership certificate; a zero is reused as the warm start
// for every superset, and NPT reductions supply certified positives. Classes
// whose rows disagree with a certified entry are discarded.
MixedClassVerdict classify_mixed_3q(const DensityMatrix& rho, const MixedOptions& opt = {});

json to_json(const NptInfo& n);
json to_json(const MixedClassVerdict& v);

}  // namespace partsep
