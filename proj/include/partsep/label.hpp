#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "partsep/partition.hpp"

namespace partsep {

/// A non-empty set of partitions over the same n, kept sorted and unique.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<Partition> parts);
  Label(std::initializer_list<Partition> parts) : Label(std::vector<Partition>(parts)) {}

  /// "{1|23, 2|13}" or "1|23,2|13"; braces optional.
  static Label parse(std::string_view text, int n = 0);

  int n() const { return parts_.front().n(); }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<Partition>& partitions() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  std::string str() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label& a, const Label& b) {
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Partition> parts_;
};

/// Label whose members are pairwise incomparable. Construction validates.
class ProperLabel : public Label {
 public:
  ProperLabel() = default;
  explicit ProperLabel(Label l);
  ProperLabel(std::initializer_list<Partition> parts) : ProperLabel(Label(parts)) {}
};

/// Bipartition of the proper labels of one n. A class is the set of states
/// lying in every included subset and in no excluded one.
struct ClassLabel {
  std::vector<ProperLabel> included;
  std::vector<ProperLabel> excluded;
};

/// beta ⪯ alpha lifted to labels: each member of beta refines some member of alpha.
bool label_leq(const Label& beta, const Label& alpha);
bool is_proper(const Label& label);
/// Keep only the ⪯-maximal members.
ProperLabel properize(const Label& label);

/// Visits every non-empty antichain of a finite poset given as an adjacency
/// "comparable" relation over indices 0..N-1, each once, as an increasing
/// index tuple. Returning false from the visitor stops the walk.
/// Returns the number of antichains visited.
std::uint64_t for_each_antichain(const std::vector<std::vector<bool>>& comparable,
                                 const std::function<bool(const std::vector<int>&)>& visit);

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Streams the proper labels of {1..n} in tuple-extension order; 1 <= n <= 6.
std::uint64_t for_each_proper_label(int n, const std::function<bool(const ProperLabel&)>& visit);

/// All proper labels, materialized. Throws LimitError past `cap` results.
std::vector<ProperLabel> enumerate_proper_labels(int n, std::uint64_t cap = kDefaultEnumerationCap);

/// True iff some included label ⪯ some excluded label.
bool class_empty_by_construction(const ClassLabel& cl);

/// Proper-label poset of one n, optionally with the three-qubit W node
/// between the union of bipartitions and the trivial partition.
struct LabelPoset {
  int n = 0;
  bool with_w = false;
  std::vector<ProperLabel> labels;  // W node, if present, is the last entry
  std::vector<std::vector<bool>> leq;  // leq[i][j]: node i ⪯ node j

  int size() const { return static_cast<int>(labels.size()) + (with_w ? 1 : 0); }
  int w_index() const { return with_w ? static_cast<int>(labels.size()) : -1; }
  std::string node_name(int i) const;
  /// Covering pairs (i, j): i ⋖ j.
  std::vector<std::pair<int, int>> covers() const;
};

LabelPoset label_poset(int n, bool with_w = false, std::uint64_t cap = kDefaultEnumerationCap);

/// A class in poset-node form: included nodes form a non-empty up-set.
struct NodeClass {
  std::vector<int> included;
  std::vector<int> excluded;
};

/// Classes not empty by construction; 1 <= n <= 4 (n=4 hits `cap` in practice).
/// with_w requires n == 3.
std::vector<NodeClass> enumerate_node_classes(const LabelPoset& poset, std::uint64_t cap = kDefaultEnumerationCap);
std::vector<ClassLabel> enumerate_ps_classes(int n, std::uint64_t cap = kDefaultEnumerationCap);

std::string lattice_json(const LabelPoset& poset, bool with_classes, std::uint64_t cap = kDefaultEnumerationCap);
std::string lattice_dot(const LabelPoset& poset);
std::string lattice_text(const LabelPoset& poset, bool with_classes, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace partsep
