#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace partsep {

/// A set partition of the subsystem labels {1..n}, kept in canonical form:
/// every block sorted ascending, blocks sorted by their smallest element.
///
/// Partitions are ordered totally by block count (finer first) and then
/// lexicographically by blocks. This is a linear extension of refinement:
/// if beta strictly refines alpha, beta sorts before alpha.
class Partition {
 public:
  using Block = std::vector<int>;

  Partition() = default;

  /// Validates and canonicalizes. Throws ValidationError unless the blocks
  /// are non-empty, pairwise disjoint and cover exactly {1..n}.
  Partition(int n, std::vector<Block> blocks);

  /// The finest partition 1|2|...|n.
  static Partition finest(int n);
  /// The trivial partition 12...n.
  static Partition trivial(int n);

  /// Parses "1|23", "3|12", "123". Blocks are digit runs, so n <= 9.
  /// When n is 0 it is inferred from the largest label.
  static Partition parse(std::string_view text, int n = 0);

  int n() const { return n_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int r) const { return blocks_[static_cast<std::size_t>(r)]; }

  /// Bitmask of labels in block r (bit l-1 for label l).
  unsigned block_mask(int r) const;
  /// Index of the block containing label l (1-based label).
  int block_of(int label) const;

  bool is_finest() const { return size() == n_; }
  bool is_trivial() const { return size() == 1; }

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Canonical form of a raw block list; same checks as the constructor.
Partition canonicalize(int n, std::vector<Partition::Block> blocks);

/// Every set partition of {1..n} in canonical order; 1 <= n <= 8.
std::vector<Partition> all_partitions(int n);

/// beta ⪯ alpha: every block of beta lies inside some block of alpha.
bool refines(const Partition& beta, const Partition& alpha);

/// Bell numbers B(0)..B(n) from the Bell triangle.
std::vector<unsigned long long> bell_numbers(int n);

inline constexpr int kMaxPartitionN = 8;

}  // namespace partsep
