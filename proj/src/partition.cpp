#include "partsep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "partsep/errors.hpp"

namespace partsep {

Partition::Partition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw ValidationError("partition: n must be positive");
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw ValidationError("partition: empty block");
    for (int l : b) {
      if (l < 1 || l > n) throw ValidationError("partition: label " + std::to_string(l) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(l)]++) throw ValidationError("partition: label " + std::to_string(l) + " appears twice");
    }
    std::sort(b.begin(), b.end());
  }
  for (int l = 1; l <= n; ++l)
    if (!seen[static_cast<std::size_t>(l)]) throw ValidationError("partition: label " + std::to_string(l) + " missing");
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

Partition Partition::finest(int n) {
  std::vector<Block> blocks;
  for (int l = 1; l <= n; ++l) blocks.push_back({l});
  return Partition(n, std::move(blocks));
}

Partition Partition::trivial(int n) {
  Block b(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) b[static_cast<std::size_t>(l - 1)] = l;
  return Partition(n, {b});
}

Partition Partition::parse(std::string_view text, int n) {
  std::vector<Block> blocks(1);
  int max_label = 0;
  for (char c : text) {
    if (c == '|') {
      blocks.emplace_back();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int l = c - '0';
      blocks.back().push_back(l);
      max_label = std::max(max_label, l);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ValidationError("partition: unexpected character '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
    }
  }
  return Partition(n > 0 ? n : max_label, std::move(blocks));
}

unsigned Partition::block_mask(int r) const {
  unsigned m = 0;
  for (int l : block(r)) m |= 1u << (l - 1);
  return m;
}

int Partition::block_of(int label) const {
  for (int r = 0; r < size(); ++r)
    if (std::binary_search(block(r).begin(), block(r).end(), label)) return r;
  throw ArgumentError("partition: label " + std::to_string(label) + " not present");
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t r = 0; r < blocks_.size(); ++r) {
    if (r) s += '|';
    for (int l : blocks_[r]) s += std::to_string(l);
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = b.blocks_.size() <=> a.blocks_.size(); c != 0) return c;
  return a.blocks_ <=> b.blocks_;
}

Partition canonicalize(int n, std::vector<Partition::Block> blocks) { return Partition(n, std::move(blocks)); }

std::vector<Partition> all_partitions(int n) {
  if (n < 1 || n > kMaxPartitionN)
    throw BoundsError("all_partitions: n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxPartitionN));
  // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<Partition> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      std::vector<Partition::Block> blocks(static_cast<std::size_t>(maxv) + 1);
      for (int l = 0; l < n; ++l) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(l)])].push_back(l + 1);
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const Partition& beta, const Partition& alpha) {
  if (beta.n() != alpha.n())
    throw ArgumentError("refines: partitions over " + std::to_string(beta.n()) + " and " + std::to_string(alpha.n()) + " labels");
  for (const auto& b : beta.blocks()) {
    int r = alpha.block_of(b.front());
    const auto& target = alpha.block(r);
    if (!std::includes(target.begin(), target.end(), b.begin(), b.end())) return false;
  }
  return true;
}

std::vector<unsigned long long> bell_numbers(int n) {
  std::vector<unsigned long long> bell{1};
  std::vector<unsigned long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

}  // namespace partsep
