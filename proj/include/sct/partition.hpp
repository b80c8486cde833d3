#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sct/errors.hpp"

namespace sct {

// A set partition of the residues {0, ..., n-1} in canonical form: every
// block sorted ascending, blocks ordered by their minimum element, block ids
// equal to that order.  Blocks are kept both as sorted lists and as n-bit
// masks (n <= 64 at desk scale).
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;           // residue -> block id
  std::vector<std::uint64_t> masks;    // block id -> bit mask

  int block_count() const { return static_cast<int>(blocks.size()); }

  bool operator==(const Partition& other) const {
    return n == other.n && blocks == other.blocks;
  }
  bool operator!=(const Partition& other) const { return !(*this == other); }

  std::string to_string() const {
    std::string s;
    for (const auto& b : blocks) {
      s += '{';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(b[i]);
      }
      s += '}';
    }
    return s;
  }
};

// Validates that `raw` covers {0..n-1} exactly once and rebuilds it in
// canonical form.
inline Partition canonical_partition(int n,
                                     std::vector<std::vector<int>> raw) {
  if (n < 1) throw MalformedPartitionError("group order must be positive");
  if (n > 64)
    throw ResourceLimitError("group order above the 64-element desk scale", 0);
  std::vector<int> seen(n, 0);
  for (auto& b : raw) {
    if (b.empty()) throw MalformedPartitionError("empty block");
    for (int g : b) {
      if (g < 0 || g >= n)
        throw MalformedPartitionError("residue " + std::to_string(g) +
                                      " out of range for n=" +
                                      std::to_string(n));
      if (seen[g]++)
        throw MalformedPartitionError("residue " + std::to_string(g) +
                                      " appears in two blocks");
    }
    std::sort(b.begin(), b.end());
  }
  for (int g = 0; g < n; ++g)
    if (!seen[g])
      throw MalformedPartitionError("residue " + std::to_string(g) +
                                    " missing from partition");
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  Partition p;
  p.n = n;
  p.blocks = std::move(raw);
  p.block_of.assign(n, -1);
  p.masks.assign(p.blocks.size(), 0);
  for (int i = 0; i < p.block_count(); ++i)
    for (int g : p.blocks[i]) {
      p.block_of[g] = i;
      p.masks[i] |= std::uint64_t{1} << g;
    }
  return p;
}

inline Partition min_partition(int n) {
  std::vector<std::vector<int>> blocks;
  for (int g = 0; g < n; ++g) blocks.push_back({g});
  return canonical_partition(n, std::move(blocks));
}

inline Partition max_partition(int n) {
  if (n == 1) return min_partition(1);
  std::vector<int> rest;
  for (int g = 1; g < n; ++g) rest.push_back(g);
  return canonical_partition(n, {{0}, rest});
}

// True iff every block of p is contained in a block of q.
inline bool refines(const Partition& p, const Partition& q) {
  if (p.n != q.n)
    throw IncompatibleGroupsError("refines: partitions of different groups");
  for (int i = 0; i < p.block_count(); ++i) {
    int target = q.block_of[p.blocks[i][0]];
    if ((p.masks[i] & ~q.masks[target]) != 0) return false;
  }
  return true;
}

// Finest common coarsening: connected components of the block-overlap graph.
inline Partition partition_join(const Partition& p, const Partition& q) {
  if (p.n != q.n)
    throw IncompatibleGroupsError("join: partitions of different groups");
  const int n = p.n;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& b : p.blocks)
    for (std::size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  for (const auto& b : q.blocks)
    for (std::size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  std::vector<std::vector<int>> groups(n);
  for (int g = 0; g < n; ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<int>> blocks;
  for (auto& grp : groups)
    if (!grp.empty()) blocks.push_back(std::move(grp));
  return canonical_partition(n, std::move(blocks));
}

// Coarsest common refinement (pairwise block intersections).  This is the
// set-partition meet; it is NOT the meet of the theory lattice and need not
// be a theory even when both inputs are.
inline Partition partition_meet(const Partition& p, const Partition& q) {
  if (p.n != q.n)
    throw IncompatibleGroupsError("meet: partitions of different groups");
  std::vector<std::vector<int>> cells(
      static_cast<std::size_t>(p.block_count()) * q.block_count());
  for (int g = 0; g < p.n; ++g)
    cells[static_cast<std::size_t>(p.block_of[g]) * q.block_count() +
          q.block_of[g]]
        .push_back(g);
  std::vector<std::vector<int>> blocks;
  for (auto& c : cells)
    if (!c.empty()) blocks.push_back(std::move(c));
  return canonical_partition(p.n, std::move(blocks));
}

// Ordering used for theory sets: block count descending (so the partition
// into singletons comes first and the two-block partition last), then
// lexicographic on the block lists.
inline bool theory_set_less(const Partition& a, const Partition& b) {
  if (a.block_count() != b.block_count())
    return a.block_count() > b.block_count();
  return a.blocks < b.blocks;
}

}  // namespace sct
