#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sct/cyclic.hpp"
#include "sct/cyclotomic.hpp"
#include "sct/errors.hpp"
#include "sct/partition.hpp"

namespace sct {

// Products of block sums expanded back in the block-sum basis:
// table[i][j][k] is the (constant) convolution count of block k in the
// product of blocks i and j.
struct StructureConstants {
  int n = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> table;
};

struct Rejection {
  enum class Reason { zero_block_not_singleton, nonconstant_product };
  Reason reason = Reason::nonconstant_product;
  int block_i = -1;  // offending pair
  int block_j = -1;
  int block_k = -1;  // block on which the count is not constant
  int element = -1;  // first element of block_k disagreeing with its head
  std::int64_t expected = 0;
  std::int64_t got = 0;

  std::string to_string() const {
    if (reason == Reason::zero_block_not_singleton)
      return "block of 0 is not a singleton";
    return "product of blocks " + std::to_string(block_i) + " and " +
           std::to_string(block_j) + " is not constant on block " +
           std::to_string(block_k) + ": count " + std::to_string(got) +
           " at element " + std::to_string(element) + ", expected " +
           std::to_string(expected);
  }
};

using StructureResult = std::variant<StructureConstants, Rejection>;

namespace detail {

// Convolution counts of one block pair: c[g] = #{(a,b) : a + b = g mod n}.
inline std::vector<std::int64_t> pair_counts(const Partition& p, int i,
                                             int j) {
  std::vector<std::int64_t> c(p.n, 0);
  for (int a : p.blocks[i])
    for (int b : p.blocks[j]) ++c[(a + b) % p.n];
  return c;
}

// Pairs ordered by ascending cost |T_i|*|T_j|, tie-broken by (i, j), so that
// rejection witnesses come from the cheapest failing product.
inline std::vector<std::pair<int, int>> pair_scan_order(const Partition& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p.block_count(); ++i)
    for (int j = i; j < p.block_count(); ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const auto& a, const auto& b) {
                     auto cost = [&](const std::pair<int, int>& pr) {
                       return p.blocks[pr.first].size() *
                              p.blocks[pr.second].size();
                     };
                     return cost(a) < cost(b);
                   });
  return pairs;
}

}  // namespace detail

// Superclass-sum closure test: accepts iff every product of two block sums
// expands with counts constant on every block.  Requires {0} to be a
// singleton block.
inline StructureResult structure_constants(const Partition& p) {
  if (p.blocks[p.block_of[0]].size() != 1) {
    Rejection r;
    r.reason = Rejection::Reason::zero_block_not_singleton;
    return r;
  }
  const int B = p.block_count();
  StructureConstants sc;
  sc.n = p.n;
  sc.table.assign(B, std::vector<std::vector<std::int64_t>>(B));
  for (const auto& [i, j] : detail::pair_scan_order(p)) {
    auto c = detail::pair_counts(p, i, j);
    std::vector<std::int64_t> row(B);
    for (int k = 0; k < B; ++k) {
      std::int64_t head = c[p.blocks[k][0]];
      for (int g : p.blocks[k])
        if (c[g] != head) {
          Rejection r;
          r.reason = Rejection::Reason::nonconstant_product;
          r.block_i = i;
          r.block_j = j;
          r.block_k = k;
          r.element = g;
          r.expected = head;
          r.got = c[g];
          return r;
        }
      row[k] = head;
    }
    sc.table[i][j] = row;
    sc.table[j][i] = std::move(row);
  }
  // Counting identity: each product distributes |T_i|*|T_j| pairs.
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j) {
      std::int64_t total = 0;
      for (int k = 0; k < B; ++k)
        total += sc.table[i][j][k] *
                 static_cast<std::int64_t>(p.blocks[k].size());
      if (total != static_cast<std::int64_t>(p.blocks[i].size()) *
                       static_cast<std::int64_t>(p.blocks[j].size()))
        throw InternalInconsistencyError("structure constant row sum broken");
    }
  return sc;
}

// Groups the characters chi_a (a = 0..n-1) by their exact value pattern over
// the blocks: a ~ b iff sum over every block T of zeta^{a g} equals the sum
// at b.  For a valid theory this is the dual side and has exactly as many
// classes as there are blocks.
inline Partition dual_pattern_classes(const Partition& p,
                                      const CyclotomicContext& ctx) {
  const int n = p.n;
  std::vector<std::vector<CyclotomicInt>> pattern(n);
  for (int a = 0; a < n; ++a) {
    pattern[a].reserve(p.blocks.size());
    for (const auto& block : p.blocks) {
      std::vector<int> exps;
      exps.reserve(block.size());
      for (int g : block) exps.push_back(a * g % n);
      pattern[a].push_back(ctx.root_sum(exps));
    }
  }
  std::map<std::vector<CyclotomicInt>, std::vector<int>> classes;
  for (int a = 0; a < n; ++a) classes[pattern[a]].push_back(a);
  std::vector<std::vector<int>> blocks;
  for (auto& [key, members] : classes) blocks.push_back(std::move(members));
  return canonical_partition(n, std::move(blocks));
}

inline Partition dual_pattern_classes(const Partition& p) {
  CyclotomicContext ctx(p.n);
  return dual_pattern_classes(p, ctx);
}

// A validated supercharacter theory of Z_n: the superclass partition, the
// dual partition of character indices, and the table of supercharacter
// values (rows: dual blocks X, columns: superclasses T, entry: the common
// value of sum over a in X of zeta^{a g} for g in T).
struct SCTheory {
  Partition superclasses;
  Partition dual;
  std::vector<std::vector<CyclotomicInt>> table;

  int n() const { return superclasses.n; }
  int size() const { return superclasses.block_count(); }

  bool operator==(const SCTheory& other) const {
    return superclasses == other.superclasses;
  }
  bool operator!=(const SCTheory& other) const { return !(*this == other); }
};

using ValidationResult = std::variant<SCTheory, Rejection>;

inline ValidationResult validate(const Partition& p) {
  auto sr = structure_constants(p);
  if (std::holds_alternative<Rejection>(sr))
    return std::get<Rejection>(sr);
  CyclotomicContext ctx(p.n);
  SCTheory t;
  t.superclasses = p;
  t.dual = dual_pattern_classes(p, ctx);
  if (t.dual.block_count() != p.block_count())
    throw InternalInconsistencyError(
        "closure holds but dual class count differs from block count");
  t.table.assign(t.dual.block_count(), {});
  for (int x = 0; x < t.dual.block_count(); ++x) {
    t.table[x].reserve(p.blocks.size());
    for (const auto& block : p.blocks) {
      std::optional<CyclotomicInt> value;
      for (int g : block) {
        std::vector<int> exps;
        exps.reserve(t.dual.blocks[x].size());
        for (int a : t.dual.blocks[x]) exps.push_back(a * g % p.n);
        auto v = ctx.root_sum(exps);
        if (!value)
          value = v;
        else if (*value != v)
          throw InternalInconsistencyError(
              "supercharacter not constant on a superclass");
      }
      t.table[x].push_back(std::move(*value));
    }
  }
  return t;
}

inline bool is_theory(const Partition& p) {
  return std::holds_alternative<StructureConstants>(structure_constants(p));
}

inline SCTheory validate_or_throw(const Partition& p,
                                  const char* what = "partition") {
  auto r = validate(p);
  if (std::holds_alternative<Rejection>(r))
    throw InternalInconsistencyError(
        std::string(what) + " failed validation: " +
        std::get<Rejection>(r).to_string());
  return std::get<SCTheory>(std::move(r));
}

// Subgroups of Z_n that are unions of superclasses, sorted by order.
inline std::vector<Subgroup> normal_subgroups_of(const SCTheory& t) {
  const Partition& p = t.superclasses;
  std::vector<Subgroup> out;
  for (int m : divisors(p.n)) {
    Subgroup s = subgroup_of_order(p.n, m);
    std::uint64_t mask = 0;
    for (int g : s.elements) mask |= std::uint64_t{1} << g;
    std::uint64_t cover = 0;
    for (int i = 0; i < p.block_count(); ++i)
      if (p.masks[i] & mask) cover |= p.masks[i];
    if (cover == mask) out.push_back(std::move(s));
  }
  return out;
}

inline bool is_theory_normal(const SCTheory& t, const Subgroup& N) {
  for (const auto& s : normal_subgroups_of(t))
    if (s.order == N.order) return true;
  return false;
}

// The theory induced on a normal-for-t subgroup N, transported to Z_|N| along
// k*(n/|N|) <-> k.
inline SCTheory restrict_theory(const SCTheory& t, const Subgroup& N) {
  if (N.n != t.n())
    throw IncompatibleGroupsError("subgroup of a different group");
  if (!is_theory_normal(t, N))
    throw NotNormalError("subgroup of order " + std::to_string(N.order) +
                         " is not a union of superclasses");
  const int step = t.n() / N.order;
  std::vector<std::vector<int>> blocks;
  for (const auto& block : t.superclasses.blocks) {
    bool inside = true;
    for (int g : block)
      if (g % step != 0) inside = false;
    if (!inside) continue;
    std::vector<int> image;
    for (int g : block) image.push_back(g / step);
    blocks.push_back(std::move(image));
  }
  return validate_or_throw(canonical_partition(N.order, std::move(blocks)),
                           "restriction to a normal subgroup");
}

}  // namespace sct
