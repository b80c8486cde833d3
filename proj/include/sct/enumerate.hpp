#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sct/cyclic.hpp"
#include "sct/errors.hpp"
#include "sct/theory.hpp"

namespace sct {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> time_limit;
};

// All supercharacter theories of Z_n, sorted by (block count descending,
// lexicographic blocks), so the finest theory is first and the coarsest last.
struct TheorySet {
  int n = 0;
  std::vector<SCTheory> theories;

  int size() const { return static_cast<int>(theories.size()); }

  std::optional<int> find(const Partition& p) const {
    auto it = std::lower_bound(
        theories.begin(), theories.end(), p,
        [](const SCTheory& t, const Partition& q) {
          return theory_set_less(t.superclasses, q);
        });
    if (it != theories.end() && it->superclasses == p)
      return static_cast<int>(it - theories.begin());
    return std::nullopt;
  }

  int index_of(const Partition& p) const {
    auto i = find(p);
    if (!i)
      throw IncompleteSetError("theory missing from set: " + p.to_string());
    return *i;
  }
};

namespace detail {

// Backtracking search over canonical partitions.  Blocks are grown for the
// least unassigned residue (the frontier) and sealed before the next frontier
// opens.  Sealing runs necessary-condition tests:
//   - multiplication by every unit must permute blocks (u = n-1 is closure
//     under negation),
//   - convolution counts of every sealed pair must be constant on every
//     sealed block,
// and then refines a coloring of the unassigned residues by those counts;
// members of any future block must share a color.  The block containing 1 is
// generated directly from its structure (its unit part is a subgroup H of
// (Z/n)^* and the rest is a union of H-orbits consistent under negation)
// instead of by subset search, and a frontier whose unit multiple lands in a
// sealed block S gets the forced block u^{-1}S with no branching.
class Searcher {
 public:
  Searcher(int n, const SearchBudget& budget)
      : n_(n),
        budget_(budget),
        start_(std::chrono::steady_clock::now()),
        units_(unit_group(n).elements),
        unit_inverse_(n, -1),
        block_of_(n, -1),
        color_(n, 0) {
    for (int u : units_)
      for (int v : units_)
        if (u * v % n_ == 1 % n_) unit_inverse_[u] = v;
  }

  std::vector<Partition> run() {
    if (n_ == 1) return {min_partition(1)};
    Undo u0;
    if (!try_seal({0}, u0))
      throw InternalInconsistencyError("sealing {0} failed");
    enumerate_block_of_one();
    unseal(u0);
    return std::move(out_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Undo {
    std::vector<int> color;
  };

  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0}
                    : (std::uint64_t{1} << n_) - 1;
  }

  void tick() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes)
      throw ResourceLimitError("enumeration node budget exhausted", nodes_);
    if (budget_.time_limit && (nodes_ == 1 || (nodes_ & 1023) == 0) &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit)
      throw ResourceLimitError("enumeration time budget exhausted", nodes_);
  }

  bool try_seal(const std::vector<int>& block, Undo& undo) {
    for (int g : block)
      if (color_[g] != color_[block[0]]) return false;
    undo.color = color_;
    std::uint64_t mask = 0;
    for (int g : block) mask |= std::uint64_t{1} << g;
    const int id = static_cast<int>(sealed_.size());
    sealed_.push_back(block);
    sealed_mask_.push_back(mask);
    for (int g : block) block_of_[g] = id;
    assigned_ |= mask;
    if (!seal_checks(block, mask)) {
      unseal(undo);
      return false;
    }
    return true;
  }

  void unseal(const Undo& undo) {
    for (int g : sealed_.back()) block_of_[g] = -1;
    assigned_ &= ~sealed_mask_.back();
    sealed_.pop_back();
    sealed_mask_.pop_back();
    color_ = undo.color;
  }

  bool seal_checks(const std::vector<int>& block, std::uint64_t mask) {
    for (int u : units_) {
      if (u == 1) continue;
      std::uint64_t img = 0;
      for (int g : block) img |= std::uint64_t{1} << (u * g % n_);
      if (img == mask) continue;
      if (img & assigned_) {
        bool exact = false;
        for (std::uint64_t m : sealed_mask_)
          if (m == img) {
            exact = true;
            break;
          }
        if (!exact) return false;
      } else {
        int c0 = -1;
        for (int g : block) {
          int h = u * g % n_;
          if (c0 == -1)
            c0 = color_[h];
          else if (color_[h] != c0)
            return false;
        }
      }
    }
    const int last = static_cast<int>(sealed_.size()) - 1;
    std::vector<std::vector<std::int64_t>> cvecs;
    cvecs.reserve(last + 1);
    for (int i = 0; i <= last; ++i) {
      std::vector<std::int64_t> c(n_, 0);
      for (int a : sealed_[i])
        for (int b : block) ++c[(a + b) % n_];
      for (int k = 0; k <= last; ++k) {
        std::int64_t head = c[sealed_[k][0]];
        for (int g : sealed_[k])
          if (c[g] != head) return false;
      }
      cvecs.push_back(std::move(c));
    }
    for (const auto& c : cvecs) {
      std::map<std::pair<int, std::int64_t>, int> relabel;
      for (int g = 0; g < n_; ++g) {
        if (assigned_ & (std::uint64_t{1} << g)) continue;
        auto key = std::make_pair(color_[g], c[g]);
        auto [it, fresh] = relabel.try_emplace(key, relabel.size());
        color_[g] = it->second;
        (void)fresh;
      }
    }
    return true;
  }

  void recurse() {
    tick();
    if (assigned_ == full_mask()) {
      std::vector<std::vector<int>> blocks(sealed_);
      out_.push_back(canonical_partition(n_, std::move(blocks)));
      return;
    }
    int f = 0;
    while (block_of_[f] >= 0) ++f;
    std::optional<std::vector<int>> forced;
    for (int u : units_) {
      if (u == 1) continue;
      int t = block_of_[u * f % n_];
      if (t < 0) continue;
      std::vector<int> F;
      F.reserve(sealed_[t].size());
      for (int x : sealed_[t]) F.push_back(unit_inverse_[u] * x % n_);
      std::sort(F.begin(), F.end());
      if (forced && *forced != F) return;
      forced = std::move(F);
    }
    if (forced) {
      for (int x : *forced)
        if (block_of_[x] >= 0) return;
      Undo undo;
      if (try_seal(*forced, undo)) {
        recurse();
        unseal(undo);
      }
      return;
    }
    std::vector<int> cand;
    for (int g = f + 1; g < n_; ++g)
      if (block_of_[g] < 0 && color_[g] == color_[f]) cand.push_back(g);
    std::vector<int> cur{f};
    grow(cand, 0, cur);
  }

  void grow(const std::vector<int>& cand, std::size_t idx,
            std::vector<int>& cur) {
    tick();
    if (idx == cand.size()) {
      Undo undo;
      if (try_seal(cur, undo)) {
        recurse();
        unseal(undo);
      }
      return;
    }
    cur.push_back(cand[idx]);
    grow(cand, idx + 1, cur);
    cur.pop_back();
    grow(cand, idx + 1, cur);
  }

  void enumerate_block_of_one() {
    std::vector<int> nonunits;
    for (int g = 1; g < n_; ++g)
      if (std::gcd(g, n_) != 1) nonunits.push_back(g);
    for (const auto& H : unit_subgroups(n_)) {
      std::vector<std::vector<int>> orbits;
      std::vector<int> orbit_of(n_, -1);
      for (int x : nonunits) {
        if (orbit_of[x] >= 0) continue;
        std::set<int> orb;
        for (int h : H.elements) orb.insert(h * x % n_);
        std::vector<int> o(orb.begin(), orb.end());
        for (int y : o) orbit_of[y] = static_cast<int>(orbits.size());
        orbits.push_back(std::move(o));
      }
      bool has_minus_one = std::binary_search(H.elements.begin(),
                                              H.elements.end(), n_ - 1);
      std::vector<char> chosen(orbits.size(), 0);
      choose_orbits(H, orbits, orbit_of, has_minus_one, 0, chosen);
    }
  }

  void choose_orbits(const UnitSubgroup& H,
                     const std::vector<std::vector<int>>& orbits,
                     const std::vector<int>& orbit_of, bool has_minus_one,
                     std::size_t idx, std::vector<char>& chosen) {
    tick();
    if (idx == orbits.size()) {
      std::vector<int> block = H.elements;
      for (std::size_t i = 0; i < orbits.size(); ++i)
        if (chosen[i])
          block.insert(block.end(), orbits[i].begin(), orbits[i].end());
      std::sort(block.begin(), block.end());
      Undo undo;
      if (try_seal(block, undo)) {
        recurse();
        unseal(undo);
      }
      return;
    }
    chosen[idx] = 0;
    choose_orbits(H, orbits, orbit_of, has_minus_one, idx + 1, chosen);
    bool may_take = true;
    if (!has_minus_one) {
      // without -1 in H the block meets each orbit-negation pair at most
      // once, and never a self-negating orbit
      int neg = orbit_of[(n_ - orbits[idx][0]) % n_];
      if (neg == static_cast<int>(idx)) may_take = false;
      if (neg < static_cast<int>(idx) && chosen[neg]) may_take = false;
    }
    if (may_take) {
      chosen[idx] = 1;
      choose_orbits(H, orbits, orbit_of, has_minus_one, idx + 1, chosen);
      chosen[idx] = 0;
    }
  }

  int n_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  std::vector<int> units_;
  std::vector<int> unit_inverse_;
  std::vector<int> block_of_;
  std::vector<int> color_;
  std::vector<std::vector<int>> sealed_;
  std::vector<std::uint64_t> sealed_mask_;
  std::uint64_t assigned_ = 0;
  std::vector<Partition> out_;
};

}  // namespace detail

inline TheorySet enumerate_all(int n, const SearchBudget& budget = {}) {
  if (n < 1) throw InvalidDivisorError("order must be positive");
  if (n > 64)
    throw ResourceLimitError("group order above the 64-element desk scale", 0);
  detail::Searcher searcher(n, budget);
  auto partitions = searcher.run();
  TheorySet ts;
  ts.n = n;
  ts.theories.reserve(partitions.size());
  for (auto& p : partitions)
    ts.theories.push_back(validate_or_throw(p, "enumerated partition"));
  std::sort(ts.theories.begin(), ts.theories.end(),
            [](const SCTheory& a, const SCTheory& b) {
              return theory_set_less(a.superclasses, b.superclasses);
            });
  for (int i = 0; i + 1 < ts.size(); ++i)
    if (ts.theories[i] == ts.theories[i + 1])
      throw InternalInconsistencyError("duplicate partition emitted");
  return ts;
}

}  // namespace sct
