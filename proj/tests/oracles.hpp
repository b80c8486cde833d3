#pragma once

// Brute-force reference implementations the tests trust instead of the
// library's own shortcuts.

#include <complex>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "sct/enumerate.hpp"
#include "sct/partition.hpp"
#include "sct/theory.hpp"

namespace oracle {

// Independently recomputed: the number of supercharacter theories of Z_n for
// n = 1..10 (index 0 unused).
inline const std::vector<int>& known_counts() {
  static const std::vector<int> c{0, 1, 1, 2, 3, 3, 7, 4, 10, 7, 10};
  return c;
}

// Every partition of Z_n with {0} a singleton, via restricted growth strings
// over the residues 1..n-1.
inline void for_each_zero_singleton_partition(
    int n, const std::function<void(const sct::Partition&)>& fn) {
  std::vector<int> rgs(n > 0 ? n - 1 : 0, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == static_cast<int>(rgs.size())) {
      std::vector<std::vector<int>> blocks(
          static_cast<std::size_t>(1 + used));
      blocks[0].push_back(0);
      for (int k = 0; k < static_cast<int>(rgs.size()); ++k)
        blocks[1 + rgs[k]].push_back(k + 1);
      fn(sct::canonical_partition(n, std::move(blocks)));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[i] = b;
      rec(i + 1, used + (b == used ? 1 : 0));
    }
  };
  rec(0, 0);
}

inline sct::Partition random_zero_singleton_partition(int n,
                                                      std::mt19937& rng) {
  std::vector<std::vector<int>> rest;
  for (int g = 1; g < n; ++g) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(rest.size()));
    int k = pick(rng);
    if (k == static_cast<int>(rest.size()))
      rest.push_back({g});
    else
      rest[k].push_back(g);
  }
  std::vector<std::vector<int>> blocks{{0}};
  for (auto& b : rest) blocks.push_back(std::move(b));
  return sct::canonical_partition(n, std::move(blocks));
}

// Floating-point character-table check: group the n characters by their
// vectors of block sums of roots of unity.  Counting the groups gives the
// same accept/reject answer as the exact integer validators.
inline bool numeric_is_theory(const sct::Partition& p) {
  const int n = p.n;
  if (p.blocks[p.block_of[0]].size() != 1) return false;
  const double tau = 6.283185307179586476925286766559;
  std::vector<std::vector<std::complex<double>>> rows(n);
  for (int a = 0; a < n; ++a) {
    rows[a].reserve(p.block_count());
    for (const auto& block : p.blocks) {
      std::complex<double> s = 0;
      for (int t : block)
        s += std::polar(1.0, tau * static_cast<double>(a) *
                                 static_cast<double>(t) / n);
      rows[a].push_back(s);
    }
  }
  std::vector<int> repr;
  for (int a = 0; a < n; ++a) {
    bool fresh = true;
    for (int r : repr) {
      double d = 0;
      for (int k = 0; k < p.block_count(); ++k)
        d = std::max(d, std::abs(rows[a][k] - rows[r][k]));
      if (d < 1e-9) {
        fresh = false;
        break;
      }
    }
    if (fresh) repr.push_back(a);
  }
  return static_cast<int>(repr.size()) == p.block_count();
}

// Filtering the full partition list through the validator; the enumeration
// module must reproduce this list exactly.
inline std::vector<sct::Partition> naive_theories(int n) {
  std::vector<sct::Partition> out;
  for_each_zero_singleton_partition(n, [&](const sct::Partition& p) {
    if (sct::is_theory(p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end(),
            [](const sct::Partition& a, const sct::Partition& b) {
              return sct::theory_set_less(a, b);
            });
  return out;
}

}  // namespace oracle
