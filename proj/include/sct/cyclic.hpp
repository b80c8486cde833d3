#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "sct/errors.hpp"
#include "sct/partition.hpp"

namespace sct {

inline std::vector<int> divisors(int n) {
  if (n < 1) throw InvalidDivisorError("order must be positive");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

struct CyclicGroup {
  int n;
  std::vector<int> divs;
  explicit CyclicGroup(int order) : n(order), divs(divisors(order)) {}
};

// The unique subgroup of order m in Z_n: multiples of n/m.
struct Subgroup {
  int n = 0;
  int order = 0;
  std::vector<int> elements;
};

inline Subgroup subgroup_of_order(int n, int m) {
  if (n < 1 || m < 1 || n % m != 0)
    throw InvalidDivisorError("subgroup order " + std::to_string(m) +
                              " does not divide " + std::to_string(n));
  Subgroup s;
  s.n = n;
  s.order = m;
  int step = n / m;
  for (int k = 0; k < m; ++k) s.elements.push_back(k * step);
  return s;
}

inline int element_order(int n, int g) {
  if (n < 1) throw InvalidDivisorError("order must be positive");
  g = ((g % n) + n) % n;
  return n / std::gcd(n, g);
}

// The natural map Z_n -> Z_n/N, realized as reduction mod n/|N|.
struct QuotientMap {
  int n = 0;
  int modulus = 0;  // quotient order
  int apply(int g) const { return ((g % modulus) + modulus) % modulus; }
  Subgroup kernel() const { return subgroup_of_order(n, n / modulus); }
};

inline QuotientMap quotient_map(int n, const Subgroup& N) {
  if (N.n != n) throw IncompatibleGroupsError("subgroup of a different group");
  return QuotientMap{n, n / N.order};
}

// A subgroup of the unit group (Z/n)^*, i.e. a group of automorphisms of Z_n.
struct UnitSubgroup {
  int n = 0;
  std::vector<int> elements;  // sorted, contains 1 (0 for n=1)

  bool operator==(const UnitSubgroup& other) const {
    return n == other.n && elements == other.elements;
  }
};

inline UnitSubgroup unit_group(int n) {
  if (n < 1) throw InvalidDivisorError("order must be positive");
  UnitSubgroup u;
  u.n = n;
  for (int g = 0; g < n; ++g)
    if (std::gcd(g, n) == 1) u.elements.push_back(g);
  if (n == 1) u.elements = {0};
  return u;
}

inline UnitSubgroup make_unit_subgroup(int n, std::vector<int> elements) {
  if (n == 1) return unit_group(1);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  UnitSubgroup h{n, std::move(elements)};
  if (h.elements.empty() ||
      std::find(h.elements.begin(), h.elements.end(), 1) == h.elements.end())
    throw InvalidSubgroupError("unit subgroup must contain 1");
  for (int a : h.elements) {
    if (a < 0 || a >= n || std::gcd(a, n) != 1)
      throw InvalidSubgroupError(std::to_string(a) + " is not a unit mod " +
                                 std::to_string(n));
    for (int b : h.elements) {
      int ab = (a * b) % n;
      if (!std::binary_search(h.elements.begin(), h.elements.end(), ab))
        throw InvalidSubgroupError("set is not closed under multiplication");
    }
  }
  return h;
}

// Closure of `gens` under multiplication mod n.
inline UnitSubgroup generated_unit_subgroup(int n,
                                            const std::vector<int>& gens) {
  if (n == 1) return unit_group(1);
  std::set<int> elems{1};
  for (int g : gens) {
    int r = ((g % n) + n) % n;
    if (std::gcd(r, n) != 1)
      throw InvalidSubgroupError(std::to_string(g) + " is not a unit mod " +
                                 std::to_string(n));
    elems.insert(r);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(elems.begin(), elems.end());
    for (int a : snapshot)
      for (int b : snapshot)
        if (elems.insert((a * b) % n).second) grew = true;
  }
  return UnitSubgroup{n, std::vector<int>(elems.begin(), elems.end())};
}

// All subgroups of (Z/n)^*, by breadth-first closure starting from the cyclic
// subgroups, ordered by (size, elements lexicographic).
inline std::vector<UnitSubgroup> unit_subgroups(int n) {
  std::set<std::vector<int>> found;
  const auto units = unit_group(n).elements;
  if (n == 1) return {unit_group(1)};
  for (int u : units) found.insert(generated_unit_subgroup(n, {u}).elements);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (const auto& sub : snapshot)
      for (int u : units) {
        if (std::binary_search(sub.begin(), sub.end(), u)) continue;
        auto gens = sub;
        gens.push_back(u);
        if (found.insert(generated_unit_subgroup(n, gens).elements).second)
          grew = true;
      }
  }
  std::vector<UnitSubgroup> out;
  for (const auto& e : found) out.push_back(UnitSubgroup{n, e});
  std::sort(out.begin(), out.end(),
            [](const UnitSubgroup& a, const UnitSubgroup& b) {
              if (a.elements.size() != b.elements.size())
                return a.elements.size() < b.elements.size();
              return a.elements < b.elements;
            });
  return out;
}

// Orbit partition of Z_n under multiplication by H.  {0} is always a
// singleton orbit, so the result is a candidate superclass partition.
inline Partition orbit_partition(int n, const UnitSubgroup& H) {
  if (H.n != n)
    throw IncompatibleGroupsError("unit subgroup of a different group");
  make_unit_subgroup(n, H.elements);  // validates
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> blocks;
  for (int g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::set<int> orbit;
    for (int h : H.elements) orbit.insert(n == 1 ? 0 : (h * g) % n);
    blocks.emplace_back(orbit.begin(), orbit.end());
    for (int x : blocks.back()) seen[x] = 1;
  }
  return canonical_partition(n, std::move(blocks));
}

}  // namespace sct
