#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sct/cyclic.hpp"
#include "sct/errors.hpp"
#include "sct/theory.hpp"

namespace sct {

// (finest, coarsest) pair: singletons, and {identity} vs everything else.
inline std::pair<SCTheory, SCTheory> trivial_theories(int n) {
  return {validate_or_throw(min_partition(n), "finest theory"),
          validate_or_throw(max_partition(n), "coarsest theory")};
}

inline SCTheory min_theory(int n) {
  return validate_or_throw(min_partition(n), "finest theory");
}

inline SCTheory max_theory(int n) {
  return validate_or_throw(max_partition(n), "coarsest theory");
}

// Orbit theory of a group of automorphisms (a subgroup of (Z/n)^*).
inline SCTheory from_automorphisms(int n, const UnitSubgroup& H) {
  return validate_or_throw(orbit_partition(n, H), "automorphism orbits");
}

// Orbits of {1, -1}: blocks {g, -g}.
inline SCTheory inversion_theory(int n) {
  if (n <= 2) return min_theory(n);
  return from_automorphisms(n, make_unit_subgroup(n, {1, n - 1}));
}

// The *-product over the subgroup N: `inner` (a theory of Z_|N|) transported
// into N, plus the preimages under Z_n -> Z_{n/|N|} of the non-identity
// blocks of `outer`.
inline SCTheory star_product(int n, const Subgroup& N, const SCTheory& inner,
                             const SCTheory& outer) {
  if (N.n != n)
    throw IncompatibleGroupsError("subgroup of a different group");
  if (inner.n() != N.order)
    throw IncompatibleGroupsError("inner theory must live on Z_" +
                                  std::to_string(N.order));
  if (outer.n() != n / N.order)
    throw IncompatibleGroupsError("outer theory must live on Z_" +
                                  std::to_string(n / N.order));
  const QuotientMap q = quotient_map(n, N);
  const int step = n / N.order;  // generator of N
  std::vector<std::vector<int>> blocks;
  for (const auto& block : inner.superclasses.blocks) {
    std::vector<int> image;
    for (int k : block) image.push_back(k * step % n);
    blocks.push_back(std::move(image));
  }
  for (const auto& block : outer.superclasses.blocks) {
    if (block[0] == 0) continue;  // the identity class lifts to N itself
    std::vector<int> preimage;
    for (int g = 0; g < n; ++g) {
      int r = q.apply(g);
      for (int l : block)
        if (l == r) preimage.push_back(g);
    }
    blocks.push_back(std::move(preimage));
  }
  return validate_or_throw(canonical_partition(n, std::move(blocks)),
                           "*-product");
}

inline int crt_combine(int a, int x, int b, int y) {
  if (std::gcd(a, b) != 1)
    throw NotCoprimeError("orders " + std::to_string(a) + " and " +
                          std::to_string(b) + " are not coprime");
  for (int z = 0; z < a * b; ++z)
    if (z % a == x % a && z % b == y % b) return z;
  throw InternalInconsistencyError("no CRT solution found");
}

// Direct product along the CRT isomorphism Z_a x Z_b = Z_ab (gcd(a,b) = 1):
// blocks are the CRT images of block pairs.
inline SCTheory direct_product(const SCTheory& a, const SCTheory& b) {
  const int an = a.n(), bn = b.n();
  if (std::gcd(an, bn) != 1)
    throw NotCoprimeError("component orders " + std::to_string(an) + " and " +
                          std::to_string(bn) + " are not coprime");
  const int n = an * bn;
  // z -> (z mod a, z mod b) is bijective, so build blocks by scanning z once.
  std::vector<std::vector<int>> blocks(
      static_cast<std::size_t>(a.size()) * b.size());
  for (int z = 0; z < n; ++z) {
    int i = a.superclasses.block_of[z % an];
    int j = b.superclasses.block_of[z % bn];
    blocks[static_cast<std::size_t>(i) * b.size() + j].push_back(z);
  }
  return validate_or_throw(canonical_partition(n, std::move(blocks)),
                           "direct product");
}

struct StarDecomposition {
  Subgroup N;
  SCTheory inner;
  SCTheory outer;
};

// Splits t as inner * outer over N when Min_N*Min_{G/N} <= t <=
// Max_N*Max_{G/N}; otherwise empty.  The decomposition is unique.
inline std::optional<StarDecomposition> factor_star(const SCTheory& t,
                                                    const Subgroup& N) {
  const int n = t.n();
  if (N.n != n)
    throw IncompatibleGroupsError("subgroup of a different group");
  if (N.order <= 1 || N.order >= n) return std::nullopt;
  const SCTheory lo = star_product(n, N, min_theory(N.order),
                                   min_theory(n / N.order));
  const SCTheory hi = star_product(n, N, max_theory(N.order),
                                   max_theory(n / N.order));
  if (!refines(lo.superclasses, t.superclasses) ||
      !refines(t.superclasses, hi.superclasses))
    return std::nullopt;
  SCTheory inner = restrict_theory(t, N);
  const QuotientMap q = quotient_map(n, N);
  std::vector<std::vector<int>> outer_blocks{{0}};
  for (const auto& block : t.superclasses.blocks) {
    if (t.superclasses.block_of[block[0]] ==
        t.superclasses.block_of[0])
      continue;
    bool inside = true;
    for (int g : block)
      if (g % (n / N.order) != 0) inside = false;
    if (inside) continue;
    std::vector<int> image;
    for (int g : block) {
      int r = q.apply(g);
      if (std::find(image.begin(), image.end(), r) == image.end())
        image.push_back(r);
    }
    outer_blocks.push_back(std::move(image));
  }
  SCTheory outer = validate_or_throw(
      canonical_partition(q.modulus, std::move(outer_blocks)),
      "*-product quotient component");
  StarDecomposition d{N, std::move(inner), std::move(outer)};
  if (star_product(n, N, d.inner, d.outer) != t)
    throw InternalInconsistencyError("*-product decomposition did not "
                                     "reproduce the theory");
  return d;
}

struct StabilizerResult {
  UnitSubgroup stabilizer;
  bool comes_from_automorphisms = false;
};

// The largest unit subgroup whose multiplication action fixes every block,
// and whether its orbit theory reproduces t exactly.
inline StabilizerResult automorphism_stabilizer(const SCTheory& t) {
  const Partition& p = t.superclasses;
  const int n = p.n;
  std::vector<int> stab;
  for (int u : unit_group(n).elements) {
    bool fixes = true;
    for (int i = 0; i < p.block_count() && fixes; ++i) {
      std::uint64_t image = 0;
      for (int g : p.blocks[i])
        image |= std::uint64_t{1} << (n == 1 ? 0 : u * g % n);
      if (image != p.masks[i]) fixes = false;
    }
    if (fixes) stab.push_back(u);
  }
  StabilizerResult r{n == 1 ? unit_group(1) : make_unit_subgroup(n, stab),
                     false};
  r.comes_from_automorphisms = orbit_partition(n, r.stabilizer) == p;
  return r;
}

}  // namespace sct
