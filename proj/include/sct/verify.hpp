#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sct/constructions.hpp"
#include "sct/enumerate.hpp"
#include "sct/json_io.hpp"
#include "sct/lattice.hpp"
#include "sct/util.hpp"

namespace sct {

struct ClaimResult {
  std::string id;
  int n = 0;
  std::string params;
  bool pass = false;
  std::string detail;
};

inline SearchBudget default_search_budget() {
  SearchBudget b;
  // node ceiling only: a wall-clock limit would make reports depend on load
  b.max_nodes = 200'000'000;
  return b;
}

// Memoizes one lattice per group order; safe to fill from several threads
// via prefetch, after which reads are lock-free for claim evaluation.
class Session {
 public:
  explicit Session(std::optional<std::string> cache_dir = std::nullopt,
                   SearchBudget budget = default_search_budget())
      : cache_dir_(std::move(cache_dir)), budget_(budget) {}

  const Lattice& lattice(int n) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = lattices_.find(n);
      if (it != lattices_.end()) return *it->second;
    }
    auto built = build(n);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = lattices_.try_emplace(n, std::move(built));
    (void)fresh;
    return *it->second;
  }

  const TheorySet& theories(int n) { return lattice(n).theories(); }

  void prefetch(int max_n, unsigned jobs) {
    std::vector<int> ns;
    for (int n = 2; n <= max_n; ++n) ns.push_back(n);
    parallel_for(ns.size(), jobs,
                 [&](std::size_t i) { (void)lattice(ns[i]); });
  }

 private:
  std::shared_ptr<Lattice> build(int n) {
    std::optional<TheorySet> ts;
    if (cache_dir_) ts = load_theory_set(*cache_dir_, n);
    if (!ts) {
      ts = enumerate_all(n, budget_);
      if (cache_dir_) save_theory_set(*ts, *cache_dir_);
    }
    return std::make_shared<Lattice>(std::move(*ts));
  }

  std::optional<std::string> cache_dir_;
  SearchBudget budget_;
  std::mutex mu_;
  std::map<int, std::shared_ptr<Lattice>> lattices_;
};

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<int> distinct_prime_factors(int n) {
  std::vector<int> ps;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline bool is_semiprime_distinct(int n) {
  auto ps = distinct_prime_factors(n);
  return ps.size() == 2 && ps[0] * ps[1] == n;
}

// n = p*q*r with p, q, r prime and at least two of them distinct; these are
// the orders where the five-block coatom-meet argument applies
inline bool is_three_prime_product(int n) {
  std::vector<int> fs;
  for (int d = 2, m = n; d <= m; ++d)
    while (m % d == 0) {
      fs.push_back(d);
      m /= d;
    }
  return fs.size() == 3 && !(fs[0] == fs[1] && fs[1] == fs[2]);
}

inline std::string brief(const Partition& p) { return p.to_string(); }

struct Verifier {
  explicit Verifier(Session& session) : S(session) {}

  Session& S;
  std::vector<ClaimResult> out;
  std::map<int, std::pair<bool, bool>> semi;  // n -> (usm, lsm)

  void emit(std::string id, int n, std::string params, bool pass,
            std::string detail) {
    out.push_back({std::move(id), n, std::move(params), pass,
                   std::move(detail)});
  }

  const Lattice& L(int n) { return S.lattice(n); }

  int star_id(int n, int d, const SCTheory& inner, const SCTheory& outer) {
    return L(n).index_of(
        star_product(n, subgroup_of_order(n, d), inner, outer)
            .superclasses);
  }

  void structural(int n) {
    const Lattice& l = L(n);
    const int s = l.size();

    {
      bool ok = true;
      CyclotomicContext ctx(n);
      for (int i = 0; i < s && ok; ++i) {
        const SCTheory& t = l.theory(i);
        if (t.dual.block_count() != t.superclasses.block_count()) ok = false;
        if (!is_theory(t.superclasses)) ok = false;
        if (dual_pattern_classes(t.superclasses, ctx).block_count() !=
            t.superclasses.block_count())
          ok = false;
      }
      emit("def.validators", n, "", ok,
           "theories=" + std::to_string(s) +
               " each passes both validators with |X|=|K|");
    }

    {
      bool ok = true;
      std::int64_t max_c = 0;
      for (int i = 0; i < s && ok; ++i) {
        auto sr = structure_constants(l.theory(i).superclasses);
        if (!std::holds_alternative<StructureConstants>(sr)) {
          ok = false;
          break;
        }
        const auto& tab = std::get<StructureConstants>(sr).table;
        const auto& parts = l.theory(i).superclasses.blocks;
        for (std::size_t a = 0; a < tab.size() && ok; ++a)
          for (std::size_t b = 0; b < tab.size() && ok; ++b) {
            std::int64_t total = 0;
            for (std::size_t k = 0; k < tab.size(); ++k) {
              if (tab[a][b][k] < 0) ok = false;
              max_c = std::max(max_c, tab[a][b][k]);
              total += tab[a][b][k] *
                       static_cast<std::int64_t>(parts[k].size());
            }
            if (total != static_cast<std::int64_t>(parts[a].size()) *
                             static_cast<std::int64_t>(parts[b].size()))
              ok = false;
          }
      }
      emit("constants.closure", n, "", ok,
           "products of class sums have nonnegative integer coefficients; "
           "max coefficient " +
               std::to_string(max_c));
    }

    {
      bool ok = true;
      for (int a = 0; a < s && ok; ++a)
        for (int b = a + 1; b < s && ok; ++b) {
          Partition j = partition_join(l.theory(a).superclasses,
                                       l.theory(b).superclasses);
          auto f = l.find(j);
          if (!f || *f != l.join(a, b)) ok = false;
        }
      emit("join.closure", n, "", ok,
           "set-partition join of every pair is again a theory and is the "
           "lattice join");
    }

    {
      bool ok = l.theory(l.bottom()).superclasses == min_partition(n) &&
                l.theory(l.top()).superclasses == max_partition(n);
      emit("minmax.extremes", n, "", ok,
           "bottom is the singleton partition, top is {{0},rest}");
    }

    {
      auto subs = unit_subgroups(n);
      std::vector<int> ids;
      bool ok = true;
      for (const auto& H : subs)
        ids.push_back(l.index_of(from_automorphisms(n, H).superclasses));
      std::set<int> uniq(ids.begin(), ids.end());
      if (uniq.size() != ids.size()) ok = false;
      for (std::size_t i = 0; i < subs.size() && ok; ++i)
        for (std::size_t j = 0; j < subs.size() && ok; ++j) {
          bool sub = std::includes(subs[j].elements.begin(),
                                   subs[j].elements.end(),
                                   subs[i].elements.begin(),
                                   subs[i].elements.end());
          if (sub != l.leq(ids[i], ids[j])) ok = false;
        }
      std::set<int> from_auts;
      for (int i = 0; i < s; ++i)
        if (automorphism_stabilizer(l.theory(i)).comes_from_automorphisms)
          from_auts.insert(i);
      if (from_auts != uniq) ok = false;
      emit("aut.order-embedding", n, "", ok,
           "unit subgroups embed order-isomorphically onto the " +
               std::to_string(uniq.size()) + " orbit theories");
    }

    {
      bool ok = true;
      int restricted = 0;
      for (int i = 0; i < s && ok; ++i) {
        const SCTheory& t = l.theory(i);
        for (const Subgroup& N : normal_subgroups_of(t)) {
          if (N.order == 1 || N.order == n) continue;
          try {
            SCTheory r = restrict_theory(t, N);
            if (r.n() != N.order) ok = false;
            ++restricted;
          } catch (const Error&) {
            ok = false;
          }
        }
        for (int d : divisors(n)) {
          if (d == 1 || d == n) continue;
          Subgroup N = subgroup_of_order(n, d);
          bool normal = is_theory_normal(t, N);
          if (!normal) {
            try {
              restrict_theory(t, N);
              ok = false;
            } catch (const NotNormalError&) {
            }
          }
        }
      }
      emit("normal.restrict", n, "", ok,
           "restriction to every theory-normal subgroup is a theory (" +
               std::to_string(restricted) +
               " cases); non-normal subgroups are refused");
    }

    if (n > 2) {
      int inv = l.index_of(inversion_theory(n).superclasses);
      bool ok = l.covers(l.bottom(), inv);
      emit("inv.atom", n, "", ok,
           "negation-orbit theory covers the bottom");
    }

    auto usm = l.check_semimodularity(LatticeProperty::upper_semimodular);
    auto lsm = l.check_semimodularity(LatticeProperty::lower_semimodular);
    semi[n] = {usm.holds, lsm.holds};
    {
      bool expected = is_prime(n) || n == 4;
      std::ostringstream d;
      d << "usm=" << (usm.holds ? "true" : "false") << " expected="
        << (expected ? "true" : "false");
      if (usm.witness)
        d << " witness=(" << usm.witness->a << "," << usm.witness->b << ")";
      emit("semimod.upper", n, "", usm.holds == expected, d.str());
    }
    {
      bool expected = is_prime(n) || n == 4 || is_semiprime_distinct(n);
      std::ostringstream d;
      d << "lsm=" << (lsm.holds ? "true" : "false") << " expected="
        << (expected ? "true" : "false");
      if (lsm.witness)
        d << " witness=(" << lsm.witness->a << "," << lsm.witness->b << ")";
      emit("semimod.lower", n, "", lsm.holds == expected, d.str());
    }
  }

  void coatoms(int n) {
    const Lattice& l = L(n);
    std::vector<int> expected;
    for (int d : divisors(n)) {
      if (d == 1 || d == n) continue;
      expected.push_back(star_id(n, d, max_theory(d), max_theory(n / d)));
    }
    std::sort(expected.begin(), expected.end());
    std::vector<int> got = l.coatoms();
    std::sort(got.begin(), got.end());
    emit("coatoms.characterization", n, "", got == expected,
         "coatoms=" + std::to_string(got.size()) +
             " expected=" + std::to_string(expected.size()));

    int m = l.top();
    for (int c : got) m = l.meet(m, c);
    int a = l.index_of(from_automorphisms(n, unit_group(n)).superclasses);
    emit("coatoms.meet", n, "", m == a,
         "meet of all coatoms has " +
             std::to_string(l.theory(m).superclasses.block_count()) +
             " blocks (order partition has " +
             std::to_string(l.theory(a).superclasses.block_count()) + ")");
  }

  void prime_lattice(int p) {
    const Lattice& l = L(p);
    {
      auto r = l.check_semimodularity(LatticeProperty::modular);
      emit("cp.modular", p, "", r.holds, "modularity check");
    }
    {
      auto divs = divisors(p - 1);
      auto subs = unit_subgroups(p);
      bool ok = static_cast<int>(divs.size()) == l.size() &&
                subs.size() == divs.size();
      std::map<int, int> id_of_div;
      for (const auto& H : subs) {
        if (!ok) break;
        int d = static_cast<int>(H.elements.size());
        if (id_of_div.count(d)) {
          ok = false;
          break;
        }
        id_of_div[d] = l.index_of(from_automorphisms(p, H).superclasses);
      }
      if (ok)
        for (int d1 : divs)
          for (int d2 : divs)
            if ((d2 % d1 == 0) != l.leq(id_of_div[d1], id_of_div[d2]))
              ok = false;
      emit("cp.divisor-lattice", p, "", ok,
           "lattice of " + std::to_string(l.size()) +
               " theories matches the divisor lattice of " +
               std::to_string(p - 1));
    }
  }

  void pq(int p, int q) {
    const int n = p * q;
    const Lattice& l = L(n);
    const Lattice& lp = L(p);
    const Lattice& lq = L(q);
    std::string par = "p=" + std::to_string(p) + " q=" + std::to_string(q);

    std::vector<std::vector<int>> sp(lp.size(), std::vector<int>(lq.size()));
    std::vector<std::vector<int>> sq(lq.size(), std::vector<int>(lp.size()));
    std::vector<std::vector<int>> dp(lp.size(), std::vector<int>(lq.size()));
    for (int b = 0; b < lp.size(); ++b)
      for (int c = 0; c < lq.size(); ++c) {
        sp[b][c] = star_id(n, p, lp.theory(b), lq.theory(c));
        sq[c][b] = star_id(n, q, lq.theory(c), lp.theory(b));
        dp[b][c] =
            l.index_of(direct_product(lp.theory(b), lq.theory(c))
                           .superclasses);
      }
    std::set<int> star_ids;
    for (const auto& row : sp) star_ids.insert(row.begin(), row.end());
    for (const auto& row : sq) star_ids.insert(row.begin(), row.end());
    std::set<int> aut_ids;
    for (int i = 0; i < l.size(); ++i)
      if (automorphism_stabilizer(l.theory(i)).comes_from_automorphisms)
        aut_ids.insert(i);
    int a_id = l.index_of(from_automorphisms(n, unit_group(n)).superclasses);

    {
      bool ok = l.covers(l.bottom(), sp[0][0]) &&
                l.covers(l.bottom(), sq[0][0]);
      emit("pq.atoms", n, par, ok,
           "both minimal coset products cover the bottom");
    }
    {
      auto incomp = [&](int x, int y) { return !l.leq(x, y) && !l.leq(y, x); };
      bool ok = incomp(sp[0][0], sq[0][0]) && incomp(sp[0][0], a_id) &&
                incomp(sq[0][0], a_id);
      emit("pq.incomparable", n, par, ok,
           "minimal coset products and the order partition are pairwise "
           "incomparable");
    }
    {
      bool ok = true;
      int checked = 0;
      for (const auto& rp : sp)
        for (int x : rp)
          for (const auto& rq : sq)
            for (int y : rq) {
              ++checked;
              if (l.join(x, y) != l.top() || l.leq(x, y) || l.leq(y, x))
                ok = false;
            }
      emit("pq.star-join-max", n, par, ok,
           std::to_string(checked) +
               " cross pairs are incomparable with join at the top");
    }
    {
      bool ok = true;
      for (int z : aut_ids)
        for (int s : star_ids)
          if (l.leq(s, z)) ok = false;
      emit("pq.no-aut-above-star", n, par, ok,
           "no orbit theory lies above any coset product");
    }
    {
      bool ok = true;
      for (int s : star_ids)
        if (aut_ids.count(s)) ok = false;
      emit("pq.no-star-from-auts", n, par, ok,
           "coset products are never orbit theories");
    }
    Subgroup P = subgroup_of_order(n, p);
    Subgroup Q = subgroup_of_order(n, q);
    {
      bool ok = true;
      for (int z : aut_ids) {
        SCTheory zp = restrict_theory(l.theory(z), P);
        SCTheory zq = restrict_theory(l.theory(z), Q);
        int bound = l.index_of(direct_product(zp, zq).superclasses);
        if (!l.leq(z, bound)) ok = false;
      }
      emit("pq.dp-upper-bound", n, par, ok,
           "every orbit theory refines the product of its restrictions");
    }
    {
      bool ok = true;
      for (int z : aut_ids) {
        SCTheory zp = restrict_theory(l.theory(z), P);
        SCTheory zq = restrict_theory(l.theory(z), Q);
        for (int b = 0; b < lp.size(); ++b)
          for (int c = 0; c < lq.size(); ++c)
            if (l.leq(z, sp[b][c])) {
              if (!refines(zp.superclasses, lp.theory(b).superclasses))
                ok = false;
              if (!refines(zq.superclasses, lq.theory(c).superclasses))
                ok = false;
            }
      }
      emit("pq.dp-restrict", n, par, ok,
           "below a coset product, restrictions stay below the factors");
    }
    {
      bool ok = true;
      for (int b = 0; b < lp.size(); ++b)
        for (int c = 0; c < lq.size(); ++c) {
          UnitSubgroup R = automorphism_stabilizer(lp.theory(b)).stabilizer;
          UnitSubgroup T = automorphism_stabilizer(lq.theory(c)).stabilizer;
          std::vector<int> gens;
          for (int r : R.elements)
            for (int t : T.elements) gens.push_back(crt_combine(p, r, q, t));
          std::sort(gens.begin(), gens.end());
          UnitSubgroup A = make_unit_subgroup(n, gens);
          if (A.elements.size() != R.elements.size() * T.elements.size())
            ok = false;
          if (l.index_of(from_automorphisms(n, A).superclasses) != dp[b][c])
            ok = false;
        }
      emit("pq.dp-from-auts", n, par, ok,
           "each product theory is the orbit theory of the combined "
           "stabilizers");
    }
    {
      bool ok = true;
      for (int b = 0; b < lp.size(); ++b)
        for (int c = 0; c < lq.size(); ++c) {
          for (int s : {sp[b][c], sq[c][b]}) {
            if (!l.covers(dp[b][c], s)) ok = false;
            for (int z : aut_ids)
              if (l.covers(z, s) != (z == dp[b][c])) ok = false;
          }
        }
      emit("pq.dp-unique-cover", n, par, ok,
           "the product theory is the unique orbit theory covered by the "
           "matching coset product");
    }
    {
      bool ok = true;
      for (int b1 = 0; b1 < lp.size(); ++b1)
        for (int b2 : lp.covers_above(b1))
          for (int c = 0; c < lq.size(); ++c)
            if (!l.covers(dp[b1][c], dp[b2][c])) ok = false;
      for (int c1 = 0; c1 < lq.size(); ++c1)
        for (int c2 : lq.covers_above(c1))
          for (int b = 0; b < lp.size(); ++b)
            if (!l.covers(dp[b][c1], dp[b][c2])) ok = false;
      emit("pq.dp-covering", n, par, ok,
           "product theories cover when one factor covers");
    }
  }

  void prime_square_sublattice(int p) {
    const int n = p * p;
    const Lattice& l = L(n);
    std::string par = "p=" + std::to_string(p);
    int m = l.bottom();
    int inv = l.index_of(inversion_theory(n).superclasses);
    int mm = star_id(n, p, min_theory(p), min_theory(p));
    int mi = star_id(n, p, min_theory(p), inversion_theory(p));
    int ii = star_id(n, p, inversion_theory(p), inversion_theory(p));
    {
      bool ok = l.covers(m, inv) && l.covers(inv, ii) && l.covers(m, mm) &&
                l.covers(mm, mi) && l.covers(mi, ii);
      emit("psquare.covers", n, par, ok,
           "all five cover edges of the pentagon sublattice hold");
    }
    {
      auto at = l.atoms();
      bool ok = std::find(at.begin(), at.end(), inv) != at.end() &&
                std::find(at.begin(), at.end(), mm) != at.end();
      emit("psquare.atoms", n, par, ok,
           "negation orbits and the minimal coset product are atoms");
    }
    {
      bool ok = l.join(mm, inv) == ii;
      emit("psquare.join", n, par, ok,
           "join of the two atoms is the doubled negation product");
    }
  }

  void product_diamonds(int p, int q) {
    const int n = p * q;
    const Lattice& l = L(n);
    const Lattice& lp = L(p);
    const Lattice& lq = L(q);
    std::string par = "p=" + std::to_string(p) + " q=" + std::to_string(q);
    bool ok = true;
    int checked = 0;
    for (int r1 = 0; r1 < lp.size(); ++r1)
      for (int r2 : lp.covers_above(r1))
        for (int s = 0; s < lq.size(); ++s) {
          int w = l.index_of(
              direct_product(lp.theory(r1), lq.theory(s)).superclasses);
          int x = l.index_of(
              direct_product(lp.theory(r2), lq.theory(s)).superclasses);
          int y = star_id(n, p, lp.theory(r1), lq.theory(s));
          int z = star_id(n, p, lp.theory(r2), lq.theory(s));
          ++checked;
          if (!(l.covers(w, x) && l.covers(w, y) && l.covers(x, z) &&
                l.covers(y, z) && l.meet(x, y) == w && l.join(x, y) == z))
            ok = false;
        }
    emit("product.diamond", n, par, ok,
         std::to_string(checked) + " diamond instances verified");
  }

  void pqr(int n) {
    auto ps = distinct_prime_factors(n);
    int p = ps[0], q = ps[1];
    const Lattice& l = L(n);
    std::string par = "p=" + std::to_string(p) + " q=" + std::to_string(q);

    {
      std::vector<int> op, oq, rest;
      for (int g = 1; g < n; ++g) {
        int o = element_order(n, g);
        if (o == p)
          op.push_back(g);
        else if (o == q)
          oq.push_back(g);
        else
          rest.push_back(g);
      }
      Partition cand = canonical_partition(n, {{0}, op, oq, rest});
      auto res = structure_constants(cand);
      bool ok = false;
      std::string d = "partition accepted unexpectedly";
      if (auto* rej = std::get_if<Rejection>(&res)) {
        const auto& bi = cand.blocks[rej->block_i];
        const auto& bj = cand.blocks[rej->block_j];
        ok = (bi == op && bj == oq) || (bi == oq && bj == op);
        d = rej->to_string();
      }
      emit("pqr.rejected-partition", n, par, ok, d);
    }

    int cp = star_id(n, p, max_theory(p), max_theory(n / p));
    int cq = star_id(n, q, max_theory(q), max_theory(n / q));
    int m = l.meet(cp, cq);
    {
      int expected = star_id(
          n, p * q, from_automorphisms(p * q, unit_group(p * q)),
          max_theory(n / (p * q)));
      emit("pqr.coatom-meet", n, par, m == expected,
           "meet of the two coatoms has " +
               std::to_string(l.theory(m).superclasses.block_count()) +
               " blocks");
    }
    {
      bool not_covered = !l.covers(m, cp);
      int between = 0;
      for (int z = 0; z < l.size(); ++z)
        if (z != m && z != cp && l.leq(m, z) && l.leq(z, cp)) ++between;
      emit("pqr.meet-not-covered", n, par, not_covered && between > 0,
           std::to_string(between) +
               " theories strictly between the meet and the first coatom");
    }
  }

  void classification(int n) {
    const Lattice& l = L(n);
    int n_max_cls = 0, n_aut = 0, n_star = 0, n_open = 0;
    for (int i = 0; i < l.size(); ++i) {
      const SCTheory& t = l.theory(i);
      if (i == l.top()) {
        ++n_max_cls;
        continue;
      }
      if (automorphism_stabilizer(t).comes_from_automorphisms) {
        ++n_aut;
        continue;
      }
      bool st = false;
      for (int d : divisors(n)) {
        if (d == 1 || d == n) continue;
        Subgroup N = subgroup_of_order(n, d);
        if (is_theory_normal(t, N) && factor_star(t, N)) {
          st = true;
          break;
        }
      }
      if (st)
        ++n_star;
      else
        ++n_open;
    }
    std::string d = "max=" + std::to_string(n_max_cls) +
                    " orbit=" + std::to_string(n_aut) +
                    " coset-product=" + std::to_string(n_star) +
                    " other=" + std::to_string(n_open);
    auto ps = distinct_prime_factors(n);
    bool small_form = is_semiprime_distinct(n) ||
                      (ps.size() == 1 && ps[0] * ps[0] == n);
    if (small_form)
      emit("classification.pq-p2", n, "", n_open == 0, d);
    else
      emit("classification.coverage", n, "", true, d);
  }

  void star_claims(int n, int d) {
    const int e = n / d;
    const Lattice& l = L(n);
    const Lattice& ld = L(d);
    const Lattice& le = L(e);
    std::string par = "N=" + std::to_string(d);

    std::vector<std::vector<int>> sid(ld.size(),
                                      std::vector<int>(le.size()));
    for (int x = 0; x < ld.size(); ++x)
      for (int y = 0; y < le.size(); ++y)
        sid[x][y] = star_id(n, d, ld.theory(x), le.theory(y));

    {
      bool ok = true;
      for (int x1 = 0; x1 < ld.size(); ++x1)
        for (int y1 = 0; y1 < le.size(); ++y1)
          for (int x2 = 0; x2 < ld.size(); ++x2)
            for (int y2 = 0; y2 < le.size(); ++y2) {
              bool lhs = l.leq(sid[x1][y1], sid[x2][y2]);
              bool rhs = ld.leq(x1, x2) && le.leq(y1, y2);
              if (lhs != rhs) ok = false;
              if ((sid[x1][y1] == sid[x2][y2]) != (x1 == x2 && y1 == y2))
                ok = false;
            }
      emit("star.order-embedding", n, par, ok,
           "coset products compare exactly componentwise");
    }
    std::set<int> grid;
    for (const auto& row : sid) grid.insert(row.begin(), row.end());
    {
      auto iv = l.interval(sid[0][0], sid[ld.size() - 1][le.size() - 1]);
      std::set<int> ivset(iv.begin(), iv.end());
      bool ok = ivset == grid;
      for (int a : grid)
        for (int b : grid) {
          if (!grid.count(l.join(a, b))) ok = false;
          if (!grid.count(l.meet(a, b))) ok = false;
        }
      emit("star.interval-convex", n, par, ok,
           "interval of " + std::to_string(iv.size()) +
               " theories equals the product grid and is closed under join "
               "and meet");
    }
    {
      bool ok = true;
      for (int x1 = 0; x1 < ld.size(); ++x1)
        for (int y1 = 0; y1 < le.size(); ++y1)
          for (int x2 = 0; x2 < ld.size(); ++x2)
            for (int y2 = 0; y2 < le.size(); ++y2) {
              bool lhs = l.covers(sid[x1][y1], sid[x2][y2]);
              bool rhs = (x1 == x2 && le.covers(y1, y2)) ||
                         (y1 == y2 && ld.covers(x1, x2));
              if (lhs != rhs) ok = false;
            }
      emit("star.covers-direct-union", n, par, ok,
           "covers inside the grid are exactly one-coordinate covers");
    }
    {
      bool grid_usm = true, grid_lsm = true;
      std::vector<int> ids(grid.begin(), grid.end());
      auto in_grid_covers = [&](int lo, int hi) {
        if (!(l.leq(lo, hi)) || lo == hi) return false;
        for (int z : ids)
          if (z != lo && z != hi && l.leq(lo, z) && l.leq(z, hi))
            return false;
        return true;
      };
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          int a = ids[i], b = ids[j];
          int mt = l.meet(a, b), jn = l.join(a, b);
          if (in_grid_covers(mt, a) && in_grid_covers(mt, b) &&
              !(in_grid_covers(a, jn) && in_grid_covers(b, jn)))
            grid_usm = false;
          if (in_grid_covers(a, jn) && in_grid_covers(b, jn) &&
              !(in_grid_covers(mt, a) && in_grid_covers(mt, b)))
            grid_lsm = false;
        }
      bool cu = ld.check_semimodularity(LatticeProperty::upper_semimodular)
                    .holds &&
                le.check_semimodularity(LatticeProperty::upper_semimodular)
                    .holds;
      bool cl = ld.check_semimodularity(LatticeProperty::lower_semimodular)
                    .holds &&
                le.check_semimodularity(LatticeProperty::lower_semimodular)
                    .holds;
      bool ok = (grid_usm == cu) && (grid_lsm == cl);
      emit("star.semimodularity-product", n, par, ok,
           "sublattice semimodularity matches the factors (usm=" +
               std::string(grid_usm ? "true" : "false") + " lsm=" +
               std::string(grid_lsm ? "true" : "false") + ")");
    }
    {
      bool ok = true;
      int lo = sid[0][0], hi = sid[ld.size() - 1][le.size() - 1];
      Subgroup N = subgroup_of_order(n, d);
      int decomposed = 0;
      for (int i = 0; i < l.size(); ++i) {
        bool inside = l.leq(lo, i) && l.leq(i, hi);
        auto dec = factor_star(l.theory(i), N);
        if (inside != dec.has_value()) ok = false;
        if (dec) {
          ++decomposed;
          SCTheory back = star_product(n, N, dec->inner, dec->outer);
          if (!(back.superclasses == l.theory(i).superclasses)) ok = false;
        }
      }
      emit("star.factor-roundtrip", n, par, ok,
           std::to_string(decomposed) +
               " theories factor over the subgroup and rebuild exactly");
    }
  }

  void inheritance(int max_n) {
    bool ok = true;
    int checked = 0;
    for (int m = 2; m <= max_n; ++m)
      for (int d : divisors(m)) {
        if (d < 2 || d == m) continue;
        ++checked;
        if (semi[m].first && !semi[d].first) ok = false;
        if (semi[m].second && !semi[d].second) ok = false;
      }
    emit("inheritance.consistency", 0, "max-n=" + std::to_string(max_n), ok,
         std::to_string(checked) +
             " divisor pairs consistent with downward inheritance");
  }
};

}  // namespace detail

inline std::vector<std::string> claim_manifest() {
  return {
      "def.validators",      "constants.closure",
      "join.closure",        "minmax.extremes",
      "aut.order-embedding",         "normal.restrict",
      "inv.atom",            "semimod.upper",
      "semimod.lower",             "coatoms.characterization",
      "coatoms.meet",        "cp.modular",
      "cp.divisor-lattice",  "pq.atoms",
      "pq.incomparable",     "pq.star-join-max",
      "pq.no-aut-above-star", "pq.no-star-from-auts",
      "pq.dp-upper-bound",   "pq.dp-restrict",
      "pq.dp-from-auts",     "pq.dp-unique-cover",
      "pq.dp-covering",      "psquare.covers",
      "psquare.atoms",          "psquare.join",
      "product.diamond",        "pqr.rejected-partition",
      "pqr.coatom-meet",     "pqr.meet-not-covered",
      "classification.pq-p2", "classification.coverage",
      "star.order-embedding", "star.interval-convex",
      "star.covers-direct-union", "star.semimodularity-product",
      "star.factor-roundtrip", "inheritance.consistency",
  };
}

inline std::vector<ClaimResult> run_paper_verification(Session& S,
                                                       int max_n) {
  if (max_n < 6 || max_n > 30)
    throw Error("verification range must cover 6 <= max-n <= 30");
  detail::Verifier v{S};
  for (int n = 2; n <= max_n; ++n) v.structural(n);
  for (int n = 4; n <= std::min(24, max_n); ++n)
    if (!detail::is_prime(n)) v.coatoms(n);
  for (int p = 2; p <= max_n; ++p)
    if (detail::is_prime(p)) v.prime_lattice(p);
  for (int p = 2; p <= max_n; ++p)
    for (int q = p + 1; p * q <= max_n; ++q)
      if (detail::is_prime(p) && detail::is_prime(q)) v.pq(p, q);
  for (int p : {3, 5})
    if (p * p <= max_n) v.prime_square_sublattice(p);
  for (int n : {6, 15})
    if (n <= max_n) {
      auto ps = detail::distinct_prime_factors(n);
      v.product_diamonds(ps[0], ps[1]);
      v.product_diamonds(ps[1], ps[0]);
    }
  for (int n = 4; n <= max_n; ++n)
    if (detail::is_three_prime_product(n)) v.pqr(n);
  for (int n = 4; n <= max_n; ++n)
    if (!detail::is_prime(n)) v.classification(n);
  for (int n : {6, 9, 12, 15})
    if (n <= max_n)
      for (int d : divisors(n))
        if (d > 1 && d < n) v.star_claims(n, d);
  v.inheritance(max_n);
  std::stable_sort(v.out.begin(), v.out.end(),
                   [](const ClaimResult& a, const ClaimResult& b) {
                     return std::tie(a.n, a.id, a.params) <
                            std::tie(b.n, b.id, b.params);
                   });
  return v.out;
}

inline std::string render_text_report(const std::vector<ClaimResult>& claims,
                                      int max_n) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : claims)
    if (!c.pass) ++failed;
  os << "supercharacter theory lattice verification, n up to " << max_n
     << "\n";
  os << "claims: " << claims.size() << "  passed: "
     << (claims.size() - failed) << "  failed: " << failed << "\n\n";
  for (const auto& c : claims) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    for (std::size_t k = c.id.size(); k < 28; ++k) os << ' ';
    os << " n=" << c.n;
    if (!c.params.empty()) os << " " << c.params;
    os << "  " << c.detail << "\n";
  }
  return os.str();
}

inline nlohmann::json render_json_report(
    const std::vector<ClaimResult>& claims, int max_n) {
  nlohmann::json j;
  j["max_n"] = max_n;
  int failed = 0;
  auto& arr = j["claims"] = nlohmann::json::array();
  for (const auto& c : claims) {
    if (!c.pass) ++failed;
    nlohmann::json one;
    one["id"] = c.id;
    one["n"] = c.n;
    one["params"] = c.params;
    one["pass"] = c.pass;
    one["detail"] = c.detail;
    arr.push_back(std::move(one));
  }
  j["failed"] = failed;
  j["passed"] = static_cast<int>(claims.size()) - failed;
  return j;
}

}  // namespace sct
