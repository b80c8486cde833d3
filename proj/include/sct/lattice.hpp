#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sct/enumerate.hpp"
#include "sct/errors.hpp"
#include "sct/partition.hpp"

namespace sct {

enum class LatticeProperty { upper_semimodular, lower_semimodular, modular };

inline const char* to_string(LatticeProperty p) {
  switch (p) {
    case LatticeProperty::upper_semimodular: return "usm";
    case LatticeProperty::lower_semimodular: return "lsm";
    case LatticeProperty::modular: return "modular";
  }
  return "?";
}

inline std::optional<LatticeProperty> parse_property(const std::string& s) {
  if (s == "usm") return LatticeProperty::upper_semimodular;
  if (s == "lsm") return LatticeProperty::lower_semimodular;
  if (s == "modular") return LatticeProperty::modular;
  return std::nullopt;
}

struct SemimodularityWitness {
  int a = -1;
  int b = -1;
  int meet = -1;
  int join = -1;
};

struct SemimodularityReport {
  LatticeProperty property;
  bool holds = false;
  std::optional<SemimodularityWitness> witness;
};

// Ordered set of all theories of one Z_n under refinement.  Ids follow the
// TheorySet order (block count descending, then lexicographic), which is a
// linear extension: x < y implies id(x) < id(y).  The constructor certifies
// that the order is a lattice: every pair's least upper bound exists (and is
// the common coarsening of the two partitions) and every pair's greatest
// lower bound exists.  Order rows are kept as bitsets, so joins and meets are
// word operations.
class Lattice {
 public:
  static constexpr int kMaxNodes = 20000;

  explicit Lattice(TheorySet ts) : ts_(std::move(ts)) {
    const int s = ts_.size();
    if (s == 0) throw IncompleteSetError("empty theory set");
    if (s > kMaxNodes)
      throw ResourceLimitError("lattice larger than 20000 nodes",
                               static_cast<std::uint64_t>(s));
    words_ = (s + 63) / 64;
    up_.assign(static_cast<std::size_t>(s) * words_, 0);
    down_.assign(static_cast<std::size_t>(s) * words_, 0);
    for (int i = 0; i + 1 < s; ++i)
      if (!theory_set_less(part(i), part(i + 1)))
        throw InternalInconsistencyError("theory set out of order");
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        if (refines(part(i), part(j))) {
          set_bit(up_, i, j);
          set_bit(down_, j, i);
        }
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (test_bit(up_, i, j) && test_bit(up_, j, i))
          throw InternalInconsistencyError("order not antisymmetric");
    if (part(0).block_count() != ts_.n && ts_.n != 1)
      throw IncompleteSetError("finest theory missing");
    if (part(s - 1).block_count() != (ts_.n == 1 ? 1 : 2))
      throw IncompleteSetError("coarsest theory missing");
    for (int i = 0; i < s; ++i) {
      if (!test_bit(up_, 0, i) || !test_bit(up_, i, s - 1))
        throw InternalInconsistencyError("bounds are not universal");
      if (first_bit(row(up_, i)) != i)
        throw InternalInconsistencyError("ids are not a linear extension");
      if (last_bit(row(down_, i)) != i)
        throw InternalInconsistencyError("ids are not a linear extension");
    }
    verify_joins_and_meets();
    build_covers();
  }

  int size() const { return ts_.size(); }
  int n() const { return ts_.n; }
  const TheorySet& theories() const { return ts_; }
  const SCTheory& theory(int id) const { return ts_.theories.at(id); }
  int bottom() const { return 0; }
  int top() const { return ts_.size() - 1; }

  std::optional<int> find(const Partition& p) const { return ts_.find(p); }
  int index_of(const Partition& p) const { return ts_.index_of(p); }

  bool leq(int a, int b) const { return test_bit(up_, a, b); }

  int join(int a, int b) const {
    std::uint64_t acc[kMaxWords];
    int k = and_rows(up_, a, b, acc);
    (void)k;
    return first_bit({acc, static_cast<std::size_t>(words_)});
  }

  int meet(int a, int b) const {
    std::uint64_t acc[kMaxWords];
    int k = and_rows(down_, a, b, acc);
    (void)k;
    return last_bit({acc, static_cast<std::size_t>(words_)});
  }

  bool covers(int lo, int hi) const { return test_bit(cover_, lo, hi); }

  const std::vector<int>& covers_above(int id) const { return up_lists_[id]; }
  const std::vector<int>& covers_below(int id) const {
    return down_lists_[id];
  }

  std::vector<int> atoms() const { return up_lists_[bottom()]; }
  std::vector<int> coatoms() const { return down_lists_[top()]; }

  std::vector<int> interval(int lo, int hi) const {
    if (!leq(lo, hi))
      throw EmptyIntervalError("interval endpoints are incomparable");
    std::vector<int> ids;
    for (int z = lo; z <= hi; ++z)
      if (leq(lo, z) && leq(z, hi)) ids.push_back(z);
    return ids;
  }

  // Birkhoff conditions, scanned over pairs a < b in id order so the reported
  // witness is the first failure in a canonical traversal.
  SemimodularityReport check_semimodularity(LatticeProperty prop) const {
    if (prop == LatticeProperty::modular) {
      auto u = check_semimodularity(LatticeProperty::upper_semimodular);
      if (!u.holds) return {prop, false, u.witness};
      auto l = check_semimodularity(LatticeProperty::lower_semimodular);
      return {prop, l.holds, l.witness};
    }
    const int s = size();
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) {
        int m = meet(a, b);
        int j = join(a, b);
        if (prop == LatticeProperty::upper_semimodular) {
          if (covers(m, a) && covers(m, b) &&
              !(covers(a, j) && covers(b, j)))
            return {prop, false, SemimodularityWitness{a, b, m, j}};
        } else {
          if (covers(a, j) && covers(b, j) &&
              !(covers(m, a) && covers(m, b)))
            return {prop, false, SemimodularityWitness{a, b, m, j}};
        }
      }
    return {prop, true, std::nullopt};
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph sup_lattice {\n  rankdir=BT;\n";
    for (int i = 0; i < size(); ++i)
      os << "  " << i << " [label=\"" << i << ":" << part(i).block_count()
         << "\"];\n";
    for (int i = 0; i < size(); ++i)
      for (int j : up_lists_[i]) os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["n"] = ts_.n;
    auto& nodes = j["nodes"] = nlohmann::json::array();
    for (const auto& t : ts_.theories) nodes.push_back(t.superclasses.blocks);
    auto& cov = j["covers"] = nlohmann::json::array();
    for (int i = 0; i < size(); ++i)
      for (int k : up_lists_[i]) cov.push_back({i, k});
    return j;
  }

 private:
  static constexpr int kMaxWords = (kMaxNodes + 63) / 64;

  struct Row {
    const std::uint64_t* w;
    std::size_t words;
  };

  const Partition& part(int id) const {
    return ts_.theories[id].superclasses;
  }

  void set_bit(std::vector<std::uint64_t>& m, int r, int c) {
    m[static_cast<std::size_t>(r) * words_ + c / 64] |=
        std::uint64_t{1} << (c % 64);
  }
  bool test_bit(const std::vector<std::uint64_t>& m, int r, int c) const {
    return (m[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
  }
  Row row(const std::vector<std::uint64_t>& m, int r) const {
    return {m.data() + static_cast<std::size_t>(r) * words_,
            static_cast<std::size_t>(words_)};
  }
  int and_rows(const std::vector<std::uint64_t>& m, int a, int b,
               std::uint64_t* out) const {
    const std::uint64_t* ra = m.data() + static_cast<std::size_t>(a) * words_;
    const std::uint64_t* rb = m.data() + static_cast<std::size_t>(b) * words_;
    for (int w = 0; w < words_; ++w) out[w] = ra[w] & rb[w];
    return words_;
  }
  static int first_bit(Row r) {
    for (std::size_t w = 0; w < r.words; ++w)
      if (r.w[w]) return static_cast<int>(w * 64 + __builtin_ctzll(r.w[w]));
    throw InternalInconsistencyError("empty bound set");
  }
  static int last_bit(Row r) {
    for (std::size_t w = r.words; w-- > 0;)
      if (r.w[w])
        return static_cast<int>(w * 64 + 63 - __builtin_clzll(r.w[w]));
    throw InternalInconsistencyError("empty bound set");
  }

  // For every pair: the partition-level common coarsening must itself be in
  // the set and must be the unique minimal common upper bound, and the
  // greatest lower bound must exist.  Failure of the former means the set is
  // not join-closed, i.e. incomplete.
  void verify_joins_and_meets() {
    const int s = size();
    std::uint64_t acc[kMaxWords];
    for (int a = 0; a < s; ++a)
      for (int b = a; b < s; ++b) {
        and_rows(up_, a, b, acc);
        int j = first_bit({acc, static_cast<std::size_t>(words_)});
        Partition pj = partition_join(part(a), part(b));
        auto found = ts_.find(pj);
        if (!found)
          throw IncompleteSetError(
              "set is not join-closed: missing " + pj.to_string());
        if (*found != j)
          throw InternalInconsistencyError("join disagrees with coarsening");
        for (int w = 0; w < words_; ++w)
          if (std::uint64_t rest = acc[w] &
                                   ~(w == j / 64 ? std::uint64_t{1} << (j % 64)
                                                 : std::uint64_t{0});
              rest)
            for (int bit = 0; bit < 64; ++bit)
              if ((rest >> bit) & 1) {
                int z = w * 64 + bit;
                if (!leq(j, z))
                  throw InternalInconsistencyError(
                      "upper bounds without a least element");
              }
        and_rows(down_, a, b, acc);
        int m = last_bit({acc, static_cast<std::size_t>(words_)});
        for (int w = 0; w < words_; ++w)
          if (std::uint64_t rest =
                  acc[w] & ~(w == m / 64 ? std::uint64_t{1} << (m % 64)
                                         : std::uint64_t{0});
              rest)
            for (int bit = 0; bit < 64; ++bit)
              if ((rest >> bit) & 1) {
                int z = w * 64 + bit;
                if (!leq(z, m))
                  throw InternalInconsistencyError(
                      "lower bounds without a greatest element");
              }
      }
  }

  void build_covers() {
    const int s = size();
    cover_.assign(static_cast<std::size_t>(s) * words_, 0);
    up_lists_.assign(s, {});
    down_lists_.assign(s, {});
    std::uint64_t acc[kMaxWords];
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) {
        if (!test_bit(up_, i, j)) continue;
        const std::uint64_t* ri =
            up_.data() + static_cast<std::size_t>(i) * words_;
        const std::uint64_t* rj =
            down_.data() + static_cast<std::size_t>(j) * words_;
        int pop = 0;
        for (int w = 0; w < words_; ++w) {
          acc[w] = ri[w] & rj[w];
          pop += __builtin_popcountll(acc[w]);
        }
        if (pop == 2) {
          set_bit(cover_, i, j);
          up_lists_[i].push_back(j);
          down_lists_[j].push_back(i);
        }
      }
  }

  TheorySet ts_;
  int words_ = 0;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> cover_;
  std::vector<std::vector<int>> up_lists_;
  std::vector<std::vector<int>> down_lists_;
};

}  // namespace sct
