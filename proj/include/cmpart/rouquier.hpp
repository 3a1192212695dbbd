// Rouquier families of the cyclotomic Hecke algebras of G(m,1,n) and
// G(m,d,n): essential hyperplanes, per-hyperplane families, and the
// semi-continuity join.
#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmpart/arith.hpp"
#include "cmpart/block_partition.hpp"
#include "cmpart/cm.hpp"
#include "cmpart/error.hpp"
#include "cmpart/params.hpp"
#include "cmpart/partitions.hpp"

namespace cmpart {

/// Either k n_{R,0} + n_{S,i} - n_{S,j} = 0 (i < j) or n_{R,0} = 0.
struct Hyperplane {
  enum class Kind { KS, NR0 };
  Kind kind = Kind::KS;
  int k = 0;
  int i = 0;
  int j = 1;

  static Hyperplane ks(int k, int i, int j) {
    if (i >= j || i < 0) throw Error("hyperplane needs 0 <= i < j");
    return Hyperplane{Kind::KS, k, i, j};
  }
  static Hyperplane nr0() { return Hyperplane{Kind::NR0, 0, 0, 0}; }

  bool contains(const HeckeParams& hp) const {
    if (kind == Kind::NR0) return hp.nR0 == 0;
    return k * hp.nR0 + hp.nS.at(static_cast<std::size_t>(i)) - hp.nS.at(static_cast<std::size_t>(j)) == 0;
  }

  std::string to_string() const {
    if (kind == Kind::NR0) return "nR0 = 0";
    std::string s;
    if (k != 0) s = std::to_string(k) + "*nR0 + ";
    return s + "nS" + std::to_string(i) + " - nS" + std::to_string(j) + " = 0";
  }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Norm test: zeta^i - zeta^j lies in a prime ideal of Z[zeta_m] iff its norm is not a unit.
inline bool is_essential(const Hyperplane& h, int m) {
  if (h.kind == Hyperplane::Kind::NR0) return true;
  CycloNum diff = CycloNum::zeta(m, h.i) - CycloNum::zeta(m, h.j);
  return abs(diff.norm()) != Rat(1);
}

/// Arithmetic form of the same test: m / gcd(m, j - i) is a prime power.
inline bool is_essential_by_prime_power(const Hyperplane& h, int m) {
  if (h.kind == Hyperplane::Kind::NR0) return true;
  int r = m / std::gcd(m, h.j - h.i);
  if (r < 2) return false;
  int q = 2;
  while (r % q) ++q;
  while (r % q == 0) r /= q;
  return r == 1;
}

/// Essential hyperplanes through hp, with k ranging over (-k_bound, k_bound).
inline std::vector<Hyperplane> hyperplanes_containing(const HeckeParams& hp, int m, std::optional<int> k_bound = std::nullopt) {
  if (static_cast<int>(hp.nS.size()) != m) throw Error("Hecke parameter has wrong length");
  const int kb = k_bound.value_or(m);
  std::vector<Hyperplane> out;
  if (hp.nR0 == 0) out.push_back(Hyperplane::nr0());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = -kb + 1; k < kb; ++k) {
        auto h = Hyperplane::ks(k, i, j);
        if (h.contains(hp) && is_essential(h, m)) out.push_back(h);
      }
  return out;
}

namespace detail {

/// Grouping key on a hyperplane KS(k,i,j): the components away from {i,j} and the
/// pair residue Res_{lambda^i}(x) + x^{k nR0} Res_{lambda^j}(x).
inline std::pair<std::vector<Partition>, LaurentPoly> hyperplane_key(const MultiPartition& l, const Hyperplane& h, std::int64_t nR0) {
  std::vector<Partition> rest;
  for (int a = 0; a < l.m(); ++a)
    if (a != h.i && a != h.j) rest.push_back(l[static_cast<std::size_t>(a)]);
  LaurentPoly pair = l[static_cast<std::size_t>(h.i)].residue() +
                     l[static_cast<std::size_t>(h.j)].residue().shifted(static_cast<int>(h.k * nR0));
  return {std::move(rest), std::move(pair)};
}

inline void merge_hyperplane(UnionFind& uf, const std::vector<MultiPartition>& labels, const Hyperplane& h, std::int64_t nR0) {
  if (h.kind == Hyperplane::Kind::NR0) throw Error("families on n_{R,0} = 0 are not supported (k = 0 regime)");
  std::map<std::pair<std::vector<Partition>, LaurentPoly>, std::size_t> first;
  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    auto [it, fresh] = first.try_emplace(hyperplane_key(labels[idx], h, nR0), idx);
    if (!fresh) uf.unite(it->second, idx);
  }
}

}  // namespace detail

/// Rouquier families of G(m,1,n) at a generic point of the hyperplane h. For
/// k != 0 the pair residue carries the shift (0, k nR0); only k = 0 is backed by
/// the theory used here.
inline BlockPartition<MultiPartition> families_on_hyperplane(const Hyperplane& h, int m, int n, std::int64_t nR0 = 1) {
  if (h.kind == Hyperplane::Kind::NR0) throw Error("families on n_{R,0} = 0 are not supported (k = 0 regime)");
  if (h.j >= m) throw Error("hyperplane index out of range");
  auto labels = enumerate_multipartitions(m, n);
  UnionFind uf(labels.size());
  detail::merge_hyperplane(uf, labels, h, nR0);
  return BlockPartition<MultiPartition>::from_union_find(std::move(labels), uf);
}

/// Semi-continuity: the join of the per-hyperplane families over all essential
/// hyperplanes through hp.
inline BlockPartition<MultiPartition> rouquier_families_w(const HeckeParams& hp, int m, int n, std::optional<int> k_bound = std::nullopt) {
  auto labels = enumerate_multipartitions(m, n);
  UnionFind uf(labels.size());
  for (const auto& h : hyperplanes_containing(hp, m, k_bound)) detail::merge_hyperplane(uf, labels, h, hp.nR0);
  return BlockPartition<MultiPartition>::from_union_find(std::move(labels), uf);
}

/// Rouquier families of G(m,d,n), via the same descent as the CM side.
inline BlockPartition<IrrLabel> rouquier_families_k(const GroupParams& g, const HeckeParams& hp, std::optional<int> k_bound = std::nullopt) {
  if (static_cast<int>(hp.nS.size()) != g.m) throw Error("Hecke parameter has wrong length");
  if (!is_p_cyclic(hp, g.p())) throw Error("Hecke parameter is not p-cyclic");
  return descend(g, rouquier_families_w(hp, g.m, g.n, k_bound));
}

/// Moves of the chain relation: replace (lambda^s, lambda^t) by any pair with the
/// same two-component residue. Indexed by the pair's total size.
class ChainMoves {
 public:
  explicit ChainMoves(int n) {
    for (int total = 0; total <= n; ++total) {
      auto& table = by_total_.emplace_back();
      for (int a = 0; a <= total; ++a)
        for (const auto& alpha : enumerate_partitions(a))
          for (const auto& beta : enumerate_partitions(total - a))
            table[alpha.residue() + beta.residue()].emplace_back(alpha, beta);
    }
  }

  std::vector<MultiPartition> neighbours(const MultiPartition& l) const {
    std::vector<MultiPartition> out;
    for (int s = 0; s < l.m(); ++s)
      for (int t = s + 1; t < l.m(); ++t) {
        const auto& ls = l[static_cast<std::size_t>(s)];
        const auto& lt = l[static_cast<std::size_t>(t)];
        const auto& table = by_total_.at(static_cast<std::size_t>(ls.size() + lt.size()));
        for (const auto& [alpha, beta] : table.at(ls.residue() + lt.residue())) {
          if (alpha == ls && beta == lt) continue;
          auto comps = l.components();
          comps[static_cast<std::size_t>(s)] = alpha;
          comps[static_cast<std::size_t>(t)] = beta;
          out.emplace_back(std::move(comps));
        }
      }
    return out;
  }

 private:
  std::vector<std::map<LaurentPoly, std::vector<std::pair<Partition, Partition>>>> by_total_;
};

/// Whether mu is reachable from lambda by two-component residue-preserving moves.
inline bool chain_equivalence(const MultiPartition& lambda, const MultiPartition& mu) {
  if (lambda.m() != mu.m() || lambda.size() != mu.size()) throw Error("multipartitions must share m and n");
  if (lambda == mu) return true;
  ChainMoves moves(lambda.size());
  std::set<MultiPartition> seen{lambda};
  std::deque<MultiPartition> queue{lambda};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : moves.neighbours(cur)) {
      if (nb == mu) return true;
      if (seen.insert(nb).second) queue.push_back(std::move(nb));
    }
  }
  return false;
}

/// Connected components of the chain-move graph on P(m,n).
inline BlockPartition<MultiPartition> chain_components(int m, int n) {
  auto labels = enumerate_multipartitions(m, n);
  ChainMoves moves(n);
  std::map<MultiPartition, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::size_t> comp(labels.size(), labels.size());
  for (std::size_t start = 0; start < labels.size(); ++start) {
    if (comp[start] != labels.size()) continue;
    comp[start] = start;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (const auto& nb : moves.neighbours(labels[cur])) {
        auto j = index.at(nb);
        if (comp[j] == labels.size()) {
          comp[j] = start;
          queue.push_back(j);
        }
      }
    }
  }
  return BlockPartition<MultiPartition>(std::move(labels), comp);
}

/// Refinement/equality check of `finer` against `coarser`.
struct Comparison {
  bool refines = false;
  bool equal = false;
  /// (block of finer, block of coarser) witnessing the first failure, if any.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

template <typename Label>
Comparison compare_partitions(const BlockPartition<Label>& finer, const BlockPartition<Label>& coarser) {
  Comparison out;
  if (auto bad = finer.first_non_refining_block(coarser)) {
    const auto b = *bad;
    out.counterexample = std::make_pair(b, coarser.block_of(finer.blocks()[b].front()));
    return out;
  }
  out.refines = true;
  out.equal = finer == coarser;
  if (!out.equal) {
    for (std::size_t b = 0; b < coarser.num_blocks(); ++b) {
      const auto fb = finer.block_of(coarser.blocks()[b].front());
      if (finer.blocks()[fb] != coarser.blocks()[b]) {
        out.counterexample = std::make_pair(fb, b);
        break;
      }
    }
  }
  return out;
}

}  // namespace cmpart
