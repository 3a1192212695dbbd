// Calogero-Moser partitions of Irr G(m,1,n) (residue criterion) and their
// descent to Irr G(m,d,n) through the rotation action of C_d^vee.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmpart/arith.hpp"
#include "cmpart/block_partition.hpp"
#include "cmpart/error.hpp"
#include "cmpart/params.hpp"
#include "cmpart/partitions.hpp"

namespace cmpart {

/// delta . lambda: component i of the result is component i - p (mod m) of lambda.
inline MultiPartition cdv_rotate(const MultiPartition& lambda, int p) {
  const int m = lambda.m();
  if (p < 1 || m % p != 0) throw Error("p must divide m");
  std::vector<Partition> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(((i - p) % m + m) % m)];
  return MultiPartition(std::move(out));
}

/// Block i of lambda is components ip .. (i+1)p - 1, with p = m/d.
inline MultiPartition block(const MultiPartition& lambda, int d, int i) {
  const int p = lambda.m() / d;
  std::vector<Partition> comps(lambda.components().begin() + i * p, lambda.components().begin() + (i + 1) * p);
  return MultiPartition(std::move(comps));
}

/// sigma . (lambda_0, ..., lambda_{d-1}) = (lambda_{sigma(0)}, ..., lambda_{sigma(d-1)})
inline MultiPartition permute_blocks(const MultiPartition& lambda, int d, const std::vector<int>& sigma) {
  const int m = lambda.m();
  if (d < 1 || m % d != 0) throw Error("d must divide m");
  if (static_cast<int>(sigma.size()) != d) throw Error("permutation must act on d blocks");
  const int p = m / d;
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < p; ++r) out.push_back(lambda[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] * p + r)]);
  return MultiPartition(std::move(out));
}

struct Orbit {
  std::vector<MultiPartition> members;  // sorted; members.front() is the canonical representative
  int stab_order = 1;
};

/// Orbit of lambda under C_d^vee (rotation by p = m/d) and the stabilizer order.
inline Orbit orbit_and_stabilizer(const MultiPartition& lambda, int d) {
  const int m = lambda.m();
  if (d < 1 || m % d != 0) throw Error("d must divide m");
  std::set<MultiPartition> orbit;
  MultiPartition cur = lambda;
  for (int i = 0; i < d; ++i) {
    orbit.insert(cur);
    cur = cdv_rotate(cur, m / d);
  }
  Orbit out{{orbit.begin(), orbit.end()}, d / static_cast<int>(orbit.size())};
  return out;
}

inline MultiPartition canonical_representative(const MultiPartition& lambda, int d) {
  return orbit_and_stabilizer(lambda, d).members.front();
}

/// All d blocks of p consecutive components are equal.
inline bool is_d_stuttering(const MultiPartition& lambda, int d) {
  const int m = lambda.m();
  if (d < 1 || m % d != 0) throw Error("d must divide m");
  const int p = m / d;
  for (int i = p; i < m; ++i)
    if (!(lambda[static_cast<std::size_t>(i)] == lambda[static_cast<std::size_t>(i - p)])) return false;
  return true;
}

/// Label ({lambda}, epsilon) of an irreducible character of G(m,d,n). epsilon = j
/// is the character of the stabilizer sending its canonical generator to
/// exp(2 pi i j / stab_order).
struct IrrLabel {
  MultiPartition orbit;  // canonical (least) representative
  int epsilon = 0;
  int stab_order = 1;

  std::string to_string() const { return "({" + orbit.to_string() + "}," + std::to_string(epsilon) + ")"; }
  friend bool operator==(const IrrLabel& a, const IrrLabel& b) { return a.orbit == b.orbit && a.epsilon == b.epsilon; }
  friend auto operator<=>(const IrrLabel& a, const IrrLabel& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    return a.epsilon <=> b.epsilon;
  }
};

/// Irr G(m,d,n) as pairs ({lambda}, epsilon), sorted.
inline std::vector<IrrLabel> irr_labels(const GroupParams& g) {
  std::vector<IrrLabel> out;
  for (const auto& lambda : enumerate_multipartitions(g.m, g.n)) {
    auto orb = orbit_and_stabilizer(lambda, g.d);
    if (!(orb.members.front() == lambda)) continue;
    for (int eps = 0; eps < orb.stab_order; ++eps) out.push_back(IrrLabel{lambda, eps, orb.stab_order});
  }
  return out;
}

/// dim of ({lambda}, epsilon): restriction of V_lambda splits into stab_order
/// pairwise distinct constituents of equal dimension.
inline std::uint64_t dim_irr(const IrrLabel& l) { return dim_wreath_irrep(l.orbit) / static_cast<std::uint64_t>(l.stab_order); }

/// CM partition of P(m,n): same block iff equal shifted residues. Exponent
/// scaling x -> x^e is injective, so the comparison uses Res^s(x) directly.
inline BlockPartition<MultiPartition> cm_partition_w(int m, int n, const ShiftData& sd) {
  if (static_cast<int>(sd.s.size()) != m) throw Error("shift vector length must equal m");
  auto labels = enumerate_multipartitions(m, n);
  std::vector<LaurentPoly> keys;
  keys.reserve(labels.size());
  for (const auto& l : labels) keys.push_back(shifted_residue(l, sd.s));
  return BlockPartition<MultiPartition>::from_keys(std::move(labels), keys);
}

/// Pushes a C_d^vee-stable partition of P(m,n) down to Irr G(m,d,n): a block
/// {lambda} with lambda d-stuttering yields the d singletons ({lambda}, eps);
/// any other block Q yields Gamma(Q) = {({lambda}, eps) : lambda in Q}.
inline BlockPartition<IrrLabel> descend(const GroupParams& g, const BlockPartition<MultiPartition>& upstairs) {
  auto labels = irr_labels(g);
  const auto& up = upstairs.labels();
  auto position = [&](const MultiPartition& x) {
    auto it = std::lower_bound(up.begin(), up.end(), x);
    if (it == up.end() || !(*it == x)) throw Error("label set mismatch for " + x.to_string());
    return static_cast<std::size_t>(it - up.begin());
  };
  std::vector<std::size_t> ids(labels.size());
  std::size_t next_singleton = upstairs.num_blocks();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& rep = labels[i].orbit;
    const auto b = upstairs.block_of(position(rep));
    for (const auto& member : orbit_and_stabilizer(rep, g.d).members)
      if (upstairs.block_of(position(member)) != b)
        throw Error("partition is not stable under C_d^vee at " + rep.to_string());
    const bool stuttering_singleton = upstairs.blocks()[b].size() == 1 && is_d_stuttering(rep, g.d);
    ids[i] = stuttering_singleton ? next_singleton++ : b;
  }
  return BlockPartition<IrrLabel>(std::move(labels), ids);
}

/// CM partition of Irr G(m,d,n) for a p-cyclic parameter.
inline BlockPartition<IrrLabel> cm_partition_k(const GroupParams& g, const ShiftData& sd) {
  if (static_cast<int>(sd.s.size()) != g.m) throw Error("shift vector length must equal m");
  if (!is_p_cyclic(sd, g.p())) throw Error("parameter is not p-cyclic (not an extension by zero from G(m,d,n))");
  return descend(g, cm_partition_w(g.m, g.n, sd));
}

/// Componentwise sums sum_{i<d} Res_{lambda^{j+pi}}(x^e), j = 0..p-1.
inline std::vector<LaurentPoly> generic_key(const MultiPartition& lambda, int d, int e) {
  const int p = lambda.m() / d;
  std::vector<LaurentPoly> key(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < d; ++i) key[static_cast<std::size_t>(j)] += lambda[static_cast<std::size_t>(j + p * i)].residue().substitute_power(e);
  return key;
}

/// CM partition of Irr G(m,d,n) at a generic parameter, from the componentwise
/// residue-sum criterion; stuttering orbits always split into singletons.
inline BlockPartition<IrrLabel> cm_partition_k_generic(const GroupParams& g, int e = 1) {
  auto labels = irr_labels(g);
  using Key = std::variant<std::size_t, std::vector<LaurentPoly>>;
  std::vector<Key> keys;
  keys.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (is_d_stuttering(labels[i].orbit, g.d)) keys.emplace_back(i);
    else keys.emplace_back(generic_key(labels[i].orbit, g.d, e));
  }
  return BlockPartition<IrrLabel>::from_keys(std::move(labels), keys);
}

inline std::vector<int> prime_divisors(int d) {
  std::vector<int> out;
  for (int q = 2; q * q <= d; ++q) {
    if (d % q) continue;
    out.push_back(q);
    while (d % q == 0) d /= q;
  }
  if (d > 1) out.push_back(d);
  return out;
}

/// For non-d-stuttering lambda and a prime q | d: a member of lambda's S_d-orbit
/// whose C_d^vee-stabilizer has order prime to q. Block l = d/q is made to
/// differ from block 0, so rotation by l blocks (which generates the order-q
/// subgroup) moves it.
inline MultiPartition prime_divisor_witness(const MultiPartition& lambda, int d, int q) {
  if (d % q != 0) throw Error("q must divide d");
  if (is_d_stuttering(lambda, d)) throw Error("witness requires a non-d-stuttering multipartition");
  if (d == q) return lambda;
  const int l = d / q;
  const auto b0 = block(lambda, d, 0);
  if (!(block(lambda, d, l) == b0)) return lambda;
  int i = 1;
  while (block(lambda, d, i) == b0) ++i;
  std::vector<int> sigma(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) sigma[static_cast<std::size_t>(k)] = k;
  std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(l)]);
  return permute_blocks(lambda, d, sigma);
}

/// For d-stuttering lambda sharing a block with some other member `other`:
/// a non-d-stuttering member of the same block, namely `other` itself when it is
/// not stuttering, else (lambda_0, other_0, lambda_0, ..., lambda_0).
inline MultiPartition stuttering_fallback_witness(const MultiPartition& lambda, const MultiPartition& other, int d) {
  if (!is_d_stuttering(other, d)) return other;
  if (d < 2) throw Error("every multipartition is 1-stuttering");
  const int p = lambda.m() / d;
  std::vector<Partition> comps(lambda.components());
  for (int r = 0; r < p; ++r) comps[static_cast<std::size_t>(p + r)] = other[static_cast<std::size_t>(r)];
  return MultiPartition(std::move(comps));
}

}  // namespace cmpart
