// Invariant suites: each runs a lemma-level check against an independent
// computation and reports pass/fail with human-readable details.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cmpart/arith.hpp"
#include "cmpart/cm.hpp"
#include "cmpart/groups.hpp"
#include "cmpart/params.hpp"
#include "cmpart/partitions.hpp"
#include "cmpart/rouquier.hpp"

namespace cmpart::verify {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) passed = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("     " + what); }
};

inline std::string group_name(const GroupParams& g) {
  return "G(" + std::to_string(g.m) + "," + std::to_string(g.d) + "," + std::to_string(g.n) + ")";
}

/// Deterministic p-cyclic parameters for g: zero shift, a few small block shifts
/// (which engineer residue collisions), and the gap witness. Each is given in
/// the (h, H) basis with h = -1.
inline std::vector<ParamsH> sample_p_cyclic_params(const GroupParams& g) {
  const int p = g.p();
  std::vector<std::vector<std::int64_t>> blocks;
  blocks.emplace_back(static_cast<std::size_t>(p), 0);
  if (p > 1) {
    for (std::int64_t step : {1, -1, 2, 3}) {
      std::vector<std::int64_t> b;
      for (int j = 0; j < p; ++j) b.push_back(step * j);
      blocks.push_back(b);
    }
    std::vector<std::int64_t> b;
    for (int j = 0; j < p; ++j) b.push_back(j % 2 == 0 ? 0 : static_cast<std::int64_t>(g.n));
    blocks.push_back(b);
  }
  std::vector<ParamsH> out;
  for (const auto& b : blocks) {
    ShiftData sd{1, {}};
    for (int j = 0; j < g.m; ++j) sd.s.push_back(b[static_cast<std::size_t>(j % p)]);
    out.push_back(shift_to_h(sd));
  }
  if (p == 1) {
    // H vanishes identically; only the scale of k varies.
    for (const auto& k : {Rat(1), Rat(2), Rat(BigInt(-1), BigInt(3)), Rat(BigInt(5), BigInt(2))})
      out.push_back(ParamsH{k, std::vector<Rat>(static_cast<std::size_t>(g.m), Rat(0))});
  } else {
    // Fractional H, so e > 1.
    ShiftData sd{3, {}};
    for (int j = 0; j < g.m; ++j) sd.s.push_back(j % p);
    out.push_back(shift_to_h(sd));
  }
  out.push_back(shift_to_h(gap_witness(g)));
  return out;
}

/// Reflection classes of G(m,d,n) under G(m,d,n) and under G(m,1,n).
inline SuiteResult classes(const GroupParams& g) {
  SuiteResult r{"classes", true, {}};
  const GroupParams big{g.m, 1, g.n};
  auto self = conjugacy_classes_of_reflections(g, g);
  auto outer = conjugacy_classes_of_reflections(g, big);
  auto describe = [](const std::vector<ReflectionClass>& cs) {
    std::string s;
    for (const auto& c : cs) s += c.label + ":" + std::to_string(c.elements.size()) + " ";
    return s;
  };
  r.note("under " + group_name(g) + ": " + describe(self));
  r.note("under " + group_name(big) + ": " + describe(outer));

  auto as_sets = [](const std::vector<ReflectionClass>& cs) {
    std::set<std::vector<MonomialElement>> out;
    for (const auto& c : cs) out.insert(c.elements);
    return out;
  };
  const bool split_expected = g.n == 2 && g.d % 2 == 0;
  if (!split_expected) {
    r.check(as_sets(self) == as_sets(outer), "classes under both groups coincide");
  } else {
    std::size_t r_outer = 0;
    for (const auto& c : outer)
      if (c.label[0] == 'R') ++r_outer;
    r.check(r_outer == 1, "single class R under " + group_name(big));
    std::vector<const ReflectionClass*> rs;
    for (const auto& c : self)
      if (c.label[0] == 'R') rs.push_back(&c);
    r.check(rs.size() == 2, "R splits into two classes under " + group_name(g));
    if (rs.size() == 2) {
      auto parity_ok = [](const ReflectionClass& c, int parity) {
        for (const auto& e : c.elements)
          if (e.phases[0] % 2 != parity) return false;
        return true;
      };
      r.check(rs[0]->label == "R1" && parity_ok(*rs[0], 0), "R1 = { s_(1,2) e1^k e2^-k : k even }");
      r.check(rs[1]->label == "R2" && parity_ok(*rs[1], 1), "R2 = { s_(1,2) e1^k e2^-k : k odd }");
    }
    std::vector<ReflectionClass> s_self, s_outer;
    for (const auto& c : self)
      if (c.label[0] == 'S') s_self.push_back(c);
    for (const auto& c : outer)
      if (c.label[0] == 'S') s_outer.push_back(c);
    r.check(as_sets(s_self) == as_sets(s_outer), "diagonal classes S_id coincide");
  }
  // S classes are exactly S_{id}, 1 <= i <= p-1
  std::set<std::string> s_labels;
  for (const auto& c : self)
    if (c.label[0] == 'S') s_labels.insert(c.label);
  std::set<std::string> expected;
  for (int i = 1; i < g.p(); ++i) expected.insert("S_" + std::to_string(i * g.d));
  r.check(s_labels == expected, "diagonal classes are S_{id}, 1 <= i <= p-1");

  std::size_t total = 0;
  for (const auto& c : conjugacy_classes_of_reflections(big, big)) total += c.elements.size();
  const std::size_t formula = static_cast<std::size_t>(g.n * (g.n - 1) * g.m / 2 + g.n * (g.m - 1));
  r.check(total == formula, "reflections of " + group_name(big) + ": " + std::to_string(total) + " = n(n-1)m/2 + n(m-1)");
  return r;
}

/// Sum of squared dimensions and the irreducible count against class counting.
inline SuiteResult counting(const GroupParams& g) {
  SuiteResult r{"counting", true, {}};
  BigInt order_w = 1;
  for (int i = 0; i < g.n; ++i) order_w *= g.m;
  for (int i = 2; i <= g.n; ++i) order_w *= i;
  BigInt sum_w = 0;
  for (const auto& l : enumerate_multipartitions(g.m, g.n)) {
    BigInt dim = dim_wreath_irrep(l);
    sum_w += dim * dim;
  }
  r.check(sum_w == order_w, "sum of dim^2 over Irr G(m,1,n) = m^n n! = " + order_w.str());
  BigInt sum_k = 0;
  auto labels = irr_labels(g);
  for (const auto& l : labels) {
    BigInt dim = dim_irr(l);
    sum_k += dim * dim;
  }
  r.check(sum_k == order_w / g.d, "sum of dim^2 over Irr " + group_name(g) + " = m^n n!/d = " + BigInt(order_w / g.d).str());
  const auto classes = conjugacy_class_count(g);
  r.check(labels.size() == classes, "|Irr| = " + std::to_string(labels.size()) + " equals brute-force class count " + std::to_string(classes));
  return r;
}

/// c <-> H round trips and the p-cyclic / extension-by-zero equivalence.
inline SuiteResult params(int max_m, int trials, std::uint32_t seed) {
  SuiteResult r{"params", true, {}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  auto rand_rat = [&] { return Rat(BigInt(num(rng)), BigInt(den(rng))); };
  int roundtrip_fail = 0, lemma_fail = 0, cases = 0;
  for (int t = 0; t < trials; ++t) {
    const int m = 1 + t % max_m;
    // random rational H with sum zero
    ParamsH ph{rand_rat(), std::vector<Rat>(static_cast<std::size_t>(m), Rat(0))};
    if (ph.h.is_zero()) ph.h = Rat(-1);
    for (int j = 1; j < m; ++j) {
      ph.H[static_cast<std::size_t>(j)] = rand_rat();
      ph.H[0] -= ph.H[static_cast<std::size_t>(j)];
    }
    if (!(c_to_h(h_to_c(ph)) == ph)) ++roundtrip_fail;
    // random rational c constant on gcd classes, so H is rational
    std::map<int, Rat> by_gcd;
    std::vector<Rat> cs;
    for (int i = 1; i < m; ++i) {
      auto [it, fresh] = by_gcd.try_emplace(std::gcd(i, m), Rat(0));
      if (fresh) it->second = rand_rat();
      cs.push_back(it->second);
    }
    auto pc = ParamsC::rational(m, ph.h, cs);
    auto back = h_to_c(c_to_h(pc));
    if (!(back.k == pc.k) || back.c != pc.c) ++roundtrip_fail;

    for (int d = 1; d <= m; ++d) {
      if (m % d) continue;
      ++cases;
      const int p = m / d;
      // d-supported c (values in Q(zeta_m)) gives p-cyclic H, and conversely
      ParamsC dc = ParamsC::zero(m, Rat(-1));
      for (int i = d; i < m; i += d) dc.c[static_cast<std::size_t>(i - 1)] = CycloNum(m, rand_rat()) + CycloNum::zeta(m, num(rng)) * rand_rat();
      if (!is_p_cyclic(c_to_h_exact(dc), p)) ++lemma_fail;
      if (h_to_c(ph).supported_on_multiples_of(d) != is_p_cyclic(ph, p)) ++lemma_fail;
      ParamsH cyc{Rat(-1), std::vector<Rat>(static_cast<std::size_t>(m), Rat(0))};
      std::vector<Rat> period;
      Rat s(0);
      for (int j = 0; j < p; ++j) {
        period.push_back(j + 1 < p ? rand_rat() : -s);
        s += period.back();
      }
      for (int j = 0; j < m; ++j) cyc.H[static_cast<std::size_t>(j)] = period[static_cast<std::size_t>(j % p)];
      if (!is_p_cyclic(cyc, p) || !h_to_c(cyc).supported_on_multiples_of(d)) ++lemma_fail;
    }
  }
  r.check(roundtrip_fail == 0, "c <-> H round trips exact over " + std::to_string(2 * trials) + " random parameters");
  r.check(lemma_fail == 0, "c_i = 0 for d not dividing i  <=>  H p-cyclic, " + std::to_string(cases) + " (m,d) cases");
  return r;
}

/// Shifted residues are invariant under permuting the d blocks (p-cyclic s).
inline SuiteResult sdorbit(const GroupParams& g, const std::vector<ShiftData>& shifts, int samples, std::uint32_t seed) {
  SuiteResult r{"sdorbit", true, {}};
  std::mt19937 rng(seed);
  auto all = enumerate_multipartitions(g.m, g.n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  int failures = 0, total = 0;
  for (const auto& sd : shifts) {
    if (!is_p_cyclic(sd, g.p())) {
      r.check(false, "shift is not p-cyclic");
      continue;
    }
    for (int t = 0; t < samples; ++t) {
      const auto& l = all[pick(rng)];
      std::vector<int> sigma(static_cast<std::size_t>(g.d));
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      ++total;
      if (!(shifted_residue(l, sd.s) == shifted_residue(permute_blocks(l, g.d, sigma), sd.s))) ++failures;
    }
  }
  r.check(failures == 0, "Res^s(lambda) = Res^s(sigma.lambda) for " + std::to_string(total) + " random (lambda, sigma)");
  return r;
}

/// Descent of the CM partition: counting identity, C_d-stability, and both
/// witness constructions used to prove it.
inline SuiteResult descent(const GroupParams& g, const ShiftData& sd) {
  SuiteResult r{"descent", true, {}};
  const auto up = cm_partition_w(g.m, g.n, sd);
  const auto down = cm_partition_k(g, sd);
  std::size_t stuttering_singletons = 0;
  for (const auto& b : up.blocks())
    if (b.size() == 1 && is_d_stuttering(up.labels()[b.front()], g.d)) ++stuttering_singletons;
  r.check(down.num_blocks() == up.num_blocks() + static_cast<std::size_t>(g.d - 1) * stuttering_singletons,
          "blocks downstairs " + std::to_string(down.num_blocks()) + " = upstairs " + std::to_string(up.num_blocks()) +
              " + (d-1) * " + std::to_string(stuttering_singletons));

  // Non-singleton-type blocks carry every epsilon of every orbit they meet.
  bool stable = true;
  for (const auto& b : down.blocks()) {
    const auto& first = down.labels()[b.front()];
    if (b.size() == 1 && first.stab_order == g.d && g.d > 1 && is_d_stuttering(first.orbit, g.d)) {
      auto idx = std::lower_bound(up.labels().begin(), up.labels().end(), first.orbit) - up.labels().begin();
      if (up.blocks()[up.block_of(static_cast<std::size_t>(idx))].size() == 1) continue;
    }
    std::map<MultiPartition, std::set<int>> eps;
    for (auto i : b) eps[down.labels()[i].orbit].insert(down.labels()[i].epsilon);
    for (const auto& [orb, es] : eps)
      if (static_cast<int>(es.size()) != orbit_and_stabilizer(orb, g.d).stab_order) stable = false;
  }
  r.check(stable, "every non-singleton-type block is C_d-stable");

  int prime_fail = 0, stutter_fail = 0;
  for (const auto& b : up.blocks()) {
    for (auto i : b) {
      const auto& l = up.labels()[i];
      if (!is_d_stuttering(l, g.d)) {
        for (int q : prime_divisors(g.d)) {
          auto w = prime_divisor_witness(l, g.d, q);
          auto wi = static_cast<std::size_t>(std::lower_bound(up.labels().begin(), up.labels().end(), w) - up.labels().begin());
          if (!up.same_block(i, wi) || orbit_and_stabilizer(w, g.d).stab_order % q == 0) ++prime_fail;
        }
      } else if (b.size() > 1 && g.d > 1) {
        const auto& other = up.labels()[b.front() == i ? b[1] : b.front()];
        auto w = stuttering_fallback_witness(l, other, g.d);
        auto wi = static_cast<std::size_t>(std::lower_bound(up.labels().begin(), up.labels().end(), w) - up.labels().begin());
        if (is_d_stuttering(w, g.d) || !up.same_block(i, wi)) ++stutter_fail;
      }
    }
  }
  r.check(prime_fail == 0, "prime-divisor witnesses lie in the same block with stabilizer prime to q");
  r.check(stutter_fail == 0, "stuttering members of non-singleton blocks share the block with a non-stuttering member");
  return r;
}

/// Gap-witness parameter reproduces the generic componentwise criterion.
inline SuiteResult generic(const GroupParams& g) {
  SuiteResult r{"generic", true, {}};
  const auto sd = gap_witness(g);
  r.check(cm_partition_k(g, sd) == cm_partition_k_generic(g, static_cast<int>(sd.e)),
          "CM partition at the gap witness equals the generic criterion");
  return r;
}

inline SuiteResult essential(int max_m) {
  SuiteResult r{"essential", true, {}};
  int mismatches = 0, tested = 0;
  for (int m = 2; m <= max_m; ++m)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        auto h = Hyperplane::ks(0, i, j);
        ++tested;
        if (is_essential(h, m) != is_essential_by_prime_power(h, m)) ++mismatches;
      }
  r.check(mismatches == 0, "norm test agrees with the prime-power criterion on " + std::to_string(tested) + " pairs, m <= " + std::to_string(max_m));
  return r;
}

/// Chain-move components equal the classes of equal unshifted residue.
inline SuiteResult chain(int m, int n) {
  SuiteResult r{"chain", true, {}};
  auto chains = chain_components(m, n);
  const auto by_residue = cm_partition_w(m, n, ShiftData{1, std::vector<std::int64_t>(static_cast<std::size_t>(m), 0)});
  r.check(chains == by_residue, "chain components = residue classes on P(" + std::to_string(m) + "," + std::to_string(n) + "), " +
                                    std::to_string(chains.num_blocks()) + " classes");
  return r;
}

/// Rouquier families refine CM blocks; equality at the gap witness.
inline SuiteResult refinement(const GroupParams& g, const std::vector<ShiftData>& shifts) {
  SuiteResult r{"refinement", true, {}};
  for (const auto& sd : shifts) {
    auto cmk = cm_partition_k(g, sd);
    auto rk = rouquier_families_k(g, hecke_params(sd));
    std::string tag = "s = (";
    for (std::size_t i = 0; i < sd.s.size(); ++i) tag += (i ? "," : "") + std::to_string(sd.s[i]);
    tag += "), e = " + std::to_string(sd.e);
    r.check(rk.refines(cmk), "Rouquier families refine CM blocks at " + tag);
  }
  const auto w = gap_witness(g);
  r.check(rouquier_families_k(g, hecke_params(w)) == cm_partition_k(g, w), "equality at the gap witness");
  return r;
}

}  // namespace cmpart::verify
