// Brute-force model of G(m,d,n) as monomial matrices. Desk scale only: it
// exists to check reflection classes and class counts against the
// combinatorial side.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cmpart/arith.hpp"
#include "cmpart/error.hpp"
#include "cmpart/partitions.hpp"

namespace cmpart {

inline constexpr std::uint64_t kDefaultGroupBound = 1'000'000;

/// Monomial matrix: column i has the entry zeta^{phases[i]} in row perm[i].
struct MonomialElement {
  std::vector<int> perm;
  std::vector<int> phases;

  static MonomialElement identity(int n) {
    MonomialElement e;
    e.perm.resize(static_cast<std::size_t>(n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.phases.assign(static_cast<std::size_t>(n), 0);
    return e;
  }

  int n() const { return static_cast<int>(perm.size()); }
  bool is_diagonal() const {
    for (int i = 0; i < n(); ++i)
      if (perm[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }
  bool in_group(int m, int d) const {
    (void)m;
    int sum = std::accumulate(phases.begin(), phases.end(), 0);
    return sum % d == 0;
  }

  /// Matrix product (*this) * other, phases taken mod m.
  MonomialElement times(const MonomialElement& o, int m) const {
    MonomialElement r;
    const auto sz = perm.size();
    r.perm.resize(sz);
    r.phases.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
      auto j = static_cast<std::size_t>(o.perm[i]);
      r.perm[i] = perm[j];
      r.phases[i] = (o.phases[i] + phases[j]) % m;
    }
    return r;
  }

  MonomialElement inverse(int m) const {
    MonomialElement r;
    const auto sz = perm.size();
    r.perm.resize(sz);
    r.phases.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
      auto j = static_cast<std::size_t>(perm[i]);
      r.perm[j] = static_cast<int>(i);
      r.phases[j] = (m - phases[i]) % m;
    }
    return r;
  }

  /// Dense matrix over Q(zeta_m).
  std::vector<std::vector<CycloNum>> to_matrix(int m) const {
    const auto sz = perm.size();
    std::vector<std::vector<CycloNum>> mat(sz, std::vector<CycloNum>(sz, CycloNum(m)));
    for (std::size_t i = 0; i < sz; ++i) mat[static_cast<std::size_t>(perm[i])][i] = CycloNum::zeta(m, phases[i]);
    return mat;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(perm[i] + 1) + "^" + std::to_string(phases[i]);
    }
    return s + "]";
  }

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
  friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;
};

/// Rank of a matrix over Q(zeta_m) by Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<CycloNum>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    CycloNum inv = a[rank][c].inverse();
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      CycloNum f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// True iff g - I has rank one, i.e. g fixes a hyperplane pointwise.
inline bool is_reflection(const MonomialElement& g, int m) {
  auto mat = g.to_matrix(m);
  for (std::size_t i = 0; i < mat.size(); ++i) mat[i][i] -= CycloNum(m, Rat(1));
  return matrix_rank(std::move(mat)) == 1;
}

inline BigInt group_order(const GroupParams& g) {
  BigInt order = 1;
  for (int i = 0; i < g.n; ++i) order *= g.m;
  for (int i = 2; i <= g.n; ++i) order *= i;
  return order / g.d;
}

/// All elements of G(m,d,n), sorted.
inline std::vector<MonomialElement> enumerate_group(const GroupParams& g, std::uint64_t bound = kDefaultGroupBound) {
  if (group_order(g) > bound) throw Error("group order exceeds bound " + std::to_string(bound));
  std::vector<MonomialElement> out;
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> phases(static_cast<std::size_t>(g.n), 0);
    for (;;) {
      MonomialElement e{perm, phases};
      if (e.in_group(g.m, g.d)) out.push_back(e);
      std::size_t i = 0;
      while (i < phases.size() && ++phases[i] == g.m) phases[i++] = 0;
      if (i == phases.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Reflections of G(m,d,n) found by the rank-one test, sorted.
inline std::vector<MonomialElement> reflections(const GroupParams& g, std::uint64_t bound = kDefaultGroupBound) {
  std::vector<MonomialElement> out;
  for (auto& e : enumerate_group(g, bound))
    if (is_reflection(e, g.m)) out.push_back(std::move(e));
  return out;
}

struct ReflectionClass {
  std::string label;  // "R", "R1", "R2", ... or "S_i"
  std::vector<MonomialElement> elements;
};

/// Orbits of the reflections of `params` under conjugation by `under`.
/// `under` must be G(m,1,n) or params itself.
inline std::vector<ReflectionClass> conjugacy_classes_of_reflections(const GroupParams& params, const GroupParams& under,
                                                                     std::uint64_t bound = kDefaultGroupBound) {
  if (under.m != params.m || under.n != params.n || (under.d != 1 && under.d != params.d))
    throw Error("conjugating group must be G(m,1,n) or the group itself");
  const int m = params.m;
  auto refl = reflections(params, bound);
  auto conj_group = enumerate_group(under, bound);
  std::vector<MonomialElement> inverses;
  inverses.reserve(conj_group.size());
  for (const auto& g : conj_group) inverses.push_back(g.inverse(m));

  std::set<MonomialElement> seen;
  std::vector<std::vector<MonomialElement>> orbits;
  for (const auto& r : refl) {
    if (seen.count(r)) continue;
    std::set<MonomialElement> orbit;
    for (std::size_t k = 0; k < conj_group.size(); ++k) orbit.insert(conj_group[k].times(r, m).times(inverses[k], m));
    seen.insert(orbit.begin(), orbit.end());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }

  std::vector<ReflectionClass> diag;
  std::vector<std::vector<MonomialElement>> nondiag;
  for (auto& o : orbits) {
    if (o.front().is_diagonal()) {
      int phase = 0;
      for (int x : o.front().phases) phase = std::max(phase, x);
      diag.push_back({"S_" + std::to_string(phase), std::move(o)});
    } else {
      nondiag.push_back(std::move(o));
    }
  }
  // The class containing s_(1,2) (k = 0) is listed first.
  auto has_plain_swap = [](const std::vector<MonomialElement>& o) {
    return std::any_of(o.begin(), o.end(), [](const MonomialElement& e) {
      return std::all_of(e.phases.begin(), e.phases.end(), [](int x) { return x == 0; });
    });
  };
  std::stable_partition(nondiag.begin(), nondiag.end(), has_plain_swap);
  std::vector<ReflectionClass> out;
  for (std::size_t i = 0; i < nondiag.size(); ++i)
    out.push_back({nondiag.size() == 1 ? std::string("R") : "R" + std::to_string(i + 1), std::move(nondiag[i])});
  std::sort(diag.begin(), diag.end(), [](const ReflectionClass& a, const ReflectionClass& b) {
    return std::stoi(a.label.substr(2)) < std::stoi(b.label.substr(2));
  });
  for (auto& c : diag) out.push_back(std::move(c));
  return out;
}

/// Number of conjugacy classes of G(m,d,n), by brute-force orbit computation.
inline std::size_t conjugacy_class_count(const GroupParams& g, std::uint64_t bound = kDefaultGroupBound) {
  auto elems = enumerate_group(g, bound);
  std::vector<MonomialElement> inverses;
  inverses.reserve(elems.size());
  for (const auto& e : elems) inverses.push_back(e.inverse(g.m));
  std::set<MonomialElement> seen;
  std::size_t classes = 0;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    ++classes;
    for (std::size_t k = 0; k < elems.size(); ++k) seen.insert(elems[k].times(x, g.m).times(inverses[k], g.m));
  }
  return classes;
}

}  // namespace cmpart
