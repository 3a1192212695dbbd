// The three parameter presentations: class values c, the (h, H) basis, and
// integer shift data (e, s); plus the Hecke parameter vector built from them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmpart/arith.hpp"
#include "cmpart/error.hpp"
#include "cmpart/partitions.hpp"

namespace cmpart {

/// c(R) = k, c(S_i) = c[i-1] for 1 <= i <= m-1. Values live in Q(zeta_m); the
/// usual case is rational values, which embed.
struct ParamsC {
  int m = 1;
  Rat k{-1};
  std::vector<CycloNum> c;

  static ParamsC rational(int m, const Rat& k, const std::vector<Rat>& values) {
    if (static_cast<int>(values.size()) != m - 1) throw Error("expected m-1 class values");
    ParamsC out{m, k, {}};
    for (const auto& v : values) out.c.emplace_back(m, v);
    return out;
  }
  static ParamsC zero(int m, const Rat& k = Rat(-1)) { return rational(m, k, std::vector<Rat>(static_cast<std::size_t>(m - 1), Rat(0))); }

  const CycloNum& value(int i) const { return c.at(static_cast<std::size_t>(i - 1)); }
  /// Extension by zero from G(m,d,n): c_i = 0 whenever d does not divide i.
  bool supported_on_multiples_of(int d) const {
    for (int i = 1; i < m; ++i)
      if (i % d != 0 && !value(i).is_zero()) return false;
    return true;
  }
};

/// h and H_0..H_{m-1} with H_0 + ... + H_{m-1} = 0.
struct ParamsH {
  Rat h{-1};
  std::vector<Rat> H;

  int m() const { return static_cast<int>(H.size()); }
  void validate() const {
    if (H.empty()) throw Error("H must have m >= 1 entries");
    Rat sum(0);
    for (const auto& x : H) sum += x;
    if (!sum.is_zero()) throw Error("H_0 + ... + H_{m-1} must be zero, got " + sum.to_string());
  }
  friend bool operator==(const ParamsH&, const ParamsH&) = default;
};

/// s_0 = 0 and s_j - s_{j-1} = e H_j.
struct ShiftData {
  std::int64_t e = 1;
  std::vector<std::int64_t> s;
  friend bool operator==(const ShiftData&, const ShiftData&) = default;
};

/// (n_{R,0}, n_{R,1}, n_{S,0..m-1})
struct HeckeParams {
  std::int64_t nR0 = 1;
  std::int64_t nR1 = 0;
  std::vector<std::int64_t> nS;
  friend bool operator==(const HeckeParams&, const HeckeParams&) = default;
};

/// H_r for r = 0..m-1 as exact cyclotomic numbers:
/// H_r = (1/m) sum_{i=1}^{m-1} zeta^{ir} c_i for r >= 1, H_0 = -sum_{r>=1} H_r.
inline std::vector<CycloNum> c_to_h_exact(const ParamsC& pc) {
  const int m = pc.m;
  if (static_cast<int>(pc.c.size()) != m - 1) throw Error("expected m-1 class values");
  std::vector<CycloNum> H(static_cast<std::size_t>(m), CycloNum(m));
  for (int r = 1; r < m; ++r) {
    CycloNum acc(m);
    for (int i = 1; i < m; ++i) acc += CycloNum::zeta(m, static_cast<std::int64_t>(i) * r) * pc.value(i);
    H[static_cast<std::size_t>(r)] = acc * Rat(BigInt(1), BigInt(m));
    H[0] -= H[static_cast<std::size_t>(r)];
  }
  return H;
}

/// h = k and rational H; throws if some H_r is irrational.
inline ParamsH c_to_h(const ParamsC& pc) {
  auto exact = c_to_h_exact(pc);
  ParamsH out{pc.k, {}};
  for (std::size_t r = 0; r < exact.size(); ++r) {
    if (!exact[r].is_rational())
      throw Error("parameter gives irrational H_" + std::to_string(r) + " = " + exact[r].to_string());
    out.H.push_back(exact[r].rational_value());
  }
  return out;
}

/// c_i = sum_j zeta^{-ij} H_j, k = h.
inline ParamsC h_to_c(const ParamsH& ph) {
  ph.validate();
  const int m = ph.m();
  ParamsC out{m, ph.h, {}};
  for (int i = 1; i < m; ++i) {
    std::vector<std::int64_t> exps;
    for (int j = 0; j < m; ++j) exps.push_back(-static_cast<std::int64_t>(i) * j);
    out.c.push_back(root_of_unity_sum(m, exps, ph.H));
  }
  return out;
}

/// H_{i+p mod m} = H_i for all i.
inline bool is_p_cyclic(const ParamsH& ph, int p) {
  const int m = ph.m();
  if (p < 1 || m % p != 0) throw Error("p must divide m");
  for (int i = 0; i < m; ++i)
    if (!(ph.H[static_cast<std::size_t>((i + p) % m)] == ph.H[static_cast<std::size_t>(i)])) return false;
  return true;
}

inline bool is_p_cyclic(const std::vector<CycloNum>& H, int p) {
  const auto m = H.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!(H[(i + static_cast<std::size_t>(p)) % m] == H[i])) return false;
  return true;
}

/// Rescales so that h = -1 (parameters are only meaningful up to a common scalar).
inline ParamsH normalized(const ParamsH& ph) {
  if (ph.h.is_zero()) throw Error("k must be nonzero");
  Rat factor = Rat(-1) / ph.h;
  ParamsH out{Rat(-1), {}};
  for (const auto& x : ph.H) out.H.push_back(x * factor);
  return out;
}

/// Least e with e*h and all e*H_i integral; s_j = e (H_1 + ... + H_j).
inline ShiftData integerize(const ParamsH& ph) {
  ph.validate();
  BigInt e = ph.h.denominator();
  for (const auto& x : ph.H) e = lcm(e, x.denominator());
  ShiftData out;
  out.e = Rat(e, 1).to_int();
  Rat acc(0);
  out.s.push_back(0);
  for (int j = 1; j < ph.m(); ++j) {
    acc += ph.H[static_cast<std::size_t>(j)];
    out.s.push_back((acc * Rat(e, 1)).to_int());
  }
  return out;
}

/// Inverse of integerize for h = -1: H_j = (s_j - s_{j-1}) / e, H_0 = -sum.
inline ParamsH shift_to_h(const ShiftData& sd) {
  if (sd.e < 1) throw Error("e must be positive");
  if (sd.s.empty() || sd.s[0] != 0) throw Error("shift vector must start with 0");
  const auto m = sd.s.size();
  ParamsH out{Rat(-1), std::vector<Rat>(m, Rat(0))};
  for (std::size_t j = 1; j < m; ++j) {
    out.H[j] = Rat(BigInt(sd.s[j] - sd.s[j - 1]), BigInt(sd.e));
    out.H[0] -= out.H[j];
  }
  return out;
}

/// s_{j+p} = s_j for all valid j; equivalent to p-cyclicity of the underlying H.
inline bool is_p_cyclic(const ShiftData& sd, int p) {
  const auto m = static_cast<int>(sd.s.size());
  if (p < 1 || m % p != 0) throw Error("p must divide m");
  for (int j = 0; j + p < m; ++j)
    if (sd.s[static_cast<std::size_t>(j + p)] != sd.s[static_cast<std::size_t>(j)]) return false;
  return true;
}

inline ShiftData scaled(const ShiftData& sd, std::int64_t factor) {
  ShiftData out{sd.e * factor, {}};
  for (auto x : sd.s) out.s.push_back(x * factor);
  return out;
}

/// n_{R,0} = e, n_{R,1} = 0, n_{S,j} = e (H_1 + ... + H_j) = s_j.
inline HeckeParams hecke_params(const ShiftData& sd) { return HeckeParams{sd.e, 0, sd.s}; }

inline bool is_p_cyclic(const HeckeParams& hp, int p) { return is_p_cyclic(ShiftData{hp.nR0, hp.nS}, p); }

/// A p-cyclic integer shift (e = 1) whose block entries are pairwise separated by
/// more than max(2n, m). The separation keeps distinct component shifts from
/// colliding in any residue comparison and keeps the Hecke point off every
/// hyperplane k n_{R,0} + n_{S,i} - n_{S,j} = 0 with k != 0 and |k| < m.
inline ShiftData gap_witness(const GroupParams& g) {
  const std::int64_t gap = std::max<std::int64_t>(2 * g.n, g.m) + 1;
  ShiftData out{1, {}};
  for (int j = 0; j < g.m; ++j) out.s.push_back(static_cast<std::int64_t>(j % g.p()) * gap);
  return out;
}

/// Full pipeline from class values to shift data: c -> H -> normalize -> integerize.
inline ShiftData shift_data_from(const ParamsC& pc) { return integerize(normalized(c_to_h(pc))); }
inline ShiftData shift_data_from(const ParamsH& ph) { return integerize(normalized(ph)); }

}  // namespace cmpart
