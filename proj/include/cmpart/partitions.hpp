// Partitions, m-multipartitions, Young-diagram contents and residues.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmpart/arith.hpp"
#include "cmpart/error.hpp"

namespace cmpart {

/// Integer partition; parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw Error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Nodes (row, col) of the Young diagram, 1-indexed, row by row.
  std::vector<std::pair<int, int>> young_nodes() const {
    std::vector<std::pair<int, int>> nodes;
    for (int a = 1; a <= length(); ++a)
      for (int b = 1; b <= parts_[static_cast<std::size_t>(a - 1)]; ++b) nodes.emplace_back(a, b);
    return nodes;
  }

  /// Sum over nodes of x^{col - row}.
  LaurentPoly residue() const {
    LaurentPoly::Terms t;
    for (int a = 1; a <= length(); ++a)
      for (int b = 1; b <= parts_[static_cast<std::size_t>(a - 1)]; ++b) ++t[b - a];
    return LaurentPoly::from_terms(t);
  }

  /// Number of standard Young tableaux (hook-length formula).
  std::uint64_t num_standard_tableaux() const {
    const int n = size();
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    BigInt num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    BigInt den = 1;
    for (int a = 0; a < length(); ++a)
      for (int b = 0; b < parts_[static_cast<std::size_t>(a)]; ++b)
        den *= (parts_[static_cast<std::size_t>(a)] - b - 1) + (conj[static_cast<std::size_t>(b)] - a - 1) + 1;
    return static_cast<std::uint64_t>(num / den);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline std::vector<std::pair<int, int>> young_nodes(const Partition& p) { return p.young_nodes(); }
inline LaurentPoly residue(const Partition& p) { return p.residue(); }

/// All partitions of n, ordered lexicographically ascending on the parts sequence.
inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Ordered m-tuple of partitions. Total order: component sizes lexicographically,
/// then component parts lexicographically.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw Error("multipartition needs at least one component");
  }

  int m() const { return static_cast<int>(comps_.size()); }
  const std::vector<Partition>& components() const { return comps_; }
  const Partition& operator[](std::size_t i) const { return comps_[i]; }
  int size() const {
    int n = 0;
    for (const auto& c : comps_) n += c.size();
    return n;
  }
  std::vector<int> component_sizes() const {
    std::vector<int> s;
    s.reserve(comps_.size());
    for (const auto& c : comps_) s.push_back(c.size());
    return s;
  }

  /// Textual notation, e.g. "(3,1|2|)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) s += '|';
      s += comps_[i].to_string();
    }
    return s + ")";
  }

  static MultiPartition parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw Error("multipartition must be written as (a,b|c|...): " + std::string(text));
    text = text.substr(1, text.size() - 2);
    std::vector<Partition> comps;
    std::size_t start = 0;
    for (;;) {
      auto bar = text.find('|', start);
      auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
      std::vector<int> parts;
      std::size_t p = 0;
      while (p < piece.size()) {
        auto comma = piece.find(',', p);
        auto num = piece.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw Error("malformed multipartition component: " + std::string(piece));
        parts.push_back(std::stoi(std::string(num)));
        if (comma == std::string_view::npos) break;
        p = comma + 1;
        if (p == piece.size()) throw Error("trailing comma in multipartition");
      }
      comps.emplace_back(std::move(parts));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return MultiPartition(std::move(comps));
  }

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b) {
    if (auto c = a.component_sizes() <=> b.component_sizes(); c != 0) return c;
    return a.comps_ <=> b.comps_;
  }

 private:
  std::vector<Partition> comps_;
};

/// G(m,d,n): d | m, p = m/d.
struct GroupParams {
  int m = 1;
  int d = 1;
  int n = 1;

  static GroupParams make(int m, int d, int n) {
    if (m < 1 || d < 1 || n < 0) throw Error("group parameters must be positive");
    if (m % d != 0) throw Error("d must divide m");
    return GroupParams{m, d, n};
  }
  int p() const { return m / d; }
  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// sum_i x^{s_i} Res_{lambda^i}(x)
inline LaurentPoly shifted_residue(const MultiPartition& lambda, std::span<const std::int64_t> s) {
  if (static_cast<int>(s.size()) != lambda.m()) throw Error("shift vector length must equal m");
  LaurentPoly out;
  for (int i = 0; i < lambda.m(); ++i)
    out += lambda[static_cast<std::size_t>(i)].residue().shifted(static_cast<int>(s[static_cast<std::size_t>(i)]));
  return out;
}

/// Number of m-multipartitions of n: coefficient of x^n in (sum_k p(k) x^k)^m.
inline BigInt count_multipartitions(int m, int n) {
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
  std::vector<BigInt> acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int r = 0; r < m; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b)
        next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(n)];
}

/// All of P(m,n), each once, sorted by the MultiPartition order.
inline std::vector<MultiPartition> enumerate_multipartitions(int m, int n) {
  if (m < 1) throw Error("m must be positive");
  std::vector<MultiPartition> out;
  if (n < 0) return out;
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_partitions(k));

  std::vector<int> sizes(static_cast<std::size_t>(m), 0);
  std::vector<Partition> cur(static_cast<std::size_t>(m));
  auto fill = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& part : by_size[static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)])]) {
      cur[static_cast<std::size_t>(i)] = part;
      self(self, i + 1);
    }
  };
  // compositions of n into m nonnegative parts, lexicographically ascending
  auto compose = [&](auto&& self, int i, int remaining) -> void {
    if (i == m - 1) {
      sizes[static_cast<std::size_t>(i)] = remaining;
      fill(fill, 0);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      sizes[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, remaining - k);
    }
  };
  compose(compose, 0, n);
  return out;
}

/// dim V_lambda = multinomial(n; |lambda^0|, ...) * prod_i f_{lambda^i}
inline std::uint64_t dim_wreath_irrep(const MultiPartition& lambda) {
  BigInt dim = 1;
  int placed = 0;
  for (const auto& c : lambda.components()) {
    // multinomial built up as a product of binomials
    const int k = c.size();
    BigInt binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (placed + i) / i;
    placed += k;
    dim *= binom * c.num_standard_tableaux();
  }
  if (dim > UINT64_MAX) throw Error("dimension overflows 64 bits");
  return static_cast<std::uint64_t>(dim);
}

}  // namespace cmpart
