// Exact arithmetic: rationals, integer Laurent polynomials in one variable,
// and the cyclotomic field Q(zeta_m) in the power basis modulo Phi_m.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <cctype>
#include <mutex>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmpart/error.hpp"

namespace cmpart {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced rational number with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "p", "-p" or "p/q".
  static Rat parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw Error("malformed rational");
      std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
      if (start == s.size()) throw Error("malformed rational");
      for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error("malformed rational: " + std::string(s));
      return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text), 1);
    return Rat(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Integer value; throws unless is_integer() and the value fits.
  std::int64_t to_int() const {
    if (!is_integer()) throw Error("rational " + to_string() + " is not an integer");
    BigInt n = numerator();
    if (n > INT64_MAX || n < INT64_MIN) throw Error("integer overflow converting " + to_string());
    return static_cast<std::int64_t>(n);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << numerator();
    if (!is_integer()) os << '/' << denominator();
    return os.str();
  }

  Rat operator-() const { return from(-value_); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

  friend Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
  friend Rat pow(Rat base, unsigned exp) {
    Rat out(1);
    while (exp) {
      if (exp & 1U) out *= base;
      base *= base;
      exp >>= 1U;
    }
    return out;
  }

 private:
  static Rat from(boost::multiprecision::cpp_rational v) {
    Rat r;
    r.value_ = std::move(v);
    return r;
  }
  boost::multiprecision::cpp_rational value_{0};
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

/// Laurent polynomial in Z[x, x^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
  }
  static LaurentPoly from_terms(const Terms& terms) {
    LaurentPoly p;
    for (auto [e, c] : terms)
      if (c != 0) p.terms_[e] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }
  /// Value at x = 1.
  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (auto [e, c] : terms_) s += c;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(std::int64_t k, const LaurentPoly& p) {
    LaurentPoly out;
    if (k == 0) return out;
    for (auto [e, c] : p.terms_) out.terms_[e] = k * c;
    return out;
  }

  /// x^r * p
  LaurentPoly shifted(int r) const {
    LaurentPoly out;
    for (auto [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + r, c);
    return out;
  }
  /// p(x^e), e >= 1
  LaurentPoly substitute_power(int e) const {
    if (e < 1) throw Error("substitute_power requires e >= 1");
    LaurentPoly out;
    for (auto [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k * e, c);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ <=> b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      std::int64_t a = c < 0 ? -c : c;
      if (e == 0) os << a;
      else {
        if (a != 1) os << a << '*';
        os << "x";
        if (e != 1) os << '^' << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void add_term(int e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Terms terms_;
};

inline LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly laurent_shift(const LaurentPoly& p, int r) { return p.shifted(r); }
inline LaurentPoly laurent_substitute_power(const LaurentPoly& p, int e) { return p.substitute_power(e); }

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, lowest degree first.

namespace poly {

using RatPoly = std::vector<Rat>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Remainder of a modulo b (b nonzero).
inline RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  const int db = degree(b);
  const Rat& lead = b.back();
  while (degree(a) >= db) {
    Rat q = a.back() / lead;
    const int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

/// Resultant res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), by the Euclidean recurrence.
inline Rat resultant(RatPoly f, RatPoly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return Rat(0);
  Rat acc(1);
  for (;;) {
    const int df = degree(f);
    const int dg = degree(g);
    if (dg == 0) return acc * pow(g[0], static_cast<unsigned>(df));
    if (df == 0) return acc * pow(f[0], static_cast<unsigned>(dg));
    if (df < dg) {
      if ((df * dg) % 2 != 0) acc = -acc;
      std::swap(f, g);
      continue;
    }
    // res(f, g) = (-1)^{df dg} res(g, f) = (-1)^{df dg} lc(g)^{df - dr} res(g, r)
    RatPoly r = remainder(f, g);
    if (r.empty()) return Rat(0);
    const int dr = degree(r);
    if ((df * dg) % 2 != 0) acc = -acc;
    acc *= pow(g.back(), static_cast<unsigned>(df - dr));
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

inline int euler_phi(int m) {
  int result = m;
  int x = m;
  for (int q = 2; q * q <= x; ++q) {
    if (x % q == 0) {
      while (x % q == 0) x /= q;
      result -= result / q;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

/// Integer coefficients of Phi_m, lowest degree first.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error("cyclotomic polynomial needs m >= 1");
  static std::recursive_mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{k | m, k < m} Phi_k; exact division over Z.
  std::vector<std::int64_t> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int k = 1; k < m; ++k) {
    if (m % k != 0) continue;
    const std::vector<std::int64_t> div = cyclotomic_polynomial(k);
    // synthetic long division by the monic div
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
      std::int64_t q = num[i];
      quot[i - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * div[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(m, std::move(num)).first->second;
}

/// Phi_m evaluated at an integer.
inline BigInt cyclotomic_value(int m, std::int64_t x) {
  BigInt acc = 0;
  const auto& c = cyclotomic_polynomial(m);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Element of Q(zeta_m), zeta = exp(2 pi i / m), in the basis 1, zeta, ..., zeta^{phi(m)-1}.
class CycloNum {
 public:
  explicit CycloNum(int m = 1) : m_(m) {
    if (m < 1) throw Error("conductor must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(m)), Rat(0));
  }
  CycloNum(int m, const Rat& value) : CycloNum(m) { coeffs_[0] = value; }

  /// zeta^k for any integer k.
  static CycloNum zeta(int m, std::int64_t k = 1) {
    std::int64_t r = ((k % m) + m) % m;
    poly::RatPoly p(static_cast<std::size_t>(r) + 1, Rat(0));
    p[static_cast<std::size_t>(r)] = Rat(1);
    return from_poly(m, std::move(p));
  }

  /// Reduces an arbitrary polynomial in zeta modulo Phi_m.
  static CycloNum from_poly(int m, poly::RatPoly p) {
    CycloNum out(m);
    const auto& phi = cyclotomic_polynomial(m);
    poly::RatPoly mod(phi.begin(), phi.end());
    p = poly::remainder(std::move(p), mod);
    for (std::size_t i = 0; i < p.size(); ++i) out.coeffs_[i] = p[i];
    return out;
  }

  int conductor() const { return m_; }
  std::span<const Rat> coeffs() const { return coeffs_; }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r.is_zero(); });
  }
  bool is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& r) { return r.is_zero(); });
  }
  Rat rational_value() const {
    if (!is_rational()) throw Error("cyclotomic number is not rational: " + to_string());
    return coeffs_[0];
  }
  bool has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r.is_integer(); });
  }

  CycloNum& operator+=(const CycloNum& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CycloNum& operator-=(const CycloNum& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CycloNum& operator*=(const Rat& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator-(CycloNum a) { return a *= Rat(-1); }
  friend CycloNum operator*(CycloNum a, const Rat& k) { return a *= k; }
  friend CycloNum operator*(const Rat& k, CycloNum a) { return a *= k; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    poly::RatPoly prod(a.coeffs_.size() + b.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_poly(a.m_, std::move(prod));
  }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    return a.coeffs_ == b.coeffs_;
  }

  /// Field norm N_{Q(zeta_m)/Q}, computed as the resultant of Phi_m with the representative.
  Rat norm() const {
    if (is_zero()) return Rat(0);
    const auto& phi = cyclotomic_polynomial(m_);
    return poly::resultant(poly::RatPoly(phi.begin(), phi.end()), coeffs_);
  }

  /// Matrix of multiplication by this element in the power basis (column j = this * zeta^j).
  std::vector<std::vector<Rat>> multiplication_matrix() const {
    const std::size_t n = coeffs_.size();
    std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
      CycloNum col = *this * zeta(m_, static_cast<std::int64_t>(j));
      for (std::size_t i = 0; i < n; ++i) mat[i][j] = col.coeffs_[i];
    }
    return mat;
  }

  /// Multiplicative inverse; solves (mult-by-this) x = 1.
  CycloNum inverse() const {
    if (is_zero()) throw Error("inverse of zero in Q(zeta_m)");
    auto a = multiplication_matrix();
    const std::size_t n = a.size();
    std::vector<Rat> rhs(n, Rat(0));
    rhs[0] = Rat(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (a[piv][col].is_zero()) ++piv;
      std::swap(a[piv], a[col]);
      std::swap(rhs[piv], rhs[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col].is_zero()) continue;
        Rat f = a[r][col] / a[col][col];
        for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        rhs[r] -= f * rhs[col];
      }
    }
    CycloNum out(m_);
    for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = rhs[i] / a[i][i];
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!first) os << " + ";
      os << '(' << coeffs_[i] << ')';
      if (i > 0) os << "*z^" << i;
      first = false;
    }
    if (first) os << '0';
    return os.str();
  }

 private:
  void check(const CycloNum& o) const {
    if (o.m_ != m_) throw Error("conductor mismatch: " + std::to_string(m_) + " vs " + std::to_string(o.m_));
  }
  int m_;
  std::vector<Rat> coeffs_;
};

inline CycloNum cyclo_add(const CycloNum& a, const CycloNum& b) { return a + b; }
inline CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b) { return a * b; }
inline bool cyclo_eq(const CycloNum& a, const CycloNum& b) { return a == b; }
inline Rat cyclo_norm(const CycloNum& a) { return a.norm(); }

/// sum_j weights[j] * zeta^{exponents[j]}
inline CycloNum root_of_unity_sum(int m, std::span<const std::int64_t> exponents, std::span<const Rat> weights) {
  if (exponents.size() != weights.size()) throw Error("root_of_unity_sum: length mismatch");
  poly::RatPoly p(static_cast<std::size_t>(m), Rat(0));
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    std::int64_t r = ((exponents[j] % m) + m) % m;
    p[static_cast<std::size_t>(r)] += weights[j];
  }
  return CycloNum::from_poly(m, std::move(p));
}

}  // namespace cmpart
