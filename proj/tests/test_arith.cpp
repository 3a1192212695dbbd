#include <complex>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cmpart/arith.hpp"

using namespace cmpart;

namespace {

// Fraction-free determinant over the rationals, independent of the resultant code.
Rat determinant(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Phi_m by multiplying (x - w) over primitive roots numerically, then rounding.
std::vector<std::int64_t> numeric_cyclotomic(int m) {
  std::vector<std::complex<double>> p{1.0};
  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    auto w = std::polar(1.0, 2 * M_PI * k / m);
    std::vector<std::complex<double>> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= w * p[i];
    }
    p = q;
  }
  std::vector<std::int64_t> out;
  for (auto c : p) out.push_back(std::llround(c.real()));
  return out;
}

CycloNum random_cyclo(int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  poly::RatPoly p;
  for (int i = 0; i < m; ++i) p.push_back(Rat(BigInt(num(rng)), BigInt(den(rng))));
  return CycloNum::from_poly(m, p);
}

}  // namespace

TEST(Rat, ParseAndReduce) {
  EXPECT_EQ(Rat::parse("3/6"), Rat(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rat::parse("-4"), Rat(-4));
  EXPECT_EQ(Rat::parse(" 2/-4 ").to_string(), "-1/2");
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat::parse("abc"), Error);
  EXPECT_THROW(Rat::parse(""), Error);
  EXPECT_EQ((Rat(1) / Rat(3) + Rat(BigInt(1), BigInt(6))).to_string(), "1/2");
  EXPECT_THROW(Rat(1) / Rat(0), Error);
}

TEST(Laurent, SpecExamples) {
  EXPECT_EQ(laurent_shift(LaurentPoly::monomial(0), 3), LaurentPoly::monomial(3));
  auto p = LaurentPoly::monomial(-1) + LaurentPoly::monomial(1);
  auto q = laurent_add(p, LaurentPoly::monomial(1, -1));
  EXPECT_EQ(q, LaurentPoly::monomial(-1));
  EXPECT_EQ(q.terms().size(), 1u);
  auto one_plus = LaurentPoly::monomial(0) + LaurentPoly::monomial(1);
  auto one_minus = LaurentPoly::monomial(0) - LaurentPoly::monomial(1);
  EXPECT_EQ(laurent_mul(one_plus, one_minus), LaurentPoly::monomial(0) - LaurentPoly::monomial(2));
  auto sym = LaurentPoly::from_terms({{-1, 1}, {0, 2}, {1, 1}});
  EXPECT_EQ(laurent_substitute_power(sym, 3), LaurentPoly::from_terms({{-3, 1}, {0, 2}, {3, 1}}));
  EXPECT_EQ(laurent_substitute_power(sym, 1), sym);
  EXPECT_THROW(sym.substitute_power(0), Error);
}

TEST(Laurent, CanonicalFormHasNoZeroes) {
  auto p = LaurentPoly::from_terms({{0, 0}, {2, 3}});
  EXPECT_EQ(p.terms().size(), 1u);
  auto z = p - p;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(0 * p, LaurentPoly());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Laurent, SubstitutionInjectiveExhaustive) {
  for (int e : {2, 3}) {
    std::set<LaurentPoly> images;
    int count = 0;
    std::vector<int> c(7, 0);
    for (;;) {
      LaurentPoly::Terms t;
      for (int i = 0; i < 7; ++i) t[i - 3] = c[static_cast<std::size_t>(i)];
      images.insert(LaurentPoly::from_terms(t).substitute_power(e));
      ++count;
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == 3) c[i++] = 0;
      if (i == c.size()) break;
    }
    EXPECT_EQ(count, 2187);
    EXPECT_EQ(images.size(), 2187u);
  }
}

TEST(Cyclotomic, PolynomialsMatchNumericProduct) {
  for (int m = 1; m <= 30; ++m) EXPECT_EQ(cyclotomic_polynomial(m), numeric_cyclotomic(m)) << "m=" << m;
}

TEST(Cyclotomic, ValueAtOne) {
  // Phi_m(1) = q for m a power of the prime q, else 1 (m > 1)
  EXPECT_EQ(cyclotomic_value(2, 1), 2);
  EXPECT_EQ(cyclotomic_value(4, 1), 2);
  EXPECT_EQ(cyclotomic_value(9, 1), 3);
  EXPECT_EQ(cyclotomic_value(6, 1), 1);
  EXPECT_EQ(cyclotomic_value(12, 1), 1);
}

TEST(CycloNum, SpecExamples) {
  EXPECT_EQ(cyclo_mul(CycloNum::zeta(4), CycloNum::zeta(4)), CycloNum(4, Rat(-1)));
  auto s = CycloNum(3, Rat(1)) + CycloNum::zeta(3) + CycloNum::zeta(3, 2);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(CycloNum::zeta(5, 5), CycloNum(5, Rat(1)));
  EXPECT_EQ(CycloNum::zeta(5, -1), CycloNum::zeta(5, 4));
  EXPECT_THROW(cyclo_add(CycloNum(3), CycloNum(4)), Error);
}

TEST(CycloNum, NormExamples) {
  auto one_minus = [](int m) { return CycloNum(m, Rat(1)) - CycloNum::zeta(m); };
  EXPECT_EQ(cyclo_norm(one_minus(2)), Rat(2));
  EXPECT_EQ(cyclo_norm(one_minus(6)), Rat(1));
  EXPECT_EQ(cyclo_norm(one_minus(4)), Rat(2));
  EXPECT_EQ(cyclo_norm(CycloNum(4, Rat(1)) - CycloNum::zeta(4, 2)), Rat(4));
  EXPECT_EQ(cyclo_norm(CycloNum(7)), Rat(0));
  EXPECT_EQ(cyclo_norm(CycloNum(5, Rat(3))), Rat(81));
}

TEST(CycloNum, NormIsDeterminantOfMultiplication) {
  std::mt19937 rng(11);
  for (int m = 1; m <= 15; ++m)
    for (int t = 0; t < 6; ++t) {
      auto a = random_cyclo(m, rng);
      EXPECT_EQ(a.norm(), determinant(a.multiplication_matrix())) << "m=" << m << " a=" << a.to_string();
    }
}

TEST(CycloNum, NormOfOneMinusZetaIsPhiAtOne) {
  for (int m = 2; m <= 40; ++m) {
    auto a = CycloNum(m, Rat(1)) - CycloNum::zeta(m);
    EXPECT_EQ(a.norm(), Rat(BigInt(cyclotomic_value(m, 1)), BigInt(1))) << "m=" << m;
  }
}

TEST(CycloNum, NormMultiplicativeAndInverse) {
  std::mt19937 rng(5);
  for (int m : {3, 5, 7, 8, 9, 12}) {
    for (int t = 0; t < 5; ++t) {
      auto a = random_cyclo(m, rng), b = random_cyclo(m, rng);
      EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycloNum(m, Rat(1)));
      }
    }
  }
  EXPECT_THROW(CycloNum(5).inverse(), Error);
}

TEST(CycloNum, RootOfUnitySums) {
  std::vector<std::int64_t> e1{0, 1};
  std::vector<Rat> w1{Rat(1), Rat(1)};
  EXPECT_TRUE(root_of_unity_sum(2, e1, w1).is_zero());
  std::vector<std::int64_t> e2{0, 0};
  std::vector<Rat> w2{Rat(BigInt(1), BigInt(2)), Rat(BigInt(1), BigInt(2))};
  EXPECT_EQ(root_of_unity_sum(3, e2, w2), CycloNum(3, Rat(1)));
  std::vector<std::int64_t> e3{1, 3};
  EXPECT_TRUE(root_of_unity_sum(4, e3, w1).is_zero());
  std::vector<std::int64_t> e4{1};
  EXPECT_THROW(root_of_unity_sum(4, e4, w1), Error);
}

TEST(CycloNum, SumOfAllRootsVanishes) {
  for (int m = 2; m <= 20; ++m) {
    CycloNum acc(m);
    for (int k = 0; k < m; ++k) acc += CycloNum::zeta(m, k);
    EXPECT_TRUE(acc.is_zero()) << m;
  }
}
