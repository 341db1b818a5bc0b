#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "slh/cyclotomic.hpp"

using namespace slh;

namespace {

CycInt random_elem(std::mt19937_64& rng, long p, long bound = 20) {
  std::vector<mpz_class> raw(static_cast<std::size_t>(p - 1));
  for (auto& c : raw) c = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return CycInt::reduce(p, raw);
}

}  // namespace

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(check_prime(1), InvalidParameter);
  CHECK_THROWS_AS(check_prime(2), InvalidParameter);
  CHECK_THROWS_AS(check_prime(3), InvalidParameter);  // theory needs p >= 5
  CHECK_THROWS_AS(check_prime(4), InvalidParameter);
  CHECK_THROWS_AS(check_prime(9), InvalidParameter);
  CHECK_THROWS_AS(check_prime(91), InvalidParameter);  // 7*13
  for (long p : {5L, 7L, 11L, 13L, 101L}) CHECK_NOTHROW(check_prime(p));
}

TEST_CASE("canonical reduction") {
  CHECK(CycInt::zeta(7, 7) == CycInt::one(7));
  // vanishing sum of all p-th roots
  std::vector<mpz_class> all(7, 1);
  CHECK(CycInt::reduce(7, all).is_zero());
  // zeta^4 at p=5 folds to -1 - z - z^2 - z^3
  CycInt z4 = CycInt::zeta(5, 4);
  CycInt expected = -(CycInt::one(5) + CycInt::zeta(5, 1) + CycInt::zeta(5, 2) +
                      CycInt::zeta(5, 3));
  CHECK(z4 == expected);
}

TEST_CASE("ring operations") {
  long p = 7;
  CHECK((CycInt::one(p) - CycInt::zeta(p, 1)) + CycInt::zeta(p, 1) == CycInt::one(p));
  CHECK(CycInt::zeta(7, -5) == CycInt::zeta(7, 2));
  for (long q : {5L, 7L, 11L}) {
    CHECK(CycInt::zeta(q, 1) * CycInt::zeta(q, q - 1) == CycInt::one(q));
  }
  CHECK(CycInt::zeta(p, 3).pow(7) == CycInt::one(p));
  CHECK(CycInt::from_int(p, 2).is_integer());
  CHECK_FALSE(CycInt::zeta(p, 1).is_integer());
}

TEST_CASE("h-adic valuation") {
  CHECK(v_h(CycInt::zero(7)) == HValuation{});  // INFINITE
  for (long p : {5L, 7L, 11L, 13L})
    CHECK(v_h(CycInt::from_int(p, p)) == HValuation{p - 1});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    long k = 1 + static_cast<long>(rng() % 9999);
    if (k % 7 == 0) ++k;
    CHECK(v_h(CycInt::from_int(7, k)) == HValuation{0});
  }
  for (long m = 1; m <= 6; ++m)
    CHECK(v_h(CycInt::zeta(7, m) - CycInt::one(7)) == HValuation{1});
}

TEST_CASE("exact division by h") {
  long p = 7;
  CHECK(div_h_exact(h_elem(p), 1) == CycInt::one(p));
  CycInt z = div_h_exact(CycInt::from_int(p, p), p - 1);
  CHECK(v_h(z) == HValuation{0});
  CHECK(z.is_unit());
  CHECK_THROWS_AS(div_h_exact(CycInt::zeta(p, 1), 1), NonDivisible);
}

TEST_CASE("valuation laws on random elements") {
  std::mt19937_64 rng(11);
  long p = 7;
  for (int i = 0; i < 50; ++i) {
    CycInt x = random_elem(rng, p), y = random_elem(rng, p);
    HValuation vx = v_h(x), vy = v_h(y), vxy = v_h(x * y), vs = v_h(x + y);
    if (vx && vy) {
      REQUIRE(vxy.has_value());
      CHECK(*vxy == *vx + *vy);
      CHECK(val_at_least(vs, std::min(*vx, *vy)));
    }
  }
}

TEST_CASE("exact division in the ring") {
  std::mt19937_64 rng(13);
  long p = 7;
  for (int i = 0; i < 30; ++i) {
    CycInt x = random_elem(rng, p), y = random_elem(rng, p);
    if (y.is_zero()) continue;
    CHECK(div_exact(x * y, y) == x);
  }
  CHECK_THROWS_AS(div_exact(CycInt::one(p), CycInt::zero(p)), InvalidParameter);
  CHECK_THROWS_AS(div_exact(CycInt::one(p), h_elem(p)), NonDivisible);
}

TEST_CASE("quotient ring residues") {
  long p = 7;
  CHECK(HQuot::reduce(CycInt::zeta(p, 1), 1) == HQuot::one(p, 1));
  CHECK(HQuot::reduce(CycInt::from_int(p, p), p - 1).is_zero());
  CHECK(HQuot::reduce(CycInt::zero(p), 4).is_zero());
  // equal residues iff the difference has valuation >= m
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    CycInt x = random_elem(rng, p), y = random_elem(rng, p);
    long m = 1 + static_cast<long>(rng() % 6);
    bool eq = HQuot::reduce(x, m) == HQuot::reduce(y, m);
    CHECK(eq == val_at_least(v_h(x - y), m));
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(19);
  long p = 7;
  for (long m = 1; m <= 6; ++m) {
    for (int i = 0; i < 10; ++i) {
      CycInt x = random_elem(rng, p), y = random_elem(rng, p);
      CHECK(HQuot::reduce(x + y, m) == HQuot::reduce(x, m) + HQuot::reduce(y, m));
      CHECK(HQuot::reduce(x * y, m) == HQuot::reduce(x, m) * HQuot::reduce(y, m));
    }
  }
}

TEST_CASE("residue count is p^m") {
  CHECK(HLattice::get(5, 2)->residue_count() == 25);
  CHECK(HLattice::get(7, 3)->residue_count() == 343);
  // exhaustive enumeration at p=5, m=2: a box large enough to cover every
  // residue class hits exactly 25 canonical representatives
  std::set<std::vector<mpz_class>> seen;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = -6; c <= 6; ++c)
        for (long d = -6; d <= 6; ++d) {
          std::vector<mpz_class> raw = {a, b, c, d};
          seen.insert(HQuot::reduce(CycInt::reduce(5, raw), 2).rep());
        }
  CHECK(seen.size() == 25);
}

TEST_CASE("quotient units and inverses") {
  long p = 7;
  for (long m : {1L, 3L, 6L}) {
    HQuot u = HQuot::reduce(CycInt::zeta(p, 2) + CycInt::from_int(p, 1), m);
    if (u.is_unit()) CHECK(u * u.inverse() == HQuot::one(p, m));
    HQuot hh = HQuot::reduce(h_elem(p), m);
    CHECK_FALSE(hh.is_unit());
    CHECK_THROWS_AS(hh.inverse(), InvalidParameter);
  }
}

TEST_CASE("complex embedding") {
  long p = 7;
  using C = std::complex<double>;
  C z = embed(CycInt::zeta(p, 1), 1);
  C expect = std::polar(1.0, 2.0 * std::numbers::pi / 7.0);
  CHECK(std::abs(z - expect) < 1e-12);
  CHECK(std::abs(std::abs(embed(h_elem(p), 1)) - 2.0 * std::sin(std::numbers::pi / 7.0)) <
        1e-12);
  CHECK_THROWS_AS(embed(CycInt::one(p), 7), InvalidParameter);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    CycInt x = random_elem(rng, p, 1000000), y = random_elem(rng, p, 1000000);
    CHECK(std::abs(embed(x * y, 1) - embed(x, 1) * embed(y, 1)) <
          1e-9 * (1.0 + std::abs(embed(x, 1) * embed(y, 1))));
    CHECK(std::abs(embed(x + y, 1) - (embed(x, 1) + embed(y, 1))) < 1e-9);
  }
}

TEST_CASE("default embedding index tracks e^{i pi/6}") {
  CHECK(default_embedding_index(7) == 1);
  for (long p : {5L, 7L, 11L, 13L}) {
    long j = default_embedding_index(p);
    CHECK(j % p != 0);
    // no other admissible index gives a 2p-th root closer to e^{i pi/6}
    using C = std::complex<double>;
    C target = std::polar(1.0, std::numbers::pi / 6.0);
    double best = std::abs(std::polar(1.0, std::numbers::pi * static_cast<double>(j) /
                                               static_cast<double>(p)) -
                           target);
    for (long jj = 1; jj < 2 * p; jj += 2) {
      if (jj % p == 0) continue;
      double d = std::abs(std::polar(1.0, std::numbers::pi * static_cast<double>(jj) /
                                              static_cast<double>(p)) -
                          target);
      CHECK(best <= d + 1e-15);
    }
  }
}
