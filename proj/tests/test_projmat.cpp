#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "slh/matrix.hpp"
#include "slh/pantsrep.hpp"

using namespace slh;

namespace {

std::vector<GroupWord> all_reduced_words(std::size_t max_len) {
  std::vector<GroupWord> out = {GroupWord()};
  std::vector<std::vector<Letter>> layer = {{}};
  const Letter alphabet[4] = {1, -1, 2, -2};
  for (std::size_t l = 0; l < max_len; ++l) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (Letter x : alphabet) {
        if (!w.empty() && w.back() == -x) continue;
        auto v = w;
        v.push_back(x);
        out.emplace_back(v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("matrix basics") {
  PantsRep r = pants_rep(7);
  ExactMat id = r.Ma.identity_like();
  CHECK(id * r.Ma == r.Ma);
  CHECK(r.Ma * id == r.Ma);
  // adjugate identity
  ExactMat adj = adjugate(r.Mb);
  CHECK(adj.e[0] == r.Mb.e[3]);
  CHECK(adj.e[1] == -r.Mb.e[1]);
  CHECK(adj.e[2] == -r.Mb.e[2]);
  CHECK(adj.e[3] == r.Mb.e[0]);
  // triangular determinant: det(Ma) = zeta^{-6} = zeta for p = 7
  CHECK(det(r.Ma) == CycInt::zeta(7, -6));
  CHECK(det(r.Ma) == CycInt::zeta(7, 1));
  // adjugate round-trip is projectively the identity
  for (const ExactMat& m : {r.Ma, r.Mb, r.Mc, r.Ma * r.Mb})
    CHECK(proj_equal(adjugate(m) * m, id));
}

TEST_CASE("projective equality") {
  PantsRep r = pants_rep(7);
  CycInt z = CycInt::zeta(7, 1);
  ExactMat zM = ExactMat::from_rows(z * r.Ma.e[0], z * r.Ma.e[1], z * r.Ma.e[2],
                                    z * r.Ma.e[3]);
  CHECK(proj_equal(r.Ma, zM));
  CycInt h = h_elem(7);
  ExactMat hM = ExactMat::from_rows(h * r.Ma.e[0], h * r.Ma.e[1], h * r.Ma.e[2],
                                    h * r.Ma.e[3]);
  CHECK_FALSE(proj_equal(r.Ma, hM));
  CHECK_FALSE(proj_equal(r.Ma, r.Mb));
}

TEST_CASE("projective h-depth") {
  PantsRep r = pants_rep(7);
  ExactMat id = r.Ma.identity_like();
  CHECK_FALSE(proj_h_depth(id).has_value());
  CycInt z = CycInt::zeta(7, 1);
  ExactMat zI = ExactMat::from_rows(z, CycInt::zero(7), CycInt::zero(7), z);
  CHECK_FALSE(proj_h_depth(zI).has_value());
  CHECK(proj_h_depth(r.Ma) == HValuation{1});

  // unit-rescaling invariance on random words
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Letter> ls;
    for (int i = 0; i < 6; ++i) ls.push_back(static_cast<Letter>((rng() % 2 + 1) *
                                                                 (rng() % 2 ? 1 : -1)));
    ExactMat m = eval_word(r, GroupWord(ls));
    CycInt u = CycInt::zeta(7, static_cast<long>(rng() % 7));
    ExactMat um = ExactMat::from_rows(u * m.e[0], u * m.e[1], u * m.e[2], u * m.e[3]);
    CHECK(proj_h_depth(m) == proj_h_depth(um));
  }
}

TEST_CASE("depth filtration under multiplication") {
  // I + h^k X perturbations: depth(M M') >= min(depth M, depth M')
  long p = 7;
  std::mt19937_64 rng(5);
  auto perturbation = [&](long k) {
    CycInt hk = CycInt::one(p);
    for (long i = 0; i < k; ++i) hk = hk * h_elem(p);
    auto rnd = [&]() {
      std::vector<mpz_class> raw(6);
      for (auto& c : raw) c = static_cast<long>(rng() % 7) - 3;
      return hk * CycInt::reduce(p, raw);
    };
    return ExactMat::from_rows(CycInt::one(p) + rnd(), rnd(), rnd(),
                               CycInt::one(p) + rnd());
  };
  for (int t = 0; t < 20; ++t) {
    long k1 = 1 + static_cast<long>(rng() % 3), k2 = 1 + static_cast<long>(rng() % 3);
    ExactMat a = perturbation(k1), b = perturbation(k2);
    HValuation da = proj_h_depth(a), db = proj_h_depth(b), dab = proj_h_depth(a * b);
    if (da && db) CHECK(val_at_least(dab, std::min(*da, *db)));
  }
}

TEST_CASE("order bound") {
  CHECK(order_bound(5) == 30);
  CHECK(order_bound(7) == 42);
  for (long p : {5L, 7L, 11L, 13L}) CHECK(order_bound(p) >= 2 * p);
}

TEST_CASE("projective order") {
  PantsRep r = pants_rep(7);
  CHECK(proj_order(r.Ma.identity_like(), 7) == 1);
  CHECK(proj_order(r.Ma, 7) == 7);
  CHECK_FALSE(proj_order(eval_word(r, GroupWord::parse("aB")), 7).has_value());
}

TEST_CASE("spectral certificate") {
  PantsRep r = pants_rep(7);
  CHECK(spectral_certificate(r.Ma.identity_like(), 1).margin < 1e-12);
  CHECK(spectral_certificate(r.Ma, 1).margin < kOnCircleMargin);
  SpectralCertificate sc = spectral_certificate(eval_word(r, GroupWord::parse("aB")), 1);
  CHECK(sc.margin > 1e-3);
  CHECK(sc.abs_trace == doctest::Approx(3.6920214716).epsilon(1e-9));
}

TEST_CASE("order decision agrees with the numeric margin on short words") {
  // finite projective order <=> the eigenvalue ratio is a root of unity <=>
  // (by Kronecker) every embedding puts the ratio on the unit circle
  PantsRep r = pants_rep(7);
  for (const GroupWord& w : all_reduced_words(6)) {
    ExactMat m = eval_word(r, w);
    bool finite = proj_order(m, 7).has_value();
    double max_margin = 0.0;
    for (long j = 1; j <= 6; ++j)
      max_margin = std::max(max_margin, spectral_certificate(m, j).margin);
    if (finite)
      CHECK(max_margin < kOnCircleMargin);
    else
      CHECK(max_margin > kOffCircleMargin);
  }
}

TEST_CASE("quotient canonical forms") {
  long p = 7;
  PantsRep r = pants_rep(p);
  auto reduceq = [&](const ExactMat& m, long lvl) {
    return QuotMat::from_rows(HQuot::reduce(m.e[0], lvl), HQuot::reduce(m.e[1], lvl),
                              HQuot::reduce(m.e[2], lvl), HQuot::reduce(m.e[3], lvl));
  };
  QuotMat id = reduceq(r.Ma.identity_like(), 2);
  CHECK(proj_canonical(id) == id);
  // scalar zeta*I mod h^2 canonicalizes to I
  CycInt z = CycInt::zeta(p, 1);
  QuotMat zi = reduceq(ExactMat::from_rows(z, CycInt::zero(p), CycInt::zero(p), z), 2);
  CHECK(proj_canonical(zi) == id);
  // canonical(u*M) == canonical(M) for units u
  QuotMat m = reduceq(r.Mb, 3);
  for (long e = 1; e < 7; ++e) {
    HQuot u = HQuot::reduce(CycInt::zeta(p, e), 3);
    QuotMat um = QuotMat::from_rows(u * m.e[0], u * m.e[1], u * m.e[2], u * m.e[3]);
    CHECK(canonical_key(proj_canonical(um)) == canonical_key(proj_canonical(m)));
  }
  // quotient inverse round-trip
  QuotMat inv = quot_inverse(m);
  CHECK(proj_canonical(inv * m) == proj_canonical(m.identity_like()));
  // non-unit determinant is rejected
  QuotMat hh = reduceq(ExactMat::from_rows(h_elem(p), CycInt::zero(p), CycInt::zero(p),
                                           h_elem(p)),
                       3);
  CHECK_THROWS_AS(quot_inverse(hh), SingularMatrix);
}
