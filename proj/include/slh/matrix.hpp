#pragma once

#include <array>
#include <complex>
#include <string>

#include "slh/cyclotomic.hpp"
#include "slh/errors.hpp"

namespace slh {

/// 2x2 matrix over an exact ring (CycInt or HQuot), with projective
/// (up-to-unit-scalar) semantics supplied by the free functions below.
template <class R>
struct Mat2 {
  std::array<R, 4> e;  // row-major

  const R& at(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  R& at(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 from_rows(R a, R b, R c, R d) { return Mat2{{std::move(a), std::move(b), std::move(c), std::move(d)}}; }

  Mat2 operator*(const Mat2& o) const {
    return from_rows(e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                     e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]);
  }

  bool operator==(const Mat2& o) const { return e == o.e; }

  Mat2 identity_like() const {
    R one = e[0].one_like();
    R zero = e[0].zero_like();
    return from_rows(one, zero, zero, e[0].one_like());
  }
};

template <class R>
Mat2<R> adjugate(const Mat2<R>& m) {
  return Mat2<R>::from_rows(m.e[3], -m.e[1], -m.e[2], m.e[0]);
}

template <class R>
R det(const Mat2<R>& m) {
  return m.e[0] * m.e[3] - m.e[1] * m.e[2];
}

template <class R>
R trace(const Mat2<R>& m) {
  return m.e[0] + m.e[3];
}

template <class R>
bool is_scalar(const Mat2<R>& m) {
  return m.e[1].is_zero() && m.e[2].is_zero() && (m.e[0] - m.e[3]).is_zero();
}

template <class R>
Mat2<R> mat_pow(const Mat2<R>& m, unsigned long n) {
  Mat2<R> acc = m.identity_like();
  Mat2<R> base = m;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

using ExactMat = Mat2<CycInt>;
using QuotMat = Mat2<HQuot>;

// --- exact-ring projective operations ---------------------------------------

// True iff M = u*N for a unit u of Z[zeta_p].  Cross-multiplication
// proportionality plus a two-sided exact-division unit check; no division
// happens unless the matrices are proportional.
bool proj_equal(const ExactMat& m, const ExactMat& n);

// min(v_h(M12), v_h(M21), v_h(M11 - M22)); INFINITE (nullopt) iff scalar.
// Well-defined up to unit rescaling provided some entry has v_h = 0.
HValuation proj_h_depth(const ExactMat& m);

// max{ n : phi(n) <= 2(p-1) }; any finite projective order is bounded by this.
long order_bound(long p);

// Smallest n <= order_bound(p) with M^n scalar, else nullopt (INFINITE).
std::optional<long> proj_order(const ExactMat& m, long p);

struct SpectralCertificate {
  double abs_l1, abs_l2;  // eigenvalue moduli at the chosen embedding
  double margin;          // | |l1/l2| - 1 |
  double abs_trace;       // |trace| after det-normalization
};

// Numeric eigenvalue data of embed(M, j); margin > 1e-6 witnesses infinite
// projective order (always cross-checked against proj_order in callers).
SpectralCertificate spectral_certificate(const ExactMat& m, long j);

inline constexpr double kOffCircleMargin = 1e-6;
inline constexpr double kOnCircleMargin = 1e-9;

// --- quotient-ring operations ------------------------------------------------

// Scales by the inverse of the first unit entry in row-major order, making it
// 1.  Canonical: proj-equal matrices over the local quotient ring have equal
// canonical forms.  Requires a unit entry (guaranteed by unit determinant).
QuotMat proj_canonical(const QuotMat& m);

// adj(M) * det(M)^{-1}; throws SingularMatrix when det is not a unit.
QuotMat quot_inverse(const QuotMat& m);

// Dedup key for BFS closure: decimal coefficients of the canonical form.
std::string canonical_key(const QuotMat& m);

}  // namespace slh
