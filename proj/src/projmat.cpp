#include "slh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace slh {

bool proj_equal(const ExactMat& m, const ExactMat& n) {
  // proportionality of all entry pairs by cross-multiplication
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(m.e[i] * n.e[j] - m.e[j] * n.e[i]).is_zero()) return false;
  int idx = -1;
  for (int i = 0; i < 4; ++i)
    if (!n.e[i].is_zero()) { idx = i; break; }
  if (idx < 0)  // n == 0; proportionality forces m == 0 unless n vanished alone
    return std::all_of(m.e.begin(), m.e.end(), [](const CycInt& x) { return x.is_zero(); });
  if (m.e[idx].is_zero()) return false;
  // the scalar must be a unit: both quotients must land in the ring
  try {
    CycInt u = div_exact(m.e[idx], n.e[idx]);
    CycInt v = div_exact(n.e[idx], m.e[idx]);
    return (u * v) == CycInt::one(u.p());
  } catch (const NonDivisible&) {
    return false;
  }
}

HValuation proj_h_depth(const ExactMat& m) {
  if (is_scalar(m)) return std::nullopt;
  HValuation d12 = v_h(m.e[1]);
  HValuation d21 = v_h(m.e[2]);
  HValuation dd = v_h(m.e[0] - m.e[3]);
  long best = -1;
  bool any = false;
  for (HValuation v : {d12, d21, dd}) {
    if (!v) continue;
    if (!any || *v < best) best = *v;
    any = true;
  }
  // non-scalar matrix: at least one of the three is finite
  return best;
}

namespace {

long euler_phi(long n) {
  long r = n;
  long m = n;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      r -= r / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

}  // namespace

long order_bound(long p) {
  check_prime(p);
  const long limit = 4 * (p - 1) * (p - 1);  // safe: phi(n) >= sqrt(n/2)
  long best = 1;
  for (long n = 1; n <= limit; ++n)
    if (euler_phi(n) <= 2 * (p - 1)) best = n;
  return best;
}

std::optional<long> proj_order(const ExactMat& m, long p) {
  const long nmax = order_bound(p);
  ExactMat acc = m.identity_like();
  for (long n = 1; n <= nmax; ++n) {
    acc = acc * m;
    if (is_scalar(acc)) return n;
  }
  return std::nullopt;
}

SpectralCertificate spectral_certificate(const ExactMat& m, long j) {
  using C = std::complex<double>;
  C a = embed(m.e[0], j), b = embed(m.e[1], j);
  C c = embed(m.e[2], j), d = embed(m.e[3], j);
  C dt = a * d - b * c;
  C tr = a + d;
  C disc = std::sqrt(tr * tr - 4.0 * dt);
  C l1 = (tr + disc) / 2.0;
  C l2 = (tr - disc) / 2.0;
  double a1 = std::abs(l1), a2 = std::abs(l2);
  if (a1 < a2) std::swap(a1, a2);
  double margin;
  if (a2 == 0.0) {
    margin = a1;  // degenerate; never hits for unit-determinant words
  } else {
    margin = std::abs(a1 / a2 - 1.0);
  }
  double abs_tr = std::abs(tr) / std::sqrt(std::abs(dt));
  return SpectralCertificate{a1, a2, margin, abs_tr};
}

QuotMat proj_canonical(const QuotMat& m) {
  for (int i = 0; i < 4; ++i) {
    if (m.e[i].is_unit()) {
      HQuot inv = m.e[i].inverse();
      return QuotMat::from_rows(inv * m.e[0], inv * m.e[1], inv * m.e[2], inv * m.e[3]);
    }
  }
  throw LawViolation("no unit entry; determinant cannot be a unit");
}

QuotMat quot_inverse(const QuotMat& m) {
  HQuot d = det(m);
  if (!d.is_unit()) throw SingularMatrix("determinant is not a unit in the quotient ring");
  HQuot di = d.inverse();
  QuotMat a = adjugate(m);
  return QuotMat::from_rows(di * a.e[0], di * a.e[1], di * a.e[2], di * a.e[3]);
}

std::string canonical_key(const QuotMat& m) {
  std::ostringstream os;
  for (const auto& x : m.e) {
    for (const auto& c : x.rep()) os << c.get_str() << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace slh
