#include "slh/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace slh {

namespace {

bool is_odd_prime_ge5(long p) {
  if (p < 5 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// floor quotient for mpz
mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

void check_prime(long p) {
  if (!is_odd_prime_ge5(p))
    throw InvalidParameter("p must be an odd prime >= 5, got " + std::to_string(p));
}

CycInt CycInt::zero(long p) {
  check_prime(p);
  return CycInt(p, std::vector<mpz_class>(p - 1));
}

CycInt CycInt::one(long p) {
  CycInt r = zero(p);
  r.c_[0] = 1;
  return r;
}

CycInt CycInt::from_int(long p, const mpz_class& n) {
  CycInt r = zero(p);
  r.c_[0] = n;
  return r;
}

CycInt CycInt::zeta(long p, long e) {
  check_prime(p);
  long r = e % p;
  if (r < 0) r += p;
  std::vector<mpz_class> raw(static_cast<std::size_t>(r) + 1);
  raw.back() = 1;
  return reduce(p, raw);
}

CycInt CycInt::reduce(long p, std::span<const mpz_class> raw) {
  check_prime(p);
  // fold indices mod p, then eliminate zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
  std::vector<mpz_class> c(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < raw.size(); ++i) c[i % p] += raw[i];
  std::vector<mpz_class> out(static_cast<std::size_t>(p - 1));
  for (long i = 0; i < p - 1; ++i) out[i] = c[i] - c[p - 1];
  return CycInt(p, std::move(out));
}

void CycInt::check_same_p(const CycInt& o) const {
  if (p_ == 0 || o.p_ == 0) throw InvalidParameter("uninitialized CycInt");
  if (p_ != o.p_)
    throw InvalidParameter("mismatched cyclotomic fields: p=" + std::to_string(p_) +
                           " vs p=" + std::to_string(o.p_));
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x == 0; });
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_same_p(o);
  std::vector<mpz_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return CycInt(p_, std::move(r));
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same_p(o);
  std::vector<mpz_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return CycInt(p_, std::move(r));
}

CycInt CycInt::operator-() const {
  std::vector<mpz_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return CycInt(p_, std::move(r));
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same_p(o);
  std::vector<mpz_class> raw(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  return reduce(p_, raw);
}

CycInt CycInt::pow(unsigned long n) const {
  CycInt acc = one(p_);
  CycInt base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool CycInt::operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }

CycInt CycInt::conjugate(long k) const {
  long kr = k % p_;
  if (kr < 0) kr += p_;
  if (kr == 0 || std::gcd(kr, p_) != 1)
    throw InvalidParameter("conjugate index must be coprime to p");
  std::vector<mpz_class> raw(static_cast<std::size_t>(p_));
  for (long i = 0; i < p_ - 1; ++i) raw[(i * kr) % p_] += c_[i];
  return reduce(p_, raw);
}

mpz_class CycInt::norm() const {
  // product of all Galois conjugates; reduces to a rational integer
  CycInt prod = *this;
  for (long k = 2; k < p_; ++k) prod = prod * conjugate(k);
  if (!prod.is_integer())
    throw LawViolation("norm did not reduce to a rational integer");
  return prod.coeffs()[0];
}

bool CycInt::is_unit() const {
  if (is_zero()) return false;
  mpz_class n = norm();
  return n == 1 || n == -1;
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    mpz_class a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycInt h_elem(long p) { return CycInt::one(p) - CycInt::zeta(p, 1); }

namespace {

// One exact division step x / h.  x is divisible by h iff the coefficient
// sum vanishes mod p (Z[zeta]/h = F_p via zeta -> 1).  Returns nullopt when
// not divisible.  Division is done as polynomials: subtract a multiple of
// Phi_p(T) = 1 + T + ... + T^{p-1} to make the value at T=1 vanish, then
// divide by (1 - T).
std::optional<CycInt> try_div_h(const CycInt& x) {
  long p = x.p();
  mpz_class s = 0;
  for (const auto& a : x.coeffs()) s += a;
  if (s % p != 0) return std::nullopt;
  mpz_class c = s / p;
  std::vector<mpz_class> poly(static_cast<std::size_t>(p));
  for (long i = 0; i < p - 1; ++i) poly[i] = x.coeffs()[i] - c;
  poly[p - 1] = -c;
  // poly(1) == 0 now; q(T) with poly = (1 - T) q(T): q[i] = q[i-1] + poly[i]
  std::vector<mpz_class> q(static_cast<std::size_t>(p - 1));
  q[0] = poly[0];
  for (long i = 1; i < p - 1; ++i) q[i] = q[i - 1] + poly[i];
  if (poly[p - 1] != -q[p - 2])
    throw LawViolation("inconsistent remainder in division by h");
  return CycInt::reduce(p, q);
}

}  // namespace

HValuation v_h(const CycInt& x) {
  if (x.is_zero()) return std::nullopt;
  long v = 0;
  CycInt cur = x;
  for (;;) {
    auto next = try_div_h(cur);
    if (!next) return v;
    cur = *next;
    ++v;
  }
}

CycInt div_h_exact(const CycInt& x, long m) {
  if (m < 0) throw InvalidParameter("negative power of h");
  CycInt cur = x;
  for (long i = 0; i < m; ++i) {
    auto next = try_div_h(cur);
    if (!next)
      throw NonDivisible("v_h(x) < m: h^" + std::to_string(m) + " does not divide x");
    cur = *next;
  }
  return cur;
}

CycInt div_exact(const CycInt& x, const CycInt& y) {
  if (y.is_zero()) throw InvalidParameter("division by zero");
  long p = x.p();
  if (p != y.p()) throw InvalidParameter("mismatched cyclotomic fields in div_exact");
  // x / y = x * prod_{k>=2} sigma_k(y) / N(y)
  CycInt num = x;
  CycInt nrm = y;
  for (long k = 2; k < p; ++k) {
    CycInt cj = y.conjugate(k);
    num = num * cj;
    nrm = nrm * cj;
  }
  if (!nrm.is_integer()) throw LawViolation("norm not integral in div_exact");
  const mpz_class& n = nrm.coeffs()[0];
  std::vector<mpz_class> q(num.coeffs().size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (num.coeffs()[i] % n != 0)
      throw NonDivisible("quotient not in Z[zeta]");
    q[i] = num.coeffs()[i] / n;
  }
  return CycInt::reduce(p, q);
}

std::complex<double> embed(const CycInt& x, long j) {
  long p = x.p();
  long jr = ((j % p) + p) % p;
  if (jr == 0 || std::gcd(jr, p) != 1)
    throw InvalidParameter("embedding index must be coprime to p");
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(jr) / static_cast<double>(p);
  const std::complex<double> z(std::cos(theta), std::sin(theta));
  std::complex<double> acc(0.0, 0.0);
  std::complex<double> zi(1.0, 0.0);
  for (long i = 0; i < p - 1; ++i) {
    acc += x.coeffs()[i].get_d() * zi;
    zi *= z;
  }
  return acc;
}

long default_embedding_index(long p) {
  check_prime(p);
  const std::complex<double> target = std::polar(1.0, std::numbers::pi / 6.0);
  long best = 1;
  double best_dist = 1e300;
  for (long j = 1; j < 2 * p; j += 2) {
    if (std::gcd(j, p) != 1) continue;
    std::complex<double> a = std::polar(1.0, std::numbers::pi * static_cast<double>(j) / p);
    double d = std::abs(a - target);
    if (d < best_dist) {
      best_dist = d;
      best = j % p;  // embed() works mod p on zeta = A^2
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// HLattice / HQuot

HLattice::HLattice(long p, long m) : p_(p), m_(m) {
  check_prime(p);
  if (m < 1) throw InvalidParameter("quotient level must be >= 1");
  const long n = p - 1;
  CycInt hm = h_elem(p).pow(static_cast<unsigned long>(m));
  std::vector<std::vector<mpz_class>> work;
  for (long i = 0; i < n; ++i) {
    CycInt g = hm * CycInt::zeta(p, i);
    work.push_back(g.coeffs());
  }
  // column-style HNF, pivots chosen bottom row up; triangular result
  basis_.assign(static_cast<std::size_t>(n), {});
  for (long r = n - 1; r >= 0; --r) {
    for (;;) {
      std::vector<std::size_t> nz;
      for (std::size_t ci = 0; ci < work.size(); ++ci)
        if (work[ci][r] != 0) nz.push_back(ci);
      if (nz.size() <= 1) break;
      std::sort(nz.begin(), nz.end(), [&](std::size_t a, std::size_t b) {
        return abs(work[a][r]) < abs(work[b][r]);
      });
      auto& piv = work[nz[0]];
      for (std::size_t t = 1; t < nz.size(); ++t) {
        auto& col = work[nz[t]];
        mpz_class q = fdiv(col[r], piv[r]);
        if (q != 0)
          for (long i = 0; i < n; ++i) col[i] -= q * piv[i];
      }
    }
    std::size_t pidx = work.size();
    for (std::size_t ci = 0; ci < work.size(); ++ci)
      if (work[ci][r] != 0) pidx = ci;
    if (pidx == work.size())
      throw LawViolation("h^m lattice degenerated during HNF");
    auto piv = work[pidx];
    if (piv[r] < 0)
      for (auto& x : piv) x = -x;
    basis_[r] = std::move(piv);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(pidx));
    std::erase_if(work, [](const std::vector<mpz_class>& c) {
      return std::all_of(c.begin(), c.end(), [](const mpz_class& x) { return x == 0; });
    });
  }
}

std::shared_ptr<const HLattice> HLattice::get(long p, long m) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::shared_ptr<const HLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto lat = std::shared_ptr<const HLattice>(new HLattice(p, m));
  cache.emplace(key, lat);
  return lat;
}

std::vector<mpz_class> HLattice::reduce(std::span<const mpz_class> coords) const {
  const long n = p_ - 1;
  std::vector<mpz_class> v(coords.begin(), coords.end());
  v.resize(static_cast<std::size_t>(n));
  for (long r = n - 1; r >= 0; --r) {
    const auto& col = basis_[r];
    mpz_class q = fdiv(v[r], col[r]);
    if (q != 0)
      for (long i = 0; i <= r; ++i) v[i] -= q * col[i];
  }
  return v;
}

mpz_class HLattice::residue_count() const {
  mpz_class prod = 1;
  for (long r = 0; r < p_ - 1; ++r) prod *= basis_[r][r];
  return prod;
}

HQuot HQuot::zero(long p, long m) {
  auto lat = HLattice::get(p, m);
  return HQuot(lat, std::vector<mpz_class>(static_cast<std::size_t>(p - 1)));
}

HQuot HQuot::one(long p, long m) { return reduce(CycInt::one(p), m); }

HQuot HQuot::reduce(const CycInt& x, long m) {
  auto lat = HLattice::get(x.p(), m);
  return HQuot(lat, lat->reduce(x.coeffs()));
}

void HQuot::check_same_ring(const HQuot& o) const {
  if (!lat_ || !o.lat_) throw InvalidParameter("uninitialized HQuot");
  if (lat_->p() != o.lat_->p() || lat_->level() != o.lat_->level())
    throw InvalidParameter("mismatched quotient rings");
}

CycInt HQuot::lift() const { return CycInt::reduce(p(), rep_); }

HQuot HQuot::operator+(const HQuot& o) const {
  check_same_ring(o);
  std::vector<mpz_class> r(rep_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = rep_[i] + o.rep_[i];
  return HQuot(lat_, lat_->reduce(r));
}

HQuot HQuot::operator-(const HQuot& o) const {
  check_same_ring(o);
  std::vector<mpz_class> r(rep_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = rep_[i] - o.rep_[i];
  return HQuot(lat_, lat_->reduce(r));
}

HQuot HQuot::operator-() const {
  std::vector<mpz_class> r(rep_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -rep_[i];
  return HQuot(lat_, lat_->reduce(r));
}

HQuot HQuot::operator*(const HQuot& o) const {
  check_same_ring(o);
  CycInt prod = lift() * o.lift();
  return HQuot(lat_, lat_->reduce(prod.coeffs()));
}

bool HQuot::operator==(const HQuot& o) const {
  return lat_ && o.lat_ && lat_->p() == o.lat_->p() &&
         lat_->level() == o.lat_->level() && rep_ == o.rep_;
}

bool HQuot::is_zero() const {
  return std::all_of(rep_.begin(), rep_.end(), [](const mpz_class& x) { return x == 0; });
}

bool HQuot::is_unit() const {
  mpz_class s = 0;
  for (const auto& a : rep_) s += a;
  return s % p() != 0;
}

HQuot HQuot::inverse() const {
  if (!is_unit()) throw InvalidParameter("not a unit in Z[zeta]/h^m");
  const long pp = p();
  // start from the inverse in the residue field F_p (zeta -> 1), then
  // Newton-lift: x <- x (2 - u x), doubling h-adic precision each step
  mpz_class s = 0;
  for (const auto& a : rep_) s += a;
  mpz_class s0 = s % pp;
  if (s0 < 0) s0 += pp;
  mpz_class inv0;
  mpz_class pz = pp;
  if (mpz_invert(inv0.get_mpz_t(), s0.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw LawViolation("residue-field inversion failed for a unit");
  HQuot x = HQuot::reduce(CycInt::from_int(pp, inv0), level());
  HQuot two = HQuot::reduce(CycInt::from_int(pp, 2), level());
  HQuot one_q = HQuot::one(pp, level());
  for (int it = 0; it < 64; ++it) {
    HQuot ux = (*this) * x;
    if (ux == one_q) return x;
    x = x * (two - ux);
  }
  throw LawViolation("Newton inversion did not converge");
}

HQuot HQuot::one_like() const { return HQuot::one(p(), level()); }
HQuot HQuot::zero_like() const { return HQuot::zero(p(), level()); }

}  // namespace slh
