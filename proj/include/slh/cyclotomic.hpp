#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slh/errors.hpp"

namespace slh {

void check_prime(long p);  // throws InvalidParameter unless p is an odd prime >= 5

// Valuation values: std::nullopt means INFINITE (only v_h(0)).
using HValuation = std::optional<long>;

// True when v >= m, treating nullopt as +infinity.
inline bool val_at_least(HValuation v, long m) { return !v.has_value() || *v >= m; }

/// Element of Z[zeta_p] in the power basis {1, zeta, ..., zeta^{p-2}}.
/// Immutable after construction; all arithmetic is exact.
class CycInt {
 public:
  CycInt() = default;  // invalid placeholder (p = 0); usable only as a container slot

  static CycInt zero(long p);
  static CycInt one(long p);
  static CycInt from_int(long p, const mpz_class& n);
  // zeta^e for any integer e (zeta is a unit, so negative e is fine)
  static CycInt zeta(long p, long e);
  // Canonical reduction of a raw coefficient vector indexed by powers of zeta
  // (any length; indices are taken mod p, then zeta^{p-1} is folded away).
  static CycInt reduce(long p, std::span<const mpz_class> raw);

  long p() const { return p_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_integer() const;  // lies in Z (all coeffs above zeta^0 vanish)

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator-() const;
  CycInt pow(unsigned long n) const;
  bool operator==(const CycInt& o) const;

  // Galois conjugate zeta -> zeta^k, gcd(k, p) = 1.
  CycInt conjugate(long k) const;
  // Field norm N(x) = prod of all conjugates; a rational integer.
  mpz_class norm() const;
  bool is_unit() const;  // |norm| == 1

  std::string str() const;  // human-readable polynomial in zeta

  CycInt one_like() const { return one(p_); }
  CycInt zero_like() const { return zero(p_); }

 private:
  CycInt(long p, std::vector<mpz_class> c) : p_(p), c_(std::move(c)) {}
  void check_same_p(const CycInt& o) const;

  long p_ = 0;
  std::vector<mpz_class> c_;  // length p-1
};

// h = 1 - zeta_p, the prime above p.
CycInt h_elem(long p);

// h-adic valuation by exact repeated division; nullopt for x = 0.
HValuation v_h(const CycInt& x);

// y with x = h^m * y exactly; throws NonDivisible when v_h(x) < m.
CycInt div_h_exact(const CycInt& x, long m);

// Exact quotient x / y in Z[zeta_p]; throws NonDivisible when y does not
// divide x in the ring (and InvalidParameter for y = 0).
CycInt div_exact(const CycInt& x, const CycInt& y);

// Numeric evaluation at zeta -> e^{2*pi*i*j/p}, gcd(j, p) = 1.
// Summation order is fixed (ascending powers) for reproducibility.
std::complex<double> embed(const CycInt& x, long j);

// Odd j coprime to p minimizing |e^{i*pi*j/p} - e^{i*pi/6}|, so that
// A_p = e^{i*pi*j/p} is a primitive 2p-th root of unity near e^{i*pi/6}.
long default_embedding_index(long p);

/// HNF basis of the sublattice h^m * Z[zeta_p] in power-basis coordinates.
/// Shared and cached per (p, m); reduction gives the unique canonical
/// representative of a residue class mod h^m.
class HLattice {
 public:
  static std::shared_ptr<const HLattice> get(long p, long m);

  long p() const { return p_; }
  long level() const { return m_; }
  std::vector<mpz_class> reduce(std::span<const mpz_class> coords) const;
  mpz_class residue_count() const;  // product of HNF diagonal; equals p^m

 private:
  HLattice(long p, long m);
  long p_, m_;
  // basis_[r] is triangular: zero above row r, positive diagonal at row r
  std::vector<std::vector<mpz_class>> basis_;
};

/// Canonical residue in Z[zeta_p] / h^m. Immutable.
class HQuot {
 public:
  HQuot() = default;

  static HQuot zero(long p, long m);
  static HQuot one(long p, long m);
  // reduce_mod_hm
  static HQuot reduce(const CycInt& x, long m);

  long p() const { return lat_ ? lat_->p() : 0; }
  long level() const { return lat_ ? lat_->level() : 0; }
  const std::vector<mpz_class>& rep() const { return rep_; }
  CycInt lift() const;  // the canonical representative as an exact element

  HQuot operator+(const HQuot& o) const;
  HQuot operator-(const HQuot& o) const;
  HQuot operator*(const HQuot& o) const;
  HQuot operator-() const;
  bool operator==(const HQuot& o) const;

  bool is_zero() const;
  // Unit in the local ring Z[zeta]/h^m: nonzero image in the residue field.
  bool is_unit() const;
  HQuot inverse() const;  // Newton iteration; throws SingularMatrix-free InvalidParameter on non-unit

  // Ring-mates with the same (p, m); used by generic matrix code.
  HQuot one_like() const;
  HQuot zero_like() const;

 private:
  HQuot(std::shared_ptr<const HLattice> lat, std::vector<mpz_class> rep)
      : lat_(std::move(lat)), rep_(std::move(rep)) {}
  void check_same_ring(const HQuot& o) const;

  std::shared_ptr<const HLattice> lat_;
  std::vector<mpz_class> rep_;
};

}  // namespace slh
