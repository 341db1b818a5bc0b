#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "slh/matrix.hpp"
#include "slh/words.hpp"

namespace slh {

/// The quantum representation of pi_1(S_{0,3}) on the 2-dimensional block,
/// with generator images over Z[zeta_p] (A^2 = zeta substitution applied).
/// Immutable after construction.
struct PantsRep {
  long p = 0;
  long j = 0;  // embedding index for numeric evaluations
  ExactMat Ma, Mb, Mc;
};

// j < 0 selects default_embedding_index(p).
PantsRep pants_rep(long p, long j = -1);

// Product of generator images, inverses via adjugate (projective semantics).
ExactMat eval_word(const PantsRep& rep, const GroupWord& w);

// Exact trace of the word's image with the adjugate determinant factor
// divided back out, so identities can be stated at the matrix level.
// The accumulated determinant of the inverted letters is a unit.
CycInt trace_normalized(const PantsRep& rep, const GroupWord& w);

struct Gamma3Result {
  std::array<char, 3> ordering;  // permutation of {'a','b','c'}
  bool inverted;                 // all three factors inverted
  CycInt scalar;                 // the diagonal value of the scalar product
  GroupWord gamma3_word;         // the {a,b}-word convention for gamma_3
};

// Searches the 12 ordered products of {Ma,Mb,Mc} (6 orderings, direct or
// all-inverted) for a scalar one; fixes the gamma_3 word convention.
// Throws ConventionFailure if none is scalar.
Gamma3Result gamma3_check(const PantsRep& rep);

struct TorsionEntry {
  GroupWord word;
  long order;  // finite by the simple-loop theorem; 0 never occurs
};

struct TorsionReport {
  std::vector<TorsionEntry> entries;
  bool all_finite;
};

// Orders of the boundary classes, their inverses, random powers and random
// conjugates; throws LawViolation if any simple word has infinite order.
TorsionReport simple_torsion_suite(const PantsRep& rep, int trials, std::uint64_t seed);

struct Disk {
  std::complex<double> center;
  double radius;
};

struct SchottkyCertificate {
  GroupWord w1, w2;
  long conj_power;    // w2 = a^t * w1 * a^{-t}
  long n1, n2;        // powers generating the Schottky pair
  std::array<Disk, 4> disks;  // src(g1), tgt(g1), src(g2), tgt(g2)
  int samples;
  bool verified;      // ping-pong mapping condition held at all samples
  std::complex<double> z0;          // finite fixed point of rho(gamma_1)
  std::array<bool, 4> reference_lambda_entry_match;  // row-major, vs the printed closed form
};

// Numeric ping-pong certificate for a free subgroup; throws Error when the
// bounded search is exhausted and InvalidParameter when rho(ab^{-1}) has
// finite order at this p.
SchottkyCertificate schottky_certificate(const PantsRep& rep, int samples = 1000);

}  // namespace slh
