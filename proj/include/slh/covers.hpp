#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "slh/hquot.hpp"
#include "slh/pantsrep.hpp"
#include "slh/words.hpp"

namespace slh {

/// Regular right action of the finite quotient on itself; coset 0 = identity.
struct CosetTable {
  std::size_t degree = 0;
  std::vector<std::size_t> act_a, act_b;  // right multiplication permutations
};

// Verifies bijectivity, transitivity and regularity of the action.
CosetTable coset_table(const FiniteImage& img);

/// Spanning-tree transversal and Schreier free basis of the point stabilizer
/// of coset 0 (rank = degree + 1 for F_2, by Nielsen-Schreier).
struct SchreierData {
  CosetTable table;
  std::vector<std::size_t> inv_a, inv_b;     // inverse permutations
  std::vector<GroupWord> transversal;        // one word per coset; coset 0 -> empty
  std::vector<GroupWord> basis;              // free generators, as words in {a,b}
  // basis index of the non-tree edge (coset, generator in {0:a, 1:b}), or
  // kTreeEdge for spanning-tree edges
  std::vector<std::array<std::size_t, 2>> edge_index;
  static constexpr std::size_t kTreeEdge = static_cast<std::size_t>(-1);
};

SchreierData schreier_basis(const CosetTable& t);

// Rewrites a subgroup word in the free basis; entries are +-(index+1).
// Throws NotAMember when w does not stabilize coset 0.
std::vector<long> rewrite(const SchreierData& s, const GroupWord& w);

// Exponent-sum vector of rewrite(s, w) in the basis; length = degree + 1.
std::vector<mpz_class> abelianized_vector(const SchreierData& s, const GroupWord& w);

/// Dense integer matrix, row major.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static IntMat identity(std::size_t n);

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

// Rows: for each boundary class s in {a, b, ab} (order o = its order in the
// image) and each transversal word r, the abelianized vector of r s^o r^{-1}.
// 3 * degree rows, degree + 1 columns.
IntMat simple_loop_matrix(const PantsRep& rep, const FiniteImage& img,
                          const SchreierData& s);

struct SmithResult {
  std::vector<mpz_class> diag;  // nonnegative, d1 | d2 | ...
  std::optional<IntMat> u, v;   // unimodular, u * A * v = diag(diag)
};

// Fraction-free Smith normal form with smallest-|pivot| selection.  U and V
// are accumulated only when requested (V is what lattice membership needs).
SmithResult smith_normal_form(const IntMat& m, bool want_u = false, bool want_v = true);

// Membership of vec in the lattice spanned by the rows of the matrix whose
// SNF (with V) is given.  vec length = column count of the original matrix.
bool in_row_lattice(const std::vector<mpz_class>& vec, const SmithResult& snf);

struct HomologyReport {
  long p = 0, k = 0, N = 0, e = 0;
  std::size_t degree = 0, rank = 0;           // rank = degree + 1
  std::vector<mpz_class> elementary_divisors;  // of H1 / H1^s, all of them
  bool proper = false;                         // some divisor != 1
  bool finite_index = false;
  mpz_class index;  // meaningful only when finite_index
  mpz_class bound;  // p^e
  bool bound_satisfied = false;  // index >= bound (vacuous when infinite)
  bool psi_witness_excluded = false;  // abelianized psi outside the row lattice
  bool certified_level = false;       // k == N
};

// The full pipeline at level k: BFS image (budget errors propagate), regular
// cover, Schreier basis, simple-loop matrix, SNF, divisors and the psi
// witness.  psi_witness_excluded is computed whenever psi lies in R_k.
HomologyReport homology_report(const PantsRep& rep, long k,
                               std::size_t bfs_cap = kDefaultBfsCap);

}  // namespace slh
