#pragma once

#include <cstddef>
#include <vector>

#include "slh/matrix.hpp"
#include "slh/pantsrep.hpp"
#include "slh/words.hpp"

namespace slh {

inline constexpr std::size_t kDefaultBfsCap = 1'000'000;

// Entrywise reduction of a matrix to Z[zeta_p]/h^m.
QuotMat reduce_mat(const ExactMat& m, long m_level);

/// Generator images mod h^{k+1}, in canonical projective form.
struct ReducedGens {
  long p, k;
  QuotMat a, b;
};

ReducedGens reduce_rep(const PantsRep& rep, long k);

/// The finite image of the level-k reduction: all canonical projective forms,
/// reachable from the identity, with the right-multiplication permutations of
/// the generators.  Element order is BFS order (layer, then insertion) and is
/// deterministic.  Immutable once built.
struct FiniteImage {
  long p = 0, k = 0;
  std::vector<QuotMat> elements;
  std::size_t identity_index = 0;
  // right multiplication by a, a^{-1}, b, b^{-1}
  std::array<std::vector<std::size_t>, 4> gen_action;
  std::size_t order() const { return elements.size(); }
};

// Throws BudgetExceeded (carrying the partial count) past `cap` elements.
FiniteImage image_bfs(const PantsRep& rep, long k, std::size_t cap = kDefaultBfsCap);

// Word evaluation directly in the quotient ring mod h^m (reduction is a ring
// homomorphism); inverses via adjugate, as in eval_word.  Much cheaper than
// exact evaluation for long words when only the depth mod h^m is needed.
QuotMat eval_word_mod(const PantsRep& rep, const GroupWord& w, long m_level);

// Smallest n >= 1 with proj_h_depth(rho(w)^n) >= k+1, i.e. the order of w in
// the level-k image.  Computed by powering in the quotient ring.
long element_order_mod(const PantsRep& rep, const GroupWord& w, long k);

// depth of a quotient matrix, capped at its level m: min over the two
// off-diagonal entries and the diagonal difference of min(v_h(lift), m).
long quot_depth_capped(const QuotMat& m);

/// phi = a b^{-1}, m0 = its order at the stabilization level N0, psi = phi^m0,
/// N the exact level with psi in R_N \ R_{N+1}, e = floor(N/(p-1)) + 1.
struct PsiData {
  GroupWord phi;
  long N0;
  long m0;
  GroupWord psi;
  long N;
  long e;
};

// N0 = smallest k at which the level-k orders of all three boundary classes
// agree with their projective orders; throws InvalidParameter when phi has
// finite projective order at this p.
PsiData find_psi_N(const PantsRep& rep);

struct DepthCheck {
  long k;         // exponent
  long depth;     // observed proj_h_depth(rho(psi)^k)
  long expected;  // N + 1 + (p-1) * v_p(k)
};

struct DepthLawReport {
  long N, e;
  long total_checked;
  bool ok;
  std::vector<DepthCheck> samples;     // the first few, for reports
  std::vector<DepthCheck> violations;  // empty iff ok
};

// Verifies depth(psi^k) = N+1+(p-1)*v_p(k) < 2N+2 for 1 <= k <= min(p^e - 1,
// max_checks), powering in the quotient ring mod h^{2N+2}.  A violation is
// recorded, not thrown: the report is the verdict.
DepthLawReport psi_power_depth_law(const PantsRep& rep, const PsiData& psi,
                                   long max_checks = 10'000);

}  // namespace slh
