#include "slh/covers.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace slh {

namespace {

bool is_permutation(const std::vector<std::size_t>& act) {
  std::vector<char> seen(act.size(), 0);
  for (std::size_t x : act) {
    if (x >= act.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

CosetTable coset_table(const FiniteImage& img) {
  CosetTable t;
  t.degree = img.order();
  t.act_a = img.gen_action[0];
  t.act_b = img.gen_action[2];
  if (!is_permutation(t.act_a) || !is_permutation(t.act_b))
    throw LawViolation("generator action is not a permutation");

  // transitivity (regularity then follows: a transitive action of a group on
  // its own element set by right multiplication has trivial point stabilizers)
  std::vector<char> seen(t.degree, 0);
  std::vector<std::size_t> stack = {img.identity_index};
  seen[img.identity_index] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t nb : {t.act_a[c], t.act_b[c]})
      if (!seen[nb]) {
        seen[nb] = 1;
        stack.push_back(nb);
      }
  }
  if (count != t.degree) throw LawViolation("coset action is not transitive");
  return t;
}

SchreierData schreier_basis(const CosetTable& t) {
  const std::size_t n = t.degree;
  SchreierData s;
  s.table = t;
  s.inv_a.assign(n, 0);
  s.inv_b.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    s.inv_a[t.act_a[i]] = i;
    s.inv_b[t.act_b[i]] = i;
  }

  s.transversal.assign(n, GroupWord());
  s.edge_index.assign(n, {SchreierData::kTreeEdge, SchreierData::kTreeEdge});
  // mark which positive edges (coset, a|b) the spanning tree uses
  std::vector<std::array<char, 2>> tree(n, {0, 0});

  std::vector<char> seen(n, 0);
  std::vector<std::size_t> queue = {0};
  seen[0] = 1;
  const Letter moves[4] = {1, 2, -1, -2};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t c = queue[head];
    for (Letter mv : moves) {
      std::size_t c2;
      switch (mv) {
        case 1: c2 = t.act_a[c]; break;
        case 2: c2 = t.act_b[c]; break;
        case -1: c2 = s.inv_a[c]; break;
        default: c2 = s.inv_b[c]; break;
      }
      if (seen[c2]) continue;
      seen[c2] = 1;
      s.transversal[c2] = s.transversal[c] * GroupWord({mv});
      // record the positive-direction edge the tree traversed
      if (mv == 1) tree[c][0] = 1;
      else if (mv == 2) tree[c][1] = 1;
      else if (mv == -1) tree[c2][0] = 1;
      else tree[c2][1] = 1;
      queue.push_back(c2);
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    for (int g = 0; g < 2; ++g) {
      if (tree[c][static_cast<std::size_t>(g)]) continue;
      std::size_t c2 = g == 0 ? t.act_a[c] : t.act_b[c];
      GroupWord gen({static_cast<Letter>(g + 1)});
      GroupWord word = s.transversal[c] * gen * s.transversal[c2].inverse();
      s.edge_index[c][static_cast<std::size_t>(g)] = s.basis.size();
      s.basis.push_back(std::move(word));
    }
  }
  if (s.basis.size() != n + 1)
    throw LawViolation("Schreier basis size disagrees with Nielsen-Schreier");
  return s;
}

std::vector<long> rewrite(const SchreierData& s, const GroupWord& w) {
  std::vector<long> out;
  std::size_t c = 0;
  for (Letter x : w.letters()) {
    if (x > 0) {
      std::size_t g = static_cast<std::size_t>(x - 1);
      std::size_t idx = s.edge_index[c][g];
      if (idx != SchreierData::kTreeEdge) out.push_back(static_cast<long>(idx) + 1);
      c = g == 0 ? s.table.act_a[c] : s.table.act_b[c];
    } else {
      std::size_t g = static_cast<std::size_t>(-x - 1);
      std::size_t c2 = g == 0 ? s.inv_a[c] : s.inv_b[c];
      std::size_t idx = s.edge_index[c2][g];
      if (idx != SchreierData::kTreeEdge) out.push_back(-(static_cast<long>(idx) + 1));
      c = c2;
    }
  }
  if (c != 0) throw NotAMember("word does not lie in the cover's subgroup");
  return out;
}

std::vector<mpz_class> abelianized_vector(const SchreierData& s, const GroupWord& w) {
  std::vector<mpz_class> v(s.basis.size());
  for (long t : rewrite(s, w)) {
    if (t > 0)
      v[static_cast<std::size_t>(t - 1)] += 1;
    else
      v[static_cast<std::size_t>(-t - 1)] -= 1;
  }
  return v;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw InvalidParameter("matrix shape mismatch");
  IntMat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const mpz_class& xv = x.at(i, k);
      if (xv == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

IntMat simple_loop_matrix(const PantsRep& rep, const FiniteImage& img,
                          const SchreierData& s) {
  const std::size_t n = s.table.degree;
  const GroupWord boundary[3] = {GroupWord::parse("a"), GroupWord::parse("b"),
                                 GroupWord::parse("ab")};
  IntMat m(3 * n, n + 1);
  std::size_t row = 0;
  for (const GroupWord& b : boundary) {
    long o = element_order_mod(rep, b, img.k);
    GroupWord power = b.pow(o);
    for (std::size_t c = 0; c < n; ++c, ++row) {
      GroupWord w = s.transversal[c] * power * s.transversal[c].inverse();
      auto v = abelianized_vector(s, w);
      for (std::size_t j = 0; j <= n; ++j) m.at(row, j) = std::move(v[j]);
    }
  }
  return m;
}

namespace {

void row_op(IntMat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_op(IntMat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

}  // namespace

SmithResult smith_normal_form(const IntMat& input, bool want_u, bool want_v) {
  IntMat m = input;
  SmithResult res;
  if (want_u) res.u = IntMat::identity(m.rows);
  if (want_v) res.v = IntMat::identity(m.cols);

  const std::size_t steps = std::min(m.rows, m.cols);
  mpz_class q, r;
  for (std::size_t t = 0; t < steps; ++t) {
    // smallest |nonzero| pivot in the trailing submatrix
    auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      for (std::size_t i = t; i < m.rows; ++i)
        for (std::size_t j = t; j < m.cols; ++j) {
          const mpz_class& x = m.at(i, j);
          if (x == 0) continue;
          if (!found || mpz_cmpabs(x.get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      return found;
    };

    std::size_t pi = t, pj = t;
    if (!find_pivot(pi, pj)) break;

    for (;;) {
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      if (want_u) swap_rows(*res.u, t, pi);
      if (want_v) swap_cols(*res.v, t, pj);

      bool changed = false;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        if (q != 0) {
          row_op(m, i, t, q);
          if (want_u) row_op(*res.u, i, t, q);
        }
        if (m.at(i, t) != 0) changed = true;  // strictly smaller remainder left
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        if (q != 0) {
          col_op(m, j, t, q);
          if (want_v) col_op(*res.v, j, t, q);
        }
        if (m.at(t, j) != 0) changed = true;
      }
      if (!changed) {
        // cross is clear; enforce the divisibility chain on the remainder
        bool fixed = true;
        for (std::size_t i = t + 1; i < m.rows && fixed; ++i)
          for (std::size_t j = t + 1; j < m.cols && fixed; ++j) {
            if (m.at(i, j) == 0) continue;
            mpz_tdiv_r(r.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t());
            if (r != 0) {
              // fold row i into row t so the offending entry enters the cross
              for (std::size_t c = 0; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
              if (want_u)
                for (std::size_t c = 0; c < res.u->cols; ++c)
                  res.u->at(t, c) += res.u->at(i, c);
              fixed = false;
            }
          }
        if (fixed) break;
      }
      if (!find_pivot(pi, pj)) break;
    }

    if (m.at(t, t) < 0) {
      for (std::size_t j = t; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
      if (want_u)
        for (std::size_t j = 0; j < res.u->cols; ++j) res.u->at(t, j) = -res.u->at(t, j);
    }
  }

  res.diag.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) res.diag.push_back(m.at(t, t));
  return res;
}

bool in_row_lattice(const std::vector<mpz_class>& vec, const SmithResult& snf) {
  if (!snf.v) throw InvalidParameter("lattice membership needs the SNF V factor");
  const IntMat& v = *snf.v;
  if (vec.size() != v.rows) throw InvalidParameter("vector length mismatch");
  for (std::size_t j = 0; j < v.cols; ++j) {
    mpz_class z = 0;
    for (std::size_t i = 0; i < v.rows; ++i) z += vec[i] * v.at(i, j);
    if (j < snf.diag.size() && snf.diag[j] != 0) {
      if (z % snf.diag[j] != 0) return false;
    } else {
      if (z != 0) return false;
    }
  }
  return true;
}

HomologyReport homology_report(const PantsRep& rep, long k, std::size_t bfs_cap) {
  PsiData psi = find_psi_N(rep);
  FiniteImage img = image_bfs(rep, k, bfs_cap);
  CosetTable table = coset_table(img);
  SchreierData s = schreier_basis(table);
  IntMat slm = simple_loop_matrix(rep, img, s);
  SmithResult snf = smith_normal_form(slm, /*want_u=*/false, /*want_v=*/true);

  HomologyReport rpt;
  rpt.p = rep.p;
  rpt.k = k;
  rpt.N = psi.N;
  rpt.e = psi.e;
  rpt.degree = img.order();
  rpt.rank = img.order() + 1;
  rpt.elementary_divisors = snf.diag;

  std::size_t lattice_rank = 0;
  mpz_class index = 1;
  for (const mpz_class& d : snf.diag) {
    if (d != 0) {
      ++lattice_rank;
      index *= d;
    }
    if (d != 1) rpt.proper = true;
  }
  rpt.finite_index = lattice_rank == rpt.rank;
  if (rpt.finite_index) rpt.index = index;

  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(rep.p),
                static_cast<unsigned long>(psi.e));
  rpt.bound = bound;
  rpt.bound_satisfied = !rpt.finite_index || rpt.index >= rpt.bound;

  if (psi.N >= k) {
    auto vec = abelianized_vector(s, psi.psi);
    rpt.psi_witness_excluded = !in_row_lattice(vec, snf);
  }
  rpt.certified_level = k == psi.N;
  return rpt;
}

}  // namespace slh
