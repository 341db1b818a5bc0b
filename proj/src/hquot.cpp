#include "slh/hquot.hpp"

#include <deque>
#include <string>
#include <unordered_map>

namespace slh {

QuotMat reduce_mat(const ExactMat& m, long m_level) {
  return QuotMat::from_rows(
      HQuot::reduce(m.e[0], m_level), HQuot::reduce(m.e[1], m_level),
      HQuot::reduce(m.e[2], m_level), HQuot::reduce(m.e[3], m_level));
}

ReducedGens reduce_rep(const PantsRep& rep, long k) {
  if (k < 0) throw InvalidParameter("level k must be >= 0");
  return ReducedGens{rep.p, k, proj_canonical(reduce_mat(rep.Ma, k + 1)),
                     proj_canonical(reduce_mat(rep.Mb, k + 1))};
}

FiniteImage image_bfs(const PantsRep& rep, long k, std::size_t cap) {
  if (cap < 1) throw InvalidParameter("bfs cap must be >= 1");
  ReducedGens g = reduce_rep(rep, k);

  FiniteImage img;
  img.p = rep.p;
  img.k = k;

  std::unordered_map<std::string, std::size_t> index;
  QuotMat id = proj_canonical(g.a.identity_like());
  img.elements.push_back(id);
  index.emplace(canonical_key(id), 0);
  img.identity_index = 0;

  const QuotMat gens[2] = {g.a, g.b};
  std::vector<std::size_t>& act_a = img.gen_action[0];
  std::vector<std::size_t>& act_b = img.gen_action[2];

  for (std::size_t i = 0; i < img.elements.size(); ++i) {
    for (int gi = 0; gi < 2; ++gi) {
      QuotMat next = proj_canonical(img.elements[i] * gens[gi]);
      std::string key = canonical_key(next);
      auto it = index.find(key);
      std::size_t j;
      if (it != index.end()) {
        j = it->second;
      } else {
        if (img.elements.size() >= cap)
          throw BudgetExceeded("image closure exceeded the element budget",
                               img.elements.size());
        j = img.elements.size();
        img.elements.push_back(std::move(next));
        index.emplace(std::move(key), j);
      }
      (gi == 0 ? act_a : act_b).push_back(j);
    }
  }

  // inverse generators act by the inverse permutations
  std::size_t n = img.elements.size();
  img.gen_action[1].assign(n, 0);
  img.gen_action[3].assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    img.gen_action[1][act_a[i]] = i;
    img.gen_action[3][act_b[i]] = i;
  }
  return img;
}

QuotMat eval_word_mod(const PantsRep& rep, const GroupWord& w, long m_level) {
  QuotMat a = reduce_mat(rep.Ma, m_level);
  QuotMat b = reduce_mat(rep.Mb, m_level);
  QuotMat ai = adjugate(a);
  QuotMat bi = adjugate(b);
  QuotMat acc = a.identity_like();
  for (Letter x : w.letters()) {
    switch (x) {
      case 1: acc = acc * a; break;
      case -1: acc = acc * ai; break;
      case 2: acc = acc * b; break;
      case -2: acc = acc * bi; break;
    }
  }
  return acc;
}

long element_order_mod(const PantsRep& rep, const GroupWord& w, long k) {
  if (k < 0) throw InvalidParameter("level k must be >= 0");
  QuotMat q = eval_word_mod(rep, w, k + 1);
  QuotMat acc = q;
  const long cap = 1'000'000;
  for (long n = 1; n <= cap; ++n) {
    if (is_scalar(acc)) return n;
    acc = acc * q;
  }
  throw BudgetExceeded("element order exceeded the iteration budget",
                       static_cast<std::size_t>(cap));
}

long quot_depth_capped(const QuotMat& m) {
  long lvl = m.e[0].level();
  auto capped = [lvl](const HQuot& x) {
    HValuation v = v_h(x.lift());
    return (!v || *v > lvl) ? lvl : *v;
  };
  long d = capped(m.e[1]);
  d = std::min(d, capped(m.e[2]));
  d = std::min(d, capped(m.e[0] - m.e[3]));
  return d;
}

PsiData find_psi_N(const PantsRep& rep) {
  GroupWord phi = GroupWord::parse("aB");
  if (proj_order(eval_word(rep, phi), rep.p).has_value())
    throw InvalidParameter("rho(a b^-1) has finite order at this p; choose a larger p");

  const GroupWord boundary[3] = {GroupWord::parse("a"), GroupWord::parse("b"),
                                 GroupWord::parse("ab")};
  long target[3];
  for (int i = 0; i < 3; ++i) {
    auto o = proj_order(eval_word(rep, boundary[i]), rep.p);
    if (!o) throw LawViolation("a boundary class has infinite projective order");
    target[i] = *o;
  }

  long N0 = -1;
  const long kmax = 4 * (rep.p - 1);
  for (long k = 0; k <= kmax; ++k) {
    bool all = true;
    for (int i = 0; i < 3 && all; ++i)
      all = element_order_mod(rep, boundary[i], k) == target[i];
    if (all) {
      N0 = k;
      break;
    }
  }
  if (N0 < 0) throw Error("boundary-class orders did not stabilize by level 4(p-1)");

  long m0 = element_order_mod(rep, phi, N0);
  GroupWord psi = phi.pow(m0);
  HValuation d = proj_h_depth(eval_word(rep, psi));
  if (!d) throw LawViolation("psi evaluated to a scalar (finite order for phi)");
  long N = *d - 1;
  if (N < N0) throw LawViolation("psi landed below the stabilization level");
  return PsiData{phi, N0, m0, psi, N, N / (rep.p - 1) + 1};
}

namespace {

long v_p(long p, long k) {
  long v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

}  // namespace

DepthLawReport psi_power_depth_law(const PantsRep& rep, const PsiData& psi,
                                   long max_checks) {
  const long modulus = 2 * psi.N + 2;
  QuotMat q = reduce_mat(eval_word(rep, psi.psi), modulus);

  long pe = 1;
  for (long i = 0; i < psi.e; ++i) pe *= rep.p;
  const long last = std::min(pe - 1, max_checks);

  DepthLawReport report;
  report.N = psi.N;
  report.e = psi.e;
  report.total_checked = last;
  report.ok = true;

  QuotMat acc = q;
  for (long k = 1; k <= last; ++k) {
    long depth = quot_depth_capped(acc);
    long expected = psi.N + 1 + (rep.p - 1) * v_p(rep.p, k);
    DepthCheck chk{k, depth, expected};
    if (k <= 10) report.samples.push_back(chk);
    if (depth != expected || expected >= modulus) {
      report.ok = false;
      report.violations.push_back(chk);
    }
    if (k < last) acc = acc * q;
  }
  return report;
}

}  // namespace slh
