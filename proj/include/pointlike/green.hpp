#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/primes.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// Green's preorders and equivalences for a finite semigroup.  leqX[a][b]
// means a <=_X b; class ids are assigned in order of smallest member, and
// per-class member lists are ascending.
struct GreenData {
  std::vector<std::vector<bool>> leqL, leqR, leqJ;
  std::vector<std::uint32_t> classL, classR, classJ, classH;
  std::vector<std::vector<Element>> classesL, classesR, classesJ, classesH;

  bool eqL(Element a, Element b) const { return classL[a] == classL[b]; }
  bool eqR(Element a, Element b) const { return classR[a] == classR[b]; }
  bool eqH(Element a, Element b) const { return classH[a] == classH[b]; }
  bool ltL(Element a, Element b) const { return leqL[a][b] && !leqL[b][a]; }
  bool leqH(Element a, Element b) const { return leqL[a][b] && leqR[a][b]; }
  bool ltH(Element a, Element b) const {
    return leqH(a, b) && !(leqL[b][a] && leqR[b][a]);
  }
};

namespace detail {

inline void partition_from_preorder(const std::vector<std::vector<bool>>& leq,
                                    std::vector<std::uint32_t>& cls,
                                    std::vector<std::vector<Element>>& classes) {
  const std::size_t n = leq.size();
  cls.assign(n, 0);
  classes.clear();
  std::vector<bool> seen(n, false);
  for (Element a = 0; a < n; ++a) {
    if (seen[a]) {
      continue;
    }
    const auto id = std::uint32_t(classes.size());
    classes.emplace_back();
    for (Element b = a; b < n; ++b) {
      if (!seen[b] && leq[a][b] && leq[b][a]) {
        seen[b] = true;
        cls[b] = id;
        classes[id].push_back(b);
      }
    }
  }
}

inline void partition_from_classmap(std::vector<std::uint32_t>& cls,
                                    std::vector<std::vector<Element>>& classes) {
  // renumber so class ids follow smallest members
  const std::size_t n = cls.size();
  std::vector<std::int64_t> renum(n, -1);
  std::vector<std::uint32_t> fresh(n);
  classes.clear();
  for (Element a = 0; a < n; ++a) {
    if (renum[cls[a]] < 0) {
      renum[cls[a]] = std::int64_t(classes.size());
      classes.emplace_back();
    }
    fresh[a] = std::uint32_t(renum[cls[a]]);
    classes[fresh[a]].push_back(a);
  }
  cls = fresh;
}

}  // namespace detail

// Green's relations by definitional enumeration: a <=_L b iff a is in S^I b,
// a <=_R b iff a is in b S^I, a <=_J b iff a is in S^I b S^I; H = L meet R.
inline GreenData compute_green(const FiniteSemigroup& s) {
  const std::uint32_t n = s.order;
  GreenData g;
  g.leqL.assign(n, std::vector<bool>(n, false));
  g.leqR.assign(n, std::vector<bool>(n, false));
  g.leqJ.assign(n, std::vector<bool>(n, false));
  for (Element b = 0; b < n; ++b) {
    g.leqL[b][b] = g.leqR[b][b] = g.leqJ[b][b] = true;
    for (Element x = 0; x < n; ++x) {
      g.leqL[s.at(x, b)][b] = true;
      g.leqR[s.at(b, x)][b] = true;
      g.leqJ[s.at(x, b)][b] = true;
      g.leqJ[s.at(b, x)][b] = true;
      for (Element y = 0; y < n; ++y) {
        g.leqJ[s.at(s.at(x, b), y)][b] = true;
      }
    }
  }
  detail::partition_from_preorder(g.leqL, g.classL, g.classesL);
  detail::partition_from_preorder(g.leqR, g.classR, g.classesR);
  detail::partition_from_preorder(g.leqJ, g.classJ, g.classesJ);
  g.classH.assign(n, 0);
  {
    // pair (L-class, R-class) determines the H-class
    std::vector<std::uint32_t> key(n);
    for (Element a = 0; a < n; ++a) {
      key[a] = g.classL[a] * n + g.classR[a];
    }
    std::vector<std::int64_t> first(std::size_t(n) * n, -1);
    std::uint32_t next = 0;
    for (Element a = 0; a < n; ++a) {
      if (first[key[a]] < 0) {
        first[key[a]] = next++;
      }
      g.classH[a] = std::uint32_t(first[key[a]]);
    }
    detail::partition_from_classmap(g.classH, g.classesH);
  }
  return g;
}

// Elements of S^I are ids 0..n-1 plus the fresh identity id n.
inline Element si_identity(const FiniteSemigroup& s) { return s.order; }

inline Element mul_si(const FiniteSemigroup& s, Element a, Element u) {
  if (u == s.order) {
    return a;
  }
  return s.at(a, u);
}

// Stab H = { s in S^I | Hs is contained in H }, ascending, I last.
inline std::vector<Element> right_stabilizer(const FiniteSemigroup& s,
                                             const std::vector<Element>& h) {
  std::vector<Element> out;
  for (Element u = 0; u <= s.order; ++u) {
    bool ok = true;
    for (Element x : h) {
      const Element y = mul_si(s, x, u);
      if (std::find(h.begin(), h.end(), y) == h.end()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(u);
    }
  }
  return out;
}

// The Schutzenberger group of an H-class: distinct permutations of H induced
// by Stab H on the right, with the inducing representatives from S^I.
struct PermutationGroupOnH {
  std::vector<Element> carrier;                      // the H-class, ascending
  std::vector<std::vector<std::uint32_t>> perms;     // index permutations
  std::vector<std::vector<Element>> representatives; // per perm, ascending
};

inline PermutationGroupOnH schutzenberger_group(const FiniteSemigroup& s,
                                                const std::vector<Element>& h) {
  PermutationGroupOnH out;
  out.carrier = h;
  std::sort(out.carrier.begin(), out.carrier.end());
  for (Element u : right_stabilizer(s, out.carrier)) {
    std::vector<std::uint32_t> perm(out.carrier.size());
    std::vector<bool> hit(out.carrier.size(), false);
    for (std::size_t i = 0; i < out.carrier.size(); ++i) {
      const Element y = mul_si(s, out.carrier[i], u);
      const auto it = std::find(out.carrier.begin(), out.carrier.end(), y);
      perm[i] = std::uint32_t(it - out.carrier.begin());
      hit[perm[i]] = true;
    }
    for (bool b : hit) {
      if (!b) {
        throw CertificateError("stabilizer element does not permute H");
      }
    }
    auto it = std::find(out.perms.begin(), out.perms.end(), perm);
    if (it == out.perms.end()) {
      out.perms.push_back(perm);
      out.representatives.push_back({u});
    } else {
      out.representatives[it - out.perms.begin()].push_back(u);
    }
  }
  return out;
}

inline bool is_identity_permutation(const std::vector<std::uint32_t>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) {
      return false;
    }
  }
  return true;
}

inline std::uint32_t permutation_order(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> cur = p;
  std::uint32_t k = 1;
  while (!is_identity_permutation(cur)) {
    std::vector<std::uint32_t> next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] = p[cur[i]];
    }
    cur = std::move(next);
    ++k;
  }
  return k;
}

// Representative H-class of a J-class: the one containing its least element.
inline std::vector<Element> representative_h_class(const GreenData& g,
                                                   std::uint32_t j_class) {
  const Element least = g.classesJ[j_class].front();
  return g.classesH[g.classH[least]];
}

// pi'-freeness per element: the Schutzenberger group of the element's J-class
// is a pi-group.  One fixed H-class per J-class suffices since the group
// depends up to isomorphism only on the J-class.
inline std::vector<bool> compute_pi_free(const FiniteSemigroup& s,
                                         const GreenData& g,
                                         const PrimeSet& pi) {
  std::vector<bool> out(s.order, false);
  for (std::uint32_t j = 0; j < g.classesJ.size(); ++j) {
    const auto grp = schutzenberger_group(s, representative_h_class(g, j));
    const bool free = pi.is_pi_number(grp.perms.size());
    for (Element a : g.classesJ[j]) {
      out[a] = free;
    }
  }
  return out;
}

inline bool is_pi_prime_free(const FiniteSemigroup& s, const GreenData& g,
                             Element x, const PrimeSet& pi) {
  const auto grp = schutzenberger_group(s, representative_h_class(g, g.classJ[x]));
  return pi.is_pi_number(grp.perms.size());
}

// Test utility for the L-class independence of stabilizers.
inline bool stab_agrees_on_l_class(const FiniteSemigroup& s, const GreenData& g,
                                   const std::vector<Element>& h,
                                   const std::vector<Element>& h2) {
  if (h.empty() || h2.empty() || !g.eqL(h.front(), h2.front())) {
    throw InputError("H-classes are not L-equivalent");
  }
  return right_stabilizer(s, h) == right_stabilizer(s, h2);
}

// A group element g of S of order p^a inducing on H a permutation of order
// exactly p.  Takes the order-p permutation with the least representative,
// forms the group element u = s^omega s and extracts its p-part.
inline Element prime_power_lift(const FiniteSemigroup& s, const GreenData& g,
                                const std::vector<Element>& h,
                                std::uint64_t p) {
  (void)g;
  const auto grp = schutzenberger_group(s, h);
  if (grp.perms.size() % p != 0) {
    throw InputError("p does not divide the Schutzenberger group order");
  }
  std::size_t best = grp.perms.size();
  Element best_rep = 0;
  for (std::size_t i = 0; i < grp.perms.size(); ++i) {
    if (permutation_order(grp.perms[i]) == p) {
      const Element rep = grp.representatives[i].front();
      if (best == grp.perms.size() || rep < best_rep) {
        best = i;
        best_rep = rep;
      }
    }
  }
  if (best == grp.perms.size()) {
    throw CertificateError("no permutation of prime order found");  // Cauchy
  }
  if (best_rep == si_identity(s)) {
    throw CertificateError("identity cannot induce a nontrivial permutation");
  }
  const Element u = s.at(omega_power(s, best_rep), best_rep);
  const IndexPeriod ip = index_period(s, u);
  if (ip.index != 1 || ip.period % p != 0) {
    throw CertificateError("lift candidate is not a group element of order "
                           "divisible by p");
  }
  const std::uint64_t pa = PrimeSet::p_part(ip.period, p);
  return power(s, u, ip.period / pa);
}

}  // namespace pointlike
