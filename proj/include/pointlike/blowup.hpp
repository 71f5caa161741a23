#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pointlike/chains.hpp"
#include "pointlike/closure.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/green.hpp"

namespace pointlike {

// Data recorded for each non-pi'-free L-class the construction touches.
struct LClassChoice {
  std::uint32_t l_class = 0;
  std::vector<Element> h_class;  // the chosen H_L
  std::uint64_t prime = 0;       // p in pi' dividing |Gamma_R(H_L)|
  Element lift = 0;              // g_L
  Element multiplier = 0;        // g_L^{omega+*} as an element of S
};

// An operator B on S = CP_pi(T) given by right multipliers: sB = s m_s with
// m_s in S^I constant on L-classes.  m_s = I exactly on pi'-free elements.
struct BlowupOperator {
  std::vector<Element> map;         // S -> S
  std::vector<Element> multiplier;  // S -> S^I (id |S| means I)
  std::vector<LClassChoice> choices;
};

// The preblowup of the explicit construction: for each non-pi'-free L-class,
// fix the H-class containing the least member, lift an order-p permutation to
// a group element g_L, and use m = g_L^{omega+*}.
inline BlowupOperator construct_preblowup(const SubsetSemigroup& s,
                                          const GreenData& g,
                                          const std::vector<bool>& pi_free,
                                          const PrimeSet& pi) {
  const std::uint32_t n = s.sg.order;
  BlowupOperator b;
  b.map.resize(n);
  b.multiplier.assign(n, si_identity(s.sg));
  for (std::uint32_t lc = 0; lc < g.classesL.size(); ++lc) {
    const Element least = g.classesL[lc].front();
    if (pi_free[least]) {
      continue;
    }
    LClassChoice choice;
    choice.l_class = lc;
    choice.h_class = g.classesH[g.classH[least]];
    const auto grp = schutzenberger_group(s.sg, choice.h_class);
    choice.prime =
        pi.smallest_pi_prime_divisor_outside(std::uint64_t(grp.perms.size()));
    if (choice.prime == 0) {
      throw CertificateError("L-class marked non-pi'-free has a pi-group");
    }
    choice.lift = prime_power_lift(s.sg, g, choice.h_class, choice.prime);
    const Subset blown = omega_plus_star(s.base, s.subsets[choice.lift]);
    if (!s.index.count(blown)) {
      throw CertificateError("g_L^{omega+*} escapes the closure");
    }
    choice.multiplier = s.id_of(blown);
    for (Element e : g.classesL[lc]) {
      b.multiplier[e] = choice.multiplier;
    }
    b.choices.push_back(choice);
  }
  for (Element e = 0; e < n; ++e) {
    b.map[e] = mul_si(s.sg, e, b.multiplier[e]);
  }
  return b;
}

// B followed by B'; the composite multiplier is m_s n_{s m_s}.
inline BlowupOperator compose_blowups(const FiniteSemigroup& sg,
                                      const BlowupOperator& b,
                                      const BlowupOperator& b2) {
  BlowupOperator out;
  out.choices = b.choices;
  out.map.resize(sg.order);
  out.multiplier.resize(sg.order);
  const Element id = si_identity(sg);
  for (Element e = 0; e < sg.order; ++e) {
    out.map[e] = b2.map[b.map[e]];
    const Element m = b.multiplier[e];
    const Element nm = b2.multiplier[b.map[e]];
    if (m == id) {
      out.multiplier[e] = nm;
    } else if (nm == id) {
      out.multiplier[e] = m;
    } else {
      out.multiplier[e] = sg.at(m, nm);
    }
  }
  return out;
}

struct BlowupReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

// Exhaustive check of the blowup operator axioms plus the derived facts used
// downstream: membership in the check-monoid and the multiplier containments.
inline BlowupReport verify_blowup_axioms(const SubsetSemigroup& s,
                                         const GreenData& g,
                                         const std::vector<bool>& pi_free,
                                         const BlowupOperator& b,
                                         bool require_idempotent = true) {
  BlowupReport rep;
  const std::uint32_t n = s.sg.order;
  for (Element e = 0; e < n; ++e) {
    if (pi_free[e] && b.map[e] != e) {
      rep.fail("(1) fails: pi'-free " + std::to_string(e) + " moved");
    }
    if (!pi_free[e] && !g.ltH(b.map[e], e)) {
      rep.fail("(2) fails: sB not <_H s at " + std::to_string(e));
    }
    if ((s.subsets[e] & ~s.subsets[b.map[e]]) != 0) {
      rep.fail("(3) fails: s not contained in sB at " + std::to_string(e));
    }
    if (b.map[e] != mul_si(s.sg, e, b.multiplier[e])) {
      rep.fail("(4) fails: sB != s m_s at " + std::to_string(e));
    }
    for (Element e2 = 0; e2 < n; ++e2) {
      if (g.eqL(e, e2) && b.multiplier[e] != b.multiplier[e2]) {
        rep.fail("(4) fails: multipliers differ on L-class at (" +
                 std::to_string(e) + "," + std::to_string(e2) + ")");
      }
    }
  }
  if (require_idempotent) {
    for (Element e = 0; e < n; ++e) {
      if (b.map[b.map[e]] != b.map[e]) {
        rep.fail("not idempotent at " + std::to_string(e));
      }
      if (pi_free[b.map[e]] != true) {
        rep.fail("image not pi'-free at " + std::to_string(e));
      }
    }
    const auto chk = check_in_check_s(s.sg, g, b.map);
    if (!chk.ok) {
      rep.fail("B not in the check-monoid: " + chk.failure);
    }
  }
  for (Element e = 0; e < n; ++e) {
    for (Element y = 0; y < n; ++y) {
      if (!g.leqL[y][e]) {
        continue;
      }
      const Element ym = mul_si(s.sg, y, b.multiplier[e]);
      if ((s.subsets[y] & ~s.subsets[ym]) != 0) {
        rep.fail("y not contained in y m_s at (y=" + std::to_string(y) +
                 ",s=" + std::to_string(e) + ")");
      }
      if (pi_free[e] && ym != y) {
        rep.fail("y m_s != y below pi'-free s at (y=" + std::to_string(y) +
                 ",s=" + std::to_string(e) + ")");
      }
    }
  }
  return rep;
}

// Iterated functional powers of the preblowup until idempotent.
inline BlowupOperator idempotent_blowup(const SubsetSemigroup& s,
                                        const GreenData& g,
                                        const std::vector<bool>& pi_free,
                                        const BlowupOperator& pre) {
  BlowupOperator cur = pre;
  for (std::uint32_t iter = 0; iter <= s.sg.order + 1; ++iter) {
    const auto rep = verify_blowup_axioms(s, g, pi_free, cur, false);
    if (!rep.ok) {
      throw CertificateError("preblowup axioms fail while powering: " +
                             rep.failures.front());
    }
    bool idem = true;
    for (Element e = 0; e < s.sg.order; ++e) {
      if (cur.map[cur.map[e]] != cur.map[e]) {
        idem = false;
        break;
      }
    }
    if (idem) {
      return cur;
    }
    cur = compose_blowups(s.sg, cur, cur);
  }
  throw CertificateError("blowup powering did not reach an idempotent");
}

// The string extension by the Henckell formula, memoized:
//   eps -> eps,  (b.s) -> (b Delta_{m_s}) Bhat . sB
class BlowupExtension {
 public:
  BlowupExtension(const SubsetSemigroup& s, const BlowupOperator& b)
      : s_(&s), b_(&b) {}

  Chain operator()(const Chain& x) const {
    if (x.empty()) {
      return {};
    }
    auto it = memo_.find(x);
    if (it != memo_.end()) {
      return it->second;
    }
    const Element s1 = x.front();
    Chain rest(x.begin() + 1, x.end());
    rest = apply_diagonal(s_->sg, rest, b_->multiplier[s1]);
    Chain out = (*this)(rest);
    out.insert(out.begin(), b_->map[s1]);
    memo_[x] = out;
    return out;
  }

  const SubsetSemigroup& subset_semigroup() const { return *s_; }
  const BlowupOperator& blowup() const { return *b_; }

 private:
  const SubsetSemigroup* s_;
  const BlowupOperator* b_;
  mutable std::map<Chain, Chain> memo_;
};

// The two-member residual family closed under residuation: Diag(u) acts as
// the diagonal, DiagThenBlowup(u) as Delta_u followed by Bhat.
struct ResidualTransformation {
  enum class Kind { diag, diag_then_blowup };
  Kind kind = Kind::diag;
  Element u = 0;  // element of S^I
};

inline ResidualTransformation residual(const BlowupExtension& bhat,
                                       ResidualTransformation f,
                                       Element letter) {
  const FiniteSemigroup& sg = bhat.subset_semigroup().sg;
  if (f.kind == ResidualTransformation::Kind::diag) {
    return f;
  }
  const Element su = mul_si(sg, letter, f.u);
  const Element m = bhat.blowup().multiplier[su];
  Element next = f.u;
  if (f.u == si_identity(sg)) {
    next = m;
  } else if (m != si_identity(sg)) {
    next = sg.at(f.u, m);
  }
  return ResidualTransformation{ResidualTransformation::Kind::diag_then_blowup,
                                next};
}

// Letter-by-letter evaluation per the wreath recursion.
inline Chain apply_residual_family(const BlowupExtension& bhat,
                                   ResidualTransformation f, const Chain& x) {
  const FiniteSemigroup& sg = bhat.subset_semigroup().sg;
  Chain out;
  out.reserve(x.size());
  for (Element letter : x) {
    if (f.kind == ResidualTransformation::Kind::diag) {
      out.push_back(mul_si(sg, letter, f.u));
    } else {
      const Element su = mul_si(sg, letter, f.u);
      out.push_back(bhat.blowup().map[su]);
    }
    f = residual(bhat, f, letter);
  }
  return out;
}

}  // namespace pointlike
