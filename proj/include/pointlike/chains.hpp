#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/green.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// A string (s_n,...,s_1) over S stored first-letter first: entries[0] is the
// rightmost letter s_1 and entries.back() is s_n, the omega value.  An L-chain
// descends weakly in the L-order moving left, a flag descends strictly.
using Chain = std::vector<Element>;

inline Element chain_omega(const Chain& c) {
  if (c.empty()) {
    throw InputError("omega of the empty string");
  }
  return c.back();
}

// Concatenation b.a: the letters of a come first (rightmost).
inline Chain concat(const Chain& b, const Chain& a) {
  Chain out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline bool is_l_chain(const GreenData& g, const Chain& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!g.leqL[c[i + 1]][c[i]]) {
      return false;
    }
  }
  return true;
}

inline bool is_flag(const GreenData& g, const Chain& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!g.ltL(c[i + 1], c[i])) {
      return false;
    }
  }
  return true;
}

inline std::string chain_to_string(const Chain& c) {
  std::string out = "(";
  for (std::size_t i = c.size(); i-- > 0;) {
    out += std::to_string(c[i]);
    if (i > 0) {
      out += ',';
    }
  }
  return out + ")";
}

// The reduction rho: merge L-equivalent adjacent letters, keeping the
// leftward one, per the elementary reduction (s', s) -> s'.
inline Chain reduce(const GreenData& g, const Chain& c) {
  if (!is_l_chain(g, c)) {
    throw InputError("reduce requires an L-chain");
  }
  Chain out;
  for (Element s : c) {
    if (!out.empty() && g.eqL(out.back(), s)) {
      out.back() = s;  // s is leftward of the current top
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// Entrywise right multiplication by u in S^I.
inline Chain apply_diagonal(const FiniteSemigroup& s, const Chain& c,
                            Element u) {
  Chain out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = mul_si(s, c[i], u);
  }
  return out;
}

// Enumerates all L-chains over S of length min_len..max_len, first-letter
// first, extending on the left in ascending element order.
inline void for_each_l_chain(const FiniteSemigroup& s, const GreenData& g,
                             std::size_t max_len,
                             const std::function<void(const Chain&)>& visit,
                             std::size_t min_len = 0) {
  Chain cur;
  std::function<void()> rec = [&] {
    if (cur.size() >= min_len) {
      visit(cur);
    }
    if (cur.size() >= max_len) {
      return;
    }
    for (Element e = 0; e < s.order; ++e) {
      if (cur.empty() || g.leqL[e][cur.back()]) {
        cur.push_back(e);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();
}

struct CheckSResult {
  bool ok = false;
  std::optional<Element> witness;  // the s_f from item (3), in S^I
  std::string failure;
};

// Membership test for the monoid of maps f: S -> S with sf <=_R s, f
// preserving L, and a single right witness s_f for the R-preserving part.
inline CheckSResult check_in_check_s(const FiniteSemigroup& s,
                                     const GreenData& g,
                                     const std::vector<Element>& f) {
  CheckSResult out;
  if (f.size() != s.order) {
    throw InputError("map is not total on S");
  }
  for (Element a = 0; a < s.order; ++a) {
    if (!g.leqR[f[a]][a]) {
      out.failure = "sf <=_R s fails at s=" + std::to_string(a);
      return out;
    }
  }
  for (Element a = 0; a < s.order; ++a) {
    for (Element b = a + 1; b < s.order; ++b) {
      if (g.eqL(a, b) && !g.eqL(f[a], f[b])) {
        out.failure = "L-preservation fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")";
        return out;
      }
    }
  }
  for (Element u = 0; u <= s.order; ++u) {
    bool works = true;
    for (Element a = 0; a < s.order; ++a) {
      if (g.eqR(f[a], a) && f[a] != mul_si(s, a, u)) {
        works = false;
        break;
      }
    }
    if (works) {
      out.ok = true;
      out.witness = u;
      return out;
    }
  }
  out.failure = "no witness s_f in S^I";
  return out;
}

// Membership test (up to a length cap) for the submonoid where R-preservation
// of the two leftmost letters is realized by a single right multiplication.
inline bool check_in_bigwrf0(const FiniteSemigroup& s, const GreenData& g,
                             const std::function<Chain(const Chain&)>& f,
                             std::size_t max_len) {
  if (max_len < 2) {
    throw InputError("max_len must be at least 2");
  }
  bool ok = true;
  for_each_l_chain(
      s, g, max_len,
      [&](const Chain& x) {
        if (!ok) {
          return;
        }
        const Chain y = f(x);
        if (y.size() != x.size()) {
          ok = false;
          return;
        }
        const std::size_t n = x.size();
        if (!g.eqR(x[n - 1], y[n - 1]) || !g.eqR(x[n - 2], y[n - 2])) {
          return;
        }
        for (Element u = 0; u <= s.order; ++u) {
          if (mul_si(s, x[n - 1], u) == y[n - 1] &&
              mul_si(s, x[n - 2], u) == y[n - 2]) {
            return;
          }
        }
        ok = false;
      },
      2);
  return ok;
}

// Zeiger property: if the output fixes position n-1 and position n stays
// R-equivalent, position n is fixed exactly.
inline bool zeiger_check(const FiniteSemigroup& s, const GreenData& g,
                         const std::function<Chain(const Chain&)>& f,
                         std::size_t max_len) {
  bool ok = true;
  for_each_l_chain(
      s, g, max_len,
      [&](const Chain& x) {
        if (!ok) {
          return;
        }
        const Chain y = f(x);
        const std::size_t n = x.size();
        if (y.size() == n && y[n - 2] == x[n - 2] &&
            g.eqR(y[n - 1], x[n - 1]) && y[n - 1] != x[n - 1]) {
          ok = false;
        }
      },
      2);
  return ok;
}

// rho f rho = f rho on all L-chains up to the length cap.  The operation must
// map L-chains to L-chains.
inline bool reduction_commutation_check(
    const FiniteSemigroup& s, const GreenData& g,
    const std::function<Chain(const Chain&)>& op, std::size_t max_len) {
  bool ok = true;
  for_each_l_chain(s, g, max_len, [&](const Chain& x) {
    if (!ok) {
      return;
    }
    if (reduce(g, op(reduce(g, x))) != reduce(g, op(x))) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace pointlike
