#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <functional>
#include <unordered_map>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/primes.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// A nonempty subset of T as a bitmask; the toolkit caps |T| at 64.
using Subset = std::uint64_t;

inline Subset singleton(Element t) { return Subset{1} << t; }

inline std::vector<Element> subset_elements(Subset x) {
  std::vector<Element> out;
  while (x) {
    out.push_back(Element(std::countr_zero(x)));
    x &= x - 1;
  }
  return out;
}

inline std::string subset_to_string(Subset x) {
  std::string out = "{";
  bool first = true;
  for (Element t : subset_elements(x)) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += std::to_string(t);
  }
  return out + "}";
}

// Lexicographic order on subsets viewed as ascending id arrays.
inline bool subset_lex_less(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) {
      return x < y;
    }
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline Subset subset_product(const FiniteSemigroup& t, Subset x, Subset y) {
  if (x == 0 || y == 0) {
    throw InputError("subset product requires nonempty operands");
  }
  Subset out = 0;
  for (Subset xs = x; xs; xs &= xs - 1) {
    const Element a = Element(std::countr_zero(xs));
    for (Subset ys = y; ys; ys &= ys - 1) {
      out |= singleton(t.at(a, Element(std::countr_zero(ys))));
    }
  }
  return out;
}

// Index and period of Z in the power semigroup P(T).
inline IndexPeriod subset_index_period(const FiniteSemigroup& t, Subset z) {
  std::unordered_map<Subset, std::uint32_t> first_seen;
  Subset cur = z;
  std::uint32_t k = 1;
  while (!first_seen.count(cur)) {
    first_seen[cur] = k;
    cur = subset_product(t, cur, z);
    ++k;
  }
  const std::uint32_t i = first_seen[cur];
  return IndexPeriod{i, k - i};
}

// Z^{omega+*} = Z^omega (union of all positive powers of Z).
inline Subset omega_plus_star(const FiniteSemigroup& t, Subset z) {
  if (z == 0) {
    throw InputError("omega_plus_star requires a nonempty subset");
  }
  const IndexPeriod ip = subset_index_period(t, z);
  Subset cur = z;
  Subset all = 0;
  Subset omega = 0;
  const std::uint64_t total = std::uint64_t(ip.index) + ip.period - 1;
  const std::uint64_t omega_exp =
      std::uint64_t((ip.index + ip.period - 1) / ip.period) * ip.period;
  for (std::uint64_t k = 1; k <= total; ++k) {
    all |= cur;
    if (k == omega_exp) {
      omega = cur;
    }
    cur = subset_product(t, cur, z);
  }
  return subset_product(t, omega, all);
}

// True iff Z generates a group in P(T) whose order is a pi'-number.
inline bool generates_cyclic_pi_prime_group(const FiniteSemigroup& t, Subset z,
                                            const PrimeSet& pi) {
  if (z == 0) {
    throw InputError("empty subset");
  }
  const IndexPeriod ip = subset_index_period(t, z);
  if (ip.index != 1) {
    return false;
  }
  for (auto p : PrimeSet::prime_factors(ip.period)) {
    if (pi.contains(p)) {
      return false;
    }
  }
  return true;
}

// How a closure member was obtained from the singletons.
struct Derivation {
  enum class Kind { singleton, product, omega_star };
  Kind kind = Kind::singleton;
  std::uint32_t a = 0;  // element of T for singleton, else member index
  std::uint32_t b = 0;  // second member index for product
};

// CP_pi(T): the smallest subsemigroup of P(T) containing the singletons and
// closed under Z -> Z^{omega+*} whenever Z generates a cyclic pi'-group.
// Members are listed in derivation order; each derivation references only
// earlier members.
struct CpResult {
  PrimeSet pi;
  std::uint32_t base_order = 0;
  std::vector<Subset> members;
  std::vector<Derivation> derivations;
  std::unordered_map<Subset, std::uint32_t> index;

  bool contains(Subset x) const { return index.count(x) > 0; }
};

inline CpResult cp_closure(const FiniteSemigroup& t, const PrimeSet& pi,
                           std::size_t max_members = 200000) {
  if (t.order > 64) {
    throw ResourceError("base semigroup order exceeds the 64 element cap");
  }
  CpResult cp;
  cp.pi = pi;
  cp.base_order = t.order;

  // Insertion applies omega+* eagerly; products are saturated pairwise below.
  std::function<void(Subset, Derivation)> add = [&](Subset x, Derivation d) {
    if (cp.index.count(x)) {
      return;
    }
    if (cp.members.size() >= max_members) {
      throw ResourceError("closure member cap of " +
                          std::to_string(max_members) + " exceeded");
    }
    const auto id = std::uint32_t(cp.members.size());
    cp.index[x] = id;
    cp.members.push_back(x);
    cp.derivations.push_back(d);
    if (generates_cyclic_pi_prime_group(t, x, pi)) {
      add(omega_plus_star(t, x),
          Derivation{Derivation::Kind::omega_star, id, 0});
    }
  };

  for (Element e = 0; e < t.order; ++e) {
    add(singleton(e), Derivation{Derivation::Kind::singleton, e, 0});
  }
  for (std::uint32_t i = 0; i < cp.members.size(); ++i) {
    for (std::uint32_t j = 0; j <= i; ++j) {
      add(subset_product(t, cp.members[i], cp.members[j]),
          Derivation{Derivation::Kind::product, i, j});
      add(subset_product(t, cp.members[j], cp.members[i]),
          Derivation{Derivation::Kind::product, j, i});
    }
  }
  return cp;
}

// Re-derives every invariant of a CpResult from scratch.  Returns a failure
// description, or nullopt when everything holds.
inline std::optional<std::string> check_cp_invariants(const FiniteSemigroup& t,
                                                      const CpResult& cp) {
  for (Element e = 0; e < t.order; ++e) {
    if (!cp.contains(singleton(e))) {
      return "missing singleton " + std::to_string(e);
    }
  }
  for (std::size_t i = 0; i < cp.members.size(); ++i) {
    for (std::size_t j = 0; j < cp.members.size(); ++j) {
      const Subset p = subset_product(t, cp.members[i], cp.members[j]);
      if (!cp.contains(p)) {
        return "not product closed at (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
      }
    }
  }
  for (std::size_t i = 0; i < cp.members.size(); ++i) {
    if (generates_cyclic_pi_prime_group(t, cp.members[i], cp.pi) &&
        !cp.contains(omega_plus_star(t, cp.members[i]))) {
      return "not omega+* closed at member " + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < cp.members.size(); ++i) {
    const Derivation& d = cp.derivations[i];
    switch (d.kind) {
      case Derivation::Kind::singleton:
        if (d.a >= t.order || cp.members[i] != singleton(Element(d.a))) {
          return "bad singleton derivation at " + std::to_string(i);
        }
        break;
      case Derivation::Kind::product:
        if (d.a >= i || d.b >= i ||
            cp.members[i] !=
                subset_product(t, cp.members[d.a], cp.members[d.b])) {
          return "bad product derivation at " + std::to_string(i);
        }
        break;
      case Derivation::Kind::omega_star:
        if (d.a >= i ||
            !generates_cyclic_pi_prime_group(t, cp.members[d.a], cp.pi) ||
            cp.members[i] != omega_plus_star(t, cp.members[d.a])) {
          return "bad omega+* derivation at " + std::to_string(i);
        }
        break;
    }
  }
  return std::nullopt;
}

// The witness, if any, that X is pointlike: the smallest member containing X
// (fewest elements first, then lexicographic order).
inline std::optional<Subset> is_pointlike(Subset x, const CpResult& cp) {
  if (x == 0) {
    throw InputError("empty subset");
  }
  std::optional<Subset> best;
  for (Subset y : cp.members) {
    if ((x & ~y) != 0) {
      continue;
    }
    if (!best || std::popcount(y) < std::popcount(*best) ||
        (std::popcount(y) == std::popcount(*best) &&
         subset_lex_less(y, *best))) {
      best = y;
    }
  }
  return best;
}

// Inclusion-maximal members, in lexicographic order.
inline std::vector<Subset> maximal_pointlikes(const CpResult& cp) {
  std::vector<Subset> out;
  for (Subset y : cp.members) {
    bool maximal = true;
    for (Subset z : cp.members) {
      if (z != y && (y & ~z) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

// CP_pi(T) as a finite semigroup in its own right; element i of the Cayley
// table is member i of the closure.
struct SubsetSemigroup {
  FiniteSemigroup base;  // T
  FiniteSemigroup sg;    // CP_pi(T)
  std::vector<Subset> subsets;
  std::unordered_map<Subset, std::uint32_t> index;

  Element id_of(Subset x) const {
    auto it = index.find(x);
    if (it == index.end()) {
      throw CertificateError("subset " + subset_to_string(x) +
                             " not in the closure");
    }
    return it->second;
  }
};

inline SubsetSemigroup make_subset_semigroup(const FiniteSemigroup& t,
                                             const CpResult& cp) {
  SubsetSemigroup s;
  s.base = t;
  s.subsets = cp.members;
  s.index = cp.index;
  s.sg.order = std::uint32_t(cp.members.size());
  s.sg.table.assign(cp.members.size() * cp.members.size(), 0);
  for (std::size_t i = 0; i < cp.members.size(); ++i) {
    for (std::size_t j = 0; j < cp.members.size(); ++j) {
      s.sg.table[i * cp.members.size() + j] =
          s.id_of(subset_product(t, cp.members[i], cp.members[j]));
    }
  }
  return s;
}

}  // namespace pointlike
