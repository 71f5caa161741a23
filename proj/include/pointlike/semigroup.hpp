#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/primes.hpp"

namespace pointlike {

// Index of an element of a finite semigroup, in 0..order-1.
using Element = std::uint32_t;

// A finite semigroup given by its Cayley table.  table[a * order + b] is the
// product ab.  Associativity is not enforced on construction; call
// find_nonassociative_triple (or validate) after building from untrusted data.
struct FiniteSemigroup {
  std::uint32_t order = 0;
  std::vector<Element> table;
  std::optional<Element> identity;

  Element at(Element a, Element b) const { return table[a * order + b]; }
};

inline Element multiply(const FiniteSemigroup& s, Element a, Element b) {
  if (a >= s.order || b >= s.order) {
    throw InputError("element index out of range");
  }
  return s.at(a, b);
}

// First triple (a, b, c) with (ab)c != a(bc), if any.
inline std::optional<std::tuple<Element, Element, Element>>
find_nonassociative_triple(const FiniteSemigroup& s) {
  for (Element a = 0; a < s.order; ++a) {
    for (Element b = 0; b < s.order; ++b) {
      const Element ab = s.at(a, b);
      for (Element c = 0; c < s.order; ++c) {
        if (s.at(ab, c) != s.at(a, s.at(b, c))) {
          return std::make_tuple(a, b, c);
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_associative(const FiniteSemigroup& s) {
  return !find_nonassociative_triple(s).has_value();
}

// Checks table shape, associativity and the declared identity.
inline void validate(const FiniteSemigroup& s) {
  if (s.order == 0) {
    throw InputError("semigroup must be nonempty");
  }
  if (s.table.size() != std::size_t(s.order) * s.order) {
    throw InputError("Cayley table has wrong size");
  }
  for (Element x : s.table) {
    if (x >= s.order) {
      throw InputError("Cayley table entry out of range");
    }
  }
  if (auto bad = find_nonassociative_triple(s)) {
    auto [a, b, c] = *bad;
    throw InputError("not associative at triple (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
  }
  if (s.identity) {
    const Element e = *s.identity;
    if (e >= s.order) {
      throw InputError("identity index out of range");
    }
    for (Element a = 0; a < s.order; ++a) {
      if (s.at(e, a) != a || s.at(a, e) != a) {
        throw InputError("declared identity is not an identity");
      }
    }
  }
}

// Smallest (index i, period p) with s^{i+p} = s^i; the cyclic subsemigroup
// generated by s has exactly i+p-1 elements.
struct IndexPeriod {
  std::uint32_t index = 0;
  std::uint32_t period = 0;
};

inline IndexPeriod index_period(const FiniteSemigroup& s, Element x) {
  std::vector<std::int64_t> first_seen(s.order, -1);
  Element cur = x;
  std::uint32_t k = 1;
  while (first_seen[cur] < 0) {
    first_seen[cur] = k;
    cur = s.at(cur, x);
    ++k;
  }
  const std::uint32_t i = std::uint32_t(first_seen[cur]);
  return IndexPeriod{i, k - i};
}

inline Element power(const FiniteSemigroup& s, Element x, std::uint64_t n) {
  Element out = x;
  for (std::uint64_t k = 1; k < n; ++k) {
    out = s.at(out, x);
  }
  return out;
}

// The unique idempotent power s^omega of x.
inline Element omega_power(const FiniteSemigroup& s, Element x) {
  const IndexPeriod ip = index_period(s, x);
  // smallest multiple of the period that is >= the index
  std::uint64_t k = ((ip.index + ip.period - 1) / ip.period) * ip.period;
  return power(s, x, k);
}

// Smallest product-closed subset containing gens, ascending order.
inline std::vector<Element> generated_subsemigroup(
    const FiniteSemigroup& s, const std::vector<Element>& gens) {
  if (gens.empty()) {
    throw InputError("generator set must be nonempty");
  }
  std::vector<bool> in(s.order, false);
  std::vector<Element> work;
  for (Element g : gens) {
    if (g >= s.order) {
      throw InputError("generator out of range");
    }
    if (!in[g]) {
      in[g] = true;
      work.push_back(g);
    }
  }
  std::vector<Element> members = work;
  while (!work.empty()) {
    const Element a = work.back();
    work.pop_back();
    for (Element b : std::vector<Element>(members)) {
      for (Element p : {s.at(a, b), s.at(b, a)}) {
        if (!in[p]) {
          in[p] = true;
          work.push_back(p);
          members.push_back(p);
        }
      }
    }
  }
  std::vector<Element> out;
  for (Element e = 0; e < s.order; ++e) {
    if (in[e]) {
      out.push_back(e);
    }
  }
  return out;
}

// S with a fresh two-sided identity I adjoined; I always gets id base.order,
// even when S already has an identity.
struct MonoidWithAdjoinedIdentity {
  FiniteSemigroup monoid;
  Element identity_id = 0;
};

inline MonoidWithAdjoinedIdentity adjoin_identity(const FiniteSemigroup& s) {
  const std::uint32_t n = s.order;
  MonoidWithAdjoinedIdentity out;
  out.identity_id = n;
  out.monoid.order = n + 1;
  out.monoid.identity = n;
  out.monoid.table.assign(std::size_t(n + 1) * (n + 1), 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      out.monoid.table[a * (n + 1) + b] = s.at(a, b);
    }
  }
  for (Element a = 0; a <= n; ++a) {
    out.monoid.table[a * (n + 1) + n] = a;
    out.monoid.table[n * (n + 1) + a] = a;
  }
  return out;
}

// True iff every subgroup of S is a pi-group.  A subgroup of prime order p
// exists iff p divides some element's period, so it suffices to check that
// each period is a pi-number.
inline bool is_in_gbar_pi(const FiniteSemigroup& s, const PrimeSet& pi) {
  for (Element x = 0; x < s.order; ++x) {
    if (!pi.is_pi_number(index_period(s, x).period)) {
      return false;
    }
  }
  return true;
}

inline bool is_aperiodic(const FiniteSemigroup& s) {
  return is_in_gbar_pi(s, PrimeSet::none());
}

}  // namespace pointlike
