#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/closure.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/primes.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// Brute-force soundness oracle: no relational morphism into a small member of
// Gbar_pi may separate a closure member.

// All associative order <= max_order tables (order 3 means a 3^9 sweep) whose
// subgroups are pi-groups.  Deduplicated by table equality, not isomorphism.
inline std::vector<FiniteSemigroup> enumerate_small_gbar_pi(
    std::uint32_t max_order, const PrimeSet& pi) {
  if (max_order > 3) {
    throw InputError("exhaustive enumeration is limited to order 3");
  }
  std::vector<FiniteSemigroup> out;
  for (std::uint32_t n = 1; n <= max_order; ++n) {
    const std::size_t cells = std::size_t(n) * n;
    std::vector<Element> table(cells, 0);
    while (true) {
      FiniteSemigroup s;
      s.order = n;
      s.table = table;
      if (is_associative(s) && is_in_gbar_pi(s, pi)) {
        out.push_back(s);
      }
      // odometer step over the n^(n*n) tables
      std::size_t i = 0;
      while (i < cells && table[i] == n - 1) {
        table[i] = 0;
        ++i;
      }
      if (i == cells) {
        break;
      }
      ++table[i];
    }
  }
  return out;
}

// A product-closed relation R in T x S projecting onto all of T.
struct RelationalMorphismWitness {
  const FiniteSemigroup* target = nullptr;
  std::vector<std::pair<Element, Element>> graph;  // sorted pairs

  bool relates(Element t, Element s) const {
    return std::binary_search(graph.begin(), graph.end(), std::make_pair(t, s));
  }
};

namespace detail {

inline bool close_and_validate(const FiniteSemigroup& t,
                               const FiniteSemigroup& target,
                               std::set<std::pair<Element, Element>>& pairs) {
  // close under products in T x target
  std::vector<std::pair<Element, Element>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    const auto a = work.back();
    work.pop_back();
    for (const auto& b : std::vector<std::pair<Element, Element>>(
             pairs.begin(), pairs.end())) {
      for (const auto& p :
           {std::make_pair(t.at(a.first, b.first), target.at(a.second, b.second)),
            std::make_pair(t.at(b.first, a.first),
                           target.at(b.second, a.second))}) {
        if (pairs.insert(p).second) {
          work.push_back(p);
        }
      }
    }
  }
  std::vector<bool> covered(t.order, false);
  for (const auto& p : pairs) {
    covered[p.first] = true;
  }
  for (bool c : covered) {
    if (!c) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Exhaustive over all subsets of T x target when |T| * |target| <= 12,
// otherwise `budget` random closed generator selections (fixed seed).
inline std::vector<RelationalMorphismWitness> enumerate_relational_morphisms(
    const FiniteSemigroup& t, const FiniteSemigroup& target,
    std::size_t budget = 10000) {
  std::vector<RelationalMorphismWitness> out;
  std::set<std::vector<std::pair<Element, Element>>> seen;
  const std::size_t cells = std::size_t(t.order) * target.order;
  auto emit = [&](std::set<std::pair<Element, Element>>& pairs) {
    if (!detail::close_and_validate(t, target, pairs)) {
      return;
    }
    std::vector<std::pair<Element, Element>> graph(pairs.begin(), pairs.end());
    if (!seen.insert(graph).second) {
      return;
    }
    RelationalMorphismWitness w;
    w.target = &target;
    w.graph = std::move(graph);
    out.push_back(std::move(w));
  };
  if (cells <= 12) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << cells); ++mask) {
      std::set<std::pair<Element, Element>> pairs;
      for (std::size_t i = 0; i < cells; ++i) {
        if (mask & (std::uint64_t(1) << i)) {
          pairs.insert({Element(i / target.order), Element(i % target.order)});
        }
      }
      emit(pairs);
    }
  } else {
    std::mt19937 rng(0xA11CE5);
    std::uniform_int_distribution<Element> pick_s(0, target.order - 1);
    std::bernoulli_distribution keep(0.25);
    for (std::size_t k = 0; k < budget; ++k) {
      std::set<std::pair<Element, Element>> pairs;
      for (Element a = 0; a < t.order; ++a) {
        pairs.insert({a, pick_s(rng)});  // keep the projection full
        for (Element b = 0; b < target.order; ++b) {
          if (keep(rng)) {
            pairs.insert({a, b});
          }
        }
      }
      emit(pairs);
    }
  }
  return out;
}

struct OracleReport {
  bool ok = true;
  std::size_t witnesses_tried = 0;
  bool exhaustive = true;
  std::vector<std::string> failures;
};

// Checks that no witness separates any closure member: for each member Y and
// each witness there must be a single target element whose fiber contains Y.
inline OracleReport oracle_check(
    const FiniteSemigroup& t, const CpResult& cp,
    const std::vector<RelationalMorphismWitness>& witnesses) {
  OracleReport rep;
  rep.witnesses_tried = witnesses.size();
  for (const auto& w : witnesses) {
    std::vector<Subset> fibers(w.target->order, 0);
    for (const auto& p : w.graph) {
      fibers[p.second] |= singleton(p.first);
    }
    for (Subset y : cp.members) {
      bool covered = false;
      for (Subset f : fibers) {
        if ((y & ~f) == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        rep.ok = false;
        rep.failures.push_back("member " + subset_to_string(y) +
                               " separated by a witness with target order " +
                               std::to_string(w.target->order));
      }
    }
  }
  (void)t;
  return rep;
}

// End-to-end oracle sweep for one (T, pi): every Gbar_pi target of order up
// to max_order, morphisms exhaustive or sampled per target.
inline OracleReport run_oracle(const FiniteSemigroup& t, const CpResult& cp,
                               const PrimeSet& pi, std::uint32_t max_order,
                               std::size_t budget) {
  OracleReport total;
  const auto targets = enumerate_small_gbar_pi(max_order, pi);
  for (const auto& target : targets) {
    const auto witnesses = enumerate_relational_morphisms(t, target, budget);
    if (std::size_t(t.order) * target.order > 12) {
      total.exhaustive = false;
    }
    const OracleReport rep = oracle_check(t, cp, witnesses);
    total.witnesses_tried += rep.witnesses_tried;
    if (!rep.ok) {
      total.ok = false;
      total.failures.insert(total.failures.end(), rep.failures.begin(),
                            rep.failures.end());
    }
  }
  return total;
}

}  // namespace pointlike
