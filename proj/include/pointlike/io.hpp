#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pointlike/errors.hpp"
#include "pointlike/green.hpp"
#include "pointlike/primes.hpp"
#include "pointlike/semigroup.hpp"
#include "pointlike/transformation.hpp"

namespace pointlike {

// Cayley table text format: first non-comment line `n`, then n lines of n
// space-separated entries in 0..n-1, optional `identity k` line, `#` comments.
inline FiniteSemigroup parse_cayley(std::istream& in) {
  FiniteSemigroup s;
  std::string line;
  std::vector<std::string> rows;
  std::optional<Element> identity;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) {
      continue;  // blank or comment line
    }
    if (first == "identity") {
      long k = -1;
      if (!(ls >> k) || k < 0) {
        throw InputError("malformed identity line");
      }
      identity = Element(k);
      continue;
    }
    rows.push_back(line);
  }
  if (rows.empty()) {
    throw InputError("empty Cayley file");
  }
  {
    std::istringstream hs(rows.front());
    long n = 0;
    std::string extra;
    if (!(hs >> n) || n <= 0 || (hs >> extra)) {
      throw InputError("first line must be the order n");
    }
    s.order = std::uint32_t(n);
  }
  if (rows.size() != std::size_t(s.order) + 1) {
    throw InputError("expected " + std::to_string(s.order) +
                     " table rows, found " + std::to_string(rows.size() - 1));
  }
  for (std::uint32_t r = 0; r < s.order; ++r) {
    std::istringstream rs(rows[r + 1]);
    for (std::uint32_t c = 0; c < s.order; ++c) {
      long v = -1;
      if (!(rs >> v) || v < 0 || v >= long(s.order)) {
        throw InputError("bad entry in table row " + std::to_string(r));
      }
      s.table.push_back(Element(v));
    }
    std::string extra;
    if (rs >> extra) {
      throw InputError("trailing data in table row " + std::to_string(r));
    }
  }
  s.identity = identity;
  validate(s);
  return s;
}

inline void write_cayley(std::ostream& out, const FiniteSemigroup& s) {
  out << s.order << "\n";
  for (std::uint32_t r = 0; r < s.order; ++r) {
    for (std::uint32_t c = 0; c < s.order; ++c) {
      if (c > 0) {
        out << ' ';
      }
      out << s.at(r, c);
    }
    out << "\n";
  }
  if (s.identity) {
    out << "identity " << *s.identity << "\n";
  }
}

// A DFA given as JSON; only the transition maps matter for the transition
// semigroup (initial/accepting are carried through untouched).
struct DfaDescription {
  std::uint32_t num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<StateMap> transitions;  // aligned with alphabet
};

inline DfaDescription parse_dfa(const nlohmann::json& j) {
  DfaDescription dfa;
  try {
    dfa.num_states = j.at("numStates").get<std::uint32_t>();
    for (const auto& sym : j.at("alphabet")) {
      dfa.alphabet.push_back(sym.get<std::string>());
    }
    const auto& trans = j.at("transitions");
    for (const auto& sym : dfa.alphabet) {
      StateMap m = trans.at(sym).get<StateMap>();
      if (m.size() != dfa.num_states) {
        throw InputError("transition map for '" + sym + "' is not total");
      }
      for (auto x : m) {
        if (x >= dfa.num_states) {
          throw InputError("transition for '" + sym + "' leaves the state set");
        }
      }
      dfa.transitions.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed DFA JSON: ") + e.what());
  }
  if (dfa.num_states == 0 || dfa.alphabet.empty()) {
    throw InputError("DFA needs at least one state and one symbol");
  }
  return dfa;
}

// The transition semigroup of the DFA (closure of the letter maps), with one
// witnessing word per element.
inline TransformationSemigroup transition_semigroup(
    const DfaDescription& dfa, std::size_t max_elements = 1u << 20) {
  std::vector<NamedGenerator> gens;
  for (std::size_t i = 0; i < dfa.alphabet.size(); ++i) {
    gens.push_back(NamedGenerator{dfa.alphabet[i], dfa.transitions[i]});
  }
  return close_transformations(dfa.num_states, gens, max_elements);
}

// One line per J-class: id, members, subclass counts, Schutzenberger group
// order and the pi'-free verdict.
inline void write_green_report(std::ostream& out, const FiniteSemigroup& s,
                               const GreenData& g, const PrimeSet& pi) {
  out << "order " << s.order << ", " << g.classesJ.size() << " J-classes, "
      << g.classesL.size() << " L, " << g.classesR.size() << " R, "
      << g.classesH.size() << " H (pi = " << pi.to_string() << ")\n";
  const auto pi_free = compute_pi_free(s, g, pi);
  for (std::uint32_t j = 0; j < g.classesJ.size(); ++j) {
    std::set<std::uint32_t> lcs, rcs, hcs;
    for (Element a : g.classesJ[j]) {
      lcs.insert(g.classL[a]);
      rcs.insert(g.classR[a]);
      hcs.insert(g.classH[a]);
    }
    const auto grp = schutzenberger_group(s, representative_h_class(g, j));
    out << "J" << j << ": members {";
    for (std::size_t i = 0; i < g.classesJ[j].size(); ++i) {
      out << (i ? "," : "") << g.classesJ[j][i];
    }
    out << "} L=" << lcs.size() << " R=" << rcs.size() << " H=" << hcs.size()
        << " |GammaR|=" << grp.perms.size()
        << (pi_free[g.classesJ[j].front()] ? " pi'-free" : " NOT pi'-free")
        << "\n";
  }
}

}  // namespace pointlike
