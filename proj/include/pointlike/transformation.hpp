#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// A total map on 0..state_count-1, acting on the right: x |-> map[x].
using StateMap = std::vector<std::uint32_t>;

// Composition acting left to right: x (fg) = (x f) g.
inline StateMap compose(const StateMap& f, const StateMap& g) {
  StateMap out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    out[x] = g[f[x]];
  }
  return out;
}

struct NamedGenerator {
  std::string name;
  StateMap map;
};

// Closure of a set of state maps under composition.  Elements are identified
// extensionally; each carries one shortest witnessing word over the generator
// names (ties broken by BFS discovery order, i.e. lexicographically in
// generator position).
struct TransformationSemigroup {
  std::size_t state_count = 0;
  std::vector<StateMap> elements;
  std::vector<std::vector<std::uint32_t>> words;  // generator indices
  std::vector<std::string> generator_names;

  std::string word_string(std::size_t e) const {
    std::string out;
    for (std::size_t i = 0; i < words[e].size(); ++i) {
      if (i > 0) {
        out += '.';
      }
      out += generator_names[words[e][i]];
    }
    return out;
  }

  // Cayley table under composition; requires closedness.
  FiniteSemigroup cayley() const {
    FiniteSemigroup s;
    s.order = std::uint32_t(elements.size());
    s.table.assign(elements.size() * elements.size(), 0);
    std::map<StateMap, Element> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index[elements[i]] = Element(i);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto it = index.find(compose(elements[i], elements[j]));
        if (it == index.end()) {
          throw CertificateError("transformation set not closed");
        }
        s.table[i * elements.size() + j] = it->second;
      }
    }
    return s;
  }
};

inline TransformationSemigroup close_transformations(
    std::size_t state_count, const std::vector<NamedGenerator>& generators,
    std::size_t max_elements = 1u << 20) {
  TransformationSemigroup out;
  out.state_count = state_count;
  for (const auto& g : generators) {
    if (g.map.size() != state_count) {
      throw InputError("generator '" + g.name + "' is not a total map");
    }
    for (auto y : g.map) {
      if (y >= state_count) {
        throw InputError("generator '" + g.name + "' maps outside state set");
      }
    }
    out.generator_names.push_back(g.name);
  }
  std::map<StateMap, std::size_t> index;
  // BFS over right multiplication by generators gives shortest words; scanning
  // elements in discovery order and generators in position order makes the
  // first word found the lexicographically least among shortest ones.
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const StateMap& m = generators[gi].map;
    if (!index.count(m)) {
      index[m] = out.elements.size();
      out.elements.push_back(m);
      out.words.push_back({std::uint32_t(gi)});
    }
  }
  for (std::size_t e = 0; e < out.elements.size(); ++e) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      StateMap m = compose(out.elements[e], generators[gi].map);
      if (!index.count(m)) {
        if (out.elements.size() >= max_elements) {
          throw ResourceError("transformation closure exceeded cap of " +
                              std::to_string(max_elements));
        }
        index[m] = out.elements.size();
        auto word = out.words[e];
        word.push_back(std::uint32_t(gi));
        out.elements.push_back(std::move(m));
        out.words.push_back(std::move(word));
      }
    }
  }
  return out;
}

}  // namespace pointlike
