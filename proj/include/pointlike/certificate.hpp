#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "json.hpp"

#include "pointlike/blowup.hpp"
#include "pointlike/chains.hpp"
#include "pointlike/closure.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/green.hpp"
#include "pointlike/primes.hpp"
#include "pointlike/semigroup.hpp"
#include "pointlike/transformation.hpp"

namespace pointlike {

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

inline std::string table_digest(const FiniteSemigroup& s) {
  std::string data = std::to_string(s.order);
  for (Element x : s.table) {
    data += ',';
    data += std::to_string(x);
  }
  return sha256_hex(data);
}

// All strict L-chains over the pi'-free elements of S, plus the empty flag
// (state 0, needed as the phi-image of the adjoined identity of T).
struct FlagStateSpace {
  std::vector<Chain> states;
  std::map<Chain, std::uint32_t> index;

  std::uint32_t id_of(const Chain& c) const {
    auto it = index.find(c);
    if (it == index.end()) {
      throw CertificateError("chain " + chain_to_string(c) +
                             " is not a pi'-free flag state");
    }
    return it->second;
  }
};

inline FlagStateSpace enumerate_pi_free_flags(const FiniteSemigroup& s,
                                              const GreenData& g,
                                              const std::vector<bool>& pi_free,
                                              std::size_t max_flags) {
  FlagStateSpace out;
  std::size_t longest = 0;
  Chain cur;
  std::function<void()> rec = [&] {
    if (out.states.size() >= max_flags) {
      std::size_t free_count = 0;
      for (bool b : pi_free) {
        free_count += b;
      }
      throw ResourceError("flag cap of " + std::to_string(max_flags) +
                          " exceeded (" + std::to_string(free_count) +
                          " pi'-free elements, longest chain so far " +
                          std::to_string(longest) + ")");
    }
    longest = std::max(longest, cur.size());
    out.index[cur] = std::uint32_t(out.states.size());
    out.states.push_back(cur);
    for (Element e = 0; e < s.order; ++e) {
      if (pi_free[e] && (cur.empty() || g.ltL(e, cur.back()))) {
        cur.push_back(e);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();
  return out;
}

struct CheckOutcome {
  bool ok = true;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    ok = false;
    counterexamples.push_back(std::move(what));
  }
};

// The full machine-checkable certificate for one (T, pi) instance.
struct Certificate {
  PrimeSet pi;
  std::string table_sha256;
  std::uint32_t base_order = 0;

  CpResult cp;
  std::vector<Subset> maximal;

  bool verified = true;  // false when the flag cap stopped verification
  std::string not_verified_reason;

  // Present only when verified.
  std::vector<Chain> states;
  std::vector<std::vector<std::uint32_t>> generator_maps;  // per t in T
  TransformationSemigroup s_pi;
  std::vector<std::vector<std::uint32_t>> phi;  // per t, sorted state ids

  std::map<std::string, CheckOutcome> checks;

  bool accepted() const {
    if (!verified) {
      return false;
    }
    for (const auto& [name, outcome] : checks) {
      if (!outcome.ok) {
        return false;
      }
    }
    return true;
  }

  nlohmann::json to_json() const;
};

// Everything needed to evaluate the S^pi generators for one instance.
struct CertificateContext {
  FiniteSemigroup base;  // T
  PrimeSet pi;
  CpResult cp;
  SubsetSemigroup s;
  GreenData green;
  std::vector<bool> pi_free;
  BlowupOperator blowup;
  FlagStateSpace flags;
};

// The generator t~ = (Delta_{t}, {t}) Bhat rho as a map on flag states.
inline std::vector<std::uint32_t> generator_for(const CertificateContext& ctx,
                                                const BlowupExtension& bhat,
                                                Element t) {
  const Element st = ctx.s.id_of(singleton(t));
  std::vector<std::uint32_t> out(ctx.flags.states.size());
  for (std::size_t i = 0; i < ctx.flags.states.size(); ++i) {
    Chain x = apply_diagonal(ctx.s.sg, ctx.flags.states[i], st);
    x.insert(x.begin(), st);  // append the letter {t} on the right
    const Chain y = reduce(ctx.green, bhat(x));
    if (y.empty()) {
      throw CertificateError("generator output collapsed to the empty flag");
    }
    out[i] = ctx.flags.id_of(y);
  }
  return out;
}

struct CertifyOptions {
  std::size_t max_cp = 200000;
  std::size_t max_flags = 200000;
  std::size_t max_elements = 1u << 20;
};

inline Certificate certify(const FiniteSemigroup& t, const PrimeSet& pi,
                           const CertifyOptions& opt = {}) {
  Certificate cert;
  cert.pi = pi;
  cert.base_order = t.order;
  cert.table_sha256 = table_digest(t);

  CheckOutcome assoc;
  if (auto bad = find_nonassociative_triple(t)) {
    auto [a, b, c] = *bad;
    assoc.fail("(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")");
    cert.checks["associativity"] = assoc;
    cert.verified = false;
    cert.not_verified_reason = "input not associative";
    return cert;
  }
  cert.checks["associativity"] = assoc;

  cert.cp = cp_closure(t, pi, opt.max_cp);
  cert.maximal = maximal_pointlikes(cert.cp);

  CheckOutcome cp_check;
  if (auto bad = check_cp_invariants(t, cert.cp)) {
    cp_check.fail(*bad);
  }
  cert.checks["cpClosure"] = cp_check;

  CertificateContext ctx;
  ctx.base = t;
  ctx.pi = pi;
  ctx.cp = cert.cp;
  ctx.s = make_subset_semigroup(t, cert.cp);
  ctx.green = compute_green(ctx.s.sg);
  ctx.pi_free = compute_pi_free(ctx.s.sg, ctx.green, pi);

  CheckOutcome blowup_check;
  try {
    const BlowupOperator pre =
        construct_preblowup(ctx.s, ctx.green, ctx.pi_free, pi);
    ctx.blowup = idempotent_blowup(ctx.s, ctx.green, ctx.pi_free, pre);
    const BlowupReport rep =
        verify_blowup_axioms(ctx.s, ctx.green, ctx.pi_free, ctx.blowup, true);
    for (const auto& f : rep.failures) {
      blowup_check.fail(f);
    }
  } catch (const CertificateError& e) {
    blowup_check.fail(e.what());
    cert.checks["blowupAxioms"] = blowup_check;
    return cert;
  }
  cert.checks["blowupAxioms"] = blowup_check;

  try {
    ctx.flags = enumerate_pi_free_flags(ctx.s.sg, ctx.green, ctx.pi_free,
                                        opt.max_flags);
  } catch (const ResourceError& e) {
    cert.verified = false;
    cert.not_verified_reason = e.what();
    return cert;
  }
  cert.states = ctx.flags.states;

  const BlowupExtension bhat(ctx.s, ctx.blowup);
  std::vector<NamedGenerator> gens;
  for (Element x = 0; x < t.order; ++x) {
    const auto map = generator_for(ctx, bhat, x);
    cert.generator_maps.push_back(map);
    gens.push_back(NamedGenerator{"t" + std::to_string(x), map});
  }
  cert.s_pi = close_transformations(ctx.flags.states.size(), gens,
                                    opt.max_elements);

  // No element of S^pi may move a state to the empty flag.
  CheckOutcome nonempty;
  for (std::size_t e = 0; e < cert.s_pi.elements.size(); ++e) {
    for (std::size_t st = 0; st < ctx.flags.states.size(); ++st) {
      if (cert.s_pi.elements[e][st] == 0) {
        nonempty.fail("element " + cert.s_pi.word_string(e) +
                      " sends state " + std::to_string(st) + " to the empty "
                      "flag");
      }
    }
  }
  cert.checks["statesStayNonempty"] = nonempty;

  CheckOutcome membership;
  {
    const FiniteSemigroup spi_table = cert.s_pi.cayley();
    for (Element e = 0; e < spi_table.order; ++e) {
      if (!pi.is_pi_number(index_period(spi_table, e).period)) {
        membership.fail("element " + cert.s_pi.word_string(e) +
                        " has period " +
                        std::to_string(index_period(spi_table, e).period));
      }
    }
  }
  cert.checks["sPiMembership"] = membership;

  // phi: t -> all nonempty states whose omega contains t.
  for (Element x = 0; x < t.order; ++x) {
    std::vector<std::uint32_t> fiber;
    for (std::size_t st = 1; st < ctx.flags.states.size(); ++st) {
      const Subset w = ctx.s.subsets[chain_omega(ctx.flags.states[st])];
      if (w & singleton(x)) {
        fiber.push_back(std::uint32_t(st));
      }
    }
    cert.phi.push_back(fiber);
  }

  // Relational morphism: phi fully defined and, for every t and state x,
  // (x phi^{-1}) t is contained in (x t~) phi^{-1}.
  CheckOutcome relmorph;
  for (Element x = 0; x < t.order; ++x) {
    if (cert.phi[x].empty()) {
      relmorph.fail("phi(" + std::to_string(x) + ") is empty");
    }
    for (std::size_t st = 0; st < ctx.flags.states.size(); ++st) {
      const std::uint32_t img = cert.generator_maps[x][st];
      const Subset rhs = ctx.s.subsets[chain_omega(ctx.flags.states[img])];
      Subset lhs;
      if (st == 0) {
        lhs = singleton(x);  // {I} t = {t}
      } else {
        lhs = subset_product(
            t, ctx.s.subsets[chain_omega(ctx.flags.states[st])], singleton(x));
      }
      if ((lhs & ~rhs) != 0) {
        relmorph.fail("fails at (t=" + std::to_string(x) +
                      ", state=" + std::to_string(st) + ")");
      }
    }
  }
  cert.checks["relationalMorphism"] = relmorph;

  // Companion fibers: f phi~^{-1} is contained in eps f omega, a member of CP.
  CheckOutcome fibers;
  for (std::size_t e = 0; e < cert.s_pi.elements.size(); ++e) {
    const auto& f = cert.s_pi.elements[e];
    const Chain& eps_image = ctx.flags.states[f[0]];
    if (eps_image.empty()) {
      continue;  // already reported by statesStayNonempty
    }
    const Subset bound = ctx.s.subsets[chain_omega(eps_image)];
    if (!ctx.cp.contains(bound)) {
      fibers.fail("eps f omega not a closure member for f = " +
                  cert.s_pi.word_string(e));
      continue;
    }
    Subset fiber = 0;
    for (Element x = 0; x < t.order; ++x) {
      bool in_fiber = true;
      for (std::size_t st = 0; st < ctx.flags.states.size(); ++st) {
        const Chain& img = ctx.flags.states[f[st]];
        if (img.empty()) {
          in_fiber = false;
          break;
        }
        const Subset rhs = ctx.s.subsets[chain_omega(img)];
        Subset lhs;
        if (st == 0) {
          lhs = singleton(x);
        } else {
          lhs = subset_product(
              t, ctx.s.subsets[chain_omega(ctx.flags.states[st])],
              singleton(x));
        }
        if ((lhs & ~rhs) != 0) {
          in_fiber = false;
          break;
        }
      }
      if (in_fiber) {
        fiber |= singleton(x);
      }
    }
    if ((fiber & ~bound) != 0) {
      fibers.fail("fiber " + subset_to_string(fiber) +
                  " escapes eps f omega = " + subset_to_string(bound) +
                  " for f = " + cert.s_pi.word_string(e));
    }
  }
  // The witness generator t~ must lie in the companion relation of t; this is
  // exactly the relational morphism condition, asserted per generator above.
  cert.checks["fibers"] = fibers;

  return cert;
}

inline nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["input"] = {{"n", base_order}, {"tableSha256", table_sha256}};
  if (pi.is_all()) {
    j["pi"] = "all";
  } else {
    j["pi"] = pi.primes();
  }
  nlohmann::json jcp;
  jcp["members"] = nlohmann::json::array();
  for (Subset m : cp.members) {
    jcp["members"].push_back(subset_elements(m));
  }
  jcp["derivations"] = nlohmann::json::array();
  for (const auto& d : cp.derivations) {
    switch (d.kind) {
      case Derivation::Kind::singleton:
        jcp["derivations"].push_back({"singleton", d.a});
        break;
      case Derivation::Kind::product:
        jcp["derivations"].push_back({"product", d.a, d.b});
        break;
      case Derivation::Kind::omega_star:
        jcp["derivations"].push_back({"omega_star", d.a});
        break;
    }
  }
  jcp["maximal"] = nlohmann::json::array();
  for (Subset m : maximal) {
    jcp["maximal"].push_back(subset_elements(m));
  }
  j["cp"] = jcp;
  j["verified"] = verified;
  if (!verified) {
    j["notVerifiedReason"] = not_verified_reason;
  } else {
    nlohmann::json jspi;
    jspi["numStates"] = states.size();
    jspi["numElements"] = s_pi.elements.size();
    jspi["states"] = nlohmann::json::array();
    for (const auto& st : states) {
      jspi["states"].push_back(st);
    }
    jspi["generators"] = generator_maps;
    j["sPi"] = jspi;
    j["phi"] = phi;
  }
  nlohmann::json jchecks;
  nlohmann::json jcex = nlohmann::json::array();
  for (const auto& [name, outcome] : checks) {
    jchecks[name] = outcome.ok;
    for (const auto& c : outcome.counterexamples) {
      jcex.push_back({{"check", name}, {"detail", c}});
    }
  }
  j["checks"] = jchecks;
  j["counterexamples"] = jcex;
  j["accepted"] = accepted();
  return j;
}

}  // namespace pointlike
