// Command-line front end: Cayley-table analysis, pointlike computation,
// certificate construction and the brute-force soundness oracle.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pointlike/certificate.hpp"
#include "pointlike/io.hpp"
#include "pointlike/oracle.hpp"

using namespace pointlike;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceCap = 3;

FiniteSemigroup load_cayley(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  return parse_cayley(in);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write " + path);
  }
  out << j.dump(2) << "\n";
}

int cmd_check(const std::string& file) {
  const auto s = load_cayley(file);
  std::cout << "ok: associative semigroup of order " << s.order;
  if (s.identity) {
    std::cout << ", identity " << *s.identity;
  }
  std::cout << "\n";
  return kOk;
}

int cmd_green(const std::string& file, const std::string& pi_text) {
  const auto s = load_cayley(file);
  const auto pi = PrimeSet::parse(pi_text);
  write_green_report(std::cout, s, compute_green(s), pi);
  return kOk;
}

int cmd_membership(const std::string& file, const std::string& pi_text) {
  const auto s = load_cayley(file);
  const auto pi = PrimeSet::parse(pi_text);
  const bool member = is_in_gbar_pi(s, pi);
  std::cout << (member ? "member" : "not a member")
            << " of the variety for pi = " << pi.to_string() << "\n";
  return kOk;
}

int cmd_pointlikes(const std::string& file, const std::string& pi_text,
                   const std::string& json_out) {
  const auto s = load_cayley(file);
  const auto pi = PrimeSet::parse(pi_text);
  const auto cp = cp_closure(s, pi);
  const auto maximal = maximal_pointlikes(cp);
  std::cout << "closure members (" << cp.members.size() << "):\n";
  for (Subset m : cp.members) {
    std::cout << "  " << subset_to_string(m) << "\n";
  }
  std::cout << "maximal pointlikes (" << maximal.size() << "):\n";
  for (Subset m : maximal) {
    std::cout << "  " << subset_to_string(m) << "\n";
  }
  if (!json_out.empty()) {
    nlohmann::json j;
    j["input"] = {{"n", s.order}, {"tableSha256", table_digest(s)}};
    j["pi"] = pi.is_all() ? nlohmann::json("all") : nlohmann::json(pi.primes());
    j["members"] = nlohmann::json::array();
    for (Subset m : cp.members) {
      j["members"].push_back(subset_elements(m));
    }
    j["maximal"] = nlohmann::json::array();
    for (Subset m : maximal) {
      j["maximal"].push_back(subset_elements(m));
    }
    write_json(json_out, j);
  }
  return kOk;
}

int cmd_certify(const std::string& file, const std::string& pi_text,
                std::size_t max_flags, std::size_t max_cp,
                const std::string& json_out) {
  const auto s = load_cayley(file);
  const auto pi = PrimeSet::parse(pi_text);
  CertifyOptions opt;
  opt.max_flags = max_flags;
  opt.max_cp = max_cp;
  const auto cert = certify(s, pi, opt);
  if (!json_out.empty()) {
    write_json(json_out, cert.to_json());
  }
  std::cout << "closure members: " << cert.cp.members.size() << "\n";
  if (!cert.verified) {
    std::cout << "not verified: " << cert.not_verified_reason << "\n";
    return kResourceCap;
  }
  std::cout << "cover: " << cert.s_pi.elements.size() << " elements on "
            << cert.states.size() << " flag states\n";
  for (const auto& [name, outcome] : cert.checks) {
    std::cout << "check " << name << ": " << (outcome.ok ? "ok" : "FAILED")
              << "\n";
    for (const auto& c : outcome.counterexamples) {
      std::cout << "  " << c << "\n";
    }
  }
  std::cout << (cert.accepted() ? "accepted" : "rejected") << "\n";
  return cert.accepted() ? kOk : kVerificationFailure;
}

int cmd_syntactic(const std::string& file, const std::string& out_path) {
  std::ifstream in(file);
  if (!in) {
    throw InputError("cannot open " + file);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
  const auto dfa = parse_dfa(j);
  const auto ts = transition_semigroup(dfa);
  const auto table = ts.cayley();
  std::cout << "transition semigroup: " << ts.elements.size()
            << " elements on " << dfa.num_states << " states\n";
  for (std::size_t e = 0; e < ts.elements.size(); ++e) {
    std::cout << "  " << e << " = " << ts.word_string(e) << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw InputError("cannot write " + out_path);
    }
    write_cayley(out, table);
  } else {
    write_cayley(std::cout, table);
  }
  return kOk;
}

int cmd_oracle(const std::string& file, const std::string& pi_text,
               std::uint32_t max_order, std::size_t budget) {
  const auto s = load_cayley(file);
  const auto pi = PrimeSet::parse(pi_text);
  const auto cp = cp_closure(s, pi);
  const auto rep = run_oracle(s, cp, pi, max_order, budget);
  std::cout << "witnesses tried: " << rep.witnesses_tried << " ("
            << (rep.exhaustive ? "exhaustive" : "sampled") << ")\n";
  for (const auto& f : rep.failures) {
    std::cout << "  " << f << "\n";
  }
  std::cout << (rep.ok ? "no closure member separated"
                       : "SEPARATION FOUND (implementation bug)")
            << "\n";
  return rep.ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-semigroup pointlike toolkit"};
  app.require_subcommand(1);

  std::string file, pi_text = "none", json_out, out_path;
  std::size_t max_flags = 200000, max_cp = 200000, budget = 10000;
  std::uint32_t max_order = 3;

  auto* check = app.add_subcommand("check", "validate a Cayley table file");
  check->add_option("file", file)->required();

  auto* green = app.add_subcommand("green", "Green's relations report");
  green->add_option("file", file)->required();
  green->add_option("--pi", pi_text, "prime set: none, all or e.g. 2,3");

  auto* membership =
      app.add_subcommand("membership", "variety membership test");
  membership->add_option("file", file)->required();
  membership->add_option("--pi", pi_text)->required();

  auto* pointlikes =
      app.add_subcommand("pointlikes", "compute the pointlike closure");
  pointlikes->add_option("file", file)->required();
  pointlikes->add_option("--pi", pi_text)->required();
  pointlikes->add_option("--json", json_out, "write a JSON report");

  auto* certify_cmd =
      app.add_subcommand("certify", "build and verify the certificate");
  certify_cmd->add_option("file", file)->required();
  certify_cmd->add_option("--pi", pi_text)->required();
  certify_cmd->add_option("--max-flags", max_flags);
  certify_cmd->add_option("--max-cp", max_cp);
  certify_cmd->add_option("--json", json_out, "write the certificate");

  auto* syntactic = app.add_subcommand(
      "syntactic", "transition semigroup of a DFA given as JSON");
  syntactic->add_option("file", file)->required();
  syntactic->add_option("--out", out_path, "write the Cayley table here");

  auto* oracle = app.add_subcommand("oracle", "brute-force soundness sweep");
  oracle->add_option("file", file)->required();
  oracle->add_option("--pi", pi_text)->required();
  oracle->add_option("--max-order", max_order);
  oracle->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) {
      return cmd_check(file);
    }
    if (green->parsed()) {
      return cmd_green(file, pi_text);
    }
    if (membership->parsed()) {
      return cmd_membership(file, pi_text);
    }
    if (pointlikes->parsed()) {
      return cmd_pointlikes(file, pi_text, json_out);
    }
    if (certify_cmd->parsed()) {
      return cmd_certify(file, pi_text, max_flags, max_cp, json_out);
    }
    if (syntactic->parsed()) {
      return cmd_syntactic(file, out_path);
    }
    if (oracle->parsed()) {
      return cmd_oracle(file, pi_text, max_order, budget);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kInputError;
}
