#include <catch2/catch_amalgamated.hpp>

#include "pointlike/certificate.hpp"

#include "corpus.hpp"

using namespace pointlike;

namespace {

CertificateContext make_context(const FiniteSemigroup& base,
                                const PrimeSet& pi) {
  CertificateContext ctx;
  ctx.base = base;
  ctx.pi = pi;
  ctx.cp = cp_closure(base, pi);
  ctx.s = make_subset_semigroup(base, ctx.cp);
  ctx.green = compute_green(ctx.s.sg);
  ctx.pi_free = compute_pi_free(ctx.s.sg, ctx.green, pi);
  ctx.blowup = idempotent_blowup(
      ctx.s, ctx.green, ctx.pi_free,
      construct_preblowup(ctx.s, ctx.green, ctx.pi_free, pi));
  ctx.flags = enumerate_pi_free_flags(ctx.s.sg, ctx.green, ctx.pi_free, 10000);
  return ctx;
}

}  // namespace

TEST_CASE("table digest") {
  const auto z2 = corpus::cyclic(2);
  CHECK(table_digest(z2) == table_digest(corpus::cyclic(2)));
  CHECK(table_digest(z2) != table_digest(corpus::cyclic(3)));
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("flag state enumeration") {
  // CP_{2}(Z2): both singletons free, one L-class -> eps, ({0}), ({1})
  auto ctx = make_context(corpus::cyclic(2), PrimeSet::of({2}));
  REQUIRE(ctx.flags.states.size() == 3);
  CHECK(ctx.flags.states[0] == Chain{});
  CHECK(ctx.flags.states[1] == Chain{0});
  CHECK(ctx.flags.states[2] == Chain{1});
  CHECK(ctx.flags.id_of(Chain{1}) == 2);
  CHECK_THROWS_AS(ctx.flags.id_of(Chain{0, 1}), CertificateError);

  // CP_none(Z2): only {0,1} is free -> eps, (C)
  ctx = make_context(corpus::cyclic(2), PrimeSet::none());
  REQUIRE(ctx.flags.states.size() == 2);
  CHECK(ctx.flags.states[1] == Chain{2});

  // every state is a flag over free elements
  for (const auto& pi : {PrimeSet::none(), PrimeSet::of({2})}) {
    const auto c = make_context(corpus::cyclic(6), pi);
    for (const auto& st : c.flags.states) {
      CHECK(is_flag(c.green, st));
      for (Element e : st) {
        CHECK(c.pi_free[e]);
      }
    }
  }

  CHECK_THROWS_AS(
      enumerate_pi_free_flags(ctx.s.sg, ctx.green, ctx.pi_free, 1),
      ResourceError);
}

TEST_CASE("generator actions by hand") {
  // the aperiodic cover of Z2: everything funnels into the (C) state
  auto ctx = make_context(corpus::cyclic(2), PrimeSet::none());
  const BlowupExtension bhat(ctx.s, ctx.blowup);
  CHECK(generator_for(ctx, bhat, 0) == std::vector<std::uint32_t>{1, 1});
  CHECK(generator_for(ctx, bhat, 1) == std::vector<std::uint32_t>{1, 1});

  // pi = {2}: the generators act as Z2 on the singleton states
  ctx = make_context(corpus::cyclic(2), PrimeSet::of({2}));
  const BlowupExtension bhat2(ctx.s, ctx.blowup);
  CHECK(generator_for(ctx, bhat2, 0) == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(generator_for(ctx, bhat2, 1) == std::vector<std::uint32_t>{2, 2, 1});
}

TEST_CASE("certificates are accepted on the corpus") {
  struct Case {
    FiniteSemigroup t;
    PrimeSet pi;
  };
  const std::vector<Case> cases = {
      {corpus::cyclic(2), PrimeSet::none()},
      {corpus::cyclic(2), PrimeSet::of({2})},
      {corpus::cyclic(6), PrimeSet::of({2})},
      {corpus::cyclic(6), PrimeSet::of({3})},
      {corpus::t2(), PrimeSet::none()},
      {corpus::t2(), PrimeSet::of({2})},
      {corpus::right_zero_with_identity(), PrimeSet::none()},
  };
  for (const auto& c : cases) {
    const auto cert = certify(c.t, c.pi);
    INFO("pi = " << c.pi.to_string());
    CHECK(cert.verified);
    CHECK(cert.accepted());
    for (const auto& [name, outcome] : cert.checks) {
      INFO(name);
      CHECK(outcome.ok);
    }
    // the cover is in the target variety and covers: phi total on T
    REQUIRE(cert.phi.size() == c.t.order);
    for (const auto& fiber : cert.phi) {
      CHECK_FALSE(fiber.empty());
    }
  }
}

TEST_CASE("certificate shapes for Z2") {
  const auto cert = certify(corpus::cyclic(2), PrimeSet::none());
  CHECK(cert.states.size() == 2);
  CHECK(cert.s_pi.elements.size() == 1);  // a single constant map
  CHECK(cert.phi == std::vector<std::vector<std::uint32_t>>{{1}, {1}});

  const auto cert2 = certify(corpus::cyclic(2), PrimeSet::of({2}));
  CHECK(cert2.states.size() == 3);
  CHECK(cert2.s_pi.elements.size() == 2);  // acts as Z2 itself
  CHECK(cert2.phi == std::vector<std::vector<std::uint32_t>>{{1}, {2}});
}

TEST_CASE("certificate json") {
  const auto cert = certify(corpus::cyclic(6), PrimeSet::of({2}));
  const auto j = cert.to_json();
  CHECK(j["accepted"] == true);
  CHECK(j["verified"] == true);
  CHECK(j["input"]["n"] == 6);
  CHECK(j["pi"] == std::vector<std::uint64_t>{2});
  CHECK(j["cp"]["members"].size() == 8);
  CHECK(j["cp"]["maximal"].size() == 2);
  CHECK(j["checks"]["relationalMorphism"] == true);
  CHECK(j["counterexamples"].empty());
  // byte-identical across runs
  const auto again = certify(corpus::cyclic(6), PrimeSet::of({2}));
  CHECK(j.dump() == again.to_json().dump());

  const auto all = certify(corpus::cyclic(2), PrimeSet::all());
  CHECK(all.to_json()["pi"] == "all");
}

TEST_CASE("resource cap yields an unverified certificate") {
  CertifyOptions opt;
  opt.max_flags = 1;
  const auto cert = certify(corpus::cyclic(6), PrimeSet::of({2}), opt);
  CHECK_FALSE(cert.verified);
  CHECK_FALSE(cert.accepted());
  CHECK_FALSE(cert.not_verified_reason.empty());
  // the closure part is still emitted
  CHECK(cert.cp.members.size() == 8);
  const auto j = cert.to_json();
  CHECK(j["verified"] == false);
  CHECK(j.contains("notVerifiedReason"));
  CHECK_FALSE(j.contains("sPi"));
}

TEST_CASE("non-associative input is rejected") {
  FiniteSemigroup s;
  s.order = 2;
  s.table = {0, 1, 0, 0};
  const auto cert = certify(s, PrimeSet::none());
  CHECK_FALSE(cert.accepted());
  CHECK_FALSE(cert.checks.at("associativity").ok);
}
