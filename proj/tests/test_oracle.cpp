#include <catch2/catch_amalgamated.hpp>

#include "pointlike/oracle.hpp"

#include "corpus.hpp"

using namespace pointlike;

namespace {

bool has_table(const std::vector<FiniteSemigroup>& sgs,
               const std::vector<Element>& table) {
  for (const auto& s : sgs) {
    if (s.table == table) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("small target enumeration") {
  CHECK(enumerate_small_gbar_pi(1, PrimeSet::none()).size() == 1);

  const auto all2 = enumerate_small_gbar_pi(2, PrimeSet::all());
  const auto ap2 = enumerate_small_gbar_pi(2, PrimeSet::none());
  // the only non-aperiodic order <= 2 tables are the two labelings of Z2
  CHECK(all2.size() == ap2.size() + 2);
  CHECK(has_table(all2, {0, 1, 1, 0}));
  CHECK_FALSE(has_table(ap2, {0, 1, 1, 0}));
  CHECK(has_table(enumerate_small_gbar_pi(2, PrimeSet::of({2})),
                  {0, 1, 1, 0}));
  for (const auto& sgs : {all2, ap2}) {
    for (const auto& s : sgs) {
      CHECK(is_associative(s));
    }
  }
  for (const auto& s : ap2) {
    CHECK(is_in_gbar_pi(s, PrimeSet::none()));
  }

  CHECK(enumerate_small_gbar_pi(3, PrimeSet::none()).size() >
        enumerate_small_gbar_pi(2, PrimeSet::none()).size());
  CHECK_THROWS_AS(enumerate_small_gbar_pi(4, PrimeSet::none()), InputError);
}

TEST_CASE("relational morphism enumeration") {
  const auto z2 = corpus::cyclic(2);
  const auto witnesses = enumerate_relational_morphisms(z2, z2);
  CHECK_FALSE(witnesses.empty());
  bool has_identity = false;
  bool has_universal = false;
  for (const auto& w : witnesses) {
    // every witness is product-closed and projects onto all of T
    std::vector<bool> covered(z2.order, false);
    for (const auto& a : w.graph) {
      covered[a.first] = true;
      for (const auto& b : w.graph) {
        CHECK(w.relates(z2.at(a.first, b.first),
                        w.target->at(a.second, b.second)));
      }
    }
    CHECK(covered == std::vector<bool>(z2.order, true));
    if (w.graph == std::vector<std::pair<Element, Element>>{{0, 0}, {1, 1}}) {
      has_identity = true;
    }
    if (w.graph.size() == 4) {
      has_universal = true;
    }
  }
  CHECK(has_identity);
  CHECK(has_universal);
}

TEST_CASE("sampled enumeration is deterministic") {
  const auto z6 = corpus::cyclic(6);
  const auto z3 = corpus::cyclic(3);  // 18 cells forces the sampled path
  const auto a = enumerate_relational_morphisms(z6, z3, 50);
  const auto b = enumerate_relational_morphisms(z6, z3, 50);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph == b[i].graph);
  }
}

TEST_CASE("a witness can separate a candidate set") {
  const auto z2 = corpus::cyclic(2);
  // {0,1} is a pi = none pointlike of Z2, but the identity relation into Z2
  // itself separates it -- which is exactly why Z2 is not a legal target there
  const auto cp = cp_closure(z2, PrimeSet::none());
  RelationalMorphismWitness w;
  w.target = &z2;
  w.graph = {{0, 0}, {1, 1}};
  const auto rep = oracle_check(z2, cp, {w});
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());

  // against the pi = {2} closure the same witness separates nothing
  const auto cp2 = cp_closure(z2, PrimeSet::of({2}));
  CHECK(oracle_check(z2, cp2, {w}).ok);
}

TEST_CASE("oracle sweep finds no separation") {
  struct Case {
    FiniteSemigroup t;
    PrimeSet pi;
  };
  const std::vector<Case> cases = {
      {corpus::cyclic(2), PrimeSet::none()},
      {corpus::cyclic(2), PrimeSet::of({2})},
      {corpus::cyclic(3), PrimeSet::none()},
      {corpus::t2(), PrimeSet::none()},
  };
  for (const auto& c : cases) {
    const auto cp = cp_closure(c.t, c.pi);
    const auto rep = run_oracle(c.t, cp, c.pi, 2, 200);
    INFO("pi = " << c.pi.to_string());
    CHECK(rep.ok);
    CHECK(rep.witnesses_tried > 0);
    CHECK(rep.exhaustive);
  }
}

TEST_CASE("oracle flags an inflated candidate") {
  // adding a non-pointlike set to the aperiodic closure of T2 must trip the
  // sweep: {id, c0} maps into distinct fibers under the evaluation morphism
  const auto t2 = corpus::t2();
  auto cp = cp_closure(t2, PrimeSet::none());
  const Subset fake = singleton(0) | singleton(2);
  REQUIRE_FALSE(is_pointlike(fake, cp).has_value());
  cp.members.push_back(fake);
  const auto rep = run_oracle(t2, cp, PrimeSet::none(), 2, 200);
  CHECK_FALSE(rep.ok);
}
