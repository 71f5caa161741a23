#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pointlike/closure.hpp"

#include "corpus.hpp"

using namespace pointlike;

namespace {

Subset mask(std::initializer_list<Element> xs) {
  Subset out = 0;
  for (Element x : xs) {
    out |= singleton(x);
  }
  return out;
}

std::set<Subset> member_set(const CpResult& cp) {
  return {cp.members.begin(), cp.members.end()};
}

}  // namespace

TEST_CASE("subset product") {
  const auto z3 = corpus::cyclic(3);
  CHECK(subset_product(z3, mask({1}), mask({2})) == mask({0}));
  CHECK(subset_product(z3, mask({0, 1, 2}), mask({0, 1, 2})) == mask({0, 1, 2}));
  const auto z6 = corpus::cyclic(6);
  CHECK(subset_product(z6, mask({3}), mask({0, 2, 4})) == mask({1, 3, 5}));
  CHECK_THROWS_AS(subset_product(z6, 0, mask({1})), InputError);
}

TEST_CASE("omega plus star") {
  const auto z3 = corpus::cyclic(3);
  CHECK(omega_plus_star(z3, mask({1})) == mask({0, 1, 2}));
  const auto z6 = corpus::cyclic(6);
  CHECK(omega_plus_star(z6, mask({2})) == mask({0, 2, 4}));
  // idempotents are fixed
  const auto t2 = corpus::t2();
  CHECK(omega_plus_star(t2, mask({2, 3})) == mask({2, 3}));

  // eq: Z E = E = E Z and E E = E, for every nonempty Z over small semigroups
  for (const auto& sg : {corpus::cyclic(6), corpus::t2(),
                         corpus::right_zero_with_identity()}) {
    for (Subset z = 1; z < (Subset{1} << sg.order); ++z) {
      const Subset e = omega_plus_star(sg, z);
      CHECK(subset_product(sg, z, e) == e);
      CHECK(subset_product(sg, e, z) == e);
      CHECK(subset_product(sg, e, e) == e);
    }
  }

  // group element case: equals the union of all positive powers
  const auto z6b = corpus::cyclic(6);
  Subset z = mask({2});
  Subset uni = 0;
  Subset cur = z;
  for (int k = 0; k < 8; ++k) {
    uni |= cur;
    cur = subset_product(z6b, cur, z);
  }
  CHECK(omega_plus_star(z6b, z) == uni);
}

TEST_CASE("cyclic pi'-group test") {
  const auto z6 = corpus::cyclic(6);
  CHECK(generates_cyclic_pi_prime_group(z6, mask({2}), PrimeSet::of({2})));
  CHECK_FALSE(
      generates_cyclic_pi_prime_group(z6, mask({3}), PrimeSet::of({2})));
  CHECK(generates_cyclic_pi_prime_group(z6, mask({0}), PrimeSet::all()));
  const auto t2 = corpus::t2();
  // {c0,c1} is idempotent, hence a trivial group
  CHECK(generates_cyclic_pi_prime_group(t2, mask({2, 3}), PrimeSet::none()));
  // non-group: {a} with a^2 = a^3 != a
  FiniteSemigroup s;
  s.order = 2;
  s.table = {1, 1, 1, 1};
  CHECK_FALSE(generates_cyclic_pi_prime_group(s, mask({0}), PrimeSet::none()));
}

TEST_CASE("cp closure exact values") {
  const auto z2 = corpus::cyclic(2);
  auto cp = cp_closure(z2, PrimeSet::none());
  CHECK(member_set(cp) == std::set<Subset>{mask({0}), mask({1}), mask({0, 1})});
  cp = cp_closure(z2, PrimeSet::of({2}));
  CHECK(member_set(cp) == std::set<Subset>{mask({0}), mask({1})});

  const auto z6 = corpus::cyclic(6);
  cp = cp_closure(z6, PrimeSet::of({2}));
  CHECK(member_set(cp) ==
        std::set<Subset>{mask({0}), mask({1}), mask({2}), mask({3}), mask({4}),
                         mask({5}), mask({0, 2, 4}), mask({1, 3, 5})});

  // degenerate |T| = 1
  cp = cp_closure(corpus::trivial(), PrimeSet::none());
  CHECK(member_set(cp) == std::set<Subset>{mask({0})});
}

TEST_CASE("cp closure invariants re-checked") {
  for (const auto& sg : {corpus::cyclic(6), corpus::t2(),
                         corpus::right_zero_with_identity()}) {
    for (const auto& pi : {PrimeSet::none(), PrimeSet::of({2}),
                           PrimeSet::of({3}), PrimeSet::all()}) {
      const auto cp = cp_closure(sg, pi);
      CHECK_FALSE(check_cp_invariants(sg, cp).has_value());
    }
  }
}

TEST_CASE("monotonicity in pi and the all-primes case") {
  for (const auto& sg : {corpus::cyclic(6), corpus::t2()}) {
    const auto cp_none = member_set(cp_closure(sg, PrimeSet::none()));
    const auto cp_2 = member_set(cp_closure(sg, PrimeSet::of({2})));
    const auto cp_23 = member_set(cp_closure(sg, PrimeSet::of({2, 3})));
    const auto cp_all = member_set(cp_closure(sg, PrimeSet::all()));
    // growing pi shrinks the closure
    for (Subset m : cp_2) {
      CHECK(cp_none.count(m) == 1);
    }
    for (Subset m : cp_23) {
      CHECK(cp_2.count(m) == 1);
    }
    for (Subset m : cp_all) {
      CHECK(cp_23.count(m) == 1);
    }
    // pi = all primes: exactly the products of singletons
    std::set<Subset> products;
    std::vector<Subset> work;
    for (Element x = 0; x < sg.order; ++x) {
      products.insert(singleton(x));
      work.push_back(singleton(x));
    }
    while (!work.empty()) {
      const Subset a = work.back();
      work.pop_back();
      for (Subset b : std::vector<Subset>(products.begin(), products.end())) {
        for (Subset p :
             {subset_product(sg, a, b), subset_product(sg, b, a)}) {
          if (products.insert(p).second) {
            work.push_back(p);
          }
        }
      }
    }
    CHECK(cp_all == products);
  }
}

TEST_CASE("pointlike queries") {
  const auto z6 = corpus::cyclic(6);
  const auto cp = cp_closure(z6, PrimeSet::of({2}));
  auto w = is_pointlike(mask({2, 4}), cp);
  REQUIRE(w.has_value());
  CHECK(*w == mask({0, 2, 4}));
  CHECK_FALSE(is_pointlike(mask({0, 3}), cp).has_value());
  CHECK(is_pointlike(mask({5}), cp) == mask({5}));
  CHECK_THROWS_AS(is_pointlike(0, cp), InputError);

  CHECK(maximal_pointlikes(cp) ==
        std::vector<Subset>{mask({0, 2, 4}), mask({1, 3, 5})});
  const auto cp2 = cp_closure(corpus::cyclic(2), PrimeSet::none());
  CHECK(maximal_pointlikes(cp2) == std::vector<Subset>{mask({0, 1})});
  const auto cp3 = cp_closure(corpus::cyclic(2), PrimeSet::of({2}));
  CHECK(maximal_pointlikes(cp3) ==
        std::vector<Subset>{mask({0}), mask({1})});
}

TEST_CASE("subset semigroup") {
  const auto z2 = corpus::cyclic(2);
  const auto cp = cp_closure(z2, PrimeSet::none());
  const auto s = make_subset_semigroup(z2, cp);
  REQUIRE(s.sg.order == 3);
  CHECK(is_associative(s.sg));
  for (Element i = 0; i < s.sg.order; ++i) {
    for (Element j = 0; j < s.sg.order; ++j) {
      CHECK(s.subsets[s.sg.at(i, j)] ==
            subset_product(z2, s.subsets[i], s.subsets[j]));
    }
  }
}

TEST_CASE("resource caps") {
  const auto z6 = corpus::cyclic(6);
  CHECK_THROWS_AS(cp_closure(z6, PrimeSet::of({2}), 4), ResourceError);
}

TEST_CASE("unconditional omega+* probe for pi = none") {
  // The conditional rule is the algorithm; probe whether applying omega+* to
  // every member (not only cyclic-group generators) changes anything on the
  // small corpus.  A difference is not a bug, only worth knowing about.
  for (const auto& sg : {corpus::cyclic(6), corpus::t2(),
                         corpus::right_zero_with_identity()}) {
    const auto cp = cp_closure(sg, PrimeSet::none());
    std::set<Subset> extended = member_set(cp);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Subset z : std::vector<Subset>(extended.begin(), extended.end())) {
        for (Subset p : {omega_plus_star(sg, z)}) {
          changed = extended.insert(p).second || changed;
        }
        for (Subset y :
             std::vector<Subset>(extended.begin(), extended.end())) {
          changed = extended.insert(subset_product(sg, z, y)).second || changed;
          changed = extended.insert(subset_product(sg, y, z)).second || changed;
        }
      }
    }
    // on this corpus the conditional and unconditional closures agree
    CHECK(extended == member_set(cp));
  }
}
