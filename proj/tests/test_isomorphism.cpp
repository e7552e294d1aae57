#include "doctest.h"
#include "test_support.hpp"

using namespace hns;
using namespace hns::testing;

namespace {

Permutation perm(std::initializer_list<int> labels) {
  Permutation p;
  for (int l : labels) p.push_back(basis(l));
  return p;
}

}  // namespace

TEST_SUITE("isomorphism") {
  TEST_CASE("permutation helpers") {
    CHECK(identity_permutation(3) == perm({1, 2, 3}));
    CHECK(is_unit_fixing_permutation(perm({1, 3, 2}), 3));
    CHECK_FALSE(is_unit_fixing_permutation(perm({2, 1, 3}), 3));
    CHECK_FALSE(is_unit_fixing_permutation(perm({1, 2, 2}), 3));
    CHECK_FALSE(is_unit_fixing_permutation(perm({1, 2}), 3));
    CHECK(compose(perm({1, 3, 4, 2}), perm({1, 3, 4, 2})) == perm({1, 4, 2, 3}));
    CHECK(inverse(perm({1, 3, 4, 2})) == perm({1, 4, 2, 3}));
    CHECK(to_string(perm({1, 3, 2})) == "1 3 2");
  }

  TEST_CASE("relabel moves entries") {
    const FiniteHNS g3 = build_quotient_system(3);
    const FiniteHNS swapped = relabel(g3, perm({1, 3, 2}));
    // e_2 . e_2 = (e_1 + e_3)/2 becomes e_3 . e_3 = (e_1 + e_2)/2
    CHECK(swapped.product(basis(3), basis(3)) == vec({half, half, 0}));
    CHECK(swapped.product(basis(2), basis(3)) == vec({half, 0, half}));
    CHECK(relabel(g3, identity_permutation(3)) == g3);
    CHECK_THROWS_AS((void)relabel(g3, perm({2, 1, 3})), PreconditionError);
  }

  TEST_CASE("reflexivity") {
    for (int m = 1; m <= 7; ++m) {
      const FiniteHNS sys = build_quotient_system(m);
      const auto p = find_permutation_isomorphism(sys, sys);
      REQUIRE(p.has_value());
      CHECK(*p == identity_permutation(m));
    }
  }

  TEST_CASE("relabel then recover") {
    const FiniteHNS g3 = build_quotient_system(3);
    const auto p = find_permutation_isomorphism(relabel(g3, perm({1, 3, 2})), g3);
    REQUIRE(p.has_value());
    CHECK(*p == perm({1, 3, 2}));

    std::mt19937_64 rng(41);
    for (int m = 2; m <= 7; ++m)
      for (int t = 0; t < 4; ++t) {
        const FiniteHNS sys = build_quotient_system(m);
        const Permutation q = random_unit_fixing_permutation(rng, m);
        const FiniteHNS b = relabel(sys, q);
        const auto found = find_permutation_isomorphism(sys, b);
        REQUIRE(found.has_value());
        CHECK(relabel(sys, *found) == b);
        // automorphism groups are trivial here, so the answer is unique
        CHECK(*found == q);
      }
  }

  TEST_CASE("non-isomorphic systems") {
    const FiniteHNS g3 = build_quotient_system(3);
    const FiniteHNS g3q = quotient_system(build_quotient_system(3),
                                          BasisPartition(3, {{basis(1)}, {basis(2), basis(3)}}));
    CHECK_FALSE(find_permutation_isomorphism(g3q, build_quotient_system(2)).has_value());
    const FiniteHNS mutated = g3.with_constant(basis(2), basis(2), basis(1), Rational(1));
    CHECK_FALSE(find_permutation_isomorphism(g3, mutated).has_value());
  }

  TEST_CASE("dimension mismatch and capacity") {
    CHECK_THROWS_AS((void)find_permutation_isomorphism(build_quotient_system(2), build_quotient_system(3)),
                    PreconditionError);
    const FiniteHNS g9 = build_quotient_system(9);
    CHECK_THROWS_AS((void)find_permutation_isomorphism(g9, g9), CapacityError);
    CHECK_THROWS_AS((void)automorphism_group(g9), CapacityError);
    CHECK_NOTHROW((void)automorphism_group(build_quotient_system(5), 5));
    CHECK_THROWS_AS((void)automorphism_group(build_quotient_system(5), 4), CapacityError);
  }

  TEST_CASE("automorphism groups") {
    for (int m = 1; m <= 7; ++m) {
      const auto group = automorphism_group(build_quotient_system(m));
      REQUIRE(group.size() == 1);
      CHECK(group.front() == identity_permutation(m));
    }

    // Z/2 x Z/2 written as a canonical table: every permutation of the three
    // non-unit elements is an automorphism.
    std::vector<RationalMatrix> slices(4, RationalMatrix::Zero(4, 4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) slices[a](a ^ b, b) = Rational(1);
    const FiniteHNS klein(std::move(slices));
    const auto group = automorphism_group(klein);
    CHECK(group.size() == 6);
    CHECK(std::is_sorted(group.begin(), group.end()));
    for (const auto& g : group) {
      CHECK(relabel(klein, g) == klein);
      const auto inv = inverse(g);
      CHECK(std::find(group.begin(), group.end(), inv) != group.end());
      for (const auto& h : group)
        CHECK(std::find(group.begin(), group.end(), compose(g, h)) != group.end());
    }
  }
}
