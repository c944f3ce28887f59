#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "finsite/module.hpp"
#include "finsite/ring.hpp"

using namespace finsite;

namespace {

Ideal principal(const FiniteRing& r, int g) {
  return ideal_generated(r, std::vector<int>{g});
}

}  // namespace

TEST_CASE("module constructions have the right orders", "[module]") {
  const FiniteRing z12 = cyclic_ring(12);
  CHECK(module_self(z12).size() == 12);
  CHECK(module_quotient(z12, principal(z12, 4)).size() == 4);   // Z/12 / (4) = Z/4
  CHECK(module_ideal(z12, principal(z12, 4)).size() == 3);      // (4) = {0,4,8}
  CHECK(module_idempotent_part(z12, module_self(z12), 4).size() == 3);
}

TEST_CASE("tensor orders on cyclic modules follow the gcd rule", "[module]") {
  const FiniteRing z12 = cyclic_ring(12);
  // Z/12/(a) (x) Z/12/(b) = Z/gcd-type order: for cyclic R-modules R/I (x) R/J
  // = R/(I+J).
  for (int a : {2, 3, 4, 6}) {
    for (int b : {2, 3, 4, 6}) {
      const FiniteModule ma = module_quotient(z12, principal(z12, a));
      const FiniteModule mb = module_quotient(z12, principal(z12, b));
      const int expected = 12 / ideal_generated(z12, std::vector<int>{a, b}).size();
      CHECK(tensor_order(z12, ma, mb) == expected);
    }
  }
  CHECK(tensor_order(z12, module_self(z12), module_self(z12)) == 12);
}

TEST_CASE("flatness of Z/2 over Z/4: not flat", "[module]") {
  const FiniteRing z4 = cyclic_ring(4);
  const Algebra a = make_algebra(z4, cyclic_ring(2), std::vector<int>{0, 1, 0, 1});
  const FlatnessReport rep = flatness_report(z4, a);
  CHECK_FALSE(rep.flat);
  CHECK_FALSE(rep.faithfully_flat);
  REQUIRE(rep.flatness_witness.has_value());
  CHECK(*rep.flatness_witness == std::vector<int>{0, 2});
}

TEST_CASE("flatness of Z/3 over Z/12: flat but not faithful", "[module]") {
  const FiniteRing z12 = cyclic_ring(12);
  std::vector<int> mod3(12);
  for (int i = 0; i < 12; ++i) mod3[i] = i % 3;
  const Algebra a = make_algebra(z12, cyclic_ring(3), mod3);
  const FlatnessReport rep = flatness_report(z12, a);
  CHECK(rep.flat);
  CHECK_FALSE(rep.faithfully_flat);
  REQUIRE(rep.faithfulness_witness.has_value());
  CHECK(*rep.faithfulness_witness == std::vector<int>{0, 4, 8});  // the ideal (4)
  CHECK(is_flat(z12, a));
  CHECK_FALSE(is_faithfully_flat(z12, a));
}

TEST_CASE("every ring is faithfully flat over itself", "[module]") {
  for (int n : {4, 6, 12}) {
    const FiniteRing r = cyclic_ring(n);
    const FlatnessReport rep = flatness_report(r, self_algebra(r));
    CHECK(rep.flat);
    CHECK(rep.faithfully_flat);
    CHECK_FALSE(rep.flatness_witness.has_value());
    CHECK_FALSE(rep.faithfulness_witness.has_value());
  }
}

TEST_CASE("a localization is flat but usually not faithful", "[module]") {
  const FiniteRing z6 = cyclic_ring(6);
  const Localization loc = localize(z6, 2);  // Z/3 side
  const Algebra a = make_algebra(z6, loc.ring, loc.hom.map);
  const FlatnessReport rep = flatness_report(z6, a);
  CHECK(rep.flat);
  CHECK_FALSE(rep.faithfully_flat);
  REQUIRE(rep.faithfulness_witness.has_value());
  CHECK(*rep.faithfulness_witness == std::vector<int>{0, 2, 4});  // the ideal (2)
}

TEST_CASE("the zero algebra is flat with witness (0)", "[module]") {
  const FiniteRing z6 = cyclic_ring(6);
  const Algebra zero = make_algebra(z6, cyclic_ring(1), std::vector<int>(6, 0));
  const FlatnessReport rep = flatness_report(z6, zero);
  CHECK(rep.flat);
  CHECK_FALSE(rep.faithfully_flat);
  REQUIRE(rep.faithfulness_witness.has_value());
  CHECK(*rep.faithfulness_witness == std::vector<int>{0});
}

TEST_CASE("module validation rejects a broken action", "[module]") {
  const FiniteRing z4 = cyclic_ring(4);
  std::vector<int> add(4 * 4), action(4 * 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      add[a * 4 + b] = (a + b) % 4;
      action[a * 4 + b] = a * b % 4;
    }
  action[3 * 4 + 2] = 1;  // 3.2 := 1 breaks linearity
  CHECK_THROWS_AS(FiniteModule::validated(z4, 4, add, 0, action), Error);
}
