#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <variant>
#include <vector>

#include "finsite/ring.hpp"
#include "oracles.hpp"

using namespace finsite;

namespace {

std::vector<FiniteRing> bundled() {
  std::vector<FiniteRing> out;
  out.push_back(cyclic_ring(4));
  out.push_back(cyclic_ring(6));
  out.push_back(cyclic_ring(12));
  out.push_back(cyclic_ring(30));
  out.push_back(product_ring(cyclic_ring(4), cyclic_ring(9)));
  return out;
}

}  // namespace

TEST_CASE("cyclic and product rings validate", "[ring]") {
  const FiniteRing z6 = cyclic_ring(6);
  CHECK(z6.size() == 6);
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.mul(4, 5) == 2);
  CHECK(z6.neg(2) == 4);
  const FiniteRing p = product_ring(cyclic_ring(4), cyclic_ring(9));
  CHECK(p.size() == 36);
  CHECK(p.one() == 1 * 9 + 1);
  // Zero ring is allowed.
  CHECK(cyclic_ring(1).is_zero_ring());
}

TEST_CASE("broken ring tables are rejected", "[ring]") {
  RawRingTables t = cyclic_ring(4).tables();
  t.mul[2 * 4 + 3] = 1;  // 2*3 := 1 breaks commutativity (3*2 == 2)
  CHECK(std::holds_alternative<RingDiagnostic>(validate_ring(t)));
  CHECK_THROWS_AS(require_ring(t), Error);
}

TEST_CASE("localization frozen instances", "[ring]") {
  const FiniteRing z6 = cyclic_ring(6);
  const Localization at3 = localize(z6, 3);
  CHECK(at3.idempotent == 3);
  CHECK(at3.carrier == std::vector<int>{0, 3});
  const Localization at5 = localize(z6, 5);
  CHECK(at5.idempotent == 1);
  CHECK(at5.carrier.size() == 6);
  const Localization at0 = localize(z6, 0);
  CHECK(at0.ring.is_zero_ring());

  const FiniteRing z12 = cyclic_ring(12);
  const Localization at2 = localize(z12, 2);
  CHECK(at2.idempotent == 4);
  CHECK(at2.carrier == std::vector<int>{0, 4, 8});
}

TEST_CASE("cyclic localization sizes match the stable-gcd formula", "[ring]") {
  for (int n : {4, 6, 12, 30}) {
    const FiniteRing r = cyclic_ring(n);
    for (int f = 0; f < n; ++f) {
      const Localization loc = localize(r, f);
      const int g = oracle::stable_gcd(f, n);
      CHECK(static_cast<int>(loc.carrier.size()) == n / g);
      // The idempotent is 0 mod g and 1 mod n/g.
      CHECK(loc.idempotent % g == 0);
      if (n / g > 1) CHECK(loc.idempotent % (n / g) == 1);
    }
  }
}

TEST_CASE("every localization satisfies the universal property", "[ring]") {
  const auto family = standard_test_family();
  for (const FiniteRing& r : bundled())
    for (int f = 0; f < r.size(); ++f) {
      const Localization loc = localize(r, f);
      CHECK(verify_localization(r, f, loc.ring, loc.hom, family));
    }
}

TEST_CASE("a wrong candidate fails the universal property", "[ring]") {
  const FiniteRing z6 = cyclic_ring(6);
  const auto family = standard_test_family();
  // The full ring with the identity map does not invert 3.
  std::vector<int> id(6);
  for (int i = 0; i < 6; ++i) id[i] = i;
  CHECK_FALSE(verify_localization(z6, 3, z6, RingHom{id}, family));
}

TEST_CASE("iterated localization matches the product localization", "[ring]") {
  for (const FiniteRing& r : bundled())
    for (int f = 0; f < r.size(); ++f)
      for (int g = 0; g < r.size(); ++g) CHECK(localization_product(r, f, g));
}

TEST_CASE("stable idempotents multiply", "[ring]") {
  for (int n : {6, 12, 30}) {
    const FiniteRing r = cyclic_ring(n);
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g) {
        const int ef = localize(r, f).idempotent;
        const int eg = localize(r, g).idempotent;
        CHECK(localize(r, r.mul(f, g)).idempotent == r.mul(ef, eg));
      }
  }
}

TEST_CASE("idempotents of Z/30 with their CRT coordinates", "[ring]") {
  const FiniteRing r = cyclic_ring(30);
  std::set<int> idems;
  for (int x = 0; x < 30; ++x)
    if (r.mul(x, x) == x) idems.insert(x);
  CHECK(idems == std::set<int>{0, 1, 6, 10, 15, 16, 21, 25});
  CHECK(localize(r, 2).idempotent == 16);
  CHECK(localize(r, 3).idempotent == 21);
  CHECK(localize(r, 5).idempotent == 25);
}

TEST_CASE("ideal closure and unimodularity against the brute oracle", "[ring]") {
  for (int n : {6, 12}) {
    const FiniteRing r = cyclic_ring(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const std::vector<int> gens = {a, b};
        const auto brute = oracle::brute_ideal(r, gens);
        const Ideal fast = ideal_generated(r, gens);
        CHECK(fast.elements == std::vector<int>(brute.begin(), brute.end()));
        CHECK(is_unimodular(r, gens) == oracle::brute_unimodular(r, gens));
      }
  }
}

TEST_CASE("all ideals of Z/12 are the divisor ideals", "[ring]") {
  const auto ideals = all_ideals(cyclic_ring(12));
  CHECK(ideals.size() == 6);  // one per divisor of 12
  std::set<int> sizes;
  for (const auto& i : ideals) sizes.insert(i.size());
  CHECK(sizes == std::set<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("algebra points of the split quadratic extension", "[ring]") {
  const FiniteRing z6 = cyclic_ring(6);
  const Algebra a = quadratic_extension(z6, 0, 1);  // x^2 = x
  const auto points = spec_points(z6, a);
  REQUIRE(points.size() == 4);
  std::set<int> ximgs;
  for (const auto& h : points) ximgs.insert(h.map[1]);  // x sits at index 1
  CHECK(ximgs == std::set<int>{0, 1, 3, 4});  // the idempotents of Z/6
}

TEST_CASE("algebra points of the square-zero extension over Z/4", "[ring]") {
  const FiniteRing z4 = cyclic_ring(4);
  const Algebra a = quadratic_extension(z4, 0, 0);  // x^2 = 0
  const auto points = spec_points(z4, a);
  REQUIRE(points.size() == 2);
  std::set<int> ximgs;
  for (const auto& h : points) ximgs.insert(h.map[1]);
  CHECK(ximgs == std::set<int>{0, 2});  // square-zero elements of Z/4
}

TEST_CASE("the product decomposition has a unique algebra point", "[ring]") {
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing p = product_ring(cyclic_ring(2), cyclic_ring(3));
  const auto homs = all_ring_homs(z6, p);
  REQUIRE(homs.size() == 1);
  const Algebra a = make_algebra(z6, p, homs.front().map);
  CHECK(spec_points(z6, a).size() == 1);
}

TEST_CASE("duality diagnostic for the split quadratic extension", "[ring]") {
  const FiniteRing z6 = cyclic_ring(6);
  const DualityDiagnostic d = duality_comparison(z6, quadratic_extension(z6, 0, 1));
  CHECK(d.points == 4);
  CHECK(d.function_ring_order == 1296);  // 6^4
}

TEST_CASE("unit detection", "[ring]") {
  const FiniteRing z12 = cyclic_ring(12);
  std::set<int> units;
  for (int x = 0; x < 12; ++x)
    if (z12.is_unit(x)) units.insert(x);
  CHECK(units == std::set<int>{1, 5, 7, 11});
}
