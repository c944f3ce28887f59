#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "finsite/congruence.hpp"
#include "finsite/lattice.hpp"
#include "oracles.hpp"

using namespace finsite;

namespace {

std::vector<Lattice> small_family() {
  std::vector<Lattice> out;
  out.push_back(free_distributive_lattice(0));
  out.push_back(free_distributive_lattice(1));
  out.push_back(free_distributive_lattice(2));
  out.push_back(chain_lattice(4));
  out.push_back(chain_lattice(5));
  out.push_back(boolean_cube(2));
  return out;
}

}  // namespace

TEST_CASE("closure of a single pair matches the all-partitions oracle", "[congruence]") {
  for (const Lattice& l : small_family()) {
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        const std::vector<std::pair<int, int>> pairs = {{a, b}};
        const Congruence got = congruence_closure(l, pairs);
        const std::vector<int> want = oracle::least_congruence(l, pairs);
        CHECK(got.class_of == want);
      }
  }
}

TEST_CASE("closure of two pairs matches the all-partitions oracle", "[congruence]") {
  const Lattice l = free_distributive_lattice(2);
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      const std::vector<std::pair<int, int>> pairs = {{a, b}, {1, 4}};
      const Congruence got = congruence_closure(l, pairs);
      CHECK(got.class_of == oracle::least_congruence(l, pairs));
    }
}

TEST_CASE("every quotient really is a congruence and a lattice", "[congruence]") {
  const Lattice l = free_distributive_lattice(2);
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      const Congruence c = pair_congruence(l, a, b);
      REQUIRE(is_congruence(l, c.class_of));
      const Quotient q = quotient(l, c);
      CHECK(q.lattice.size() == c.num_classes);
      // The projection is a surjective lattice homomorphism.
      for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y) {
          CHECK(q.projection[l.meet(x, y)] ==
                q.lattice.meet(q.projection[x], q.projection[y]));
          CHECK(q.projection[l.join(x, y)] ==
                q.lattice.join(q.projection[x], q.projection[y]));
        }
    }
}

TEST_CASE("Gratzer criterion agrees with closure membership on FD(2) and FD(3)",
          "[congruence]") {
  for (int n = 2; n <= 3; ++n) {
    const Lattice l = free_distributive_lattice(n);
    long long mismatches = 0;
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        const Congruence c = pair_congruence(l, a, b);
        for (int x = 0; x < l.size(); ++x)
          for (int y = 0; y < l.size(); ++y)
            if (gratzer_criterion(l, a, b, x, y) != c.related(x, y)) ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("Gratzer criterion requires a <= b", "[congruence]") {
  const Lattice l = free_distributive_lattice(2);
  CHECK_THROWS_AS(gratzer_criterion(l, 2, 3, 0, 1), Error);  // g1, g2 incomparable
}

TEST_CASE("principal congruence equals its meet-join form everywhere", "[congruence]") {
  for (int n = 2; n <= 3; ++n) {
    const Lattice l = free_distributive_lattice(n);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) CHECK(principal_eq_meet_join(l, a, b));
  }
}

TEST_CASE("collapse to a point happens exactly for complements", "[congruence]") {
  std::vector<Lattice> family = small_family();
  family.push_back(boolean_cube(3));
  for (const Lattice& l : family) {
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        const bool complements =
            l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
        CHECK(is_zero_quotient(l, a, b) == complements);
      }
  }
}

TEST_CASE("frozen quotients of FD(2)", "[congruence]") {
  const Lattice l = free_distributive_lattice(2);
  const int g1 = free_lattice_generator(l, 2, 0);
  const int g2 = free_lattice_generator(l, 2, 1);

  // g1 <= g2 leaves the 4-chain 0 < {g1^g2, g1} < {g2, g1vg2} < 1.
  const Congruence below = order_congruence(l, g1, g2);
  CHECK(below.num_classes == 4);
  CHECK(below.related(1, 2));  // g1^g2 ~ g1
  CHECK(below.related(3, 4));  // g2 ~ g1vg2
  CHECK_FALSE(below.related(0, 1));
  CHECK_FALSE(below.related(4, 5));

  // g1 = g2 leaves the 3-chain.
  const Congruence equal = pair_congruence(l, g1, g2);
  CHECK(equal.num_classes == 3);
  const Quotient q = quotient(l, equal);
  for (int x = 0; x < q.lattice.size(); ++x)
    for (int y = 0; y < q.lattice.size(); ++y)
      CHECK((q.lattice.leq(x, y) || q.lattice.leq(y, x)));  // a chain
}

TEST_CASE("congruences of a chain are all partitions into intervals", "[congruence]") {
  const Lattice c = chain_lattice(4);
  // Interval partitions of a 4-chain: 2^(n-1) = 8.
  CHECK(oracle::all_congruences(c).size() == 8);
}
