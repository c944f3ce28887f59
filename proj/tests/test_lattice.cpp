#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <variant>

#include "finsite/json_io.hpp"
#include "finsite/lattice.hpp"
#include "oracles.hpp"

using namespace finsite;

TEST_CASE("free lattice sizes match the monotone-function count", "[lattice]") {
  const long long expected[] = {2, 3, 6, 20, 168};
  for (int n = 0; n <= 4; ++n) {
    const Lattice l = free_distributive_lattice(n);
    CHECK(l.size() == expected[n]);
    CHECK(l.size() == oracle::monotone_function_count(n));
  }
}

TEST_CASE("free lattice on 5 generators is rejected", "[lattice]") {
  CHECK_THROWS_AS(free_distributive_lattice(5), Error);
}

TEST_CASE("free lattice element order on two generators", "[lattice]") {
  // Ascending truth-table order: 0, g1^g2, g1, g2, g1vg2, 1.
  const Lattice l = free_distributive_lattice(2);
  REQUIRE(l.size() == 6);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 5);
  const int g1 = free_lattice_generator(l, 2, 0);
  const int g2 = free_lattice_generator(l, 2, 1);
  CHECK(g1 == 2);
  CHECK(g2 == 3);
  CHECK(l.meet(g1, g2) == 1);
  CHECK(l.join(g1, g2) == 4);
  CHECK(l.label(g1) == "g1");
  CHECK(l.label(g2) == "g2");
}

TEST_CASE("generators are incomparable and generate", "[lattice]") {
  for (int n = 1; n <= 3; ++n) {
    const Lattice l = free_distributive_lattice(n);
    std::vector<int> gens;
    for (int i = 0; i < n; ++i) gens.push_back(free_lattice_generator(l, n, i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK_FALSE(l.leq(gens[i], gens[j]));
    // Closure of {gens, 0, 1} under meet and join reaches everything.
    std::set<int> reach(gens.begin(), gens.end());
    reach.insert(l.bottom());
    reach.insert(l.top());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(reach.begin(), reach.end());
      for (int a : cur)
        for (int b : cur) {
          if (reach.insert(l.meet(a, b)).second) grew = true;
          if (reach.insert(l.join(a, b)).second) grew = true;
        }
    }
    CHECK(static_cast<int>(reach.size()) == l.size());
  }
}

TEST_CASE("chain and cube builders", "[lattice]") {
  const Lattice c4 = chain_lattice(4);
  REQUIRE(c4.size() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(c4.meet(a, b) == std::min(a, b));
      CHECK(c4.join(a, b) == std::max(a, b));
    }
  const Lattice cube = boolean_cube(3);
  REQUIRE(cube.size() == 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CHECK(cube.meet(a, b) == (a & b));
      CHECK(cube.join(a, b) == (a | b));
    }
}

TEST_CASE("the diamond M3 fails distributivity with a witness", "[lattice]") {
  const auto v = validate_lattice(diamond_m3_tables());
  REQUIRE(std::holds_alternative<LatticeDiagnostic>(v));
  const auto& d = std::get<LatticeDiagnostic>(v);
  CHECK(d.kind == LatticeDefect::non_distributive);
  CHECK_FALSE(d.witness.empty());
  CHECK_THROWS_AS(require_lattice(diamond_m3_tables()), Error);
}

TEST_CASE("validation rejects broken tables", "[lattice]") {
  // Swap one meet entry of the 2-chain to break commutativity/absorption.
  RawLatticeTables t = chain_lattice(2).tables();
  t.meet[0 * 2 + 1] = 1;  // 0 ^ 1 := 1 while 1 ^ 0 == 0
  const auto v = validate_lattice(t);
  REQUIRE(std::holds_alternative<LatticeDiagnostic>(v));

  RawLatticeTables bad_bounds = chain_lattice(3).tables();
  bad_bounds.top = 0;
  const auto v2 = validate_lattice(bad_bounds);
  REQUIRE(std::holds_alternative<LatticeDiagnostic>(v2));
  CHECK(std::get<LatticeDiagnostic>(v2).kind == LatticeDefect::bounds_mismatch);
}

TEST_CASE("complements exist exactly on the cube", "[lattice]") {
  const Lattice cube = boolean_cube(3);
  for (int a = 0; a < cube.size(); ++a) {
    const auto c = complement_of(cube, a);
    REQUIRE(c.has_value());
    CHECK(*c == (7 ^ a));
  }
  const Lattice fd2 = free_distributive_lattice(2);
  int with_complement = 0;
  for (int a = 0; a < fd2.size(); ++a)
    if (complement_of(fd2, a).has_value()) ++with_complement;
  CHECK(with_complement == 2);  // only bottom and top
}

TEST_CASE("lattice JSON round-trip is byte-stable", "[lattice][json]") {
  const Lattice l = free_distributive_lattice(2);
  const json j = lattice_to_json(l);
  // Key order pinned by the format.
  auto it = j.begin();
  CHECK(it.key() == "size");
  CHECK((++it).key() == "meet");
  CHECK((++it).key() == "join");
  CHECK((++it).key() == "bottom");
  CHECK((++it).key() == "top");
  CHECK((++it).key() == "labels");
  const Lattice back = lattice_from_json(j);
  CHECK(lattice_to_json(back).dump() == j.dump());
  CHECK(back.size() == l.size());
}
