#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "finsite/descent.hpp"
#include "finsite/module.hpp"
#include "finsite/ring.hpp"

using namespace finsite;

TEST_CASE("frozen descent profile for Z/6 with the (3,4) cover", "[descent]") {
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteModule m = module_self(z6);
  const CohomologyReport r = cech_cohomology(z6, m, {3, 4});
  CHECK(r.h0 == 6);
  CHECK(r.h1 == 1);
  CHECK(r.exact);
  CHECK(r.descent_isomorphism);
  CHECK(r.witnesses.empty());
}

TEST_CASE("structural and enumerative routes agree on small covers", "[descent]") {
  struct Case {
    int n;
    std::vector<int> cover;
  };
  const Case cases[] = {
      {6, {3, 4}}, {6, {1, 1}}, {6, {5}}, {12, {3, 4}}, {12, {4, 9}}, {12, {5, 10}},
  };
  for (const auto& c : cases) {
    const FiniteRing r = cyclic_ring(c.n);
    const FiniteModule m = module_self(r);
    const CohomologyReport fast = cech_cohomology(r, m, c.cover);
    const CohomologyReport slow = cech_cohomology_enumerative(r, m, c.cover);
    CHECK(fast.h0 == slow.h0);
    CHECK(fast.h1 == slow.h1);
    CHECK(fast.exact == slow.exact);
    CHECK(fast.c0 == slow.c0);
    CHECK(fast.c1 == slow.c1);
    CHECK(fast.descent_isomorphism == slow.descent_isomorphism);
    CHECK(slow.witnesses.empty());
  }
}

TEST_CASE("non-unimodular covers are rejected", "[descent]") {
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteModule m = module_self(z6);
  try {
    cech_cohomology(z6, m, {2, 4});  // (2,4) = {0,2,4}, no unit
    FAIL("expected NotUnimodular");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_unimodular);
  }
  CHECK_THROWS_AS(ring_gluing_equalizer(z6, {3}), Error);  // (3) is proper
}

TEST_CASE("quotient modules also descend", "[descent]") {
  const FiniteRing z12 = cyclic_ring(12);
  const Ideal four = ideal_generated(z12, std::vector<int>{4});
  const FiniteModule m = module_quotient(z12, four);  // Z/4 as a Z/12-module
  const CohomologyReport r = cech_cohomology(z12, m, {3, 4});
  CHECK(r.h0 == 4);
  CHECK(r.h1 == 1);
  CHECK(r.exact);
  CHECK(r.descent_isomorphism);
  const CohomologyReport slow = cech_cohomology_enumerative(z12, m, {3, 4});
  CHECK(slow.h0 == r.h0);
  CHECK(slow.h1 == r.h1);
}

TEST_CASE("the corrupted complex shows a nontrivial kernel", "[descent]") {
  const FiniteRing z6 = cyclic_ring(6);
  CHECK(corrupted_h1(z6, module_self(z6), {1, 1}) == 6);
  const FiniteRing z12 = cyclic_ring(12);
  CHECK(corrupted_h1(z12, module_self(z12), {5, 10}) == 3);
}

TEST_CASE("ring gluing along frozen covers", "[descent]") {
  struct Case {
    int n;
    std::vector<int> cover;
  };
  const Case cases[] = {{6, {3, 4}}, {12, {5, 10}}, {30, {6, 10, 15}}, {30, {2, 3, 5}}};
  for (const auto& c : cases) {
    const FiniteRing r = cyclic_ring(c.n);
    const GluingReport g = ring_gluing_equalizer(r, c.cover);
    CHECK(g.ring_order == c.n);
    CHECK(g.equalizer_order == c.n);
    CHECK(g.isomorphism);
  }
}

TEST_CASE("gluing over the product ring", "[descent]") {
  const FiniteRing p = product_ring(cyclic_ring(4), cyclic_ring(9));
  // The two projections' idempotents: (1,0) = 9 and (0,1) = 1.
  const GluingReport g = ring_gluing_equalizer(p, {9, 1});
  CHECK(g.ring_order == 36);
  CHECK(g.equalizer_order == 36);
  CHECK(g.isomorphism);
}

TEST_CASE("weak quasicoherence on localized pieces", "[descent]") {
  const FiniteRing z6 = cyclic_ring(6);
  for (int f = 0; f < 6; ++f) {
    const QuasicoherenceReport q = weak_quasicoherence_check(z6, module_self(z6), f);
    CHECK(q.isomorphism);
    CHECK(q.tensor_order == q.localized_order);
  }
  const FiniteRing z12 = cyclic_ring(12);
  const FiniteModule m = module_quotient(z12, ideal_generated(z12, std::vector<int>{4}));
  for (int f : {2, 3}) {
    const QuasicoherenceReport q = weak_quasicoherence_check(z12, m, f);
    CHECK(q.isomorphism);
  }
  const FiniteRing z30 = cyclic_ring(30);
  const FiniteModule ideal6 = module_ideal(z30, ideal_generated(z30, std::vector<int>{6}));
  CHECK(weak_quasicoherence_check(z30, ideal6, 10).isomorphism);
}

TEST_CASE("singleton unit covers are trivial", "[descent]") {
  const FiniteRing z12 = cyclic_ring(12);
  const CohomologyReport r = cech_cohomology(z12, module_self(z12), {1});
  CHECK(r.h0 == 12);
  CHECK(r.h1 == 1);
  CHECK(r.exact);
}
