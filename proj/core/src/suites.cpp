#include "finsite/suites.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finsite/complex.hpp"
#include "finsite/congruence.hpp"
#include "finsite/descent.hpp"
#include "finsite/lattice.hpp"
#include "finsite/module.hpp"
#include "finsite/ring.hpp"
#include "finsite/rng.hpp"
#include "finsite/simplicial.hpp"
#include "finsite/site.hpp"

namespace finsite::suites {
namespace {

using json = RunReport::json;

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

// Small bundled family: free lattices, chains, Boolean cubes.
std::vector<NamedLattice> bundled_lattices() {
  std::vector<NamedLattice> out;
  for (int n = 0; n <= 3; ++n)
    out.push_back({"FD(" + std::to_string(n) + ")", free_distributive_lattice(n)});
  for (int n = 2; n <= 5; ++n)
    out.push_back({"chain(" + std::to_string(n) + ")", chain_lattice(n)});
  for (int k = 2; k <= 3; ++k)
    out.push_back({"cube(" + std::to_string(k) + ")", boolean_cube(k)});
  return out;
}

struct NamedRing {
  std::string name;
  FiniteRing ring;
};

std::vector<NamedRing> bundled_rings() {
  std::vector<NamedRing> out;
  out.push_back({"Z/4", cyclic_ring(4)});
  out.push_back({"Z/6", cyclic_ring(6)});
  out.push_back({"Z/12", cyclic_ring(12)});
  out.push_back({"Z/30", cyclic_ring(30)});
  out.push_back({"Z/4xZ/9", product_ring(cyclic_ring(4), cyclic_ring(9))});
  return out;
}

bool complements(const Lattice& l, int a, int b) {
  return l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
}

bool total_order(const Lattice& l) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (!l.leq(a, b) && !l.leq(b, a)) return false;
  return true;
}

bool is_partial_order(const Lattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    if (!l.leq(a, a)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && l.leq(a, b) && l.leq(b, a)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (l.leq(b, c) && !l.leq(a, c)) return false;
    }
  return true;
}

bool projection_is_hom(const Lattice& l, const Quotient& q) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (q.projection[l.meet(a, b)] != q.lattice.meet(q.projection[a], q.projection[b]))
        return false;
      if (q.projection[l.join(a, b)] != q.lattice.join(q.projection[a], q.projection[b]))
        return false;
    }
  return true;
}

bool torsion_free(const HomologyReport& h) {
  for (const auto& t : h.torsion)
    if (!t.empty()) return false;
  return true;
}

// Reduced homology concentrated in degree s with one free generator.
bool sphere_profile(const HomologyReport& h, int s) {
  if (!torsion_free(h)) return false;
  for (int k = -1; k <= h.dimension; ++k)
    if (h.reduced_betti(k) != (k == s ? 1 : 0)) return false;
  return h.reduced_betti(s) == 1;
}

long long alternating_betti_sum(const HomologyReport& h) {
  long long sum = 0;
  for (int k = -1; k <= h.dimension; ++k) {
    const long long sign = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
    sum += sign * h.reduced_betti(k);
  }
  return sum;
}

// Fiber sizes admissible for t, each in [1, max_fiber], summing to at most
// `budget`; at least one point per remaining fiber is reserved so the draw
// never gets stuck (size 1 is admissible in every presentation used here).
FiniteMap random_cover(Rng& rng, const CardinalityClass& t, int codomain, int max_fiber,
                       int budget) {
  std::vector<int> table;
  for (int b = 0; b < codomain; ++b) {
    const int reserve = codomain - 1 - b;
    const int allowed = std::min(max_fiber, budget - reserve);
    std::vector<int> sizes;
    for (int c = 1; c <= allowed; ++c)
      if (t.contains(c)) sizes.push_back(c);
    const int s = sizes[rng.below(static_cast<int>(sizes.size()))];
    budget -= s;
    for (int i = 0; i < s; ++i) table.push_back(b);
  }
  for (int i = static_cast<int>(table.size()) - 1; i > 0; --i)
    std::swap(table[i], table[rng.below(i + 1)]);
  return FiniteMap{static_cast<int>(table.size()), codomain, table};
}

// Tables of `a` relabeled along a permutation of its carrier; used to check
// that point counts are isomorphism-invariant.
Algebra relabeled_algebra(const FiniteRing& base, const Algebra& a, const std::vector<int>& perm) {
  const FiniteRing& ring = a.ring;
  const int n = ring.size();
  RawRingTables t;
  t.size = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.neg.resize(n);
  t.labels.resize(n);
  for (int x = 0; x < n; ++x) {
    t.neg[perm[x]] = perm[ring.neg(x)];
    t.labels[perm[x]] = ring.label(x);
    for (int y = 0; y < n; ++y) {
      t.add[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[ring.add(x, y)];
      t.mul[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[ring.mul(x, y)];
    }
  }
  t.zero = perm[ring.zero()];
  t.one = perm[ring.one()];
  std::vector<int> structure(base.size());
  for (int r = 0; r < base.size(); ++r) structure[r] = perm[a.structure.map[r]];
  return make_algebra(base, require_ring(t), std::move(structure));
}

}  // namespace

RunReport lattice_free() {
  RunReport report("lattice free");
  const std::array<int, 5> expected = {2, 3, 6, 20, 168};
  std::vector<Lattice> free;
  for (int n = 0; n <= 4; ++n) {
    free.push_back(free_distributive_lattice(n));
    report.add_check("free lattice on " + std::to_string(n) + " generators has the expected order",
                     free.back().size() == expected[static_cast<std::size_t>(n)],
                     json{{"generators", n},
                          {"size", free.back().size()},
                          {"expected", expected[static_cast<std::size_t>(n)]}});
  }

  bool revalidates = true;
  bool ordered = true;
  for (const Lattice& l : free) {
    revalidates = revalidates && std::holds_alternative<Lattice>(validate_lattice(l.tables()));
    ordered = ordered && is_partial_order(l);
  }
  report.add_check("every free lattice passes the full axiom scan", revalidates);
  report.add_check("leq is a partial order on every free lattice", ordered);

  bool generators_ok = true;
  for (int n = 1; n <= 4; ++n) {
    const Lattice& l = free[static_cast<std::size_t>(n)];
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
      const int g = free_lattice_generator(l, n, i);
      seen.insert(g);
      generators_ok = generators_ok && g >= 0 && g < l.size();
      generators_ok = generators_ok && l.label(g) == "g" + std::to_string(i + 1);
    }
    generators_ok = generators_ok && static_cast<int>(seen.size()) == n;
  }
  report.add_check("generators are distinct and labeled g1..gn", generators_ok);

  bool builders_ok = true;
  for (int n = 2; n <= 6; ++n) {
    const Lattice c = chain_lattice(n);
    builders_ok = builders_ok && c.size() == n && total_order(c);
  }
  for (int k = 1; k <= 3; ++k) {
    const Lattice c = boolean_cube(k);
    builders_ok = builders_ok && c.size() == (1 << k);
  }
  report.add_check("chain and cube builders produce valid lattices of the expected orders",
                   builders_ok);

  const auto diamond = validate_lattice(diamond_m3_tables());
  const bool diamond_rejected =
      std::holds_alternative<LatticeDiagnostic>(diamond) &&
      std::get<LatticeDiagnostic>(diamond).kind == LatticeDefect::non_distributive;
  report.add_check("diamond M3 is rejected as non-distributive", diamond_rejected);

  int fd2_complemented = 0;
  const Lattice& fd2 = free[2];
  for (int a = 0; a < fd2.size(); ++a)
    if (complement_of(fd2, a)) ++fd2_complemented;
  int cube3_complemented = 0;
  const Lattice cube3 = boolean_cube(3);
  bool complement_valid = true;
  for (int a = 0; a < cube3.size(); ++a) {
    if (auto c = complement_of(cube3, a)) {
      ++cube3_complemented;
      complement_valid = complement_valid && complements(cube3, a, *c);
    }
  }
  report.add_check("complemented element counts match (2 in FD(2), all 8 in the 3-cube)",
                   fd2_complemented == 2 && cube3_complemented == 8 && complement_valid,
                   json{{"fd2", fd2_complemented}, {"cube3", cube3_complemented}});
  return report;
}

RunReport lattice_congruence() {
  RunReport report("lattice congruence");
  const auto family = bundled_lattices();
  const Lattice& fd2 = family[2].lattice;  // FD(2) by construction order
  const int g1 = free_lattice_generator(fd2, 2, 0);
  const int g2 = free_lattice_generator(fd2, 2, 1);
  const int meet12 = fd2.meet(g1, g2);
  const int join12 = fd2.join(g1, g2);

  {
    const Congruence theta = order_congruence(fd2, g1, g2);
    const Quotient q = quotient(fd2, theta);
    const bool frozen = theta.num_classes == 4 && theta.related(g1, meet12) &&
                        theta.related(g2, join12) && !theta.related(fd2.bottom(), meet12) &&
                        !theta.related(join12, fd2.top()) && !theta.related(g1, g2) &&
                        q.lattice.size() == 4 && total_order(q.lattice);
    report.add_check("FD(2)/(g1 <= g2) is the 4-chain with classes {0},{g1^g2,g1},{g2,g1vg2},{1}",
                     frozen, json{{"classes", theta.num_classes}});
    report.add_check("quotient projection is a surjective bound-preserving homomorphism",
                     projection_is_hom(fd2, q) &&
                         q.projection[fd2.bottom()] == q.lattice.bottom() &&
                         q.projection[fd2.top()] == q.lattice.top() &&
                         std::holds_alternative<Lattice>(validate_lattice(q.lattice.tables())));
  }
  {
    const Congruence theta = pair_congruence(fd2, g1, g2);
    const Quotient q = quotient(fd2, theta);
    report.add_check("FD(2)/(g1 = g2) is the 3-chain",
                     theta.num_classes == 3 && q.lattice.size() == 3 && total_order(q.lattice),
                     json{{"classes", theta.num_classes}});
  }

  long long tuples = 0, mismatches = 0;
  for (const NamedLattice& nl : family) {
    const Lattice& l = nl.lattice;
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        const Congruence theta = pair_congruence(l, a, b);
        for (int x = 0; x < l.size(); ++x)
          for (int y = 0; y < l.size(); ++y) {
            ++tuples;
            if (gratzer_criterion(l, a, b, x, y) != theta.related(x, y)) ++mismatches;
          }
      }
  }
  report.add_check("meet/join criterion matches closure membership on every bundled lattice",
                   mismatches == 0, json{{"tuples", tuples}, {"mismatches", mismatches}});

  long long principal_pairs = 0;
  bool principal_ok = true;
  for (int n = 2; n <= 3; ++n) {
    const Lattice l = free_distributive_lattice(n);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        ++principal_pairs;
        principal_ok = principal_ok && principal_eq_meet_join(l, a, b);
      }
  }
  report.add_check("(a = b) equals (a^b = avb) on all pairs of FD(2) and FD(3)", principal_ok,
                   json{{"pairs", principal_pairs}});

  long long zq_pairs = 0, zq_mismatches = 0;
  for (const NamedLattice& nl : family) {
    const Lattice& l = nl.lattice;
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        ++zq_pairs;
        if (is_zero_quotient(l, a, b) != complements(l, a, b)) ++zq_mismatches;
      }
  }
  report.add_check("quotient collapses exactly when the pair is complementary", zq_mismatches == 0,
                   json{{"pairs", zq_pairs}, {"mismatches", zq_mismatches}});

  bool partition_checks = true;
  {
    const Congruence theta = pair_congruence(fd2, meet12, join12);
    partition_checks = partition_checks && is_congruence(fd2, theta.class_of);
    // {0, g1^g2} vs the rest fails meet/join compatibility.
    const std::vector<int> broken = {0, 0, 1, 1, 1, 1};
    partition_checks = partition_checks && !is_congruence(fd2, broken);
  }
  report.add_check("congruence recognizer accepts closures and rejects a broken partition",
                   partition_checks);
  return report;
}

RunReport lattice_simplicial(int max_gens) {
  RunReport report("lattice simplicial-check");
  const int hi = std::min(std::max(max_gens, 2), 4);
  report.set_parameter("max_gens", hi);
  for (int n = 2; n <= hi; ++n) {
    const Lattice l = free_distributive_lattice(n);
    const std::string name = "FD(" + std::to_string(n) + ")";
    long long pairs = 0, bijective = 0, amalgam_ok = 0;
    for (int i = 0; i < l.size(); ++i)
      for (int j = 0; j < l.size(); ++j) {
        const EqualizerReport r = check_simplicial_equalizer(l, i, j, name);
        ++pairs;
        if (r.bijective) ++bijective;
        if (r.amalgam_ok) ++amalgam_ok;
      }
    report.add_check("all " + std::to_string(pairs) + " pairs of " + name +
                         " give a bijective equalizer with the amalgam as unique preimage",
                     bijective == pairs && amalgam_ok == pairs,
                     json{{"pairs", pairs}, {"bijective", bijective}, {"amalgam", amalgam_ok}});
  }

  const Lattice fd2 = free_distributive_lattice(2);
  const int g1 = free_lattice_generator(fd2, 2, 0);
  const int g2 = free_lattice_generator(fd2, 2, 1);
  {
    const EqualizerReport r = check_simplicial_equalizer(fd2, g1, g2, "FD(2)");
    report.add_check("FD(2) at (g1,g2): quotient sizes 4,4,3 and equalizer of size 6",
                     r.size_leq == 4 && r.size_geq == 4 && r.size_eq == 3 &&
                         r.equalizer_size == 6 && r.bijective,
                     json{{"size_leq", r.size_leq},
                          {"size_geq", r.size_geq},
                          {"size_eq", r.size_eq},
                          {"equalizer", r.equalizer_size}});
  }
  {
    const EqualizerReport r = check_simplicial_equalizer(fd2, g1, g1, "FD(2)");
    report.add_check("degenerate pair (i,i) reproduces the lattice itself",
                     r.bijective && r.equalizer_size == fd2.size());
  }

  long long swaps = 0;
  bool swap_ok = true;
  for (int n = 2; n <= std::min(hi, 3); ++n) {
    const Lattice l = free_distributive_lattice(n);
    for (int i = 0; i < l.size(); ++i)
      for (int j = 0; j < l.size(); ++j) {
        const Congruence theta = pair_congruence(l, i, j);
        for (int x = 0; x < l.size(); ++x)
          for (int y = 0; y < l.size(); ++y) {
            if (!theta.related(x, y)) continue;
            ++swaps;
            swap_ok = swap_ok && amalgam(l, i, j, x, y) == amalgam(l, j, i, y, x);
          }
      }
  }
  report.add_check("amalgam is symmetric under swapping (x,y) with (i,j)", swap_ok,
                   json{{"instances", swaps}});

  bool precondition_ok = false;
  try {
    amalgam(fd2, g1, g2, fd2.bottom(), fd2.top());
  } catch (const Error& e) {
    precondition_ok = e.code() == errc::hypothesis_failed;
  }
  report.add_check("amalgam rejects arguments that are not congruent mod (i = j)",
                   precondition_ok);
  return report;
}

RunReport lattice_chain() {
  RunReport report("lattice chain");
  const Lattice fd2 = free_distributive_lattice(2);
  const Lattice fd3 = free_distributive_lattice(3);
  const int a1 = free_lattice_generator(fd2, 2, 0);
  const int a2 = free_lattice_generator(fd2, 2, 1);
  const int b1 = free_lattice_generator(fd3, 3, 0);
  const int b2 = free_lattice_generator(fd3, 3, 1);
  const int b3 = free_lattice_generator(fd3, 3, 2);

  {
    const std::vector<std::pair<int, int>> none;
    const std::vector<int> no_signs;
    const Quotient q2 = chain_quotients(fd2, none, no_signs);
    const Quotient q3 = chain_quotients(fd3, none, no_signs);
    report.add_check("the empty constraint list returns the lattice itself",
                     q2.lattice.size() == 6 && q3.lattice.size() == 20);
  }

  const std::vector<std::pair<int, int>> c2 = {{a1, a2}};
  {
    const Quotient plus = chain_quotients(fd2, c2, std::vector<int>{+1});
    const Quotient minus = chain_quotients(fd2, c2, std::vector<int>{-1});
    const Quotient direct = quotient(fd2, order_congruence(fd2, a1, a2));
    report.add_check("FD(2) with g1 <= g2 collapses to the 4-chain, matching the direct quotient",
                     plus.lattice.size() == 4 && total_order(plus.lattice) &&
                         plus.projection == direct.projection);
    report.add_check("FD(2) with the reversed constraint also gives a 4-chain",
                     minus.lattice.size() == 4 && total_order(minus.lattice));
    std::set<std::pair<int, int>> images;
    for (int x = 0; x < fd2.size(); ++x)
      images.insert({plus.projection[x], minus.projection[x]});
    report.add_check("the two signed 4-chains jointly embed FD(2)",
                     static_cast<int>(images.size()) == fd2.size());
    report.add_check("chain projection is a lattice homomorphism", projection_is_hom(fd2, plus));
  }

  const std::vector<std::pair<int, int>> c3 = {{b1, b2}, {b2, b3}};
  {
    const Quotient asc = chain_quotients(fd3, c3, std::vector<int>{+1, +1});
    const Quotient desc = chain_quotients(fd3, c3, std::vector<int>{-1, -1});
    report.add_check("FD(3) with g1 <= g2 <= g3 collapses to the 5-chain",
                     asc.lattice.size() == 5 && total_order(asc.lattice),
                     json{{"size", asc.lattice.size()}});
    report.add_check("FD(3) with the fully reversed constraints also gives the 5-chain",
                     desc.lattice.size() == 5 && total_order(desc.lattice));

    std::vector<Quotient> all;
    for (int s0 : {+1, -1})
      for (int s1 : {+1, -1}) all.push_back(chain_quotients(fd3, c3, std::vector<int>{s0, s1}));
    std::set<std::array<int, 4>> images;
    for (int x = 0; x < fd3.size(); ++x)
      images.insert({all[0].projection[x], all[1].projection[x], all[2].projection[x],
                     all[3].projection[x]});
    bool quotients_valid = true;
    for (const Quotient& q : all)
      quotients_valid =
          quotients_valid && std::holds_alternative<Lattice>(validate_lattice(q.lattice.tables()));
    report.add_check("the four signed quotients of FD(3) jointly embed the lattice",
                     static_cast<int>(images.size()) == fd3.size() && quotients_valid,
                     json{{"distinct_images", static_cast<int>(images.size())}});
  }
  return report;
}

RunReport ring_localize() {
  RunReport report("ring localize");
  const auto rings = bundled_rings();
  const auto family = standard_test_family();

  for (const NamedRing& nr : rings) {
    const FiniteRing& r = nr.ring;
    bool verified = true;
    for (int f = 0; f < r.size(); ++f) {
      const Localization loc = localize(r, f);
      verified = verified && verify_localization(r, f, loc.ring, loc.hom, family);
    }
    report.add_check("universal property holds at every element of " + nr.name, verified,
                     json{{"elements", r.size()}});
  }

  {
    const FiniteRing z6 = cyclic_ring(6);
    const FiniteRing z12 = cyclic_ring(12);
    const Localization l63 = localize(z6, 3);
    const Localization l122 = localize(z12, 2);
    const Localization l65 = localize(z6, 5);
    const Localization l60 = localize(z6, 0);
    const Localization l61 = localize(z6, 1);
    const bool frozen = l63.idempotent == 3 && l63.carrier == std::vector<int>{0, 3} &&
                        l122.idempotent == 4 && l122.carrier == std::vector<int>{0, 4, 8} &&
                        l65.idempotent == 1 && static_cast<int>(l65.carrier.size()) == 6 &&
                        l60.carrier == std::vector<int>{0} && l60.ring.size() == 1 &&
                        l61.ring.size() == 6;
    report.add_check(
        "reference localizations: Z/6 at 3 -> {0,3}; Z/12 at 2 -> {0,4,8}; units and zero behave",
        frozen,
        json{{"z6_at_3", l63.carrier}, {"z12_at_2", l122.carrier}});
  }

  long long product_pairs = 0;
  bool product_ok = true;
  for (const NamedRing& nr : rings) {
    const FiniteRing& r = nr.ring;
    for (int f = 0; f < r.size(); ++f)
      for (int g = 0; g < r.size(); ++g) {
        ++product_pairs;
        product_ok = product_ok && localization_product(r, f, g);
      }
  }
  report.add_check("two-step localization agrees with localization at the product for all pairs",
                   product_ok, json{{"pairs", product_pairs}});

  bool idem_mult = true;
  for (int n : {6, 12}) {
    const FiniteRing r = cyclic_ring(n);
    std::vector<int> e(static_cast<std::size_t>(r.size()));
    for (int f = 0; f < r.size(); ++f) e[static_cast<std::size_t>(f)] = localize(r, f).idempotent;
    for (int f = 0; f < r.size(); ++f)
      for (int g = 0; g < r.size(); ++g)
        idem_mult = idem_mult &&
                    localize(r, r.mul(f, g)).idempotent ==
                        r.mul(e[static_cast<std::size_t>(f)], e[static_cast<std::size_t>(g)]);
  }
  report.add_check("stable idempotents are multiplicative: e(fg) = e(f)e(g) on Z/6 and Z/12",
                   idem_mult);
  return report;
}

RunReport ring_spec_points() {
  RunReport report("ring spec");
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing z12 = cyclic_ring(12);
  const FiniteRing z4 = cyclic_ring(4);

  report.add_check("the ring over itself has exactly one point",
                   spec_points(z6, self_algebra(z6)).size() == 1 &&
                       spec_points(z12, self_algebra(z12)).size() == 1);

  const Algebra quad = quadratic_extension(z6, 0, 1);  // x^2 = x
  {
    const auto points = spec_points(z6, quad);
    // x is the element 0 + 1*x, encoded at index 0*6 + 1.
    std::vector<int> images;
    bool homs_ok = true;
    for (const RingHom& p : points) {
      images.push_back(p.map[1]);
      homs_ok = homs_ok && is_ring_hom(quad.ring, z6, p.map);
      for (int r = 0; r < z6.size(); ++r)
        homs_ok = homs_ok && p.map[static_cast<std::size_t>(quad.structure.map[r])] == r;
    }
    std::sort(images.begin(), images.end());
    report.add_check("Z/6[x]/(x^2 - x) has the four points x -> 0, 1, 3, 4",
                     points.size() == 4 && images == std::vector<int>{0, 1, 3, 4} && homs_ok,
                     json{{"points", static_cast<int>(points.size())}, {"images", images}});
  }
  {
    const Algebra nil = quadratic_extension(z4, 0, 0);  // x^2 = 0
    const auto points = spec_points(z4, nil);
    std::vector<int> images;
    for (const RingHom& p : points) images.push_back(p.map[1]);
    std::sort(images.begin(), images.end());
    report.add_check("Z/4[x]/(x^2) has the two points x -> 0, 2",
                     points.size() == 2 && images == std::vector<int>{0, 2},
                     json{{"images", images}});
  }
  {
    const FiniteRing zero = cyclic_ring(1);
    const Algebra a = make_algebra(z6, zero, std::vector<int>(6, 0));
    report.add_check("the zero algebra has no points over a nonzero ring",
                     spec_points(z6, a).empty());
  }
  {
    const FiniteRing p23 = product_ring(cyclic_ring(2), cyclic_ring(3));
    const auto homs = all_ring_homs(z6, p23);
    bool ok = homs.size() == 1;
    if (ok) {
      const Algebra a = make_algebra(z6, p23, homs.front().map);
      ok = spec_points(z6, a).size() == 1;
    }
    report.add_check("Z/2 x Z/3 over Z/6 has a unique structure map and a single point", ok);
  }
  {
    std::vector<int> perm(static_cast<std::size_t>(quad.ring.size()));
    for (std::size_t i = 0; i < perm.size(); ++i)
      perm[i] = quad.ring.size() - 1 - static_cast<int>(i);
    const Algebra relabeled = relabeled_algebra(z6, quad, perm);
    report.add_check("point count is invariant under relabeling the algebra",
                     spec_points(z6, relabeled).size() == 4);
  }
  {
    const DualityDiagnostic d = duality_comparison(z6, quad);
    report.set_payload("duality_diagnostic",
                       json{{"points", d.points},
                            {"function_ring_order", d.function_ring_order},
                            {"kernel_size", d.kernel_size},
                            {"cokernel_size", d.cokernel_size}});
    report.add_check("comparison map into the function ring is measured on the reference algebra",
                     d.points == 4 && d.function_ring_order == 1296);
  }
  return report;
}

RunReport ring_flat() {
  RunReport report("ring flat");
  const FiniteRing z4 = cyclic_ring(4);
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing z12 = cyclic_ring(12);

  {
    const FiniteRing z2 = cyclic_ring(2);
    std::vector<int> structure = {0, 1, 0, 1};
    const FlatnessReport f = flatness_report(z4, make_algebra(z4, z2, structure));
    report.add_check("Z/2 over Z/4 is not flat, witnessed by the ideal {0,2}",
                     !f.flat && !f.faithfully_flat && f.flatness_witness &&
                         *f.flatness_witness == std::vector<int>{0, 2},
                     json{{"witness", f.flatness_witness ? json(*f.flatness_witness) : json()}});
  }
  {
    const FiniteRing z3 = cyclic_ring(3);
    std::vector<int> structure(12);
    for (int i = 0; i < 12; ++i) structure[static_cast<std::size_t>(i)] = i % 3;
    const FlatnessReport f = flatness_report(z12, make_algebra(z12, z3, structure));
    report.add_check("Z/3 over Z/12 is flat but not faithful; (R/(4)) kills it",
                     f.flat && !f.faithfully_flat && !f.flatness_witness &&
                         f.faithfulness_witness &&
                         *f.faithfulness_witness == std::vector<int>{0, 4, 8},
                     json{{"witness", f.faithfulness_witness ? json(*f.faithfulness_witness) : json()}});
  }
  {
    const FlatnessReport f = flatness_report(z12, self_algebra(z12));
    report.add_check("the ring over itself is faithfully flat",
                     f.flat && f.faithfully_flat && !f.flatness_witness && !f.faithfulness_witness);
  }
  {
    const Localization loc = localize(z6, 2);
    const Algebra a = make_algebra(z6, loc.ring, loc.hom.map);
    const FlatnessReport f = flatness_report(z6, a);
    report.add_check("the localization of Z/6 at 2 is flat but not faithful; (2) kills it",
                     f.flat && !f.faithfully_flat && f.faithfulness_witness &&
                         *f.faithfulness_witness == std::vector<int>{0, 2, 4});
  }
  {
    const Algebra a = make_algebra(z6, cyclic_ring(1), std::vector<int>(6, 0));
    const FlatnessReport f = flatness_report(z6, a);
    report.add_check("the zero algebra is flat and maximally unfaithful",
                     f.flat && !f.faithfully_flat && f.faithfulness_witness &&
                         *f.faithfulness_witness == std::vector<int>{0});
  }
  {
    const FiniteRing z3 = cyclic_ring(3);
    std::vector<int> structure(12);
    for (int i = 0; i < 12; ++i) structure[static_cast<std::size_t>(i)] = i % 3;
    const Algebra a = make_algebra(z12, z3, structure);
    report.add_check("boolean shortcuts agree with the full report",
                     is_flat(z12, a) && !is_faithfully_flat(z12, a) &&
                         is_faithfully_flat(z12, self_algebra(z12)));
  }
  return report;
}

RunReport ring_descent() {
  RunReport report("ring h1");
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing z12 = cyclic_ring(12);
  const FiniteRing z30 = cyclic_ring(30);

  {
    bool dd_zero = true;
    long long scanned = 0;
    std::vector<FiniteModule> modules;
    modules.push_back(module_self(z6));
    modules.push_back(module_self(z12));
    modules.push_back(module_quotient(z12, ideal_generated(z12, std::vector<int>{4})));
    for (const FiniteModule& m : modules) {
      for (int x = 1; x <= 4; ++x) {
        std::vector<int> s(static_cast<std::size_t>(x), 0);
        while (true) {
          const std::vector<int> t = d0_table(m, x, s);
          for (int v : d1_table(m, x, t)) dd_zero = dd_zero && v == m.zero();
          ++scanned;
          int pos = x - 1;
          while (pos >= 0 && ++s[static_cast<std::size_t>(pos)] == m.size()) {
            s[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
    }
    report.add_check("d1 after d0 vanishes on every small cochain table", dd_zero,
                     json{{"tables_scanned", scanned}});
  }

  {
    const CohomologyReport a = cech_cohomology(z6, module_self(z6), {3, 4});
    report.add_check("Z/6 with cover (3,4): h0 = 6, h1 = 1, sections glue",
                     a.h0 == 6 && a.h1 == 1 && a.exact && a.descent_isomorphism,
                     json{{"h0", a.h0}, {"h1", a.h1}});
    const CohomologyReport b = cech_cohomology(z12, module_self(z12), {5, 10});
    report.add_check("Z/12 with cover (5,10): h0 = 12, h1 = 1",
                     b.h0 == 12 && b.h1 == 1 && b.exact && b.descent_isomorphism);
    const CohomologyReport c = cech_cohomology(z30, module_self(z30), {6, 10, 15});
    report.add_check("Z/30 with the orthogonal idempotent cover (6,10,15): h0 = 30, h1 = 1",
                     c.h0 == 30 && c.h1 == 1 && c.exact && c.descent_isomorphism);
  }

  {
    struct Instance {
      const FiniteRing* ring;
      std::vector<int> cover;
    };
    const std::vector<Instance> instances = {
        {&z6, {3, 4}}, {&z12, {5, 10}}, {&z30, {6, 10, 15}}, {&z30, {2, 3, 5}}};
    bool agree = true;
    for (const Instance& inst : instances) {
      const FiniteModule m = module_self(*inst.ring);
      const CohomologyReport s = cech_cohomology(*inst.ring, m, inst.cover);
      const CohomologyReport e = cech_cohomology_enumerative(*inst.ring, m, inst.cover);
      agree = agree && s.h0 == e.h0 && s.h1 == e.h1 && s.c0 == e.c0 && s.c1 == e.c1 &&
              s.exact == e.exact && s.descent_isomorphism && e.descent_isomorphism &&
              e.witnesses.empty();
    }
    report.add_check("structural and elementwise cohomology agree on the reference covers", agree,
                     json{{"instances", static_cast<int>(instances.size())}});
  }

  {
    const FiniteModule m = module_quotient(z12, ideal_generated(z12, std::vector<int>{4}));
    const CohomologyReport a = cech_cohomology(z12, m, {5, 10});
    report.add_check("the cyclic module Z/12 mod (4) also descends along (5,10)",
                     a.h0 == m.size() && a.h1 == 1 && a.descent_isomorphism);
  }

  {
    bool quasi = true;
    for (int f = 0; f < z6.size(); ++f)
      quasi = quasi && weak_quasicoherence_check(z6, module_self(z6), f).isomorphism;
    const FiniteModule m12 = module_quotient(z12, ideal_generated(z12, std::vector<int>{4}));
    quasi = quasi && weak_quasicoherence_check(z12, m12, 2).isomorphism;
    quasi = quasi && weak_quasicoherence_check(z12, m12, 3).isomorphism;
    const FiniteModule i30 = module_ideal(z30, ideal_generated(z30, std::vector<int>{6}));
    quasi = quasi && weak_quasicoherence_check(z30, i30, 10).isomorphism;
    report.add_check("sections over basic opens are the localizations on the reference modules",
                     quasi);
  }

  {
    const long long broken6 = corrupted_h1(z6, module_self(z6), {1, 1});
    const long long broken12 = corrupted_h1(z12, module_self(z12), {5, 10});
    report.add_check("the corrupted complex reports a nontrivial obstruction",
                     broken6 == 6 && broken12 == 3,
                     json{{"z6_cover_1_1", broken6}, {"z12_cover_5_10", broken12}});
  }

  {
    bool rejected = false;
    try {
      cech_cohomology(z6, module_self(z6), {2, 4});
    } catch (const Error& e) {
      rejected = e.code() == errc::not_unimodular;
    }
    report.add_check("a non-unimodular cover is rejected", rejected);
  }

  // Exhaustive sweep: every cover of size at most 3, deduplicated by the
  // multiset of stable idempotents (covers with equal idempotents present
  // identical complexes).
  long long sampled_agree = 0;
  bool unimodular_shortcut_ok = true;
  std::vector<NamedRing> sweep_rings;
  sweep_rings.push_back({"Z/6", cyclic_ring(6)});
  sweep_rings.push_back({"Z/12", cyclic_ring(12)});
  sweep_rings.push_back({"Z/30", cyclic_ring(30)});
  sweep_rings.push_back({"Z/4xZ/9", product_ring(cyclic_ring(4), cyclic_ring(9))});
  for (const NamedRing& nr : sweep_rings) {
    const FiniteRing& r = nr.ring;
    const FiniteModule m = module_self(r);
    std::vector<int> e(static_cast<std::size_t>(r.size()));
    for (int f = 0; f < r.size(); ++f) e[static_cast<std::size_t>(f)] = localize(r, f).idempotent;
    const auto join2 = [&](int a, int b) { return r.sub(r.add(a, b), r.mul(a, b)); };

    std::map<std::vector<int>, bool> classes;
    long long tuples = 0, covers = 0;
    bool all_ok = true;
    auto consider = [&](const std::vector<int>& cover) {
      ++tuples;
      std::vector<int> key;
      key.reserve(cover.size());
      int joined = r.zero();
      for (int f : cover) {
        key.push_back(e[static_cast<std::size_t>(f)]);
        joined = join2(joined, e[static_cast<std::size_t>(f)]);
      }
      const bool unimodular = joined == r.one();
      if (cover.size() <= 2 || tuples % 97 == 0) {
        unimodular_shortcut_ok =
            unimodular_shortcut_ok && unimodular == is_unimodular(r, cover);
        ++sampled_agree;
      }
      if (!unimodular) return;
      ++covers;
      std::sort(key.begin(), key.end());
      auto it = classes.find(key);
      if (it == classes.end()) {
        const CohomologyReport rep = cech_cohomology(r, m, cover);
        const GluingReport glue = ring_gluing_equalizer(r, cover);
        const bool ok = rep.h0 == r.size() && rep.h1 == 1 && rep.exact &&
                        rep.descent_isomorphism && glue.isomorphism &&
                        glue.equalizer_order == r.size();
        it = classes.emplace(std::move(key), ok).first;
      }
      all_ok = all_ok && it->second;
    };

    for (int f = 0; f < r.size(); ++f) consider({f});
    for (int f = 0; f < r.size(); ++f)
      for (int g = 0; g < r.size(); ++g) consider({f, g});
    for (int f = 0; f < r.size(); ++f)
      for (int g = 0; g < r.size(); ++g)
        for (int h = 0; h < r.size(); ++h) consider({f, g, h});

    report.add_check("every unimodular cover of size <= 3 of " + nr.name +
                         " glues with trivial obstruction",
                     all_ok,
                     json{{"tuples", tuples},
                          {"covers", covers},
                          {"idempotent_classes", static_cast<int>(classes.size())}});
  }
  report.add_check("idempotent-join unimodularity shortcut agrees with ideal membership",
                   unimodular_shortcut_ok, json{{"sampled", sampled_agree}});
  return report;
}

RunReport ring_glue() {
  RunReport report("ring glue");
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing z30 = cyclic_ring(30);

  {
    const GluingReport g = ring_gluing_equalizer(z6, {3, 4});
    const CohomologyReport e = cech_cohomology_enumerative(z6, module_self(z6), {3, 4});
    report.add_check("Z/6 glues along (3,4): equalizer of order 6",
                     g.ring_order == 6 && g.equalizer_order == 6 && g.isomorphism &&
                         e.h0 == g.equalizer_order,
                     json{{"equalizer", g.equalizer_order}});
  }
  {
    const GluingReport g = ring_gluing_equalizer(z30, {10, 21});
    report.add_check("the orthogonal pair (10,21) reassembles Z/30 by remainders",
                     g.equalizer_order == 30 && g.isomorphism);
  }
  {
    const GluingReport g = ring_gluing_equalizer(z30, {6, 10, 15});
    const CohomologyReport e = cech_cohomology_enumerative(z30, module_self(z30), {6, 10, 15});
    report.add_check("the triple (6,10,15) reassembles Z/30",
                     g.equalizer_order == 30 && g.isomorphism && e.h0 == 30);
  }
  {
    const GluingReport g = ring_gluing_equalizer(z30, {1});
    report.add_check("the singleton unit cover is the identity gluing",
                     g.equalizer_order == 30 && g.isomorphism);
  }
  {
    const FiniteRing r = product_ring(cyclic_ring(4), cyclic_ring(9));
    std::vector<int> cover;
    for (int x = 0; x < r.size(); ++x)
      if (x != r.zero() && x != r.one() && r.mul(x, x) == x) cover.push_back(x);
    bool ok = cover.size() == 2;
    if (ok) {
      const GluingReport g = ring_gluing_equalizer(r, cover);
      ok = g.equalizer_order == 36 && g.isomorphism;
    }
    report.add_check("Z/4 x Z/9 glues along its two nontrivial idempotents",
                     ok, json{{"cover", cover}});
  }
  {
    bool rejected = false;
    try {
      ring_gluing_equalizer(z30, {10, 15});
    } catch (const Error& e) {
      rejected = e.code() == errc::not_unimodular;
    }
    report.add_check("gluing refuses the non-cover (10,15) of Z/30", rejected);
  }
  return report;
}

RunReport site_presentation() {
  RunReport report("site presentation");
  const int bound = 6;
  report.set_parameter("sample_bound", bound);
  for (const char* name :
       {"singleton-only", "nonempty", "odd-cardinality", "contains-empty"}) {
    const CardinalityClass t = builtin_cardinality_class(name, 8);
    const PresentationVerdict v = is_presentation_class(t, bound);
    report.add_check(std::string("builtin class '") + name + "' presents a topology", v.ok,
                     json{{"reason", v.reason}});
  }
  {
    // Sizes {1, 2} are not closed under sums: 2 + 2 = 4.
    const CardinalityClass t =
        custom_cardinality_class("at-most-two", std::vector<bool>{false, true, true});
    const PresentationVerdict v = is_presentation_class(t, bound);
    bool witness_valid = !v.ok && v.witness.size() >= 2;
    if (witness_valid) {
      int sum = 0;
      witness_valid = t.contains(v.witness[0]);
      for (std::size_t i = 1; i < v.witness.size(); ++i) {
        witness_valid = witness_valid && t.contains(v.witness[i]);
        sum += v.witness[i];
      }
      witness_valid = witness_valid &&
                      static_cast<int>(v.witness.size()) - 1 == v.witness[0] && !t.contains(sum);
    }
    report.add_check("the class {1,2} is refused with a valid closure counterexample",
                     witness_valid, json{{"witness", v.witness}});
  }
  {
    const CardinalityClass t =
        custom_cardinality_class("subsingleton", std::vector<bool>{true, true});
    report.add_check("the subsingleton class {0,1} is closed and presents a topology",
                     is_presentation_class(t, bound).ok);
  }
  return report;
}

RunReport site_cover(std::uint64_t seed) {
  RunReport report("site check-cover");
  report.set_parameter("seed", seed);
  Rng rng(seed);
  const std::vector<std::string> names = {"odd-cardinality", "nonempty"};
  for (const std::string& name : names) {
    const CardinalityClass t = builtin_cardinality_class(name, 8);
    long long composed = 0, pulled_back = 0;
    bool compose_ok = true, pullback_ok = true;
    for (int i = 0; i < 500; ++i) {
      const int c = rng.between(1, 2);
      const FiniteMap g = random_cover(rng, t, c, 3, 8);
      const FiniteMap f = random_cover(rng, t, g.domain, 3, 8);
      const ComposedCover cc = compose_covers(t, g, f);
      compose_ok = compose_ok && cc.verdict.covering &&
                   check_cover(t, cc.composite).covering && cc.composite.domain == f.domain;
      ++composed;
    }
    for (int i = 0; i < 500; ++i) {
      const int x = rng.between(1, 2);
      const FiniteMap f = random_cover(rng, t, x, 3, 6);
      const int z = rng.between(0, 4);
      const FiniteMap g{z, x, rng.map_table(z, x)};
      const PullbackResult pb = pullback_cover(t, f, g);
      pullback_ok = pullback_ok && pb.verdict.covering && pb.to_z.codomain == z &&
                    static_cast<int>(pb.carrier.size()) == pb.to_z.domain;
      ++pulled_back;
    }
    report.add_check("all randomized composites re-verify as covers for '" + name + "'",
                     compose_ok, json{{"instances", composed}});
    report.add_check("all randomized pullbacks re-verify as covers for '" + name + "'",
                     pullback_ok, json{{"instances", pulled_back}});
  }
  {
    const CardinalityClass t = builtin_cardinality_class("odd-cardinality", 32);
    const FiniteMap g{3, 1, {0, 0, 0}};
    FiniteMap f{15, 3, {}};
    for (int i = 0; i < 15; ++i) f.table.push_back(i / 5);
    const ComposedCover cc = compose_covers(t, g, f);
    report.add_check("a 15-to-3-to-1 tower composes to the odd fiber 15",
                     cc.verdict.covering && cc.verdict.fiber_sizes == std::vector<int>{15});
  }
  {
    const CardinalityClass t = builtin_cardinality_class("nonempty", 8);
    const FiniteMap f{2, 3, {0, 1}};
    const CoverVerdict v = check_cover(t, f);
    report.add_check("an empty fiber is detected with its offending point",
                     !v.covering && v.offending_point && *v.offending_point == 2,
                     json{{"fiber_sizes", v.fiber_sizes}});
  }
  {
    const CardinalityClass t = builtin_cardinality_class("nonempty", 8);
    const FiniteMap f{4, 2, {0, 0, 1, 1}};
    const PullbackResult pb = pullback_cover(t, f, identity_map(2));
    report.add_check("pulling back along the identity reproduces the cover",
                     pb.verdict.covering && pb.to_z.domain == 4 &&
                         pb.verdict.fiber_sizes == check_cover(t, f).fiber_sizes);
  }
  return report;
}

RunReport site_sheaf(std::uint64_t seed) {
  RunReport report("site sheaf");
  report.set_parameter("seed", seed);
  Rng rng(seed);
  long long instances = 0;
  bool all_bijective = true;
  for (int i = 0; i < 1000; ++i) {
    const int b = rng.between(1, 4);
    const int a = rng.between(b, 5);
    const int x = rng.between(1, 4);
    const FiniteMap f{a, b, rng.surjection_table(a, b)};
    const SheafReport s = set_sheaf_equalizer(f, x);
    all_bijective = all_bijective && s.equalizer && s.descended == s.families &&
                    s.base_maps == s.families;
    ++instances;
  }
  report.add_check("matching families along random surjections descend uniquely", all_bijective,
                   json{{"instances", instances}});
  {
    const FiniteMap empty_cover{0, 1, {}};
    const SheafReport s = set_sheaf_equalizer(empty_cover, 2);
    report.add_check("the empty cover of a point fails the sheaf condition for two values",
                     !s.equalizer && s.families == 1 && s.descended == 1 && s.base_maps == 2,
                     json{{"families", s.families},
                          {"descended", s.descended},
                          {"base_maps", s.base_maps}});
  }
  {
    const FiniteMap not_onto{1, 2, {0}};
    const SheafReport s = set_sheaf_equalizer(not_onto, 2);
    report.add_check("a non-surjective map fails the sheaf condition", !s.equalizer);
  }
  {
    const FiniteMap f{3, 1, {0, 0, 0}};
    const SheafReport s = set_sheaf_equalizer(f, 3);
    report.add_check("constants are the only matching families over a point",
                     s.equalizer && s.families == 3 && s.base_maps == 3);
  }
  return report;
}

RunReport site_local_choice(std::uint64_t seed) {
  RunReport report("site local-choice");
  report.set_parameter("seed", seed);
  Rng rng(seed);
  const std::vector<std::string> names = {"nonempty", "odd-cardinality", "singleton-only"};
  long long instances = 0;
  bool all_ok = true;
  for (int i = 0; i < 1000; ++i) {
    const CardinalityClass t =
        builtin_cardinality_class(names[static_cast<std::size_t>(i % 3)], 8);
    const int c = rng.between(1, 3);
    const int d = rng.between(0, 4);
    const int x = rng.between(c, c + 4);
    const FiniteMap g{d, c, rng.map_table(d, c)};
    const FiniteMap f{x, c, rng.surjection_table(x, c)};
    const LocalChoiceResult lc = local_choice(t, g, f);
    all_ok = all_ok && lc.ok && lc.commutes && lc.p_verdict.covering &&
             compose(f, lc.h).table == compose(g, lc.p).table;
    ++instances;
  }
  report.add_check("lifts exist, commute, and project along a cover in every random instance",
                   all_ok, json{{"instances", instances}});
  {
    const CardinalityClass t = builtin_cardinality_class("nonempty", 8);
    const FiniteMap g{2, 1, {0, 0}};
    const FiniteMap f{3, 1, {0, 0, 0}};
    const LocalChoiceResult lc = local_choice(t, g, f);
    report.add_check("two points over a point lift through a 3-element cover with full fibers",
                     lc.ok && lc.p.domain == 6 && lc.h.domain == 6,
                     json{{"total_space", lc.p.domain}});
    const CardinalityClass s = builtin_cardinality_class("singleton-only", 8);
    const LocalChoiceResult one = local_choice(s, g, f);
    report.add_check("singleton fibers make the lift a section-sized copy of the base",
                     one.ok && one.p.domain == 2);
  }
  {
    const CardinalityClass t = builtin_cardinality_class("nonempty", 8);
    const FiniteMap g{0, 2, {}};
    const FiniteMap f{2, 2, {0, 1}};
    const LocalChoiceResult lc = local_choice(t, g, f);
    report.add_check("the empty base lifts vacuously", lc.ok && lc.p.domain == 0);
  }
  {
    const CardinalityClass t = builtin_cardinality_class("nonempty", 8);
    const FiniteMap g{1, 2, {1}};
    const FiniteMap f{2, 2, {0, 0}};
    bool rejected = false;
    try {
      local_choice(t, g, f);
    } catch (const Error& e) {
      rejected = e.code() == errc::not_surjective;
    }
    report.add_check("a map missing a needed point is rejected as non-surjective", rejected);
  }
  return report;
}

RunReport site_projective() {
  RunReport report("site projective");
  long long total_surjections = 0;
  bool all_split = true;
  for (int x = 0; x <= 3; ++x) {
    const ProjectivityReport p = verify_projectivity(x, x + 3);
    all_split = all_split && p.all_split;
    total_surjections += p.surjections_checked;
    report.add_check("every surjection onto a " + std::to_string(x) + "-element set splits",
                     p.all_split, json{{"surjections", p.surjections_checked}});
  }
  {
    // A total space of projective fibers (sizes 2 and 3) over a projective
    // 2-point base is projective again.
    const ProjectivityReport p = verify_projectivity(5, 6);
    report.add_check("a 5-element sum of fibers over a 2-point base is projective",
                     p.all_split, json{{"surjections", p.surjections_checked}});
    total_surjections += p.surjections_checked;
  }
  report.set_payload("surjections_total", total_surjections);
  return report;
}

RunReport join_homology() {
  RunReport report("join homology");
  {
    bool grid_ok = true;
    json detail = json::array();
    for (int m = 2; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        const SimplicialComplex c = iterated_join(discrete_points(m), n);
        const HomologyReport h = homology(c);
        const long long expected = ipow(m - 1, n);
        bool ok = torsion_free(h) && h.dimension == n - 1;
        for (int k = -1; k < n - 1; ++k) ok = ok && h.reduced_betti(k) == 0;
        ok = ok && h.reduced_betti(n - 1) == expected;
        ok = ok && homological_connectivity(h) == n - 2;
        const long long chi = reduced_euler_characteristic(c);
        ok = ok && chi == (n % 2 == 1 ? expected : -expected);
        ok = ok && alternating_betti_sum(h) == chi;
        const JoinConnectivityReport jc = join_connectivity(m, n);
        ok = ok && jc.matches && jc.computed_top_rank == expected;
        grid_ok = grid_ok && ok;
        detail.push_back(json{{"points", m}, {"copies", n}, {"top_rank", h.reduced_betti(n - 1)}});
      }
    report.add_check(
        "iterated joins of discrete sets are (n-2)-connected with top rank (m-1)^n", grid_ok,
        json{{"grid", detail}});
  }
  {
    const HomologyReport h = homology(iterated_join(discrete_points(2), 3));
    report.add_check("the octahedron (three joined point pairs) is a 2-sphere",
                     sphere_profile(h, 2));
  }
  {
    bool spheres_ok = true;
    for (int n = 2; n <= 5; ++n)
      spheres_ok = spheres_ok && sphere_profile(homology(sphere_boundary(n)), n - 2);
    report.add_check("hollow simplex boundaries have the expected sphere profiles", spheres_ok);
  }
  {
    bool join_spheres = true;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        const SimplicialComplex j = join(sphere_boundary(a + 2), sphere_boundary(b + 2));
        join_spheres = join_spheres && sphere_profile(homology(j), a + b + 1);
      }
    report.add_check("joins of spheres add dimensions: S^a * S^b is an (a+b+1)-sphere",
                     join_spheres);
  }
  {
    const SimplicialComplex k33 = complete_bipartite(3, 3);
    const HomologyReport h = homology(k33);
    const SimplicialComplex as_join = join(discrete_points(3), discrete_points(3));
    report.add_check("K(3,3) is the join of two 3-point sets with first Betti number 4",
                     h.reduced_betti(0) == 0 && h.reduced_betti(1) == 4 && torsion_free(h) &&
                         k33.facets() == as_join.facets(),
                     json{{"betti1", h.reduced_betti(1)}});
  }
  {
    const HomologyReport h = homology(cycle_graph(4));
    report.add_check("the 4-cycle is a circle", sphere_profile(h, 1));
  }
  {
    const SimplicialComplex rp2 = SimplicialComplex::from_facets(
        6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
    const HomologyReport h = homology(rp2);
    const bool ok = h.dimension == 2 && h.reduced_betti(-1) == 0 && h.reduced_betti(0) == 0 &&
                    h.reduced_betti(1) == 0 && h.reduced_betti(2) == 0 &&
                    h.torsion[2] == std::vector<long long>{2} &&
                    reduced_euler_characteristic(rp2) == 0;
    report.add_check("the six-vertex projective plane shows pure 2-torsion in degree 1", ok);
  }
  {
    const SimplicialComplex c4 = cycle_graph(4);
    const SimplicialComplex with_unit = join(empty_complex(), c4);
    report.add_check("the empty complex is the unit for join",
                     with_unit.facets() == c4.facets() && with_unit.vertices() == c4.vertices());
    report.add_check("the void complex absorbs joins", join(void_complex(), c4).is_void());
  }
  {
    const std::vector<SimplicialComplex> f = {discrete_points(2), discrete_points(3),
                                              sphere_boundary(3)};
    bool assoc = true;
    for (const auto& a : f)
      for (const auto& b : f)
        for (const auto& c : f)
          assoc = assoc && join(join(a, b), c).facets() == join(a, join(b, c)).facets();
    report.add_check("join is associative on the test family under shifted numbering", assoc);
  }
  {
    bool chi_mult = true;
    const std::vector<SimplicialComplex> f = {discrete_points(2), discrete_points(3),
                                              cycle_graph(4), sphere_boundary(3), empty_complex()};
    for (const auto& a : f)
      for (const auto& b : f)
        chi_mult = chi_mult &&
                   reduced_euler_characteristic(join(a, b)) ==
                       -reduced_euler_characteristic(a) * reduced_euler_characteristic(b);
    report.add_check("reduced Euler characteristics multiply (with sign) under join", chi_mult);
  }
  {
    const HomologyReport hv = homology(void_complex());
    const HomologyReport he = homology(empty_complex());
    const HomologyReport hp = homology(discrete_points(1));
    bool edge_ok = hv.dimension == -2 && he.reduced_betti(-1) == 1 && hp.dimension == 0;
    for (int k = -1; k <= hp.dimension; ++k) edge_ok = edge_ok && hp.reduced_betti(k) == 0;
    report.add_check("void, empty, and one-point complexes have the expected edge profiles",
                     edge_ok);
  }
  return report;
}

RunReport join_stabilize() {
  RunReport report("join stabilize");
  {
    bool all_equal = true, connected = true;
    for (int points = 0; points <= 4; ++points)
      for (int values = 1; values <= 4; ++values) {
        const StabilizationReport s = truncation_stabilization(points, values);
        all_equal = all_equal && s.equal;
        connected = connected && s.joins_connected;
      }
    report.add_check("component-constant maps out of A*A already match the plain value count",
                     all_equal);
    report.add_check("iterated joins of nonempty sets are connected", connected);
  }
  {
    const StabilizationReport s = truncation_stabilization(3, 4);
    report.add_check("three points against four values stabilize at exactly four maps",
                     s.component_constant_maps == 4 && s.truncated_maps == 4 &&
                         s.components == std::vector<int>{1, 1, 1},
                     json{{"component_constant_maps", s.component_constant_maps}});
  }
  {
    bool dependent_ok = true;
    json detail = json::array();
    for (int points = 2; points <= 3; ++points)
      for (int values = 2; values <= 3; ++values) {
        const DependentFamilyReport d = dependent_family_check(points, values);
        dependent_ok = dependent_ok && d.determined_by_truncation &&
                       d.locally_constant == values && d.globally_constant == values;
        detail.push_back(json{{"points", points},
                              {"values", values},
                              {"families", d.families_scanned},
                              {"locally_constant", d.locally_constant}});
      }
    report.add_check("edgewise-constant families over the triple join are globally constant",
                     dependent_ok, json{{"cases", detail}});
  }
  return report;
}

RunReport join_fibers(std::uint64_t seed) {
  RunReport report("join fibers");
  report.set_parameter("seed", seed);
  Rng rng(seed);
  long long instances = 0;
  bool all_match = true;
  for (int i = 0; i < 1000; ++i) {
    const int x = rng.between(1, 3);
    const int a = rng.between(0, 6);
    const int b = rng.between(0, 6);
    const FiniteMap f{a, x, rng.map_table(a, x)};
    const FiniteMap g{b, x, rng.map_table(b, x)};
    const JoinOfMapsResult r = join_of_maps(f, g);
    all_match = all_match && r.fibers_match;
    ++instances;
  }
  report.add_check("every sampled pointwise join is the join of the fibers", all_match,
                   json{{"instances", instances}});
  {
    const FiniteMap f{2, 1, {0, 0}};
    const FiniteMap g{3, 1, {0, 0, 0}};
    const JoinOfMapsResult r = join_of_maps(f, g);
    const HomologyReport h = homology(r.complex);
    report.add_check("two points joined with three points over a point form K(2,3)",
                     r.fibers_match && r.complex.facets() == complete_bipartite(2, 3).facets() &&
                         h.reduced_betti(1) == 2,
                     json{{"betti1", h.reduced_betti(1)}});
  }
  {
    const FiniteMap f = identity_map(2);
    const JoinOfMapsResult r = join_of_maps(f, f);
    report.add_check("joining a bijection with itself yields disjoint edges",
                     r.fibers_match && r.complex.facets() ==
                                           std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  }
  {
    const FiniteMap f{3, 2, {0, 0, 1}};
    const FiniteMap g{0, 2, {}};
    const JoinOfMapsResult r = join_of_maps(f, g);
    report.add_check("an empty side leaves the other side discrete",
                     r.fibers_match && r.complex.dimension() == 0 &&
                         static_cast<int>(r.complex.facets().size()) == 3);
  }
  return report;
}

RunReport all_suites(std::uint64_t seed) {
  RunReport report("suite all");
  report.set_parameter("seed", seed);
  report.absorb(lattice_free());
  report.absorb(lattice_congruence());
  report.absorb(lattice_simplicial(3));
  report.absorb(lattice_chain());
  report.absorb(ring_localize());
  report.absorb(ring_spec_points());
  report.absorb(ring_flat());
  report.absorb(ring_descent());
  report.absorb(ring_glue());
  report.absorb(site_presentation());
  report.absorb(site_cover(seed));
  report.absorb(site_sheaf(seed));
  report.absorb(site_local_choice(seed));
  report.absorb(site_projective());
  report.absorb(join_homology());
  report.absorb(join_stabilize());
  report.absorb(join_fibers(seed));
  return report;
}

}  // namespace finsite::suites
