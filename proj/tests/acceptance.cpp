// Acceptance battery: eleven end-to-end criteria, one line of output each.
// Exits nonzero if any criterion fails or exceeds its time budget.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "finsite/complex.hpp"
#include "finsite/congruence.hpp"
#include "finsite/descent.hpp"
#include "finsite/lattice.hpp"
#include "finsite/module.hpp"
#include "finsite/ring.hpp"
#include "finsite/rng.hpp"
#include "finsite/simplicial.hpp"
#include "finsite/site.hpp"

#include "oracles.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace finsite;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FINSITE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  CliResult r;
  if (!p) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int g_failures = 0;

// Runs one criterion.  The body returns an empty string on success or a
// failure description.  A positive budget (seconds) is enforced strictly.
void criterion(int index, const std::string& label, double budget_s,
               const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (detail.empty() && budget_s > 0 && elapsed > budget_s) {
    std::ostringstream os;
    os << "exceeded the " << budget_s << " s budget";
    detail = os.str();
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  if (detail.empty()) {
    line << "PASS criterion " << index << ": " << label << " (" << elapsed << " s)";
  } else {
    line << "FAIL criterion " << index << ": " << label << " -- " << detail << " ("
         << elapsed << " s)";
    ++g_failures;
  }
  std::cout << line.str() << "\n" << std::flush;
}

std::string fmt_tuple(const FiniteRing& r, const std::vector<int>& fs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? "," : "") << r.label(fs[i]);
  os << ")";
  return os.str();
}

// Random map whose every fiber size is drawn from the admissible sizes of t
// (capped at max_fiber), then domain-shuffled.
FiniteMap random_cover(Rng& rng, const CardinalityClass& t, int base, int max_fiber) {
  std::vector<int> sizes;
  for (int c = 1; c <= max_fiber; ++c)
    if (t.contains(c)) sizes.push_back(c);
  std::vector<int> table;
  for (int i = 0; i < base; ++i) {
    const int f = sizes[static_cast<std::size_t>(rng.below(static_cast<int>(sizes.size())))];
    table.insert(table.end(), static_cast<std::size_t>(f), i);
  }
  for (int i = static_cast<int>(table.size()) - 1; i > 0; --i)
    std::swap(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(rng.below(i + 1))]);
  return FiniteMap{static_cast<int>(table.size()), base, std::move(table)};
}

std::string check_free_sizes() {
  for (int n = 0; n <= 4; ++n) {
    const CliResult r = run_cli("lattice free --gens " + std::to_string(n) + " --format json");
    if (r.exit_code != 0) return "CLI exited " + std::to_string(r.exit_code);
    const long long got = json::parse(r.out).at("size").get<long long>();
    const long long want = oracle::monotone_function_count(n);
    if (got != want)
      return "gens " + std::to_string(n) + ": size " + std::to_string(got) + " != oracle " +
             std::to_string(want);
  }
  return "";
}

std::string check_gratzer() {
  long long tuples = 0;
  for (int n : {2, 3}) {
    const Lattice l = free_distributive_lattice(n);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        const std::vector<std::pair<int, int>> gen{{a, b}};
        const Congruence theta = congruence_closure(l, gen);
        for (int x = 0; x < l.size(); ++x)
          for (int y = 0; y < l.size(); ++y) {
            ++tuples;
            if (gratzer_criterion(l, a, b, x, y) != theta.related(x, y)) {
              std::ostringstream os;
              os << "mismatch at n=" << n << " (a,b,x,y)=(" << a << "," << b << "," << x << ","
                 << y << ")";
              return os.str();
            }
          }
      }
  }
  if (tuples == 0) return "no tuples checked";
  return "";
}

std::string check_equalizers() {
  for (int n : {2, 3}) {
    const Lattice l = free_distributive_lattice(n);
    int pairs = 0;
    for (int i = 0; i < l.size(); ++i)
      for (int j = 0; j < l.size(); ++j) {
        const EqualizerReport rep = check_simplicial_equalizer(l, i, j);
        if (!rep.bijective || !rep.amalgam_ok) {
          std::ostringstream os;
          os << "pair (" << i << "," << j << ") of the " << l.size()
             << "-element lattice: bijective=" << rep.bijective
             << " amalgam_ok=" << rep.amalgam_ok;
          return os.str();
        }
        ++pairs;
      }
    if (pairs != l.size() * l.size()) return "pair count off";
  }
  return "";
}

std::string check_principal_and_zero_quotients() {
  for (int n : {2, 3}) {
    const Lattice l = free_distributive_lattice(n);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b)
        if (!principal_eq_meet_join(l, a, b)) {
          std::ostringstream os;
          os << "principal congruence mismatch at n=" << n << " (" << a << "," << b << ")";
          return os.str();
        }
  }
  std::vector<Lattice> family;
  for (int n = 0; n <= 3; ++n) family.push_back(free_distributive_lattice(n));
  family.push_back(chain_lattice(4));
  family.push_back(chain_lattice(5));
  family.push_back(boolean_cube(2));
  family.push_back(boolean_cube(3));
  for (const Lattice& l : family)
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        const bool complements = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
        if (is_zero_quotient(l, a, b) != complements) {
          std::ostringstream os;
          os << "zero-quotient mismatch on size-" << l.size() << " lattice at (" << a << ","
             << b << ")";
          return os.str();
        }
      }
  return "";
}

std::string check_gluing_sweep() {
  struct Named {
    std::string name;
    FiniteRing ring;
  };
  const std::vector<Named> rings = {{"Z/6", cyclic_ring(6)},
                                    {"Z/12", cyclic_ring(12)},
                                    {"Z/30", cyclic_ring(30)},
                                    {"Z/4xZ/9", product_ring(cyclic_ring(4), cyclic_ring(9))}};
  long long covers = 0, classes = 0, sampled = 0, tuples = 0;
  for (const Named& nr : rings) {
    const FiniteRing& r = nr.ring;
    const FiniteModule m = module_self(r);
    std::vector<int> idem(static_cast<std::size_t>(r.size()));
    for (int f = 0; f < r.size(); ++f) idem[static_cast<std::size_t>(f)] = localize(r, f).idempotent;
    const auto or_join = [&r](int x, int y) { return r.add(x, r.sub(y, r.mul(x, y))); };
    // The complex at (f_1..f_k) is built from the idempotents e_{f_i} alone
    // and is symmetric in the indices, so verdicts are cached per sorted
    // idempotent multiset; unimodularity is the join of the e_i being 1,
    // cross-checked against the ideal-closure test on a sample of tuples.
    std::map<std::vector<int>, bool> memo;
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> fs(static_cast<std::size_t>(k), 0);
      while (true) {
        ++tuples;
        int e = idem[static_cast<std::size_t>(fs[0])];
        for (int t = 1; t < k; ++t) e = or_join(e, idem[static_cast<std::size_t>(fs[static_cast<std::size_t>(t)])]);
        const bool unimodular = e == r.one();
        if (tuples % 101 == 0) {
          ++sampled;
          if (is_unimodular(r, fs) != unimodular)
            return "unimodularity shortcut disagrees with the ideal test on " + nr.name + " " +
                   fmt_tuple(r, fs);
        }
        if (unimodular) {
          ++covers;
          std::vector<int> key(static_cast<std::size_t>(k));
          for (int t = 0; t < k; ++t) key[static_cast<std::size_t>(t)] = idem[static_cast<std::size_t>(fs[static_cast<std::size_t>(t)])];
          std::sort(key.begin(), key.end());
          auto [it, inserted] = memo.try_emplace(std::move(key), false);
          if (inserted) {
            ++classes;
            const GluingReport g = ring_gluing_equalizer(r, fs);
            const CohomologyReport c = cech_cohomology(r, m, fs);
            it->second = g.isomorphism && c.h1 == 1 && c.exact && c.descent_isomorphism;
          }
          if (!it->second)
            return "cover " + fmt_tuple(r, fs) + " over " + nr.name + " fails gluing or has |H1| > 1";
        }
        int pos = k - 1;
        while (pos >= 0 && ++fs[static_cast<std::size_t>(pos)] == r.size()) {
          fs[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
  if (covers == 0 || sampled == 0) return "sweep enumerated nothing";
  // Negative controls: zeroing the first difference map must leave a
  // nontrivial kernel where the honest complex is exact.
  const FiniteRing z6 = cyclic_ring(6), z12 = cyclic_ring(12);
  const long long bad6 = corrupted_h1(z6, module_self(z6), {1, 1});
  const long long bad12 = corrupted_h1(z12, module_self(z12), {5, 10});
  if (bad6 <= 1 || bad12 <= 1)
    return "corrupted complexes reported |H1| " + std::to_string(bad6) + " and " +
           std::to_string(bad12) + ", expected > 1";
  return "";
}

std::string check_localizations() {
  std::vector<FiniteRing> bundled;
  bundled.push_back(cyclic_ring(4));
  bundled.push_back(cyclic_ring(6));
  bundled.push_back(cyclic_ring(12));
  bundled.push_back(cyclic_ring(30));
  bundled.push_back(product_ring(cyclic_ring(4), cyclic_ring(9)));
  const std::vector<FiniteRing> family = standard_test_family();
  long long universal = 0, products = 0;
  for (const FiniteRing& r : bundled) {
    for (int f = 0; f < r.size(); ++f) {
      const Localization loc = localize(r, f);
      if (!verify_localization(r, f, loc.ring, loc.hom, family))
        return "universal property fails for f=" + r.label(f) + " in the order-" +
               std::to_string(r.size()) + " ring";
      ++universal;
    }
    for (int f = 0; f < r.size(); ++f)
      for (int g = 0; g < r.size(); ++g) {
        if (!localization_product(r, f, g))
          return "product law fails at (" + r.label(f) + "," + r.label(g) + ") in the order-" +
                 std::to_string(r.size()) + " ring";
        ++products;
      }
  }
  if (universal != 4 + 6 + 12 + 30 + 36 || products != 16 + 36 + 144 + 900 + 1296)
    return "sweep size off: " + std::to_string(universal) + " / " + std::to_string(products);
  return "";
}

std::string check_flatness() {
  const FiniteRing z4 = cyclic_ring(4), z12 = cyclic_ring(12), z6 = cyclic_ring(6);
  const FlatnessReport a = flatness_report(z4, make_algebra(z4, cyclic_ring(2), {0, 1, 0, 1}));
  if (a.flat) return "Z/2 over Z/4 misclassified as flat";
  std::vector<int> mod3(12);
  for (int i = 0; i < 12; ++i) mod3[static_cast<std::size_t>(i)] = i % 3;
  const FlatnessReport b = flatness_report(z12, make_algebra(z12, cyclic_ring(3), mod3));
  if (!b.flat || b.faithfully_flat) return "Z/3 over Z/12 should be flat but not faithful";
  const FlatnessReport c = flatness_report(z6, self_algebra(z6));
  if (!c.flat || !c.faithfully_flat) return "a ring over itself should be faithfully flat";
  return "";
}

std::string check_cover_laws() {
  Rng rng(20240817);
  const CardinalityClass odd = builtin_cardinality_class("odd-cardinality", 6);
  const CardinalityClass nonempty = builtin_cardinality_class("nonempty", 6);
  long long composed = 0, pulled = 0, chosen = 0;
  for (int round = 0; round < 1000; ++round) {
    const CardinalityClass& t = (round % 2 == 0) ? odd : nonempty;
    // Composition: g : Y -> Z and f : X -> Y both covers.
    const FiniteMap g = random_cover(rng, t, rng.between(1, 3), 5);
    const FiniteMap f = random_cover(rng, t, g.domain, 5);
    const ComposedCover cc = compose_covers(t, g, f);
    if (!cc.verdict.covering || !check_cover(t, cc.composite).covering)
      return "composite of two " + t.name + " covers not covering at round " +
             std::to_string(round);
    ++composed;
    // Pullback of a cover along an arbitrary map into the same base.
    const int base = rng.between(1, 3);
    const FiniteMap cover = random_cover(rng, t, base, 5);
    const int zsize = rng.between(0, 4);
    const FiniteMap along{zsize, base, rng.map_table(zsize, base)};
    const PullbackResult pb = pullback_cover(t, cover, along);
    if (!pb.verdict.covering)
      return "pullback of a " + t.name + " cover not covering at round " + std::to_string(round);
    ++pulled;
  }
  for (int round = 0; round < 1000; ++round) {
    const CardinalityClass& t = (round % 2 == 0) ? nonempty : odd;
    const int c = rng.between(1, 3);
    const int d = rng.between(1, 4);
    const int x = rng.between(c, c + 3);
    const FiniteMap g{d, c, rng.map_table(d, c)};
    const FiniteMap f{x, c, rng.surjection_table(x, c)};
    const LocalChoiceResult res = local_choice(t, g, f);
    if (!res.ok || !res.commutes || !res.p_verdict.covering)
      return "local choice fails for " + t.name + " at round " + std::to_string(round);
    ++chosen;
  }
  if (composed != 1000 || pulled != 1000 || chosen != 1000) return "instance counts off";
  return "";
}

std::string check_set_sheaf() {
  Rng rng(20240817);
  for (int round = 0; round < 1000; ++round) {
    const int a = rng.between(1, 5);
    const int b = rng.between(1, a);
    const int x = rng.between(1, 4);
    const FiniteMap f{a, b, rng.surjection_table(a, b)};
    const SheafReport rep = set_sheaf_equalizer(f, x);
    if (!rep.equalizer)
      return "surjection " + std::to_string(a) + "->" + std::to_string(b) + " with " +
             std::to_string(x) + " values not an equalizer at round " + std::to_string(round);
  }
  const SheafReport empty = set_sheaf_equalizer(FiniteMap{0, 1, {}}, 2);
  if (empty.equalizer || empty.families != 1 || empty.base_maps != 2)
    return "empty cover over a point should have one matching family and two base maps";
  return "";
}

std::string check_join_connectivity() {
  for (int m : {2, 3, 4})
    for (int n : {2, 3, 4}) {
      const SimplicialComplex c = iterated_join(discrete_points(m), n);
      const HomologyReport h = homology(c);
      long long expected = 1;
      for (int i = 0; i < n; ++i) expected *= m - 1;
      for (int d = -1; d <= n - 2; ++d)
        if (h.reduced_betti(d) != 0) {
          std::ostringstream os;
          os << "join of " << m << " points, " << n << " copies: degree " << d << " rank "
             << h.reduced_betti(d) << " != 0";
          return os.str();
        }
      if (h.reduced_betti(n - 1) != expected) {
        std::ostringstream os;
        os << "join of " << m << " points, " << n << " copies: top rank "
           << h.reduced_betti(n - 1) << " != " << expected;
        return os.str();
      }
    }
  // Three copies of two points: the octahedron, a 2-sphere.
  const HomologyReport sphere = homology(iterated_join(discrete_points(2), 3));
  if (sphere.dimension != 2 || sphere.reduced_betti(2) != 1 || sphere.reduced_betti(1) != 0 ||
      sphere.reduced_betti(0) != 0 || sphere.reduced_betti(-1) != 0)
    return "the octahedron does not have the 2-sphere profile";
  for (const auto& t : sphere.torsion)
    if (!t.empty()) return "the octahedron has torsion";
  for (int points = 0; points <= 4; ++points)
    for (int values = 1; values <= 4; ++values) {
      const StabilizationReport s = truncation_stabilization(points, values);
      if (!s.equal || !s.joins_connected) {
        std::ostringstream os;
        os << "stabilization fails at " << points << " points, " << values << " values";
        return os.str();
      }
    }
  return "";
}

std::string check_suite_stability() {
  namespace fs = std::filesystem;
  const fs::path p1 = fs::temp_directory_path() / "finsite_acceptance_suite1.json";
  const fs::path p2 = fs::temp_directory_path() / "finsite_acceptance_suite2.json";
  for (const fs::path& p : {p1, p2}) {
    const CliResult r = run_cli("suite all --format json --out " + p.string());
    if (r.exit_code != 0) return "suite run exited " + std::to_string(r.exit_code);
  }
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const std::string one = slurp(p1), two = slurp(p2);
  fs::remove(p1);
  fs::remove(p2);
  if (one.empty()) return "suite report is empty";
  if (one != two) return "two identical suite runs produced different bytes";
  const json j = json::parse(one);
  if (!j.at("summary").at("ok").get<bool>()) return "suite report not ok";
  return "";
}

}  // namespace

int main() {
  criterion(1, "free lattice sizes match the brute-force monotone count", 1.0, check_free_sizes);
  criterion(2, "principal-congruence membership test agrees with closure everywhere", 10.0,
            check_gratzer);
  criterion(3, "two-quotient equalizers are bijective with amalgams on all pairs", 10.0,
            check_equalizers);
  criterion(4, "principal congruences and zero quotients match the complement laws", 0.0,
            check_principal_and_zero_quotients);
  criterion(5, "every small unimodular cover glues with trivial H1; corrupted ones do not", 20.0,
            check_gluing_sweep);
  criterion(6, "localizations are universal and multiplicative on all bundled rings", 10.0,
            check_localizations);
  criterion(7, "flatness classifications for the three reference algebras", 0.0, check_flatness);
  criterion(8, "randomized composition, pullback, and local-choice cover laws", 0.0,
            check_cover_laws);
  criterion(9, "set-level sheaf equalizer for random surjections and the empty-cover control",
            0.0, check_set_sheaf);
  criterion(10, "iterated-join connectivity, sphere profile, and truncation stabilization", 20.0,
            check_join_connectivity);
  criterion(11, "full suite exits cleanly twice with byte-identical reports", 60.0,
            check_suite_stability);
  std::cout << "acceptance: " << (11 - g_failures) << "/11 criteria passed" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
