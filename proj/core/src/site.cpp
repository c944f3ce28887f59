#include "finsite/site.hpp"

#include <algorithm>
#include <set>

namespace finsite {

namespace {

// Saturating power; anything past 2^56 is far beyond every enumeration bound.
long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1LL << 56)) return 1LL << 60;
    r *= base;
  }
  return r;
}

// Advance a mixed-radix counter; returns false when it wraps to all zeros.
bool advance(std::vector<int>& idx, const std::vector<int>& radix) {
  int pos = static_cast<int>(idx.size()) - 1;
  while (pos >= 0 && ++idx[pos] == radix[pos]) idx[pos--] = 0;
  return pos >= 0;
}

}  // namespace

FiniteMap identity_map(int n) {
  FiniteMap f;
  f.domain = f.codomain = n;
  f.table.resize(n);
  for (int i = 0; i < n; ++i) f.table[i] = i;
  return f;
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (f.codomain != g.domain) fail(errc::shape_mismatch, "maps are not composable");
  FiniteMap h;
  h.domain = f.domain;
  h.codomain = g.codomain;
  h.table.resize(f.domain);
  for (int x = 0; x < f.domain; ++x) h.table[x] = g.table[f.table[x]];
  return h;
}

bool is_surjective(const FiniteMap& f) {
  std::vector<bool> hit(f.codomain, false);
  for (int x = 0; x < f.domain; ++x) hit[f.table[x]] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::vector<int>> fibers(const FiniteMap& f) {
  std::vector<std::vector<int>> fs(f.codomain);
  for (int x = 0; x < f.domain; ++x) {
    if (f.table[x] < 0 || f.table[x] >= f.codomain)
      fail(errc::bad_input, "map table entry out of range");
    fs[f.table[x]].push_back(x);
  }
  return fs;
}

CardinalityClass builtin_cardinality_class(const std::string& name, int bound) {
  if (bound < 1) fail(errc::bad_input, "cardinality bound must be at least 1");
  // Size the table so that sums of up to `bound` admissible values, each at
  // most `bound`, still index into it.
  const int table_top = bound * bound;
  CardinalityClass t;
  t.name = name;
  t.admissible.assign(table_top + 1, false);
  for (int c = 0; c <= table_top; ++c) {
    if (name == "singleton-only")
      t.admissible[c] = c == 1;
    else if (name == "nonempty")
      t.admissible[c] = c >= 1;
    else if (name == "odd-cardinality")
      t.admissible[c] = c % 2 == 1;
    else if (name == "contains-empty")
      t.admissible[c] = true;
    else
      fail(errc::bad_input, "unknown cardinality class: " + name);
  }
  return t;
}

CardinalityClass custom_cardinality_class(std::string name, std::vector<bool> admissible) {
  if (admissible.empty()) fail(errc::bad_input, "admissibility table must be nonempty");
  CardinalityClass t;
  t.name = std::move(name);
  t.admissible = std::move(admissible);
  return t;
}

namespace {

// Enumerate nondecreasing tuples of `count` admissible fiber sizes, each at
// most `cap`, and check that every total is admissible.
bool sums_closed(const CardinalityClass& t, int base, int count, int min_part, int cap, int total,
                 std::vector<int>& parts, PresentationVerdict& out) {
  if (count == 0) {
    if (!t.contains(total)) {
      out.ok = false;
      out.reason = "not closed under admissible-indexed sums";
      out.witness.clear();
      out.witness.push_back(base);
      out.witness.insert(out.witness.end(), parts.begin(), parts.end());
      return false;
    }
    return true;
  }
  for (int c = min_part; c <= cap; ++c) {
    if (!t.contains(c)) continue;
    parts.push_back(c);
    const bool ok = sums_closed(t, base, count - 1, c, cap, total + c, parts, out);
    parts.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

PresentationVerdict is_presentation_class(const CardinalityClass& t, int sample_bound) {
  if (sample_bound < 1) fail(errc::bad_input, "sample bound must be at least 1");
  PresentationVerdict v;
  v.ok = true;
  if (!t.contains(1)) {
    v.ok = false;
    v.reason = "singletons (cardinality 1) must be admissible";
    v.witness = {1};
    return v;
  }
  std::vector<int> parts;
  for (int base = 0; base <= sample_bound; ++base) {
    if (!t.contains(base)) continue;
    if (!sums_closed(t, base, base, 0, sample_bound, 0, parts, v)) return v;
  }
  return v;
}

CoverVerdict check_cover(const CardinalityClass& t, const FiniteMap& f) {
  CoverVerdict v;
  v.covering = true;
  for (const auto& fiber : fibers(f)) v.fiber_sizes.push_back(static_cast<int>(fiber.size()));
  for (int x = 0; x < f.codomain; ++x)
    if (!t.contains(v.fiber_sizes[x])) {
      v.covering = false;
      if (!v.offending_point) v.offending_point = x;
    }
  return v;
}

ComposedCover compose_covers(const CardinalityClass& t, const FiniteMap& g, const FiniteMap& f) {
  ComposedCover c;
  c.composite = compose(g, f);
  c.verdict = check_cover(t, c.composite);
  return c;
}

PullbackResult pullback_cover(const CardinalityClass& t, const FiniteMap& f, const FiniteMap& g) {
  if (f.codomain != g.codomain) fail(errc::shape_mismatch, "maps must share a codomain");
  PullbackResult result;
  for (int z = 0; z < g.domain; ++z)
    for (int y = 0; y < f.domain; ++y)
      if (g.table[z] == f.table[y]) result.carrier.emplace_back(z, y);
  const int n = static_cast<int>(result.carrier.size());
  result.to_z.domain = result.to_y.domain = n;
  result.to_z.codomain = g.domain;
  result.to_y.codomain = f.domain;
  for (const auto& [z, y] : result.carrier) {
    result.to_z.table.push_back(z);
    result.to_y.table.push_back(y);
  }
  result.verdict = check_cover(t, result.to_z);
  return result;
}

SheafReport set_sheaf_equalizer(const FiniteMap& f, int x, long long bound) {
  if (x < 0) fail(errc::bad_input, "value set size must be nonnegative");
  SheafReport rep;
  const long long total_h = ipow(x, f.domain);
  const long long total_u = ipow(x, f.codomain);
  if (total_h > bound || total_u > bound)
    fail(errc::enumeration_too_large, "too many families to enumerate");
  rep.base_maps = total_u;

  const auto fbs = fibers(f);
  // Families h : A -> X constant on every fiber of f.
  if (total_h > 0) {
    std::vector<int> h(f.domain, 0);
    const std::vector<int> radix(f.domain, x);
    long long count = 0;
    while (true) {
      bool compatible = true;
      for (const auto& fiber : fbs) {
        for (std::size_t i = 1; i < fiber.size() && compatible; ++i)
          compatible = h[fiber[i]] == h[fiber[0]];
        if (!compatible) break;
      }
      if (compatible) ++count;
      if (f.domain == 0 || !advance(h, radix)) break;
    }
    rep.families = count;
  }

  // Families that arise as u o f for some u : B -> X.
  if (total_u > 0) {
    std::set<std::vector<int>> images;
    std::vector<int> u(f.codomain, 0);
    const std::vector<int> radix(f.codomain, x);
    while (true) {
      std::vector<int> h(f.domain);
      for (int a = 0; a < f.domain; ++a) h[a] = u[f.table[a]];
      images.insert(std::move(h));
      if (f.codomain == 0 || !advance(u, radix)) break;
    }
    rep.descended = static_cast<long long>(images.size());
  }
  rep.equalizer = rep.descended == rep.families && rep.descended == rep.base_maps;
  return rep;
}

LocalChoiceResult local_choice(const CardinalityClass& t, const FiniteMap& g,
                               const FiniteMap& f) {
  if (g.codomain != f.codomain) fail(errc::shape_mismatch, "maps must share a codomain");
  const auto f_fibers = fibers(f);
  LocalChoiceResult result;
  for (int d = 0; d < g.domain; ++d) {
    const auto& fiber = f_fibers[g.table[d]];
    if (fiber.empty())
      fail(errc::not_surjective,
           "no preimage over point " + std::to_string(g.table[d]));
    // Largest admissible part size not exceeding the fiber (the full fiber
    // when its size is admissible).
    int best = -1;
    for (int k = 0; k <= static_cast<int>(fiber.size()); ++k)
      if (t.contains(k)) best = k;
    if (best < 0)
      fail(errc::precondition_violated, "no admissible part fits inside the fiber");
    result.chosen.emplace_back(fiber.begin(), fiber.begin() + best);
  }
  result.p.codomain = g.domain;
  result.h.codomain = f.domain;
  for (int d = 0; d < g.domain; ++d)
    for (int v : result.chosen[d]) {
      result.p.table.push_back(d);
      result.h.table.push_back(v);
    }
  result.p.domain = result.h.domain = static_cast<int>(result.p.table.size());

  const FiniteMap fh = compose(f, result.h);
  const FiniteMap gp = compose(g, result.p);
  result.commutes = fh.table == gp.table;
  result.p_verdict = check_cover(t, result.p);
  result.ok = result.commutes && result.p_verdict.covering;
  return result;
}

ProjectivityReport verify_projectivity(int x, int bound) {
  if (x < 0 || bound < 0) fail(errc::bad_input, "sizes must be nonnegative");
  long long work = 0;
  for (int y = 0; y <= bound; ++y) work += ipow(x, y);
  if (work > 2000000) fail(errc::enumeration_too_large, "too many candidate surjections");

  ProjectivityReport rep;
  rep.x = x;
  rep.bound = bound;
  rep.all_split = true;
  for (int y = 0; y <= bound; ++y) {
    if (x == 0 && y > 0) break;  // no maps into an empty codomain
    std::vector<int> table(y, 0);
    const std::vector<int> radix(y, x);
    while (true) {
      FiniteMap f;
      f.domain = y;
      f.codomain = x;
      f.table = table;
      if (is_surjective(f)) {
        ++rep.surjections_checked;
        // Section: least preimage of every point.
        FiniteMap s;
        s.domain = x;
        s.codomain = y;
        const auto fbs = fibers(f);
        for (int p = 0; p < x; ++p) s.table.push_back(fbs[p].front());
        const FiniteMap round_trip = compose(f, s);
        bool splits = true;
        for (int p = 0; p < x; ++p) splits = splits && round_trip.table[p] == p;
        rep.all_split = rep.all_split && splits;
      }
      if (y == 0 || !advance(table, radix)) break;
    }
  }
  return rep;
}

}  // namespace finsite
