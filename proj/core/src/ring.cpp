#include "finsite/ring.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace finsite {

FiniteRing::FiniteRing(const RawRingTables& t)
    : size_(t.size),
      add_(t.add),
      mul_(t.mul),
      neg_(t.neg),
      zero_(t.zero),
      one_(t.one),
      labels_(t.labels) {
  labels_.resize(size_);
  for (int i = 0; i < size_; ++i)
    if (labels_[i].empty()) labels_[i] = std::to_string(i);
}

bool FiniteRing::is_unit(int a) const {
  for (int u = 0; u < size_; ++u)
    if (mul(a, u) == one_) return true;
  return false;
}

RawRingTables FiniteRing::tables() const {
  return RawRingTables{size_, add_, mul_, neg_, zero_, one_, labels_};
}

std::variant<FiniteRing, RingDiagnostic> validate_ring(const RawRingTables& raw) {
  const int n = raw.size;
  auto bad = [](std::string axiom, std::vector<int> w) {
    return RingDiagnostic{std::move(axiom), std::move(w)};
  };
  if (n <= 0) return bad("carrier", {});
  if (static_cast<int>(raw.add.size()) != n * n ||
      static_cast<int>(raw.mul.size()) != n * n ||
      static_cast<int>(raw.neg.size()) != n)
    return bad("table-shape", {});
  for (int i = 0; i < n * n; ++i)
    if (raw.add[i] < 0 || raw.add[i] >= n || raw.mul[i] < 0 || raw.mul[i] >= n)
      return bad("table-range", {i / n, i % n});
  for (int i = 0; i < n; ++i)
    if (raw.neg[i] < 0 || raw.neg[i] >= n) return bad("table-range", {i});
  if (raw.zero < 0 || raw.zero >= n || raw.one < 0 || raw.one >= n)
    return bad("constants-range", {raw.zero, raw.one});
  if (raw.one == raw.zero && n > 1) return bad("one-equals-zero", {});

  auto ad = [&](int a, int b) { return raw.add[a * n + b]; };
  auto ml = [&](int a, int b) { return raw.mul[a * n + b]; };

  for (int a = 0; a < n; ++a) {
    if (ad(raw.zero, a) != a) return bad("additive-identity", {a});
    if (ad(a, raw.neg[a]) != raw.zero) return bad("additive-inverse", {a});
    if (ml(raw.one, a) != a) return bad("multiplicative-identity", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (ad(a, b) != ad(b, a)) return bad("commutativity(add)", {a, b});
      if (ml(a, b) != ml(b, a)) return bad("commutativity(mul)", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (ad(ad(a, b), c) != ad(a, ad(b, c)))
          return bad("associativity(add)", {a, b, c});
        if (ml(ml(a, b), c) != ml(a, ml(b, c)))
          return bad("associativity(mul)", {a, b, c});
        if (ml(a, ad(b, c)) != ad(ml(a, b), ml(a, c)))
          return bad("distributivity", {a, b, c});
      }
  return FiniteRing(raw);
}

FiniteRing require_ring(const RawRingTables& raw) {
  auto v = validate_ring(raw);
  if (auto* r = std::get_if<FiniteRing>(&v)) return std::move(*r);
  const auto& d = std::get<RingDiagnostic>(v);
  std::ostringstream msg;
  msg << "NotARing: axiom " << d.axiom << " fails at (";
  for (std::size_t i = 0; i < d.witness.size(); ++i)
    msg << (i ? "," : "") << d.witness[i];
  msg << ")";
  throw Error(errc::not_a_ring, msg.str());
}

FiniteRing cyclic_ring(int n) {
  if (n < 1) fail(errc::bad_input, "cyclic ring needs modulus >= 1");
  RawRingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (int a = 0; a < n; ++a) {
    t.neg[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      t.add[a * n + b] = (a + b) % n;
      t.mul[a * n + b] = (a * b) % n;
    }
  }
  t.zero = 0;
  t.one = n == 1 ? 0 : 1;
  for (int a = 0; a < n; ++a) t.labels.push_back(std::to_string(a));
  return require_ring(t);
}

FiniteRing product_ring(const FiniteRing& r, const FiniteRing& s) {
  const int nr = r.size(), ns = s.size(), n = nr * ns;
  auto enc = [&](int a, int b) { return a * ns + b; };
  RawRingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  t.labels.resize(n);
  for (int a1 = 0; a1 < nr; ++a1)
    for (int a2 = 0; a2 < ns; ++a2) {
      int a = enc(a1, a2);
      t.neg[a] = enc(r.neg(a1), s.neg(a2));
      t.labels[a] = "(" + r.label(a1) + "," + s.label(a2) + ")";
      for (int b1 = 0; b1 < nr; ++b1)
        for (int b2 = 0; b2 < ns; ++b2) {
          int b = enc(b1, b2);
          t.add[a * n + b] = enc(r.add(a1, b1), s.add(a2, b2));
          t.mul[a * n + b] = enc(r.mul(a1, b1), s.mul(a2, b2));
        }
    }
  t.zero = enc(r.zero(), s.zero());
  t.one = enc(r.one(), s.one());
  return require_ring(t);
}

bool is_ring_hom(const FiniteRing& r, const FiniteRing& s, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != r.size()) return false;
  for (int x : map)
    if (x < 0 || x >= s.size()) return false;
  if (map[r.one()] != s.one()) return false;
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b) {
      if (map[r.add(a, b)] != s.add(map[a], map[b])) return false;
      if (map[r.mul(a, b)] != s.mul(map[a], map[b])) return false;
    }
  return true;
}

Algebra make_algebra(const FiniteRing& base, FiniteRing ring, std::vector<int> structure) {
  if (!is_ring_hom(base, ring, structure))
    fail(errc::bad_input, "structure map is not a ring homomorphism");
  return Algebra{std::move(ring), RingHom{std::move(structure)}};
}

Algebra self_algebra(const FiniteRing& base) {
  std::vector<int> id(base.size());
  for (int i = 0; i < base.size(); ++i) id[i] = i;
  return Algebra{base, RingHom{std::move(id)}};
}

Algebra quadratic_extension(const FiniteRing& base, int c0, int c1) {
  const int n = base.size(), m = n * n;
  auto enc = [&](int u, int v) { return u * n + v; };
  RawRingTables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  t.neg.resize(m);
  t.labels.resize(m);
  for (int u1 = 0; u1 < n; ++u1)
    for (int v1 = 0; v1 < n; ++v1) {
      int a = enc(u1, v1);
      t.neg[a] = enc(base.neg(u1), base.neg(v1));
      t.labels[a] = base.label(u1) + "+" + base.label(v1) + "x";
      for (int u2 = 0; u2 < n; ++u2)
        for (int v2 = 0; v2 < n; ++v2) {
          int b = enc(u2, v2);
          t.add[a * m + b] = enc(base.add(u1, u2), base.add(v1, v2));
          // (u1 + v1 x)(u2 + v2 x) with x^2 = c1 x + c0
          int vv = base.mul(v1, v2);
          int cu = base.add(base.mul(u1, u2), base.mul(vv, c0));
          int cx = base.add(base.add(base.mul(u1, v2), base.mul(v1, u2)),
                            base.mul(vv, c1));
          t.mul[a * m + b] = enc(cu, cx);
        }
    }
  t.zero = enc(base.zero(), base.zero());
  t.one = enc(base.one(), base.zero());
  FiniteRing ext = require_ring(t);
  std::vector<int> structure(base.size());
  for (int r = 0; r < base.size(); ++r) structure[r] = enc(r, base.zero());
  return make_algebra(base, std::move(ext), std::move(structure));
}

std::vector<int> ring_generators(const FiniteRing& r) {
  const int n = r.size();
  std::vector<char> reached(n, 0);
  std::vector<int> gens;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a) {
        if (!reached[a]) continue;
        if (!reached[r.neg(a)]) { reached[r.neg(a)] = 1; grew = true; }
        for (int b = 0; b < n; ++b) {
          if (!reached[b]) continue;
          if (!reached[r.add(a, b)]) { reached[r.add(a, b)] = 1; grew = true; }
          if (!reached[r.mul(a, b)]) { reached[r.mul(a, b)] = 1; grew = true; }
        }
      }
    }
  };
  reached[r.zero()] = 1;
  reached[r.one()] = 1;
  close();
  for (int g = 0; g < n; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    reached[g] = 1;
    close();
  }
  return gens;
}

namespace {

// Propagate a partial map r -> s to closure under +, -, *.  Returns false on
// conflict.  The map must eventually become total when the known elements
// generate r.
bool propagate(const FiniteRing& r, const FiniteRing& s, std::vector<int>& m) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < r.size(); ++a) {
      if (m[a] < 0) continue;
      int na = r.neg(a), img = s.neg(m[a]);
      if (m[na] < 0) { m[na] = img; grew = true; }
      else if (m[na] != img) return false;
      for (int b = 0; b < r.size(); ++b) {
        if (m[b] < 0) continue;
        int ab = r.add(a, b), ai = s.add(m[a], m[b]);
        if (m[ab] < 0) { m[ab] = ai; grew = true; }
        else if (m[ab] != ai) return false;
        int mb = r.mul(a, b), mi = s.mul(m[a], m[b]);
        if (m[mb] < 0) { m[mb] = mi; grew = true; }
        else if (m[mb] != mi) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<RingHom> all_ring_homs(const FiniteRing& r, const FiniteRing& s,
                                   const std::vector<int>& seed) {
  std::vector<int> base(r.size(), -1);
  if (!seed.empty()) {
    if (static_cast<int>(seed.size()) != r.size())
      fail(errc::shape_mismatch, "hom seed must cover the source ring");
    base = seed;
  }
  if (base[r.zero()] < 0) base[r.zero()] = s.zero();
  if (base[r.one()] < 0) base[r.one()] = s.one();

  std::vector<RingHom> out;
  if (!propagate(r, s, base)) return out;

  std::vector<int> gens = ring_generators(r);
  std::vector<int> todo;
  for (int g : gens)
    if (base[g] < 0) todo.push_back(g);

  // Depth-first over generator images in ascending target order; keeps the
  // output deterministic and lexicographically sorted per generator stack.
  std::vector<std::pair<std::vector<int>, std::size_t>> stack{{base, 0}};
  while (!stack.empty()) {
    auto [m, next] = std::move(stack.back());
    stack.pop_back();
    // Find the first unassigned pending generator.
    std::size_t g_idx = next;
    while (g_idx < todo.size() && m[todo[g_idx]] >= 0) ++g_idx;
    if (g_idx == todo.size()) {
      bool total = true;
      for (int x : m)
        if (x < 0) { total = false; break; }
      if (total && is_ring_hom(r, s, m)) out.push_back(RingHom{m});
      continue;
    }
    // Push candidates in reverse so smaller images pop first.
    for (int img = s.size() - 1; img >= 0; --img) {
      auto m2 = m;
      m2[todo[g_idx]] = img;
      if (propagate(r, s, m2)) stack.emplace_back(std::move(m2), g_idx + 1);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RingHom& a, const RingHom& b) { return a.map < b.map; });
  return out;
}

Ideal ideal_generated(const FiniteRing& r, std::span<const int> gens) {
  const int n = r.size();
  std::vector<char> in(n, 0);
  in[r.zero()] = 1;
  // r*g closure, then additive closure; repeat (one pass of each suffices
  // for ideals, the loop guards against nothing but keeps it obvious).
  bool grew = true;
  std::vector<char> seeded(n, 0);
  for (int g : gens) {
    if (g < 0 || g >= n) fail(errc::bad_input, "ideal generator out of range");
    for (int x = 0; x < n; ++x) seeded[r.mul(x, g)] = 1;
  }
  for (int x = 0; x < n; ++x)
    if (seeded[x]) in[x] = 1;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a) {
      if (!in[a]) continue;
      for (int b = a; b < n; ++b) {
        if (!in[b]) continue;
        int c = r.add(a, b);
        if (!in[c]) { in[c] = 1; grew = true; }
      }
    }
  }
  Ideal ideal;
  ideal.member = in;
  for (int x = 0; x < n; ++x)
    if (in[x]) ideal.elements.push_back(x);
  return ideal;
}

std::vector<Ideal> all_ideals(const FiniteRing& r) {
  std::set<std::vector<int>> seen;
  std::vector<Ideal> out;
  std::vector<Ideal> frontier;
  Ideal zero = ideal_generated(r, {});
  seen.insert(zero.elements);
  out.push_back(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    for (const Ideal& i : frontier) {
      for (int x = 0; x < r.size(); ++x) {
        if (i.contains(x)) continue;
        std::vector<int> gens = i.elements;
        gens.push_back(x);
        Ideal j = ideal_generated(r, gens);
        if (seen.insert(j.elements).second) {
          out.push_back(j);
          next.push_back(j);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

bool is_unimodular(const FiniteRing& r, std::span<const int> elems) {
  return ideal_generated(r, elems).contains(r.one());
}

Localization localize(const FiniteRing& r, int f) {
  if (f < 0 || f >= r.size()) fail(errc::bad_input, "localize: element out of range");
  // Multiplicative orbit f, f^2, ...: eventually periodic; its cycle is a
  // finite group under multiplication whose identity is the idempotent we
  // want.  Plain squaring can get trapped in an odd-length cycle, so walk
  // the orbit and scan the cycle instead.
  std::vector<int> orbit{f};
  std::vector<int> first_pos(r.size(), -1);
  first_pos[f] = 0;
  int e = -1;
  for (;;) {
    int nxt = r.mul(orbit.back(), f);
    if (first_pos[nxt] >= 0) {
      // Cycle = orbit[first_pos[nxt] ... end].
      for (std::size_t k = first_pos[nxt]; k < orbit.size(); ++k) {
        int x = orbit[k];
        if (r.mul(x, x) == x) {
          e = x;
          break;
        }
      }
      break;
    }
    first_pos[nxt] = static_cast<int>(orbit.size());
    orbit.push_back(nxt);
  }
  assert(e >= 0 && "multiplicative cycle always contains a unique idempotent");

  std::vector<int> carrier;
  std::vector<int> idx(r.size(), -1);
  for (int x = 0; x < r.size(); ++x) {
    int ex = r.mul(e, x);
    if (idx[ex] < 0) {
      idx[ex] = 0;  // mark
      carrier.push_back(ex);
    }
  }
  std::sort(carrier.begin(), carrier.end());
  for (std::size_t i = 0; i < carrier.size(); ++i) idx[carrier[i]] = static_cast<int>(i);

  const int m = static_cast<int>(carrier.size());
  RawRingTables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  t.neg.resize(m);
  t.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    t.neg[i] = idx[r.neg(carrier[i])];
    t.labels[i] = r.label(carrier[i]);
    for (int j = 0; j < m; ++j) {
      t.add[i * m + j] = idx[r.add(carrier[i], carrier[j])];
      t.mul[i * m + j] = idx[r.mul(carrier[i], carrier[j])];
    }
  }
  t.zero = idx[r.zero()];
  t.one = idx[e];

  std::vector<int> hom(r.size());
  for (int x = 0; x < r.size(); ++x) hom[x] = idx[r.mul(e, x)];
  Localization loc{require_ring(t), RingHom{std::move(hom)}, e, carrier};
  assert(is_ring_hom(r, loc.ring, loc.hom.map));
  return loc;
}

std::vector<FiniteRing> standard_test_family() {
  return {cyclic_ring(1), cyclic_ring(2), cyclic_ring(3),
          cyclic_ring(4), cyclic_ring(6), cyclic_ring(12)};
}

bool verify_localization(const FiniteRing& r, int f, const FiniteRing& s,
                         const RingHom& hom, std::span<const FiniteRing> family) {
  if (!is_ring_hom(r, s, hom.map)) return false;
  if (!s.is_unit(hom.map[f])) return false;
  for (const FiniteRing& t : family) {
    auto from_r = all_ring_homs(r, t);
    auto from_s = all_ring_homs(s, t);
    for (const RingHom& psi : from_r) {
      if (!t.is_unit(psi.map[f])) continue;
      int factorings = 0;
      for (const RingHom& chi : from_s) {
        bool commutes = true;
        for (int x = 0; x < r.size(); ++x)
          if (chi.map[hom.map[x]] != psi.map[x]) {
            commutes = false;
            break;
          }
        if (commutes) ++factorings;
      }
      if (factorings != 1) return false;
    }
  }
  return true;
}

bool localization_product(const FiniteRing& r, int f, int g) {
  Localization lf = localize(r, f);
  Localization lg = localize(r, g);
  Localization lfg = localize(r, r.mul(f, g));
  int ef_eg = r.mul(lf.idempotent, lg.idempotent);
  if (lfg.idempotent == ef_eg) return true;  // literally the same subring
  // Defensive fallback: compare the subrings over R by enumerating
  // bijective homs commuting with the localization maps.
  std::vector<int> carrier;
  std::vector<int> idx(r.size(), -1);
  for (int x = 0; x < r.size(); ++x) {
    int y = r.mul(ef_eg, x);
    if (idx[y] < 0) {
      idx[y] = 0;
      carrier.push_back(y);
    }
  }
  if (carrier.size() != lfg.carrier.size()) return false;
  std::sort(carrier.begin(), carrier.end());
  return carrier == lfg.carrier;
}

std::vector<RingHom> spec_points(const FiniteRing& base, const Algebra& a) {
  std::vector<int> seed(a.ring.size(), -1);
  for (int x = 0; x < base.size(); ++x) {
    int ax = a.structure.map[x];
    if (seed[ax] >= 0 && seed[ax] != x) return {};  // structure not split by any hom
    seed[ax] = x;
  }
  return all_ring_homs(a.ring, base, seed);
}

DualityDiagnostic duality_comparison(const FiniteRing& base, const Algebra& a) {
  auto points = spec_points(base, a);
  DualityDiagnostic d;
  d.points = static_cast<int>(points.size());
  long long order = 1;
  for (int i = 0; i < d.points; ++i) {
    order *= base.size();
    if (order > (1LL << 50)) fail(errc::enumeration_too_large, "function ring too large");
  }
  d.function_ring_order = order;
  std::set<std::vector<int>> image;
  long long kernel = 0;
  for (int x = 0; x < a.ring.size(); ++x) {
    std::vector<int> tuple(d.points);
    bool all_zero = true;
    for (int i = 0; i < d.points; ++i) {
      tuple[i] = points[i].map[x];
      if (tuple[i] != base.zero()) all_zero = false;
    }
    if (all_zero) ++kernel;
    image.insert(std::move(tuple));
  }
  d.kernel_size = kernel;
  d.cokernel_size = order / static_cast<long long>(image.size());
  return d;
}

}  // namespace finsite
