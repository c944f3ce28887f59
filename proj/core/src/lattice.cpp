#include "finsite/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace finsite {

Lattice::Lattice(const RawLatticeTables& t)
    : size_(t.size),
      meet_(t.meet),
      join_(t.join),
      bottom_(t.bottom),
      top_(t.top),
      labels_(t.labels) {
  labels_.resize(size_);
}

RawLatticeTables Lattice::tables() const {
  return RawLatticeTables{size_, meet_, join_, bottom_, top_, labels_};
}

namespace {

LatticeDiagnostic defect(LatticeDefect kind, std::string axiom, std::vector<int> witness) {
  return LatticeDiagnostic{kind, std::move(axiom), std::move(witness)};
}

}  // namespace

std::variant<Lattice, LatticeDiagnostic> validate_lattice(const RawLatticeTables& raw) {
  const int n = raw.size;
  if (n <= 0)
    return defect(LatticeDefect::not_a_lattice, "carrier", {});
  if (static_cast<int>(raw.meet.size()) != n * n ||
      static_cast<int>(raw.join.size()) != n * n)
    return defect(LatticeDefect::not_a_lattice, "table-shape", {});
  for (int i = 0; i < n * n; ++i)
    if (raw.meet[i] < 0 || raw.meet[i] >= n || raw.join[i] < 0 || raw.join[i] >= n)
      return defect(LatticeDefect::not_a_lattice, "table-range", {i / n, i % n});
  if (raw.bottom < 0 || raw.bottom >= n || raw.top < 0 || raw.top >= n)
    return defect(LatticeDefect::bounds_mismatch, "bounds-range", {raw.bottom, raw.top});

  auto mt = [&](int a, int b) { return raw.meet[a * n + b]; };
  auto jn = [&](int a, int b) { return raw.join[a * n + b]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (mt(a, b) != mt(b, a))
        return defect(LatticeDefect::not_a_lattice, "commutativity(meet)", {a, b});
      if (jn(a, b) != jn(b, a))
        return defect(LatticeDefect::not_a_lattice, "commutativity(join)", {a, b});
    }
  for (int a = 0; a < n; ++a) {
    if (mt(a, a) != a)
      return defect(LatticeDefect::not_a_lattice, "idempotence(meet)", {a});
    if (jn(a, a) != a)
      return defect(LatticeDefect::not_a_lattice, "idempotence(join)", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mt(mt(a, b), c) != mt(a, mt(b, c)))
          return defect(LatticeDefect::not_a_lattice, "associativity(meet)", {a, b, c});
        if (jn(jn(a, b), c) != jn(a, jn(b, c)))
          return defect(LatticeDefect::not_a_lattice, "associativity(join)", {a, b, c});
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (mt(a, jn(a, b)) != a)
        return defect(LatticeDefect::not_a_lattice, "absorption(meet-join)", {a, b});
      if (jn(a, mt(a, b)) != a)
        return defect(LatticeDefect::not_a_lattice, "absorption(join-meet)", {a, b});
    }
  for (int a = 0; a < n; ++a) {
    if (mt(raw.bottom, a) != raw.bottom)
      return defect(LatticeDefect::bounds_mismatch, "bottom", {a});
    if (jn(raw.top, a) != raw.top)
      return defect(LatticeDefect::bounds_mismatch, "top", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c)))
          return defect(LatticeDefect::non_distributive, "distributivity", {a, b, c});

  return Lattice(raw);
}

Lattice require_lattice(const RawLatticeTables& raw) {
  auto v = validate_lattice(raw);
  if (auto* l = std::get_if<Lattice>(&v)) return std::move(*l);
  const auto& d = std::get<LatticeDiagnostic>(v);
  errc code = errc::not_a_lattice;
  if (d.kind == LatticeDefect::bounds_mismatch) code = errc::bounds_mismatch;
  if (d.kind == LatticeDefect::non_distributive) code = errc::non_distributive;
  std::ostringstream msg;
  msg << errc_name(code) << ": axiom " << d.axiom << " fails at (";
  for (std::size_t i = 0; i < d.witness.size(); ++i)
    msg << (i ? "," : "") << d.witness[i];
  msg << ")";
  throw Error(code, msg.str());
}

namespace {

// Monotone Boolean functions on n variables as truth-table bitmasks: bit s
// of the mask is the value on the input whose generator set is s.
using Mask = unsigned;

std::string mask_label(Mask m, int n) {
  const int inputs = 1 << n;
  if (m == 0) return "0";
  if (m & 1u) return "1";  // true on the empty input means constant true
  // Minimal true inputs form an antichain; print their disjunction.
  std::vector<int> minimal;
  for (int s = 0; s < inputs; ++s) {
    if (!(m >> s & 1u)) continue;
    bool is_min = true;
    for (int t = (s - 1) & s; ; t = (t - 1) & s) {
      if (t != s && (m >> t & 1u)) { is_min = false; break; }
      if (t == 0) break;
    }
    if (is_min) minimal.push_back(s);
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (i) out << "|";
    int s = minimal[i];
    bool first = true;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) {
        if (!first) out << "&";
        out << "g" << (v + 1);
        first = false;
      }
  }
  return out.str();
}

}  // namespace

Lattice free_distributive_lattice(int n) {
  if (n < 0 || n > 4)
    fail(errc::too_many_generators,
         "free lattice supports 0..4 generators, got " + std::to_string(n));
  const int inputs = 1 << n;
  const Mask full = inputs == 32 ? 0xffffffffu : ((1u << inputs) - 1u);

  std::set<Mask> elems{0u, full};
  for (int v = 0; v < n; ++v) {
    Mask proj = 0;
    for (int s = 0; s < inputs; ++s)
      if (s >> v & 1) proj |= 1u << s;
    elems.insert(proj);
  }
  // Close under pointwise AND / OR; every monotone function is reached.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(elems.begin(), elems.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (elems.insert(cur[i] & cur[j]).second) grew = true;
        if (elems.insert(cur[i] | cur[j]).second) grew = true;
      }
  }

  std::vector<Mask> carrier(elems.begin(), elems.end());  // ascending = truth-table order
  std::map<Mask, int> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = static_cast<int>(i);

  const int sz = static_cast<int>(carrier.size());
  RawLatticeTables t;
  t.size = sz;
  t.meet.resize(sz * sz);
  t.join.resize(sz * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      t.meet[a * sz + b] = index.at(carrier[a] & carrier[b]);
      t.join[a * sz + b] = index.at(carrier[a] | carrier[b]);
    }
  t.bottom = 0;
  t.top = sz - 1;
  t.labels.resize(sz);
  for (int a = 0; a < sz; ++a) t.labels[a] = mask_label(carrier[a], n);

  return require_lattice(t);
}

int free_lattice_generator(const Lattice& fd, int n, int i) {
  assert(i >= 0 && i < n);
  const std::string want = "g" + std::to_string(i + 1);
  for (int a = 0; a < fd.size(); ++a)
    if (fd.label(a) == want) return a;
  fail(errc::bad_input, "generator " + want + " not found");
}

Lattice chain_lattice(int n) {
  assert(n >= 1);
  RawLatticeTables t;
  t.size = n;
  t.meet.resize(n * n);
  t.join.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.meet[a * n + b] = std::min(a, b);
      t.join[a * n + b] = std::max(a, b);
    }
  t.bottom = 0;
  t.top = n - 1;
  for (int a = 0; a < n; ++a) t.labels.push_back(std::to_string(a));
  return require_lattice(t);
}

Lattice boolean_cube(int k) {
  assert(k >= 0 && k <= 16);
  const int n = 1 << k;
  RawLatticeTables t;
  t.size = n;
  t.meet.resize(n * n);
  t.join.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.meet[a * n + b] = a & b;
      t.join[a * n + b] = a | b;
    }
  t.bottom = 0;
  t.top = n - 1;
  for (int a = 0; a < n; ++a) {
    std::ostringstream lbl;
    lbl << "{";
    bool first = true;
    for (int v = 0; v < k; ++v)
      if (a >> v & 1) {
        if (!first) lbl << ",";
        lbl << (v + 1);
        first = false;
      }
    lbl << "}";
    t.labels.push_back(lbl.str());
  }
  return require_lattice(t);
}

RawLatticeTables diamond_m3_tables() {
  // 0 < {x, y, z} < 1 with pairwise meets 0 and joins 1: a lattice, but
  // x ^ (y v z) = x while (x ^ y) v (x ^ z) = 0.
  RawLatticeTables t;
  t.size = 5;
  t.bottom = 0;
  t.top = 4;
  t.labels = {"0", "x", "y", "z", "1"};
  t.meet.assign(25, 0);
  t.join.assign(25, 4);
  auto mt = [&](int a, int b, int v) { t.meet[a * 5 + b] = v; t.meet[b * 5 + a] = v; };
  auto jn = [&](int a, int b, int v) { t.join[a * 5 + b] = v; t.join[b * 5 + a] = v; };
  for (int a = 0; a < 5; ++a) {
    mt(a, a, a);
    jn(a, a, a);
    mt(0, a, 0);
    jn(0, a, a);
    mt(4, a, a);
    jn(4, a, 4);
  }
  return t;
}

std::optional<int> complement_of(const Lattice& l, int a) {
  for (int b = 0; b < l.size(); ++b)
    if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) return b;
  return std::nullopt;
}

}  // namespace finsite
