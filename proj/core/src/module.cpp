#include "finsite/module.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finsite/common.hpp"
#include "finsite/intmat.hpp"

namespace finsite {

using intmat::Matrix;
using intmat::smith_diagonal;

FiniteModule FiniteModule::validated(const FiniteRing& r, int size, std::vector<int> add,
                                     int zero, std::vector<int> action) {
  if (size <= 0) fail(errc::bad_input, "module carrier must be nonempty");
  const std::size_t n = static_cast<std::size_t>(size);
  if (add.size() != n * n) fail(errc::shape_mismatch, "module addition table has wrong shape");
  if (action.size() != static_cast<std::size_t>(r.size()) * n)
    fail(errc::shape_mismatch, "module action table has wrong shape");
  auto in_range = [size](int v) { return v >= 0 && v < size; };
  for (int v : add)
    if (!in_range(v)) fail(errc::bad_input, "module addition table entry out of range");
  for (int v : action)
    if (!in_range(v)) fail(errc::bad_input, "module action table entry out of range");
  if (!in_range(zero)) fail(errc::bad_input, "module zero out of range");

  FiniteModule m;
  m.size_ = size;
  m.add_ = std::move(add);
  m.zero_ = zero;
  m.action_ = std::move(action);
  m.ring_size_ = r.size();
  m.neg_.assign(n, -1);

  for (int a = 0; a < size; ++a) {
    if (m.add(zero, a) != a) fail(errc::bad_input, "module zero is not neutral");
    for (int b = 0; b < size; ++b) {
      if (m.add(a, b) != m.add(b, a)) fail(errc::bad_input, "module addition not commutative");
      if (m.add(a, b) == zero && m.neg_[a] < 0) m.neg_[a] = b;
      for (int c = 0; c < size; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          fail(errc::bad_input, "module addition not associative");
    }
  }
  for (int a = 0; a < size; ++a)
    if (m.neg_[a] < 0) fail(errc::bad_input, "module element without additive inverse");

  for (int a = 0; a < size; ++a)
    if (m.act(r.one(), a) != a) fail(errc::bad_input, "module action: identity must act trivially");
  for (int x = 0; x < r.size(); ++x) {
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b)
        if (m.act(x, m.add(a, b)) != m.add(m.act(x, a), m.act(x, b)))
          fail(errc::bad_input, "module action not additive in the module argument");
      for (int y = 0; y < r.size(); ++y) {
        if (m.act(r.add(x, y), a) != m.add(m.act(x, a), m.act(y, a)))
          fail(errc::bad_input, "module action not additive in the ring argument");
        if (m.act(r.mul(x, y), a) != m.act(x, m.act(y, a)))
          fail(errc::bad_input, "module action not multiplicative");
      }
    }
  }
  return m;
}

FiniteModule module_self(const FiniteRing& r) {
  const int n = r.size();
  std::vector<int> add(static_cast<std::size_t>(n) * n), action(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a) * n + b] = r.add(a, b);
      action[static_cast<std::size_t>(a) * n + b] = r.mul(a, b);
    }
  return FiniteModule::validated(r, n, std::move(add), r.zero(), std::move(action));
}

FiniteModule module_via_hom(const FiniteRing& r, const FiniteRing& s, const RingHom& hom) {
  if (!is_ring_hom(r, s, hom.map))
    fail(errc::bad_input, "structure map is not a ring homomorphism");
  const int n = s.size();
  std::vector<int> add(static_cast<std::size_t>(n) * n);
  std::vector<int> action(static_cast<std::size_t>(r.size()) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) add[static_cast<std::size_t>(a) * n + b] = s.add(a, b);
  for (int x = 0; x < r.size(); ++x)
    for (int a = 0; a < n; ++a)
      action[static_cast<std::size_t>(x) * n + a] = s.mul(hom.map[x], a);
  return FiniteModule::validated(r, n, std::move(add), s.zero(), std::move(action));
}

FiniteModule module_quotient(const FiniteRing& r, const Ideal& i) {
  const int n = r.size();
  // Canonical representative of x + I = least element of the coset.
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    int best = x;
    for (int e : i.elements) best = std::min(best, r.add(x, e));
    rep[x] = best;
  }
  std::vector<int> carrier;
  std::vector<int> index(n, -1);
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) {
      index[x] = static_cast<int>(carrier.size());
      carrier.push_back(x);
    }
  const int m = static_cast<int>(carrier.size());
  std::vector<int> add(static_cast<std::size_t>(m) * m), action(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      add[static_cast<std::size_t>(a) * m + b] = index[rep[r.add(carrier[a], carrier[b])]];
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a)
      action[static_cast<std::size_t>(x) * m + a] = index[rep[r.mul(x, carrier[a])]];
  return FiniteModule::validated(r, m, std::move(add), index[rep[r.zero()]], std::move(action));
}

FiniteModule module_ideal(const FiniteRing& r, const Ideal& i) {
  const std::vector<int>& carrier = i.elements;
  const int m = static_cast<int>(carrier.size());
  std::vector<int> index(r.size(), -1);
  for (int k = 0; k < m; ++k) index[carrier[k]] = k;
  std::vector<int> add(static_cast<std::size_t>(m) * m),
      action(static_cast<std::size_t>(r.size()) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int s = r.add(carrier[a], carrier[b]);
      if (index[s] < 0) fail(errc::bad_input, "carrier is not closed under addition");
      add[static_cast<std::size_t>(a) * m + b] = index[s];
    }
  for (int x = 0; x < r.size(); ++x)
    for (int a = 0; a < m; ++a) {
      const int p = r.mul(x, carrier[a]);
      if (index[p] < 0) fail(errc::bad_input, "carrier is not closed under the ring action");
      action[static_cast<std::size_t>(x) * m + a] = index[p];
    }
  if (index[r.zero()] < 0) fail(errc::bad_input, "carrier does not contain zero");
  return FiniteModule::validated(r, m, std::move(add), index[r.zero()], std::move(action));
}

FiniteModule module_idempotent_part(const FiniteRing& r, const FiniteModule& m, int e) {
  if (e < 0 || e >= r.size() || r.mul(e, e) != e)
    fail(errc::precondition_violated, "element is not idempotent");
  std::vector<int> index(m.size(), -1);
  std::vector<int> carrier;
  for (int a = 0; a < m.size(); ++a) {
    const int ea = m.act(e, a);
    if (index[ea] < 0) index[ea] = 0;
  }
  for (int a = 0; a < m.size(); ++a)
    if (index[a] >= 0) carrier.push_back(a);
  for (int k = 0; k < static_cast<int>(carrier.size()); ++k) index[carrier[k]] = k;
  const int sz = static_cast<int>(carrier.size());
  std::vector<int> add(static_cast<std::size_t>(sz) * sz),
      action(static_cast<std::size_t>(r.size()) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      add[static_cast<std::size_t>(a) * sz + b] = index[m.add(carrier[a], carrier[b])];
  for (int x = 0; x < r.size(); ++x)
    for (int a = 0; a < sz; ++a)
      action[static_cast<std::size_t>(x) * sz + a] = index[m.act(e, m.act(x, carrier[a]))];
  return FiniteModule::validated(r, sz, std::move(add), index[m.zero()], std::move(action));
}

AbelianDecomposition module_decomposition(const FiniteModule& m) {
  return decompose_abelian(
      m.size(), [&m](int a, int b) { return m.add(a, b); }, m.zero());
}

long long tensor_order(const FiniteRing& r, const FiniteModule& m, const FiniteModule& n) {
  const AbelianDecomposition dm = module_decomposition(m);
  const AbelianDecomposition dn = module_decomposition(n);
  const int p = dm.rank();
  const int q = dn.rank();
  if (p == 0 || q == 0) return 1;

  // Presentation of the tensor group on the p*q symbols basis_i (x) basis_j.
  const int cols = p * q;
  auto sym = [q](int i, int j) { return i * q + j; };
  Matrix rel;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      std::vector<long long> row(cols, 0);
      row[sym(i, j)] = dm.orders[i];
      rel.push_back(row);
      row[sym(i, j)] = dn.orders[j];
      rel.push_back(std::move(row));
    }
  // Balancing relations g*m_i (x) n_j = m_i (x) g*n_j for ring generators g;
  // additivity in each slot and closure in g extend them to the whole ring.
  for (int g : ring_generators(r)) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) {
        std::vector<long long> row(cols, 0);
        const auto& left = dm.coords[m.act(g, dm.basis[i])];
        for (int k = 0; k < p; ++k) row[sym(k, j)] += left[k];
        const auto& right = dn.coords[n.act(g, dn.basis[j])];
        for (int l = 0; l < q; ++l) row[sym(i, l)] -= right[l];
        bool zero = true;
        for (long long v : row) zero = zero && v == 0;
        if (!zero) rel.push_back(std::move(row));
      }
  }
  const std::vector<long long> diag = smith_diagonal(rel);
  long long order = 1;
  int nonzero = 0;
  for (long long d : diag)
    if (d != 0) {
      ++nonzero;
      order *= d;
    }
  if (nonzero != cols) fail(errc::bad_input, "tensor presentation is not of full rank");
  return order;
}

namespace {

// Order of the image of I (x) A -> A, i (x) x |-> structure(i)*x: the
// additive closure in A of all such products.
long long multiplication_image_order(const FiniteRing& r, const Algebra& a, const Ideal& i) {
  const FiniteRing& s = a.ring;
  std::set<int> image;
  image.insert(s.zero());
  std::vector<int> frontier;
  for (int e : i.elements)
    for (int x = 0; x < s.size(); ++x) {
      const int v = s.mul(a.structure.map[e], x);
      if (image.insert(v).second) frontier.push_back(v);
    }
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    const std::vector<int> all(image.begin(), image.end());
    for (int w : all) {
      const int u = s.add(v, w);
      if (image.insert(u).second) frontier.push_back(u);
    }
  }
  return static_cast<long long>(image.size());
}

}  // namespace

FlatnessReport flatness_report(const FiniteRing& r, const Algebra& a) {
  FlatnessReport report;
  report.flat = true;
  report.faithfully_flat = true;
  const FiniteModule amod = module_via_hom(r, a.ring, a.structure);
  for (const Ideal& i : all_ideals(r)) {
    const long long tensored = tensor_order(r, module_ideal(r, i), amod);
    const long long image = multiplication_image_order(r, a, i);
    if (tensored != image && !report.flatness_witness) {
      report.flat = false;
      report.flatness_witness = i.elements;
    }
    if (i.size() < r.size()) {
      const long long quot = tensor_order(r, module_quotient(r, i), amod);
      if (quot == 1 && !report.faithfulness_witness) {
        report.faithfully_flat = false;
        report.faithfulness_witness = i.elements;
      }
    }
  }
  report.faithfully_flat = report.flat && report.faithfully_flat;
  return report;
}

bool is_flat(const FiniteRing& r, const Algebra& a) { return flatness_report(r, a).flat; }

bool is_faithfully_flat(const FiniteRing& r, const Algebra& a) {
  return flatness_report(r, a).faithfully_flat;
}

}  // namespace finsite
