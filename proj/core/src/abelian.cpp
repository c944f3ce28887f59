#include "finsite/abelian.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace finsite {

namespace {

// Smallest additive generating set, greedily: repeatedly adjoin the least
// element outside the subgroup generated so far.  Deterministic.
std::vector<int> greedy_generators(int size,
                                   const std::function<int(int, int)>& add,
                                   int zero) {
  std::vector<char> reached(size, 0);
  reached[zero] = 1;
  int count = 1;
  std::vector<int> gens;
  auto close_with = [&](int g) {
    std::deque<int> queue;
    for (int x = 0; x < size; ++x)
      if (reached[x]) queue.push_back(x);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      int y = add(x, g);
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        queue.push_back(y);
      }
    }
  };
  while (count < size) {
    int g = 0;
    while (reached[g]) ++g;
    gens.push_back(g);
    // Close under addition of g and of all previous generators jointly:
    // adding multiples of g to every reached element suffices because the
    // reached set is already a subgroup.
    close_with(g);
  }
  return gens;
}

}  // namespace

AbelianDecomposition decompose_abelian(int size,
                                       const std::function<int(int, int)>& add,
                                       int zero) {
  AbelianDecomposition out;
  out.coords.assign(size, {});
  if (size <= 1) return out;

  std::vector<int> gens = greedy_generators(size, add, zero);
  const int k = static_cast<int>(gens.size());

  // BFS coordinates: v(x) in Z^k with x = sum v(x)_i * gens[i].
  std::vector<std::vector<long long>> v(size);
  std::vector<char> seen(size, 0);
  v[zero].assign(k, 0);
  seen[zero] = 1;
  std::deque<int> queue{zero};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      int y = add(x, gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        v[y] = v[x];
        v[y][i] += 1;
        queue.push_back(y);
      }
    }
  }

  // Relation lattice: v(x) + e_i - v(x + g_i) for every element and
  // generator.  These span the full kernel of Z^k -> G (tree/cross edge
  // argument); the index assert below double-checks.
  intmat::Matrix rel_rows;
  for (int x = 0; x < size; ++x) {
    for (int i = 0; i < k; ++i) {
      int y = add(x, gens[i]);
      std::vector<long long> r(k, 0);
      bool nonzero = false;
      for (int j = 0; j < k; ++j) {
        r[j] = v[x][j] - v[y][j];
        if (j == i) r[j] += 1;
        if (r[j] != 0) nonzero = true;
      }
      if (nonzero) rel_rows.push_back(std::move(r));
    }
  }

  // Column-major relation matrix B (k rows, one column per relation).
  intmat::Matrix b(k, std::vector<long long>(rel_rows.size(), 0));
  for (int c = 0; c < static_cast<int>(rel_rows.size()); ++c)
    for (int r = 0; r < k; ++r) b[r][c] = rel_rows[c][r];

  intmat::Matrix u, uinv;
  std::vector<long long> diag = intmat::smith_diagonal_with_left(b, u, uinv);
  assert(static_cast<int>(diag.size()) == k && "relation lattice must have full rank");
  long long idx = 1;
  for (long long d : diag) idx *= d;
  assert(idx == size && "relation lattice index must equal the group order");
  (void)idx;

  // Keep only nontrivial invariants; coordinates of x are (U v(x)) mod diag.
  std::vector<int> keep;
  for (int i = 0; i < k; ++i)
    if (diag[i] > 1) keep.push_back(i);

  out.orders.reserve(keep.size());
  for (int i : keep) out.orders.push_back(diag[i]);

  for (int x = 0; x < size; ++x) {
    std::vector<long long> c(keep.size(), 0);
    for (std::size_t t = 0; t < keep.size(); ++t) {
      int i = keep[t];
      long long s = 0;
      for (int j = 0; j < k; ++j) s += u[i][j] * v[x][j];
      long long m = diag[i];
      s %= m;
      if (s < 0) s += m;
      c[t] = s;
    }
    out.coords[x] = std::move(c);
  }

  // Basis elements: preimages of the unit vectors, i.e. psi(Uinv e_i).
  auto scaled_add = [&](int acc, int g, long long times, long long modulus) {
    long long t = times % modulus;
    if (t < 0) t += modulus;
    for (long long s = 0; s < t; ++s) acc = add(acc, g);
    return acc;
  };
  // Group exponent bound for scalar reduction: the group order works.
  for (std::size_t t = 0; t < keep.size(); ++t) {
    int i = keep[t];
    int elem = zero;
    for (int j = 0; j < k; ++j)
      elem = scaled_add(elem, gens[j], uinv[j][i], size);
    out.basis.push_back(elem);
    assert(out.coords[elem][t] == 1 % out.orders[t] || out.orders[t] == 1);
  }

#ifndef NDEBUG
  for (std::size_t t = 0; t < keep.size(); ++t)
    for (std::size_t s = 0; s < keep.size(); ++s)
      assert(out.coords[out.basis[t]][s] == (s == t ? 1 : 0));
  assert(out.order() == size);
#endif
  return out;
}

long long hom_kernel_size(const intmat::Matrix& d,
                          const std::vector<long long>& orders_in,
                          const std::vector<long long>& orders_out) {
  const int k = static_cast<int>(orders_in.size());
  const int l = static_cast<int>(orders_out.size());
  long long domain_order = 1;
  for (long long x : orders_in) domain_order *= x;
  if (k == 0) return 1;
  if (l == 0) return domain_order;

  assert(static_cast<int>(d.size()) == l);

  // Stack [D | diag(orders_out)] and take the kernel; the projection of the
  // kernel onto the first k coordinates is exactly the preimage lattice
  // L = { x : D x = 0 in prod Z/orders_out }.
  intmat::Matrix s(l, std::vector<long long>(k + l, 0));
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < k; ++c) s[r][c] = d[r][c];
    s[r][k + r] = orders_out[r];
  }
  auto kb = intmat::kernel_basis(s);

  // L contains diag(orders_in), hence has full rank k.
  intmat::Matrix basis(k, std::vector<long long>(kb.size(), 0));
  for (int c = 0; c < static_cast<int>(kb.size()); ++c)
    for (int r = 0; r < k; ++r) basis[r][c] = kb[c][r];
  long long index = intmat::lattice_index(std::move(basis));

  assert(domain_order % index == 0);
  return domain_order / index;
}

}  // namespace finsite
