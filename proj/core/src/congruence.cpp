#include "finsite/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace finsite {

namespace {

struct UnionFind {
  std::vector<int> parent, size;

  explicit UnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true when two classes actually merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

Congruence normalize(const Lattice& l, UnionFind& uf) {
  const int n = l.size();
  std::vector<int> min_of(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (min_of[r] < 0) min_of[r] = x;  // ascending scan: first hit is the minimum
  }
  Congruence c;
  c.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (c.class_of[min_of[r]] < 0) {
      c.class_of[min_of[r]] = c.num_classes++;
      c.representatives.push_back(min_of[r]);
    }
    c.class_of[x] = c.class_of[min_of[r]];
  }
  return c;
}

}  // namespace

Congruence congruence_closure(const Lattice& l, std::span<const std::pair<int, int>> pairs) {
  const int n = l.size();
  for (auto [a, b] : pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(errc::bad_input, "congruence pair out of range");

  UnionFind uf(n);
  std::vector<std::pair<int, int>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    // Compatibility consequences of the merged pair; consequences of pairs
    // already related follow by transitivity from earlier merges.
    for (int w = 0; w < n; ++w) {
      work.emplace_back(l.meet(a, w), l.meet(b, w));
      work.emplace_back(l.join(a, w), l.join(b, w));
    }
  }
  return normalize(l, uf);
}

Congruence pair_congruence(const Lattice& l, int a, int b) {
  std::pair<int, int> p{a, b};
  return congruence_closure(l, std::span<const std::pair<int, int>>(&p, 1));
}

Congruence order_congruence(const Lattice& l, int a, int b) {
  std::pair<int, int> p{l.join(a, b), b};
  return congruence_closure(l, std::span<const std::pair<int, int>>(&p, 1));
}

bool is_congruence(const Lattice& l, const std::vector<int>& class_of) {
  const int n = l.size();
  if (static_cast<int>(class_of.size()) != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (class_of[a] != class_of[b]) continue;
      for (int w = 0; w < n; ++w) {
        if (class_of[l.meet(a, w)] != class_of[l.meet(b, w)]) return false;
        if (class_of[l.join(a, w)] != class_of[l.join(b, w)]) return false;
      }
    }
  return true;
}

Quotient quotient(const Lattice& l, const Congruence& theta) {
  const int k = theta.num_classes;
  RawLatticeTables t;
  t.size = k;
  t.meet.resize(k * k);
  t.join.resize(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int a = theta.representatives[i], b = theta.representatives[j];
      t.meet[i * k + j] = theta.class_of[l.meet(a, b)];
      t.join[i * k + j] = theta.class_of[l.join(a, b)];
    }
  t.bottom = theta.class_of[l.bottom()];
  t.top = theta.class_of[l.top()];
  t.labels.resize(k);
  for (int i = 0; i < k; ++i) {
    std::string lbl = "{";
    bool first = true;
    for (int x = 0; x < l.size(); ++x)
      if (theta.class_of[x] == i) {
        if (!first) lbl += ",";
        lbl += l.label(x).empty() ? std::to_string(x) : l.label(x);
        first = false;
      }
    lbl += "}";
    t.labels[i] = std::move(lbl);
  }
  return Quotient{require_lattice(t), theta.class_of};
}

bool gratzer_criterion(const Lattice& l, int a, int b, int x, int y) {
  if (!l.leq(a, b))
    fail(errc::precondition_violated, "gratzer_criterion requires a <= b");
  return l.meet(x, a) == l.meet(y, a) && l.join(x, b) == l.join(y, b);
}

bool principal_eq_meet_join(const Lattice& l, int a, int b) {
  return pair_congruence(l, a, b) == pair_congruence(l, l.meet(a, b), l.join(a, b));
}

bool is_zero_quotient(const Lattice& l, int a, int b) {
  return pair_congruence(l, a, b).num_classes == 1;
}

}  // namespace finsite
