// Independent reference implementations used only by the tests.  Everything
// here is deliberately written from first principles -- brute-force
// enumeration and textbook algorithms -- so that agreement with the library
// is a genuine cross-check, not a tautology.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "finsite/complex.hpp"
#include "finsite/lattice.hpp"
#include "finsite/ring.hpp"

namespace oracle {

// Number of monotone Boolean functions {0,1}^n -> {0,1}, counted by scanning
// every truth table (n <= 4).
inline long long monotone_function_count(int n) {
  const int inputs = 1 << n;
  long long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << inputs); ++mask) {
    bool monotone = true;
    for (int a = 0; a < inputs && monotone; ++a)
      for (int b = 0; b < inputs && monotone; ++b)
        if ((a & b) == a)  // a <= b pointwise
          if (((mask >> a) & 1u) > ((mask >> b) & 1u)) monotone = false;
    if (monotone) ++count;
  }
  return count;
}

// All partitions of {0..n-1} as restricted-growth strings: class ids appear
// in first-use order, which matches the library's normalized congruences.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(a);
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int k = 0; k < i; ++k) max_prefix = std::max(max_prefix, a[static_cast<std::size_t>(k)]);
      if (a[static_cast<std::size_t>(i)] <= max_prefix) break;
    }
    if (i == 0) return out;
    ++a[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k) a[static_cast<std::size_t>(k)] = 0;
  }
}

inline bool partition_is_congruence(const finsite::Lattice& l, const std::vector<int>& cls) {
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (cls[static_cast<std::size_t>(x)] != cls[static_cast<std::size_t>(y)]) continue;
      for (int z = 0; z < l.size(); ++z) {
        if (cls[static_cast<std::size_t>(l.meet(x, z))] != cls[static_cast<std::size_t>(l.meet(y, z))]) return false;
        if (cls[static_cast<std::size_t>(l.join(x, z))] != cls[static_cast<std::size_t>(l.join(y, z))]) return false;
      }
    }
  return true;
}

inline std::vector<std::vector<int>> all_congruences(const finsite::Lattice& l) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_partitions(l.size()))
    if (partition_is_congruence(l, p)) out.push_back(p);
  return out;
}

// Least congruence containing every listed pair: the common refinement of
// all congruences that contain the pairs, renormalized to a growth string.
inline std::vector<int> least_congruence(const finsite::Lattice& l,
                                         const std::vector<std::pair<int, int>>& pairs) {
  std::vector<const std::vector<int>*> containing;
  const auto congruences = all_congruences(l);
  for (const auto& c : congruences) {
    bool ok = true;
    for (auto [a, b] : pairs)
      if (c[static_cast<std::size_t>(a)] != c[static_cast<std::size_t>(b)]) {
        ok = false;
        break;
      }
    if (ok) containing.push_back(&c);
  }
  std::vector<int> cls(static_cast<std::size_t>(l.size()), -1);
  int next = 0;
  for (int x = 0; x < l.size(); ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    cls[static_cast<std::size_t>(x)] = next;
    for (int y = x + 1; y < l.size(); ++y) {
      bool everywhere = true;
      for (const auto* c : containing)
        if ((*c)[static_cast<std::size_t>(x)] != (*c)[static_cast<std::size_t>(y)]) {
          everywhere = false;
          break;
        }
      if (everywhere) cls[static_cast<std::size_t>(y)] = next;
    }
    ++next;
  }
  return cls;
}

// --- simplicial complexes -------------------------------------------------

// Every face of the complex (including the empty face when the complex is
// nonvoid), recomputed from the facet list by subset expansion.
inline std::set<std::vector<int>> all_faces(const finsite::SimplicialComplex& c) {
  std::set<std::vector<int>> faces;
  for (const auto& f : c.facets()) {
    const int k = static_cast<int>(f.size());
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if ((s >> i) & 1u) face.push_back(f[static_cast<std::size_t>(i)]);
      faces.insert(std::move(face));
    }
  }
  return faces;
}

// Reduced Euler characteristic from raw face counts.
inline long long euler_from_faces(const finsite::SimplicialComplex& c) {
  long long chi = 0;
  for (const auto& f : all_faces(c))
    chi += (f.size() % 2 == 0) ? -1 : 1;  // (-1)^(|f|-1)
  return chi;
}

// Rank of a matrix over GF(p) by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    // Normalize the pivot row.
    int inv = 0;
    const int pv = ((m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] % p) + p) % p;
    for (int x = 1; x < p; ++x)
      if (x * pv % p == 1) {
        inv = x;
        break;
      }
    for (int cc = 0; cc < cols; ++cc) {
      auto& v = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
      v = ((v % p) + p) % p * inv % p;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int factor = ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p) + p) % p;
      if (factor == 0) continue;
      for (int cc = 0; cc < cols; ++cc) {
        auto& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
        v = (((v - factor * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]) % p) + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers over GF(p), indexed from degree -1, computed from
// scratch: faces by subset expansion, boundary matrices with signs, ranks by
// Gaussian elimination.  Independent of the library's Smith-normal-form
// pipeline.
inline std::vector<int> betti_mod_p(const finsite::SimplicialComplex& c, int p) {
  const auto face_set = all_faces(c);
  if (face_set.empty()) return {};
  int dim = -1;
  for (const auto& f : face_set) dim = std::max(dim, static_cast<int>(f.size()) - 1);

  // faces[k] lists the (k-1)-dimensional faces; face index lookup per level.
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(dim) + 2);
  for (const auto& f : face_set) faces[f.size()].push_back(f);
  std::vector<std::map<std::vector<int>, int>> index(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) {
    std::sort(faces[k].begin(), faces[k].end());
    for (std::size_t i = 0; i < faces[k].size(); ++i) index[k][faces[k][i]] = static_cast<int>(i);
  }

  // boundary[k]: C_k -> C_{k-1} with the level shift (level = degree + 1).
  std::vector<int> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) {
    std::vector<std::vector<int>> m(faces[k - 1].size(),
                                    std::vector<int>(faces[k].size(), 0));
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      const auto& f = faces[k][j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        const int row = index[k - 1].at(sub);
        m[static_cast<std::size_t>(row)][j] = (drop % 2 == 0) ? 1 : p - 1;
      }
    }
    ranks[k] = rank_mod_p(std::move(m), p);
  }

  std::vector<int> betti(faces.size(), 0);
  for (std::size_t k = 0; k < faces.size(); ++k)
    betti[k] = static_cast<int>(faces[k].size()) - ranks[k] -
               (k + 1 < faces.size() + 1 ? ranks[k + 1] : 0);
  return betti;  // betti[k] is reduced degree k-1
}

// --- rings ------------------------------------------------------------------

// Ideal generated by `gens`, closed by fixpoint iteration under addition and
// multiplication by arbitrary ring elements.
inline std::set<int> brute_ideal(const finsite::FiniteRing& r, const std::vector<int>& gens) {
  std::set<int> ideal{r.zero()};
  for (int g : gens) ideal.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(ideal.begin(), ideal.end());
    for (int a : current) {
      for (int b : current)
        if (ideal.insert(r.add(a, b)).second) grew = true;
      for (int s = 0; s < r.size(); ++s)
        if (ideal.insert(r.mul(s, a)).second) grew = true;
    }
  }
  return ideal;
}

inline bool brute_unimodular(const finsite::FiniteRing& r, const std::vector<int>& gens) {
  return brute_ideal(r, gens).count(r.one()) > 0;
}

// Stable gcd for Z/n localizations: gcd(f^k, n) for k large enough.
inline int stable_gcd(int f, int n) {
  long long power = ((f % n) + n) % n;
  int g = 0;
  for (int k = 0; k < 64; ++k) {
    g = static_cast<int>(std::gcd(power, static_cast<long long>(n)));
    power = power * power % n;
    const int g2 = static_cast<int>(std::gcd(power, static_cast<long long>(n)));
    if (g2 == g) return g;
  }
  return g;
}

// Number of surjections from an n-set onto an x-set (inclusion-exclusion).
inline long long surjection_count(int n, int x) {
  auto binom = [](int a, int b) {
    long long v = 1;
    for (int i = 0; i < b; ++i) v = v * (a - i) / (i + 1);
    return v;
  };
  long long total = 0;
  for (int k = 0; k <= x; ++k) {
    long long term = binom(x, k);
    long long pw = 1;
    for (int i = 0; i < n; ++i) pw *= (x - k);
    total += (k % 2 == 0 ? 1 : -1) * term * pw;
  }
  return total;
}

}  // namespace oracle
