#include "finsite/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "finsite/common.hpp"
#include "finsite/intmat.hpp"

namespace finsite {

using intmat::Matrix;
using intmat::smith_diagonal;

SimplicialComplex SimplicialComplex::from_facets(int vertices,
                                                 std::vector<std::vector<int>> facets) {
  if (vertices < 0) fail(errc::bad_input, "vertex count must be nonnegative");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= vertices) fail(errc::bad_input, "facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Keep only maximal faces.
  std::vector<std::vector<int>> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < facets.size() && !contained; ++j) {
      if (i == j || facets[j].size() <= facets[i].size()) continue;
      contained = std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                facets[i].end());
    }
    if (!contained) maximal.push_back(facets[i]);
  }
  SimplicialComplex c;
  c.vertices_ = vertices;
  c.facets_ = std::move(maximal);
  return c;
}

bool SimplicialComplex::is_empty_complex() const {
  return facets_.size() == 1 && facets_[0].empty();
}

int SimplicialComplex::dimension() const {
  if (is_void()) return -2;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<int>> SimplicialComplex::faces(int dim) const {
  std::set<std::vector<int>> out;
  if (is_void()) return {};
  if (dim < -1) return {};
  if (dim == -1) return {{}};
  const std::size_t want = static_cast<std::size_t>(dim) + 1;
  for (const auto& f : facets_) {
    if (f.size() < want) continue;
    // All `want`-subsets of the facet, by a combination odometer.
    std::vector<std::size_t> pick(want);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> face(want);
      for (std::size_t i = 0; i < want; ++i) face[i] = f[pick[i]];
      out.insert(std::move(face));
      // Advance the combination.
      std::size_t i = want;
      while (i > 0 && pick[i - 1] == f.size() - (want - i) - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < want; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

SimplicialComplex discrete_points(int n) {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({i});
  if (n == 0) facets.push_back({});
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex solid_simplex(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return SimplicialComplex::from_facets(n, {all});
}

SimplicialComplex sphere_boundary(int n) {
  if (n == 0) return void_complex();
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip < n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v < n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex empty_complex() { return SimplicialComplex::from_facets(0, {{}}); }

SimplicialComplex void_complex() { return SimplicialComplex::from_facets(0, {}); }

SimplicialComplex cycle_graph(int n) {
  if (n < 3) fail(errc::bad_input, "a cycle needs at least 3 vertices");
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) fail(errc::bad_input, "both sides must be nonempty");
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) facets.push_back({i, a + j});
  return SimplicialComplex::from_facets(a + b, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::vector<int>> facets;
  for (const auto& fa : a.facets())
    for (const auto& fb : b.facets()) {
      std::vector<int> f = fa;
      for (int v : fb) f.push_back(a.vertices() + v);
      facets.push_back(std::move(f));
    }
  return SimplicialComplex::from_facets(a.vertices() + b.vertices(), std::move(facets));
}

SimplicialComplex iterated_join(const SimplicialComplex& a, int n) {
  if (n < 1) fail(errc::bad_input, "need at least one copy");
  SimplicialComplex j = a;
  for (int i = 1; i < n; ++i) j = join(j, a);
  return j;
}

long long HomologyReport::reduced_betti(int k) const {
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
  return betti[idx];
}

HomologyReport homology(const SimplicialComplex& c, long long max_faces) {
  HomologyReport rep;
  rep.dimension = c.dimension();
  if (c.is_void()) return rep;

  long long face_bound = 0;
  for (const auto& f : c.facets()) {
    if (f.size() > 40) fail(errc::matrix_too_large, "facet too large for homology");
    face_bound += 1LL << f.size();
    if (face_bound > max_faces) fail(errc::matrix_too_large, "too many faces for homology");
  }

  const int d = rep.dimension;
  std::vector<std::vector<std::vector<int>>> level(d + 2);  // level[k+1] = faces of dim k
  for (int k = -1; k <= d; ++k) level[k + 1] = c.faces(k);

  // ranks[k] = rank of the boundary map out of dimension k (0 <= k <= d);
  // torsion in degree k-1 comes from the same Smith form.
  std::vector<long long> ranks(d + 2, 0);
  std::vector<std::vector<long long>> torsion_below(d + 2);
  for (int k = 0; k <= d; ++k) {
    const auto& cols = level[k + 1];
    const auto& rows = level[k];
    std::map<std::vector<int>, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    Matrix m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& face = cols[j];
      int sign = 1;
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < face.size(); ++i)
          if (i != drop) sub.push_back(face[i]);
        m[row_index.at(sub)][j] += sign;
        sign = -sign;
      }
    }
    const std::vector<long long> diag = smith_diagonal(m);
    for (long long v : diag) {
      if (v != 0) ++ranks[k];
      if (v > 1) torsion_below[k].push_back(v);
    }
  }

  rep.betti.resize(d + 2);
  rep.torsion.resize(d + 2);
  for (int k = -1; k <= d; ++k) {
    const long long n_k = static_cast<long long>(level[k + 1].size());
    const long long out_rank = k >= 0 ? ranks[k] : 0;
    const long long in_rank = k + 1 <= d ? ranks[k + 1] : 0;
    rep.betti[k + 1] = n_k - out_rank - in_rank;
    rep.torsion[k + 1] = k + 1 <= d ? torsion_below[k + 1] : std::vector<long long>{};
  }
  return rep;
}

int connected_components(const SimplicialComplex& c) {
  if (c.is_void() || c.is_empty_complex()) return 0;
  std::vector<int> parent(c.vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> present(c.vertices(), false);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& f : c.facets())
    for (std::size_t i = 0; i < f.size(); ++i) {
      present[f[i]] = true;
      if (i > 0) parent[find(f[i])] = find(f[0]);
    }
  std::set<int> roots;
  for (int v = 0; v < c.vertices(); ++v)
    if (present[v]) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

long long reduced_euler_characteristic(const SimplicialComplex& c) {
  if (c.is_void()) return 0;
  long long chi = 0;
  for (int k = -1; k <= c.dimension(); ++k) {
    const long long n_k = static_cast<long long>(c.faces(k).size());
    chi += (k % 2 == 0) ? n_k : -n_k;
  }
  return chi;
}

int homological_connectivity(const HomologyReport& h) {
  for (int k = -1; k <= h.dimension; ++k) {
    const bool trivial = h.reduced_betti(k) == 0 &&
                         (k + 1 >= static_cast<int>(h.torsion.size()) || h.torsion[k + 1].empty());
    if (!trivial) return k - 1;
  }
  return h.dimension;
}

JoinOfMapsResult join_of_maps(const FiniteMap& f, const FiniteMap& g) {
  if (f.codomain != g.codomain) fail(errc::shape_mismatch, "maps must share a codomain");
  JoinOfMapsResult rep;
  const auto ff = fibers(f), fg = fibers(g);
  std::vector<std::vector<int>> facets;
  for (int x = 0; x < f.codomain; ++x) {
    rep.fiber_f.push_back(static_cast<int>(ff[x].size()));
    rep.fiber_g.push_back(static_cast<int>(fg[x].size()));
    for (int a : ff[x]) {
      if (fg[x].empty()) facets.push_back({a});
      for (int b : fg[x]) facets.push_back({a, f.domain + b});
    }
    if (ff[x].empty())
      for (int b : fg[x]) facets.push_back({f.domain + b});
  }
  rep.complex = SimplicialComplex::from_facets(f.domain + g.domain, std::move(facets));

  // Each induced subcomplex over x must be the join of the discrete fibers:
  // relabel the fiber vertices in order and compare facet lists.
  rep.fibers_match = true;
  for (int x = 0; x < f.codomain; ++x) {
    std::vector<int> verts = ff[x];
    for (int b : fg[x]) verts.push_back(f.domain + b);
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> induced;
    for (const auto& facet : rep.complex.facets()) {
      std::vector<int> mapped;
      bool inside = true;
      for (int v : facet) {
        auto it = relabel.find(v);
        if (it == relabel.end()) {
          inside = false;
          break;
        }
        mapped.push_back(it->second);
      }
      if (inside && !facet.empty()) induced.push_back(std::move(mapped));
    }
    const SimplicialComplex over_x =
        SimplicialComplex::from_facets(static_cast<int>(verts.size()), std::move(induced));
    const SimplicialComplex expected = join(discrete_points(rep.fiber_f[x]),
                                            discrete_points(rep.fiber_g[x]));
    const bool same = over_x.vertices() == expected.vertices() &&
                      (expected.is_empty_complex() ? over_x.is_void() || over_x.is_empty_complex()
                                                   : over_x.facets() == expected.facets());
    rep.fibers_match = rep.fibers_match && same;
  }
  return rep;
}

JoinConnectivityReport join_connectivity(int points, int copies) {
  if (points < 1 || copies < 1) fail(errc::bad_input, "need at least one point and one copy");
  JoinConnectivityReport rep;
  rep.copies = copies;
  rep.points = points;
  long long expected = 1;
  for (int i = 0; i < copies; ++i) expected *= points - 1;
  rep.expected_top_rank = expected;
  const SimplicialComplex j = iterated_join(discrete_points(points), copies);
  const HomologyReport h = homology(j);
  rep.computed_top_rank = h.reduced_betti(copies - 1);
  rep.connectivity = homological_connectivity(h);
  rep.matches = rep.computed_top_rank == rep.expected_top_rank && rep.connectivity >= copies - 2;
  return rep;
}

StabilizationReport truncation_stabilization(int points, int values) {
  if (points < 0 || values < 0) fail(errc::bad_input, "sizes must be nonnegative");
  StabilizationReport rep;
  rep.points = points;
  rep.values = values;
  const SimplicialComplex a = discrete_points(points);
  const int comps = connected_components(join(a, a));
  rep.component_constant_maps = 1;
  for (int i = 0; i < comps; ++i) rep.component_constant_maps *= values;
  rep.truncated_maps = points >= 1 ? values : 1;
  rep.equal = rep.component_constant_maps == rep.truncated_maps;
  rep.joins_connected = true;
  for (int n = 2; n <= 4; ++n) {
    const int c = connected_components(iterated_join(a, n));
    rep.components.push_back(c);
    if (points >= 1) rep.joins_connected = rep.joins_connected && c == 1;
  }
  return rep;
}

DependentFamilyReport dependent_family_check(int points, int values) {
  if (points < 1 || values < 1) fail(errc::bad_input, "need at least one point and one value");
  const SimplicialComplex j = iterated_join(discrete_points(points), 3);
  const int nv = j.vertices();
  long long total = 1;
  for (int i = 0; i < nv; ++i) {
    total *= values;
    if (total > 2000000) fail(errc::enumeration_too_large, "too many families to enumerate");
  }
  const auto edges = j.faces(1);
  DependentFamilyReport rep;
  std::vector<int> assign(nv, 0);
  while (true) {
    ++rep.families_scanned;
    bool local = true;
    for (const auto& e : edges) {
      local = local && assign[e[0]] == assign[e[1]];
      if (!local) break;
    }
    if (local) {
      ++rep.locally_constant;
      bool global = true;
      for (int v = 1; v < nv; ++v) global = global && assign[v] == assign[0];
      if (global) ++rep.globally_constant;
    }
    int pos = nv - 1;
    while (pos >= 0 && ++assign[pos] == values) assign[pos--] = 0;
    if (pos < 0) break;
  }
  rep.determined_by_truncation = rep.locally_constant == rep.globally_constant;
  return rep;
}

}  // namespace finsite
