#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsite/site.hpp"

namespace finsite {

// A finite abstract simplicial complex on vertices {0..vertices-1}, stored as
// its maximal faces.  Construction normalises: faces are sorted vertex lists,
// non-maximal faces are dropped, the facet list is sorted.
class SimplicialComplex {
public:
  static SimplicialComplex from_facets(int vertices, std::vector<std::vector<int>> facets);

  int vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }           // no faces at all
  bool is_empty_complex() const;                             // only the empty face
  int dimension() const;                                     // -1 for {empty face}
  // All faces of the given dimension (cardinality dim+1), sorted.
  std::vector<std::vector<int>> faces(int dim) const;

private:
  int vertices_ = 0;
  std::vector<std::vector<int>> facets_;
};

SimplicialComplex discrete_points(int n);
SimplicialComplex solid_simplex(int n);        // full simplex on n vertices
SimplicialComplex sphere_boundary(int n);      // boundary of the n-vertex simplex
SimplicialComplex empty_complex();             // the (-1)-sphere: just the empty face
SimplicialComplex void_complex();              // no faces whatsoever
SimplicialComplex cycle_graph(int n);          // n-gon, n >= 3
SimplicialComplex complete_bipartite(int a, int b);

// Join: vertices of b are shifted past those of a; facets are unions.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// Left-associated iterated join of n copies (n >= 1).
SimplicialComplex iterated_join(const SimplicialComplex& a, int n);

struct HomologyReport {
  // betti[k] and torsion[k] describe reduced homology in degree k for
  // -1 <= k <= dim; index 0 of the vectors is degree -1.
  std::vector<long long> betti;
  std::vector<std::vector<long long>> torsion;   // nontrivial invariant factors
  int dimension = -2;

  long long reduced_betti(int k) const;
};

// Reduced simplicial homology over the integers, from Smith normal forms of
// the augmented boundary matrices.  Guarded by the total face count.
HomologyReport homology(const SimplicialComplex& c, long long max_faces = 200000);

int connected_components(const SimplicialComplex& c);
// Reduced Euler characteristic: sum over all faces (including the empty one)
// of (-1)^dim; equals the alternating sum of reduced Betti numbers.
long long reduced_euler_characteristic(const SimplicialComplex& c);
// Highest k such that reduced homology vanishes in all degrees <= k (the
// complex is k-connected in the homological sense); -2 when even degree -1
// fails (void or empty complex), capped at the dimension of the complex.
int homological_connectivity(const HomologyReport& h);

// The fiberwise join of two set maps f : A -> X, g : B -> X: a complex on
// the disjoint union of A and B with an edge (a, b) whenever f(a) = g(b),
// plus isolated vertices for unmatched points.  The report verifies that the
// induced subcomplex over each x is isomorphic (by an order-preserving
// relabeling) to the join of the two discrete fibers.
struct JoinOfMapsResult {
  SimplicialComplex complex;
  std::vector<int> fiber_f, fiber_g;  // fiber sizes per codomain point
  bool fibers_match = false;
};

JoinOfMapsResult join_of_maps(const FiniteMap& f, const FiniteMap& g);

// For an n-fold join of a discrete set of size m, reduced homology is
// concentrated in degree n-1 with rank (m-1)^n.  Verified directly.
struct JoinConnectivityReport {
  int copies = 0;
  int points = 0;
  long long expected_top_rank = 0;
  long long computed_top_rank = 0;
  int connectivity = 0;        // computed homological connectivity
  bool matches = false;
};

JoinConnectivityReport join_connectivity(int points, int copies);

// Set-level stabilization of iterated joins of a discrete set A against a
// value set X: maps out of A * A that are constant on connected components
// are counted and compared with |X| (for nonempty A) or 1 (empty A), and the
// component counts of A^{*n} for n = 2..4 are reported (all 1 for nonempty A).
struct StabilizationReport {
  int points = 0;
  int values = 0;
  long long component_constant_maps = 0;  // |X|^{#components(A * A)}
  long long truncated_maps = 0;           // |X| if A nonempty, else 1
  bool equal = false;
  std::vector<int> components;            // components(A^{*n}) for n = 2, 3, 4
  bool joins_connected = false;           // all 1 (vacuously true for empty A)
};

StabilizationReport truncation_stabilization(int points, int values);

// Experimental check of the dependent form at truncation level 0: families
// of nonempty finite sets over the vertices of A^{*3} that are constant
// along edges are already globally constant, so their section count over the
// components equals a single fiber size.  Enumerates all families with
// values in {1..values}.
struct DependentFamilyReport {
  long long families_scanned = 0;
  long long locally_constant = 0;
  long long globally_constant = 0;
  bool determined_by_truncation = false;  // locally constant == globally constant
};

DependentFamilyReport dependent_family_check(int points, int values);

}  // namespace finsite
