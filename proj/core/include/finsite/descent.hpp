#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsite/module.hpp"
#include "finsite/ring.hpp"

namespace finsite {

// Difference cochain maps over an abstract finite index set X (no cover
// structure): s is a table X -> M, t a table X*X -> M (row-major), and the
// results are the alternating-difference cochains one level up.
//   d0(s)(x,x')    = s(x) - s(x')
//   d1(t)(x,x',x'') = t(x,x') - t(x,x'') + t(x',x'')
std::vector<int> d0_table(const FiniteModule& m, int x, const std::vector<int>& s);
std::vector<int> d1_table(const FiniteModule& m, int x, const std::vector<int>& t);

// Cover-indexed complex for basic opens D(f_1)..D(f_k) of a finite ring,
// realised through the localization idempotents e_i = e_{f_i}: the level-p
// component at a multi-index (i_0..i_p) is e_{i_0}...e_{i_p} * M.  The cover
// must be unimodular (the f_i generate the unit ideal).
struct CechComplex {
  std::vector<int> cover;                // the f_i, as elements of the ring
  std::vector<int> idempotents;          // e_{f_i}
  std::vector<FiniteModule> level0;      // e_i M, indexed by i
  std::vector<FiniteModule> level1;      // e_i e_j M, indexed by i*k+j
  std::vector<long long> level2_orders;  // |e_i e_j e_l M|, i*k*k+j*k+l
};

CechComplex cech_complex(const FiniteRing& r, const FiniteModule& m,
                         const std::vector<int>& cover);

struct CohomologyReport {
  long long h0 = 0;  // |ker d0|
  long long h1 = 0;  // |ker d1| / |im d0|
  bool exact = false;  // h1 == 1
  // Cocycles that do not descend (flattened level-1 tables); populated only
  // by the elementwise route, and only on failure.
  std::vector<std::vector<int>> witnesses;
  long long c0 = 0, c1 = 0;          // |C^0|, |C^1| (over all ordered pairs)
  bool descent_isomorphism = false;  // M -> ker d0 bijective
};

// Full cohomology of the two-step complex C^0 -> C^1 -> C^2 with
//   d0(s)(i,j)   = e_ij s_i - e_ij s_j
//   d1(t)(i,j,l) = e_ijl ( t_ij - t_il + t_jl )
// over all ordered multi-indices (diagonals included).  Kernel sizes are
// computed from integer presentations of the component groups, so large
// covers stay tractable; the elementwise variant below is the reference
// oracle for small complexes.  Throws NotUnimodular for non-covers.
CohomologyReport cech_cohomology(const FiniteRing& r, const FiniteModule& m,
                                 const std::vector<int>& cover);

CohomologyReport cech_cohomology_enumerative(const FiniteRing& r, const FiniteModule& m,
                                             const std::vector<int>& cover,
                                             long long bound = 2000000);

// |ker d1| of the complex after deliberately replacing d0 by the zero map --
// a broken complex used as a negative control: its "h1" is |ker d1|.
long long corrupted_h1(const FiniteRing& r, const FiniteModule& m,
                       const std::vector<int>& cover);

struct GluingReport {
  long long ring_order = 0;       // |R|
  long long equalizer_order = 0;  // glued sections of the structure sheaf
  bool isomorphism = false;
};

// Canonical map R -> { (x_1..x_k) : e_ij x_i = e_ij x_j } checked to be a
// bijection.  Throws NotUnimodular for non-covers.
GluingReport ring_gluing_equalizer(const FiniteRing& r, const std::vector<int>& cover);

struct QuasicoherenceReport {
  long long tensor_order = 0;     // |M (x)_R R_f|
  long long localized_order = 0;  // |e_f M|
  bool isomorphism = false;       // canonical map bijective
};

// Compares M (x)_R R_f with e_f * M along the canonical map m (x) y -> y*m;
// the map is always onto, so the verdict reduces to an order comparison.
QuasicoherenceReport weak_quasicoherence_check(const FiniteRing& r, const FiniteModule& m,
                                               int f);

}  // namespace finsite
