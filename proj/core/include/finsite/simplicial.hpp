#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finsite/congruence.hpp"
#include "finsite/lattice.hpp"

namespace finsite {

// Outcome of the two-quotient equalizer check for a pair (i, j): the lattice
// must map bijectively onto the pairs of L/(i<=j) x L/(j<=i) that agree in
// L/(i=j).
struct EqualizerReport {
  std::string lattice_name;
  int i = 0, j = 0;
  int size_leq = 0;       // |L/(i<=j)|
  int size_geq = 0;       // |L/(j<=i)|
  int size_eq = 0;        // |L/(i=j)|
  long long equalizer_size = 0;
  bool bijective = false;
  bool amalgam_ok = false;      // formula reproduced every unique preimage
  std::vector<int> witness;     // failing (class-leq, class-geq) pair, if any
};

// Mediated element for x = y mod (i = j): z := (x v y) ^ (x v i) ^ (y v j).
// Congruent to x mod (i <= j) and to y mod (j <= i); throws hypothesis_failed
// when x and y are not related mod (i = j).
int amalgam(const Lattice& l, int i, int j, int x, int y);

EqualizerReport check_simplicial_equalizer(const Lattice& l, int i, int j,
                                           std::string lattice_name = "");

// Iterated signed quotient: constraints (a_k, b_k) with sign +1 impose
// a_k <= b_k (pair (a_k v b_k, b_k)), sign -1 the reverse.  The empty
// constraint list yields the lattice itself.
Quotient chain_quotients(const Lattice& l,
                         std::span<const std::pair<int, int>> constraints,
                         std::span<const int> signs);

}  // namespace finsite
