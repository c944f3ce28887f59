#pragma once

#include <functional>
#include <vector>

#include "finsite/intmat.hpp"

namespace finsite {

// Invariant-factor decomposition of a finite abelian group given by an
// addition table.  `orders` lists the cyclic orders d1 | d2 | ... (all > 1),
// `basis` the corresponding group elements, and `coords[x]` the coordinates
// of element x, with coords[basis[i]] = e_i.  The zero group decomposes to
// rank 0 with every element (just zero) at empty coordinates.
struct AbelianDecomposition {
  std::vector<long long> orders;
  std::vector<int> basis;
  std::vector<std::vector<long long>> coords;

  int rank() const { return static_cast<int>(orders.size()); }
  long long order() const {
    long long n = 1;
    for (long long d : orders) n *= d;
    return n;
  }
};

AbelianDecomposition decompose_abelian(int size,
                                       const std::function<int(int, int)>& add,
                                       int zero);

// Size of the kernel of a homomorphism between finite abelian groups
// presented as products of cyclic factors: the domain is prod Z/orders_in,
// the codomain prod Z/orders_out, and `d` the integer matrix of the map on
// the canonical generators (rows indexed by out coordinates).  Computes the
// preimage lattice { x : d x = 0 mod orders_out } and divides out the
// relation lattice; no enumeration of group elements happens, so the result
// is exact even when the groups are astronomically large.
long long hom_kernel_size(const intmat::Matrix& d,
                          const std::vector<long long>& orders_in,
                          const std::vector<long long>& orders_out);

}  // namespace finsite
