#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsite/abelian.hpp"
#include "finsite/ring.hpp"

namespace finsite {

// A finite module over a fixed ring, given by an addition table and an
// action table.  Validated eagerly on construction.
class FiniteModule {
public:
  static FiniteModule validated(const FiniteRing& r, int size, std::vector<int> add,
                                int zero, std::vector<int> action);

  int size() const { return size_; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int neg(int a) const { return neg_[a]; }
  int zero() const { return zero_; }
  int act(int r, int m) const { return action_[r * size_ + m]; }
  int ring_size() const { return ring_size_; }

private:
  FiniteModule() = default;
  int size_ = 0;
  std::vector<int> add_, neg_, action_;
  int zero_ = 0;
  int ring_size_ = 0;
};

FiniteModule module_self(const FiniteRing& r);
// S as an r-module along a ring hom r -> S.
FiniteModule module_via_hom(const FiniteRing& r, const FiniteRing& s, const RingHom& hom);
// The cyclic module r/I (cosets, canonical representative = least element).
FiniteModule module_quotient(const FiniteRing& r, const Ideal& i);
// I itself as an r-module.
FiniteModule module_ideal(const FiniteRing& r, const Ideal& i);
// e*M as a module, reindexed; e must be idempotent.
FiniteModule module_idempotent_part(const FiniteRing& r, const FiniteModule& m, int e);

AbelianDecomposition module_decomposition(const FiniteModule& m);

// |M (x)_R N|, computed from the abelian decompositions of M and N plus the
// balancing relations (r m (x) n = m (x) r n) on ring generators; the result
// is the index of the relation lattice, no element enumeration involved.
long long tensor_order(const FiniteRing& r, const FiniteModule& m, const FiniteModule& n);

struct FlatnessReport {
  bool flat = false;
  bool faithfully_flat = false;
  // First ideal where I (x) A -> A fails to inject, if any.
  std::optional<std::vector<int>> flatness_witness;
  // First proper ideal with (R/I) (x) A = 0, if any.
  std::optional<std::vector<int>> faithfulness_witness;
};

FlatnessReport flatness_report(const FiniteRing& r, const Algebra& a);
bool is_flat(const FiniteRing& r, const Algebra& a);
bool is_faithfully_flat(const FiniteRing& r, const Algebra& a);

}  // namespace finsite
