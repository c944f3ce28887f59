#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "finsite/common.hpp"

namespace finsite {

struct RawRingTables {
  int size = 0;
  std::vector<int> add;  // row-major size x size
  std::vector<int> mul;
  std::vector<int> neg;  // additive inverse per element
  int zero = 0;
  int one = 0;
  std::vector<std::string> labels;
};

struct RingDiagnostic {
  std::string axiom;
  std::vector<int> witness;
};

// A validated finite commutative unital ring.  The zero ring (size 1,
// one == zero) is permitted and flagged.
class FiniteRing {
public:
  int size() const { return size_; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int neg(int a) const { return neg_[a]; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  bool is_zero_ring() const { return size_ == 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

  bool is_unit(int a) const;

  RawRingTables tables() const;

private:
  friend std::variant<FiniteRing, RingDiagnostic> validate_ring(const RawRingTables&);
  explicit FiniteRing(const RawRingTables& t);

  int size_;
  std::vector<int> add_, mul_, neg_;
  int zero_, one_;
  std::vector<std::string> labels_;
};

std::variant<FiniteRing, RingDiagnostic> validate_ring(const RawRingTables& raw);
FiniteRing require_ring(const RawRingTables& raw);

FiniteRing cyclic_ring(int n);  // Z/n, n >= 1 (n = 1 is the zero ring)
FiniteRing product_ring(const FiniteRing& r, const FiniteRing& s);

struct RingHom {
  std::vector<int> map;  // source element -> target element
  bool operator==(const RingHom&) const = default;
};

bool is_ring_hom(const FiniteRing& r, const FiniteRing& s, const std::vector<int>& map);

// A ring A together with a structure homomorphism from the base ring.
struct Algebra {
  FiniteRing ring;
  RingHom structure;
};

Algebra make_algebra(const FiniteRing& base, FiniteRing ring, std::vector<int> structure);
Algebra self_algebra(const FiniteRing& base);

// base[x] / (x^2 - c1 x - c0) by explicit enumeration of pairs u + v x.
Algebra quadratic_extension(const FiniteRing& base, int c0, int c1);

// Minimal generating set beyond {0, 1} under +, -, *: the images of these
// elements determine any unital homomorphism.
std::vector<int> ring_generators(const FiniteRing& r);

// All unital ring homomorphisms r -> s, ordered lexicographically by their
// tables.  `seed` optionally pins images (-1 = unconstrained); inconsistent
// seeds yield the empty list.
std::vector<RingHom> all_ring_homs(const FiniteRing& r, const FiniteRing& s,
                                   const std::vector<int>& seed = {});

struct Ideal {
  std::vector<int> elements;     // ascending
  std::vector<char> member;      // size |R| indicator
  bool contains(int x) const { return member[x] != 0; }
  int size() const { return static_cast<int>(elements.size()); }
  bool operator==(const Ideal& o) const { return elements == o.elements; }
};

Ideal ideal_generated(const FiniteRing& r, std::span<const int> gens);
std::vector<Ideal> all_ideals(const FiniteRing& r);  // ordered by element list
bool is_unimodular(const FiniteRing& r, std::span<const int> elems);

// Localization at f: the orbit f, f^2, f^3, ... is eventually periodic and
// its cycle contains a unique idempotent e; inverting f is then exactly
// cutting down to the subring eR with unit e.
struct Localization {
  FiniteRing ring;            // eR, reindexed
  RingHom hom;                // R -> eR, r -> er
  int idempotent = 0;         // e as an element of R
  std::vector<int> carrier;   // elements of R forming eR, ascending
};

Localization localize(const FiniteRing& r, int f);

std::vector<FiniteRing> standard_test_family();

// Universal property check: candidate (s, hom) must invert f, and for every
// ring in the family and every hom from R inverting f there must be exactly
// one factoring through the candidate.
bool verify_localization(const FiniteRing& r, int f, const FiniteRing& s,
                         const RingHom& hom, std::span<const FiniteRing> family);

// localize(R, f*g) coincides with e_f e_g R (the pushout of the two
// one-step localizations), as subrings of R over R.
bool localization_product(const FiniteRing& r, int f, int g);

// Homs A -> R commuting with the structure hom (the R-points of A).
std::vector<RingHom> spec_points(const FiniteRing& base, const Algebra& a);

// Diagnostic sizes for the comparison map A -> R^{points}: recorded, not
// asserted, since finite stand-ins need not satisfy any duality.
struct DualityDiagnostic {
  int points = 0;
  long long function_ring_order = 0;
  long long kernel_size = 0;
  long long cokernel_size = 0;
};

DualityDiagnostic duality_comparison(const FiniteRing& base, const Algebra& a);

}  // namespace finsite
