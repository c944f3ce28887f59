#pragma once

#include <span>
#include <utility>
#include <vector>

#include "finsite/lattice.hpp"

namespace finsite {

// A lattice congruence as a normalized partition: class ids are assigned by
// ascending minimum representative, so equal congruences have equal fields.
struct Congruence {
  int num_classes = 0;
  std::vector<int> class_of;        // element -> class id
  std::vector<int> representatives; // class id -> minimum element

  bool related(int a, int b) const { return class_of[a] == class_of[b]; }
  bool operator==(const Congruence&) const = default;
};

// Least congruence relating every pair in `pairs`: union-find seeded with
// the pairs, then closed under meet/join compatibility with every element.
Congruence congruence_closure(const Lattice& l, std::span<const std::pair<int, int>> pairs);

// Congruence (a = b): generated by the single pair.
Congruence pair_congruence(const Lattice& l, int a, int b);

// Congruence (a <= b): generated by (a v b, b), i.e. forcing a below b.
Congruence order_congruence(const Lattice& l, int a, int b);

// Whether `class_of` describes a partition compatible with meet and join.
bool is_congruence(const Lattice& l, const std::vector<int>& class_of);

struct Quotient {
  Lattice lattice;
  std::vector<int> projection;  // element -> quotient element
};

// Quotient lattice with classes ordered by minimum representative; the
// projection is the canonical surjective lattice homomorphism.
Quotient quotient(const Lattice& l, const Congruence& theta);

// Principal congruence membership by bare meets and joins: for a <= b,
// x = y mod (a = b) iff x ^ a = y ^ a and x v b = y v b.  Throws
// precondition_violated unless a <= b.
bool gratzer_criterion(const Lattice& l, int a, int b, int x, int y);

// (a = b) equals (a ^ b = a v b) as congruences.
bool principal_eq_meet_join(const Lattice& l, int a, int b);

// Quotient by (a = b) collapses to a point iff a and b are complements.
bool is_zero_quotient(const Lattice& l, int a, int b);

}  // namespace finsite
