#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "finsite/common.hpp"

namespace finsite {

// Raw operation tables prior to validation.  `meet` and `join` are row-major
// size x size tables of element indices.
struct RawLatticeTables {
  int size = 0;
  std::vector<int> meet;
  std::vector<int> join;
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;  // optional; padded with "" when short
};

enum class LatticeDefect { not_a_lattice, bounds_mismatch, non_distributive };

struct LatticeDiagnostic {
  LatticeDefect kind;
  std::string axiom;        // which law failed, e.g. "commutativity(meet)"
  std::vector<int> witness; // elements violating it, in evaluation order
};

// A validated bounded distributive lattice.  Instances only exist after the
// full axiom scan has passed: construct through validate_lattice or one of
// the builders below.
class Lattice {
public:
  int size() const { return size_; }
  int meet(int a, int b) const { return meet_[a * size_ + b]; }
  int join(int a, int b) const { return join_[a * size_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

  RawLatticeTables tables() const;

private:
  friend std::variant<Lattice, LatticeDiagnostic> validate_lattice(const RawLatticeTables&);
  explicit Lattice(const RawLatticeTables& t);

  int size_;
  std::vector<int> meet_, join_;
  int bottom_, top_;
  std::vector<std::string> labels_;
};

// Full axiom scan in a fixed order: table shape, commutativity, idempotence,
// associativity, absorption, bounds, distributivity.  Returns the lattice or
// the first violated axiom with its witness.
std::variant<Lattice, LatticeDiagnostic> validate_lattice(const RawLatticeTables& raw);

// validate_lattice that throws Error (not_a_lattice / bounds_mismatch /
// non_distributive) instead of returning the diagnostic.
Lattice require_lattice(const RawLatticeTables& raw);

// Free bounded distributive lattice on n generators, realized as the closure
// of the generator projections under pointwise meet/join of monotone Boolean
// functions.  Elements are ordered by truth table, most significant bit the
// all-generators-true input, so bottom is element 0 and top the last.
// Sizes: 2, 3, 6, 20, 168 for n = 0..4; n > 4 throws too_many_generators.
Lattice free_distributive_lattice(int n);

// Index of generator g_i (0-based) in free_distributive_lattice(n).
int free_lattice_generator(const Lattice& fd, int n, int i);

Lattice chain_lattice(int n);        // total order 0 < 1 < ... < n-1
Lattice boolean_cube(int k);         // subsets of {1..k}
RawLatticeTables diamond_m3_tables();  // modular, non-distributive; fails validation

// The unique complement of a when it exists (distributivity makes it
// unique); nullopt otherwise.
std::optional<int> complement_of(const Lattice& l, int a);

}  // namespace finsite
