#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finsite/common.hpp"

namespace finsite {

// A map of finite sets {0..domain-1} -> {0..codomain-1}.
struct FiniteMap {
  int domain = 0;
  int codomain = 0;
  std::vector<int> table;

  int operator()(int x) const { return table[x]; }
};

FiniteMap identity_map(int n);
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);  // g after f
bool is_surjective(const FiniteMap& f);
std::vector<std::vector<int>> fibers(const FiniteMap& f);

// A class of "admissible cardinalities": a map is covering when every fiber
// has admissible cardinality.  Builtins are given by name; custom classes by
// an explicit admissibility table.  Cardinalities beyond the table are
// treated as inadmissible.
struct CardinalityClass {
  std::string name;
  std::vector<bool> admissible;  // admissible[c] for 0 <= c < size

  bool contains(int c) const {
    return c >= 0 && c < static_cast<int>(admissible.size()) && admissible[c];
  }
  int bound() const { return static_cast<int>(admissible.size()) - 1; }
};

// Builtins: "singleton-only" {1}, "nonempty" {1,2,...}, "odd-cardinality"
// {1,3,5,...}, "contains-empty" {0,1,2,...}.  The table extends far enough
// that sums of `bound` admissible values up to `bound` evaluate correctly.
CardinalityClass builtin_cardinality_class(const std::string& name, int bound);
CardinalityClass custom_cardinality_class(std::string name, std::vector<bool> admissible);

// A class presents a topology when 1 is admissible and the class is closed
// under admissible-indexed sums: for every admissible base size b <= bound
// and all fiber sizes c_1..c_b <= bound, each admissible, the total
// c_1 + .. + c_b is admissible again.  Checked exhaustively.
struct PresentationVerdict {
  bool ok = false;
  std::string reason;
  std::vector<int> witness;  // on sum failure: {base, fiber sizes...}
};

PresentationVerdict is_presentation_class(const CardinalityClass& t, int sample_bound);

struct CoverVerdict {
  bool covering = false;
  std::vector<int> fiber_sizes;
  std::optional<int> offending_point;  // codomain point with inadmissible fiber
};

CoverVerdict check_cover(const CardinalityClass& t, const FiniteMap& f);

// Composite g o f with its cover verdict; when both inputs are covers the
// verdict is always positive (fibers compose as admissible-indexed sums).
struct ComposedCover {
  FiniteMap composite;
  CoverVerdict verdict;
};

ComposedCover compose_covers(const CardinalityClass& t, const FiniteMap& g, const FiniteMap& f);

// Pullback of a cover f : Y -> X along any g : Z -> X; carrier is the set of
// pairs (z, y) with g(z) = f(y), ordered by z first then y, and the verdict
// records whether the projection to Z is again covering.
struct PullbackResult {
  std::vector<std::pair<int, int>> carrier;
  FiniteMap to_z;  // projection (z,y) |-> z
  FiniteMap to_y;  // projection (z,y) |-> y
  CoverVerdict verdict;
};

PullbackResult pullback_cover(const CardinalityClass& t, const FiniteMap& f, const FiniteMap& g);

// Sheaf condition for the representable presheaf Hom(-, X) at a cover
// f : A -> B with value set of size x: families A -> X constant on the
// fibers of f, against maps B -> X.  Verified by full enumeration (guarded).
struct SheafReport {
  long long families = 0;   // fiberwise-constant families A -> X
  long long descended = 0;  // distinct compositions u o f for u : B -> X
  long long base_maps = 0;  // |X|^|B|
  bool equalizer = false;   // u |-> u o f bijective onto the families
};

SheafReport set_sheaf_equalizer(const FiniteMap& f, int x, long long bound = 1000000);

// Local choice: given g : D -> C and a surjection f : X -> C, build Z as the
// disjoint union over d of an admissibly-sized part of the fiber of f over
// g(d) (the full fiber when admissible), with the projection p : Z -> D and
// the evaluation h : Z -> X satisfying f o h = g o p, p a cover.
struct LocalChoiceResult {
  std::vector<std::vector<int>> chosen;  // per d, chosen part of fib_f(g(d))
  FiniteMap p;                           // Z -> D
  FiniteMap h;                           // Z -> X
  bool commutes = false;                 // f o h == g o p
  CoverVerdict p_verdict;                // p as a cover
  bool ok = false;
};

LocalChoiceResult local_choice(const CardinalityClass& t, const FiniteMap& g, const FiniteMap& f);

// Finite choice sanity oracle: every surjection onto a set of size x with
// domain size at most `bound` splits.  Enumerates all such surjections.
struct ProjectivityReport {
  int x = 0;
  int bound = 0;
  long long surjections_checked = 0;
  bool all_split = false;
};

ProjectivityReport verify_projectivity(int x, int bound);

}  // namespace finsite
