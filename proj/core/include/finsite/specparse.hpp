#pragma once

#include <string>
#include <vector>

#include "finsite/module.hpp"
#include "finsite/ring.hpp"

namespace finsite {

// Ring spec mini-language:
//   Z/n                 cyclic ring of order n
//   prod(S1, S2, ...)   product of ring specs (left-associated)
//   table:<path.json>   explicit tables, validated on load
FiniteRing parse_ring_spec(const std::string& spec);

// Algebra spec (structure maps into a ring over `base`):
//   self                the base ring over itself
//   quad:c0,c1          base[x]/(x^2 - c1*x - c0)
//   file:<path.json>    JSON { "ring": {...}, "structure": [...] }
//   any ring spec       target ring with its unique structure map; it is an
//                       error if no or several ring maps base -> target exist
Algebra parse_algebra_spec(const FiniteRing& base, const std::string& spec);

// Module spec over `base`:
//   self | ring-as-module      the ring as a module over itself
//   Z/n-with-action:<path>     carrier Z/n; JSON { "action": [[...]] } with
//                              one row per ring element
//   quotient:<g>               the cyclic module base/(g)
//   ideal:<g>                  the ideal (g) as a module
//   any algebra spec           the algebra as a module via its structure map
FiniteModule parse_module_spec(const FiniteRing& base, const std::string& spec);

// Comma-separated integer list, e.g. "3,4" -> {3, 4}.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace finsite
