#pragma once

#include <cstdint>

#include "finsite/report.hpp"

namespace finsite::suites {

// Named check batteries backing the command line sweeps.  Every function is
// deterministic: randomized batteries take their seed explicitly, and all
// bounds are fixed so two runs with equal arguments produce equal reports.

RunReport lattice_free();                        // lattice free
RunReport lattice_congruence();                  // lattice congruence
RunReport lattice_simplicial(int max_gens = 3);  // lattice simplicial-check
RunReport lattice_chain();                       // lattice chain

RunReport ring_localize();     // ring localize
RunReport ring_spec_points();  // ring spec
RunReport ring_flat();         // ring flat
RunReport ring_descent();      // ring h1
RunReport ring_glue();         // ring glue

RunReport site_presentation();                   // site presentation
RunReport site_cover(std::uint64_t seed);        // site check-cover
RunReport site_sheaf(std::uint64_t seed);        // site sheaf
RunReport site_local_choice(std::uint64_t seed); // site local-choice
RunReport site_projective();                     // site projective

RunReport join_homology();                    // join homology
RunReport join_stabilize();                   // join stabilize
RunReport join_fibers(std::uint64_t seed);    // join fibers

// Aggregate of every suite above under one namespaced report.
RunReport all_suites(std::uint64_t seed);

}  // namespace finsite::suites
