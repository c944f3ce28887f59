#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "finsite/complex.hpp"
#include "finsite/congruence.hpp"
#include "finsite/descent.hpp"
#include "finsite/lattice.hpp"
#include "finsite/module.hpp"
#include "finsite/ring.hpp"
#include "finsite/site.hpp"

namespace finsite {

// All serialization uses ordered JSON with fixed key order, so equal values
// produce byte-identical output.
using json = nlohmann::ordered_json;

json lattice_to_json(const Lattice& l);
RawLatticeTables raw_lattice_from_json(const json& j);
Lattice lattice_from_json(const json& j);

json ring_to_json(const FiniteRing& r);
RawRingTables raw_ring_from_json(const json& j);
FiniteRing ring_from_json(const json& j);

json map_to_json(const FiniteMap& f);
FiniteMap map_from_json(const json& j);

json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

json congruence_to_json(const Lattice& l, const Congruence& c);
json localization_to_json(const Localization& loc);
json flatness_to_json(const FlatnessReport& r);
json cohomology_to_json(const CohomologyReport& r);
json gluing_to_json(const GluingReport& r);
json homology_to_json(const HomologyReport& r);
json cover_verdict_to_json(const CoverVerdict& v);
json sheaf_to_json(const SheafReport& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace finsite
