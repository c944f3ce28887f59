#include "finsite/json_io.hpp"

#include <fstream>

#include "finsite/common.hpp"

namespace finsite {

namespace {

json table_to_rows(const std::vector<int>& flat, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(flat[static_cast<std::size_t>(i) * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> rows_to_table(const json& rows, int n, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    fail(errc::shape_mismatch, std::string(what) + " must have one row per element");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(errc::shape_mismatch, std::string(what) + " must be square");
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(errc::bad_input, std::string(what) + " entries must be integers");
      flat.push_back(v.get<int>());
    }
  }
  return flat;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    fail(errc::bad_input, std::string("missing integer field: ") + key);
  return j.at(key).get<int>();
}

std::vector<std::string> get_labels(const json& j, int n) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& arr = j.at("labels");
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
      fail(errc::shape_mismatch, "labels must list one name per element");
    for (const auto& v : arr) labels.push_back(v.get<std::string>());
  } else {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return labels;
}

}  // namespace

json lattice_to_json(const Lattice& l) {
  json j;
  j["size"] = l.size();
  j["meet"] = table_to_rows(l.tables().meet, l.size());
  j["join"] = table_to_rows(l.tables().join, l.size());
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  j["labels"] = l.labels();
  return j;
}

RawLatticeTables raw_lattice_from_json(const json& j) {
  RawLatticeTables t;
  t.size = get_int(j, "size");
  if (t.size <= 0) fail(errc::bad_input, "size must be positive");
  t.meet = rows_to_table(j.contains("meet") ? j.at("meet") : json(), t.size, "meet table");
  t.join = rows_to_table(j.contains("join") ? j.at("join") : json(), t.size, "join table");
  t.bottom = get_int(j, "bottom");
  t.top = get_int(j, "top");
  t.labels = get_labels(j, t.size);
  return t;
}

Lattice lattice_from_json(const json& j) { return require_lattice(raw_lattice_from_json(j)); }

json ring_to_json(const FiniteRing& r) {
  json j;
  j["size"] = r.size();
  j["add"] = table_to_rows(r.tables().add, r.size());
  j["mul"] = table_to_rows(r.tables().mul, r.size());
  j["neg"] = r.tables().neg;
  j["zero"] = r.zero();
  j["one"] = r.one();
  j["labels"] = r.labels();
  return j;
}

RawRingTables raw_ring_from_json(const json& j) {
  RawRingTables t;
  t.size = get_int(j, "size");
  if (t.size <= 0) fail(errc::bad_input, "size must be positive");
  t.add = rows_to_table(j.contains("add") ? j.at("add") : json(), t.size, "addition table");
  t.mul = rows_to_table(j.contains("mul") ? j.at("mul") : json(), t.size, "multiplication table");
  if (!j.contains("neg") || !j.at("neg").is_array() ||
      static_cast<int>(j.at("neg").size()) != t.size)
    fail(errc::shape_mismatch, "neg must list one value per element");
  for (const auto& v : j.at("neg")) {
    if (!v.is_number_integer()) fail(errc::bad_input, "neg entries must be integers");
    t.neg.push_back(v.get<int>());
  }
  t.zero = get_int(j, "zero");
  t.one = get_int(j, "one");
  t.labels = get_labels(j, t.size);
  return t;
}

FiniteRing ring_from_json(const json& j) { return require_ring(raw_ring_from_json(j)); }

json map_to_json(const FiniteMap& f) {
  json j;
  j["domain"] = f.domain;
  j["codomain"] = f.codomain;
  j["table"] = f.table;
  return j;
}

FiniteMap map_from_json(const json& j) {
  FiniteMap f;
  f.domain = get_int(j, "domain");
  f.codomain = get_int(j, "codomain");
  if (f.domain < 0 || f.codomain < 0) fail(errc::bad_input, "sizes must be nonnegative");
  if (!j.contains("table") || !j.at("table").is_array() ||
      static_cast<int>(j.at("table").size()) != f.domain)
    fail(errc::shape_mismatch, "table must list one value per domain element");
  for (const auto& v : j.at("table")) {
    const int y = v.get<int>();
    if (y < 0 || y >= f.codomain) fail(errc::bad_input, "table value out of range");
    f.table.push_back(y);
  }
  return f;
}

json complex_to_json(const SimplicialComplex& c) {
  json j;
  j["vertices"] = c.vertices();
  j["facets"] = c.facets();
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  const int vertices = get_int(j, "vertices");
  if (!j.contains("facets") || !j.at("facets").is_array())
    fail(errc::bad_input, "missing facet list");
  std::vector<std::vector<int>> facets;
  for (const auto& f : j.at("facets")) {
    if (!f.is_array()) fail(errc::bad_input, "each facet must be a list of vertices");
    facets.push_back(f.get<std::vector<int>>());
  }
  return SimplicialComplex::from_facets(vertices, std::move(facets));
}

json congruence_to_json(const Lattice& l, const Congruence& c) {
  json j;
  j["lattice"] = lattice_to_json(l);
  json classes = json::array();
  for (int k = 0; k < c.num_classes; ++k) {
    json cls = json::array();
    for (int x = 0; x < l.size(); ++x)
      if (c.class_of[x] == k) cls.push_back(x);
    classes.push_back(std::move(cls));
  }
  j["classes"] = classes;
  return j;
}

json localization_to_json(const Localization& loc) {
  json j;
  j["idempotent"] = loc.idempotent;
  j["carrier"] = loc.carrier;
  j["hom"] = loc.hom.map;
  j["ring"] = ring_to_json(loc.ring);
  return j;
}

json flatness_to_json(const FlatnessReport& r) {
  json j;
  j["flat"] = r.flat;
  j["faithfully_flat"] = r.faithfully_flat;
  j["flatness_witness"] = r.flatness_witness ? json(*r.flatness_witness) : json(nullptr);
  j["faithfulness_witness"] =
      r.faithfulness_witness ? json(*r.faithfulness_witness) : json(nullptr);
  return j;
}

json cohomology_to_json(const CohomologyReport& r) {
  json j;
  j["h0"] = r.h0;
  j["h1"] = r.h1;
  j["exact"] = r.exact;
  j["witnesses"] = r.witnesses;
  return j;
}

json gluing_to_json(const GluingReport& r) {
  json j;
  j["ring_order"] = r.ring_order;
  j["equalizer_order"] = r.equalizer_order;
  j["isomorphism"] = r.isomorphism;
  return j;
}

json homology_to_json(const HomologyReport& r) {
  json j;
  j["dimension"] = r.dimension;
  json betti = json::array();
  json torsion = json::array();
  for (std::size_t i = 0; i < r.betti.size(); ++i) {
    json entry;
    entry["degree"] = static_cast<int>(i) - 1;
    entry["rank"] = r.betti[i];
    betti.push_back(std::move(entry));
    torsion.push_back(r.torsion[i]);
  }
  j["betti"] = betti;
  j["torsion"] = torsion;
  return j;
}

json cover_verdict_to_json(const CoverVerdict& v) {
  json j;
  j["covering"] = v.covering;
  j["fiber_sizes"] = v.fiber_sizes;
  j["offending_point"] = v.offending_point ? json(*v.offending_point) : json(nullptr);
  return j;
}

json sheaf_to_json(const SheafReport& r) {
  json j;
  j["families"] = r.families;
  j["descended"] = r.descended;
  j["base_maps"] = r.base_maps;
  j["equalizer"] = r.equalizer;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::bad_input, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::bad_input, "cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace finsite
