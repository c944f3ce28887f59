// finsite: command-line front end for the finite-model workbench.
//
// Grammar:
//   finsite lattice {free|validate|congruence|simplicial-check|chain}
//   finsite ring    {localize|spec|flat|h1|glue}
//   finsite site    {presentation|check-cover|sheaf|local-choice|projective}
//   finsite join    {build|homology|stabilize|fibers}
//   finsite suite   all
//
// Global flags: --format json|text, --seed N, --bound N, --out PATH.
// Every leaf command accepts --sweep to run its full check battery instead
// of a single instance.  Exit codes: 0 all verdicts pass, 1 a verdict
// failed, 2 input or usage errors.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "finsite/common.hpp"
#include "finsite/complex.hpp"
#include "finsite/congruence.hpp"
#include "finsite/descent.hpp"
#include "finsite/json_io.hpp"
#include "finsite/lattice.hpp"
#include "finsite/module.hpp"
#include "finsite/report.hpp"
#include "finsite/ring.hpp"
#include "finsite/simplicial.hpp"
#include "finsite/site.hpp"
#include "finsite/specparse.hpp"
#include "finsite/suites.hpp"

namespace {

using finsite::json;
using finsite::RunReport;

constexpr std::uint64_t kDefaultSeed = 20240817ULL;

struct Options {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  long long bound = 0;  // 0 = per-command default
  std::string out;
};

long long bound_or(const Options& o, long long fallback) {
  return o.bound > 0 ? o.bound : fallback;
}

void require_opt(const std::string& value, const char* flag) {
  if (value.empty())
    finsite::fail(finsite::errc::bad_input,
                  std::string(flag) + " is required (or pass --sweep for the batch battery)");
}

// Writes the payload to --out when given, stdout otherwise.
void deliver(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) finsite::fail(finsite::errc::bad_input, "cannot open output file " + o.out);
  f << text;
}

// Single-instance result: a domain JSON object plus a human rendering.
int emit(const Options& o, const json& payload, const std::string& text, bool pass) {
  deliver(o, o.format == "json" ? payload.dump(2) + "\n" : text);
  return pass ? 0 : 1;
}

int emit_report(const Options& o, const RunReport& r, double seconds) {
  deliver(o, o.format == "json" ? r.to_json().dump(2) + "\n" : r.to_text(seconds));
  return r.ok() ? 0 : 1;
}

int run_sweep(const Options& o, const std::function<RunReport()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport r = fn();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return emit_report(o, r, secs);
}

// Lattice spec: free:N builds the free bounded distributive lattice on N
// generators; anything else is a path to a lattice JSON file.
finsite::Lattice parse_lattice_spec(const std::string& spec) {
  if (spec.rfind("free:", 0) == 0) {
    const int n = std::stoi(spec.substr(5));
    return finsite::free_distributive_lattice(n);
  }
  return finsite::lattice_from_json(finsite::load_json_file(spec));
}

finsite::FiniteMap load_map(const std::string& path) {
  return finsite::map_from_json(finsite::load_json_file(path));
}

finsite::SimplicialComplex load_complex(const std::string& path) {
  return finsite::complex_from_json(finsite::load_json_file(path));
}

// Resolves an element token within a lattice: a label match first, then a
// plain index.
int lattice_element(const finsite::Lattice& l, const std::string& token) {
  for (int x = 0; x < l.size(); ++x)
    if (l.label(x) == token) return x;
  try {
    const int x = std::stoi(token);
    if (x >= 0 && x < l.size()) return x;
  } catch (const std::exception&) {
  }
  finsite::fail(finsite::errc::bad_input,
                "no lattice element named '" + token + "' (use a label or an index)");
}

// Relation list "a<=b;c=d" over labels or indices.
std::vector<std::pair<int, int>> parse_relations(const finsite::Lattice& l,
                                                 const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto le = item.find("<=");
    const auto eq = item.find('=');
    if (le != std::string::npos) {
      const int a = lattice_element(l, item.substr(0, le));
      const int b = lattice_element(l, item.substr(le + 2));
      pairs.emplace_back(l.join(a, b), b);  // force a <= b
    } else if (eq != std::string::npos) {
      const int a = lattice_element(l, item.substr(0, eq));
      const int b = lattice_element(l, item.substr(eq + 1));
      pairs.emplace_back(a, b);
    } else {
      finsite::fail(finsite::errc::bad_input,
                    "relation '" + item + "' must use '=' or '<='");
    }
  }
  return pairs;
}

// Presentation name resolution: exact builtin name, or a unique substring of
// one ("odd" -> "odd-cardinality").
finsite::CardinalityClass resolve_presentation(const std::string& name, int bound) {
  static const std::vector<std::string> builtins = {
      "singleton-only", "nonempty", "odd-cardinality", "contains-empty"};
  for (const auto& b : builtins)
    if (b == name) return finsite::builtin_cardinality_class(b, bound);
  std::vector<std::string> hits;
  for (const auto& b : builtins)
    if (b.find(name) != std::string::npos) hits.push_back(b);
  if (hits.size() == 1) return finsite::builtin_cardinality_class(hits[0], bound);
  finsite::fail(finsite::errc::bad_input,
                "unknown presentation '" + name +
                    "' (builtins: singleton-only, nonempty, odd-cardinality, contains-empty)");
}

bool is_total_order(const finsite::Lattice& l) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (!l.leq(a, b) && !l.leq(b, a)) return false;
  return true;
}

json equalizer_to_json(const finsite::EqualizerReport& r) {
  json j;
  j["lattice"] = r.lattice_name;
  j["i"] = r.i;
  j["j"] = r.j;
  j["size_leq"] = r.size_leq;
  j["size_geq"] = r.size_geq;
  j["size_eq"] = r.size_eq;
  j["equalizer"] = r.equalizer_size;
  j["bijective"] = r.bijective;
  j["amalgam_ok"] = r.amalgam_ok;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

// ---------------------------------------------------------------------------
// lattice
// ---------------------------------------------------------------------------

int cmd_lattice_free(const Options& o, int gens) {
  const finsite::Lattice l = finsite::free_distributive_lattice(gens);
  std::ostringstream text;
  text << "free bounded distributive lattice on " << gens << " generators: " << l.size()
       << " elements\n";
  return emit(o, finsite::lattice_to_json(l), text.str(), true);
}

int cmd_lattice_validate(const Options& o, const std::string& path) {
  require_opt(path, "--lattice");
  const finsite::RawLatticeTables raw =
      finsite::raw_lattice_from_json(finsite::load_json_file(path));
  auto v = finsite::validate_lattice(raw);
  if (const auto* l = std::get_if<finsite::Lattice>(&v)) {
    json j;
    j["valid"] = true;
    j["size"] = l->size();
    std::ostringstream text;
    text << "valid bounded distributive lattice with " << l->size() << " elements\n";
    return emit(o, j, text.str(), true);
  }
  const auto& d = std::get<finsite::LatticeDiagnostic>(v);
  json j;
  j["valid"] = false;
  j["axiom"] = d.axiom;
  j["witness"] = d.witness;
  std::ostringstream text;
  text << "invalid: " << d.axiom << " fails at witness [";
  for (std::size_t i = 0; i < d.witness.size(); ++i)
    text << (i ? ", " : "") << d.witness[i];
  text << "]\n";
  return emit(o, j, text.str(), false);
}

int cmd_lattice_congruence(const Options& o, const std::string& spec,
                           const std::string& relations) {
  const finsite::Lattice l = parse_lattice_spec(spec);
  const auto pairs = parse_relations(l, relations);
  const finsite::Congruence c = finsite::congruence_closure(l, pairs);
  const finsite::Quotient q = finsite::quotient(l, c);
  json j = finsite::congruence_to_json(l, c);
  j["quotient"] = finsite::lattice_to_json(q.lattice);
  j["projection"] = q.projection;
  std::ostringstream text;
  text << "congruence with " << c.num_classes << " classes; quotient has "
       << q.lattice.size() << " elements\n";
  return emit(o, j, text.str(), true);
}

int cmd_lattice_simplicial(const Options& o, int gens, const std::string& pair_arg) {
  const long long size_cap = bound_or(o, 20);
  const finsite::Lattice l = finsite::free_distributive_lattice(gens);
  if (l.size() > size_cap)
    finsite::fail(finsite::errc::bad_input,
                  "lattice of size " + std::to_string(l.size()) +
                      " exceeds the sweep bound; raise --bound to allow it");
  const std::string name = "FD(" + std::to_string(gens) + ")";

  std::vector<std::pair<int, int>> pairs;
  if (!pair_arg.empty()) {
    const auto ij = finsite::parse_int_list(pair_arg);
    if (ij.size() != 2 || ij[0] < 0 || ij[0] >= l.size() || ij[1] < 0 || ij[1] >= l.size())
      finsite::fail(finsite::errc::bad_input, "--pair wants two element indices i,j");
    pairs.emplace_back(ij[0], ij[1]);
  } else {
    for (int i = 0; i < l.size(); ++i)
      for (int jx = 0; jx < l.size(); ++jx) pairs.emplace_back(i, jx);
  }

  std::ostringstream outjson, outtext;
  long long bijective = 0, amalgam_ok = 0;
  for (auto [i, jx] : pairs) {
    const finsite::EqualizerReport r = finsite::check_simplicial_equalizer(l, i, jx, name);
    bijective += r.bijective ? 1 : 0;
    amalgam_ok += r.amalgam_ok ? 1 : 0;
    outjson << equalizer_to_json(r).dump() << "\n";
    if (!r.bijective || !r.amalgam_ok)
      outtext << "FAIL pair (" << i << ", " << jx << ")\n";
  }
  const bool all_ok = bijective == static_cast<long long>(pairs.size()) &&
                      amalgam_ok == static_cast<long long>(pairs.size());
  json summary;
  summary["summary"] = true;
  summary["lattice"] = name;
  summary["pairs"] = static_cast<long long>(pairs.size());
  summary["bijective"] = bijective;
  summary["amalgam_ok"] = amalgam_ok;
  summary["all_ok"] = all_ok;
  outjson << summary.dump() << "\n";
  outtext << name << ": " << pairs.size() << " pairs, " << bijective << " bijective, "
          << amalgam_ok << " amalgam-verified -> " << (all_ok ? "PASS" : "FAIL") << "\n";
  deliver(o, o.format == "json" ? outjson.str() : outtext.str());
  return all_ok ? 0 : 1;
}

int cmd_lattice_chain(const Options& o, int gens, const std::string& signs_arg) {
  const finsite::Lattice l = finsite::free_distributive_lattice(gens);
  std::vector<std::pair<int, int>> constraints;
  for (int i = 0; i + 1 < gens; ++i)
    constraints.emplace_back(finsite::free_lattice_generator(l, gens, i),
                             finsite::free_lattice_generator(l, gens, i + 1));
  std::vector<int> signs(constraints.size(), 1);
  if (!signs_arg.empty()) {
    const auto parsed = finsite::parse_int_list(signs_arg);
    if (parsed.size() != constraints.size())
      finsite::fail(finsite::errc::bad_input,
                    "expected " + std::to_string(constraints.size()) + " signs");
    for (int s : parsed)
      if (s != 1 && s != -1) finsite::fail(finsite::errc::bad_input, "signs must be 1 or -1");
    signs = parsed;
  }
  const finsite::Quotient q = finsite::chain_quotients(l, constraints, signs);
  json j;
  j["gens"] = gens;
  j["signs"] = signs;
  j["classes"] = q.lattice.size();
  j["is_chain"] = is_total_order(q.lattice);
  j["quotient"] = finsite::lattice_to_json(q.lattice);
  j["projection"] = q.projection;
  std::ostringstream text;
  text << "signed chain quotient of the free lattice on " << gens << " generators: "
       << q.lattice.size() << " classes" << (is_total_order(q.lattice) ? " (a chain)" : "")
       << "\n";
  return emit(o, j, text.str(), true);
}

// ---------------------------------------------------------------------------
// ring
// ---------------------------------------------------------------------------

int cmd_ring_localize(const Options& o, const std::string& ring_spec, int at) {
  const finsite::FiniteRing r = finsite::parse_ring_spec(ring_spec);
  const finsite::Localization loc = finsite::localize(r, at);
  const auto family = finsite::standard_test_family();
  const bool verified = finsite::verify_localization(r, at, loc.ring, loc.hom, family);
  json j = finsite::localization_to_json(loc);
  j["verified"] = verified;
  std::ostringstream text;
  text << "localization at " << at << ": idempotent " << loc.idempotent << ", carrier size "
       << loc.carrier.size() << ", universal property "
       << (verified ? "verified" : "FAILED") << "\n";
  return emit(o, j, text.str(), verified);
}

int cmd_ring_spec_points(const Options& o, const std::string& ring_spec,
                         const std::string& algebra_spec) {
  const finsite::FiniteRing r = finsite::parse_ring_spec(ring_spec);
  const finsite::Algebra a = finsite::parse_algebra_spec(r, algebra_spec);
  const auto points = finsite::spec_points(r, a);
  const finsite::DualityDiagnostic d = finsite::duality_comparison(r, a);
  json j;
  j["points"] = static_cast<int>(points.size());
  json homs = json::array();
  for (const auto& h : points) homs.push_back(h.map);
  j["homs"] = homs;
  json dual;
  dual["points"] = d.points;
  dual["function_ring_order"] = d.function_ring_order;
  dual["kernel_size"] = d.kernel_size;
  dual["cokernel_size"] = d.cokernel_size;
  j["duality"] = dual;
  std::ostringstream text;
  text << points.size() << " algebra points; comparison map kernel " << d.kernel_size
       << ", cokernel " << d.cokernel_size << "\n";
  return emit(o, j, text.str(), true);
}

int cmd_ring_flat(const Options& o, const std::string& ring_spec,
                  const std::string& algebra_spec) {
  const finsite::FiniteRing r = finsite::parse_ring_spec(ring_spec);
  const finsite::Algebra a = finsite::parse_algebra_spec(r, algebra_spec);
  const finsite::FlatnessReport rep = finsite::flatness_report(r, a);
  std::ostringstream text;
  text << (rep.flat ? (rep.faithfully_flat ? "faithfully flat" : "flat, not faithfully flat")
                    : "not flat")
       << "\n";
  return emit(o, flatness_to_json(rep), text.str(), true);
}

int cmd_ring_h1(const Options& o, const std::string& ring_spec, const std::string& module_spec,
                const std::string& cover_arg, bool corrupt, bool enumerative) {
  const finsite::FiniteRing r = finsite::parse_ring_spec(ring_spec);
  const finsite::FiniteModule m = finsite::parse_module_spec(r, module_spec);
  const std::vector<int> cover = finsite::parse_int_list(cover_arg);
  if (corrupt) {
    const long long h1 = finsite::corrupted_h1(r, m, cover);
    json j;
    j["h1_corrupted"] = h1;
    std::ostringstream text;
    text << "broken complex (d0 := 0) has |ker d1| = " << h1 << "\n";
    return emit(o, j, text.str(), true);
  }
  const finsite::CohomologyReport rep =
      enumerative ? finsite::cech_cohomology_enumerative(r, m, cover, bound_or(o, 2000000))
                  : finsite::cech_cohomology(r, m, cover);
  std::ostringstream text;
  text << "h0 = " << rep.h0 << ", h1 = " << rep.h1 << ", exact: " << (rep.exact ? "yes" : "no")
       << ", descent isomorphism: " << (rep.descent_isomorphism ? "yes" : "no") << "\n";
  return emit(o, finsite::cohomology_to_json(rep), text.str(),
              rep.exact && rep.descent_isomorphism);
}

int cmd_ring_glue(const Options& o, const std::string& ring_spec, const std::string& cover_arg) {
  const finsite::FiniteRing r = finsite::parse_ring_spec(ring_spec);
  const finsite::GluingReport rep =
      finsite::ring_gluing_equalizer(r, finsite::parse_int_list(cover_arg));
  std::ostringstream text;
  text << "ring order " << rep.ring_order << ", glued sections " << rep.equalizer_order << " -> "
       << (rep.isomorphism ? "isomorphism" : "NOT an isomorphism") << "\n";
  return emit(o, finsite::gluing_to_json(rep), text.str(), rep.isomorphism);
}

// ---------------------------------------------------------------------------
// site
// ---------------------------------------------------------------------------

int cmd_site_presentation(const Options& o, const std::string& name, const std::string& sizes) {
  const int bound = static_cast<int>(bound_or(o, 8));
  finsite::CardinalityClass t =
      sizes.empty() ? resolve_presentation(name, bound)
                    : [&] {
                        std::vector<bool> adm(static_cast<std::size_t>(bound) + 1, false);
                        for (int c : finsite::parse_int_list(sizes)) {
                          if (c < 0 || c > bound)
                            finsite::fail(finsite::errc::bad_input,
                                          "admissible size out of range 0..bound");
                          adm[static_cast<std::size_t>(c)] = true;
                        }
                        return finsite::custom_cardinality_class("custom", std::move(adm));
                      }();
  const finsite::PresentationVerdict v = finsite::is_presentation_class(t, bound);
  json j;
  j["name"] = t.name;
  j["bound"] = bound;
  j["ok"] = v.ok;
  j["reason"] = v.reason;
  j["witness"] = v.witness;
  std::ostringstream text;
  text << t.name << ": " << (v.ok ? "presents a topology" : "NOT a topology presentation");
  if (!v.ok) text << " (" << v.reason << ")";
  text << "\n";
  return emit(o, j, text.str(), v.ok);
}

int cmd_site_check_cover(const Options& o, const std::string& map_path,
                         const std::string& name) {
  require_opt(map_path, "--map");
  const finsite::FiniteMap f = load_map(map_path);
  const int bound = static_cast<int>(bound_or(o, std::max(8, f.domain)));
  const finsite::CardinalityClass t = resolve_presentation(name, bound);
  const finsite::CoverVerdict v = finsite::check_cover(t, f);
  json j = finsite::cover_verdict_to_json(v);
  j["presentation"] = t.name;
  std::ostringstream text;
  text << "map " << f.domain << " -> " << f.codomain << " is "
       << (v.covering ? "" : "NOT ") << "a cover for " << t.name;
  if (v.offending_point) text << " (offending point " << *v.offending_point << ")";
  text << "\n";
  return emit(o, j, text.str(), v.covering);
}

int cmd_site_sheaf(const Options& o, const std::string& map_path, int values) {
  require_opt(map_path, "--map");
  const finsite::FiniteMap f = load_map(map_path);
  const finsite::SheafReport rep =
      finsite::set_sheaf_equalizer(f, values, bound_or(o, 1000000));
  std::ostringstream text;
  text << rep.families << " compatible families, " << rep.descended
       << " descended maps out of " << rep.base_maps << " -> "
       << (rep.equalizer ? "equalizer holds" : "equalizer FAILS") << "\n";
  return emit(o, finsite::sheaf_to_json(rep), text.str(), rep.equalizer);
}

int cmd_site_local_choice(const Options& o, const std::string& map_path,
                          const std::string& surjection_path, const std::string& name) {
  require_opt(map_path, "--map");
  require_opt(surjection_path, "--surjection");
  const finsite::FiniteMap g = load_map(map_path);
  const finsite::FiniteMap f = load_map(surjection_path);
  const int bound = static_cast<int>(bound_or(o, std::max({8, f.domain, g.domain})));
  const finsite::CardinalityClass t = resolve_presentation(name, bound);
  const finsite::LocalChoiceResult res = finsite::local_choice(t, g, f);
  json j;
  j["z"] = res.p.domain;
  j["chosen"] = res.chosen;
  j["p"] = finsite::map_to_json(res.p);
  j["h"] = finsite::map_to_json(res.h);
  j["commutes"] = res.commutes;
  j["p_cover"] = finsite::cover_verdict_to_json(res.p_verdict);
  j["ok"] = res.ok;
  std::ostringstream text;
  text << "local lift through a cover of size " << res.p.domain << ": square "
       << (res.commutes ? "commutes" : "DOES NOT commute") << ", projection "
       << (res.p_verdict.covering ? "covers" : "does NOT cover") << "\n";
  return emit(o, j, text.str(), res.ok);
}

int cmd_site_projective(const Options& o, int size) {
  const int bound = static_cast<int>(bound_or(o, size + 3));
  const finsite::ProjectivityReport rep = finsite::verify_projectivity(size, bound);
  json j;
  j["x"] = rep.x;
  j["bound"] = rep.bound;
  j["surjections_checked"] = rep.surjections_checked;
  j["all_split"] = rep.all_split;
  std::ostringstream text;
  text << rep.surjections_checked << " surjections onto a " << size
       << "-point set (domains up to " << bound << "): "
       << (rep.all_split ? "all split" : "one FAILED to split") << "\n";
  return emit(o, j, text.str(), rep.all_split);
}

// ---------------------------------------------------------------------------
// join
// ---------------------------------------------------------------------------

int cmd_join_build(const Options& o, const std::vector<std::string>& paths, int power) {
  if (paths.empty()) finsite::fail(finsite::errc::bad_input, "--complex is required");
  finsite::SimplicialComplex acc = load_complex(paths.front());
  for (std::size_t i = 1; i < paths.size(); ++i)
    acc = finsite::join(acc, load_complex(paths[i]));
  if (power > 1) acc = finsite::iterated_join(acc, power);
  std::ostringstream text;
  text << "join complex: " << acc.vertices() << " vertices, " << acc.facets().size()
       << " facets, dimension " << acc.dimension() << "\n";
  return emit(o, finsite::complex_to_json(acc), text.str(), true);
}

int cmd_join_homology(const Options& o, const std::string& path, int power) {
  require_opt(path, "--complex");
  finsite::SimplicialComplex c = load_complex(path);
  if (power > 1) c = finsite::iterated_join(c, power);
  const finsite::HomologyReport h = finsite::homology(c, bound_or(o, 200000));
  json j = finsite::homology_to_json(h);
  j["connectivity"] = finsite::homological_connectivity(h);
  j["reduced_euler"] = finsite::reduced_euler_characteristic(c);
  std::ostringstream text;
  text << "dimension " << h.dimension << "; reduced Betti numbers (from degree -1):";
  for (long long b : h.betti) text << " " << b;
  text << "; connectivity " << finsite::homological_connectivity(h) << "\n";
  return emit(o, j, text.str(), true);
}

int cmd_join_stabilize(const Options& o, int points, int values, bool dependent) {
  if (dependent) {
    if (points > 3)
      finsite::fail(finsite::errc::bad_input,
                    "the dependent-family experiment enumerates families over the "
                    "3-fold join and is capped at 3 points");
    const finsite::DependentFamilyReport rep = finsite::dependent_family_check(points, values);
    json j;
    j["families_scanned"] = rep.families_scanned;
    j["locally_constant"] = rep.locally_constant;
    j["globally_constant"] = rep.globally_constant;
    j["determined_by_truncation"] = rep.determined_by_truncation;
    std::ostringstream text;
    text << rep.families_scanned << " dependent families scanned; locally constant "
         << rep.locally_constant << ", globally constant " << rep.globally_constant << " -> "
         << (rep.determined_by_truncation ? "PASS" : "FAIL") << "\n";
    return emit(o, j, text.str(), rep.determined_by_truncation);
  }
  const finsite::StabilizationReport rep = finsite::truncation_stabilization(points, values);
  const bool pass = rep.equal && rep.joins_connected;
  json j;
  j["points"] = rep.points;
  j["values"] = rep.values;
  j["component_constant_maps"] = rep.component_constant_maps;
  j["truncated_maps"] = rep.truncated_maps;
  j["equal"] = rep.equal;
  j["components"] = rep.components;
  j["joins_connected"] = rep.joins_connected;
  std::ostringstream text;
  text << "component-constant maps " << rep.component_constant_maps << " vs truncation "
       << rep.truncated_maps << "; iterated joins connected: "
       << (rep.joins_connected ? "yes" : "no") << " -> " << (pass ? "PASS" : "FAIL") << "\n";
  return emit(o, j, text.str(), pass);
}

int cmd_join_fibers(const Options& o, const std::string& left_path,
                    const std::string& right_path) {
  require_opt(left_path, "--left");
  require_opt(right_path, "--right");
  const finsite::FiniteMap f = load_map(left_path);
  const finsite::FiniteMap g = load_map(right_path);
  const finsite::JoinOfMapsResult res = finsite::join_of_maps(f, g);
  json j;
  j["complex"] = finsite::complex_to_json(res.complex);
  j["fiber_f"] = res.fiber_f;
  j["fiber_g"] = res.fiber_g;
  j["fibers_match"] = res.fibers_match;
  std::ostringstream text;
  text << "fiberwise join on " << res.complex.vertices() << " vertices; per-point joins "
       << (res.fibers_match ? "match" : "DO NOT match") << " the discrete model\n";
  return emit(o, j, text.str(), res.fibers_match);
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;

  CLI::App app{"finite-model workbench for lattice presentations, ring covers, "
               "set-level sites, and iterated joins"};
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized batteries")->capture_default_str();
  app.add_option("--bound", opts.bound, "override the per-command enumeration bound");
  app.add_option("--out", opts.out, "write the report to a file instead of stdout");

  // Each leaf registers a dispatcher; the parsed one runs after the full
  // command line (including trailing global flags) has been consumed.
  std::vector<std::pair<CLI::App*, std::function<int()>>> dispatch;

  // Adds a leaf command.  `single` runs the instance mode; `sweep_fn`, when
  // present, is exposed as --sweep and runs the full check battery.
  auto add_leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                      std::function<RunReport()> sweep_fn,
                      std::function<int()> single) -> CLI::App* {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->fallthrough();
    auto sweep = std::make_shared<bool>(false);
    if (sweep_fn)
      c->add_flag("--sweep", *sweep, "run the full check battery for this command");
    dispatch.emplace_back(c, [&opts, sweep, sweep_fn, single] {
      if (*sweep) return run_sweep(opts, sweep_fn);
      return single();
    });
    return c;
  };

  // --- lattice ---
  CLI::App* lattice = app.add_subcommand("lattice", "bounded distributive lattice checks");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  {
    auto gens = std::make_shared<int>(2);
    CLI::App* c = add_leaf(lattice, "free", "build the free lattice on --gens generators",
                           [] { return finsite::suites::lattice_free(); },
                           [&opts, gens] { return cmd_lattice_free(opts, *gens); });
    c->add_option("--gens", *gens, "number of generators (0..4)")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
  }
  {
    auto path = std::make_shared<std::string>();
    CLI::App* c = add_leaf(lattice, "validate", "validate lattice tables from a JSON file", {},
                           [&opts, path] { return cmd_lattice_validate(opts, *path); });
    c->add_option("--lattice", *path, "lattice JSON file");
  }
  {
    auto spec = std::make_shared<std::string>("free:2");
    auto rels = std::make_shared<std::string>();
    CLI::App* c =
        add_leaf(lattice, "congruence", "congruence closure and quotient for a relation list",
                 [] { return finsite::suites::lattice_congruence(); },
                 [&opts, spec, rels] { return cmd_lattice_congruence(opts, *spec, *rels); });
    c->add_option("--lattice", *spec, "lattice spec: free:N or a JSON file")
        ->capture_default_str();
    c->add_option("--collapse", *rels, "relations, e.g. \"g1<=g2;4=5\" (labels or indices)");
  }
  {
    auto gens = std::make_shared<int>(2);
    auto pair = std::make_shared<std::string>();
    CLI::App* c = add_leaf(
        lattice, "simplicial-check", "two-quotient equalizer sweep over all generator pairs",
        [] { return finsite::suites::lattice_simplicial(3); },
        [&opts, gens, pair] { return cmd_lattice_simplicial(opts, *gens, *pair); });
    c->add_option("--gens", *gens, "free lattice generator count")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
    c->add_option("--pair", *pair, "restrict to one pair i,j");
  }
  {
    auto gens = std::make_shared<int>(2);
    auto signs = std::make_shared<std::string>();
    CLI::App* c = add_leaf(lattice, "chain", "signed chain quotient of the free lattice",
                           [] { return finsite::suites::lattice_chain(); },
                           [&opts, gens, signs] { return cmd_lattice_chain(opts, *gens, *signs); });
    c->add_option("--gens", *gens, "free lattice generator count (0..3)")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    c->add_option("--signs", *signs, "comma list of 1/-1, one per adjacent generator pair");
  }

  // --- ring ---
  CLI::App* ring = app.add_subcommand("ring", "finite commutative ring checks");
  ring->require_subcommand(1);
  ring->fallthrough();
  {
    auto spec = std::make_shared<std::string>("Z/6");
    auto at = std::make_shared<int>(1);
    CLI::App* c = add_leaf(ring, "localize", "localize a ring at an element",
                           [] { return finsite::suites::ring_localize(); },
                           [&opts, spec, at] { return cmd_ring_localize(opts, *spec, *at); });
    c->add_option("--ring", *spec, "ring spec: Z/n, prod(...), table:<path>")
        ->capture_default_str();
    c->add_option("--at", *at, "element to invert")->capture_default_str();
  }
  {
    auto spec = std::make_shared<std::string>("Z/6");
    auto alg = std::make_shared<std::string>("self");
    CLI::App* c =
        add_leaf(ring, "spec", "algebra points and the function-ring comparison",
                 [] { return finsite::suites::ring_spec_points(); },
                 [&opts, spec, alg] { return cmd_ring_spec_points(opts, *spec, *alg); });
    c->add_option("--ring", *spec, "base ring spec")->capture_default_str();
    c->add_option("--algebra", *alg, "algebra spec: self, quad:c0,c1, file:<path>, or a ring")
        ->capture_default_str();
  }
  {
    auto spec = std::make_shared<std::string>("Z/12");
    auto alg = std::make_shared<std::string>("self");
    CLI::App* c = add_leaf(ring, "flat", "flatness and faithful flatness of an algebra",
                           [] { return finsite::suites::ring_flat(); },
                           [&opts, spec, alg] { return cmd_ring_flat(opts, *spec, *alg); });
    c->add_option("--ring", *spec, "base ring spec")->capture_default_str();
    c->add_option("--algebra", *alg, "algebra spec")->capture_default_str();
  }
  {
    auto spec = std::make_shared<std::string>("Z/6");
    auto mod = std::make_shared<std::string>("self");
    auto cover = std::make_shared<std::string>("3,4");
    auto corrupt = std::make_shared<bool>(false);
    auto enumerative = std::make_shared<bool>(false);
    CLI::App* c = add_leaf(ring, "h1", "Cech cohomology of a basic-open cover",
                           [] { return finsite::suites::ring_descent(); },
                           [&opts, spec, mod, cover, corrupt, enumerative] {
                             return cmd_ring_h1(opts, *spec, *mod, *cover, *corrupt,
                                                *enumerative);
                           });
    c->add_option("--ring", *spec, "ring spec")->capture_default_str();
    c->add_option("--module", *mod,
                  "module spec: self, quotient:<g>, ideal:<g>, Z/n-with-action:<path>")
        ->capture_default_str();
    c->add_option("--cover", *cover, "comma list of ring elements")->capture_default_str();
    c->add_flag("--corrupt", *corrupt, "report |ker d1| of the broken complex (d0 := 0)");
    c->add_flag("--enumerative", *enumerative,
                "use the elementwise reference route (guarded by --bound)");
  }
  {
    auto spec = std::make_shared<std::string>("Z/6");
    auto cover = std::make_shared<std::string>("3,4");
    CLI::App* c = add_leaf(ring, "glue", "structure-sheaf gluing along a cover",
                           [] { return finsite::suites::ring_glue(); },
                           [&opts, spec, cover] { return cmd_ring_glue(opts, *spec, *cover); });
    c->add_option("--ring", *spec, "ring spec")->capture_default_str();
    c->add_option("--cover", *cover, "comma list of ring elements")->capture_default_str();
  }

  // --- site ---
  CLI::App* site = app.add_subcommand("site", "cardinality-class site checks");
  site->require_subcommand(1);
  site->fallthrough();
  {
    auto name = std::make_shared<std::string>("nonempty");
    auto sizes = std::make_shared<std::string>();
    CLI::App* c = add_leaf(
        site, "presentation", "check that a cardinality class presents a topology",
        [] { return finsite::suites::site_presentation(); },
        [&opts, name, sizes] { return cmd_site_presentation(opts, *name, *sizes); });
    c->add_option("--name", *name, "builtin class name (or unique fragment)")
        ->capture_default_str();
    c->add_option("--sizes", *sizes, "custom class: comma list of admissible sizes");
  }
  {
    auto map_path = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>("nonempty");
    CLI::App* c = add_leaf(
        site, "check-cover", "test a map's fibers against a presentation",
        [&opts] { return finsite::suites::site_cover(opts.seed); },
        [&opts, map_path, name] { return cmd_site_check_cover(opts, *map_path, *name); });
    c->add_option("--map", *map_path, "map JSON file");
    c->add_option("--presentation", *name, "presentation name")->capture_default_str();
  }
  {
    auto map_path = std::make_shared<std::string>();
    auto values = std::make_shared<int>(2);
    CLI::App* c = add_leaf(site, "sheaf", "sheaf equalizer for Hom(-, X) at a surjection",
                           [&opts] { return finsite::suites::site_sheaf(opts.seed); },
                           [&opts, map_path, values] {
                             return cmd_site_sheaf(opts, *map_path, *values);
                           });
    c->add_option("--map", *map_path, "map JSON file");
    c->add_option("--values", *values, "size of the value set X")->capture_default_str();
  }
  {
    auto map_path = std::make_shared<std::string>();
    auto surj_path = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>("nonempty");
    CLI::App* c = add_leaf(site, "local-choice", "lift a map through a surjection after a cover",
                           [&opts] { return finsite::suites::site_local_choice(opts.seed); },
                           [&opts, map_path, surj_path, name] {
                             return cmd_site_local_choice(opts, *map_path, *surj_path, *name);
                           });
    c->add_option("--map", *map_path, "map g : D -> C to lift (JSON file)");
    c->add_option("--surjection", *surj_path, "surjection f : X -> C (JSON file)");
    c->add_option("--presentation", *name, "presentation name")->capture_default_str();
  }
  {
    auto size = std::make_shared<int>(2);
    CLI::App* c = add_leaf(site, "projective", "every surjection onto a finite set splits",
                           [] { return finsite::suites::site_projective(); },
                           [&opts, size] { return cmd_site_projective(opts, *size); });
    c->add_option("--size", *size, "target set size")->capture_default_str();
  }

  // --- join ---
  CLI::App* join = app.add_subcommand("join", "simplicial join and connectivity checks");
  join->require_subcommand(1);
  join->fallthrough();
  {
    auto paths = std::make_shared<std::vector<std::string>>();
    auto power = std::make_shared<int>(1);
    CLI::App* c =
        add_leaf(join, "build", "join the listed complexes (then an optional power)", {},
                 [&opts, paths, power] { return cmd_join_build(opts, *paths, *power); });
    c->add_option("--complex", *paths, "complex JSON file (repeatable)");
    c->add_option("--power", *power, "iterate the join of the result")->capture_default_str();
  }
  {
    auto path = std::make_shared<std::string>();
    auto power = std::make_shared<int>(1);
    CLI::App* c = add_leaf(join, "homology",
                           "reduced integral homology of a complex or join power",
                           [] { return finsite::suites::join_homology(); },
                           [&opts, path, power] { return cmd_join_homology(opts, *path, *power); });
    c->add_option("--complex", *path, "complex JSON file");
    c->add_option("--power", *power, "iterated join count")->capture_default_str();
  }
  {
    auto points = std::make_shared<int>(2);
    auto values = std::make_shared<int>(2);
    auto dependent = std::make_shared<bool>(false);
    CLI::App* c = add_leaf(join, "stabilize", "truncation stabilization for iterated joins",
                           [] { return finsite::suites::join_stabilize(); },
                           [&opts, points, values, dependent] {
                             return cmd_join_stabilize(opts, *points, *values, *dependent);
                           });
    c->add_option("--points", *points, "size of the joined set A")->capture_default_str();
    c->add_option("--values", *values, "size of the value set X")->capture_default_str();
    c->add_flag("--dependent", *dependent,
                "experimental dependent-family variant (at most 3 points)");
  }
  {
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    CLI::App* c = add_leaf(join, "fibers", "fiberwise join of two maps over a base",
                           [&opts] { return finsite::suites::join_fibers(opts.seed); },
                           [&opts, left, right] { return cmd_join_fibers(opts, *left, *right); });
    c->add_option("--left", *left, "map JSON file");
    c->add_option("--right", *right, "map JSON file");
  }

  // --- suite ---
  CLI::App* suite = app.add_subcommand("suite", "aggregate batteries");
  suite->require_subcommand(1);
  suite->fallthrough();
  {
    CLI::App* c = suite->add_subcommand("all", "run every check battery");
    c->fallthrough();
    dispatch.emplace_back(c, [&opts] {
      return run_sweep(opts, [&opts] { return finsite::suites::all_suites(opts.seed); });
    });
  }

  int rc = 0;
  try {
    app.parse(argc, argv);
    for (auto& [cmd, fn] : dispatch)
      if (cmd->parsed()) {
        rc = fn();
        break;
      }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return 2;
  } catch (const finsite::Error& e) {
    std::cerr << "error: " << finsite::errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
