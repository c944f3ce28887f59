#include "finsite/specparse.hpp"

#include <algorithm>
#include <cctype>

#include "finsite/common.hpp"
#include "finsite/json_io.hpp"

namespace finsite {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

int parse_int(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
      }))
    fail(errc::bad_input, "expected an integer for " + what + ", got: " + s);
  try {
    return std::stoi(t);
  } catch (const std::exception&) {
    fail(errc::bad_input, "integer out of range for " + what + ": " + s);
  }
}

// Split on top-level commas (commas not nested inside parentheses).
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

FiniteRing parse_ring_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (starts_with(spec, "Z/")) {
    const int n = parse_int(spec.substr(2), "ring order");
    if (n < 1) fail(errc::bad_input, "ring order must be at least 1");
    return cyclic_ring(n);
  }
  if (starts_with(spec, "prod(") && spec.back() == ')') {
    const auto parts = split_top_level(spec.substr(5, spec.size() - 6));
    if (parts.size() < 2) fail(errc::bad_input, "prod(...) needs at least two factors");
    FiniteRing r = parse_ring_spec(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) r = product_ring(r, parse_ring_spec(parts[i]));
    return r;
  }
  if (starts_with(spec, "table:")) return ring_from_json(load_json_file(spec.substr(6)));
  fail(errc::bad_input, "unrecognized ring spec: " + spec);
}

Algebra parse_algebra_spec(const FiniteRing& base, const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "self") return self_algebra(base);
  if (starts_with(spec, "quad:")) {
    const auto parts = split_top_level(spec.substr(5));
    if (parts.size() != 2) fail(errc::bad_input, "quad: needs two coefficients c0,c1");
    const int c0 = parse_int(parts[0], "quad coefficient");
    const int c1 = parse_int(parts[1], "quad coefficient");
    if (c0 < 0 || c0 >= base.size() || c1 < 0 || c1 >= base.size())
      fail(errc::bad_input, "quad coefficients must be ring elements");
    return quadratic_extension(base, c0, c1);
  }
  if (starts_with(spec, "file:")) {
    const json j = load_json_file(spec.substr(5));
    if (!j.contains("ring") || !j.contains("structure"))
      fail(errc::bad_input, "algebra file needs \"ring\" and \"structure\"");
    FiniteRing ring = ring_from_json(j.at("ring"));
    RingHom hom;
    hom.map = j.at("structure").get<std::vector<int>>();
    return make_algebra(base, std::move(ring), std::move(hom.map));
  }
  FiniteRing target = parse_ring_spec(spec);
  const std::vector<RingHom> homs = all_ring_homs(base, target);
  if (homs.empty())
    fail(errc::bad_input, "no ring map onto " + spec + "; give one with file:<path>");
  if (homs.size() > 1)
    fail(errc::bad_input, "several ring maps onto " + spec + "; pick one with file:<path>");
  return make_algebra(base, std::move(target), homs.front().map);
}

FiniteModule parse_module_spec(const FiniteRing& base, const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "self" || spec == "ring-as-module") return module_self(base);
  if (starts_with(spec, "Z/")) {
    const auto mid = spec.find("-with-action:");
    if (mid != std::string::npos) {
      const int n = parse_int(spec.substr(2, mid - 2), "module order");
      if (n < 1) fail(errc::bad_input, "module order must be at least 1");
      const json j = load_json_file(spec.substr(mid + 13));
      if (!j.contains("action")) fail(errc::bad_input, "action file needs \"action\" rows");
      std::vector<int> action;
      const auto& rows = j.at("action");
      if (!rows.is_array() || static_cast<int>(rows.size()) != base.size())
        fail(errc::shape_mismatch, "action needs one row per ring element");
      for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          fail(errc::shape_mismatch, "action rows must match the module order");
        for (const auto& v : row) action.push_back(v.get<int>());
      }
      std::vector<int> add(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      return FiniteModule::validated(base, n, std::move(add), 0, std::move(action));
    }
  }
  if (starts_with(spec, "quotient:")) {
    const int g = parse_int(spec.substr(9), "generator");
    if (g < 0 || g >= base.size()) fail(errc::bad_input, "generator must be a ring element");
    return module_quotient(base, ideal_generated(base, std::vector<int>{g}));
  }
  if (starts_with(spec, "ideal:")) {
    const int g = parse_int(spec.substr(6), "generator");
    if (g < 0 || g >= base.size()) fail(errc::bad_input, "generator must be a ring element");
    return module_ideal(base, ideal_generated(base, std::vector<int>{g}));
  }
  const Algebra a = parse_algebra_spec(base, spec);
  return module_via_hom(base, a.ring, a.structure);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split_top_level(text)) {
    const std::string t = trim(part);
    if (t.empty()) fail(errc::bad_input, "empty entry in integer list: " + text);
    out.push_back(parse_int(t, "list entry"));
  }
  return out;
}

}  // namespace finsite
