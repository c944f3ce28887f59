#include "finsite/simplicial.hpp"

#include <cassert>
#include <map>

namespace finsite {

int amalgam(const Lattice& l, int i, int j, int x, int y) {
  Congruence both = pair_congruence(l, i, j);
  if (!both.related(x, y))
    fail(errc::hypothesis_failed, "amalgam requires x = y mod (i = j)");
  return l.meet(l.meet(l.join(x, y), l.join(x, i)), l.join(y, j));
}

EqualizerReport check_simplicial_equalizer(const Lattice& l, int i, int j,
                                           std::string lattice_name) {
  const int n = l.size();
  Congruence th_leq = order_congruence(l, i, j);
  Congruence th_geq = order_congruence(l, j, i);
  Congruence th_eq = pair_congruence(l, i, j);

  EqualizerReport rep;
  rep.lattice_name = std::move(lattice_name);
  rep.i = i;
  rep.j = j;
  rep.size_leq = th_leq.num_classes;
  rep.size_geq = th_geq.num_classes;
  rep.size_eq = th_eq.num_classes;

  // Both one-sided congruences refine (i = j), so each class maps to the
  // (i = j)-class of its representative.
  std::vector<int> to_eq_from_leq(th_leq.num_classes), to_eq_from_geq(th_geq.num_classes);
  for (int c = 0; c < th_leq.num_classes; ++c)
    to_eq_from_leq[c] = th_eq.class_of[th_leq.representatives[c]];
  for (int c = 0; c < th_geq.num_classes; ++c)
    to_eq_from_geq[c] = th_eq.class_of[th_geq.representatives[c]];

  // Preimage count of each equalizer point under z -> ([z]_leq, [z]_geq).
  std::map<std::pair<int, int>, int> preimages;
  std::map<std::pair<int, int>, int> preimage_elem;
  for (int z = 0; z < n; ++z) {
    std::pair<int, int> pt{th_leq.class_of[z], th_geq.class_of[z]};
    preimages[pt] += 1;
    preimage_elem[pt] = z;
  }

  rep.bijective = true;
  rep.amalgam_ok = true;
  long long count = 0;
  for (int c1 = 0; c1 < th_leq.num_classes; ++c1)
    for (int c2 = 0; c2 < th_geq.num_classes; ++c2) {
      if (to_eq_from_leq[c1] != to_eq_from_geq[c2]) continue;
      ++count;
      auto it = preimages.find({c1, c2});
      if (it == preimages.end() || it->second != 1) {
        if (rep.bijective) rep.witness = {c1, c2};
        rep.bijective = false;
        continue;
      }
      // The amalgam of any representatives must land on the unique
      // preimage.  Representatives agree in L/(i=j) by construction.
      int x = th_leq.representatives[c1];
      int y = th_geq.representatives[c2];
      int z = amalgam(l, i, j, x, y);
      if (z != preimage_elem.at({c1, c2}) ||
          th_leq.class_of[z] != c1 || th_geq.class_of[z] != c2) {
        rep.amalgam_ok = false;
        if (rep.witness.empty()) rep.witness = {c1, c2};
      }
    }
  rep.equalizer_size = count;
  if (count != n) {
    rep.bijective = false;
    if (rep.witness.empty()) rep.witness = {static_cast<int>(count), n};
  }
  return rep;
}

Quotient chain_quotients(const Lattice& l,
                         std::span<const std::pair<int, int>> constraints,
                         std::span<const int> signs) {
  if (constraints.size() != signs.size())
    fail(errc::shape_mismatch, "chain_quotients: one sign per constraint");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(constraints.size());
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    auto [a, b] = constraints[k];
    if (signs[k] != 1 && signs[k] != -1)
      fail(errc::bad_input, "chain_quotients: signs must be +1 or -1");
    if (signs[k] > 0)
      pairs.emplace_back(l.join(a, b), b);  // impose a <= b
    else
      pairs.emplace_back(l.join(a, b), a);  // impose b <= a
  }
  return quotient(l, congruence_closure(l, pairs));
}

}  // namespace finsite
