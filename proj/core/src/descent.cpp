#include "finsite/descent.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finsite/abelian.hpp"
#include "finsite/common.hpp"
#include "finsite/intmat.hpp"

namespace finsite {

using intmat::Matrix;

std::vector<int> d0_table(const FiniteModule& m, int x, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != x) fail(errc::shape_mismatch, "cochain has wrong length");
  std::vector<int> out(static_cast<std::size_t>(x) * x);
  for (int a = 0; a < x; ++a)
    for (int b = 0; b < x; ++b) out[static_cast<std::size_t>(a) * x + b] = m.sub(s[a], s[b]);
  return out;
}

std::vector<int> d1_table(const FiniteModule& m, int x, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != x * x) fail(errc::shape_mismatch, "cochain has wrong length");
  std::vector<int> out(static_cast<std::size_t>(x) * x * x);
  auto at = [&t, x](int a, int b) { return t[static_cast<std::size_t>(a) * x + b]; };
  for (int a = 0; a < x; ++a)
    for (int b = 0; b < x; ++b)
      for (int c = 0; c < x; ++c)
        out[(static_cast<std::size_t>(a) * x + b) * x + c] =
            m.add(m.sub(at(a, b), at(a, c)), at(b, c));
  return out;
}

namespace {

// One component e*M of the complex: its carrier inside M, the position map,
// and its decomposition as an abelian group (in carrier coordinates).
struct Piece {
  int idem = 0;
  std::vector<int> carrier;
  std::vector<int> pos;
  AbelianDecomposition dec;
};

Piece make_piece(const FiniteModule& m, int e) {
  Piece p;
  p.idem = e;
  p.pos.assign(m.size(), -1);
  for (int x = 0; x < m.size(); ++x) {
    const int ex = m.act(e, x);
    if (p.pos[ex] < 0) p.pos[ex] = 0;
  }
  for (int x = 0; x < m.size(); ++x)
    if (p.pos[x] >= 0) {
      p.pos[x] = static_cast<int>(p.carrier.size());
      p.carrier.push_back(x);
    }
  const int n = static_cast<int>(p.carrier.size());
  p.dec = decompose_abelian(
      n, [&m, &p](int a, int b) { return p.pos[m.add(p.carrier[a], p.carrier[b])]; },
      p.pos[m.zero()]);
  return p;
}

std::vector<int> cover_idempotents(const FiniteRing& r, const std::vector<int>& cover) {
  if (cover.empty()) fail(errc::bad_input, "cover must be nonempty");
  for (int f : cover)
    if (f < 0 || f >= r.size()) fail(errc::bad_input, "cover element out of range");
  if (!is_unimodular(r, cover))
    fail(errc::not_unimodular, "cover does not generate the unit ideal");
  std::vector<int> es;
  es.reserve(cover.size());
  for (int f : cover) es.push_back(localize(r, f).idempotent);
  return es;
}

// Coordinates of an element of M inside a piece.  The element must lie in
// the piece's carrier.
const std::vector<long long>& piece_coords(const Piece& p, int x) {
  return p.dec.coords[p.pos[x]];
}

struct Levels {
  int k = 0;
  std::vector<int> es;                 // e_i
  std::vector<Piece> level0;           // per index
  std::vector<Piece> level1;           // per ordered pair, i*k+j
  std::vector<int> pair_idem;          // e_i e_j
  std::vector<int> offset0, offset1;   // coordinate offsets per block
  std::vector<long long> orders0, orders1;
};

Levels build_levels(const FiniteRing& r, const FiniteModule& m, const std::vector<int>& cover) {
  Levels lv;
  lv.es = cover_idempotents(r, cover);
  lv.k = static_cast<int>(lv.es.size());
  for (int i = 0; i < lv.k; ++i) {
    lv.offset0.push_back(static_cast<int>(lv.orders0.size()));
    Piece p = make_piece(m, lv.es[i]);
    for (long long o : p.dec.orders) lv.orders0.push_back(o);
    lv.level0.push_back(std::move(p));
  }
  for (int i = 0; i < lv.k; ++i)
    for (int j = 0; j < lv.k; ++j) {
      const int e = r.mul(lv.es[i], lv.es[j]);
      lv.pair_idem.push_back(e);
      lv.offset1.push_back(static_cast<int>(lv.orders1.size()));
      Piece p = make_piece(m, e);
      for (long long o : p.dec.orders) lv.orders1.push_back(o);
      lv.level1.push_back(std::move(p));
    }
  return lv;
}

// Matrix of d0 : (+)_i e_i M -> (+)_{(i,j)} e_ij M in the pieces' coordinates.
Matrix d0_matrix(const FiniteModule& m, const Levels& lv) {
  Matrix d(lv.orders1.size(), std::vector<long long>(lv.orders0.size(), 0));
  for (int i = 0; i < lv.k; ++i) {
    const Piece& src = lv.level0[i];
    for (int c = 0; c < src.dec.rank(); ++c) {
      const int x = src.carrier[src.dec.basis[c]];
      for (int p = 0; p < lv.k; ++p)
        for (int q = 0; q < lv.k; ++q) {
          const int sign = (p == i ? 1 : 0) - (q == i ? 1 : 0);
          if (sign == 0) continue;
          const int blk = p * lv.k + q;
          const Piece& dst = lv.level1[blk];
          const auto& co = piece_coords(dst, m.act(dst.idem, x));
          for (int row = 0; row < dst.dec.rank(); ++row)
            d[lv.offset1[blk] + row][lv.offset0[i] + c] += sign * co[row];
        }
    }
  }
  return d;
}

// Matrix of d1 : (+)_{(i,j)} e_ij M -> (+)_{(p,q,s)} e_pqs M, together with
// the target orders.
Matrix d1_matrix(const FiniteRing& r, const FiniteModule& m, const Levels& lv,
                 std::vector<long long>& orders2) {
  std::vector<Piece> level2;
  std::vector<int> offset2;
  orders2.clear();
  // Pieces depend only on the idempotent; share them across triples.
  std::map<int, Piece> by_idem;
  std::vector<const Piece*> triple_piece;
  std::vector<int> triple_idem;
  for (int p = 0; p < lv.k; ++p)
    for (int q = 0; q < lv.k; ++q)
      for (int s = 0; s < lv.k; ++s) {
        const int e = r.mul(lv.pair_idem[p * lv.k + q], lv.es[s]);
        auto it = by_idem.find(e);
        if (it == by_idem.end()) it = by_idem.emplace(e, make_piece(m, e)).first;
        offset2.push_back(static_cast<int>(orders2.size()));
        for (long long o : it->second.dec.orders) orders2.push_back(o);
        triple_piece.push_back(&it->second);
        triple_idem.push_back(e);
      }

  Matrix d(orders2.size(), std::vector<long long>(lv.orders1.size(), 0));
  for (int a = 0; a < lv.k; ++a)
    for (int b = 0; b < lv.k; ++b) {
      const int blk_in = a * lv.k + b;
      const Piece& src = lv.level1[blk_in];
      for (int c = 0; c < src.dec.rank(); ++c) {
        const int x = src.carrier[src.dec.basis[c]];
        int t = 0;
        for (int p = 0; p < lv.k; ++p)
          for (int q = 0; q < lv.k; ++q)
            for (int s = 0; s < lv.k; ++s, ++t) {
              int coeff = 0;
              if (p == a && q == b) coeff += 1;   // + t_pq
              if (p == a && s == b) coeff -= 1;   // - t_ps
              if (q == a && s == b) coeff += 1;   // + t_qs
              if (coeff == 0) continue;
              const Piece& dst = *triple_piece[t];
              const auto& co = piece_coords(dst, m.act(triple_idem[t], x));
              for (int row = 0; row < dst.dec.rank(); ++row)
                d[offset2[t] + row][lv.offset1[blk_in] + c] += coeff * co[row];
            }
      }
    }
  return d;
}

long long product_order(const std::vector<Piece>& pieces) {
  long long result = 1;
  for (const Piece& p : pieces) result *= static_cast<long long>(p.carrier.size());
  return result;
}

// Number of module elements killed by every cover idempotent; the natural
// map M -> C^0 is injective exactly when this is 1.
long long diagonal_kernel_order(const FiniteModule& m, const std::vector<int>& es) {
  long long count = 0;
  for (int x = 0; x < m.size(); ++x) {
    bool killed = true;
    for (int e : es) killed = killed && m.act(e, x) == m.zero();
    if (killed) ++count;
  }
  return count;
}

}  // namespace

CechComplex cech_complex(const FiniteRing& r, const FiniteModule& m,
                         const std::vector<int>& cover) {
  CechComplex c;
  c.cover = cover;
  c.idempotents = cover_idempotents(r, cover);
  const int k = static_cast<int>(cover.size());
  auto part = [&r, &m](int e) { return module_idempotent_part(r, m, e); };
  for (int i = 0; i < k; ++i) c.level0.push_back(part(c.idempotents[i]));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c.level1.push_back(part(r.mul(c.idempotents[i], c.idempotents[j])));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        const int e = r.mul(r.mul(c.idempotents[i], c.idempotents[j]), c.idempotents[l]);
        std::set<int> image;
        for (int x = 0; x < m.size(); ++x) image.insert(m.act(e, x));
        c.level2_orders.push_back(static_cast<long long>(image.size()));
      }
  return c;
}

CohomologyReport cech_cohomology(const FiniteRing& r, const FiniteModule& m,
                                 const std::vector<int>& cover) {
  const Levels lv = build_levels(r, m, cover);
  CohomologyReport rep;
  rep.c0 = product_order(lv.level0);
  rep.c1 = product_order(lv.level1);

  rep.h0 = hom_kernel_size(d0_matrix(m, lv), lv.orders0, lv.orders1);

  std::vector<long long> orders2;
  const Matrix d1 = d1_matrix(r, m, lv, orders2);
  const long long ker_d1 = hom_kernel_size(d1, lv.orders1, orders2);

  // |H^1| = |ker d1| / |im d0| with |im d0| = |C^0| / |ker d0|.
  if ((ker_d1 * rep.h0) % rep.c0 != 0)
    fail(errc::hypothesis_failed, "cocycles are not a multiple of the coboundaries");
  rep.h1 = ker_d1 * rep.h0 / rep.c0;
  rep.exact = rep.h1 == 1;
  rep.descent_isomorphism =
      diagonal_kernel_order(m, lv.es) == 1 && rep.h0 == static_cast<long long>(m.size());
  return rep;
}

CohomologyReport cech_cohomology_enumerative(const FiniteRing& r, const FiniteModule& m,
                                             const std::vector<int>& cover, long long bound) {
  const Levels lv = build_levels(r, m, cover);
  const int k = lv.k;
  CohomologyReport rep;
  rep.c0 = product_order(lv.level0);
  rep.c1 = product_order(lv.level1);
  if (rep.c0 > bound || rep.c1 > bound)
    fail(errc::enumeration_too_large, "chain level too large for elementwise enumeration");

  // d0 elementwise: s |-> (e_ij s_i - e_ij s_j) over ordered pairs.
  auto d0_apply = [&](const std::vector<int>& s) {
    std::vector<int> out(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int e = lv.pair_idem[i * lv.k + j];
        out[static_cast<std::size_t>(i) * k + j] = m.sub(m.act(e, s[i]), m.act(e, s[j]));
      }
    return out;
  };

  // Enumerate C^0, counting the kernel of d0 and collecting its image.
  std::set<std::vector<int>> image;
  long long h0 = 0;
  {
    std::vector<int> idx(k, 0);
    while (true) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = lv.level0[i].carrier[idx[i]];
      const std::vector<int> out = d0_apply(s);
      bool zero = true;
      for (int v : out) zero = zero && v == m.zero();
      if (zero) ++h0;
      image.insert(out);
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == static_cast<int>(lv.level0[pos].carrier.size()))
        idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  rep.h0 = h0;

  // Enumerate C^1, counting cocycles and recording a few that are not
  // coboundaries.
  long long ker_d1 = 0;
  {
    const int kk = k * k;
    std::vector<int> idx(kk, 0);
    while (true) {
      std::vector<int> t(kk);
      for (int b = 0; b < kk; ++b) t[b] = lv.level1[b].carrier[idx[b]];
      bool cocycle = true;
      for (int p = 0; p < k && cocycle; ++p)
        for (int q = 0; q < k && cocycle; ++q)
          for (int s = 0; s < k && cocycle; ++s) {
            const int e = r.mul(lv.pair_idem[p * k + q], lv.es[s]);
            const int v = m.act(
                e, m.add(m.sub(t[p * k + q], t[p * k + s]), t[q * k + s]));
            cocycle = v == m.zero();
          }
      if (cocycle) {
        ++ker_d1;
        if (!image.count(t) && rep.witnesses.size() < 3) rep.witnesses.push_back(t);
      }
      int pos = kk - 1;
      while (pos >= 0 && ++idx[pos] == static_cast<int>(lv.level1[pos].carrier.size()))
        idx[pos--] = 0;
      if (pos < 0) break;
    }
  }

  if (ker_d1 % static_cast<long long>(image.size()) != 0)
    fail(errc::hypothesis_failed, "cocycles are not a multiple of the coboundaries");
  rep.h1 = ker_d1 / static_cast<long long>(image.size());
  rep.exact = rep.h1 == 1;
  rep.descent_isomorphism =
      diagonal_kernel_order(m, lv.es) == 1 && rep.h0 == static_cast<long long>(m.size());
  return rep;
}

long long corrupted_h1(const FiniteRing& r, const FiniteModule& m,
                       const std::vector<int>& cover) {
  const Levels lv = build_levels(r, m, cover);
  std::vector<long long> orders2;
  const Matrix d1 = d1_matrix(r, m, lv, orders2);
  // With d0 replaced by the zero map the coboundaries vanish, so the whole
  // cocycle group survives.
  return hom_kernel_size(d1, lv.orders1, orders2);
}

GluingReport ring_gluing_equalizer(const FiniteRing& r, const std::vector<int>& cover) {
  const CohomologyReport c = cech_cohomology(r, module_self(r), cover);
  GluingReport g;
  g.ring_order = r.size();
  g.equalizer_order = c.h0;
  g.isomorphism = c.descent_isomorphism;
  return g;
}

QuasicoherenceReport weak_quasicoherence_check(const FiniteRing& r, const FiniteModule& m,
                                               int f) {
  if (f < 0 || f >= r.size()) fail(errc::bad_input, "ring element out of range");
  const Localization loc = localize(r, f);
  QuasicoherenceReport q;
  q.tensor_order = tensor_order(r, m, module_via_hom(r, loc.ring, loc.hom));
  std::set<int> localized;
  for (int a = 0; a < m.size(); ++a) localized.insert(m.act(loc.idempotent, a));
  q.localized_order = static_cast<long long>(localized.size());
  q.isomorphism = q.tensor_order == q.localized_order;
  return q;
}

}  // namespace finsite
