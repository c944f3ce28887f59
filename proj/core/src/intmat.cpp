#include "finsite/intmat.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "finsite/common.hpp"

namespace finsite::intmat {

namespace {

constexpr long long kEntryLimit = 1LL << 42;

void check_entry(long long v) {
  // The matrices reduced here come from incidence structures and relation
  // lattices of groups of order <= a few dozen; entries stay small.  A blown
  // entry means a logic error or an input far outside the supported range.
  if (v >= kEntryLimit || v <= -kEntryLimit)
    fail(errc::matrix_too_large, "integer matrix reduction entry overflow");
}

struct PivotPos {
  int row = -1;
  int col = -1;
};

PivotPos find_pivot(const Matrix& a, int from_row, int from_col) {
  PivotPos best;
  long long best_abs = 0;
  for (int i = from_row; i < static_cast<int>(a.size()); ++i) {
    for (int j = from_col; j < static_cast<int>(a[i].size()); ++j) {
      long long v = std::llabs(a[i][j]);
      if (v != 0 && (best_abs == 0 || v < best_abs)) {
        best_abs = v;
        best = {i, j};
        if (v == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

Matrix zero_matrix(int rows, int cols) {
  return Matrix(rows, std::vector<long long>(cols, 0));
}

Matrix identity_matrix(int n) {
  Matrix m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Core Smith reduction.  When `u`/`uinv` are non-null they accumulate the
// row transform (and its inverse).  Column transforms are not tracked.
std::vector<long long> smith_impl(Matrix a, Matrix* u, Matrix* uinv) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (u) *u = identity_matrix(rows);
  if (uinv) *uinv = identity_matrix(rows);

  auto row_sub = [&](int dst, int src, long long q) {
    // row[dst] -= q * row[src]; uinv gets the inverse column operation.
    for (int j = 0; j < cols; ++j) {
      a[dst][j] -= q * a[src][j];
      check_entry(a[dst][j]);
    }
    if (u)
      for (int j = 0; j < rows; ++j) {
        (*u)[dst][j] -= q * (*u)[src][j];
        check_entry((*u)[dst][j]);
      }
    if (uinv)
      for (int i = 0; i < rows; ++i) {
        (*uinv)[i][src] += q * (*uinv)[i][dst];
        check_entry((*uinv)[i][src]);
      }
  };
  auto row_swap = [&](int r1, int r2) {
    std::swap(a[r1], a[r2]);
    if (u) std::swap((*u)[r1], (*u)[r2]);
    if (uinv)
      for (int i = 0; i < rows; ++i) std::swap((*uinv)[i][r1], (*uinv)[i][r2]);
  };
  auto row_negate = [&](int r) {
    for (int j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    if (u)
      for (int j = 0; j < rows; ++j) (*u)[r][j] = -(*u)[r][j];
    if (uinv)
      for (int i = 0; i < rows; ++i) (*uinv)[i][r] = -(*uinv)[i][r];
  };
  auto col_sub = [&](int dst, int src, long long q) {
    for (int i = 0; i < rows; ++i) {
      a[i][dst] -= q * a[i][src];
      check_entry(a[i][dst]);
    }
  };
  auto col_swap = [&](int c1, int c2) {
    for (int i = 0; i < rows; ++i) std::swap(a[i][c1], a[i][c2]);
  };

  std::vector<long long> diag;
  int t = 0;
  while (t < rows && t < cols) {
    PivotPos p = find_pivot(a, t, t);
    if (p.row < 0) break;
    if (p.row != t) row_swap(p.row, t);
    if (p.col != t) col_swap(p.col, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        row_sub(i, t, q);
        if (a[i][t] != 0) {
          row_swap(i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        col_sub(j, t, q);
        if (a[t][j] != 0) {
          col_swap(j, t);
          dirty = true;
        }
      }
    }
    if (a[t][t] < 0) row_negate(t);
    diag.push_back(a[t][t]);
    ++t;
  }

  // Enforce the divisibility chain d1 | d2 | ... by gcd-folding adjacent
  // pairs; the standard trick via one row addition per offending pair.
  for (bool fixed = false; !fixed;) {
    fixed = true;
    for (int i = 0; i + 1 < static_cast<int>(diag.size()); ++i) {
      if (diag[i + 1] % diag[i] != 0) {
        long long x = diag[i], y = diag[i + 1];
        long long g = x, b = y;
        while (b) {
          long long r = g % b;
          g = b;
          b = r;
        }
        long long l = x / g * y;
        diag[i] = g;
        diag[i + 1] = l;
        fixed = false;
      }
    }
  }
  // Note: when transforms are requested the divisibility fix above is not
  // mirrored into u.  Callers needing transforms (group decomposition) get
  // them from smith_diagonal_with_left, which performs the fix matrix-side.
  return diag;
}

}  // namespace

std::vector<long long> smith_diagonal(Matrix a) {
  return smith_impl(std::move(a), nullptr, nullptr);
}

std::vector<long long> smith_diagonal_with_left(Matrix a, Matrix& u, Matrix& uinv) {
  // Transform-tracked variant.  The diagonal produced by smith_impl before
  // its divisibility pass is already diagonal w.r.t. the tracked u; redo the
  // divisibility fix with explicit row/column operations so u stays honest.
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;

  // First diagonalize with transforms, without the final divisibility fold.
  Matrix work = a;
  u = identity_matrix(rows);
  uinv = identity_matrix(rows);

  auto row_sub = [&](int dst, int src, long long q) {
    for (int j = 0; j < cols; ++j) {
      work[dst][j] -= q * work[src][j];
      check_entry(work[dst][j]);
    }
    for (int j = 0; j < rows; ++j) {
      u[dst][j] -= q * u[src][j];
      check_entry(u[dst][j]);
    }
    for (int i = 0; i < rows; ++i) {
      uinv[i][src] += q * uinv[i][dst];
      check_entry(uinv[i][src]);
    }
  };
  auto row_swap = [&](int r1, int r2) {
    std::swap(work[r1], work[r2]);
    std::swap(u[r1], u[r2]);
    for (int i = 0; i < rows; ++i) std::swap(uinv[i][r1], uinv[i][r2]);
  };
  auto row_negate = [&](int r) {
    for (int j = 0; j < cols; ++j) work[r][j] = -work[r][j];
    for (int j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    for (int i = 0; i < rows; ++i) uinv[i][r] = -uinv[i][r];
  };
  auto col_sub = [&](int dst, int src, long long q) {
    for (int i = 0; i < rows; ++i) {
      work[i][dst] -= q * work[i][src];
      check_entry(work[i][dst]);
    }
  };
  auto col_swap = [&](int c1, int c2) {
    for (int i = 0; i < rows; ++i) std::swap(work[i][c1], work[i][c2]);
  };

  int t = 0;
  while (t < rows && t < cols) {
    PivotPos p = find_pivot(work, t, t);
    if (p.row < 0) break;
    if (p.row != t) row_swap(p.row, t);
    if (p.col != t) col_swap(p.col, t);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (work[i][t] == 0) continue;
        long long q = work[i][t] / work[t][t];
        row_sub(i, t, q);
        if (work[i][t] != 0) {
          row_swap(i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (work[t][j] == 0) continue;
        long long q = work[t][j] / work[t][t];
        col_sub(j, t, q);
        if (work[t][j] != 0) {
          col_swap(j, t);
          dirty = true;
        }
      }
    }
    if (work[t][t] < 0) row_negate(t);
    ++t;
  }

  // Divisibility fix with transforms: for offending (i, i+1) add row i+1 to
  // row i, which re-couples the two and lets the elimination above re-run on
  // the 2x2 block.  Repeat until the chain holds.
  for (bool fixed = false; !fixed;) {
    fixed = true;
    for (int i = 0; i + 1 < t; ++i) {
      if (work[i + 1][i + 1] % work[i][i] != 0) {
        fixed = false;
        // row i += row i+1 (brings work[i][i+1]'s column entry into play)
        for (int j = 0; j < cols; ++j) work[i][j] += work[i + 1][j];
        for (int j = 0; j < rows; ++j) {
          u[i][j] += u[i + 1][j];
          check_entry(u[i][j]);
        }
        for (int k = 0; k < rows; ++k) {
          uinv[k][i + 1] -= uinv[k][i];
          check_entry(uinv[k][i + 1]);
        }
        // Re-reduce the 2x2 block deterministically.
        int s = i;
        while (s < t) {
          PivotPos p = find_pivot(work, s, s);
          if (p.row < 0) break;
          if (p.row != s) row_swap(p.row, s);
          if (p.col != s) col_swap(p.col, s);
          bool d2 = true;
          while (d2) {
            d2 = false;
            for (int r = s + 1; r < rows; ++r) {
              if (work[r][s] == 0) continue;
              long long q = work[r][s] / work[s][s];
              row_sub(r, s, q);
              if (work[r][s] != 0) {
                row_swap(r, s);
                d2 = true;
              }
            }
            for (int c = s + 1; c < cols; ++c) {
              if (work[s][c] == 0) continue;
              long long q = work[s][c] / work[s][s];
              col_sub(c, s, q);
              if (work[s][c] != 0) {
                col_swap(c, s);
                d2 = true;
              }
            }
          }
          if (work[s][s] < 0) row_negate(s);
          ++s;
        }
      }
    }
  }

  std::vector<long long> diag;
  for (int i = 0; i < t; ++i)
    if (work[i][i] != 0) diag.push_back(work[i][i]);
  return diag;
}

int rank(const Matrix& a) {
  return static_cast<int>(smith_diagonal(a).size());
}

std::vector<std::vector<long long>> kernel_basis(const Matrix& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (rows == 0) {
    // Map from Z^cols to Z^0: everything is kernel.
    std::vector<std::vector<long long>> basis;
    // cols unknown when rows == 0; the caller passes a shaped matrix, so
    // treat it as zero columns.
    return basis;
  }

  Matrix m = a;
  Matrix v = identity_matrix(cols);

  auto col_sub = [&](int dst, int src, long long q) {
    for (int i = 0; i < rows; ++i) {
      m[i][dst] -= q * m[i][src];
      check_entry(m[i][dst]);
    }
    for (int i = 0; i < cols; ++i) {
      v[i][dst] -= q * v[i][src];
      check_entry(v[i][dst]);
    }
  };
  auto col_swap = [&](int c1, int c2) {
    for (int i = 0; i < rows; ++i) std::swap(m[i][c1], m[i][c2]);
    for (int i = 0; i < cols; ++i) std::swap(v[i][c1], v[i][c2]);
  };

  // Column echelon: process rows top-down, clearing each pivot row to a
  // single column by repeated Euclidean steps.
  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    // Find the column (>= lead) minimizing |m[r][c]| != 0.
    while (true) {
      int best = -1;
      long long best_abs = 0;
      for (int c = lead; c < cols; ++c) {
        long long x = std::llabs(m[r][c]);
        if (x != 0 && (best_abs == 0 || x < best_abs)) {
          best = c;
          best_abs = x;
        }
      }
      if (best < 0) break;  // row r already clear beyond lead
      if (best != lead) col_swap(best, lead);
      bool any = false;
      for (int c = lead + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        long long q = m[r][c] / m[r][lead];
        col_sub(c, lead, q);
        if (m[r][c] != 0) any = true;
      }
      if (!any) {
        ++lead;
        break;
      }
    }
  }

  std::vector<std::vector<long long>> basis;
  for (int c = 0; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (m[r][c] != 0) {
        zero = false;
        break;
      }
    if (zero) {
      std::vector<long long> vec(cols);
      for (int i = 0; i < cols; ++i) vec[i] = v[i][c];
      basis.push_back(std::move(vec));
    }
  }
  return basis;
}

long long lattice_index(Matrix a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 1;
  std::vector<long long> d = smith_diagonal(std::move(a));
  if (static_cast<int>(d.size()) < rows)
    throw std::invalid_argument("lattice_index: columns do not span full rank");
  long long idx = 1;
  for (long long x : d) {
    idx *= x;
    check_entry(idx);
  }
  return idx;
}

}  // namespace finsite::intmat
