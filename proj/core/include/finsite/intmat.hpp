#pragma once

#include <cstdint>
#include <vector>

namespace finsite::intmat {

// Dense integer matrices, row major.  Everything here works over Z with
// explicit, deterministic pivoting so that identical inputs reduce through
// identical elimination sequences on every platform.
using Matrix = std::vector<std::vector<long long>>;

Matrix zero_matrix(int rows, int cols);
Matrix identity_matrix(int n);

// Smith normal form diagonal of `a` (destructive on the copy).  Returns the
// nonzero invariants d1 | d2 | ... ; the count is the rank.  Pivoting picks
// the smallest nonzero |entry|, earliest position on ties.
std::vector<long long> smith_diagonal(Matrix a);

// Smith diagonal together with the left transform: u * a_original = d * v
// for unimodular u, v.  `uinv` satisfies u * uinv = identity.  Only the row
// transform is reported; the column transform is discarded.
std::vector<long long> smith_diagonal_with_left(Matrix a, Matrix& u, Matrix& uinv);

int rank(const Matrix& a);

// Basis of { x : a x = 0 } as vectors of length cols(a), computed by integer
// column reduction with a tracked column transform.  The basis spans the
// kernel lattice exactly (saturated), not just a finite-index sublattice.
std::vector<std::vector<long long>> kernel_basis(const Matrix& a);

// Index [Z^rows : L] of the lattice L spanned by the columns of `a`.
// Requires L to have full rank = rows; throws errc::matrix_too_large style
// logic errors are asserts, a rank deficit throws std::invalid_argument.
long long lattice_index(Matrix a);

}  // namespace finsite::intmat
