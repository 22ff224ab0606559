#pragma once

#include "flatinv/intmat.hpp"

#include <cstddef>
#include <vector>

namespace flatinv {

/// Smith decomposition u * a * v = diag(d1, ..., dr, 0, ...).
///
/// divisors holds the nonzero block only: each di >= 1 and di | d(i+1).
/// u and v are unimodular (det = +/-1).
struct SNFResult {
    std::vector<mpz_class> divisors;
    IntMatrix u;
    IntMatrix v;
    std::size_t rows = 0;
    std::size_t cols = 0;

    /// rows x cols matrix with the divisors on the leading diagonal.
    IntMatrix diagonal_matrix() const;
};

/// Smith normal form over Z with both transformation matrices.
/// Total on every shape, including empty and all-zero matrices.
/// Pivot choice: entry of minimal nonzero absolute value in the working
/// submatrix, first such in row-major order, which keeps the intermediate
/// growth tame and the output deterministic.
SNFResult smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: u * a = h.
struct HNFResult {
    IntMatrix h;
    IntMatrix u;
};

/// h is in row echelon form with positive pivots and the entries above each
/// pivot reduced into [0, pivot). u is unimodular. This convention makes h
/// unique, so results are comparable bit for bit.
HNFResult hermite_normal_form(const IntMatrix& a);

/// Rank over Q (= number of nonzero Smith divisors).
std::size_t rank(const IntMatrix& a);

/// Columns form a basis of the saturated integral kernel
/// {x in Z^cols : a*x = 0}; saturated means the basis spans
/// ker(a) intersected with Z^cols, not a finite-index sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws NonSquareError for non-square input.
mpz_class determinant(const IntMatrix& a);

} // namespace flatinv
