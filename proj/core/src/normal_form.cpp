#include "flatinv/normal_form.hpp"

#include "flatinv/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace flatinv {

namespace {

// First entry of minimal nonzero absolute value in the submatrix starting at
// (t, t), row-major scan. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            mpz_class a = abs(d(i, j));
            if (!found || a < best) {
                best = std::move(a);
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace

IntMatrix SNFResult::diagonal_matrix() const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < divisors.size(); ++i) m(i, i) = divisors[i];
    return m;
}

SNFResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SNFResult result;
    result.rows = m;
    result.cols = n;
    result.u = IntMatrix::identity(m);
    result.v = IntMatrix::identity(n);

    IntMatrix d = a;
    IntMatrix& u = result.u;
    IntMatrix& v = result.v;

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break; // remaining block is zero

        for (;;) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear column t below and row t to the right. Truncated division
            // leaves remainders strictly smaller than the pivot, so repeating
            // with a fresh minimal pivot terminates.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(d, t, pi, pj);
                continue;
            }

            // Pivot now divides its row and column; force it to divide the
            // rest of the block so the diagonal comes out as a chain.
            bool adjusted = false;
            for (std::size_t i = t + 1; i < m && !adjusted; ++i)
                for (std::size_t j = t + 1; j < n && !adjusted; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        adjusted = true;
                    }
            if (!adjusted) break;
            find_pivot(d, t, pi, pj);
        }

        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    for (std::size_t t = 0; t < steps; ++t) {
        if (d(t, t) == 0) break;
        result.divisors.push_back(d(t, t));
    }
    return result;
}

HNFResult hermite_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    HNFResult result{a, IntMatrix::identity(m)};
    IntMatrix& h = result.h;
    IntMatrix& u = result.u;

    std::size_t r = 0; // next pivot row
    for (std::size_t j = 0; j < n && r < m; ++j) {
        for (;;) {
            // minimal |entry| in column j at rows >= r
            std::size_t pi = r;
            bool found = false;
            mpz_class best;
            for (std::size_t i = r; i < m; ++i) {
                if (h(i, j) == 0) continue;
                mpz_class v = abs(h(i, j));
                if (!found || v < best) {
                    best = std::move(v);
                    pi = i;
                    found = true;
                }
            }
            if (!found) break;
            h.swap_rows(r, pi);
            u.swap_rows(r, pi);

            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            if (h(r, j) < 0) {
                h.negate_row(r);
                u.negate_row(r);
            }
            // reduce entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < r; ++i) {
                if (h(i, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
            ++r;
            break;
        }
    }
    return result;
}

std::size_t rank(const IntMatrix& a) {
    const IntMatrix h = hermite_normal_form(a).h;
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                ++r;
                break;
            }
    return r;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    // u*a*v = diag(d): a*x = 0 iff v^-1 x vanishes on the first r
    // coordinates, so the last cols - r columns of v are a basis. They are
    // saturated because v is unimodular.
    const SNFResult snf = smith_normal_form(a);
    const std::size_t r = snf.divisors.size();
    const std::size_t n = a.cols();
    IntMatrix basis(n, n - r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) basis(i, j - r) = snf.v(i, j);
    return basis;
}

mpz_class determinant(const IntMatrix& a) {
    if (!a.is_square()) throw NonSquareError(a.rows(), a.cols());
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMatrix w = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t swap_row = k;
            while (swap_row < n && w(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            w.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

} // namespace flatinv
