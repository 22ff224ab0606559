#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace flatinv {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Everything downstream (normal forms, abelianizations, form invariants)
/// runs on exact arithmetic; elementary-divisor eliminations blow past any
/// fixed machine width even for small inputs, hence mpz entries throughout.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Vertical concatenation; both inputs must have the same column count.
    static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// Row-major flat view; used as a canonical key for element sets.
    const std::vector<mpz_class>& data() const { return entries_; }

    bool operator==(const IntMatrix&) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    // Unimodular elementary operations, the building blocks of the
    // normal-form eliminations.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);

    /// Text format: a "rows cols" header line, then row-major
    /// whitespace-separated integers. Throws SyntaxError on malformed input.
    static IntMatrix parse(const std::string& text);
    std::string to_text() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

} // namespace flatinv
