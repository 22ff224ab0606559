#include "flatinv/intmat.hpp"

#include "flatinv/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace flatinv {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error("ragged initializer: every row must have " + std::to_string(cols_) +
                        " entries");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols_ != bottom.cols_)
        throw Error("vstack: column counts differ (" + std::to_string(top.cols_) + " vs " +
                    std::to_string(bottom.cols_) + ")");
    IntMatrix m(top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t k = 0; k < top.entries_.size(); ++k) m.entries_[k] = top.entries_[k];
    for (std::size_t k = 0; k < bottom.entries_.size(); ++k)
        m.entries_[top.entries_.size() + k] = bottom.entries_[k];
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                    std::to_string(rhs.cols_));
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - rhs.entries_[k];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

namespace {

bool is_integer_token(const std::string& tok) {
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

} // namespace

IntMatrix IntMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw SyntaxError(0, "expected a \"rows cols\" header of nonnegative integers");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t k = 0; k < m.entries_.size(); ++k) {
        std::string tok;
        if (!(in >> tok))
            throw SyntaxError(text.size(), "expected " + std::to_string(m.entries_.size()) +
                                               " entries, got " + std::to_string(k));
        if (!is_integer_token(tok))
            throw SyntaxError(text.size() - static_cast<std::size_t>(in.rdbuf()->in_avail()),
                              "invalid integer '" + tok + "'");
        m.entries_[k] = mpz_class(tok);
    }
    std::string extra;
    if (in >> extra)
        throw SyntaxError(text.size() - static_cast<std::size_t>(in.rdbuf()->in_avail()),
                          "trailing data '" + extra + "' after matrix entries");
    return m;
}

std::string IntMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << (*this)(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_text(); }

} // namespace flatinv
