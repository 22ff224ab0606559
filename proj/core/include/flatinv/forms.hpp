#pragma once

#include "flatinv/intmat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flatinv {

/// Symmetric integral bilinear form given by its Gram matrix.
class SymForm {
public:
    SymForm() = default; // the rank-0 form
    /// Throws Error unless q is square and symmetric.
    explicit SymForm(IntMatrix q);

    std::size_t size() const { return q_.rows(); }
    const IntMatrix& matrix() const { return q_; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return q_(i, j); }

    /// a^T q b
    mpz_class evaluate(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const;

    SymForm direct_sum(const SymForm& rhs) const;
    SymForm negated() const;

    bool operator==(const SymForm&) const = default;

private:
    IntMatrix q_;
};

/// Equivalence-class tag of a symmetric form: the zero form, n copies of the
/// hyperbolic plane, or anything else together with its basic invariants.
struct FormClass {
    enum class Kind { Zero, Hyperbolic, Other };

    Kind kind = Kind::Zero;
    std::size_t n = 0;        // Hyperbolic multiplicity (>= 1)
    std::size_t rank = 0;     // Other: rank over Q
    long signature = 0;       // Other
    bool even = false;        // Other
    mpz_class abs_det = 0;    // Other

    static FormClass zero();
    static FormClass hyperbolic_class(std::size_t n);
    static FormClass other(std::size_t rank, long signature, bool even, mpz_class abs_det);

    /// "0", "1H", "2H", or "other(rank=.., signature=.., parity=.., |det|=..)"
    std::string to_text() const;

    bool operator==(const FormClass&) const = default;
};

/// Orthogonal sum of n copies of [[0,1],[1,0]]; n = 0 gives the empty form.
SymForm hyperbolic(std::size_t n);

/// True iff f(a,a) is even for every integral a; equivalently, iff every
/// diagonal entry is even (a^T q a = sum q_ii a_i^2 mod 2).
bool is_even(const SymForm& f);

/// |det q| = 1; the empty form counts as unimodular.
bool is_unimodular(const SymForm& f);

/// Coefficients of det(xI - a), highest power first (monic). Division-free
/// Berkowitz iteration, so the result is exact over Z.
std::vector<mpz_class> characteristic_polynomial(const IntMatrix& a);

/// #positive - #negative eigenvalues, computed exactly by Descartes sign
/// counting on the characteristic polynomial (all roots are real for a
/// symmetric matrix, so the count is exact). No floating point anywhere.
long signature(const SymForm& f);

/// Recognition rule: rank 0 -> Zero; even + unimodular + signature 0 + even
/// rank -> Hyperbolic(rank/2); everything else -> Other with its invariants.
/// Degenerate nonzero forms land in Other with |det| = 0.
FormClass classify(const SymForm& f);

/// Searches for a unimodular u with u^T q1 u = q2 and all |entries| <= bound.
/// Returns the column-major lexicographically first witness, or nullopt if
/// none exists within the bound (which does not prove inequivalence).
/// Throws RankMismatchError when the sizes differ. Intended for rank <= 6.
std::optional<IntMatrix> equivalent_small(const SymForm& f1, const SymForm& f2, long bound);

/// Cup-product form on the degree-2 cohomology of the 4-torus, built from
/// the exterior algebra: basis e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4,
/// entry (I,J) = sign of the permutation with I u J = (1,2,3,4), else 0.
/// Serves as an independent witness for the rank-6 hyperbolic class.
SymForm torus_cup_product_form();

} // namespace flatinv
