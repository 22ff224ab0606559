#include "flatinv/forms.hpp"

#include "flatinv/errors.hpp"
#include "flatinv/normal_form.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace flatinv {

SymForm::SymForm(IntMatrix q) : q_(std::move(q)) {
    if (!q_.is_square()) throw Error("form matrix must be square");
    if (!q_.is_symmetric()) throw Error("form matrix must be symmetric");
}

mpz_class SymForm::evaluate(const std::vector<mpz_class>& a,
                            const std::vector<mpz_class>& b) const {
    if (a.size() != size() || b.size() != size())
        throw Error("form evaluation: vector length does not match the rank");
    mpz_class total = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < size(); ++j) total += a[i] * q_(i, j) * b[j];
    }
    return total;
}

SymForm SymForm::direct_sum(const SymForm& rhs) const {
    IntMatrix q(size() + rhs.size(), size() + rhs.size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) q(i, j) = q_(i, j);
    for (std::size_t i = 0; i < rhs.size(); ++i)
        for (std::size_t j = 0; j < rhs.size(); ++j) q(size() + i, size() + j) = rhs.q_(i, j);
    return SymForm(std::move(q));
}

SymForm SymForm::negated() const { return SymForm(-q_); }

FormClass FormClass::zero() { return FormClass{}; }

FormClass FormClass::hyperbolic_class(std::size_t n) {
    if (n == 0) return zero();
    FormClass c;
    c.kind = Kind::Hyperbolic;
    c.n = n;
    return c;
}

FormClass FormClass::other(std::size_t rank, long signature, bool even, mpz_class abs_det) {
    FormClass c;
    c.kind = Kind::Other;
    c.rank = rank;
    c.signature = signature;
    c.even = even;
    c.abs_det = std::move(abs_det);
    return c;
}

std::string FormClass::to_text() const {
    switch (kind) {
    case Kind::Zero:
        return "0";
    case Kind::Hyperbolic:
        return std::to_string(n) + "H";
    case Kind::Other: {
        std::ostringstream out;
        out << "other(rank=" << rank << ", signature=" << signature
            << ", parity=" << (even ? "even" : "odd") << ", |det|=" << abs_det << ")";
        return out.str();
    }
    }
    return {};
}

SymForm hyperbolic(std::size_t n) {
    IntMatrix q(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        q(2 * k, 2 * k + 1) = 1;
        q(2 * k + 1, 2 * k) = 1;
    }
    return SymForm(std::move(q));
}

bool is_even(const SymForm& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (mpz_odd_p(f(i, i).get_mpz_t())) return false;
    return true;
}

bool is_unimodular(const SymForm& f) { return abs(determinant(f.matrix())) == 1; }

std::vector<mpz_class> characteristic_polynomial(const IntMatrix& a) {
    if (!a.is_square()) throw NonSquareError(a.rows(), a.cols());
    const std::size_t n = a.rows();
    std::vector<mpz_class> p{1};
    if (n == 0) return p;

    // Berkowitz iteration: fold in one row/column of the leading principal
    // submatrix at a time via a Toeplitz product. Division-free, so every
    // intermediate stays an exact integer.
    p = {1, -a(0, 0)};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<mpz_class> q(k + 2);
        q[0] = 1;
        q[1] = -a(k, k);
        std::vector<mpz_class> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = a(i, k);
        for (std::size_t i = 2; i <= k + 1; ++i) {
            mpz_class dot = 0;
            for (std::size_t j = 0; j < k; ++j) dot += a(k, j) * w[j];
            q[i] = -dot;
            if (i <= k) {
                std::vector<mpz_class> next(k);
                for (std::size_t r = 0; r < k; ++r) {
                    mpz_class s = 0;
                    for (std::size_t c = 0; c < k; ++c) s += a(r, c) * w[c];
                    next[r] = std::move(s);
                }
                w = std::move(next);
            }
        }
        std::vector<mpz_class> folded(k + 2);
        for (std::size_t i = 0; i <= k + 1; ++i) {
            mpz_class s = 0;
            const std::size_t j_lo = i > k + 1 ? i - (k + 1) : 0;
            const std::size_t j_hi = std::min(i, k);
            for (std::size_t j = j_lo; j <= j_hi; ++j) s += q[i - j] * p[j];
            folded[i] = std::move(s);
        }
        p = std::move(folded);
    }
    return p;
}

namespace {

long descartes_variations(const std::vector<mpz_class>& coeffs) {
    long variations = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

} // namespace

long signature(const SymForm& f) {
    std::vector<mpz_class> p = characteristic_polynomial(f.matrix());
    // Strip the zero eigenvalues (trailing zero coefficients), then count
    // positive and negative roots by Descartes' rule, which is exact here
    // because every root of the characteristic polynomial is real.
    std::size_t len = p.size();
    while (len > 1 && p[len - 1] == 0) --len;
    std::vector<mpz_class> reduced(p.begin(), p.begin() + len);
    const long positives = descartes_variations(reduced);
    const std::size_t degree = len - 1;
    std::vector<mpz_class> mirrored = reduced;
    for (std::size_t i = 0; i < len; ++i)
        if ((degree - i) % 2 == 1) mirrored[i] = -mirrored[i];
    const long negatives = descartes_variations(mirrored);
    return positives - negatives;
}

FormClass classify(const SymForm& f) {
    const std::size_t r = rank(f.matrix());
    if (r == 0) return FormClass::zero();
    const bool even = is_even(f);
    const mpz_class det = determinant(f.matrix());
    const long sig = signature(f);
    if (even && abs(det) == 1 && sig == 0 && f.size() % 2 == 0)
        return FormClass::hyperbolic_class(f.size() / 2);
    return FormClass::other(r, sig, even, abs(det));
}

namespace {

struct Candidate {
    std::vector<long> v;
    std::vector<mpz_class> qv; // q1 * v
    mpz_class diag;            // v^T q1 v
};

std::vector<Candidate> make_candidates(const IntMatrix& q1, long bound) {
    const std::size_t n = q1.rows();
    std::vector<Candidate> out;
    std::vector<long> v(n, -bound);
    for (;;) {
        Candidate c;
        c.v = v;
        c.qv.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t r = 0; r < n; ++r) c.qv[r] += v[i] * q1(r, i);
        }
        c.diag = 0;
        for (std::size_t r = 0; r < n; ++r) c.diag += v[r] * c.qv[r];
        out.push_back(std::move(c));

        // odometer step, first coordinate most significant
        std::size_t k = n;
        while (k > 0) {
            if (v[k - 1] < bound) {
                ++v[k - 1];
                break;
            }
            v[k - 1] = -bound;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

} // namespace

std::optional<IntMatrix> equivalent_small(const SymForm& f1, const SymForm& f2, long bound) {
    if (f1.size() != f2.size()) throw RankMismatchError(f1.size(), f2.size());
    const std::size_t n = f1.size();
    if (n == 0) return IntMatrix(0, 0);
    if (bound < 0) return std::nullopt;

    const std::vector<Candidate> candidates = make_candidates(f1.matrix(), bound);
    std::vector<const Candidate*> chosen(n, nullptr);

    // Depth-first over columns in candidate order; after fixing k columns the
    // leading k x k block of U^T q1 U must already equal f2's, which prunes
    // nearly everything. The first complete unimodular assignment is the
    // column-major lexicographic minimum.
    auto search = [&](auto&& self, std::size_t k) -> std::optional<IntMatrix> {
        if (k == n) {
            IntMatrix u(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) u(i, j) = chosen[j]->v[i];
            if (abs(determinant(u)) == 1) return u;
            return std::nullopt;
        }
        for (const Candidate& c : candidates) {
            if (c.diag != f2(k, k)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                mpz_class cross = 0;
                for (std::size_t r = 0; r < n; ++r) cross += chosen[j]->v[r] * c.qv[r];
                ok = cross == f2(j, k);
            }
            if (!ok) continue;
            chosen[k] = &c;
            if (auto found = self(self, k + 1)) return found;
        }
        return std::nullopt;
    };
    return search(search, 0);
}

SymForm torus_cup_product_form() {
    constexpr std::array<std::array<int, 2>, 6> pairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    IntMatrix q(6, 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            const std::array<int, 4> perm{pairs[a][0], pairs[a][1], pairs[b][0], pairs[b][1]};
            bool is_permutation = true;
            for (int x = 0; x < 4 && is_permutation; ++x)
                is_permutation = std::count(perm.begin(), perm.end(), x) == 1;
            if (!is_permutation) continue;
            int inversions = 0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            q(a, b) = inversions % 2 == 0 ? 1 : -1;
        }
    return SymForm(std::move(q));
}

} // namespace flatinv
