#pragma once

#include "flatinv/intmat.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace flatinv {

struct Syllable {
    std::size_t generator = 0;
    long exponent = 0;
    bool operator==(const Syllable&) const = default;
};

/// Free-group word in normal form: exponents nonzero, adjacent syllables on
/// distinct generators.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool trivial() const { return syllables_.empty(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(long k) const;

    static Word generator(std::size_t index, long exponent = 1);
    /// [a,b] = a b a^-1 b^-1
    static Word commutator(const Word& a, const Word& b);

    bool operator==(const Word&) const = default;

private:
    void push(const Syllable& s);
    std::vector<Syllable> syllables_;
};

/// Finitely presented group: generator names plus relator words.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    /// Throws UnknownGeneratorError.
    std::size_t generator_index(std::string_view name) const;
    /// Name grammar, uniqueness, relator indices in range.
    void validate() const;
};

/// Parses the presentation grammar
///
///   presentation := '<' genlist '|' relatorlist? '>'
///   genlist      := name (',' name)*
///   relatorlist  := relation (',' relation)*
///   relation     := word ('=' word)?
///   word         := factor ('*' factor)*
///   factor       := name ('^' int)? | '[' word ',' word ']'
///                 | '(' word ')' ('^' int)?
///
/// Whitespace is insignificant, '#' comments run to end of line, names match
/// [A-Za-z][A-Za-z0-9_]*. A relation "w1 = w2" becomes the relator w1*w2^-1.
Presentation parse_presentation(const std::string& text);

/// Invariants of a finitely generated abelian group,
/// Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion; // each >= 2, divisibility chain order

    /// "Z^2", "Z + Z/2 + Z/2", "Z/4", "0"
    std::string to_text() const;
    bool operator==(const AbelianInvariants&) const = default;
};

/// Abelianized exponent-sum matrix: rows = relators, cols = generators,
/// entry (i,j) = total exponent of generator j in relator i.
IntMatrix relation_matrix(const Presentation& p);

/// Invariants of the abelianization, via the Smith form of the relation
/// matrix: free_rank = #generators - rank, torsion = divisors > 1.
AbelianInvariants abelian_invariants(const Presentation& p);

/// First Betti number = free rank of the abelianization.
std::size_t first_betti(const Presentation& p);

} // namespace flatinv
