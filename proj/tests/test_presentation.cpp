#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatinv/errors.hpp"
#include "flatinv/normal_form.hpp"
#include "flatinv/presentation.hpp"

#include <algorithm>
#include <random>

using namespace flatinv;

namespace {

const char* kC2Model =
    "< t1,t2,t3,al | [t1,t2], [t1,t3], [t2,t3], al^2 = t1, al*t2*al^-1 = t2^-1, "
    "al*t3*al^-1 = t3^-1 >";

Word cyclic_rotate(const Word& w) {
    if (w.trivial()) return w;
    const Syllable first = w.syllables().front();
    const Word head = Word::generator(first.generator, first.exponent);
    return head.inverse() * w * head;
}

} // namespace

TEST_CASE("word normalization") {
    Word w({{0, 1}, {0, 2}, {1, -1}, {1, 1}, {0, -3}});
    CHECK(w.trivial()); // a^3 (b^-1 b) a^-3
    Word ab = Word::generator(0) * Word::generator(1);
    CHECK(ab.syllables().size() == 2);
    CHECK(ab.inverse().syllables() == std::vector<Syllable>{{1, -1}, {0, -1}});
    CHECK((ab * ab.inverse()).trivial());
    CHECK(ab.pow(0).trivial());
    CHECK(ab.pow(-1) == ab.inverse());
    CHECK(Word::generator(0).pow(3).syllables() == std::vector<Syllable>{{0, 3}});
    CHECK(Word::commutator(Word::generator(0), Word::generator(1)).syllables() ==
          std::vector<Syllable>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
}

TEST_CASE("parser accepts the defining syntax") {
    const Presentation p = parse_presentation("< a, b | [a,b] >");
    REQUIRE(p.generators == std::vector<std::string>{"a", "b"});
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].syllables() ==
          std::vector<Syllable>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});

    const Presentation q = parse_presentation("< a | a^2 >");
    CHECK(q.relators[0].syllables() == std::vector<Syllable>{{0, 2}});

    const Presentation c2 = parse_presentation(kC2Model);
    CHECK(c2.generators.size() == 4);
    CHECK(c2.relators.size() == 6);

    const Presentation free3 = parse_presentation("< a, b, c | >");
    CHECK(free3.generators.size() == 3);
    CHECK(free3.relators.empty());
}

TEST_CASE("parser handles grouping, powers, comments") {
    const Presentation p = parse_presentation("< a, b | (a*b)^2 >");
    CHECK(p.relators[0].syllables() ==
          std::vector<Syllable>{{0, 1}, {1, 1}, {0, 1}, {1, 1}});

    const Presentation neg = parse_presentation("< a, b | (a*b)^-1 >");
    CHECK(neg.relators[0].syllables() == std::vector<Syllable>{{1, -1}, {0, -1}});

    // zero exponents normalize away
    CHECK(parse_presentation("< a | a^0 >").relators[0].trivial());

    const Presentation commented = parse_presentation(
        "< a, # first generator\n  b | # relators follow\n [a,b] >");
    CHECK(commented.generators.size() == 2);
    CHECK(commented.relators.size() == 1);

    // names may carry digits and underscores
    const Presentation named = parse_presentation("< t1, al_2 | t1 = al_2 >");
    CHECK(named.relators[0].syllables() == std::vector<Syllable>{{0, 1}, {1, -1}});
}

TEST_CASE("relations rewrite to relators") {
    const Presentation p = parse_presentation("< a | a^2 = a >");
    CHECK(p.relators[0].syllables() == std::vector<Syllable>{{0, 1}});
    // w = w collapses to the empty relator
    CHECK(parse_presentation("< a | a = a >").relators[0].trivial());
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_AS(parse_presentation("< a | b >"), UnknownGeneratorError);
    CHECK_THROWS_AS(parse_presentation("< a, a | >"), DuplicateGeneratorError);
    CHECK_THROWS_AS(parse_presentation("a, b | >"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("< a, b >"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("< a | a^ >"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("< a | a > trailing"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("< a | [a >"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("< 1a | >"), SyntaxError);

    try {
        parse_presentation("< a, b >");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 7); // at '>', where '|' was required
        CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
    }

    try {
        parse_presentation("< a | q >");
    } catch (const UnknownGeneratorError& e) {
        CHECK(e.name == "q");
    }
}

TEST_CASE("relation matrix") {
    CHECK(relation_matrix(parse_presentation("< a, b | [a,b] >")) == IntMatrix(1, 2));
    CHECK(relation_matrix(parse_presentation("< a | a^2 >")) == IntMatrix{{2}});

    // commutator rows abelianize to zero; al^2 = t1 leaves (-1, 0, 0, 2)
    const IntMatrix m = relation_matrix(parse_presentation(kC2Model));
    CHECK(m == IntMatrix{{0, 0, 0, 0},
                         {0, 0, 0, 0},
                         {0, 0, 0, 0},
                         {-1, 0, 0, 2},
                         {0, 2, 0, 0},
                         {0, 0, 2, 0}});

    // no relators: 0 x generators matrix
    CHECK(relation_matrix(parse_presentation("< a, b | >")) == IntMatrix(0, 2));
}

TEST_CASE("abelian invariants, pinned examples") {
    CHECK(abelian_invariants(parse_presentation("< a, b | [a,b] >")) ==
          AbelianInvariants{2, {}});
    CHECK(abelian_invariants(parse_presentation(kC2Model)) ==
          AbelianInvariants{1, {2, 2}});
    CHECK(abelian_invariants(parse_presentation("< a | a^2 >")) ==
          AbelianInvariants{0, {2}});

    CHECK(abelian_invariants(parse_presentation(kC2Model)).to_text() == "Z + Z/2 + Z/2");
    CHECK(abelian_invariants(parse_presentation("< a, b | [a,b] >")).to_text() == "Z^2");
    CHECK(abelian_invariants(parse_presentation("< a | a^2 >")).to_text() == "Z/2");
    CHECK(abelian_invariants(parse_presentation("< a | a >")).to_text() == "0");
    CHECK(abelian_invariants(parse_presentation("< a | >")).to_text() == "Z");
}

TEST_CASE("first betti number") {
    CHECK(first_betti(parse_presentation("< a, b, c | >")) == 3);
    CHECK(first_betti(parse_presentation(kC2Model)) == 1);
    CHECK(first_betti(parse_presentation("< a | a^2 >")) == 0);
}

TEST_CASE("invariance of abelian invariants") {
    const Presentation base = parse_presentation(kC2Model);
    const AbelianInvariants expected = abelian_invariants(base);

    SUBCASE("relator reordering") {
        Presentation p = base;
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(p.relators.begin(), p.relators.end(), rng);
            CHECK(abelian_invariants(p) == expected);
        }
    }
    SUBCASE("relator inversion") {
        Presentation p = base;
        for (Word& w : p.relators) w = w.inverse();
        CHECK(abelian_invariants(p) == expected);
    }
    SUBCASE("relator cyclic permutation") {
        Presentation p = base;
        for (Word& w : p.relators) w = cyclic_rotate(w);
        CHECK(abelian_invariants(p) == expected);
    }
    SUBCASE("generator renaming") {
        Presentation p = base;
        p.generators = {"gamma", "beta", "delta", "alpha"};
        CHECK(abelian_invariants(p) == expected);
    }
    SUBCASE("adding a commutator relator changes nothing") {
        Presentation p = base;
        p.relators.push_back(Word::commutator(Word::generator(0), Word::generator(3)));
        CHECK(abelian_invariants(p) == expected);
        p.relators.push_back(Word::commutator(Word::generator(2), Word::generator(1)));
        CHECK(abelian_invariants(p) == expected);
    }
}

TEST_CASE("free presentations and the rank identity") {
    std::mt19937_64 rng(77);
    for (std::size_t n = 1; n <= 5; ++n) {
        Presentation p;
        for (std::size_t i = 0; i < n; ++i) p.generators.push_back("g" + std::to_string(i));
        CHECK(abelian_invariants(p) == AbelianInvariants{n, {}});

        // sprinkle random relators; free_rank = #generators - rank always
        std::uniform_int_distribution<long> exp(-3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int r = 0; r < 3; ++r) {
            Word w;
            for (int s = 0; s < 4; ++s) w = w * Word::generator(pick(rng), exp(rng));
            p.relators.push_back(w);
        }
        const AbelianInvariants inv = abelian_invariants(p);
        CHECK(inv.free_rank == p.generators.size() - rank(relation_matrix(p)));
    }
}
