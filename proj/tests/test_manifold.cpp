#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatinv/errors.hpp"
#include "flatinv/manifold.hpp"

using namespace flatinv;

namespace {

AlmostBieberbachDescriptor torus_descriptor() {
    AlmostBieberbachDescriptor d;
    d.label = "torus";
    d.nilpotency_class = 1;
    d.is_torus = true;
    d.crystal = CrystalGroup{4, {}, std::nullopt, "torus"};
    return d;
}

AlmostBieberbachDescriptor flat_z2_descriptor() {
    AlmostBieberbachDescriptor d;
    d.label = "flat-z2";
    d.crystal = CrystalGroup{
        4,
        {IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}},
        std::nullopt,
        "flat-z2"};
    return d;
}

AlmostBieberbachDescriptor case5_descriptor() {
    AlmostBieberbachDescriptor d;
    d.label = "ab-case5";
    d.nilpotency_class = 2;
    d.spin = false;
    d.underlying = parse_presentation(
        "< t1,t2,t3,al | [t1,t2], [t1,t3], [t2,t3], al^2 = t1, al*t2*al^-1 = t2^-1, "
        "al*t3*al^-1 = t3^-1 >");
    return d;
}

} // namespace

TEST_CASE("b2 from b1") {
    CHECK(b2_from_b1(1) == 0);
    CHECK(b2_from_b1(2) == 2);
    CHECK(b2_from_b1(3) == 4);
    CHECK(b2_from_b1(4) == 6);
    CHECK_THROWS_AS(b2_from_b1(0), BettiOutOfRangeError);
    CHECK_THROWS_AS(b2_from_b1(5), BettiOutOfRangeError);

    // b2 of the torus equals the rank of the independently built cup form
    CHECK(b2_from_b1(4) == torus_cup_product_form().size());
}

TEST_CASE("form from b1") {
    CHECK(form_from_b1(1, false) == FormClass::zero());
    CHECK(form_from_b1(2, false) == FormClass::hyperbolic_class(1));
    CHECK(form_from_b1(3, false) == FormClass::hyperbolic_class(2));
    CHECK(form_from_b1(4, true) == FormClass::hyperbolic_class(3));
    CHECK(form_from_b1(4, true) == classify(torus_cup_product_form()));
    CHECK_THROWS_AS(form_from_b1(4, false), TorusMismatchError);
    CHECK_THROWS_AS(form_from_b1(0, false), BettiOutOfRangeError);
    CHECK_THROWS_AS(form_from_b1(5, true), BettiOutOfRangeError);
}

TEST_CASE("analyze: torus") {
    const ManifoldReport r = analyze(torus_descriptor());
    CHECK(r.label == "torus");
    CHECK(r.b1 == 4);
    CHECK(r.b2 == 6);
    CHECK(r.chi == 0);
    CHECK(r.parity == "even");
    CHECK(r.form == FormClass::hyperbolic_class(3));
    CHECK(r.route == BettiRoute::Holonomy);
    CHECK(r.warnings.empty());
}

TEST_CASE("analyze: flat Z/2 descriptor with fixed rank 2") {
    const ManifoldReport r = analyze(flat_z2_descriptor());
    CHECK(r.b1 == 2);
    CHECK(r.b2 == 2);
    CHECK(r.chi == 0);
    CHECK(r.form == FormClass::hyperbolic_class(1));
    CHECK(r.route == BettiRoute::Holonomy);
}

TEST_CASE("analyze: non-spin case-5 descriptor vanishes") {
    const ManifoldReport r = analyze(case5_descriptor());
    CHECK(r.b1 == 1);
    CHECK(r.b2 == 0);
    CHECK(r.form == FormClass::zero());
    CHECK(r.route == BettiRoute::Underlying);
    CHECK(r.warnings.empty()); // b1 = 1 is consistent with the non-spin flag
}

TEST_CASE("analyze rejects non-orientable descriptors") {
    AlmostBieberbachDescriptor d = torus_descriptor();
    d.orientable = false;
    CHECK_THROWS_AS(analyze(d), NotOrientableError);
}

TEST_CASE("spin consistency rule") {
    AlmostBieberbachDescriptor d = flat_z2_descriptor(); // b1 = 2
    d.spin = false;

    CHECK_THROWS_AS(analyze(d), SpinInconsistencyError);
    try {
        analyze(d);
    } catch (const SpinInconsistencyError& e) {
        CHECK(e.b1 == 2);
    }

    AnalyzeOptions lax;
    lax.strict_spin = false;
    const ManifoldReport r = analyze(d, lax);
    CHECK(r.b1 == 2);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("non-spin") != std::string::npos);
}

TEST_CASE("torus marker consistency") {
    // b1 = 4 without the marker
    AlmostBieberbachDescriptor d = torus_descriptor();
    d.is_torus = false;
    CHECK_THROWS_AS(analyze(d), TorusMismatchError);

    // marker on a descriptor that is not the torus
    AlmostBieberbachDescriptor e = flat_z2_descriptor();
    e.is_torus = true;
    CHECK_THROWS_AS(analyze(e), TorusMismatchError);
}

TEST_CASE("betti range enforcement") {
    // -I holonomy pins every coordinate: b1 = 0, which the pipeline rejects
    AlmostBieberbachDescriptor d;
    d.label = "rigid";
    d.crystal = CrystalGroup{4, {-IntMatrix::identity(4)}, std::nullopt, "rigid"};
    CHECK_THROWS_AS(analyze(d), BettiOutOfRangeError);
}

TEST_CASE("direct lattice data must have rank 4") {
    AlmostBieberbachDescriptor d;
    d.label = "dim3";
    d.crystal = CrystalGroup{3, {}, std::nullopt, "dim3"};
    CHECK_THROWS_AS(analyze(d), DescriptorError);
}

TEST_CASE("analyze is deterministic and pure") {
    const AlmostBieberbachDescriptor d = case5_descriptor();
    const ManifoldReport a = analyze(d);
    const ManifoldReport b = analyze(d);
    CHECK(a == b);
}

TEST_CASE("route independence surfaces conflicts") {
    AlmostBieberbachDescriptor d = flat_z2_descriptor();
    d.presentation = parse_presentation("< a | a^2 >"); // b1 = 0 vs holonomy 2
    CHECK_THROWS_AS(analyze(d), InconsistentRoutesError);
}

TEST_CASE("every emitted report satisfies the Euler relation") {
    for (const auto& d : {torus_descriptor(), flat_z2_descriptor(), case5_descriptor()}) {
        const ManifoldReport r = analyze(d);
        CHECK(2 - 2 * static_cast<long>(r.b1) + static_cast<long>(r.b2) == 0);
        CHECK(r.chi == 0);
        CHECK(r.parity == "even");
        // the form class materializes to a form of rank b2, signature 0
        const SymForm f = hyperbolic(r.b1 - 1);
        CHECK(f.size() == r.b2);
        CHECK(signature(f) == 0);
        CHECK(is_even(f));
    }
}
