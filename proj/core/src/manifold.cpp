#include "flatinv/manifold.hpp"

#include "flatinv/errors.hpp"

#include <string>

namespace flatinv {

std::size_t b2_from_b1(std::size_t b1) {
    if (b1 == 0 || b1 > 4) throw BettiOutOfRangeError(b1);
    return 2 * b1 - 2;
}

FormClass form_from_b1(std::size_t b1, bool is_torus) {
    if (b1 == 0 || b1 > 4) throw BettiOutOfRangeError(b1);
    if (b1 == 4) {
        if (!is_torus)
            throw TorusMismatchError("b1 = 4 is only admissible for the torus; "
                                     "descriptor lacks the is_torus marker");
        // The one excluded case is certified independently: the cup-product
        // form on the 4-torus must classify as 3H.
        static const bool torus_certified =
            classify(torus_cup_product_form()) == FormClass::hyperbolic_class(3);
        if (!torus_certified)
            throw Error("internal: torus cup-product form failed to classify as 3H");
        return FormClass::hyperbolic_class(3);
    }
    if (b1 == 1) return FormClass::zero();
    return FormClass::hyperbolic_class(b1 - 1);
}

ManifoldReport analyze(const AlmostBieberbachDescriptor& d, const AnalyzeOptions& options) {
    d.validate();
    if (!d.orientable) throw NotOrientableError(d.label);
    if (d.crystal && d.crystal->dim != 4)
        throw DescriptorError("'" + d.label + "': direct lattice data has rank " +
                              std::to_string(d.crystal->dim) +
                              ", but a 4-manifold descriptor needs rank 4");

    const BettiResult betti = underlying_betti(d, options.max_group_order);

    ManifoldReport report;
    report.label = d.label;
    report.b1 = betti.b1;
    report.route = betti.route;

    if (!d.spin && betti.b1 != 1) {
        if (options.strict_spin) throw SpinInconsistencyError(betti.b1);
        report.warnings.push_back("non-spin descriptor has b1 = " + std::to_string(betti.b1) +
                                  "; expected b1 = 1 for non-spin data");
    }
    if (d.is_torus && betti.b1 != 4)
        throw TorusMismatchError("descriptor '" + d.label +
                                 "' is marked as the torus but has b1 = " +
                                 std::to_string(betti.b1));

    report.b2 = b2_from_b1(betti.b1);
    report.form = form_from_b1(betti.b1, d.is_torus);
    report.chi = 2 - 2 * static_cast<long>(report.b1) + static_cast<long>(report.b2);
    report.parity = "even";

    // Materialize the asserted class through the forms layer and re-derive
    // every report invariant from it.
    const SymForm materialized = hyperbolic(report.b1 - 1);
    if (report.chi != 0 || materialized.size() != report.b2 || !is_even(materialized) ||
        signature(materialized) != 0 || !(classify(materialized) == report.form))
        throw Error("internal: report invariants failed for '" + d.label + "'");

    return report;
}

} // namespace flatinv
