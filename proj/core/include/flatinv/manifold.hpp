#pragma once

#include "flatinv/crystal.hpp"
#include "flatinv/forms.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace flatinv {

struct AnalyzeOptions {
    /// When set (the default), a non-spin descriptor whose b1 is not 1 is a
    /// hard error; otherwise it is downgraded to a report warning.
    bool strict_spin = true;
    std::size_t max_group_order = kDefaultMaxGroupOrder;
};

/// End-to-end result for one manifold descriptor.
struct ManifoldReport {
    std::string label;
    std::size_t b1 = 0;
    std::size_t b2 = 0;
    long chi = 0;         // 2 - 2*b1 + b2, identically zero
    std::string parity;   // always "even"
    FormClass form;
    BettiRoute route = BettiRoute::Presentation;
    std::vector<std::string> warnings;

    bool operator==(const ManifoldReport&) const = default;
};

/// b2 = 2*b1 - 2, from the vanishing Euler characteristic. Throws
/// BettiOutOfRangeError for b1 = 0 or b1 > 4.
std::size_t b2_from_b1(std::size_t b1);

/// Intersection-form class from b1: Zero for b1 = 1, Hyperbolic(b1 - 1) for
/// b1 in {2,3}, Hyperbolic(3) for the torus (b1 = 4, cross-checked against
/// the torus cup-product form). b1 = 4 without the torus marker raises
/// TorusMismatchError.
FormClass form_from_b1(std::size_t b1, bool is_torus);

/// Full pipeline: validate, compute b1 (all routes must agree), apply the
/// spin and torus consistency rules, derive b2 and the form class, and
/// verify the emitted invariants (chi = 0, even parity, form rank = b2,
/// signature 0) by materializing the form.
ManifoldReport analyze(const AlmostBieberbachDescriptor& d, const AnalyzeOptions& options = {});

} // namespace flatinv
