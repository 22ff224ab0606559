#pragma once

#include "flatinv/intmat.hpp"
#include "flatinv/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace flatinv {

inline constexpr std::size_t kDefaultMaxGroupOrder = 10000;

/// Crystallographic group data: lattice rank plus integral holonomy
/// generators. Affine translation parts ride along for data fidelity but play
/// no role in b1 (which only depends on the linear action).
struct CrystalGroup {
    std::size_t dim = 0;
    std::vector<IntMatrix> holonomy_gens;
    std::optional<std::vector<std::vector<mpq_class>>> affine_parts;
    std::string label;

    /// Shape checks plus NotUnimodularError for generators outside GL(n,Z).
    void validate() const;
};

/// Full element list of the group generated by the holonomy matrices,
/// breadth-first from the identity with generators applied in the given
/// order. Throws NotFiniteError once the closure exceeds max_order.
std::vector<IntMatrix> enumerate_point_group(const CrystalGroup& g,
                                             std::size_t max_order = kDefaultMaxGroupOrder);

/// Rank of the common fixed sublattice {z in Z^dim : h z = z for all
/// generators h} = dim - rank of the stacked (h - I). Fixed by the
/// generators iff fixed by the whole group, so generators suffice; the
/// closure is still enumerated first to validate finiteness.
std::size_t fixed_sublattice_rank(const CrystalGroup& g,
                                  std::size_t max_order = kDefaultMaxGroupOrder);

/// First Betti number of a Bieberbach group given by holonomy data; equals
/// the fixed-sublattice rank of the holonomy action.
std::size_t betti_via_holonomy(const CrystalGroup& g,
                               std::size_t max_order = kDefaultMaxGroupOrder);

/// The underlying crystallographic group of an almost-Bieberbach group,
/// given either by holonomy data or by a presentation.
using UnderlyingGroup = std::variant<CrystalGroup, Presentation>;

/// Algebraic description of the fundamental group of a flat or almost-flat
/// manifold: a torsion-free extension of a nilpotent lattice by a finite
/// group. nilpotency_class 1 is the flat (Bieberbach) case; classes 2 and 3
/// route through the underlying crystallographic group.
struct AlmostBieberbachDescriptor {
    std::string label;
    int nilpotency_class = 1;
    bool orientable = true;
    bool spin = true;
    bool is_torus = false;
    std::optional<Presentation> presentation; // direct presentation of the group
    std::optional<CrystalGroup> crystal;      // direct lattice + holonomy data
    std::optional<UnderlyingGroup> underlying;

    /// At least one data source present, nilpotency_class in 1..3, nested
    /// group data well-formed.
    void validate() const;
};

enum class BettiRoute { Presentation, Holonomy, Underlying };

std::string_view to_string(BettiRoute route);

struct BettiResult {
    std::size_t b1 = 0;
    BettiRoute route = BettiRoute::Presentation;
};

/// b1 of the descriptor's group by the first applicable route:
///   1. direct presentation        -> abelianization free rank
///   2. underlying presentation    -> abelianization free rank
///   3. underlying holonomy data   -> fixed-sublattice rank
///   4. direct holonomy data       -> fixed-sublattice rank
/// Every available route is evaluated; disagreement raises
/// InconsistentRoutesError, no data at all raises MissingDataError.
BettiResult underlying_betti(const AlmostBieberbachDescriptor& d,
                             std::size_t max_order = kDefaultMaxGroupOrder);

} // namespace flatinv
