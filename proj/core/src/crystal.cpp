#include "flatinv/crystal.hpp"

#include "flatinv/errors.hpp"
#include "flatinv/normal_form.hpp"

#include <set>
#include <utility>

namespace flatinv {

void CrystalGroup::validate() const {
    for (std::size_t k = 0; k < holonomy_gens.size(); ++k) {
        const IntMatrix& h = holonomy_gens[k];
        if (h.rows() != dim || h.cols() != dim)
            throw DescriptorError("holonomy generator " + std::to_string(k) + " of '" + label +
                                  "' is " + std::to_string(h.rows()) + "x" +
                                  std::to_string(h.cols()) + ", expected " + std::to_string(dim) +
                                  "x" + std::to_string(dim));
        if (abs(determinant(h)) != 1) throw NotUnimodularError(k);
    }
    if (affine_parts) {
        if (affine_parts->size() != holonomy_gens.size())
            throw DescriptorError("'" + label + "': affine_parts count " +
                                  std::to_string(affine_parts->size()) +
                                  " does not match the " + std::to_string(holonomy_gens.size()) +
                                  " holonomy generators");
        for (const auto& t : *affine_parts)
            if (t.size() != dim)
                throw DescriptorError("'" + label + "': affine part has " +
                                      std::to_string(t.size()) + " coordinates, expected " +
                                      std::to_string(dim));
    }
}

std::vector<IntMatrix> enumerate_point_group(const CrystalGroup& g, std::size_t max_order) {
    g.validate();
    std::vector<IntMatrix> elements{IntMatrix::identity(g.dim)};
    std::set<std::vector<mpz_class>> seen{elements.front().data()};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const IntMatrix& gen : g.holonomy_gens) {
            IntMatrix next = elements[head] * gen;
            if (!seen.insert(next.data()).second) continue;
            elements.push_back(std::move(next));
            if (elements.size() > max_order) throw NotFiniteError(max_order);
        }
    }
    return elements;
}

std::size_t fixed_sublattice_rank(const CrystalGroup& g, std::size_t max_order) {
    enumerate_point_group(g, max_order); // validates shapes, unimodularity, finiteness
    if (g.holonomy_gens.empty()) return g.dim;
    const IntMatrix id = IntMatrix::identity(g.dim);
    IntMatrix stacked(0, g.dim);
    for (const IntMatrix& h : g.holonomy_gens) stacked = IntMatrix::vstack(stacked, h - id);
    return g.dim - rank(stacked);
}

std::size_t betti_via_holonomy(const CrystalGroup& g, std::size_t max_order) {
    return fixed_sublattice_rank(g, max_order);
}

void AlmostBieberbachDescriptor::validate() const {
    if (nilpotency_class < 1 || nilpotency_class > 3)
        throw DescriptorError("'" + label + "': nilpotency_class must be 1, 2 or 3, got " +
                              std::to_string(nilpotency_class));
    if (!presentation && !crystal && !underlying) throw MissingDataError(label);
    if (presentation) presentation->validate();
    if (crystal) crystal->validate();
    if (underlying) {
        if (const auto* c = std::get_if<CrystalGroup>(&*underlying)) c->validate();
        if (const auto* p = std::get_if<Presentation>(&*underlying)) p->validate();
    }
}

std::string_view to_string(BettiRoute route) {
    switch (route) {
    case BettiRoute::Presentation:
        return "presentation";
    case BettiRoute::Holonomy:
        return "holonomy";
    case BettiRoute::Underlying:
        return "underlying";
    }
    return "?";
}

BettiResult underlying_betti(const AlmostBieberbachDescriptor& d, std::size_t max_order) {
    d.validate();
    std::vector<BettiResult> routes;
    if (d.presentation) routes.push_back({first_betti(*d.presentation), BettiRoute::Presentation});
    if (d.underlying) {
        if (const auto* p = std::get_if<Presentation>(&*d.underlying))
            routes.push_back({first_betti(*p), BettiRoute::Underlying});
        if (const auto* c = std::get_if<CrystalGroup>(&*d.underlying))
            routes.push_back({betti_via_holonomy(*c, max_order), BettiRoute::Underlying});
    }
    if (d.crystal) routes.push_back({betti_via_holonomy(*d.crystal, max_order), BettiRoute::Holonomy});
    if (routes.empty()) throw MissingDataError(d.label);
    for (std::size_t i = 1; i < routes.size(); ++i)
        if (routes[i].b1 != routes.front().b1)
            throw InconsistentRoutesError(routes.front().b1, routes[i].b1);
    return routes.front();
}

} // namespace flatinv
