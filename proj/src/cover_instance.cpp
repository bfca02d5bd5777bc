#include "roman/cover_instance.hpp"

#include <stdexcept>

namespace roman {

CoverInstance make_cover_instance(int universe_size, std::vector<LabeledSet> sets) {
    if (universe_size < 0) throw std::invalid_argument("negative universe size");
    VertexSet covered(universe_size);
    for (const auto& s : sets) {
        if (s.weight <= 0) throw std::invalid_argument("set weight must be positive");
        if (s.members.universe_size() != universe_size)
            throw std::invalid_argument("set members sized for a different universe");
        covered |= s.members;
    }
    if (covered.count() != universe_size)
        throw std::invalid_argument("universe element not covered by any set");
    return {universe_size, std::move(sets)};
}

CoverInstance build_roman_cover_instance(const Graph& g) {
    std::vector<LabeledSet> sets;
    sets.reserve(2 * size_t(g.n));
    for (int v = 0; v < g.n; ++v) {
        VertexSet self(g.n);
        self.add(v);
        sets.push_back({{v, SetKind::singleton}, std::move(self), 1});
    }
    for (int v = 0; v < g.n; ++v)
        sets.push_back({{v, SetKind::neighborhood}, closed_neighborhood(g, v), 2});
    // Every element is in its own singleton, so the instance is always valid.
    return {g.n, std::move(sets)};
}

IncidenceGraph build_incidence_graph(const CoverInstance& inst) {
    IncidenceGraph ig;
    ig.element_count = inst.universe_size;
    ig.element_sets.assign(inst.universe_size, VertexSet(int(inst.sets.size())));
    ig.set_members.reserve(inst.sets.size());
    for (size_t s = 0; s < inst.sets.size(); ++s) {
        const auto& ls = inst.sets[s];
        ig.set_members.push_back(ls.members);
        ig.set_weights.push_back(ls.weight);
        ig.set_labels.push_back(ls.label);
        ls.members.for_each([&](int e) { ig.element_sets[e].add(int(s)); });
    }
    return ig;
}

}  // namespace roman
