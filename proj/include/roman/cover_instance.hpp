#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "roman/bitset.hpp"
#include "roman/graph.hpp"

namespace roman {

enum class SetKind : uint8_t { singleton = 0, neighborhood = 1 };

/// Identifies a set by the vertex it came from. Two sets may have identical
/// members but distinct labels (e.g. {v} and N[v] for isolated v); labels
/// give the collection multiset semantics and a total order for tie-breaks:
/// smaller origin first, singleton before neighborhood.
struct SetLabel {
    int origin = 0;
    SetKind kind = SetKind::singleton;

    auto operator<=>(const SetLabel&) const = default;
};

struct LabeledSet {
    SetLabel label;
    VertexSet members;  // over universe elements
    int weight = 1;
};

/// Universe 0..universe_size-1 plus a list (multiset) of labeled weighted
/// subsets of it.
struct CoverInstance {
    int universe_size = 0;
    std::vector<LabeledSet> sets;
};

/// Validates that members stay inside the universe, weights are positive, and
/// every element is covered by at least one set. Throws std::invalid_argument.
CoverInstance make_cover_instance(int universe_size, std::vector<LabeledSet> sets);

/// The weighted instance whose minimum-weight covers correspond to minimum
/// Roman dominating functions: universe V, and for every vertex v the sets
/// {v} with weight 1 and N[v] with weight 2. Exactly 2n sets.
CoverInstance build_roman_cover_instance(const Graph& g);

/// Bipartite element-set incidence: (e, S) is an edge iff e is a member of S.
/// Elements are the blue side, sets the red side.
struct IncidenceGraph {
    int element_count = 0;
    std::vector<VertexSet> element_sets;  // per element: sets containing it
    std::vector<VertexSet> set_members;   // per set: its elements
    std::vector<int> set_weights;
    std::vector<SetLabel> set_labels;

    int set_count() const { return int(set_members.size()); }
    int element_degree(int e) const { return element_sets[e].count(); }
    int set_degree(int s) const { return set_members[s].count(); }
    int total_weight() const {
        int w = 0;
        for (int x : set_weights) w += x;
        return w;
    }
};

IncidenceGraph build_incidence_graph(const CoverInstance& inst);

}  // namespace roman
