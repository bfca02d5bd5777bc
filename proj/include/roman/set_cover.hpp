#pragma once

#include <array>
#include <vector>

#include "roman/bigcount.hpp"
#include "roman/cover_instance.hpp"
#include "roman/roman_core.hpp"

namespace roman {

/// counts[k] = exact number of sub-collections covering the universe with
/// total weight k, for k = 0..W_max where W_max is the total weight of all
/// sets in the instance.
using WeightCountVector = std::vector<BigCount>;

/// Branch-and-reduce counter over the incidence graph. Polynomial space: the
/// only state is the recursion stack.
///
/// Rules, applied in order on the live sub-instance:
///   - universe empty: every remaining set is freely in or out, so the result
///     is the coefficient vector of the product of (1 + x^weight(S));
///   - an element in no remaining set can never be covered: zero vector;
///   - an element in exactly one set forces that set taken;
///   - otherwise branch on a maximum-degree set (tie-break: smallest label),
///     summing the take and discard subresults.
///
/// If threads > 1, independent branches may be evaluated concurrently; the
/// join is exact vector addition, so the result does not depend on threading.
WeightCountVector cwsc_count(const IncidenceGraph& ig, int threads = 1);

/// Degree-indexed weights for the branching-complexity measure. Index i holds
/// the weight for degree i; degrees above 6 share the final bucket.
struct MeasureWeights {
    std::array<double, 8> element_weight;
    std::array<double, 8> set_weight;

    static const MeasureWeights& standard();
};

/// k = sum of element_weight(deg e) over elements plus set_weight(deg S) over
/// sets. A diagnostic for how hard an instance is for cwsc_count; for Roman
/// instances it is at most 2.402265 * n.
double measure(const IncidenceGraph& ig, const MeasureWeights& mw = MeasureWeights::standard());

/// Full pipeline: build the Roman cover instance, count covers of every
/// weight, return the least weight with a nonzero count and that count.
RomanResult roman_count_via_cover(const Graph& g, int threads = 1);

}  // namespace roman
