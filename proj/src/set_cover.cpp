#include "roman/set_cover.hpp"

#include <atomic>
#include <cassert>
#include <future>
#include <stdexcept>

namespace roman {

namespace {

struct CwscContext {
    const IncidenceGraph& ig;
    int w_max;
    std::atomic<int>* spare_threads;  // nullptr when single-threaded
};

void add_into(WeightCountVector& acc, const WeightCountVector& v) {
    for (size_t k = 0; k < acc.size(); ++k)
        if (!v[k].is_zero()) acc[k] += v[k];
}

// Multiply by x^shift. Entries that would move past w_max are provably zero:
// the take-branch only ever shifts by weight already removed from the
// remaining instance.
void shift_up(WeightCountVector& v, int shift) {
    if (shift == 0) return;
    const int w_max = int(v.size()) - 1;
    for (int k = w_max; k >= shift; --k) v[k] = std::move(v[k - shift]);
    for (int k = 0; k < shift; ++k) v[k] = 0;
}

// Universe exhausted: each remaining set is freely in or out. Product of
// (1 + x^weight) over the remaining sets, times x^shift for the sets already
// taken on the way here.
WeightCountVector leaf_product(const CwscContext& ctx, const VertexSet& alive_sets, int shift) {
    WeightCountVector vec(ctx.w_max + 1);
    vec[shift] = 1;
    alive_sets.for_each([&](int s) {
        const int w = ctx.ig.set_weights[s];
        for (int k = ctx.w_max - w; k >= shift; --k)
            if (!vec[k].is_zero()) vec[k + w] += vec[k];
    });
    return vec;
}

WeightCountVector cwsc_rec(const CwscContext& ctx, VertexSet alive_elems, VertexSet alive_sets) {
    int shift = 0;  // total weight of sets forced along this chain
    for (;;) {
        if (alive_elems.empty()) return leaf_product(ctx, alive_sets, shift);

        int forced_elem = -1;
        bool dead_elem = false;
        alive_elems.for_each([&](int e) {
            if (forced_elem >= 0 || dead_elem) return;
            const int deg = VertexSet::intersection_count(ctx.ig.element_sets[e], alive_sets);
            if (deg == 0)
                dead_elem = true;
            else if (deg == 1)
                forced_elem = e;
        });
        if (dead_elem) return WeightCountVector(ctx.w_max + 1);  // uncoverable

        if (forced_elem >= 0) {
            const int s = (ctx.ig.element_sets[forced_elem] & alive_sets).first();
            shift += ctx.ig.set_weights[s];
            alive_sets.remove(s);
            alive_elems.subtract(ctx.ig.set_members[s]);
            continue;
        }

        // Branch on the set covering the most remaining elements.
        int pick = -1, pick_deg = -1;
        alive_sets.for_each([&](int s) {
            const int deg = VertexSet::intersection_count(ctx.ig.set_members[s], alive_elems);
            if (deg > pick_deg || (deg == pick_deg && ctx.ig.set_labels[s] < ctx.ig.set_labels[pick])) {
                pick = s;
                pick_deg = deg;
            }
        });
        assert(pick >= 0 && pick_deg >= 1);

        VertexSet take_elems = alive_elems;
        take_elems.subtract(ctx.ig.set_members[pick]);
        VertexSet rest_sets = alive_sets;
        rest_sets.remove(pick);

        bool spawn = false;
        if (ctx.spare_threads && alive_sets.count() >= 12) {
            if (ctx.spare_threads->fetch_sub(1, std::memory_order_relaxed) > 0)
                spawn = true;
            else
                ctx.spare_threads->fetch_add(1, std::memory_order_relaxed);
        }
        WeightCountVector taken, discarded;
        if (spawn) {
            auto fut = std::async(std::launch::async, [&] {
                auto r = cwsc_rec(ctx, take_elems, rest_sets);
                ctx.spare_threads->fetch_add(1, std::memory_order_relaxed);
                return r;
            });
            discarded = cwsc_rec(ctx, alive_elems, rest_sets);
            taken = fut.get();
        } else {
            taken = cwsc_rec(ctx, take_elems, rest_sets);
            discarded = cwsc_rec(ctx, alive_elems, rest_sets);
        }
        shift_up(taken, ctx.ig.set_weights[pick]);
        add_into(taken, discarded);
        shift_up(taken, shift);
        return taken;
    }
}

}  // namespace

WeightCountVector cwsc_count(const IncidenceGraph& ig, int threads) {
    CwscContext ctx{ig, ig.total_weight(), nullptr};
    std::atomic<int> spare(threads - 1);
    if (threads > 1) ctx.spare_threads = &spare;
    return cwsc_rec(ctx, VertexSet::full(ig.element_count), VertexSet::full(ig.set_count()));
}

const MeasureWeights& MeasureWeights::standard() {
    static const MeasureWeights mw{
        {0, 0, 0.640171, 0.888601, 0.969491, 0.998628, 1.000000, 1.000000},
        {0, 0, 0.815190, 1.218997, 1.362801, 1.402265, 1.402265, 1.402265},
    };
    return mw;
}

double measure(const IncidenceGraph& ig, const MeasureWeights& mw) {
    auto bucket = [](int deg) { return deg > 6 ? 7 : deg; };
    double k = 0.0;
    for (int e = 0; e < ig.element_count; ++e) k += mw.element_weight[bucket(ig.element_degree(e))];
    for (int s = 0; s < ig.set_count(); ++s) k += mw.set_weight[bucket(ig.set_degree(s))];
    return k;
}

RomanResult roman_count_via_cover(const Graph& g, int threads) {
    if (g.n == 0) return {0, 1, "cover"};
    const auto ig = build_incidence_graph(build_roman_cover_instance(g));
    const auto counts = cwsc_count(ig, threads);
    for (size_t k = 0; k < counts.size(); ++k)
        if (!counts[k].is_zero()) return {int(k), counts[k], "cover"};
    throw std::logic_error("Roman cover instance reported no covers");
}

}  // namespace roman
