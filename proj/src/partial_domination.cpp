#include "roman/partial_domination.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <future>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace roman {

void CountMatrix::add_shifted(const CountMatrix& other, int dr, int dc) {
    assert(other.rows_ + dr <= rows_ && other.cols_ + dc <= cols_);
    for (int r = 0; r < other.rows_; ++r)
        for (int c = 0; c < other.cols_; ++c) {
            const BigCount& x = other.at(r, c);
            if (!x.is_zero()) at(r + dr, c + dc) += x;
        }
}

IncidenceGraph build_domination_instance(const Graph& g) {
    std::vector<LabeledSet> sets;
    sets.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        sets.push_back({{v, SetKind::neighborhood}, closed_neighborhood(g, v), 1});
    return build_incidence_graph({g.n, std::move(sets)});
}

namespace {

// Memo key: the exact pair of remaining red and blue id-sets, packed
// word-wise into inline storage. Large enough for instances with up to 192
// reds and 192 blues, far beyond what an exponential-time search can visit.
constexpr int kMaxKeyWords = 6;

struct MemoKey {
    std::array<uint64_t, kMaxKeyWords> words{};
    uint8_t len = 0;
    size_t hash = 0;

    MemoKey(const VertexSet& reds, const VertexSet& blues) {
        for (uint64_t w : reds.words()) words[len++] = w;
        for (uint64_t w : blues.words()) words[len++] = w;
        uint64_t h = 0x9E3779B97F4A7C15ull;
        for (int i = 0; i < len; ++i) {
            h ^= words[i];
            h *= 0xBF58476D1CE4E5B9ull;
            h ^= h >> 29;
        }
        hash = size_t(h);
    }

    bool operator==(const MemoKey& o) const { return len == o.len && words == o.words; }
};

struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const { return k.hash; }
};

using MemoTable = std::unordered_map<MemoKey, CountMatrix, MemoKeyHash>;

// The r_cnt == 0 base case is cheaper to recompute than to cache.
constexpr int kMemoMinReds = 1;

struct CpscContext {
    const IncidenceGraph& ig;
    MemoTable* table;                 // nullptr in polyspace mode
    std::mutex* table_mu;             // guards table when threads > 1
    std::atomic<int>* spare_threads;  // nullptr when single-threaded
};

CountMatrix cpsc_compute(const CpscContext& ctx, const VertexSet& alive_r, const VertexSet& alive_b);

// Adds the residual matrix for (alive_r, alive_b) into out at offset
// (dj, dl), consulting and filling the memo table in memo mode. Entries are
// never mutated after insertion and unordered_map values are node-stable, so
// references read outside the lock stay valid.
void cpsc_add_result(const CpscContext& ctx, const VertexSet& alive_r, const VertexSet& alive_b,
                     CountMatrix& out, int dj, int dl) {
    if (ctx.table && alive_r.count() >= kMemoMinReds) {
        MemoKey key(alive_r, alive_b);
        const CountMatrix* found = nullptr;
        if (ctx.table_mu) {
            std::lock_guard<std::mutex> lock(*ctx.table_mu);
            auto it = ctx.table->find(key);
            if (it != ctx.table->end()) found = &it->second;
        } else {
            auto it = ctx.table->find(key);
            if (it != ctx.table->end()) found = &it->second;
        }
        if (!found) {
            CountMatrix m = cpsc_compute(ctx, alive_r, alive_b);
            // Idempotent insert: if another thread finished first, keep its
            // (identical) matrix.
            if (ctx.table_mu) {
                std::lock_guard<std::mutex> lock(*ctx.table_mu);
                found = &ctx.table->emplace(key, std::move(m)).first->second;
            } else {
                found = &ctx.table->emplace(key, std::move(m)).first->second;
            }
        }
        out.add_shifted(*found, dj, dl);
    } else {
        out.add_shifted(cpsc_compute(ctx, alive_r, alive_b), dj, dl);
    }
}

// The residual matrix for the live sub-instance: entry (j, l) counts subsets
// of j live reds dominating exactly l live blues. Dimensions are
// (live reds + 1) x (live blues + 1).
CountMatrix cpsc_compute(const CpscContext& ctx, const VertexSet& alive_r,
                         const VertexSet& alive_b) {
    const int r_cnt = alive_r.count();
    const int b_cnt = alive_b.count();
    CountMatrix out(r_cnt + 1, b_cnt + 1);

    if (r_cnt == 0) {
        // Leftover blues can no longer be dominated; they add nothing to l.
        out.at(0, 0) = 1;
        return out;
    }

    VertexSet dead_blues(alive_b.universe_size());
    alive_b.for_each([&](int b) {
        if (!ctx.ig.element_sets[b].intersects(alive_r)) dead_blues.add(b);
    });
    if (!dead_blues.empty()) {
        VertexSet rest_b = alive_b;
        rest_b.subtract(dead_blues);
        cpsc_add_result(ctx, alive_r, rest_b, out, 0, 0);
        return out;
    }

    int dead_red = -1;
    alive_r.for_each([&](int s) {
        if (dead_red < 0 && !ctx.ig.set_members[s].intersects(alive_b)) dead_red = s;
    });
    if (dead_red >= 0) {
        // In or out, dominating nothing: convolve along j with (1 + y).
        VertexSet rest_r = alive_r;
        rest_r.remove(dead_red);
        CountMatrix sub(r_cnt, b_cnt + 1);
        cpsc_add_result(ctx, rest_r, alive_b, sub, 0, 0);
        out.add_shifted(sub, 0, 0);
        out.add_shifted(sub, 1, 0);
        return out;
    }

    // Branch on the red dominating the most live blues.
    int pick = -1, pick_deg = -1;
    alive_r.for_each([&](int s) {
        const int deg = VertexSet::intersection_count(ctx.ig.set_members[s], alive_b);
        if (deg > pick_deg || (deg == pick_deg && ctx.ig.set_labels[s] < ctx.ig.set_labels[pick])) {
            pick = s;
            pick_deg = deg;
        }
    });
    assert(pick >= 0 && pick_deg >= 1);
    VertexSet rest_r = alive_r;
    rest_r.remove(pick);
    VertexSet dominated = ctx.ig.set_members[pick] & alive_b;
    VertexSet take_b = alive_b;
    take_b.subtract(dominated);

    bool spawn = false;
    if (ctx.spare_threads && r_cnt >= 10) {
        if (ctx.spare_threads->fetch_sub(1, std::memory_order_relaxed) > 0)
            spawn = true;
        else
            ctx.spare_threads->fetch_add(1, std::memory_order_relaxed);
    }
    if (spawn) {
        auto fut = std::async(std::launch::async, [&] {
            CountMatrix taken(r_cnt, b_cnt - pick_deg + 1);
            cpsc_add_result(ctx, rest_r, take_b, taken, 0, 0);
            ctx.spare_threads->fetch_add(1, std::memory_order_relaxed);
            return taken;
        });
        cpsc_add_result(ctx, rest_r, alive_b, out, 0, 0);
        out.add_shifted(fut.get(), 1, pick_deg);
    } else {
        cpsc_add_result(ctx, rest_r, take_b, out, 1, pick_deg);
        cpsc_add_result(ctx, rest_r, alive_b, out, 0, 0);
    }
    return out;
}

}  // namespace

PartialCountMatrix cpsc_count(const IncidenceGraph& ig, CpscMode mode, int threads) {
    if (mode == CpscMode::memo) {
        const int words = (ig.set_count() + 63) / 64 + (ig.element_count + 63) / 64;
        if (words > kMaxKeyWords)
            throw std::invalid_argument("memo mode supports at most 192 reds and 192 blues");
    }
    MemoTable table;
    if (mode == CpscMode::memo) table.reserve(1 << 14);
    std::mutex table_mu;
    std::atomic<int> spare(threads - 1);
    CpscContext ctx{ig, mode == CpscMode::memo ? &table : nullptr,
                    (mode == CpscMode::memo && threads > 1) ? &table_mu : nullptr,
                    threads > 1 ? &spare : nullptr};
    return cpsc_compute(ctx, VertexSet::full(ig.set_count()), VertexSet::full(ig.element_count));
}

RdfClassMatrix rdf_class_matrix(const PartialCountMatrix& p, int n) {
    if (p.rows() != n + 1 || p.cols() != n + 1)
        throw std::invalid_argument("partial count matrix must be (n+1) x (n+1)");
    RdfClassMatrix a(n + 1, n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) a.at(j, k) = p.at(j, n - k);
    return a;
}

RomanResult gamma_and_count(const RdfClassMatrix& a) {
    int best = -1;
    BigCount count = 0;
    for (int j = 0; j < a.rows(); ++j)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(j, k).is_zero()) continue;
            const int w = 2 * j + k;
            if (best < 0 || w < best) {
                best = w;
                count = a.at(j, k);
            } else if (w == best) {
                count += a.at(j, k);
            }
        }
    if (best < 0) throw std::logic_error("class matrix has no nonzero entry");
    return {best, count, ""};
}

RomanResult roman_count_via_partial(const Graph& g, CpscMode mode, int threads) {
    const std::string tag = mode == CpscMode::memo ? "partial-memo" : "partial";
    if (g.n == 0) return {0, 1, tag};
    const auto ig = build_domination_instance(g);
    const auto p = cpsc_count(ig, mode, threads);
    auto result = gamma_and_count(rdf_class_matrix(p, g.n));
    result.algorithm = tag;
    return result;
}

}  // namespace roman
