#include "roman/roman_core.hpp"

#include <cassert>

namespace roman {

bool is_rdf(const Graph& g, const RdfAssignment& f) {
    assert(int(f.labels.size()) == g.n);
    for (int v = 0; v < g.n; ++v) {
        if (f.labels[v] != 0) continue;
        bool defended = false;
        for (int u : g.adj[v]) {
            if (f.labels[u] == 2) {
                defended = true;
                break;
            }
        }
        if (!defended) return false;
    }
    return true;
}

int rdf_weight(const RdfAssignment& f) {
    int w = 0;
    for (uint8_t x : f.labels) w += x;
    return w;
}

RomanResult brute_force_roman(const Graph& g, int limit) {
    const int n = g.n;
    if (n > limit)
        throw InstanceTooLargeError("brute force limited to n <= " + std::to_string(limit) +
                                    ", got n = " + std::to_string(n));
    if (n == 0) return {0, 1, "brute"};

    // Neighborhood masks; n <= limit keeps everything inside one word.
    assert(n <= 63);
    std::vector<uint64_t> nbr(n, 0);
    for (auto [u, v] : g.edges) {
        nbr[u] |= 1ull << v;
        nbr[v] |= 1ull << u;
    }

    std::vector<uint8_t> labels(n, 0);
    uint64_t v2_mask = 0;
    int weight = 0;          // maintained incrementally by the odometer
    int best = n + 1;        // all-ones (weight n) is always an RDF
    BigCount count = 0;

    for (;;) {
        if (weight <= best) {
            bool valid = true;
            for (int v = 0; v < n && valid; ++v)
                if (labels[v] == 0 && (nbr[v] & v2_mask) == 0) valid = false;
            if (valid) {
                if (weight < best) {
                    best = weight;
                    count = 1;
                } else {
                    ++count;
                }
            }
        }
        // Mixed-radix increment, vertex 0 least significant.
        int d = 0;
        while (d < n && labels[d] == 2) {
            labels[d] = 0;
            v2_mask &= ~(1ull << d);
            weight -= 2;
            ++d;
        }
        if (d == n) break;
        ++labels[d];
        ++weight;
        if (labels[d] == 2) v2_mask |= 1ull << d;
    }
    return {best, count, "brute"};
}

}  // namespace roman
