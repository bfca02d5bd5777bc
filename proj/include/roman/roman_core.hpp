#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "roman/bigcount.hpp"
#include "roman/graph.hpp"

namespace roman {

/// Assignment f : V -> {0,1,2}, stored per vertex. The induced partition is
/// (V0, V1, V2) with Vi = {v | f(v) = i}.
struct RdfAssignment {
    std::vector<uint8_t> labels;

    VertexSet with_label(int value) const {
        VertexSet s(int(labels.size()));
        for (size_t v = 0; v < labels.size(); ++v)
            if (labels[v] == value) s.add(int(v));
        return s;
    }
};

/// True iff every vertex labeled 0 has a neighbor labeled 2.
bool is_rdf(const Graph& g, const RdfAssignment& f);

/// |V1| + 2|V2|.
int rdf_weight(const RdfAssignment& f);

struct RomanResult {
    int gamma_r = 0;
    BigCount count = 0;
    std::string algorithm;

    bool same_value(const RomanResult& o) const {
        return gamma_r == o.gamma_r && count == o.count;
    }
};

class InstanceTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBruteLimit = 16;

/// 3^n enumeration: the oracle every other algorithm is checked against.
/// Assignments are visited as a mixed-radix counter over vertex labels with
/// vertex 0 as the least significant digit. Throws InstanceTooLargeError when
/// n exceeds the limit. n = 0 yields (0, 1): the empty function is vacuously
/// an RDF.
RomanResult brute_force_roman(const Graph& g, int limit = kDefaultBruteLimit);

}  // namespace roman
