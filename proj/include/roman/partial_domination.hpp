#pragma once

#include <cassert>
#include <vector>

#include "roman/bigcount.hpp"
#include "roman/cover_instance.hpp"
#include "roman/roman_core.hpp"

namespace roman {

/// Dense matrix of exact counts, row-major.
class CountMatrix {
public:
    CountMatrix() = default;
    CountMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigCount& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[size_t(r) * cols_ + c];
    }
    const BigCount& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[size_t(r) * cols_ + c];
    }

    /// this[r + dr][c + dc] += other[r][c] for every nonzero entry of other.
    void add_shifted(const CountMatrix& other, int dr, int dc);

    bool operator==(const CountMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigCount> data_;
};

/// p[j][l] = number of subsets of j red vertices dominating exactly l blue
/// vertices, 0 <= j <= |R|, 0 <= l <= |B|.
using PartialCountMatrix = CountMatrix;

/// a[j][k] = number of RDFs with |V2| = j, |V1| = k and no V1-V2 edge.
using RdfClassMatrix = CountMatrix;

/// Unweighted domination instance: blue side = V, one red set N[v] per vertex
/// (multiset semantics: true twins stay distinct), incidence (b, N[v]) iff
/// b is in N[v]. Every blue vertex has degree >= 1 since b is in N[b].
IncidenceGraph build_domination_instance(const Graph& g);

enum class CpscMode { polyspace, memo };

/// Branch-and-reduce counter of partial red-blue dominating sets over an
/// incidence graph (blue = elements, red = sets).
///
/// Rules, applied in order on the live sub-instance:
///   - no red vertices left: p[0][0] = 1 (leftover blues are never dominated
///     and contribute to no l);
///   - a blue vertex of degree 0 is removed;
///   - a red vertex of degree 0 is in or out, dominating nothing: remove it
///     and convolve the subresult along j with (1 + y);
///   - otherwise branch on a maximum-degree red vertex (tie-break: smallest
///     label): taking it removes it and its blue neighborhood, shifting j by
///     one and l by the number of blues it dominated; discarding removes it
///     alone. Subresults combine by shifted entrywise addition.
///
/// memo mode caches subresults keyed by the exact pair of remaining red and
/// blue id-sets; both modes return identical matrices.
PartialCountMatrix cpsc_count(const IncidenceGraph& ig, CpscMode mode, int threads = 1);

/// a[j][k] = p[j][n-k]. Throws std::invalid_argument unless p is
/// (n+1) x (n+1).
RdfClassMatrix rdf_class_matrix(const PartialCountMatrix& p, int n);

/// gamma_R = min {2j + k : a[j][k] > 0}, count = sum of a[j][k] over that
/// minimum. The all-ones class a[0][n] = 1 guarantees a nonzero entry.
RomanResult gamma_and_count(const RdfClassMatrix& a);

/// Full pipeline: domination instance, partial counts, class matrix, minimum
/// extraction. n = 0 yields (0, 1).
RomanResult roman_count_via_partial(const Graph& g, CpscMode mode, int threads = 1);

}  // namespace roman
