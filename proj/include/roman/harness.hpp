#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "roman/graph.hpp"
#include "roman/roman_core.hpp"

namespace roman {

struct CorpusGraph {
    std::string name;
    Graph graph;
};

/// Paths and complete graphs for 1 <= n <= max_n, cycles for 3 <= n <= max_n.
std::vector<CorpusGraph> family_corpus(int max_n);

/// G(n, p) instances: for each n, each p (by index) and each trial, a fresh
/// seed derived from `seed` via derive_seed. Deterministic.
std::vector<CorpusGraph> gnp_corpus(const std::vector<int>& ns, const std::vector<double>& ps,
                                    int trials, uint64_t seed);

/// Stable seed derivation for corpus entries (SplitMix64 chaining).
uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t c);

struct AlgorithmSpec {
    std::string name;
    std::function<RomanResult(const Graph&)> run;
};

struct Mismatch {
    std::string instance_name;
    std::string edgelist;  // serialized witness for reproduction
    std::vector<RomanResult> results;
};

struct CrosscheckReport {
    int instances_checked = 0;
    std::optional<Mismatch> mismatch;

    bool all_agree() const { return !mismatch.has_value(); }
};

/// Runs every algorithm on every instance and stops at the first disagreement
/// in (gamma_r, count).
CrosscheckReport run_crosscheck(const std::vector<CorpusGraph>& corpus,
                                const std::vector<AlgorithmSpec>& algorithms);

double median(std::vector<double> values);

/// Least-squares fit of t = c * base^n through (n, t) points with t > 0;
/// returns the fitted base. Requires at least two distinct n values.
double fit_exponential_base(const std::vector<std::pair<double, double>>& points);

}  // namespace roman
