#include "roman/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace roman {

uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t c) {
    SplitMix64 rng{base};
    rng.state ^= rng.next() + a;
    rng.state ^= rng.next() + b;
    rng.state ^= rng.next() + c;
    return rng.next();
}

std::vector<CorpusGraph> family_corpus(int max_n) {
    std::vector<CorpusGraph> corpus;
    for (int n = 1; n <= max_n; ++n)
        corpus.push_back({"path_n" + std::to_string(n), generate_graph(GraphFamily::path, n)});
    for (int n = 3; n <= max_n; ++n)
        corpus.push_back({"cycle_n" + std::to_string(n), generate_graph(GraphFamily::cycle, n)});
    for (int n = 1; n <= max_n; ++n)
        corpus.push_back({"complete_n" + std::to_string(n), generate_graph(GraphFamily::complete, n)});
    return corpus;
}

std::vector<CorpusGraph> gnp_corpus(const std::vector<int>& ns, const std::vector<double>& ps,
                                    int trials, uint64_t seed) {
    std::vector<CorpusGraph> corpus;
    for (int n : ns)
        for (size_t pi = 0; pi < ps.size(); ++pi)
            for (int t = 0; t < trials; ++t) {
                const uint64_t s = derive_seed(seed, uint64_t(n), pi, uint64_t(t));
                std::ostringstream name;
                name << "gnp_n" << n << "_p" << ps[pi] << "_t" << t;
                corpus.push_back({name.str(), generate_graph(GraphFamily::gnp, n, ps[pi], s)});
            }
    return corpus;
}

CrosscheckReport run_crosscheck(const std::vector<CorpusGraph>& corpus,
                                const std::vector<AlgorithmSpec>& algorithms) {
    CrosscheckReport report;
    for (const auto& entry : corpus) {
        std::vector<RomanResult> results;
        results.reserve(algorithms.size());
        for (const auto& alg : algorithms) {
            auto r = alg.run(entry.graph);
            r.algorithm = alg.name;
            results.push_back(std::move(r));
        }
        ++report.instances_checked;
        for (size_t i = 1; i < results.size(); ++i) {
            if (!results[i].same_value(results[0])) {
                report.mismatch = Mismatch{entry.name,
                                           render_graph(entry.graph, GraphFormat::edgelist),
                                           std::move(results)};
                return report;
            }
        }
    }
    return report;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(values.begin(), values.end());
    const size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

double fit_exponential_base(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("need at least two points to fit");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, t] : points) {
        if (t <= 0) throw std::invalid_argument("runtimes must be positive to fit a growth base");
        const double y = std::log(t);
        sx += n;
        sy += y;
        sxx += n * n;
        sxy += n * y;
    }
    const double m = double(points.size());
    const double denom = m * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("need at least two distinct n values");
    const double slope = (m * sxy - sx * sy) / denom;
    return std::exp(slope);
}

}  // namespace roman
