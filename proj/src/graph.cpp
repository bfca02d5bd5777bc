#include "roman/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace roman {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

void check_endpoints(int u, int v, int n, int line_no) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        fail(line_no, "vertex index out of range (n=" + std::to_string(n) + ")");
    if (u == v) fail(line_no, "self-loop " + std::to_string(u) + " rejected");
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex index out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u > v) std::swap(u, v);
        uniq.emplace(u, v);
    }
    Graph g;
    g.n = n;
    g.edges.assign(uniq.begin(), uniq.end());
    g.adj.resize(n);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::out_of_range("vertex out of range");
    VertexSet s(g.n);
    s.add(v);
    for (int u : g.adj[v]) s.add(u);
    return s;
}

namespace {

Graph parse_edgelist(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok[0] == '#') continue;
        if (n < 0) {
            std::istringstream hdr(line);
            if (!(hdr >> n >> m) || n < 0 || m < 0) fail(line_no, "expected header \"n m\"");
            continue;
        }
        if (seen == m) fail(line_no, "more than the declared " + std::to_string(m) + " edges");
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) fail(line_no, "expected edge \"u v\"");
        check_endpoints(u, v, n, line_no);
        edges.emplace_back(u, v);
        ++seen;
    }
    if (n < 0) fail(line_no, "missing header \"n m\"");
    if (seen != m)
        fail(line_no, "declared " + std::to_string(m) + " edges but found " + std::to_string(seen));
    return make_graph(n, edges);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (n >= 0) fail(line_no, "duplicate problem line");
            std::string kind;
            if (!(ss >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                fail(line_no, "expected \"p edge n m\"");
            continue;
        }
        if (tok == "e") {
            if (n < 0) fail(line_no, "edge before problem line");
            if (seen == m) fail(line_no, "more than the declared " + std::to_string(m) + " edges");
            int u, v;
            if (!(ss >> u >> v)) fail(line_no, "expected \"e u v\"");
            // DIMACS is 1-indexed; internal vertices are 0-indexed.
            check_endpoints(u - 1, v - 1, n, line_no);
            edges.emplace_back(u - 1, v - 1);
            ++seen;
            continue;
        }
        fail(line_no, "unrecognized line \"" + tok + " ...\"");
    }
    if (n < 0) fail(line_no, "missing problem line");
    if (seen != m)
        fail(line_no, "declared " + std::to_string(m) + " edges but found " + std::to_string(seen));
    return make_graph(n, edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(in) : parse_dimacs(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream ss(text);
    return parse_graph(ss, format);
}

std::string render_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::edgelist) {
        out << g.n << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

Graph generate_graph(GraphFamily family, int n, double p, uint64_t seed) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case GraphFamily::path:
            if (n < 1) throw std::invalid_argument("path requires n >= 1");
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            break;
        case GraphFamily::cycle:
            if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(0, n - 1);
            break;
        case GraphFamily::complete:
            if (n < 1) throw std::invalid_argument("complete requires n >= 1");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case GraphFamily::gnp: {
            if (n < 0) throw std::invalid_argument("gnp requires n >= 0");
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
            SplitMix64 rng{seed};
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.next_unit() < p) edges.emplace_back(u, v);
            break;
        }
    }
    return make_graph(n, edges);
}

}  // namespace roman
