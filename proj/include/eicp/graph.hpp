#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eicp/bitset.hpp"

namespace eicp {

/// Thrown when an input file violates its format.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a caller breaks an API precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Undirected edge, stored with u < v so it can serve as a set key.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw ContractViolation("Edge: self-loop {" + std::to_string(a) + "}");
    }

    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

/// Immutable simple undirected graph. Vertices are dense 0-based ids;
/// original input labels are kept for reporting. Neighbor lists are sorted;
/// for small graphs a bitset row per vertex backs O(n/w) intersections.
class Graph {
public:
    /// Adjacency bitset rows are materialized up to this vertex count.
    static constexpr int kBitsetRowLimit = 8192;

    Graph() = default;

    static Graph from_edges(int n, const std::vector<Edge>& edges,
                            std::vector<int64_t> labels = {}) {
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        std::vector<Edge> es = edges;
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        for (const Edge& e : es) {
            if (e.u < 0 || e.v >= n)
                throw ContractViolation("Graph::from_edges: vertex id out of range");
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        g.m_ = int64_t(es.size());
        if (labels.empty()) {
            g.labels_.resize(n);
            for (int v = 0; v < n; ++v) g.labels_[v] = v;
        } else {
            if (int(labels.size()) != n)
                throw ContractViolation("Graph::from_edges: label vector size mismatch");
            g.labels_ = std::move(labels);
        }
        if (n <= kBitsetRowLimit) {
            g.bits_.assign(n, Bitset(n));
            for (int v = 0; v < n; ++v)
                for (int w : g.adj_[v]) g.bits_[v].set(w);
        }
        return g;
    }

    int num_vertices() const { return n_; }
    int64_t num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return int(adj_[v].size());
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        if (!bits_.empty()) return bits_[u].test(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool has_bit_rows() const { return !bits_.empty(); }
    const Bitset& neighbor_bits(int v) const {
        check_vertex(v);
        return bits_[v];
    }

    int64_t label(int v) const {
        check_vertex(v);
        return labels_[v];
    }
    const std::vector<int64_t>& labels() const { return labels_; }

    /// All edges in canonical sorted order.
    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(size_t(m_));
        for (int u = 0; u < n_; ++u)
            for (int w : adj_[u])
                if (u < w) es.push_back(Edge(u, w));
        return es;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw ContractViolation("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> bits_;
    std::vector<int64_t> labels_;
};

struct ParseStats {
    int64_t duplicate_edges = 0;
    int64_t self_loops = 0;
};

namespace detail {

inline bool parse_int64(const std::string& tok, int64_t& out) {
    if (tok.empty()) return false;
    size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

[[noreturn]] inline void parse_fail(int64_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace detail

/// DIMACS clique format: `c` comments, one `p edge <n> <m>` header, then
/// `e <u> <v>` lines with 1-based labels. Duplicate edges (and reversed
/// orientations) collapse to one.
inline Graph parse_dimacs(std::istream& in, ParseStats* stats = nullptr) {
    std::string line;
    int64_t line_no = 0;
    int64_t n = -1;
    std::set<Edge> edges;
    ParseStats local;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) detail::parse_fail(line_no, "duplicate problem line");
            std::string fmt, ntok, mtok;
            int64_t m_declared;
            if (!(ls >> fmt >> ntok >> mtok) || fmt != "edge" ||
                !detail::parse_int64(ntok, n) || !detail::parse_int64(mtok, m_declared) ||
                n < 0)
                detail::parse_fail(line_no, "malformed problem line (expected 'p edge <n> <m>')");
            continue;
        }
        if (tag == "e") {
            if (n < 0) detail::parse_fail(line_no, "edge line before problem line");
            std::string utok, vtok;
            int64_t u, v;
            if (!(ls >> utok >> vtok) || !detail::parse_int64(utok, u) ||
                !detail::parse_int64(vtok, v))
                detail::parse_fail(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                detail::parse_fail(line_no, "vertex label outside 1.." + std::to_string(n));
            if (u == v) detail::parse_fail(line_no, "self-loop on vertex " + std::to_string(u));
            if (!edges.insert(Edge(int(u - 1), int(v - 1))).second) ++local.duplicate_edges;
            continue;
        }
        detail::parse_fail(line_no, "unrecognized line type '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing 'p edge' problem line");
    std::vector<int64_t> labels(static_cast<size_t>(n));
    for (int64_t v = 0; v < n; ++v) labels[size_t(v)] = v + 1;
    if (stats) *stats = local;
    return Graph::from_edges(int(n), std::vector<Edge>(edges.begin(), edges.end()),
                             std::move(labels));
}

/// Plain edge list: integer pairs, one per line; `%` and `#` start comments.
/// Labels seen are densely relabeled in sorted order; duplicates and
/// self-loops are dropped and counted.
inline Graph parse_edgelist(std::istream& in, bool one_indexed, ParseStats* stats = nullptr) {
    std::string line;
    int64_t line_no = 0;
    std::set<int64_t> labels_seen;
    std::vector<std::pair<int64_t, int64_t>> raw;
    ParseStats local;
    const int64_t min_label = one_indexed ? 1 : 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        std::vector<int64_t> nums;
        while (ls >> tok) {
            if (tok[0] == '%' || tok[0] == '#') break;
            int64_t x;
            if (!detail::parse_int64(tok, x))
                detail::parse_fail(line_no, "non-integer token '" + tok + "'");
            nums.push_back(x);
        }
        if (nums.empty()) continue;
        if (nums.size() != 2) detail::parse_fail(line_no, "expected exactly two labels");
        for (int64_t x : nums)
            if (x < min_label)
                detail::parse_fail(line_no, "label " + std::to_string(x) + " below " +
                                                std::to_string(min_label));
        labels_seen.insert(nums[0]);
        labels_seen.insert(nums[1]);
        raw.emplace_back(nums[0], nums[1]);
    }
    std::vector<int64_t> labels(labels_seen.begin(), labels_seen.end());
    std::vector<Edge> edges;
    std::set<Edge> dedup;
    auto id_of = [&](int64_t lab) {
        return int(std::lower_bound(labels.begin(), labels.end(), lab) - labels.begin());
    };
    for (auto [a, b] : raw) {
        if (a == b) {
            ++local.self_loops;
            continue;
        }
        Edge e(id_of(a), id_of(b));
        if (dedup.insert(e).second)
            edges.push_back(e);
        else
            ++local.duplicate_edges;
    }
    if (stats) *stats = local;
    const int n = int(labels.size());
    return Graph::from_edges(n, edges, std::move(labels));
}

/// Canonical DIMACS echo: header plus sorted `e` lines, 1-based internal ids.
inline void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

/// Residual graph (V, E \ f). Every member of f must be an edge of g.
inline Graph remove_edges(const Graph& g, const EdgeSet& f) {
    for (const Edge& e : f)
        if (!g.has_edge(e.u, e.v))
            throw ContractViolation("remove_edges: {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} is not an edge of the graph");
    std::vector<Edge> kept;
    kept.reserve(size_t(g.num_edges()));
    for (const Edge& e : g.edges())
        if (!f.count(e)) kept.push_back(e);
    return Graph::from_edges(g.num_vertices(), kept, g.labels());
}

/// Subgraph induced by s, densely relabeled in sorted order of s. The i-th
/// new vertex corresponds to the i-th smallest member of s; that mapping is
/// written to back_map when given, and original labels carry over.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s,
                              std::vector<int>* back_map = nullptr) {
    std::vector<int> keep = s;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep) g.check_vertex(v);
    std::vector<int> pos(size_t(g.num_vertices()), -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[size_t(keep[i])] = int(i);
    std::vector<Edge> edges;
    std::vector<int64_t> labels(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        labels[i] = g.label(keep[i]);
        for (int w : g.neighbors(keep[i]))
            if (pos[size_t(w)] > int(i)) edges.push_back(Edge(int(i), pos[size_t(w)]));
    }
    if (back_map) *back_map = keep;
    return Graph::from_edges(int(keep.size()), edges, std::move(labels));
}

/// N(u) ∩ N(v), exact, sorted.
inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw ContractViolation("common_neighbors: u == v");
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace eicp
