#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgraph {

// Simple undirected graph on at most 64 vertices. Adjacency is one 64-bit
// neighbor mask per vertex. Instances are immutable once constructed;
// transformations build and return new graphs.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const;
    std::uint64_t neighbor_mask(int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool is_connected() const;

    // All-vertices bitmask (bits 0..n-1 set).
    std::uint64_t full_mask() const;

    // Vertex sets of the connected components, in order of smallest member.
    std::vector<std::uint64_t> component_masks() const;

    // Subgraph induced by `mask`; kept vertices are renumbered in
    // ascending index order.
    Graph induced(std::uint64_t mask) const;

    // Copy with one edge added/removed. Preconditions checked.
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    // Relabel by `perm`: vertex v of this graph becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;

    void add_edge_unchecked(int u, int v);
    void check_vertex(int v) const;
};

// Subset of the vertices of one graph, stored as a bitmask. Indices must
// lie in 0..order-1 of the graph it is used with.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t mask) : bits(mask) {}
    VertexSet(std::initializer_list<int> vs);

    static VertexSet from_indices(const std::vector<int>& vs);
    static VertexSet range(int lo, int hi);  // [lo, hi)

    void add(int v);
    bool contains(int v) const;
    int count() const;
    std::vector<int> indices() const;

    bool operator==(const VertexSet&) const = default;
};

int degree(const Graph& g, int v);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);

// Number of edges with one end in s and the other in t. s and t must be
// disjoint subsets of g's vertices.
int edges_between(const Graph& g, VertexSet s, VertexSet t);

Graph disjoint_union(const std::vector<Graph>& parts);

// graph6 encoding (McKay's format). The long form is used for n >= 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Plain "u v" per line. Isolated vertices beyond max index + 1 are lost
// unless an explicit order is passed when reading.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text, int order = -1);

}  // namespace qgraph
