#include "qgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qgraph {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        add_edge_unchecked(u, v);
    }
}

void Graph::add_edge_unchecked(int u, int v) {
    if (!adjacent(u, v)) {
        adj_[u] |= (std::uint64_t{1} << v);
        adj_[v] |= (std::uint64_t{1} << u);
        ++m_;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    std::uint64_t m = neighbor_mask(v);
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

std::uint64_t Graph::full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool Graph::is_connected() const {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask();
}

std::vector<std::uint64_t> Graph::component_masks() const {
    std::vector<std::uint64_t> comps;
    std::uint64_t left = full_mask();
    while (left) {
        int s = std::countr_zero(left);
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        comps.push_back(seen);
        left &= ~seen;
    }
    return comps;
}

Graph Graph::induced(std::uint64_t mask) const {
    mask &= full_mask();
    std::vector<int> keep;
    std::uint64_t m = mask;
    while (m) {
        keep.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    if (keep.empty()) throw std::invalid_argument("induced subgraph must be nonempty");
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) h.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (adjacent(u, v)) throw std::invalid_argument("edge already present");
    Graph h = *this;
    h.add_edge_unchecked(u, v);
    return h;
}

Graph Graph::without_edge(int u, int v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("edge not present");
    Graph h = *this;
    h.adj_[u] &= ~(std::uint64_t{1} << v);
    h.adj_[v] &= ~(std::uint64_t{1} << u);
    --h.m_;
    return h;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) h.add_edge_unchecked(perm[u], perm[v]);
    if (h.m_ != m_) throw std::invalid_argument("not a permutation");
    return h;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
}

VertexSet VertexSet::from_indices(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::range(int lo, int hi) {
    VertexSet s;
    for (int v = lo; v < hi; ++v) s.add(v);
    return s;
}

void VertexSet::add(int v) {
    if (v < 0 || v >= Graph::kMaxOrder) throw std::out_of_range("vertex index out of range");
    bits |= std::uint64_t{1} << v;
}

bool VertexSet::contains(int v) const { return v >= 0 && v < 64 && ((bits >> v) & 1); }

int VertexSet::count() const { return std::popcount(bits); }

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    std::uint64_t m = bits;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

int degree(const Graph& g, int v) { return g.degree(v); }
int max_degree(const Graph& g) { return g.max_degree(); }
bool is_connected(const Graph& g) { return g.is_connected(); }

int edges_between(const Graph& g, VertexSet s, VertexSet t) {
    if (s.bits & t.bits) throw std::invalid_argument("edges_between: sets overlap");
    if ((s.bits | t.bits) & ~g.full_mask())
        throw std::out_of_range("edges_between: set exceeds graph order");
    int count = 0;
    std::uint64_t m = s.bits;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        count += std::popcount(g.neighbor_mask(v) & t.bits);
    }
    return count;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    if (total > Graph::kMaxOrder) throw std::invalid_argument("disjoint_union: order cap exceeded");
    std::vector<std::pair<int, int>> edges;
    int off = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) edges.emplace_back(off + u, off + v);
        off += p.order();
    }
    return Graph(total, edges);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.size() >= 10 && s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    std::size_t pos = 0;
    int n;
    if (s[0] == '~') {
        if (s.size() < 4 || s[1] == '~') throw std::invalid_argument("unsupported graph6 order");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 1 || n > Graph::kMaxOrder) throw std::invalid_argument("graph6 order out of range");
    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
                int c = s[pos++] - 63;
                if (c < 0 || c > 63) throw std::invalid_argument("invalid graph6 character");
                acc = c;
                nbits = 6;
            }
            if ((acc >> 5) & 1) edges.emplace_back(i, j);
            acc = (acc << 1) & 63;
            --nbits;
        }
    }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list(const std::string& text, int order) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("bad edge-list line: " + line);
        edges.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    int n = order > 0 ? order : maxv + 1;
    if (n < 1) throw std::invalid_argument("edge list defines no vertices");
    return Graph(n, edges);
}

}  // namespace qgraph
