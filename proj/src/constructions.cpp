#include "qgraph/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qgraph {

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs leaves >= 0");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph blow_up(const Graph& h, const BlowupVector& r) {
    if (static_cast<int>(r.size()) != h.order())
        throw std::invalid_argument("blow_up: multiplicity vector length must equal base order");
    for (int x : r)
        if (x < 1) throw std::invalid_argument("blow_up: multiplicities must be positive");
    int total = std::accumulate(r.begin(), r.end(), 0);
    std::vector<int> offset(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) offset[i + 1] = offset[i] + r[i];
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : h.edges())
        for (int i = 0; i < r[static_cast<std::size_t>(a)]; ++i)
            for (int j = 0; j < r[static_cast<std::size_t>(b)]; ++j)
                e.emplace_back(offset[static_cast<std::size_t>(a)] + i,
                               offset[static_cast<std::size_t>(b)] + j);
    return Graph(total, e);
}

VertexPartition blow_up_partition(const BlowupVector& r) {
    VertexPartition p;
    int off = 0;
    for (int x : r) {
        std::vector<int> cell(static_cast<std::size_t>(x));
        std::iota(cell.begin(), cell.end(), off);
        p.cells.push_back(std::move(cell));
        off += x;
    }
    return p;
}

Graph identify(const Graph& g1, int u1, const Graph& g2, int u2) {
    if (u1 < 0 || u1 >= g1.order() || u2 < 0 || u2 >= g2.order())
        throw std::out_of_range("identify: vertex index out of range");
    int n1 = g1.order();
    auto map2 = [&](int w) { return w == u2 ? u1 : n1 + (w < u2 ? w : w - 1); };
    std::vector<std::pair<int, int>> e = g1.edges();
    for (auto [a, b] : g2.edges()) e.emplace_back(map2(a), map2(b));
    return Graph(n1 + g2.order() - 1, e);
}

Graph cycle_star(int k, int m) {
    if (k < 1) throw std::invalid_argument("cycle_star: need k >= 1");
    if (m < 2 * k + 3) throw std::invalid_argument("cycle_star: need m >= 2k+3");
    return identify(cycle(2 * k + 3), 0, star(m - 2 * k - 3), 0);
}

VertexPartition cycle_star_orbit_partition(int k, int m) {
    if (k < 1 || m < 2 * k + 3) throw std::invalid_argument("cycle_star_orbit_partition: bad parameters");
    VertexPartition p;
    p.cells.push_back({0});
    int c = 2 * k + 3;
    if (m > c) {
        std::vector<int> leaves(static_cast<std::size_t>(m - c));
        std::iota(leaves.begin(), leaves.end(), c);
        p.cells.push_back(std::move(leaves));
    }
    for (int i = 1; i <= k + 1; ++i) p.cells.push_back({i, c - i});
    return p;
}

Graph s_nk(int n, int k) {
    if (k < 1 || n <= k) throw std::invalid_argument("s_nk: need n > k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
        for (int j = k; j < n; ++j) e.emplace_back(i, j);
    }
    return Graph(n, e);
}

Graph s_nk_plus(int n, int k) {
    if (n - k < 2) throw std::invalid_argument("s_nk_plus: independent set needs >= 2 vertices");
    return s_nk(n, k).with_edge(k, k + 1);
}

std::pair<Graph, VertexPartition> g0(int n, int k) {
    if (k < 2 || n < 2 * k + 3) throw std::invalid_argument("g0: need k >= 2, n >= 2k+3");
    int t = n - 2 * k - 2;
    std::vector<std::pair<int, int>> e;
    for (int w = 2; w < 2 + t; ++w) {
        e.emplace_back(0, w);
        e.emplace_back(1, w);
    }
    e.emplace_back(0, t + 2);
    e.emplace_back(1, t + 3);
    e.emplace_back(t + 2, t + 4);
    e.emplace_back(t + 3, t + 5);
    Graph g(t + 6, e);
    VertexPartition p;
    p.cells.push_back({0, 1});
    std::vector<int> mid(static_cast<std::size_t>(t));
    std::iota(mid.begin(), mid.end(), 2);
    p.cells.push_back(std::move(mid));
    p.cells.push_back({t + 2, t + 3});
    p.cells.push_back({t + 4, t + 5});
    return {std::move(g), std::move(p)};
}

std::vector<int> g0_embedding(int n, int k) {
    if (k < 2 || n < 2 * k + 3) throw std::invalid_argument("g0_embedding: need k >= 2, n >= 2k+3");
    int t = n - 2 * k - 2;
    // Blow-up layout: cell [0, t), then singletons c_2 = t .. c_{2k+3} = t+2k+1.
    std::vector<int> map(static_cast<std::size_t>(t + 6));
    map[0] = t;               // hub 0 -> c_2
    map[1] = t + 2 * k + 1;   // hub 1 -> c_{2k+3}
    for (int i = 0; i < t; ++i) map[static_cast<std::size_t>(2 + i)] = i;
    map[static_cast<std::size_t>(t + 2)] = t + 1;          // s_0 -> c_3
    map[static_cast<std::size_t>(t + 3)] = t + 2 * k;      // s_1 -> c_{2k+2}
    map[static_cast<std::size_t>(t + 4)] = t + 2;          // p_0 -> c_4
    map[static_cast<std::size_t>(t + 5)] = t + 2 * k - 1;  // p_1 -> c_{2k+1}
    return map;
}

Graph rotate_edge(const Graph& g, int v, int from, int to) {
    if (to == v) throw std::invalid_argument("rotate_edge: target equals pivot");
    if (!g.adjacent(from, v)) throw std::invalid_argument("rotate_edge: edge (from, v) missing");
    if (g.adjacent(to, v)) throw std::invalid_argument("rotate_edge: edge (to, v) already present");
    return g.without_edge(from, v).with_edge(to, v);
}

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("subdivide_edge: edge missing");
    int w = g.order();
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) e.emplace_back(a, b);
    e.emplace_back(u, w);
    e.emplace_back(w, v);
    return Graph(g.order() + 1, e);
}

std::vector<InternalPath> find_internal_paths(const Graph& g) {
    std::vector<InternalPath> out;
    std::set<std::vector<int>> seen;
    for (int b = 0; b < g.order(); ++b) {
        if (g.degree(b) < 3) continue;
        for (int u : g.neighbors(b)) {
            std::vector<int> walk = {b};
            int prev = b, cur = u;
            while (g.degree(cur) == 2) {
                walk.push_back(cur);
                std::uint64_t nb = g.neighbor_mask(cur) & ~(std::uint64_t{1} << prev);
                prev = cur;
                cur = std::countr_zero(nb);
            }
            walk.push_back(cur);
            if (g.degree(cur) < 3) continue;  // dead end; not an internal path
            InternalPath p;
            p.vertices = walk;
            p.closed = (cur == b);
            // Each path is discovered from both ends; keep one orientation.
            std::vector<int> key = walk;
            std::vector<int> rev(walk.rbegin(), walk.rend());
            if (rev < key) key = rev;
            if (seen.insert(key).second) {
                if (rev < p.vertices) p.vertices = rev;
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

Graph contract_path_to_edge(const Graph& g, const InternalPath& p) {
    const auto& vs = p.vertices;
    if (vs.size() < 3) throw std::invalid_argument("contract: need at least 3 vertices");
    int a = vs.front(), b = vs.back();
    if (a == b) throw std::invalid_argument("contract: endpoints must be distinct");
    if (g.adjacent(a, b)) throw std::invalid_argument("contract: endpoints already adjacent");
    std::uint64_t interior = 0;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.adjacent(vs[i], vs[i + 1])) throw std::invalid_argument("contract: not a path");
        if (i > 0) {
            if (g.degree(vs[i]) != 2) throw std::invalid_argument("contract: interior degree must be 2");
            interior |= std::uint64_t{1} << vs[i];
        }
    }
    // Renumber the kept vertices in ascending order.
    std::vector<int> newindex(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!((interior >> v) & 1)) newindex[static_cast<std::size_t>(v)] = next++;
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (!((interior >> u) & 1) && !((interior >> v) & 1))
            e.emplace_back(newindex[static_cast<std::size_t>(u)], newindex[static_cast<std::size_t>(v)]);
    e.emplace_back(newindex[static_cast<std::size_t>(a)], newindex[static_cast<std::size_t>(b)]);
    return Graph(next, e);
}

}  // namespace qgraph
