#pragma once

#include "qgraph/graph.hpp"
#include "qgraph/partitions.hpp"

#include <utility>
#include <vector>

namespace qgraph {

// Positive multiplicities, one per vertex of the base graph.
using BlowupVector = std::vector<int>;

// Standard families. Index layout: cycle(n) has i ~ i+1 (mod n); path(n) is
// 0-1-...-n-1; star(s) has center 0 and leaves 1..s.
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);

// Blow-up H o r: vertex i of h becomes the independent cell
// [offset_i, offset_i + r_i), offsets cumulative in base-vertex order;
// cells are fully joined exactly when the base vertices are adjacent.
Graph blow_up(const Graph& h, const BlowupVector& r);

// The cells of blow_up(h, r), in base-vertex order.
VertexPartition blow_up_partition(const BlowupVector& r);

// Merge vertex u1 of g1 with vertex u2 of g2. g1 keeps its indices; the
// merged vertex is u1; vertex w of g2 (w != u2) becomes
// g1.order() + (w < u2 ? w : w - 1).
Graph identify(const Graph& g1, int u1, const Graph& g2, int u2);

// C_{2k+3} with the center of a star on m-2k-3 leaves identified into cycle
// vertex 0. Order m, size m. For m = 2k+3 this is the plain cycle.
Graph cycle_star(int k, int m);

// Orbit partition of cycle_star(k, m): {hub}, {leaves} (omitted when empty),
// and the reflection pairs {i, 2k+3-i} for i = 1..k+1.
VertexPartition cycle_star_orbit_partition(int k, int m);

// Join of a clique on vertices 0..k-1 with the independent set k..n-1;
// the plus variant adds the edge (k, k+1).
Graph s_nk(int n, int k);
Graph s_nk_plus(int n, int k);

// The graph G0 on n-2k+4 vertices together with its canonical 4-cell
// partition. Layout (t = n-2k-2): hubs V1 = {0, 1}; independent set
// V2 = {2..t+1} fully joined to both hubs; V3 = {t+2, t+3} matched to the
// hubs (0~t+2, 1~t+3); pendant cell V4 = {t+4, t+5} matched to V3.
std::pair<Graph, VertexPartition> g0(int n, int k);

// Vertex map embedding g0(n, k) into blow_up(C_{2k+3}, (n-2k-2, 1, ..., 1))
// as a proper subgraph: position i holds the image of g0 vertex i.
std::vector<int> g0_embedding(int n, int k);

// Replace edge (from, v) by (to, v). The Perron-entry hypothesis of the
// rotation lemma is the caller's business; the transformation is total.
Graph rotate_edge(const Graph& g, int v, int from, int to);

// Replace edge (u, v) by the length-2 path u-w-v, w being the new last vertex.
Graph subdivide_edge(const Graph& g, int u, int v);

// Path (or closed walk) whose interior vertices all have degree 2. For the
// closed case the first vertex is repeated at the end.
struct InternalPath {
    std::vector<int> vertices;
    bool closed = false;
};

// All maximal internal paths: endpoints of degree >= 3, interior degree 2
// (closed ones pass a single branch vertex and are flagged `closed`).
std::vector<InternalPath> find_internal_paths(const Graph& g);

// Delete the interior of the chain and join its endpoints by an edge.
// Requires >= 3 vertices, degree-2 interior, distinct non-adjacent
// endpoints; the chain may be any degree-2 stretch of an internal path.
Graph contract_path_to_edge(const Graph& g, const InternalPath& p);

}  // namespace qgraph
