#pragma once

#include "qgraph/graph.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/spectral.hpp"

#include <vector>

namespace qgraph {

// Ordered partition of the vertex set into nonempty, pairwise disjoint cells.
struct VertexPartition {
    std::vector<std::vector<int>> cells;

    int cell_count() const { return static_cast<int>(cells.size()); }
    // Throws unless cells are nonempty, disjoint, and cover 0..n-1.
    void validate(int n) const;
};

// Quotient of a matrix under a partition. Entries are exact rationals
// (block row-sum averages); `equitable` is set only when every block has
// a constant row sum, in which case every entry is an integer.
struct QuotientMatrix {
    int k = 0;
    std::vector<BigRational> b;  // row-major
    bool equitable = false;

    BigRational& at(int i, int j) { return b[static_cast<std::size_t>(i) * k + j]; }
    const BigRational& at(int i, int j) const { return b[static_cast<std::size_t>(i) * k + j]; }

    // Requires equitable (entries integral).
    IntMatrix to_int_matrix() const;
};

QuotientMatrix quotient(const IntMatrix& m, const VertexPartition& p);
bool is_equitable(const IntMatrix& m, const VertexPartition& p);

struct QuotientEigenvalueReport {
    double q = 0;              // q_index of the graph
    double quotient_root = 0;  // largest real root of char_poly(quotient)
    double abs_diff = 0;
};

// Lemma check: for a connected graph and an equitable partition of Q(g),
// the quotient's largest eigenvalue equals q(g). Throws if the partition
// is not equitable or the graph is disconnected.
QuotientEigenvalueReport verify_quotient_eigenvalue(const Graph& g, const VertexPartition& p);

}  // namespace qgraph
