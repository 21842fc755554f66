#pragma once

#include "qgraph/graph.hpp"
#include "qgraph/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace qgraph {

// Small dense integer matrix. Q-matrices are symmetric; quotient matrices
// share the container with `symmetric` cleared.
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> a;  // row-major
    bool symmetric = false;

    IntMatrix() = default;
    IntMatrix(int dim, bool sym) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0), symmetric(sym) {}

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    static IntMatrix identity(int dim);

    bool operator==(const IntMatrix&) const = default;
};

// Q(G) = D(G) + A(G).
IntMatrix signless_laplacian(const Graph& g);

// det(xI - M) with exact integer coefficients (fraction-free Gaussian
// elimination over Z[x]; every pivot is a monic leading principal minor,
// so no pivoting or fraction is ever needed).
IntPoly char_poly(const IntMatrix& m);

struct PerronVector {
    std::vector<double> entries;  // positive, unit Euclidean norm
    double eigenvalue = 0;
    double residual = 0;  // max-norm of Q x - eigenvalue x
    int iterations = 0;
};

// Largest eigenvalue of Q(G); for disconnected graphs the maximum over
// components. Absolute error well below 1e-10.
double q_index(const Graph& g);

// Perron vector of Q(G) for a connected graph. Throws on disconnected input.
PerronVector perron_vector(const Graph& g);

// Quotient matrix of Q(G0) from the displayed formula: rows
// (n-2k-1, n-2k-2, 1, 0), (2, 2, 0, 0), (1, 0, 2, 1), (0, 0, 1, 1).
IntMatrix reference_quotient_g0(int n, int k);

// 6x6 quotient matrix of Q(C6 o (n1,n2,1,1,1,1)) with the cell order
// (V1, V2, {u3}, {u4}, {v5}, {v6}) along the cycle.
IntMatrix reference_quotient_c6(int n1, int n2);

// g(x) = x (x^3 - (n-2k+4) x^2 + (3n-6k+5) x - (n-2k+4)).
IntPoly reference_g(int n, int k);

// The sextic f(n1, n2, x); requires n1 + n2 = n - 2k - 1 with n1, n2 >= 1.
IntPoly reference_f(int n1, int n2, int k, int n);

}  // namespace qgraph
