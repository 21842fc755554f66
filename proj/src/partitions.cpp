#include "qgraph/partitions.hpp"

#include <cmath>
#include <stdexcept>

namespace qgraph {

void VertexPartition::validate(int n) const {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int total = 0;
    for (const auto& cell : cells) {
        if (cell.empty()) throw std::invalid_argument("partition has an empty cell");
        for (int v : cell) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition index out of range");
            if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("partition cells overlap");
            seen[static_cast<std::size_t>(v)] = true;
            ++total;
        }
    }
    if (total != n) throw std::invalid_argument("partition does not cover the vertex set");
}

IntMatrix QuotientMatrix::to_int_matrix() const {
    if (!equitable) throw std::logic_error("quotient is not equitable; entries may be fractional");
    IntMatrix m(k, false);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const BigRational& r = at(i, j);
            if (denominator(r) != 1) throw std::logic_error("equitable quotient with non-integer entry");
            m.at(i, j) = numerator(r).convert_to<std::int64_t>();
        }
    return m;
}

QuotientMatrix quotient(const IntMatrix& m, const VertexPartition& p) {
    p.validate(m.n);
    int k = p.cell_count();
    QuotientMatrix q;
    q.k = k;
    q.b.assign(static_cast<std::size_t>(k) * k, BigRational(0));
    q.equitable = true;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            // Row sums of block M_{i,j}; equitable iff constant.
            long long total = 0;
            bool constant = true;
            long long first = 0;
            bool have_first = false;
            for (int u : p.cells[static_cast<std::size_t>(i)]) {
                long long row = 0;
                for (int v : p.cells[static_cast<std::size_t>(j)]) row += m.at(u, v);
                total += row;
                if (!have_first) {
                    first = row;
                    have_first = true;
                } else if (row != first) {
                    constant = false;
                }
            }
            if (!constant) q.equitable = false;
            q.at(i, j) = BigRational(total, static_cast<long long>(p.cells[static_cast<std::size_t>(i)].size()));
        }
    }
    return q;
}

bool is_equitable(const IntMatrix& m, const VertexPartition& p) { return quotient(m, p).equitable; }

QuotientEigenvalueReport verify_quotient_eigenvalue(const Graph& g, const VertexPartition& p) {
    if (!g.is_connected())
        throw std::invalid_argument("verify_quotient_eigenvalue requires a connected graph");
    QuotientMatrix q = quotient(signless_laplacian(g), p);
    if (!q.equitable) throw std::invalid_argument("partition is not equitable for Q(g)");
    QuotientEigenvalueReport r;
    r.q = q_index(g);
    // The dominant eigenvalue of Q is at most 2 * max degree; pad the bracket.
    double hi = 2.0 * g.max_degree() + 2.0;
    r.quotient_root = largest_real_root(char_poly(q.to_int_matrix()), -1.0, hi);
    r.abs_diff = std::abs(r.q - r.quotient_root);
    return r;
}

}  // namespace qgraph
