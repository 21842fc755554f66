#include "qgraph/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qgraph {

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim, true);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix signless_laplacian(const Graph& g) {
    IntMatrix q(g.order(), true);
    for (int v = 0; v < g.order(); ++v) {
        q.at(v, v) = g.degree(v);
        for (int u : g.neighbors(v)) q.at(v, u) = 1;
    }
    return q;
}

IntPoly char_poly(const IntMatrix& m) {
    int n = m.n;
    if (n == 0) return IntPoly::constant(1);
    // Entries of xI - M as integer polynomials.
    std::vector<IntPoly> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly e = IntPoly::constant(-m.at(i, j));
            if (i == j) e = e + IntPoly::x();
            a[static_cast<std::size_t>(i) * n + j] = std::move(e);
        }
    auto at = [&](int i, int j) -> IntPoly& { return a[static_cast<std::size_t>(i) * n + j]; };

    // Bareiss. The pivot after step k equals the (k+1)-st leading principal
    // minor of xI - M, which is monic of degree k+1, hence never zero and
    // exact division always succeeds.
    IntPoly prev = IntPoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)).exact_div(prev);
        prev = at(k, k);
    }
    return at(n - 1, n - 1);
}

namespace {

// Dominant eigenpair of Q restricted to one connected component, by power
// iteration on Q + I (nonnegative with positive diagonal, hence primitive
// for connected components: convergence is guaranteed). Start vector is
// all-ones; the returned eigenvector is indexed by `verts`.
PerronVector dominant_eigenpair(const Graph& g, const std::vector<int>& verts) {
    const std::size_t n = verts.size();
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> qx(n);
    auto apply_q = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            int v = verts[i];
            double acc = static_cast<double>(g.degree(v)) * in[i];
            std::uint64_t m = g.neighbor_mask(v);
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                acc += in[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])];
            }
            out[i] = acc;
        }
    };

    constexpr double kTol = 1e-12;
    constexpr long kMaxIter = 1000000;
    double theta = 0, res = 0;
    long it = 0;
    for (; it < kMaxIter; ++it) {
        apply_q(x, qx);
        theta = 0;
        for (std::size_t i = 0; i < n; ++i) theta += x[i] * qx[i];  // Rayleigh quotient
        res = 0;
        for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(qx[i] - theta * x[i]));
        if (res <= kTol) break;
        // Next iterate: (Q + I) x, normalized.
        double norm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            qx[i] += x[i];
            norm += qx[i] * qx[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) x[i] = qx[i] / norm;
    }
    if (it >= kMaxIter) throw std::runtime_error("power iteration failed to converge");

    PerronVector out;
    out.entries = std::move(x);
    out.eigenvalue = theta;
    out.residual = res;
    out.iterations = static_cast<int>(it);
    return out;
}

}  // namespace

double q_index(const Graph& g) {
    double best = 0;
    for (std::uint64_t mask : g.component_masks()) {
        std::vector<int> verts;
        std::uint64_t m = mask;
        while (m) {
            verts.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        best = std::max(best, dominant_eigenpair(g, verts).eigenvalue);
    }
    return best;
}

PerronVector perron_vector(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("perron_vector requires a connected graph");
    std::vector<int> verts(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) verts[static_cast<std::size_t>(v)] = v;
    PerronVector pv = dominant_eigenpair(g, verts);
    for (double e : pv.entries)
        if (!(e > 1e-12)) throw std::runtime_error("perron vector entry not positive");
    return pv;
}

IntMatrix reference_quotient_g0(int n, int k) {
    if (k < 2 || n < 2 * k + 3) throw std::invalid_argument("reference_quotient_g0: need k >= 2, n >= 2k+3");
    IntMatrix b(4, false);
    std::int64_t t = n - 2 * k - 2;
    std::int64_t rows[4][4] = {
        {t + 1, t, 1, 0},
        {2, 2, 0, 0},
        {1, 0, 2, 1},
        {0, 0, 1, 1},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b.at(i, j) = rows[i][j];
    return b;
}

IntMatrix reference_quotient_c6(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("reference_quotient_c6: cells must be nonempty");
    IntMatrix b(6, false);
    std::int64_t rows[6][6] = {
        {1 + n2, n2, 0, 0, 0, 1},
        {n1, 1 + n1, 1, 0, 0, 0},
        {0, n2, 1 + n2, 1, 0, 0},
        {0, 0, 1, 2, 1, 0},
        {0, 0, 0, 1, 2, 1},
        {n1, 0, 0, 0, 1, 1 + n1},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) b.at(i, j) = rows[i][j];
    return b;
}

IntPoly reference_g(int n, int k) {
    if (k < 2 || n < 2 * k + 3) throw std::invalid_argument("reference_g: need k >= 2, n >= 2k+3");
    BigInt s = n - 2 * k;
    // x^4 - (s+4) x^3 + (3s+5) x^2 - (s+4) x
    return IntPoly({BigInt(0), -(s + 4), 3 * s + 5, -(s + 4), BigInt(1)});
}

IntPoly reference_f(int n1, int n2, int k, int n) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("reference_f: need n1, n2 >= 1");
    if (n1 + n2 != n - 2 * k - 1)
        throw std::invalid_argument("reference_f: need n1 + n2 = n - 2k - 1");
    BigInt s = n1 + n2, p = BigInt(n1) * n2;
    BigInt c5 = -2 * (s + 4);
    BigInt c4 = s * s + 13 * s + p + 23;
    BigInt c3 = -(5 * s * s + 6 * p + (p + 27) * s + 30);
    BigInt c2 = 6 * s * s + 13 * p + (4 * p + 21) * s + 18;
    BigInt c1 = -(s * s + 12 * p + (3 * p + 5) * s + 4);
    return IntPoly({BigInt(0), c1, c2, c3, c4, c5, BigInt(1)});
}

}  // namespace qgraph
