#include "qgraph/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qgraph {

namespace {

// Exact decomposition of a finite double as num * 2^exp2.
void double_to_dyadic(double x, BigInt& num, int& exp2) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite bound");
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    // 53 mantissa bits make m * 2^53 integral.
    num = BigInt(static_cast<long long>(std::ldexp(m, 53)));
    exp2 = e - 53;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(BigInt(1), 1); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigInt IntPoly::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
    std::vector<BigInt> v = coeffs_;
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<BigInt> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<int>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<BigInt> rem = coeffs_;
    int dd = d.degree();
    int qd = degree() - dd;
    if (qd < 0) {
        if (is_zero()) return IntPoly();
        throw std::invalid_argument("inexact polynomial division");
    }
    std::vector<BigInt> q(static_cast<std::size_t>(qd) + 1, BigInt(0));
    for (int i = qd; i >= 0; --i) {
        BigInt& top = rem[static_cast<std::size_t>(i + dd)];
        if (top == 0) continue;
        if (top % d.leading() != 0) throw std::invalid_argument("inexact polynomial division");
        BigInt f = top / d.leading();
        q[static_cast<std::size_t>(i)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i + j)] -= f * d.coefficients()[static_cast<std::size_t>(j)];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::invalid_argument("inexact polynomial division");
    return IntPoly(std::move(q));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) g = gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt c = content();
    std::vector<BigInt> v = coeffs_;
    for (auto& x : v) x /= c;
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigInt c = coefficient(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder scaled by |lc(b)|^(deg a - deg b + 1); the positive
// multiplier keeps signs usable for Sturm chains.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    BigInt lc = abs(b.leading());
    int delta = a.degree() - b.degree() + 1;
    if (delta < 0) return a;
    BigInt scale = 1;
    for (int i = 0; i < delta; ++i) scale *= lc;
    std::vector<BigInt> rem = a.scaled(scale).coefficients();
    IntPoly r(std::move(rem));
    // Long division, dropping the quotient.
    std::vector<BigInt> rc = r.coefficients();
    int dd = b.degree();
    for (int i = r.degree() - dd; i >= 0; --i) {
        BigInt top = rc[static_cast<std::size_t>(i + dd)];
        if (top == 0) continue;
        if (top % b.leading() != 0) throw std::logic_error("pseudo-division not exact");
        BigInt f = top / b.leading();
        for (int j = 0; j <= dd; ++j)
            rc[static_cast<std::size_t>(i + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
    return IntPoly(std::move(rc));
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.is_zero() ? a : a.primitive_part();
    b = b.is_zero() ? b : b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        if (!r.is_zero()) r = r.primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading() < 0 ? -a : a;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 1) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p.exact_div(g);
}

int sign_at_dyadic(const IntPoly& p, const BigInt& num, int exp2) {
    if (p.is_zero()) return 0;
    // p(num * 2^exp2) * 2^(-exp2 * deg) = sum c_i num^i 2^(exp2 * (i - deg))... scale
    // so everything is integral: multiply through by 2^(-exp2 * deg) when exp2 < 0,
    // i.e. evaluate sum c_i num^i 2^(s*(deg-i)) with s = -exp2.
    int deg = p.degree();
    BigInt acc = 0;
    if (exp2 <= 0) {
        int s = -exp2;
        // Horner in num with a common denominator of 2^(s*deg).
        for (int i = deg; i >= 0; --i) acc = acc * num + (p.coefficient(i) << (s * (deg - i)));
    } else {
        BigInt x = num << exp2;
        acc = p.eval(x);
    }
    if (acc == 0) return 0;
    return acc > 0 ? 1 : -1;
}

namespace {

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    IntPoly a = squarefree_part(p).primitive_part();
    chain.push_back(a);
    IntPoly b = a.derivative();
    if (!b.is_zero()) b = b.primitive_part();
    while (!b.is_zero()) {
        chain.push_back(b);
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        if (r.is_zero()) break;
        b = (-r).primitive_part();
    }
    return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const BigInt& num, int exp2) {
    int vars = 0, prev = 0;
    for (const IntPoly& q : chain) {
        int s = sign_at_dyadic(q, num, exp2);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Distinct roots in (a, b]. With the skip-zeros convention, V(x) equals the
// right limit V(x+eps), so v(a) - v(b) already includes b when b is a root.
int roots_in(const std::vector<IntPoly>& chain, const BigInt& an, int ae, const BigInt& bn, int be) {
    return sign_variations(chain, an, ae) - sign_variations(chain, bn, be);
}

}  // namespace

int count_real_roots(const IntPoly& p, double lo, double hi) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    BigInt an, bn;
    int ae, be;
    double_to_dyadic(lo, an, ae);
    double_to_dyadic(hi, bn, be);
    // Closed interval [lo, hi]: (lo, hi] plus lo itself when lo is a root.
    int inside = roots_in(chain, an, ae, bn, be);
    if (sign_at_dyadic(chain.front(), an, ae) == 0) ++inside;
    return inside;
}

double largest_real_root(const IntPoly& p, double lo, double hi) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.degree() == 0) throw std::invalid_argument("no real root in searched range");
    if (!(lo < hi)) throw std::invalid_argument("empty search range");
    auto chain = sturm_chain(p);

    BigInt an, bn;
    int ae, be;
    double_to_dyadic(lo, an, ae);
    double_to_dyadic(hi, bn, be);
    if (roots_in(chain, an, ae, bn, be) < 1) {
        if (sign_at_dyadic(chain.front(), an, ae) == 0) return lo;  // lo is the only root in range
        throw std::invalid_argument("no real root in searched range");
    }

    double a = lo, b = hi;
    while (b - a > 1e-13) {
        double mid = a + (b - a) / 2;
        if (mid <= a || mid >= b) break;  // double resolution exhausted
        BigInt mn;
        int me;
        double_to_dyadic(mid, mn, me);
        double_to_dyadic(b, bn, be);
        if (roots_in(chain, mn, me, bn, be) >= 1)
            a = mid;
        else
            b = mid;
    }
    return a + (b - a) / 2;
}

double largest_real_root(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) throw std::invalid_argument("no real root");
    // Cauchy bound: all roots lie in [-(1 + max|c_i|/|lead|), +...].
    double maxratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        double r = std::abs(BigRational(p.coefficient(i), p.leading()).convert_to<double>());
        maxratio = std::max(maxratio, r);
    }
    double bound = 1.0 + maxratio;
    return largest_real_root(p, -bound, bound);
}

}  // namespace qgraph
