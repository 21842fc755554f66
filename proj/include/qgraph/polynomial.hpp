#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over the integers, coefficients in ascending
// degree order and normalized (no trailing zero coefficients; the zero
// polynomial has an empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending);
    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, int degree);
    static IntPoly x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& leading() const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int i) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const BigInt& c) const;
    bool operator==(const IntPoly&) const = default;

    BigInt eval(const BigInt& x) const;
    IntPoly derivative() const;

    // Quotient of an exact division; throws if the remainder is nonzero.
    IntPoly exact_div(const IntPoly& d) const;

    BigInt content() const;        // gcd of coefficients, nonnegative; 0 for zero poly
    IntPoly primitive_part() const;

    std::string to_string() const;  // human-readable, highest degree first

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

// Primitive gcd, normalized to positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// p with repeated roots stripped: p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

// Sign of p(num / 2^exp2), computed exactly.
int sign_at_dyadic(const IntPoly& p, const BigInt& num, int exp2);

// Number of distinct real roots of p in (lo, hi], by Sturm's theorem.
int count_real_roots(const IntPoly& p, double lo, double hi);

// Largest real root of p in [lo, hi], to absolute error <= 1e-12, by Sturm
// counts and exact dyadic bisection. Throws if no real root lies in range.
double largest_real_root(const IntPoly& p, double lo, double hi);

// Largest real root with an automatic bracket (Cauchy bound).
double largest_real_root(const IntPoly& p);

}  // namespace qgraph
