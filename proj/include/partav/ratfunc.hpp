#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partav/bigint.hpp"
#include "partav/errors.hpp"

namespace partav {

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeffs[i] is the coefficient of z^i; no trailing zeros are stored and the
/// zero polynomial is the empty list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// z -> z^j (j >= 1).
    IntPoly substitute_power(int j) const;

    std::string str() const; // "1 - 2*z + z^3"

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
BigInt content(const IntPoly& p);
/// p divided by +-content so the result has content 1 and positive leading
/// coefficient; zero stays zero.
IntPoly primitive_part(const IntPoly& p);
/// Exact quotient; throws std::logic_error when b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
/// Primitive polynomial gcd (primitive pseudo-remainder sequence), with
/// positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Reduced ratio of integer polynomials.  Canonical form: gcd(num, den) = 1,
/// joint integer content 1, and the lowest-order nonzero coefficient of den
/// positive.  All arithmetic is exact.
class RatFunc {
public:
    RatFunc() : num_(), den_(IntPoly::constant(1)) {}
    RatFunc(IntPoly num, IntPoly den);
    static RatFunc from_int(long long v);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc substitute_z_power(int j) const;

    /// Maclaurin coefficients c_0..c_N; requires den(0) != 0.
    std::vector<BigRat> series(int N) const;

    std::string str() const; // "num / den" with expanded polynomials

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    bool operator==(const RatFunc&) const = default;

private:
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

/// Equality through cross-multiplication (equivalent to comparing canonical
/// forms, kept separate as a second route).
bool rf_equal(const RatFunc& a, const RatFunc& b);

} // namespace partav
