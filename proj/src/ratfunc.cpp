#include "partav/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace partav {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
    using boost::multiprecision::abs;
    return boost::multiprecision::gcd(abs(a), abs(b));
}

} // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    std::vector<BigInt> v;
    if (c != 0) v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(BigInt c, int degree) {
    if (c == 0) return {};
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::substitute_power(int j) const {
    if (j < 1) fail(ErrorKind::BadArgument, "substitute_power needs j >= 1");
    if (j == 1 || is_zero()) return *this;
    std::vector<BigInt> v(coeffs_.size() * static_cast<std::size_t>(j), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(j)] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (mag == 1) && i > 0;
        if (!unit) out += mag.str();
        if (i >= 1) {
            if (!unit) out += "*";
            out += "z";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const BigInt& c : p.coeffs()) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    BigInt g = content(p);
    if (p.coeffs().back() < 0) g = -g;
    std::vector<BigInt> v(p.coeffs());
    for (auto& c : v) c /= g;
    return IntPoly(std::move(v));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::logic_error("exact_div by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("exact_div: degree mismatch");
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lead = b.coeffs().back();
    for (int d = a.degree(); d >= b.degree();) {
        const BigInt& top = rem[static_cast<std::size_t>(d)];
        if (top == 0) {
            --d;
            continue;
        }
        if (top % lead != 0) throw std::logic_error("exact_div: not divisible");
        const BigInt q = top / lead;
        const int shift = d - b.degree();
        quot[static_cast<std::size_t>(shift)] = q;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(i) + static_cast<std::size_t>(shift)] -= q * b.coeff(i);
        --d;
    }
    for (const BigInt& c : rem)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
    return IntPoly(std::move(quot));
}

namespace {

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const BigInt& lead = b.coeffs().back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const BigInt top = r.coeffs().back();
        // lead * r - top * z^shift * b kills the leading term
        r = IntPoly(IntPoly::constant(lead) * r - IntPoly::monomial(top, shift) * b);
    }
    return r;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::from_int(long long v) {
    return RatFunc(IntPoly::constant(BigInt(v)), IntPoly::constant(1));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    const IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    BigInt c = int_gcd(content(num_), content(den_));
    // sign anchor: lowest-order nonzero denominator coefficient positive
    int low = 0;
    while (den_.coeff(low) == 0) ++low;
    if (den_.coeff(low) < 0) c = -c;
    if (c != 1) {
        std::vector<BigInt> nv(num_.coeffs()), dv(den_.coeffs());
        for (auto& x : nv) x /= c;
        for (auto& x : dv) x /= c;
        num_ = IntPoly(std::move(nv));
        den_ = IntPoly(std::move(dv));
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::substitute_z_power(int j) const {
    return RatFunc(num_.substitute_power(j), den_.substitute_power(j));
}

std::vector<BigRat> RatFunc::series(int N) const {
    if (den_.coeff(0) == 0) fail(ErrorKind::PoleAtZero, "series needs den(0) != 0");
    if (N < 0) fail(ErrorKind::BadArgument, "series needs N >= 0");
    const BigRat d0(den_.coeff(0));
    std::vector<BigRat> c(static_cast<std::size_t>(N) + 1, BigRat(0));
    for (int n = 0; n <= N; ++n) {
        BigRat acc(num_.coeff(n));
        for (int i = 1; i <= n && i <= den_.degree(); ++i)
            acc -= BigRat(den_.coeff(i)) * c[static_cast<std::size_t>(n - i)];
        c[static_cast<std::size_t>(n)] = acc / d0;
    }
    return c;
}

std::string RatFunc::str() const {
    if (den_ == IntPoly::constant(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool rf_equal(const RatFunc& a, const RatFunc& b) {
    return a.num() * b.den() == b.num() * a.den();
}

} // namespace partav
