#include "partav/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "partav/enumeration.hpp"

namespace partav {

double zeta(int k) {
    static const double table[] = {
        1.64493406684822643647241516665, // zeta(2)
        1.20205690315959428539973816151,
        1.08232323371113819151600369654,
        1.03692775514336992633136548646,
        1.01734306198444913971451792979,
        1.00834927738192282683979754985,
        1.00407735619794433937868523851,
        1.00200839282608221441785276923,
        1.00099457512781808533714595890, // zeta(10)
    };
    if (k < 2 || k > 10)
        fail(ErrorKind::BadArgument, "zeta table covers k = 2..10, got " + std::to_string(k));
    return table[k - 2];
}

namespace {

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

double log_pow(double x, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= std::log(x);
    return out;
}

} // namespace

BigInt sigma(int k, long long n) {
    if (k < 0 || n < 1) fail(ErrorKind::BadArgument, "sigma needs k >= 0 and n >= 1");
    BigInt total = 0;
    for (long long d : divisors_of(n)) {
        BigInt term = 1;
        for (int i = 0; i < k; ++i) term *= d;
        total += term;
    }
    return total;
}

double sigma_prime_m1(long long n) {
    if (n < 1) fail(ErrorKind::BadArgument, "sigma_prime_m1 needs n >= 1");
    double total = 0.0;
    for (long long d : divisors_of(n))
        total += std::log(static_cast<double>(d)) / static_cast<double>(d);
    return total;
}

long long divisor_summatory(long long n) {
    if (n < 0) fail(ErrorKind::BadArgument, "divisor_summatory needs n >= 0");
    // sum_{m<=n} sigma_0(m) = 2 sum_{d<=sqrt(n)} floor(n/d) - floor(sqrt(n))^2
    long long root = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while ((root + 1) * (root + 1) <= n) ++root;
    while (root * root > n) --root;
    long long acc = 0;
    for (long long d = 1; d <= root; ++d) acc += n / d;
    return 2 * acc - root * root;
}

long long sigma1_summatory(long long n) {
    if (n < 0) fail(ErrorKind::BadArgument, "sigma1_summatory needs n >= 0");
    // sum_{m<=n} sigma_1(m) = sum_{d<=n} d * floor(n/d), in O(sqrt n) blocks
    long long acc = 0;
    for (long long d = 1; d <= n;) {
        const long long q = n / d;
        const long long hi = n / q; // largest d' with n/d' == q
        // sum of d..hi times q
        acc += q * ((hi * (hi + 1) / 2) - ((d - 1) * d / 2));
        d = hi + 1;
    }
    return acc;
}

StrictShape shape_of(const Partition& mu) {
    const ShapeClass cls = classify(mu);
    if (!cls.is_strict || mu.empty()) fail(ErrorKind::NotStrict, "shape_of needs a strict pattern");
    if (mu.part(0) < 2) fail(ErrorKind::NotStrict, "shape_of needs mu_1 >= 2");
    StrictShape s;
    s.k = mu.part(0) - 1;
    while (s.ell < s.k && mu.part(static_cast<std::size_t>(s.ell) + 1) == s.k - s.ell) ++s.ell;
    for (std::size_t i = static_cast<std::size_t>(s.ell) + 1; i < mu.size(); ++i)
        s.tail.push_back(mu.parts()[i]);
    s.is_staircase = cls.is_staircase;
    return s;
}

Partition reconstruct(const StrictShape& s) {
    std::vector<int> parts;
    for (int j = 0; j <= s.ell; ++j) parts.push_back(s.k + 1 - j);
    for (int a : s.tail)
        if (a > 0) parts.push_back(a);
    return Partition(std::move(parts));
}

namespace {

BigInt factorial_i(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace

Prediction prediction_of(const Partition& mu) {
    const StrictShape s = shape_of(mu);
    Prediction p;
    if (s.is_staircase) {
        p.sigma_index = s.k - 1;
        if (s.k == 1) return p; // sigma_0(n) exactly
        p.log_power = s.k;
        p.zeta_index = s.k;
        p.constant = s.k == 2 ? BigRat(1, 2)
                              : BigRat(1, factorial_i(s.k) * factorial_i(s.k - 1));
        return p;
    }
    BigInt denom_product = 1;
    const int klow = s.k - s.ell;
    for (int j = 0; j < klow; ++j) {
        const int aj = j < static_cast<int>(s.tail.size()) ? s.tail[static_cast<std::size_t>(j)] : 0;
        const long long factor = klow - aj - j;
        if (factor <= 0)
            fail(ErrorKind::DegenerateProduct,
                 "nonpositive factor in the leading-constant product (shape bug)");
        denom_product *= factor;
    }
    p.n_power = s.k - 1;
    p.log_power = s.ell;
    p.constant = BigRat(1, factorial_i(s.ell) * factorial_i(s.k - 1) * denom_product);
    return p;
}

double evaluate(const Prediction& p, long long n) {
    if (n < 2) fail(ErrorKind::BadArgument, "prediction evaluation needs n >= 2");
    const double nd = static_cast<double>(n);
    double value = p.constant.convert_to<double>();
    value *= std::pow(nd, p.n_power) * log_pow(nd, p.log_power);
    if (p.sigma_index >= 0) value *= to_double(sigma(p.sigma_index, n));
    if (p.zeta_index >= 2) value /= zeta(p.zeta_index);
    return value;
}

double predict(const Partition& mu, long long n) { return evaluate(prediction_of(mu), n); }

std::vector<std::pair<std::string, double>> predict_variants(const Partition& mu, long long n) {
    std::vector<std::pair<std::string, double>> out;
    out.emplace_back("primary", predict(mu, n));
    const StrictShape s = shape_of(mu);
    if (s.is_staircase && s.k >= 3) {
        // variant dividing by k! zeta(k) only (the tabulated form)
        Prediction p = prediction_of(mu);
        p.constant = BigRat(1, factorial_i(s.k));
        out.emplace_back("table", evaluate(p, n));
    }
    return out;
}

namespace {

// nearest integer of p/q (q > 0), ties to even
BigInt round_half_even(const BigInt& p, const BigInt& q) {
    BigInt fl = p / q;
    if (p < 0 && fl * q != p) --fl; // floor for negatives
    const BigInt rem2 = (p - fl * q) * 2;
    if (rem2 > q) return fl + 1;
    if (rem2 < q) return fl;
    return (fl % 2 == 0) ? fl : fl + 1;
}

BigInt ceil_div(const BigInt& p, const BigInt& q) {
    BigInt fl = p / q;
    if (p > 0 && fl * q != p) ++fl;
    return fl;
}

} // namespace

std::optional<BigInt> closed_form(const Partition& mu, long long n) {
    if (n < 1) fail(ErrorKind::BadArgument, "closed_form needs n >= 1");
    const std::string key = mu.str();
    const BigInt N(n);
    const int sign = (n % 2 == 0) ? 1 : -1;
    if (key == "1") return BigInt(0);
    if (key == "2") return BigInt(1);
    if (key == "2,1") return sigma(0, n);
    if (key == "3") return BigInt(n / 2 + 1);
    if (key == "3,1") return BigInt(n);
    if (key == "4") return round_half_even(N * N + 6 * N + 9, BigInt(12));
    if (key == "4,1") return (2 * N * N + 10 * N + 3 + sign * (2 * N - 3)) / 16;
    if (key == "4,2") return ceil_div(N * N + 3, BigInt(4));
    if (key == "5")
        return round_half_even(2 * N * N * N + 30 * N * N + (135 + 9 * sign) * N + 188 + 36 * sign,
                               BigInt(288));
    return std::nullopt;
}

BigInt av32_exact(long long n) {
    if (n < 1) fail(ErrorKind::BadArgument, "av32_exact needs n >= 1");
    return BigInt(1) - n + divisor_summatory(n);
}

BigInt av321_exact(long long n) {
    return BigInt(d_count(Partition::parse("3,2,1"), n)) + sigma(0, n);
}

std::vector<RatioRow> ratio_report(const Partition& mu, const std::vector<long long>& ns) {
    std::vector<RatioRow> rows;
    const std::string key = mu.str();
    for (long long n : ns) {
        RatioRow row;
        row.n = n;
        if (auto cf = closed_form(mu, n)) {
            row.observed = *cf;
            row.source = "closed-form";
        } else if (key == "3,2") {
            row.observed = av32_exact(n);
            row.source = "divisor-sum identity";
        } else if (key == "3,2,1") {
            row.observed = av321_exact(n);
            row.source = "rectangular decomposition";
        } else if (n <= kDefaultEnumCap) {
            row.observed = av_count(mu, n);
            row.source = "enumeration";
        } else {
            fail(ErrorKind::NoExactSource,
                 "no exact counter reaches n = " + std::to_string(n) + " for " + key);
        }
        row.predicted = predict(mu, n);
        row.ratio = to_double(row.observed) / row.predicted;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<std::vector<BigRat>> fit_linear_recurrence(const std::vector<BigInt>& seq,
                                                         int order, std::size_t fit_len) {
    if (order < 1) fail(ErrorKind::BadArgument, "recurrence order must be >= 1");
    fit_len = std::min(fit_len, seq.size());
    if (fit_len <= static_cast<std::size_t>(order)) return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(order);
    const std::size_t m = fit_len - k; // equations
    // augmented matrix: rows a(n-1..n-k) | a(n)
    std::vector<std::vector<BigRat>> aug(m, std::vector<BigRat>(k + 1));
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t n = k + r;
        for (std::size_t i = 1; i <= k; ++i) aug[r][i - 1] = BigRat(seq[n - i]);
        aug[r][k] = BigRat(seq[n]);
    }
    // exact Gauss-Jordan
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && rank < m; ++c) {
        std::size_t sel = rank;
        while (sel < m && aug[sel][c] == 0) ++sel;
        if (sel == m) continue;
        std::swap(aug[rank], aug[sel]);
        const BigRat inv = aug[rank][c];
        for (auto& x : aug[rank]) x /= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || aug[r][c] == 0) continue;
            const BigRat f = aug[r][c];
            for (std::size_t c2 = c; c2 <= k; ++c2) aug[r][c2] -= f * aug[rank][c2];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        if (aug[r][k] != 0) return std::nullopt; // inconsistent
    std::vector<BigRat> coeffs(k, BigRat(0));
    for (std::size_t r = 0; r < rank; ++r) coeffs[pivot_col[r]] = aug[r][k];
    if (!recurrence_holds(seq, coeffs, k, fit_len)) return std::nullopt;
    return coeffs;
}

bool recurrence_holds(const std::vector<BigInt>& seq, const std::vector<BigRat>& coeffs,
                      std::size_t lo, std::size_t hi) {
    const std::size_t k = coeffs.size();
    hi = std::min(hi, seq.size());
    for (std::size_t n = std::max(lo, k); n < hi; ++n) {
        BigRat acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += coeffs[i - 1] * BigRat(seq[n - i]);
        if (acc != BigRat(seq[n])) return false;
    }
    return true;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

} // namespace partav
