#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partav/bigint.hpp"
#include "partav/partition.hpp"

namespace partav {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

/// zeta(k) to 30 significant digits for k = 2..10.
double zeta(int k);

/// sigma_k(n) = sum of d^k over divisors d of n, exact.
BigInt sigma(int k, long long n);

/// sum over divisors of log(d)/d, double precision.
double sigma_prime_m1(long long n);

/// sum_{m<=n} sigma_0(m), exact, O(sqrt n) by the hyperbola identity.
long long divisor_summatory(long long n);

/// sum_{m<=n} sigma_1(m), exact, O(sqrt n) by divisor blocks.
long long sigma1_summatory(long long n);

/// Decomposition mu = (k+1, k, ..., k-l+1, a_0, a_1, ...) with k-l > a_0:
/// k = mu_1 - 1, l the length of the consecutive run below mu_1, tail the
/// remaining parts.  Staircases have l = k and an empty tail.
struct StrictShape {
    int k = 0;
    int ell = 0;
    std::vector<int> tail; // a_0 >= a_1 >= ... (positive entries only)
    bool is_staircase = false;
};

StrictShape shape_of(const Partition& mu);
Partition reconstruct(const StrictShape& s);

/// Structured leading term: constant * n^n_power * log^log_power(n),
/// optionally multiplied by sigma_{sigma_index}(n) and divided by
/// zeta(zeta_index).  The constant is an exact positive rational; only
/// evaluation brings in floating point.
struct Prediction {
    int n_power = 0;
    int log_power = 0;
    BigRat constant = 1;
    int sigma_index = -1; // -1: no divisor-sum factor
    int zeta_index = 0;   // 0: no zeta factor
};

Prediction prediction_of(const Partition& mu);
double evaluate(const Prediction& p, long long n);

/// Leading asymptotic term for |Av_n(mu)|, evaluated in double precision:
/// staircases use sigma_{k-1}(n) log^k n / (k!(k-1)! zeta(k)) for k >= 3,
/// sigma_1(n) log^2 n / (2 zeta(2)) for k = 2 and sigma_0(n) for k = 1;
/// other strict patterns use
/// n^{k-1} log^l n / (l! (k-1)! prod_{j<k-l} (k-l-a_j-j)).
double predict(const Partition& mu, long long n);

/// The primary prediction plus any documented variant (staircases of size
/// k >= 3 carry a "table" variant with divisor k! zeta(k) instead of
/// k!(k-1)! zeta(k)).
std::vector<std::pair<std::string, double>> predict_variants(const Partition& mu, long long n);

/// Exact |Av_n(mu)| for the patterns with closed forms:
/// (1),(2),(2,1),(3),(3,1),(4),(4,1),(4,2),(5).  nullopt otherwise.
std::optional<BigInt> closed_form(const Partition& mu, long long n);

/// |Av_n((3,2))| = 1 + sum_{m<=n} (sigma_0(m) - 1), exact and fast.
BigInt av32_exact(long long n);

struct RatioRow {
    long long n = 0;
    BigInt observed;
    double predicted = 0.0;
    double ratio = 0.0;
    std::string source; // which exact observer produced `observed`
};

/// observed/predicted rows; observed comes from the best exact source
/// (closed form, the (3,2) identity, the (3,2,1) rectangular-decomposition
/// split, or enumeration within the cap).  NoExactSource when n is out of
/// range for every method.
std::vector<RatioRow> ratio_report(const Partition& mu, const std::vector<long long>& ns);

/// Exact |Av_n((3,2,1))| = |D_n((3,2,1))| + sigma_0(n).
BigInt av321_exact(long long n);

/// Solves a(n) = sum c_i a(n-i) (1-based order-i lookback) exactly over the
/// first fit_len entries; nullopt when no order-`order` recurrence fits.
std::optional<std::vector<BigRat>> fit_linear_recurrence(const std::vector<BigInt>& seq,
                                                         int order, std::size_t fit_len);

/// Checks the recurrence on indices [lo, hi) of seq.
bool recurrence_holds(const std::vector<BigInt>& seq, const std::vector<BigRat>& coeffs,
                      std::size_t lo, std::size_t hi);

double to_double(const BigInt& v);

} // namespace partav
