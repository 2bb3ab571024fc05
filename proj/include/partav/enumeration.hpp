#pragma once

#include <functional>
#include <vector>

#include "partav/partition.hpp"

namespace partav {

inline constexpr long long kDefaultEnumCap = 60;   // p(n)-scale sweeps
inline constexpr long long kDefaultSweepCap = 25;  // per-pattern exhaustive suites
inline constexpr long long kDefaultDCountCap = 20000;

/// Avoidance (or similar) counts for n = 1..N; counts[i] belongs to n = i+1.
/// The empty partition (n = 0) is excluded by convention and reported
/// separately where a generating function carries a constant term.
struct CountSeries {
    Partition pattern;
    std::vector<long long> counts;
};

/// Visits every partition of n exactly once in reverse-lexicographic order
/// (largest first part first); n = 0 visits only the empty partition.
void for_each_partition(long long n, const std::function<void(const Partition&)>& visit,
                        long long cap = kDefaultEnumCap);

std::vector<Partition> partitions_of(long long n, long long cap = kDefaultEnumCap);

/// Visits every partition of n with all parts distinct (strict partitions).
void for_each_strict_partition(long long n, const std::function<void(const Partition&)>& visit,
                               long long cap = kDefaultEnumCap);

/// Number of partitions of weight n avoiding mu, one value of n.
long long av_count(const Partition& mu, long long n, long long cap = kDefaultEnumCap);

/// counts[n-1] = #{alpha of weight n : alpha avoids mu}, n = 1..N.
CountSeries av_series(const Partition& mu, int N, long long cap = kDefaultEnumCap);

/// #{alpha of weight n : alpha contains tau and avoids mu}.
long long q_count(const Partition& tau, const Partition& mu, long long n,
                  long long cap = kDefaultEnumCap);

/// E(alpha) = { alpha + (1^c) : 0 < c <= m(alpha) }.
std::vector<Partition> set_E(const Partition& alpha);
/// M(alpha) = { alpha + (w^m(alpha)) : 0 <= w <= wmax } (w truncated).
std::vector<Partition> set_M(const Partition& alpha, int wmax);
/// N(alpha) = { alpha + (w^m(alpha)) + (1^c) : 0 <= w <= wmax, 0 < c < m(alpha) }.
std::vector<Partition> set_N(const Partition& alpha, int wmax);

/// |D_n(mu)|: partitions of n avoiding mu with exactly mu_1 - 1 distinct
/// magnitudes, counted through their rectangular decompositions
/// n = sum x_i y_i (heights strictly decreasing, x_i = 1 at every index i
/// that is not a part size of mu).  Requires mu strict with mu_1 >= 2.
long long d_count(const Partition& mu, long long n, long long cap = kDefaultDCountCap);

/// Ordered representations n = x_1 y_1 + ... + x_k y_k with positive factors,
/// via the convolution nu_k = nu_{k-1} * sigma_0 with nu_1 = sigma_0.
long long nu(int k, long long n);

/// The pattern obtained by deleting the i-th part (i least with no part of
/// size mu_i + 1) and lowering every part above it by one.  Undefined for
/// staircases.
Partition mu_hat(const Partition& mu);

/// The index and size of the part that mu_hat removes.
struct MuHatInfo {
    int index;        // 1-based i
    int removed_part; // mu_i (0 when the removal happens past the part list)
};
MuHatInfo mu_hat_info(const Partition& mu);

/// For mu = (k+1, k, ..., k-l+1, a_0, ...): removes the part of size i
/// (k-l < i <= k) and adds a part of size k-l.
Partition mu_sup(const Partition& mu, int i);

/// Adjoins to alpha (a member of D(mu_hat)) d columns of height q and one
/// column of height r, where q is the height of alpha's rectangle at the
/// removed part size and m = q d + r, 0 <= r < q (d = 0, r = m when the
/// removed part is 0).  Weight grows by exactly m.
Partition psi(const Partition& mu, const Partition& alpha, long long m);

/// True when alpha lies in D(mu): avoids mu with exactly mu_1 - 1 distinct
/// magnitudes (the definitional filter, used as an oracle and a precondition
/// check).
bool in_d_set(const Partition& mu, const Partition& alpha);

} // namespace partav
