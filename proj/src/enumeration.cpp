#include "partav/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

#include "partav/containment.hpp"

namespace partav {

namespace {

void descend(long long remaining, int max_part, std::vector<int>& prefix,
             const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    const int first = static_cast<int>(std::min<long long>(remaining, max_part));
    for (int v = first; v >= 1; --v) {
        prefix.push_back(v);
        descend(remaining - v, v, prefix, visit);
        prefix.pop_back();
    }
}

void descend_strict(long long remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    const int first = static_cast<int>(std::min<long long>(remaining, max_part));
    for (int v = first; v >= 1; --v) {
        if (static_cast<long long>(v) * (v + 1) / 2 < remaining) break; // cannot finish strictly
        prefix.push_back(v);
        descend_strict(remaining - v, v - 1, prefix, visit);
        prefix.pop_back();
    }
}

void check_cap(long long n, long long cap, const char* what) {
    if (n < 0) fail(ErrorKind::BadArgument, std::string(what) + ": negative weight");
    if (n > cap)
        fail(ErrorKind::CapExceeded, std::string(what) + ": weight " + std::to_string(n) +
                                         " above cap " + std::to_string(cap));
}

std::vector<long long> sigma0_table(long long n) {
    std::vector<long long> s(static_cast<std::size_t>(n) + 1, 0);
    for (long long d = 1; d <= n; ++d)
        for (long long m = d; m <= n; m += d) s[static_cast<std::size_t>(m)] += 1;
    return s;
}

// |D_n((3,2,1))| = (nu_2(n) - sigma_1(n) + sigma_0(n)) / 2: representations
// n = x1 y1 + x2 y2 with unequal heights come in ordered pairs, and those
// with equal heights biject with factorizations n = y (x1+x2).
long long staircase_two_magnitudes(long long n) {
    if (n <= 0) return 0;
    std::vector<long long> s0(static_cast<std::size_t>(n) + 1, 0),
        s1(static_cast<std::size_t>(n) + 1, 0);
    for (long long d = 1; d <= n; ++d)
        for (long long m = d; m <= n; m += d) {
            s0[static_cast<std::size_t>(m)] += 1;
            s1[static_cast<std::size_t>(m)] += d;
        }
    long long nu2 = 0;
    for (long long m = 1; m < n; ++m)
        nu2 += s0[static_cast<std::size_t>(m)] * s0[static_cast<std::size_t>(n - m)];
    const long long numer = nu2 - s1[static_cast<std::size_t>(n)] + s0[static_cast<std::size_t>(n)];
    assert(numer % 2 == 0);
    return numer / 2;
}

struct DCounter {
    int K = 0;
    std::vector<bool> wide;                   // wide[i-1]: x_i unconstrained
    std::vector<std::vector<int>> divisors;   // divisors[m] for m <= n
    std::map<std::tuple<int, int, long long>, long long> memo;

    long long count(int idx, int max_height_excl, long long rem) {
        // minimum cells the remaining rectangles need: a strictly decreasing
        // positive height chain of length K - idx + 1
        const long long slots = K - idx + 1;
        if (rem < slots * (slots + 1) / 2) return 0;
        if (idx == K) {
            if (rem < 1) return 0;
            if (!wide[static_cast<std::size_t>(idx) - 1])
                return rem < max_height_excl ? 1 : 0;
            long long c = 0;
            for (int d : divisors[static_cast<std::size_t>(rem)])
                if (d < max_height_excl) ++c;
            return c;
        }
        const int hi = static_cast<int>(std::min<long long>(max_height_excl - 1, rem));
        const auto key = std::make_tuple(idx, hi, rem);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long total = 0;
        for (int y = hi; y >= K - idx + 1; --y) {
            if (wide[static_cast<std::size_t>(idx) - 1]) {
                for (long long used = y; used <= rem; used += y)
                    total += count(idx + 1, y, rem - used);
            } else {
                total += count(idx + 1, y, rem - y);
            }
        }
        memo.emplace(key, total);
        return total;
    }
};

} // namespace

void for_each_partition(long long n, const std::function<void(const Partition&)>& visit,
                        long long cap) {
    check_cap(n, cap, "for_each_partition");
    std::vector<int> prefix;
    descend(n, static_cast<int>(std::max<long long>(n, 1)), prefix, visit);
}

std::vector<Partition> partitions_of(long long n, long long cap) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

void for_each_strict_partition(long long n, const std::function<void(const Partition&)>& visit,
                               long long cap) {
    check_cap(n, cap, "for_each_strict_partition");
    std::vector<int> prefix;
    descend_strict(n, static_cast<int>(std::max<long long>(n, 1)), prefix, visit);
}

long long av_count(const Partition& mu, long long n, long long cap) {
    long long total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (!contains(p, mu)) ++total;
    }, cap);
    return total;
}

CountSeries av_series(const Partition& mu, int N, long long cap) {
    if (mu.empty()) fail(ErrorKind::EmptyPartition, "av_series needs a nonempty pattern");
    check_cap(N, cap, "av_series");
    CountSeries s;
    s.pattern = mu;
    s.counts.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) s.counts.push_back(av_count(mu, n, cap));
    return s;
}

long long q_count(const Partition& tau, const Partition& mu, long long n, long long cap) {
    long long total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (contains(p, tau) && !contains(p, mu)) ++total;
    }, cap);
    return total;
}

std::vector<Partition> set_E(const Partition& alpha) {
    if (alpha.empty()) fail(ErrorKind::EmptyPartition, "set_E of the empty partition");
    std::vector<Partition> out;
    const int m = top_multiplicity(alpha);
    for (int c = 1; c <= m; ++c) out.push_back(add(alpha, constant_partition(1, c)));
    return out;
}

std::vector<Partition> set_M(const Partition& alpha, int wmax) {
    if (alpha.empty()) fail(ErrorKind::EmptyPartition, "set_M of the empty partition");
    if (wmax < 0) fail(ErrorKind::BadArgument, "set_M: wmax must be nonnegative");
    std::vector<Partition> out;
    const int m = top_multiplicity(alpha);
    for (int w = 0; w <= wmax; ++w) out.push_back(add(alpha, constant_partition(w, m)));
    return out;
}

std::vector<Partition> set_N(const Partition& alpha, int wmax) {
    if (alpha.empty()) fail(ErrorKind::EmptyPartition, "set_N of the empty partition");
    if (wmax < 0) fail(ErrorKind::BadArgument, "set_N: wmax must be nonnegative");
    std::vector<Partition> out;
    const int m = top_multiplicity(alpha);
    for (int w = 0; w <= wmax; ++w) {
        const Partition widened = add(alpha, constant_partition(w, m));
        for (int c = 1; c < m; ++c) out.push_back(add(widened, constant_partition(1, c)));
    }
    return out;
}

long long d_count(const Partition& mu, long long n, long long cap) {
    const ShapeClass shape = classify(mu);
    if (!shape.is_strict || mu.empty())
        fail(ErrorKind::NotStrict, "d_count needs a strict pattern");
    if (mu.part(0) < 2) fail(ErrorKind::PatternTooSmall, "d_count needs mu_1 >= 2");
    if (n <= 0) return 0;
    if (n > cap)
        fail(ErrorKind::CapExceeded,
             "d_count: n " + std::to_string(n) + " above cap " + std::to_string(cap));

    DCounter dc;
    dc.K = mu.part(0) - 1;
    dc.wide.assign(static_cast<std::size_t>(dc.K), false);
    for (int v : mu.parts())
        if (v <= dc.K) dc.wide[static_cast<std::size_t>(v) - 1] = true;

    if (dc.K == 2 && dc.wide[0] && dc.wide[1]) return staircase_two_magnitudes(n);

    dc.divisors.resize(static_cast<std::size_t>(n) + 1);
    for (int d = 1; d <= n; ++d)
        for (long long m = d; m <= n; m += d)
            dc.divisors[static_cast<std::size_t>(m)].push_back(d);
    return dc.count(1, static_cast<int>(n) + 1, n);
}

long long nu(int k, long long n) {
    if (k < 1 || n < 1) fail(ErrorKind::BadArgument, "nu needs k >= 1 and n >= 1");
    std::vector<long long> s0 = sigma0_table(n);
    std::vector<long long> prev(s0.begin(), s0.end()); // nu_1
    for (int j = 2; j <= k; ++j) {
        std::vector<long long> cur(static_cast<std::size_t>(n) + 1, 0);
        for (long long m = j; m <= n; ++m) {
            long long acc = 0;
            for (long long t = j - 1; t < m; ++t)
                acc += prev[static_cast<std::size_t>(t)] * s0[static_cast<std::size_t>(m - t)];
            cur[static_cast<std::size_t>(m)] = acc;
        }
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(n)];
}

MuHatInfo mu_hat_info(const Partition& mu) {
    const ShapeClass shape = classify(mu);
    if (!shape.is_strict || mu.empty()) fail(ErrorKind::NotStrict, "mu_hat needs a strict pattern");
    const auto has_part = [&](int v) {
        return std::find(mu.parts().begin(), mu.parts().end(), v) != mu.parts().end();
    };
    for (int i = 2; i <= static_cast<int>(mu.size()) + 1; ++i) {
        const int mi = mu.part(static_cast<std::size_t>(i) - 1);
        if (!has_part(mi + 1)) return {i, mi};
    }
    fail(ErrorKind::StaircaseHasNoHat, "staircase patterns have no hat");
}

Partition mu_hat(const Partition& mu) {
    const MuHatInfo info = mu_hat_info(mu);
    std::vector<int> parts;
    for (int j = 1; j < info.index; ++j) {
        const int v = mu.part(static_cast<std::size_t>(j) - 1) - 1;
        if (v > 0) parts.push_back(v);
    }
    for (int j = info.index + 1; j <= static_cast<int>(mu.size()); ++j)
        parts.push_back(mu.part(static_cast<std::size_t>(j) - 1));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition mu_sup(const Partition& mu, int i) {
    const ShapeClass shape = classify(mu);
    if (!shape.is_strict || mu.empty()) fail(ErrorKind::NotStrict, "mu_sup needs a strict pattern");
    const int k = mu.part(0) - 1;
    int ell = 0;
    while (ell < k && mu.part(static_cast<std::size_t>(ell) + 1) == k - ell) ++ell;
    if (shape.is_staircase || i <= k - ell || i > k)
        fail(ErrorKind::IndexOutOfRange,
             "mu_sup index " + std::to_string(i) + " outside (k-l, k]");
    std::vector<int> parts;
    bool removed = false;
    for (int v : mu.parts()) {
        if (!removed && v == i) {
            removed = true;
            continue;
        }
        parts.push_back(v);
    }
    assert(removed);
    parts.push_back(k - ell);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool in_d_set(const Partition& mu, const Partition& alpha) {
    if (alpha.empty()) return false;
    if (contains(alpha, mu)) return false;
    return classify(alpha).distinct_magnitudes == mu.part(0) - 1;
}

Partition psi(const Partition& mu, const Partition& alpha, long long m) {
    if (m < 1) fail(ErrorKind::BadArgument, "psi needs m >= 1");
    const MuHatInfo info = mu_hat_info(mu); // rejects non-strict and staircases
    const Partition hat = mu_hat(mu);
    if (!in_d_set(hat, alpha))
        fail(ErrorKind::NotInDomain, "psi: alpha is not in D(mu_hat)");
    long long d = 0, r = m;
    int q = 0;
    if (info.removed_part > 0) {
        const RectDecomp rd = rect_decomp(alpha);
        assert(info.removed_part <= static_cast<int>(rd.heights.size()));
        q = rd.heights[static_cast<std::size_t>(info.removed_part) - 1];
        d = m / q;
        r = m % q;
    }
    Partition out = alpha;
    if (d > 0) out = add(out, constant_partition(static_cast<int>(d), q));
    if (r > 0) out = add(out, constant_partition(1, static_cast<int>(r)));
    return out;
}

} // namespace partav
