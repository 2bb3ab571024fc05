#include "doctest.h"

#include <map>
#include <set>

#include "partav/asymptotics.hpp"
#include "partav/containment.hpp"
#include "partav/enumeration.hpp"

using namespace partav;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

// Euler's pentagonal-number recurrence, an independent oracle for p(n).
std::vector<long long> pentagonal_partition_numbers(int N) {
    std::vector<long long> p(static_cast<std::size_t>(N) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

} // namespace

TEST_CASE("partition generation counts match the pentagonal recurrence") {
    const auto pent = pentagonal_partition_numbers(40);
    for (long long n = 0; n <= 40; ++n) {
        long long count = 0;
        for_each_partition(n, [&](const Partition&) { ++count; });
        CHECK(count == pent[static_cast<std::size_t>(n)]);
    }
    CHECK(partitions_of(20).size() == 627);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0).front().empty());
    CHECK(partitions_of(4).size() == 5);
}

TEST_CASE("generation order is reverse-lexicographic") {
    const auto got = partitions_of(6);
    CHECK(got.front() == P("6"));
    CHECK(got.back() == P("1,1,1,1,1,1"));
    for (std::size_t i = 0; i + 1 < got.size(); ++i)
        CHECK(got[i].parts() > got[i + 1].parts());
    CHECK_THROWS_AS(partitions_of(61), Error);
    try {
        partitions_of(61);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("strict partition generation") {
    // strict partitions of n are counted by the distinct-parts function
    const std::vector<long long> q{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27};
    for (long long n = 0; n <= 15; ++n) {
        long long count = 0;
        for_each_strict_partition(n, [&](const Partition& p) {
            CHECK(classify(p).is_strict);
            ++count;
        });
        CHECK(count == q[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("avoidance series for the sporadic patterns") {
    const CountSeries rect = av_series(P("2,1"), 16);
    for (long long n = 1; n <= 16; ++n)
        CHECK(rect.counts[static_cast<std::size_t>(n) - 1] == sigma(0, n).convert_to<long long>());
    CHECK(rect.counts[11] == 6); // sigma_0(12)

    const CountSeries linear = av_series(P("3,1"), 14);
    for (long long n = 1; n <= 14; ++n)
        CHECK(linear.counts[static_cast<std::size_t>(n) - 1] == n);

    const CountSeries none = av_series(P("1"), 10);
    for (long long c : none.counts) CHECK(c == 0);

    const CountSeries meta = av_series(P("5,2"), 12);
    CHECK(meta.counts == std::vector<long long>{1, 2, 3, 5, 7, 11, 14, 20, 25, 33, 40, 51});

    CHECK_THROWS_AS(av_series(P("0"), 5), Error);
}

TEST_CASE("q_count ground cases and a frozen value") {
    for (long long n = 1; n <= 12; ++n) CHECK(q_count(P("1"), P("2"), n) == 1);
    for (long long n = 1; n <= 10; ++n) CHECK(q_count(P("3,1"), P("3,1"), n) == 0);
    CHECK(q_count(P("3,1"), P("4,3,1"), 10) == 27);
}

TEST_CASE("the E/M/N set maps") {
    const auto e = set_E(P("3,3,3,2"));
    CHECK(e == std::vector<Partition>{P("4,3,3,2"), P("4,4,3,2"), P("4,4,4,2")});

    CHECK(set_N(P("5"), 7).empty()); // m(alpha)=1 leaves no room for 0<c<1

    const auto m = set_M(P("2,2"), 2);
    CHECK(m == std::vector<Partition>{P("2,2"), P("3,3"), P("4,4")});

    CHECK_THROWS_AS(set_E(P("0")), Error);
}

namespace {

// multiset of images with weight <= wmax under a set map, for the unique
// preimage laws
std::map<Partition, int> image_counts(const std::vector<Partition>& sources,
                                      const std::function<std::vector<Partition>(const Partition&)>& f,
                                      long long wmax) {
    std::map<Partition, int> hits;
    for (const auto& a : sources)
        for (const auto& b : f(a))
            if (b.weight() <= wmax) ++hits[b];
    return hits;
}

std::vector<Partition> q_set(const Partition& tau, const Partition& mu, long long wmax) {
    std::vector<Partition> out;
    for (long long n = 1; n <= wmax; ++n)
        for_each_partition(n, [&](const Partition& p) {
            if (contains(p, tau) && !contains(p, mu)) out.push_back(p);
        });
    return out;
}

} // namespace

TEST_CASE("E maps Q(mu, mu+1) onto Q(mu+1, mu+2) with unique preimages") {
    const long long W = 14;
    for (const char* pat : {"2", "3,1", "4,2", "5,2"}) {
        const Partition mu = P(pat);
        const Partition mu1 = add(mu, P("1"));
        const Partition mu2 = add(mu, P("2"));
        const auto hits = image_counts(q_set(mu, mu1, W - 1),
                                       [](const Partition& a) { return set_E(a); }, W);
        const auto targets = q_set(mu1, mu2, W);
        CHECK(hits.size() == targets.size());
        for (const auto& t : targets) {
            auto it = hits.find(t);
            REQUIRE(it != hits.end());
            CHECK(it->second == 1);
        }
    }
}

TEST_CASE("M and N map Q(mu, mu+1) onto the notched classes with unique preimages") {
    const long long W = 14;
    for (const char* pat : {"2", "3,1", "4,2", "5,2"}) {
        const Partition mu = P(pat);
        const Partition mu1 = add(mu, P("1"));
        const Partition ne = northeast_extend(mu);
        const Partition ne1 = add(ne, P("1"));
        const auto sources = q_set(mu, mu1, W);

        const auto m_hits = image_counts(
            sources, [&](const Partition& a) { return set_M(a, static_cast<int>(W)); }, W);
        const auto m_targets = q_set(mu, ne, W);
        CHECK(m_hits.size() == m_targets.size());
        for (const auto& t : m_targets) {
            auto it = m_hits.find(t);
            REQUIRE(it != m_hits.end());
            CHECK(it->second == 1);
        }

        const auto n_hits = image_counts(
            sources, [&](const Partition& a) { return set_N(a, static_cast<int>(W)); }, W);
        const auto n_targets = q_set(ne, ne1, W);
        CHECK(n_hits.size() == n_targets.size());
        for (const auto& t : n_targets) {
            auto it = n_hits.find(t);
            REQUIRE(it != n_hits.end());
            CHECK(it->second == 1);
        }
    }
}

TEST_CASE("d_count matches the definitional filter on spot patterns") {
    // rectangles: one wide rectangle <=> divisor count
    for (long long n = 1; n <= 30; ++n)
        CHECK(d_count(P("2,1"), n) == sigma(0, n).convert_to<long long>());

    // (3,1): n = x1 y1 + y2 with y1 > y2 > 0; also check against the filter
    for (long long n = 1; n <= 22; ++n) {
        long long filter = 0;
        for_each_partition(n, [&](const Partition& a) {
            if (in_d_set(P("3,1"), a)) ++filter;
        });
        CHECK(d_count(P("3,1"), n) == filter);
    }

    CHECK_THROWS_AS(d_count(P("3,3"), 5), Error);
    CHECK_THROWS_AS(d_count(P("1"), 5), Error);
    CHECK(d_count(P("4,2"), 0) == 0);
}

TEST_CASE("the two-magnitude staircase count has frozen anchors") {
    CHECK(d_count(P("3,2,1"), 16) == 55);
    CHECK(d_count(P("3,2,1"), 1024) == 27898);
    for (long long n = 1; n <= 25; ++n) {
        long long filter = 0;
        for_each_partition(n, [&](const Partition& a) {
            if (in_d_set(P("3,2,1"), a)) ++filter;
        });
        CHECK(d_count(P("3,2,1"), n) == filter);
    }
}

TEST_CASE("nu convolution equals direct enumeration") {
    for (long long n = 1; n <= 20; ++n)
        CHECK(nu(1, n) == sigma(0, n).convert_to<long long>());
    CHECK(nu(2, 4) == 8);

    // direct count of ordered representations n = sum x_i y_i
    const auto direct = [](int k, long long n) {
        std::function<long long(int, long long)> rec = [&](int left, long long rem) -> long long {
            if (left == 0) return rem == 0 ? 1 : 0;
            if (rem < left) return 0;
            long long acc = 0;
            for (long long prod = 1; prod + (left - 1) <= rem; ++prod)
                acc += sigma(0, prod).convert_to<long long>() * rec(left - 1, rem - prod);
            return acc;
        };
        return rec(k, n);
    };
    for (int k = 1; k <= 3; ++k)
        for (long long n = 1; n <= 30; ++n) CHECK(nu(k, n) == direct(k, n));
}

TEST_CASE("mu_hat removes the first unmatched part") {
    CHECK(mu_hat(P("7,6,4,2")) == P("6,5,2"));
    CHECK(mu_hat(P("4,2")) == P("3"));
    CHECK(mu_hat(P("4,1")) == P("3"));
    CHECK(mu_hat(P("6,3,2,1")) == P("5,2,1"));
    CHECK_THROWS_AS(mu_hat(P("3,2,1")), Error);
    try {
        mu_hat(P("3,2,1"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StaircaseHasNoHat);
    }
    CHECK_THROWS_AS(mu_hat(P("2,2")), Error);

    for (long long w = 2; w <= 12; ++w)
        for_each_strict_partition(w, [&](const Partition& mu) {
            if (classify(mu).is_staircase) return;
            CHECK(mu_hat(mu).weight() < mu.weight());
            CHECK(classify(mu_hat(mu)).is_strict);
        });
}

TEST_CASE("mu_sup swaps a run part for the first omitted size") {
    CHECK(mu_sup(P("4,3,2"), 3) == P("4,2,1"));
    CHECK(mu_sup(P("4,3,1"), 3) == P("4,2,1"));
    CHECK_THROWS_AS(mu_sup(P("4,3,2"), 1), Error); // i <= k - l
    CHECK_THROWS_AS(mu_sup(P("4,3,2"), 4), Error); // i > k

    // weight identity |mu^(i)| = |mu| - i + (k - l)
    for (long long w = 3; w <= 12; ++w)
        for_each_strict_partition(w, [&](const Partition& mu) {
            const ShapeClass cls = classify(mu);
            if (cls.is_staircase || mu.part(0) < 2) return;
            const int k = mu.part(0) - 1;
            int ell = 0;
            while (ell < k && mu.part(static_cast<std::size_t>(ell) + 1) == k - ell) ++ell;
            for (int i = k - ell + 1; i <= k; ++i) {
                const Partition sup = mu_sup(mu, i);
                CHECK(sup.weight() == mu.weight() - i + (k - ell));
            }
        });
}

TEST_CASE("avoiders outside D_n(mu) avoid the one-smaller staircase") {
    // literal set inclusion: {alpha |- n : avoids mu} \ D_n(mu) lies inside
    // the avoiders of (k, k-1, ..., 1) with k = mu_1 - 1
    std::vector<Partition> mus;
    for (long long w = 3; w <= 8; ++w)
        for_each_strict_partition(w, [&](const Partition& mu) {
            if (mu.part(0) >= 3) mus.push_back(mu);
        });
    for (const auto& mu : mus) {
        const int k = mu.part(0) - 1;
        std::vector<int> stair;
        for (int v = k; v >= 1; --v) stair.push_back(v);
        const Partition staircase{stair};
        for (long long n = 1; n <= 25; n += 3)
            for_each_partition(n, [&](const Partition& a) {
                if (contains(a, mu) || in_d_set(mu, a)) return;
                CHECK_FALSE(contains(a, staircase));
            });
    }
}

TEST_CASE("staircase avoiders split into D_n and the smaller staircase's avoiders") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> big_parts, small_parts;
        for (int v = k + 1; v >= 1; --v) big_parts.push_back(v);
        for (int v = k; v >= 1; --v) small_parts.push_back(v);
        const Partition big{big_parts};
        const Partition small{small_parts};
        for (long long n = 1; n <= 25; ++n)
            for_each_partition(n, [&](const Partition& a) {
                const bool avoids_big = !contains(a, big);
                const bool in_d = in_d_set(big, a);
                const bool avoids_small = !contains(a, small);
                CHECK(avoids_big == (in_d || avoids_small));
                CHECK_FALSE((in_d && avoids_small)); // disjoint
            });
    }
}

TEST_CASE("psi adds exactly m cells and lands where the construction says") {
    const Partition mu = P("6,3,2,1");
    const Partition hat = mu_hat(mu); // (5,2,1)
    CHECK(hat == P("5,2,1"));
    for (long long wa = 1; wa <= 12; ++wa)
        for_each_partition(wa, [&](const Partition& a) {
            if (!in_d_set(hat, a)) return;
            for (long long m = 1; m <= 6; ++m) {
                const Partition img = psi(mu, a, m);
                CHECK(img.weight() == a.weight() + m);
                // image is in D(mu) or has only k-1 = 4 distinct magnitudes
                const bool in_d = in_d_set(mu, img);
                const bool degenerate = classify(img).distinct_magnitudes == 4;
                CHECK((in_d || degenerate));
            }
        });
    CHECK_THROWS_AS(psi(mu, P("3,3"), 2), Error); // not in D(mu_hat)
    CHECK_THROWS_AS(psi(mu, P("5,2,1"), 0), Error);
}
