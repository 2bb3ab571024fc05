#include "partav/containment.hpp"

#include <algorithm>
#include <cassert>

namespace partav {

namespace {

// Bottom-up greedy embedding of mu[a..k) into alpha rows [lo, m), requiring
// the value chosen for position a to be <= value_cap (-1 means unbounded).
// Picks, from the bottom pattern row up, the smallest usable part at the
// largest usable index; this makes the value at position a minimal over all
// embeddings, so the cap test is exact.
bool embed_suffix(const std::vector<int>& alpha, int lo, const std::vector<int>& mu, int a,
                  long long value_cap) {
    const int k = static_cast<int>(mu.size());
    int limit = static_cast<int>(alpha.size()); // exclusive upper bound on next index
    long long below = 0;
    for (int pos = k - 1; pos >= a; --pos) {
        const long long gap =
            mu[static_cast<std::size_t>(pos)] - (pos + 1 < k ? mu[static_cast<std::size_t>(pos) + 1] : 0);
        const long long need = std::max<long long>(mu[static_cast<std::size_t>(pos)], below + gap);
        int chosen = -1;
        for (int i = limit - 1; i >= lo; --i) {
            if (alpha[static_cast<std::size_t>(i)] >= need) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) return false;
        below = alpha[static_cast<std::size_t>(chosen)];
        limit = chosen;
    }
    return value_cap < 0 || below <= value_cap;
}

} // namespace

bool contains(const Partition& alpha, const Partition& mu) {
    if (mu.empty()) return true;
    if (mu.weight() > alpha.weight() || mu.size() > alpha.size()) return false;
    return embed_suffix(alpha.parts(), 0, mu.parts(), 0, -1);
}

std::optional<DeletionWitness> witness(const Partition& alpha, const Partition& mu) {
    if (!contains(alpha, mu)) return std::nullopt;
    DeletionWitness w;
    if (mu.empty()) {
        // Deleting every column clears the board with no rows deleted.
        for (int j = 1; j <= alpha.part(0); ++j) w.cols.push_back(j);
        return w;
    }
    const auto& ap = alpha.parts();
    const auto& mp = mu.parts();
    const int m = static_cast<int>(ap.size());
    const int k = static_cast<int>(mp.size());

    // Lexicographically smallest deleted-row set: scan rows top down and
    // delete row i whenever the rest of the pattern still embeds strictly
    // below it.  When deletion is infeasible every remaining embedding uses
    // row i for the current pattern position, so keeping it is forced.
    std::vector<int> kept;
    int a = 0;
    long long prev_value = -1;
    int i = 0;
    for (; i < m && a < k; ++i) {
        const long long cap = (a == 0) ? -1
                                       : prev_value - (mp[static_cast<std::size_t>(a) - 1] -
                                                       mp[static_cast<std::size_t>(a)]);
        if (embed_suffix(ap, i + 1, mp, a, cap)) {
            w.rows.push_back(i + 1);
        } else {
            kept.push_back(i);
            prev_value = ap[static_cast<std::size_t>(i)];
            ++a;
        }
    }
    assert(a == k);
    for (; i < m; ++i) w.rows.push_back(i + 1);

    // Columns interval by interval: of the columns between consecutive
    // kept-row lengths exactly mu_a - mu_{a+1} survive; delete the earliest.
    for (int pos = k - 1; pos >= 0; --pos) {
        const int len_lo =
            (pos + 1 < k) ? ap[static_cast<std::size_t>(kept[static_cast<std::size_t>(pos) + 1])] : 0;
        const int len_hi = ap[static_cast<std::size_t>(kept[static_cast<std::size_t>(pos)])];
        const int keep =
            mp[static_cast<std::size_t>(pos)] - (pos + 1 < k ? mp[static_cast<std::size_t>(pos) + 1] : 0);
        const int drop = (len_hi - len_lo) - keep;
        assert(drop >= 0);
        for (int j = len_lo + 1; j <= len_lo + drop; ++j) w.cols.push_back(j);
    }
    std::sort(w.cols.begin(), w.cols.end());
    return w;
}

Partition apply_deletions(const Partition& alpha, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    std::set<int> dead_rows(rows.begin(), rows.end());
    std::set<int> dead_cols(cols.begin(), cols.end());
    std::vector<int> parts;
    for (int i = 1; i <= static_cast<int>(alpha.size()); ++i) {
        if (dead_rows.count(i)) continue;
        const int len = alpha.part(static_cast<std::size_t>(i - 1));
        int remaining = 0;
        for (int j = 1; j <= len; ++j)
            if (!dead_cols.count(j)) ++remaining;
        if (remaining > 0) parts.push_back(remaining);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

const std::set<Partition>& ContainmentOracle::closure(const Partition& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    std::set<Partition> out;
    out.insert(alpha);
    // single row deletions (one representative per run of equal parts)
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0 && alpha.parts()[i] == alpha.parts()[i - 1]) continue;
        std::vector<int> parts(alpha.parts());
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        const auto& sub = closure(Partition(std::move(parts)));
        out.insert(sub.begin(), sub.end());
    }
    // single column deletions
    const int width = alpha.part(0);
    for (int j = 1; j <= width; ++j) {
        std::vector<int> parts;
        for (int v : alpha.parts()) {
            const int nv = v >= j ? v - 1 : v;
            if (nv > 0) parts.push_back(nv);
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        const auto& sub = closure(Partition(std::move(parts)));
        out.insert(sub.begin(), sub.end());
    }
    return memo_.emplace(alpha, std::move(out)).first->second;
}

bool ContainmentOracle::contains(const Partition& alpha, const Partition& mu) {
    if (alpha.weight() > cap_)
        fail(ErrorKind::CapExceeded,
             "oracle cap " + std::to_string(cap_) + " cells exceeded by weight " +
                 std::to_string(alpha.weight()));
    if (mu.empty()) return true;
    return closure(alpha).count(mu) > 0;
}

bool contains_oracle(const Partition& alpha, const Partition& mu, long long cap_cells) {
    ContainmentOracle oracle(cap_cells);
    return oracle.contains(alpha, mu);
}

} // namespace partav
