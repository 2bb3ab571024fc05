#include "partav/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace partav {

FSMultiset fs_multiset(const Partition& p, int L) {
    if (L < static_cast<int>(p.size()))
        fail(ErrorKind::HorizonTooSmall, "horizon " + std::to_string(L) +
                                             " below part count " + std::to_string(p.size()));
    FSMultiset out;
    out.horizon = L;
    out.values.reserve(static_cast<std::size_t>(L));
    for (int i = 1; i <= L; ++i)
        out.values.push_back(i + p.part(static_cast<std::size_t>(i) - 1));
    std::sort(out.values.begin(), out.values.end());
    return out;
}

bool fs_equal(const Partition& p, const Partition& q) {
    const int L = static_cast<int>(std::max(p.size(), q.size()));
    if (L == 0) return true;
    return fs_multiset(p, L).values == fs_multiset(q, L).values;
}

Partition strict_representative(const Partition& p, long long cap) {
    if (p.empty()) fail(ErrorKind::EmptyPartition, "strict_representative of the empty partition");
    if (p.weight() > cap)
        fail(ErrorKind::CapExceeded, "strict_representative: weight " +
                                         std::to_string(p.weight()) + " above cap " +
                                         std::to_string(cap));
    std::vector<Partition> matches;
    for_each_strict_partition(p.weight(), [&](const Partition& cand) {
        if (fs_equal(p, cand)) matches.push_back(cand);
    }, cap);
    if (matches.size() != 1)
        throw std::logic_error("strict representative not unique for " + p.str() + ": found " +
                               std::to_string(matches.size()));
    return matches.front();
}

RookPoly rook_poly(const Partition& p, long long cap) {
    if (p.weight() > cap)
        fail(ErrorKind::CapExceeded, "rook_poly: weight " + std::to_string(p.weight()) +
                                         " above cap " + std::to_string(cap));
    RookPoly r;
    r.coeffs = {BigInt(1)};
    // columns in increasing height order; every row used so far lies inside
    // the taller new column, so a j-th rook sees c - (j-1) free cells
    const Partition cols = conjugate(p);
    for (auto it = cols.parts().rbegin(); it != cols.parts().rend(); ++it) {
        const int c = *it;
        std::vector<BigInt> next(r.coeffs.size() + 1, BigInt(0));
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            next[j] += r.coeffs[j];
            const long long free_cells = c - static_cast<long long>(j);
            if (free_cells > 0) next[j + 1] += r.coeffs[j] * free_cells;
        }
        if (next.back() == 0) next.pop_back();
        r.coeffs = std::move(next);
    }
    return r;
}

bool wilf_check(const Partition& p, const Partition& q, int N, long long cap) {
    return av_series(p, N, cap).counts == av_series(q, N, cap).counts;
}

} // namespace partav
