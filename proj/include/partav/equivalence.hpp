#pragma once

#include <vector>

#include "partav/bigint.hpp"
#include "partav/enumeration.hpp"
#include "partav/partition.hpp"

namespace partav {

inline constexpr long long kDefaultSearchCap = 40; // strict_representative / rook_poly

/// The multiset {i + p_i : 1 <= i <= L} (parts past the list read as 0),
/// stored sorted.  Two partitions of equal weight are rook equivalent iff
/// these multisets agree at any horizon covering both part lists.
struct FSMultiset {
    int horizon = 0;
    std::vector<long long> values;
    bool operator==(const FSMultiset&) const = default;
};

FSMultiset fs_multiset(const Partition& p, int L);

/// Multiset comparison at the joint horizon max(len(p), len(q)).
bool fs_equal(const Partition& p, const Partition& q);

/// The unique strict partition sharing p's multiset (and hence its rook
/// polynomial and avoidance counts), found by search over strict partitions
/// of the same weight.  Throws std::logic_error if the match is not unique —
/// that signals an implementation bug, never a valid input.
Partition strict_representative(const Partition& p, long long cap = kDefaultSearchCap);

/// r_j = number of placements of j non-attacking rooks on the Ferrers board.
struct RookPoly {
    std::vector<BigInt> coeffs; // index j
    bool operator==(const RookPoly&) const = default;
};

/// Computed by the column recurrence r_j' = r_j + (c - (j-1)) r_{j-1},
/// adding columns in increasing height order.
RookPoly rook_poly(const Partition& p, long long cap = kDefaultSearchCap);

/// av_series(p, N) == av_series(q, N): a necessary condition for Wilf
/// equivalence checked by enumeration, not a proof.
bool wilf_check(const Partition& p, const Partition& q, int N,
                long long cap = kDefaultEnumCap);

} // namespace partav
