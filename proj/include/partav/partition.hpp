#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "partav/errors.hpp"

namespace partav {

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// never stored.  Reads past the stored list return 0, matching the
/// infinite-sequence view.  Immutable after construction; weight is cached.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "6,5,5,2" (or space separated). "0" denotes the empty
    /// partition.  Input must already be weakly decreasing.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    /// 0-based access; indices past the end read as 0.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long weight() const { return weight_; }

    /// Canonical text form: comma separated parts, "0" when empty.
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

struct ShapeClass {
    bool is_strict = false;       // all positive parts distinct
    bool is_super_strict = false; // positive parts pairwise differ by >= 2
    bool is_staircase = false;    // parts are exactly (j, j-1, ..., 1)
    int distinct_magnitudes = 0;
};

/// Side-by-side rectangles, left to right: widths[i] columns of height
/// heights[i], heights strictly decreasing.
struct RectDecomp {
    std::vector<int> widths;
    std::vector<int> heights;
};

/// Componentwise sum; missing parts are 0.  The Ferrers board of the result
/// carries the columns of both summands.
Partition add(const Partition& p, const Partition& q);

/// The partition (value, value, ..., value) with `count` copies; as a board,
/// a count-row by value-column rectangle.  count = 0 or value = 0 gives the
/// empty partition.
Partition constant_partition(int value, int count);

/// Multiplicity of the largest part (length of the rightmost column);
/// 0 for the empty partition.
int top_multiplicity(const Partition& p);

/// (p1+1, p1, p2, p3, ...) — extends the southeast border by a north-east
/// step.  Requires a nonempty partition.
Partition northeast_extend(const Partition& p);

/// Transpose of the Ferrers board.
Partition conjugate(const Partition& p);

ShapeClass classify(const Partition& p);

/// Unique decomposition into side-by-side rectangles of strictly
/// decreasing heights.  Requires a nonempty partition.
RectDecomp rect_decomp(const Partition& p);
Partition from_rect_decomp(const RectDecomp& d);

} // namespace partav
