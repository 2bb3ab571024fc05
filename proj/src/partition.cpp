#include "partav/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace partav {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorKind::BadToken, "parts must be positive, got " + std::to_string(parts_[i]));
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            fail(ErrorKind::NotDecreasing,
                 "parts must be weakly decreasing: " + std::to_string(parts_[i]) + " < " +
                     std::to_string(parts_[i + 1]));
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::parse(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<long long> raw;
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            fail(ErrorKind::BadToken, "not an integer: '" + tok + "'");
        }
        if (pos != tok.size())
            fail(ErrorKind::BadToken, "not an integer: '" + tok + "'");
        raw.push_back(v);
    }
    if (raw.empty())
        fail(ErrorKind::BadToken, "empty partition literal");
    if (raw.size() == 1 && raw[0] == 0) return Partition{};
    std::vector<int> parts;
    parts.reserve(raw.size());
    for (long long v : raw) {
        if (v <= 0)
            fail(ErrorKind::BadToken,
                 "parts must be positive (use the literal \"0\" for the empty partition)");
        if (v > 1'000'000'000)
            fail(ErrorKind::BadToken, "part too large: " + std::to_string(v));
        parts.push_back(static_cast<int>(v));
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            fail(ErrorKind::NotDecreasing, "parts must be weakly decreasing in '" + text + "'");
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition add(const Partition& p, const Partition& q) {
    const std::size_t n = std::max(p.size(), q.size());
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i) parts[i] = p.part(i) + q.part(i);
    return Partition(std::move(parts));
}

Partition constant_partition(int value, int count) {
    if (value < 0 || count < 0)
        fail(ErrorKind::BadArgument, "constant_partition needs nonnegative value and count");
    if (value == 0 || count == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

int top_multiplicity(const Partition& p) {
    if (p.empty()) return 0;
    int m = 0;
    while (m < static_cast<int>(p.size()) && p.parts()[m] == p.parts()[0]) ++m;
    return m;
}

Partition northeast_extend(const Partition& p) {
    if (p.empty()) fail(ErrorKind::EmptyPartition, "northeast_extend of the empty partition");
    std::vector<int> parts;
    parts.reserve(p.size() + 2);
    parts.push_back(p.parts()[0] + 1);
    parts.push_back(p.parts()[0]);
    parts.insert(parts.end(), p.parts().begin() + 1, p.parts().end());
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> parts(static_cast<std::size_t>(p.parts()[0]));
    for (int j = 1; j <= p.parts()[0]; ++j) {
        int cnt = 0;
        for (int v : p.parts())
            if (v >= j) ++cnt;
        parts[static_cast<std::size_t>(j - 1)] = cnt;
    }
    return Partition(std::move(parts));
}

ShapeClass classify(const Partition& p) {
    ShapeClass s;
    s.is_strict = true;
    s.is_super_strict = true;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const int gap = parts[i] - parts[i + 1];
        if (gap < 1) s.is_strict = false;
        if (gap < 2) s.is_super_strict = false;
    }
    int distinct = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1]) ++distinct;
    s.distinct_magnitudes = distinct;
    s.is_staircase = !parts.empty() && parts[0] == static_cast<int>(parts.size());
    if (s.is_staircase)
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] != static_cast<int>(parts.size() - i)) s.is_staircase = false;
    return s;
}

RectDecomp rect_decomp(const Partition& p) {
    if (p.empty()) fail(ErrorKind::EmptyPartition, "rect_decomp of the empty partition");
    RectDecomp d;
    // Distinct magnitudes ascending; rectangle i spans columns
    // (prev magnitude, magnitude] and is as tall as the rows reaching it.
    std::vector<int> mags(p.parts());
    std::sort(mags.begin(), mags.end());
    mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
    int prev = 0;
    for (int v : mags) {
        int height = 0;
        for (int row : p.parts())
            if (row >= v) ++height;
        d.widths.push_back(v - prev);
        d.heights.push_back(height);
        prev = v;
    }
    return d;
}

Partition from_rect_decomp(const RectDecomp& d) {
    if (d.widths.size() != d.heights.size() || d.widths.empty())
        fail(ErrorKind::InvalidDecomp, "widths and heights must be nonempty and equal length");
    for (std::size_t i = 0; i < d.widths.size(); ++i) {
        if (d.widths[i] <= 0 || d.heights[i] <= 0)
            fail(ErrorKind::InvalidDecomp, "widths and heights must be positive");
        if (i + 1 < d.heights.size() && d.heights[i] <= d.heights[i + 1])
            fail(ErrorKind::InvalidDecomp, "heights must be strictly decreasing");
    }
    std::vector<int> parts(static_cast<std::size_t>(d.heights[0]), 0);
    int magnitude = 0;
    for (std::size_t i = 0; i < d.widths.size(); ++i) {
        magnitude += d.widths[i];
        for (int r = 0; r < d.heights[i]; ++r) parts[static_cast<std::size_t>(r)] = magnitude;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

} // namespace partav
