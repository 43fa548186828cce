// align.hpp
//
// Word-by-word alignment of two passages for synoptic display. An LCS over
// token ids anchors the words both sides share in order; everything
// between two anchors becomes one coalesced difference segment.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "corpus.hpp"

namespace parallax {

enum class SegmentKind : std::uint8_t {
    identical = 0,    // same tokens on both sides
    plus_left = 1,    // present only in the left passage
    plus_right = 2,   // present only in the right passage
    substitution = 3  // both sides present but different
};

struct DiffSegment {
    SegmentKind kind = SegmentKind::identical;
    std::vector<Word> left;
    std::vector<Word> right;
};

namespace detail {

/// Length-only LCS table (full (m+1)x(n+1), callers keep passages small).
inline std::vector<std::vector<std::uint32_t>> lcs_table(std::span<const std::uint32_t> a,
                                                         std::span<const std::uint32_t> b) {
    std::vector<std::vector<std::uint32_t>> dp(a.size() + 1,
                                               std::vector<std::uint32_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j)
            dp[i][j] = (a[i - 1] == b[j - 1]) ? dp[i - 1][j - 1] + 1
                                              : std::max(dp[i - 1][j], dp[i][j - 1]);
    return dp;
}

}  // namespace detail

/// Align two word sequences under `mode`. Output invariants:
///   - concatenating left sides of all segments reproduces `left`, same for right
///   - segments alternate: no two consecutive identical segments, and every
///     difference between two anchors is a single segment
///   - identical segments have equal-length sides; plus_left has empty right,
///     plus_right empty left, substitution both non-empty
inline std::vector<DiffSegment> align_words(std::span<const Word> left,
                                            std::span<const Word> right,
                                            TokenMode mode = TokenMode::lexeme) {
    auto key = [&](const Word& w) -> const std::string& {
        return mode == TokenMode::lexeme ? w.lexeme : w.surface;
    };
    // map both sides onto shared dense ids so the DP compares integers
    std::vector<std::uint32_t> a(left.size()), b(right.size());
    {
        detail::SymbolTable table;
        for (std::size_t i = 0; i < left.size(); ++i) a[i] = table.intern(key(left[i]));
        for (std::size_t j = 0; j < right.size(); ++j) b[j] = table.intern(key(right[j]));
    }
    std::vector<std::vector<std::uint32_t>> dp = detail::lcs_table(a, b);

    // backtrack from the far corner, emitting matches and gap runs
    struct Anchor {
        std::size_t i, j;
    };
    std::vector<Anchor> anchors;  // matched index pairs, collected backwards
    std::size_t i = a.size(), j = b.size();
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            anchors.push_back({i - 1, j - 1});
            --i;
            --j;
        } else if (dp[i - 1][j] >= dp[i][j - 1]) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(anchors.begin(), anchors.end());

    std::vector<DiffSegment> segments;
    auto emit_gap = [&](std::size_t li, std::size_t lj, std::size_t ri, std::size_t rj) {
        // unmatched left[li, ri) against right[lj, rj)
        if (li == ri && lj == rj) return;
        DiffSegment seg;
        for (std::size_t k = li; k < ri; ++k) seg.left.push_back(left[k]);
        for (std::size_t k = lj; k < rj; ++k) seg.right.push_back(right[k]);
        if (seg.right.empty()) seg.kind = SegmentKind::plus_left;
        else if (seg.left.empty()) seg.kind = SegmentKind::plus_right;
        else seg.kind = SegmentKind::substitution;
        segments.push_back(std::move(seg));
    };

    std::size_t pi = 0, pj = 0;
    std::size_t k = 0;
    while (k < anchors.size()) {
        emit_gap(pi, pj, anchors[k].i, anchors[k].j);
        // a run of consecutive matches becomes one identical segment
        DiffSegment seg;
        seg.kind = SegmentKind::identical;
        pi = anchors[k].i;
        pj = anchors[k].j;
        while (k < anchors.size() && anchors[k].i == pi && anchors[k].j == pj) {
            seg.left.push_back(left[pi]);
            seg.right.push_back(right[pj]);
            ++pi;
            ++pj;
            ++k;
        }
        segments.push_back(std::move(seg));
    }
    emit_gap(pi, pj, left.size(), right.size());
    return segments;
}

}  // namespace parallax
