// similarity.hpp
//
// Pairwise chunk similarity on the 0..100 scale.
//
//   SET: Jaccard overlap of token sets, 100 * |A & B| / |A | B|.
//   LCS: Levenshtein-normalized sequence closeness,
//        100 * (1 - dist / max(len_x, len_y)).
//
// all_pairs() enumerates every unordered pair scoring >= threshold without
// materializing the full quadratic pair set: an inverted token index keeps
// only pairs that share a token, which is lossless for threshold > 0
// because both scores are exactly 0 on disjoint chunks.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "chunk.hpp"

namespace parallax {

enum class Method : std::uint8_t { SET = 0, LCS = 1 };

inline std::string method_label(Method m) { return m == Method::SET ? "SET" : "LCS"; }

inline Method parse_method(const std::string& text) {
    if (text == "SET" || text == "set") return Method::SET;
    if (text == "LCS" || text == "lcs") return Method::LCS;
    throw Error("bad method '" + text + "' (want SET or LCS)");
}

struct SimilarityEdge {
    int a = 0;  // chunk ids, a < b
    int b = 0;
    Method method = Method::SET;
    double score = 0.0;
};

/// Threshold comparator: ">= t" (edges, inventories) or "> t" (the
/// "higher than" filters). Explicit everywhere a threshold is applied so
/// the two conventions can never silently disagree.
enum class Cmp : std::uint8_t { ge, gt };

inline bool cmp_apply(Cmp cmp, double value, double threshold) {
    return cmp == Cmp::ge ? value >= threshold : value > threshold;
}

inline Cmp parse_cmp(const std::string& text) {
    if (text == "ge") return Cmp::ge;
    if (text == "gt") return Cmp::gt;
    throw Error("bad comparator '" + text + "' (want ge or gt)");
}

/// Jaccard set similarity; inputs are the chunks' sorted unique token ids.
inline double set_similarity(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    if (a.empty() || b.empty()) throw Error("set_similarity: empty token set");
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    std::size_t unified = a.size() + b.size() - common;
    return 100.0 * static_cast<double>(common) / static_cast<double>(unified);
}

/// Token-level edit distance (insert/delete/substitute, unit costs).
inline std::size_t levenshtein(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
    if (x.size() < y.size()) std::swap(x, y);  // y is the short side
    if (y.empty()) return x.size();
    std::vector<std::size_t> row(y.size() + 1);
    for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            std::size_t up = row[j];
            std::size_t cost = (x[i - 1] == y[j - 1]) ? 0 : 1;
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
            diag = up;
        }
    }
    return row[y.size()];
}

/// Levenshtein similarity; inputs are the chunks' in-order token sequences.
inline double lcs_similarity(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
    if (x.empty() || y.empty()) throw Error("lcs_similarity: empty token sequence");
    std::size_t longest = std::max(x.size(), y.size());
    std::size_t dist = levenshtein(x, y);
    return 100.0 * (1.0 - static_cast<double>(dist) / static_cast<double>(longest));
}

inline double chunk_similarity(const Chunk& a, const Chunk& b, Method method) {
    return method == Method::SET ? set_similarity(a.token_set, b.token_set)
                                 : lcs_similarity(a.tokens, b.tokens);
}

namespace detail {

/// Candidate pairs sharing at least one token. For each chunk, walks the
/// postings of its tokens and collects earlier chunk ids, deduplicated with
/// a stamp array. Calls fn(j, i) with j < i.
template <typename Fn>
void for_each_sharing_pair(const std::vector<Chunk>& chunks, Fn&& fn) {
    std::uint32_t max_token = 0;
    for (const Chunk& c : chunks)
        for (std::uint32_t t : c.token_set) max_token = std::max(max_token, t + 1);
    std::vector<std::vector<std::uint32_t>> postings(max_token);
    std::vector<std::uint32_t> stamp(chunks.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(chunks.size()); ++i) {
        for (std::uint32_t t : chunks[i].token_set) {
            for (std::uint32_t j : postings[t]) {
                if (stamp[j] == i) continue;
                stamp[j] = i;
                fn(j, i);
            }
            postings[t].push_back(i);
        }
    }
}

}  // namespace detail

/// Every unordered pair with similarity >= threshold, sorted by (a, b).
/// threshold == 0 enumerates all pairs exhaustively; threshold > 0 prunes
/// via the shared-token index (lossless: disjoint pairs score exactly 0).
/// For LCS an additional length screen drops pairs whose best achievable
/// score, from the length difference alone, is already below threshold.
inline std::vector<SimilarityEdge> all_pairs(const std::vector<Chunk>& chunks, Method method,
                                             double threshold, int jobs = 1) {
    if (threshold < 0.0 || threshold > 100.0) throw Error("threshold must be in [0, 100]");
    std::size_t n = chunks.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates;
    if (threshold <= 0.0) {
        if (n > 1) candidates.reserve(n * (n - 1) / 2);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    } else {
        detail::for_each_sharing_pair(chunks, [&](std::uint32_t a, std::uint32_t b) {
            candidates.emplace_back(a, b);
        });
    }
    if (method == Method::LCS && threshold > 0.0) {
        // length screen: dist >= |m - k|, so the score is capped at
        // 100 * (1 - |m - k| / max). Strict comparison keeps boundary pairs.
        std::erase_if(candidates, [&](const std::pair<std::uint32_t, std::uint32_t>& p) {
            double m = static_cast<double>(chunks[p.first].tokens.size());
            double k = static_cast<double>(chunks[p.second].tokens.size());
            double cap = 100.0 * (1.0 - std::abs(m - k) / std::max(m, k));
            return cap < threshold;
        });
    }

    std::vector<SimilarityEdge> edges(candidates.size());
    std::vector<char> keep(candidates.size(), 0);
    auto score_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            auto [ia, ib] = candidates[k];
            double s = chunk_similarity(chunks[ia], chunks[ib], method);
            if (s >= threshold) {
                int lo = std::min(chunks[ia].id, chunks[ib].id);
                int hi = std::max(chunks[ia].id, chunks[ib].id);
                edges[k] = SimilarityEdge{lo, hi, method, s};
                keep[k] = 1;
            }
        }
    };
    if (jobs <= 1 || candidates.size() < 64) {
        score_range(0, candidates.size());
    } else {
        std::atomic<std::size_t> cursor{0};
        constexpr std::size_t kBatch = 64;
        auto worker = [&]() {
            while (true) {
                std::size_t begin = cursor.fetch_add(kBatch);
                if (begin >= candidates.size()) return;
                score_range(begin, std::min(begin + kBatch, candidates.size()));
            }
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }

    std::vector<SimilarityEdge> out;
    out.reserve(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (keep[k]) out.push_back(edges[k]);
    std::sort(out.begin(), out.end(), [](const SimilarityEdge& l, const SimilarityEdge& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    return out;
}

}  // namespace parallax
