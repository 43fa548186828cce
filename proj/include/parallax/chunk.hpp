// chunk.hpp
//
// Chunk inventories: cut a corpus into comparable units, either fixed-size
// sliding windows or structural objects (sentence, half-verse, verse,
// chapter). Each chunk caches its token sequence and sorted token set so
// the similarity layer never touches strings.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace parallax {

enum class GranularityKind : std::uint8_t { fixed = 0, sentence, half_verse, verse, chapter };

struct GranularitySpec {
    GranularityKind kind = GranularityKind::verse;
    int size = 0;  // window size, fixed kind only

    auto operator<=>(const GranularitySpec&) const = default;

    std::string label() const {
        switch (kind) {
            case GranularityKind::fixed: return "fixed_" + std::to_string(size);
            case GranularityKind::sentence: return "sentence";
            case GranularityKind::half_verse: return "half_verse";
            case GranularityKind::verse: return "verse";
            case GranularityKind::chapter: return "chapter";
        }
        return "?";
    }

    static GranularitySpec parse(const std::string& text) {
        if (text == "sentence") return {GranularityKind::sentence, 0};
        if (text == "half_verse") return {GranularityKind::half_verse, 0};
        if (text == "verse") return {GranularityKind::verse, 0};
        if (text == "chapter") return {GranularityKind::chapter, 0};
        if (text.rfind("fixed_", 0) == 0) {
            long n = 0;
            if (detail::parse_int(text.substr(6), n) && n >= 2)
                return {GranularityKind::fixed, static_cast<int>(n)};
        }
        throw Error("bad granularity '" + text +
                    "' (want fixed_N, sentence, half_verse, verse or chapter)");
    }
};

/// A contiguous run of corpus words plus its precomputed token views.
/// `tokens` is the in-order token id sequence, `token_set` the sorted
/// deduplicated ids. Ids come from the corpus symbol tables under `mode`.
struct Chunk {
    int id = 0;
    const Corpus* corpus = nullptr;
    Reference start;
    Reference end;
    std::uint32_t first = 0;
    std::uint32_t size = 0;
    GranularitySpec granularity;
    TokenMode mode = TokenMode::lexeme;
    std::vector<std::uint32_t> tokens;
    std::vector<std::uint32_t> token_set;

    std::span<const Word> words() const {
        return std::span<const Word>(corpus->words().data() + first, size);
    }
};

namespace detail {

inline Chunk make_chunk(const Corpus& corpus, int id, std::uint32_t first, std::uint32_t count,
                        GranularitySpec granularity, TokenMode mode) {
    Chunk c;
    c.id = id;
    c.corpus = &corpus;
    c.first = first;
    c.size = count;
    c.granularity = granularity;
    c.mode = mode;
    c.start = corpus.address_of(first);
    c.end = corpus.address_of(first + count - 1);
    // cite the chunk at its own resolution: a verse chunk is "Book 1:2",
    // not the address of its first word
    auto trim = [&](Reference& r) {
        if (granularity.kind != GranularityKind::sentence) r.sentence = -1;
        if (granularity.kind != GranularityKind::half_verse) r.half = Half::none;
        if (granularity.kind == GranularityKind::chapter) r.verse = 0;
    };
    trim(c.start);
    trim(c.end);
    c.tokens.reserve(count);
    for (std::uint32_t i = first; i < first + count; ++i)
        c.tokens.push_back(corpus.token_id(i, mode));
    c.token_set = c.tokens;
    std::sort(c.token_set.begin(), c.token_set.end());
    c.token_set.erase(std::unique(c.token_set.begin(), c.token_set.end()), c.token_set.end());
    return c;
}

}  // namespace detail

/// Non-overlapping fixed-size windows in corpus order. The final short
/// window is kept only when it has at least 2 words; a lone trailing word
/// cannot meaningfully match anything.
inline std::vector<Chunk> chunk_fixed(const Corpus& corpus, int window,
                                      TokenMode mode = TokenMode::lexeme) {
    if (window < 2) throw Error("fixed window must be >= 2 words");
    std::vector<Chunk> chunks;
    std::uint32_t n = static_cast<std::uint32_t>(corpus.size());
    std::uint32_t w = static_cast<std::uint32_t>(window);
    int id = 0;
    for (std::uint32_t first = 0; first < n; first += w) {
        std::uint32_t count = std::min(w, n - first);
        if (count < 2) break;
        chunks.push_back(detail::make_chunk(corpus, id++, first, count,
                                            {GranularityKind::fixed, window}, mode));
    }
    return chunks;
}

/// One chunk per structural object of the requested level, corpus order.
/// A verse with no half annotation yields a single half-verse chunk.
inline std::vector<Chunk> chunk_by_object(const Corpus& corpus, GranularityKind level,
                                          TokenMode mode = TokenMode::lexeme) {
    if (level == GranularityKind::fixed)
        throw Error("chunk_by_object: fixed granularity needs a window size, use chunk_fixed");
    GranularitySpec spec{level, 0};
    std::vector<Chunk> chunks;
    int id = 0;
    auto emit = [&](std::uint32_t first, std::uint32_t count) {
        if (count == 0) return;
        chunks.push_back(detail::make_chunk(corpus, id++, first, count, spec, mode));
    };
    for (const Book& book : corpus.books()) {
        for (const Chapter& chapter : book.chapters) {
            if (level == GranularityKind::chapter) {
                emit(chapter.first, chapter.count);
                continue;
            }
            for (const Verse& verse : chapter.verses) {
                switch (level) {
                    case GranularityKind::verse:
                        emit(verse.first, verse.count);
                        break;
                    case GranularityKind::half_verse:
                        for (const HalfSpan& h : verse.halves) emit(h.first, h.count);
                        break;
                    case GranularityKind::sentence:
                        for (const SentenceSpan& s : verse.sentences) emit(s.first, s.count);
                        break;
                    default:
                        break;
                }
            }
        }
    }
    return chunks;
}

/// Dispatch on the spec kind.
inline std::vector<Chunk> make_inventory(const Corpus& corpus, GranularitySpec spec,
                                         TokenMode mode = TokenMode::lexeme) {
    if (spec.kind == GranularityKind::fixed) return chunk_fixed(corpus, spec.size, mode);
    return chunk_by_object(corpus, spec.kind, mode);
}

}  // namespace parallax
