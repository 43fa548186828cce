// fixtures.hpp
//
// Corpus builders and synthetic inventories shared by the test suites.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <parallax/chunk.hpp>
#include <parallax/corpus.hpp>

namespace testsupport {

/// Incremental TSV builder. Words default to surface == lexeme.
class TsvBuilder {
public:
    explicit TsvBuilder(std::string id = "", bool rtl = false) {
        if (!id.empty()) text_ += "#! id " + id + "\n";
        if (rtl) text_ += "#! rtl\n";
        text_ += std::string(parallax::kIngestionHeader) + "\n";
    }

    /// Append one word row. half: '-', 'A' or 'B'.
    TsvBuilder& word(const std::string& book, int chapter, int verse, char half, int sentence,
                     int word_index, const std::string& surface, const std::string& lexeme) {
        text_ += book + "\t" + std::to_string(chapter) + "\t" + std::to_string(verse) + "\t" +
                 half + std::string() + "\t" + std::to_string(sentence) + "\t" +
                 std::to_string(word_index) + "\t" + surface + "\t" + lexeme + "\n";
        return *this;
    }

    /// Append a whole verse of space-separated lexemes, one sentence, no halves.
    TsvBuilder& verse(const std::string& book, int chapter, int verse_no,
                      const std::vector<std::string>& lexemes) {
        for (std::size_t i = 0; i < lexemes.size(); ++i)
            word(book, chapter, verse_no, '-', 0, static_cast<int>(i), lexemes[i], lexemes[i]);
        return *this;
    }

    TsvBuilder& raw(const std::string& line) {
        text_ += line + "\n";
        return *this;
    }

    const std::string& text() const { return text_; }
    parallax::Corpus parse(const std::string& fallback_id = "corpus") const {
        return parallax::Corpus::parse_string(text_, fallback_id);
    }

private:
    std::string text_;
};

/// Chunks detached from any corpus, enough for similarity and clique
/// tests (all_pairs never dereferences the corpus pointer).
inline std::vector<parallax::Chunk> fake_chunks(
    const std::vector<std::vector<std::uint32_t>>& token_lists) {
    std::vector<parallax::Chunk> chunks;
    for (std::size_t i = 0; i < token_lists.size(); ++i) {
        parallax::Chunk c;
        c.id = static_cast<int>(i);
        c.tokens = token_lists[i];
        c.token_set = token_lists[i];
        std::sort(c.token_set.begin(), c.token_set.end());
        c.token_set.erase(std::unique(c.token_set.begin(), c.token_set.end()),
                          c.token_set.end());
        c.size = static_cast<std::uint32_t>(c.tokens.size());
        chunks.push_back(std::move(c));
    }
    return chunks;
}

/// Random non-empty token sequences from a small vocabulary.
inline std::vector<std::vector<std::uint32_t>> random_token_lists(std::mt19937& rng,
                                                                  std::size_t count,
                                                                  int max_len, int vocab) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<std::uint32_t> tok_dist(0,
                                                          static_cast<std::uint32_t>(vocab - 1));
    std::vector<std::vector<std::uint32_t>> lists(count);
    for (auto& list : lists) {
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) list.push_back(tok_dist(rng));
    }
    return lists;
}

/// The planted-parallel corpus:
///   Alpha 1: 12 verses x 8 words; consecutive verses share 4 lexemes
///            (stride-4 windows over one lexeme line), so low thresholds
///            chain the whole chapter.
///   Beta 1:  verbatim copy of Alpha 1.
///   Gamma 1: copy of Alpha 1 with 14 of 96 words substituted (~15%),
///            two per verse in verses 1..7; verses 8..12 stay verbatim.
///   Delta 1: a name list, lexemes disjoint from everything else.
///   Epsilon 1: a narrative of the same shape as Delta 1 (same verse
///            lengths, shared order) but with entirely different lexemes.
inline std::string planted_corpus_tsv() {
    auto lex = [](const char* prefix, int i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%s%03d", prefix, i);
        return std::string(buf);
    };
    TsvBuilder b("planted");
    auto base_verse = [&](int v) {
        std::vector<std::string> words;
        for (int j = 0; j < 8; ++j) words.push_back(lex("w", 4 * v + j));
        return words;
    };
    for (int v = 0; v < 12; ++v) b.verse("Alpha", 1, v + 1, base_verse(v));
    for (int v = 0; v < 12; ++v) b.verse("Beta", 1, v + 1, base_verse(v));
    for (int v = 0; v < 12; ++v) {
        std::vector<std::string> words = base_verse(v);
        if (v < 7) {  // 7 verses x 2 substitutions = 14 of 96 words
            words[1] = lex("s", 2 * v);
            words[5] = lex("s", 2 * v + 1);
        }
        b.verse("Gamma", 1, v + 1, words);
    }
    auto filler_book = [&](const char* book, const char* prefix) {
        for (int v = 0; v < 12; ++v) {
            std::vector<std::string> words;
            for (int j = 0; j < 8; ++j) words.push_back(lex(prefix, 8 * v + j));
            b.verse(book, 1, v + 1, words);
        }
    };
    filler_book("Delta", "n");
    filler_book("Epsilon", "m");
    return b.text();
}

/// A ~10,000-word synthetic corpus with a shared vocabulary so chunks
/// overlap realistically: 5 books x 10 chapters x 25 verses x 8 words.
inline std::string large_corpus_tsv() {
    TsvBuilder b("large");
    const char* books[] = {"Liber1", "Liber2", "Liber3", "Liber4", "Liber5"};
    int verse_counter = 0;
    for (int bk = 0; bk < 5; ++bk) {
        for (int ch = 1; ch <= 10; ++ch) {
            for (int v = 1; v <= 25; ++v) {
                std::vector<std::string> words;
                for (int j = 0; j < 8; ++j) {
                    int t = (verse_counter * 31 + j * 7 + bk * 13) % 600;
                    char buf[16];
                    std::snprintf(buf, sizeof buf, "w%03d", t);
                    words.push_back(buf);
                }
                b.verse(books[bk], ch, v, words);
                ++verse_counter;
            }
        }
    }
    return b.text();
}

}  // namespace testsupport
