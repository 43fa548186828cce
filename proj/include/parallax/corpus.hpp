// corpus.hpp
//
// Hierarchical text corpus: books > chapters > verses > (half-verses,
// sentences) > words. Words carry a surface form and a lexeme; the corpus
// is immutable once parsed and safe for concurrent reads.
//
// Ingestion format: UTF-8 TSV, one word per line, header row exactly
//   book<TAB>chapter<TAB>verse<TAB>half<TAB>sentence<TAB>word_index<TAB>surface<TAB>lexeme
// half is A, B or -, sentence is the sentence ordinal within the verse,
// word_index restarts at 0 on every verse. Lines starting with '#' are
// comments; '#!' comments are directives (`#! id NAME`, `#! rtl`).

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace parallax {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse/validation failure carrying the 1-based input line number
/// (0 when no single line is at fault, e.g. an empty stream).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class Half : std::uint8_t { none = 0, A = 1, B = 2 };

inline char half_code(Half h) {
    switch (h) {
        case Half::A: return 'A';
        case Half::B: return 'B';
        default: return '-';
    }
}

struct Word {
    std::string surface;
    std::string lexeme;
    std::uint32_t ordinal = 0;  // position in canonical corpus order
};

/// Address of a passage. chapter == 0 addresses a whole book, verse == 0 a
/// whole chapter, half/sentence narrow a verse down to a half-verse or a
/// sentence. sentence == -1 means "none".
struct Reference {
    std::string book;
    int chapter = 0;
    int verse = 0;
    Half half = Half::none;
    int sentence = -1;

    bool operator==(const Reference&) const = default;
};

/// Which word field drives comparison: annotated lexemes (default) or the
/// written surface forms (cross-manuscript spelling studies).
enum class TokenMode { lexeme, surface };

struct SentenceSpan {
    int num = 0;  // sentence ordinal within its verse
    std::uint32_t first = 0;
    std::uint32_t count = 0;
};

struct HalfSpan {
    Half half = Half::none;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
};

struct Verse {
    int number = 0;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    std::vector<HalfSpan> halves;        // one span per half; single none-span if undivided
    std::vector<SentenceSpan> sentences;
};

struct Chapter {
    int number = 0;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    std::vector<Verse> verses;
};

struct Book {
    std::string name;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    std::vector<Chapter> chapters;
};

namespace detail {

/// Interning table mapping strings to dense ids in first-seen order.
class SymbolTable {
public:
    std::uint32_t intern(const std::string& s) {
        auto it = index_.find(s);
        if (it != index_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(strings_.size());
        strings_.push_back(s);
        index_.emplace(strings_.back(), id);
        return id;
    }
    const std::string& at(std::uint32_t id) const { return strings_.at(id); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(strings_.size()); }

private:
    std::vector<std::string> strings_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

inline std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

inline bool parse_int(std::string_view s, long& out) {
    if (s.empty()) return false;
    long value = 0;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        i = 1;
        if (s.size() == 1) return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        value = value * 10 + (s[i] - '0');
        if (value > 1000000000L) return false;
    }
    out = neg ? -value : value;
    return true;
}

}  // namespace detail

inline constexpr std::string_view kIngestionHeader =
    "book\tchapter\tverse\thalf\tsentence\tword_index\tsurface\tlexeme";

/// An immutable parsed corpus. All structural objects are contiguous spans
/// over one flat word array in canonical (file) order.
class Corpus {
public:
    std::string id = "corpus";
    bool rtl = false;

    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Book>& books() const { return books_; }

    /// Canonical book index (file order of first appearance), -1 if absent.
    int book_index(std::string_view name) const {
        for (std::size_t i = 0; i < books_.size(); ++i)
            if (books_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    const Book* find_book(std::string_view name) const {
        int i = book_index(name);
        return i < 0 ? nullptr : &books_[static_cast<std::size_t>(i)];
    }

    std::uint32_t lexeme_id(std::uint32_t ordinal) const { return lexeme_ids_[ordinal]; }
    std::uint32_t surface_id(std::uint32_t ordinal) const { return surface_ids_[ordinal]; }
    std::uint32_t token_id(std::uint32_t ordinal, TokenMode mode) const {
        return mode == TokenMode::lexeme ? lexeme_ids_[ordinal] : surface_ids_[ordinal];
    }
    const std::string& lexeme_string(std::uint32_t id) const { return lexemes_.at(id); }
    const std::string& surface_string(std::uint32_t id) const { return surfaces_.at(id); }
    const std::string& token_string(std::uint32_t id, TokenMode mode) const {
        return mode == TokenMode::lexeme ? lexemes_.at(id) : surfaces_.at(id);
    }
    std::uint32_t lexeme_count() const { return lexemes_.size(); }
    std::uint32_t surface_count() const { return surfaces_.size(); }

    /// Full word-level address (book, chapter, verse, half, sentence).
    Reference address_of(std::uint32_t ordinal) const {
        const WordAddress& a = addr_[ordinal];
        Reference r;
        r.book = books_[a.book].name;
        r.chapter = a.chapter;
        r.verse = a.verse;
        r.half = a.half;
        r.sentence = a.sentence;
        return r;
    }

    Half half_of(std::uint32_t ordinal) const { return addr_[ordinal].half; }
    int sentence_of(std::uint32_t ordinal) const { return addr_[ordinal].sentence; }

    /// Total reference order: (book canonical index, chapter, verse, half,
    /// sentence), container-before-contents (0 / none sorts first).
    /// Returns <0, 0, >0. Throws on an unknown book name.
    int compare(const Reference& a, const Reference& b) const {
        int ba = require_book_index(a.book);
        int bb = require_book_index(b.book);
        if (ba != bb) return ba < bb ? -1 : 1;
        if (a.chapter != b.chapter) return a.chapter < b.chapter ? -1 : 1;
        if (a.verse != b.verse) return a.verse < b.verse ? -1 : 1;
        if (a.half != b.half) return static_cast<int>(a.half) < static_cast<int>(b.half) ? -1 : 1;
        if (a.sentence != b.sentence) return a.sentence < b.sentence ? -1 : 1;
        return 0;
    }

    struct OrdinalRange {
        std::uint32_t first = 0;
        std::uint32_t last = 0;  // inclusive
    };

    /// Resolve a reference to its inclusive word-ordinal span.
    OrdinalRange resolve(const Reference& ref) const {
        int bi = require_book_index(ref.book);
        const Book& book = books_[static_cast<std::size_t>(bi)];
        if (ref.chapter == 0) return {book.first, book.first + book.count - 1};
        const Chapter* chapter = nullptr;
        for (const Chapter& c : book.chapters)
            if (c.number == ref.chapter) { chapter = &c; break; }
        if (!chapter)
            throw Error("no chapter " + std::to_string(ref.chapter) + " in book '" + ref.book + "'");
        if (ref.verse == 0) return {chapter->first, chapter->first + chapter->count - 1};
        const Verse* verse = nullptr;
        for (const Verse& v : chapter->verses)
            if (v.number == ref.verse) { verse = &v; break; }
        if (!verse)
            throw Error("no verse " + ref.book + " " + std::to_string(ref.chapter) + ":" +
                        std::to_string(ref.verse));
        if (ref.half != Half::none) {
            for (const HalfSpan& h : verse->halves)
                if (h.half == ref.half) return {h.first, h.first + h.count - 1};
            throw Error("verse " + ref.book + " " + std::to_string(ref.chapter) + ":" +
                        std::to_string(ref.verse) + " has no half " + half_code(ref.half));
        }
        if (ref.sentence >= 0) {
            for (const SentenceSpan& s : verse->sentences)
                if (s.num == ref.sentence) return {s.first, s.first + s.count - 1};
            throw Error("verse " + ref.book + " " + std::to_string(ref.chapter) + ":" +
                        std::to_string(ref.verse) + " has no sentence " +
                        std::to_string(ref.sentence));
        }
        return {verse->first, verse->first + verse->count - 1};
    }

    /// All words whose address lies in the inclusive range, canonical order.
    std::span<const Word> slice(const Reference& from, const Reference& to) const {
        if (compare(from, to) > 0) throw Error("slice: 'from' reference is after 'to'");
        OrdinalRange lo = resolve(from);
        OrdinalRange hi = resolve(to);
        return std::span<const Word>(words_.data() + lo.first, hi.last - lo.first + 1);
    }

    Reference min_ref() const { return address_of(0); }
    Reference max_ref() const { return address_of(static_cast<std::uint32_t>(words_.size() - 1)); }

    static Corpus parse(std::istream& in, std::string fallback_id = "corpus");
    static Corpus parse_string(const std::string& text, std::string fallback_id = "corpus") {
        std::istringstream in(text);
        return parse(in, std::move(fallback_id));
    }

    /// Serialize back to the ingestion format (directives + header + rows).
    std::string to_tsv() const;

private:
    struct WordAddress {
        std::uint16_t book = 0;
        int chapter = 0;
        int verse = 0;
        Half half = Half::none;
        int sentence = 0;
    };

    int require_book_index(std::string_view name) const {
        int i = book_index(name);
        if (i < 0) throw Error("unknown book '" + std::string(name) + "'");
        return i;
    }

    std::vector<Word> words_;
    std::vector<WordAddress> addr_;
    std::vector<Book> books_;
    detail::SymbolTable lexemes_;
    detail::SymbolTable surfaces_;
    std::vector<std::uint32_t> lexeme_ids_;
    std::vector<std::uint32_t> surface_ids_;

    friend Corpus parse_corpus_impl(std::istream&, std::string);
};

inline Corpus parse_corpus_impl(std::istream& in, std::string fallback_id) {
    Corpus corpus;
    corpus.id = std::move(fallback_id);

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t records = 0;

    // Per-book/chapter/verse running state.
    std::unordered_map<std::string, bool> seen_books;
    Book* book = nullptr;
    Chapter* chapter = nullptr;
    Verse* verse = nullptr;

    auto close_verse = [&]() {
        if (!verse) return;
        // materialize half and sentence spans from the per-word columns
        std::uint32_t end = verse->first + verse->count;
        std::uint32_t i = verse->first;
        while (i < end) {
            Half h = corpus.addr_[i].half;
            std::uint32_t j = i;
            while (j < end && corpus.addr_[j].half == h) ++j;
            verse->halves.push_back({h, i, j - i});
            i = j;
        }
        i = verse->first;
        while (i < end) {
            int num = corpus.addr_[i].sentence;
            std::uint32_t j = i;
            while (j < end && corpus.addr_[j].sentence == num) ++j;
            verse->sentences.push_back({num, i, j - i});
            i = j;
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.size() > 1 && line[1] == '!') {
                std::istringstream dir(line.substr(2));
                std::string key;
                dir >> key;
                if (key == "id") {
                    std::string value;
                    dir >> value;
                    if (!value.empty()) corpus.id = value;
                } else if (key == "rtl") {
                    corpus.rtl = true;
                }
            }
            continue;
        }
        if (!header_seen) {
            if (line != kIngestionHeader)
                throw ParseError(line_no, "bad header, expected: " + std::string(kIngestionHeader));
            header_seen = true;
            continue;
        }

        std::vector<std::string_view> f = detail::split_tabs(line);
        if (f.size() != 8)
            throw ParseError(line_no, "malformed line: expected 8 tab-separated fields, got " +
                                          std::to_string(f.size()));
        std::string book_name(f[0]);
        long chapter_no = 0, verse_no = 0, sentence_no = 0, word_index = 0;
        if (book_name.empty()) throw ParseError(line_no, "empty book name");
        if (!detail::parse_int(f[1], chapter_no) || chapter_no <= 0)
            throw ParseError(line_no, "chapter must be a positive integer");
        if (!detail::parse_int(f[2], verse_no) || verse_no <= 0)
            throw ParseError(line_no, "verse must be a positive integer");
        Half half = Half::none;
        if (f[3] == "A") half = Half::A;
        else if (f[3] == "B") half = Half::B;
        else if (f[3] != "-")
            throw ParseError(line_no, "half must be A, B or -");
        if (!detail::parse_int(f[4], sentence_no) || sentence_no < 0)
            throw ParseError(line_no, "sentence must be a non-negative integer");
        if (!detail::parse_int(f[5], word_index) || word_index < 0)
            throw ParseError(line_no, "word_index must be a non-negative integer");
        if (f[7].empty()) throw ParseError(line_no, "empty lexeme field");

        if (!book || book->name != book_name) {
            if (seen_books.count(book_name))
                throw ParseError(line_no, "book '" + book_name + "' reappears after other books");
            seen_books[book_name] = true;
            close_verse();
            corpus.books_.push_back(Book{book_name, static_cast<std::uint32_t>(corpus.words_.size()), 0, {}});
            book = &corpus.books_.back();
            chapter = nullptr;
            verse = nullptr;
        }
        if (!chapter || chapter->number != chapter_no) {
            if (chapter && chapter_no < chapter->number)
                throw ParseError(line_no, "non-monotone chapter numbering in book '" + book_name +
                                              "': chapter " + std::to_string(chapter_no) +
                                              " after chapter " + std::to_string(chapter->number));
            close_verse();
            book->chapters.push_back(
                Chapter{static_cast<int>(chapter_no), static_cast<std::uint32_t>(corpus.words_.size()), 0, {}});
            chapter = &book->chapters.back();
            verse = nullptr;
        }
        if (!verse || verse->number != verse_no) {
            if (verse && verse_no < verse->number)
                throw ParseError(line_no, "non-monotone verse numbering in " + book_name + " " +
                                              std::to_string(chapter_no) + ": verse " +
                                              std::to_string(verse_no) + " after verse " +
                                              std::to_string(verse->number));
            close_verse();
            chapter->verses.push_back(
                Verse{static_cast<int>(verse_no), static_cast<std::uint32_t>(corpus.words_.size()), 0, {}, {}});
            verse = &chapter->verses.back();
            if (word_index != 0)
                throw ParseError(line_no, "word_index must restart at 0 on a new verse, got " +
                                              std::to_string(word_index));
        } else {
            long expected = static_cast<long>(verse->count);
            if (word_index < expected)
                throw ParseError(line_no, "duplicate (book, chapter, verse, word_index) key: " +
                                              book_name + " " + std::to_string(chapter_no) + ":" +
                                              std::to_string(verse_no) + " word " +
                                              std::to_string(word_index));
            if (word_index > expected)
                throw ParseError(line_no, "word_index gap: expected " + std::to_string(expected) +
                                              ", got " + std::to_string(word_index));
        }

        // half spans: all '-' or an A run optionally followed by a B run
        if (verse->count > 0) {
            Half prev = corpus.addr_.back().half;
            bool ok = (half == prev) ||
                      (prev == Half::A && half == Half::B);
            if (!ok)
                throw ParseError(line_no, "half-verse spans must be contiguous (A before B, no mixing with -)");
            int prev_sentence = corpus.addr_.back().sentence;
            if (sentence_no < prev_sentence)
                throw ParseError(line_no, "sentence ordinal decreases within verse");
        } else if (half == Half::B) {
            throw ParseError(line_no, "verse starts with half B");
        }

        std::uint32_t ordinal = static_cast<std::uint32_t>(corpus.words_.size());
        corpus.words_.push_back(Word{std::string(f[6]), std::string(f[7]), ordinal});
        corpus.addr_.push_back(Corpus::WordAddress{
            static_cast<std::uint16_t>(corpus.books_.size() - 1), static_cast<int>(chapter_no),
            static_cast<int>(verse_no), half, static_cast<int>(sentence_no)});
        corpus.lexeme_ids_.push_back(corpus.lexemes_.intern(std::string(f[7])));
        corpus.surface_ids_.push_back(corpus.surfaces_.intern(std::string(f[6])));
        verse->count += 1;
        chapter->count += 1;
        book->count += 1;
        ++records;
    }
    close_verse();
    if (records == 0) throw ParseError(0, "no records");
    return corpus;
}

inline Corpus Corpus::parse(std::istream& in, std::string fallback_id) {
    return parse_corpus_impl(in, std::move(fallback_id));
}

inline std::string Corpus::to_tsv() const {
    std::string out;
    out += "#! id " + id + "\n";
    if (rtl) out += "#! rtl\n";
    out += std::string(kIngestionHeader) + "\n";
    for (const Book& book : books_) {
        for (const Chapter& chapter : book.chapters) {
            for (const Verse& verse : chapter.verses) {
                for (std::uint32_t k = 0; k < verse.count; ++k) {
                    std::uint32_t i = verse.first + k;
                    const WordAddress& a = addr_[i];
                    out += book.name;
                    out += '\t';
                    out += std::to_string(chapter.number);
                    out += '\t';
                    out += std::to_string(verse.number);
                    out += '\t';
                    out += half_code(a.half);
                    out += '\t';
                    out += std::to_string(a.sentence);
                    out += '\t';
                    out += std::to_string(k);
                    out += '\t';
                    out += words_[i].surface;
                    out += '\t';
                    out += words_[i].lexeme;
                    out += '\n';
                }
            }
        }
    }
    return out;
}

/// Short printable form: "Book 3:4", "Book 3:4A", "Book 3:4.2", "Book 3".
inline std::string format_reference(const Reference& r) {
    std::string s = r.book;
    if (r.chapter > 0) {
        s += " " + std::to_string(r.chapter);
        if (r.verse > 0) {
            s += ":" + std::to_string(r.verse);
            if (r.half != Half::none) s += half_code(r.half);
            if (r.sentence >= 0) s += "." + std::to_string(r.sentence);
        }
    }
    return s;
}

}  // namespace parallax
