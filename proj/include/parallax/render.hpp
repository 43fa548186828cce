// render.hpp
//
// Human-facing output: color-coded synoptic chapter comparisons (HTML),
// the experiment grid table (HTML), cross-manuscript reports, and SVG
// parallel maps. All markup is emitted XML-well-formed so the pages can be
// checked mechanically.
//
// Color semantics in comparisons: identical words unhighlighted, words
// only in the left text green, only in the right text red, substituted
// words yellow. Which side gets green vs red is our convention (left =
// green); the rendered legend states it.

#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "align.hpp"
#include "clique.hpp"
#include "corpus.hpp"

namespace parallax {

inline std::string html_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

/// File-name-safe passage label: spaces become underscores, anything else
/// outside [A-Za-z0-9_.-] becomes an underscore too.
inline std::string sanitize_name(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '.' || c == '-' || c == '_';
        out += ok ? c : '_';
    }
    return out;
}

inline std::string comparison_file_name(const std::string& left_book, int left_chapter,
                                        const std::string& right_book, int right_chapter) {
    return sanitize_name(left_book) + "_" + std::to_string(left_chapter) + "_vs_" +
           sanitize_name(right_book) + "_" + std::to_string(right_chapter) + ".html";
}

struct ScoredVerseLink {
    int left_verse = 0;
    int right_verse = 0;
    double score = 0.0;
};

/// Greedy one-to-one verse matching: links claim verses in descending
/// score order (ties broken by verse numbers), each verse used at most
/// once. Returns (left verse, right verse) pairs sorted by left verse.
inline std::vector<std::pair<int, int>> pair_verses(std::vector<ScoredVerseLink> links) {
    std::sort(links.begin(), links.end(), [](const ScoredVerseLink& a, const ScoredVerseLink& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.left_verse != b.left_verse) return a.left_verse < b.left_verse;
        return a.right_verse < b.right_verse;
    });
    std::set<int> used_left, used_right;
    std::vector<std::pair<int, int>> pairs;
    for (const ScoredVerseLink& l : links) {
        if (used_left.count(l.left_verse) || used_right.count(l.right_verse)) continue;
        used_left.insert(l.left_verse);
        used_right.insert(l.right_verse);
        pairs.push_back({l.left_verse, l.right_verse});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

namespace detail {

inline const char* segment_class(SegmentKind kind) {
    switch (kind) {
        case SegmentKind::identical: return "identical";
        case SegmentKind::plus_left: return "plus_left";
        case SegmentKind::plus_right: return "plus_right";
        case SegmentKind::substitution: return "substitution";
    }
    return "identical";
}

// display always shows surface forms; alignment mode only drives matching
inline void append_words_span(std::string& out, SegmentKind kind, const std::vector<Word>& words) {
    if (words.empty()) return;
    out += "<span class=\"";
    out += segment_class(kind);
    out += "\">";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += html_escape(words[i].surface);
    }
    out += "</span> ";
}

inline std::span<const Word> passage_words(const Corpus& corpus, const Reference& ref) {
    Corpus::OrdinalRange r = corpus.resolve(ref);
    return std::span<const Word>(corpus.words().data() + r.first, r.last - r.first + 1);
}

inline const Chapter& require_chapter(const Corpus& corpus, const Reference& ref) {
    const Book* book = corpus.find_book(ref.book);
    if (!book) throw Error("unknown book '" + ref.book + "'");
    for (const Chapter& c : book->chapters)
        if (c.number == ref.chapter) return c;
    throw Error("no chapter " + std::to_string(ref.chapter) + " in book '" + ref.book + "'");
}

/// Table rows: one per verse pair or one-sided verse.
struct SynopsisRow {
    std::optional<Reference> left;
    std::optional<Reference> right;
};

/// Expand explicit verse pairs into the full chapter row list: left verses
/// in order (paired rows carry their partner), then right verses no pair
/// claimed, in order.
inline std::vector<SynopsisRow> chapter_rows(const Corpus& left_corpus,
                                             const Reference& left_chapter,
                                             const Corpus& right_corpus,
                                             const Reference& right_chapter,
                                             const std::vector<std::pair<Reference, Reference>>&
                                                 verse_pairs) {
    const Chapter& lc = require_chapter(left_corpus, left_chapter);
    const Chapter& rc = require_chapter(right_corpus, right_chapter);
    std::multimap<int, Reference> partner_of_left;
    std::set<int> used_right;
    for (const auto& [l, r] : verse_pairs) {
        partner_of_left.emplace(l.verse, r);
        used_right.insert(r.verse);
    }
    std::vector<SynopsisRow> rows;
    for (const Verse& v : lc.verses) {
        auto [begin, end] = partner_of_left.equal_range(v.number);
        Reference lref = left_chapter;
        lref.verse = v.number;
        if (begin == end) {
            rows.push_back(SynopsisRow{lref, std::nullopt});
            continue;
        }
        for (auto it = begin; it != end; ++it) rows.push_back(SynopsisRow{lref, it->second});
    }
    for (const Verse& v : rc.verses) {
        if (used_right.count(v.number)) continue;
        Reference rref = right_chapter;
        rref.verse = v.number;
        rows.push_back(SynopsisRow{std::nullopt, rref});
    }
    return rows;
}

}  // namespace detail

inline constexpr std::string_view kComparisonNote =
    "Highlighted pluses and substitutions are only a formal, computational indication of "
    "shared or divergent wording; they imply no judgement about direction of borrowing.";

/// The bare synoptic table for a row list (no page shell).
inline std::string render_comparison_table(const Corpus& left_corpus,
                                           const Corpus& right_corpus,
                                           const std::vector<detail::SynopsisRow>& rows,
                                           TokenMode mode) {
    std::string out;
    out += "<table class=\"synopsis\">\n";
    const char* left_dir = left_corpus.rtl ? " dir=\"rtl\"" : "";
    const char* right_dir = right_corpus.rtl ? " dir=\"rtl\"" : "";
    for (const detail::SynopsisRow& row : rows) {
        out += "<tr>";
        if (row.left && row.right) {
            std::span<const Word> lw = detail::passage_words(left_corpus, *row.left);
            std::span<const Word> rw = detail::passage_words(right_corpus, *row.right);
            std::vector<DiffSegment> segments = align_words(lw, rw, mode);
            std::string left_cell, right_cell;
            for (const DiffSegment& seg : segments) {
                detail::append_words_span(left_cell, seg.kind, seg.left);
                detail::append_words_span(right_cell, seg.kind, seg.right);
            }
            out += "<td class=\"ref\">" + html_escape(format_reference(*row.left)) + "</td>";
            out += "<td" + std::string(left_dir) + ">" + left_cell + "</td>";
            out += "<td class=\"ref\">" + html_escape(format_reference(*row.right)) + "</td>";
            out += "<td" + std::string(right_dir) + ">" + right_cell + "</td>";
        } else if (row.left) {
            std::span<const Word> lw = detail::passage_words(left_corpus, *row.left);
            std::string cell;
            detail::append_words_span(cell, SegmentKind::plus_left,
                                      std::vector<Word>(lw.begin(), lw.end()));
            out += "<td class=\"ref\">" + html_escape(format_reference(*row.left)) + "</td>";
            out += "<td" + std::string(left_dir) + ">" + cell + "</td>";
            out += "<td class=\"ref\"></td><td></td>";
        } else if (row.right) {
            std::span<const Word> rw = detail::passage_words(right_corpus, *row.right);
            std::string cell;
            detail::append_words_span(cell, SegmentKind::plus_right,
                                      std::vector<Word>(rw.begin(), rw.end()));
            out += "<td class=\"ref\"></td><td></td>";
            out += "<td class=\"ref\">" + html_escape(format_reference(*row.right)) + "</td>";
            out += "<td" + std::string(right_dir) + ">" + cell + "</td>";
        }
        out += "</tr>\n";
    }
    out += "</table>\n";
    return out;
}

inline std::string comparison_css() {
    return "body { font-family: Georgia, serif; margin: 2em; }\n"
           "table.synopsis { border-collapse: collapse; width: 100%; }\n"
           "table.synopsis td { border: 1px solid #ccc; padding: 4px 8px; vertical-align: top; "
           "}\n"
           "td.ref { width: 7em; color: #555; font-size: 85%; white-space: nowrap; }\n"
           ".identical { }\n"
           ".plus_left { background: #b5e8b5; }\n"
           ".plus_right { background: #f4b6b6; }\n"
           ".substitution { background: #f2e28a; }\n"
           "p.note { color: #555; font-size: 85%; margin-top: 1.5em; }\n"
           ".legend span { padding: 1px 6px; margin-right: 0.6em; }\n"
           "h1 { font-size: 140%; }\nh2 { font-size: 115%; }\n";
}

inline std::string html_page(const std::string& title, const std::string& body) {
    std::string out;
    out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\"/>\n<title>";
    out += html_escape(title);
    out += "</title>\n<style>\n";
    out += comparison_css();
    out += "</style>\n</head>\n<body>\n";
    out += body;
    out += "</body>\n</html>\n";
    return out;
}

inline std::string comparison_legend() {
    return "<p class=\"legend\"><span class=\"identical\">identical</span>"
           "<span class=\"plus_left\">plus (left)</span>"
           "<span class=\"plus_right\">plus (right)</span>"
           "<span class=\"substitution\">substitution</span></p>\n";
}

/// Standalone synoptic page for one chapter pair. `verse_pairs` lists the
/// parallel verses (left verse, right verse); all remaining verses of
/// both chapters render one-sided so the chapters appear in full.
inline std::string render_chapter_comparison(
    const Corpus& left_corpus, const Corpus& right_corpus, const Reference& left_chapter,
    const Reference& right_chapter, const std::vector<std::pair<Reference, Reference>>& verse_pairs,
    TokenMode mode = TokenMode::lexeme) {
    std::vector<detail::SynopsisRow> rows =
        detail::chapter_rows(left_corpus, left_chapter, right_corpus, right_chapter, verse_pairs);
    std::string title = format_reference(left_chapter) + " vs " + format_reference(right_chapter);
    std::string body;
    body += "<h1>" + html_escape(title) + "</h1>\n";
    body += comparison_legend();
    body += render_comparison_table(left_corpus, right_corpus, rows, mode);
    body += "<p class=\"note\">" + std::string(kComparisonNote) + "</p>\n";
    return html_page(title, body);
}

/// Grid table: one row per granularity, one column per (method, threshold).
/// Cells show the quality ratio; good cells are highlighted and link into
/// the experiments index.
inline std::string render_results_html(const GridRun& run) {
    std::vector<GranularitySpec> grans;
    std::vector<std::pair<Method, double>> columns;
    for (const ExperimentResult& r : run.results) {
        if (std::find(grans.begin(), grans.end(), r.config.granularity) == grans.end())
            grans.push_back(r.config.granularity);
        std::pair<Method, double> col{r.config.method, r.config.threshold};
        if (std::find(columns.begin(), columns.end(), col) == columns.end())
            columns.push_back(col);
    }
    std::sort(grans.begin(), grans.end());
    std::sort(columns.begin(), columns.end());
    std::map<std::string, const ExperimentResult*> cell;
    for (const ExperimentResult& r : run.results) cell[r.config.label()] = &r;

    std::string body;
    body += "<h1>Experiment grid</h1>\n<table class=\"synopsis\">\n<tr><td class=\"ref\">"
            "granularity</td>";
    char buf[64];
    for (const auto& [m, t] : columns) {
        std::snprintf(buf, sizeof buf, "%s %g", method_label(m).c_str(), t);
        body += "<td class=\"ref\">" + html_escape(buf) + "</td>";
    }
    body += "</tr>\n";
    for (const GranularitySpec& g : grans) {
        body += "<tr><td class=\"ref\">" + html_escape(g.label()) + "</td>";
        for (const auto& [m, t] : columns) {
            ExperimentConfig probe{g, m, t};
            auto it = cell.find(probe.label());
            if (it == cell.end()) {
                body += "<td></td>";
                continue;
            }
            const ExperimentResult* r = it->second;
            char q[32];
            std::snprintf(q, sizeof q, "%.2f", r->quality);
            std::string style = r->good ? " style=\"background:#b5e8b5\"" : "";
            body += "<td" + style + "><a href=\"experiments/index.html#" +
                    html_escape(r->config.label()) + "\">" + q + "</a></td>";
        }
        body += "</tr>\n";
    }
    body += "</table>\n<p class=\"note\">Cell value: number of cliques divided by the size of "
            "the largest clique. Highlighted cells pass the quality cut and link to their "
            "clique listings and chapter comparisons.</p>\n";
    return html_page("Experiment grid", body);
}

/// Experiments index: a section per grid cell listing its cliques and
/// hyperlinking every chapter comparison generated for it. Comparison file
/// names are deduplicated and sorted; links point into ../chapters/.
inline std::string render_index(const GridRun& run,
                                const std::map<std::string, std::vector<std::string>>&
                                    comparisons_by_label) {
    std::string body;
    body += "<h1>Experiments</h1>\n";
    for (const ExperimentResult& r : run.results) {
        const std::vector<Chunk>& chunks = run.inventories.at(r.config.granularity);
        body += "<h2 id=\"" + html_escape(r.config.label()) + "\">" +
                html_escape(r.config.label()) + "</h2>\n";
        char buf[128];
        std::snprintf(buf, sizeof buf, "<p>cliques: %zu, longest: %zu, quality: %.2f%s</p>\n",
                      r.num_cliques, r.longest, r.quality, r.good ? ", good" : "");
        body += buf;
        auto files_it = comparisons_by_label.find(r.config.label());
        if (files_it != comparisons_by_label.end() && !files_it->second.empty()) {
            std::vector<std::string> files = files_it->second;
            std::sort(files.begin(), files.end());
            files.erase(std::unique(files.begin(), files.end()), files.end());
            body += "<ul>\n";
            for (const std::string& f : files)
                body += "<li><a href=\"../chapters/" + html_escape(f) + "\">" + html_escape(f) +
                        "</a></li>\n";
            body += "</ul>\n";
        }
        if (r.cliques.empty()) continue;
        body += "<ol>\n";
        for (const Clique& c : r.cliques) {
            body += "<li>";
            for (std::size_t i = 0; i < c.members.size(); ++i) {
                if (i) body += " | ";
                const Chunk& ch = chunks[static_cast<std::size_t>(c.members[i])];
                std::string label = format_reference(ch.start);
                if (!(ch.start == ch.end)) label += " .. " + format_reference(ch.end);
                body += html_escape(label);
            }
            body += "</li>\n";
        }
        body += "</ol>\n";
    }
    return html_page("Experiments", body);
}

/// Cross-manuscript comparison of one book across two corpora.
struct ChapterComparison {
    int chapter = 0;
    std::string file_name;
    std::string html;
    std::size_t differences = 0;  // non-identical segments + unpaired verses
};

struct CrossManuscriptReport {
    std::vector<ChapterComparison> chapters;
    std::vector<std::pair<int, char>> uncompared;  // (chapter, 'L'/'R' side it exists on)
};

/// Verse-by-verse comparison keyed on (chapter, verse): both manuscripts
/// are assumed to share the book's versification where they overlap.
inline CrossManuscriptReport render_cross_manuscript(const Corpus& left, const Corpus& right,
                                                     const std::string& book,
                                                     TokenMode mode = TokenMode::lexeme) {
    const Book* lb = left.find_book(book);
    const Book* rb = right.find_book(book);
    if (!lb) throw Error("corpus '" + left.id + "' has no book '" + book + "'");
    if (!rb) throw Error("corpus '" + right.id + "' has no book '" + book + "'");

    CrossManuscriptReport report;
    std::map<int, const Chapter*> lch, rch;
    for (const Chapter& c : lb->chapters) lch[c.number] = &c;
    for (const Chapter& c : rb->chapters) rch[c.number] = &c;
    for (const auto& [num, c] : lch)
        if (!rch.count(num)) report.uncompared.push_back({num, 'L'});
    for (const auto& [num, c] : rch)
        if (!lch.count(num)) report.uncompared.push_back({num, 'R'});
    std::sort(report.uncompared.begin(), report.uncompared.end());

    std::string left_name = left.id == right.id ? "left_" + book : left.id + "_" + book;
    std::string right_name = left.id == right.id ? "right_" + book : right.id + "_" + book;

    for (const auto& [num, lc] : lch) {
        auto rit = rch.find(num);
        if (rit == rch.end()) continue;
        const Chapter* rc = rit->second;
        std::set<int> rverses;
        for (const Verse& v : rc->verses) rverses.insert(v.number);

        Reference lref{book, num, 0, Half::none, -1};
        Reference rref{book, num, 0, Half::none, -1};
        std::vector<std::pair<Reference, Reference>> pairs;
        for (const Verse& v : lc->verses) {
            if (!rverses.count(v.number)) continue;
            Reference l = lref, r = rref;
            l.verse = v.number;
            r.verse = v.number;
            pairs.push_back({l, r});
        }

        std::size_t differences = 0;
        std::set<int> lverses;
        for (const Verse& v : lc->verses) lverses.insert(v.number);
        for (const Verse& v : lc->verses)
            if (!rverses.count(v.number)) differences += 1;  // right side lacks the verse
        for (const Verse& v : rc->verses)
            if (!lverses.count(v.number)) differences += 1;  // left side lacks the verse
        for (const auto& [l, r] : pairs) {
            std::span<const Word> lw = detail::passage_words(left, l);
            std::span<const Word> rw = detail::passage_words(right, r);
            for (const DiffSegment& seg : align_words(lw, rw, mode))
                if (seg.kind != SegmentKind::identical) differences += 1;
        }

        ChapterComparison out;
        out.chapter = num;
        out.file_name = comparison_file_name(left_name, num, right_name, num);
        out.html = render_chapter_comparison(left, right, lref, rref, pairs, mode);
        out.differences = differences;
        report.chapters.push_back(std::move(out));
    }
    return report;
}

/// One line of a parallel map: a verse in the backbone range linked to a
/// verse elsewhere, with the similarity that linked them.
struct MapEdge {
    Reference from;  // inside the backbone book/chapter range
    Reference to;
    double score = 0.0;
};

/// SVG map: the backbone chapters run down the left column, every other
/// book with a parallel gets its own column, and one line per edge links
/// the verses. Line opacity scales linearly from the weakest score in the
/// map to the strongest (strongest fully opaque); a single score level
/// draws fully opaque. No edges → backbone column only.
inline std::string render_parallel_map(const Corpus& corpus, const std::string& backbone_book,
                                       int from_chapter, int to_chapter,
                                       const std::vector<MapEdge>& edges) {
    const Book* bb = corpus.find_book(backbone_book);
    if (!bb) throw Error("unknown book '" + backbone_book + "'");
    if (from_chapter > to_chapter) throw Error("bad chapter range");

    std::vector<std::pair<int, int>> backbone;  // (chapter, verse)
    for (const Chapter& c : bb->chapters) {
        if (c.number < from_chapter || c.number > to_chapter) continue;
        for (const Verse& v : c.verses) backbone.push_back({c.number, v.number});
    }
    if (backbone.empty()) throw Error("backbone range has no verses");

    std::vector<MapEdge> kept;
    for (const MapEdge& e : edges) {
        if (e.from.book != backbone_book) continue;
        if (e.from.chapter < from_chapter || e.from.chapter > to_chapter) continue;
        kept.push_back(e);
    }

    // target columns in canonical book order, ticks in reference order
    std::vector<std::string> target_books;
    std::map<std::string, std::vector<std::pair<int, int>>> target_ticks;
    for (const MapEdge& e : kept) {
        if (std::find(target_books.begin(), target_books.end(), e.to.book) == target_books.end())
            target_books.push_back(e.to.book);
        target_ticks[e.to.book].push_back({e.to.chapter, e.to.verse});
    }
    std::sort(target_books.begin(), target_books.end(),
              [&](const std::string& a, const std::string& b) {
                  int ia = corpus.book_index(a), ib = corpus.book_index(b);
                  if (ia != ib) return ia < ib;
                  return a < b;
              });
    for (auto& [book, ticks] : target_ticks) {
        std::sort(ticks.begin(), ticks.end());
        ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    }

    double min_score = 0.0, max_score = 0.0;
    if (!kept.empty()) {
        min_score = max_score = kept[0].score;
        for (const MapEdge& e : kept) {
            min_score = std::min(min_score, e.score);
            max_score = std::max(max_score, e.score);
        }
    }
    auto opacity = [&](double s) {
        if (max_score <= min_score) return 1.0;
        return 0.25 + 0.75 * (s - min_score) / (max_score - min_score);
    };

    constexpr double kTop = 60.0, kBottom = 40.0, kRowSpace = 16.0;
    constexpr double kBackboneX = 150.0, kColSpace = 230.0;
    double height =
        kTop + kBottom +
        kRowSpace * static_cast<double>(backbone.size() > 1 ? backbone.size() - 1 : 1);
    double width = kBackboneX + kColSpace * static_cast<double>(target_books.size()) + 120.0;

    auto backbone_y = [&](int chapter, int verse) {
        auto it = std::find(backbone.begin(), backbone.end(), std::make_pair(chapter, verse));
        std::size_t idx = static_cast<std::size_t>(it - backbone.begin());
        if (backbone.size() == 1) return kTop;
        return kTop + (height - kTop - kBottom) * static_cast<double>(idx) /
                          static_cast<double>(backbone.size() - 1);
    };

    std::map<std::string, double> column_x;
    for (std::size_t i = 0; i < target_books.size(); ++i)
        column_x[target_books[i]] = kBackboneX + kColSpace * static_cast<double>(i + 1);
    auto target_y = [&](const std::string& book, int chapter, int verse) {
        const std::vector<std::pair<int, int>>& ticks = target_ticks.at(book);
        auto it = std::find(ticks.begin(), ticks.end(), std::make_pair(chapter, verse));
        std::size_t idx = static_cast<std::size_t>(it - ticks.begin());
        if (ticks.size() == 1) return (kTop + height - kBottom) / 2.0;
        return kTop + (height - kTop - kBottom) * static_cast<double>(idx) /
                          static_cast<double>(ticks.size() - 1);
    };

    char buf[256];
    std::string svg;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    svg += buf;
    svg += "<style>text { font-family: sans-serif; font-size: 10px; fill: #333; } "
           "text.head { font-size: 13px; font-weight: bold; }</style>\n";
    std::snprintf(buf, sizeof buf, "<text class=\"head\" x=\"%.1f\" y=\"20\">%s %d-%d</text>\n",
                  kBackboneX - 60.0, html_escape(backbone_book).c_str(), from_chapter,
                  to_chapter);
    svg += buf;

    // edges first so columns draw on top
    for (const MapEdge& e : kept) {
        double y1 = backbone_y(e.from.chapter, e.from.verse);
        double x2 = column_x.at(e.to.book);
        double y2 = target_y(e.to.book, e.to.chapter, e.to.verse);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#1f6feb\" "
                      "stroke-width=\"1.6\" stroke-opacity=\"%.3f\"/>\n",
                      kBackboneX, y1, x2, y2, opacity(e.score));
        svg += buf;
    }

    auto draw_column = [&](double x, const std::vector<std::pair<int, int>>& ticks,
                           bool labels_left, auto y_of) {
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#777\" "
                      "stroke-width=\"2\"/>\n",
                      x, kTop, x, height - kBottom);
        svg += buf;
        for (const auto& [chapter, verse] : ticks) {
            double y = y_of(chapter, verse);
            std::snprintf(buf, sizeof buf,
                          "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#777\" "
                          "stroke-width=\"1\"/>\n",
                          x - 3.0, y, x + 3.0, y);
            svg += buf;
            std::snprintf(buf, sizeof buf,
                          "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"%s\">%d:%d</text>\n",
                          labels_left ? x - 6.0 : x + 6.0, y + 3.0,
                          labels_left ? "end" : "start", chapter, verse);
            svg += buf;
        }
    };

    draw_column(kBackboneX, backbone, true, [&](int c, int v) { return backbone_y(c, v); });
    for (const std::string& book : target_books) {
        double x = column_x.at(book);
        std::snprintf(buf, sizeof buf,
                      "<text class=\"head\" x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%s"
                      "</text>\n",
                      x, kTop - 16.0, html_escape(book).c_str());
        svg += buf;
        draw_column(x, target_ticks.at(book), false,
                    [&](int c, int v) { return target_y(book, c, v); });
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace parallax
