// stats.hpp
//
// The case-study statistics pipeline: verse-level parallel inventories,
// exhaustive sentence-pair similarity tables between passage groups,
// distribution summaries, threshold filtering with per-book counts, and
// Welch t-tests with Bonferroni correction.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "chunk.hpp"
#include "similarity.hpp"

namespace parallax {

/// One scored sentence pair, addressed exactly as the TSV columns:
/// (book, chapter, verse, sentence ordinal) on both sides. The similarity
/// is the LCS score of the two sentences.
struct SimilarityRecord {
    Reference left;
    Reference right;
    double similarity = 0.0;

    auto address() const {
        return std::tie(left.book, left.chapter, left.verse, left.sentence, right.book,
                        right.chapter, right.verse, right.sentence);
    }
};

/// An inclusive passage range, usually a chapter run of one book.
struct PassageRange {
    std::string name;
    Reference from;
    Reference to;
};

namespace detail {

inline bool chunk_inside(const Chunk& c, const Corpus::OrdinalRange& lo,
                         const Corpus::OrdinalRange& hi) {
    return c.first >= lo.first && c.first + c.size - 1 <= hi.last;
}

inline std::vector<Chunk> chunks_in(const Corpus& corpus, GranularityKind level,
                                    const Reference& from, const Reference& to, TokenMode mode) {
    Corpus::OrdinalRange lo = corpus.resolve(from);
    Corpus::OrdinalRange hi = corpus.resolve(to);
    std::vector<Chunk> all = chunk_by_object(corpus, level, mode);
    std::vector<Chunk> out;
    for (Chunk& c : all)
        if (chunk_inside(c, lo, hi)) out.push_back(std::move(c));
    return out;
}

inline std::string join_surfaces(std::span<const Word> words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += words[i].surface;
    }
    return out;
}

}  // namespace detail

/// A verse inside the range paired with a similar verse outside it.
struct InventoryEntry {
    Reference inside;
    Reference outside;
    double score = 0.0;      // SET similarity
    std::string inside_text;  // surface text, the synoptic listing
    std::string outside_text;
};

/// Every (verse in range, verse outside range) pair whose SET similarity
/// passes the threshold (>= by default). Entries sorted by (inside,
/// outside) reference order. A range covering the whole corpus yields
/// nothing: there is no outside verse.
inline std::vector<InventoryEntry> inventory_parallels(const Corpus& corpus,
                                                       const Reference& from, const Reference& to,
                                                       double threshold, Cmp cmp = Cmp::ge,
                                                       TokenMode mode = TokenMode::lexeme,
                                                       int jobs = 1) {
    std::vector<Chunk> verses = chunk_by_object(corpus, GranularityKind::verse, mode);
    Corpus::OrdinalRange lo = corpus.resolve(from);
    Corpus::OrdinalRange hi = corpus.resolve(to);
    std::vector<SimilarityEdge> edges = all_pairs(verses, Method::SET, threshold, jobs);
    std::vector<InventoryEntry> entries;
    for (const SimilarityEdge& e : edges) {
        if (!cmp_apply(cmp, e.score, threshold)) continue;
        const Chunk& x = verses[static_cast<std::size_t>(e.a)];
        const Chunk& y = verses[static_cast<std::size_t>(e.b)];
        bool x_in = detail::chunk_inside(x, lo, hi);
        bool y_in = detail::chunk_inside(y, lo, hi);
        if (x_in == y_in) continue;  // both inside or both outside
        const Chunk& in = x_in ? x : y;
        const Chunk& out = x_in ? y : x;
        InventoryEntry entry;
        entry.inside = in.start;
        entry.outside = out.start;
        entry.score = e.score;
        entry.inside_text = detail::join_surfaces(in.words());
        entry.outside_text = detail::join_surfaces(out.words());
        entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end(), [&](const InventoryEntry& a,
                                                  const InventoryEntry& b) {
        int c = corpus.compare(a.inside, b.inside);
        if (c != 0) return c < 0;
        return corpus.compare(a.outside, b.outside) < 0;
    });
    return entries;
}

/// Score every sentence of group A against every sentence of every B range
/// with the LCS method. Ranges must be pairwise non-overlapping. Rows are
/// sorted by the eight address columns (books as strings).
inline std::vector<SimilarityRecord> sentence_similarity_table(
    const Corpus& corpus, const PassageRange& group_a, const std::vector<PassageRange>& group_bs,
    TokenMode mode = TokenMode::lexeme, int jobs = 1) {
    struct Resolved {
        const PassageRange* range;
        Corpus::OrdinalRange span;
        std::vector<Chunk> sentences;
    };
    auto resolve_range = [&](const PassageRange& r) {
        Resolved res;
        res.range = &r;
        Corpus::OrdinalRange lo = corpus.resolve(r.from);
        Corpus::OrdinalRange hi = corpus.resolve(r.to);
        if (lo.first > hi.last) throw Error("range '" + r.name + "' is empty");
        res.span = {lo.first, hi.last};
        res.sentences = detail::chunks_in(corpus, GranularityKind::sentence, r.from, r.to, mode);
        if (res.sentences.empty()) throw Error("range '" + r.name + "' contains no sentences");
        return res;
    };
    Resolved a = resolve_range(group_a);
    std::vector<Resolved> bs;
    for (const PassageRange& r : group_bs) bs.push_back(resolve_range(r));
    auto overlaps = [](const Resolved& x, const Resolved& y) {
        return x.span.first <= y.span.last && y.span.first <= x.span.last;
    };
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (overlaps(a, bs[i]))
            throw Error("range '" + bs[i].range->name + "' overlaps range '" + group_a.name + "'");
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (overlaps(bs[i], bs[j]))
                throw Error("range '" + bs[j].range->name + "' overlaps range '" +
                            bs[i].range->name + "'");
    }

    auto sentence_ref = [&](const Chunk& c) {
        Reference r = c.start;
        r.half = Half::none;
        r.sentence = corpus.sentence_of(c.first);
        return r;
    };

    std::vector<SimilarityRecord> records;
    for (const Resolved& side : bs) {
        std::size_t base = records.size();
        records.resize(base + a.sentences.size() * side.sentences.size());
        auto fill_row = [&](std::size_t i) {
            const Chunk& left = a.sentences[i];
            for (std::size_t j = 0; j < side.sentences.size(); ++j) {
                const Chunk& right = side.sentences[j];
                SimilarityRecord& rec = records[base + i * side.sentences.size() + j];
                rec.left = sentence_ref(left);
                rec.right = sentence_ref(right);
                rec.similarity = lcs_similarity(left.tokens, right.tokens);
            }
        };
        if (jobs <= 1 || a.sentences.size() < 2) {
            for (std::size_t i = 0; i < a.sentences.size(); ++i) fill_row(i);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= a.sentences.size()) return;
                    fill_row(i);
                }
            };
            std::vector<std::thread> threads;
            for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
            for (std::thread& t : threads) t.join();
        }
    }
    std::sort(records.begin(), records.end(),
              [](const SimilarityRecord& x, const SimilarityRecord& y) {
                  return x.address() < y.address();
              });
    return records;
}

/// Five-number summary plus mean. Quartiles use linear interpolation
/// between order statistics (position q * (n - 1)).
struct DistributionSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

inline double quantile_sorted(std::span<const double> sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

inline DistributionSummary summarize(std::span<const double> values) {
    if (values.empty()) throw Error("summarize: empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    DistributionSummary s;
    s.count = sorted.size();
    double sum = 0.0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(sorted.size());
    s.min = sorted.front();
    s.max = sorted.back();
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.50);
    s.q3 = quantile_sorted(sorted, 0.75);
    return s;
}

struct FilterResult {
    std::vector<SimilarityRecord> records;
    std::map<std::string, std::size_t> counts;  // book_2 -> surviving rows
};

/// Keep records whose similarity passes the threshold (strict > by
/// default: "higher than T" excludes T itself) and count survivors per
/// right-side book. Books present in the input appear even at zero.
inline FilterResult filter_group(const std::vector<SimilarityRecord>& records, double threshold,
                                 Cmp cmp = Cmp::gt) {
    FilterResult out;
    for (const SimilarityRecord& r : records) out.counts[r.right.book];
    for (const SimilarityRecord& r : records)
        if (cmp_apply(cmp, r.similarity, threshold)) {
            out.counts[r.right.book] += 1;
            out.records.push_back(r);
        }
    return out;
}

namespace detail {

/// Continued fraction for the regularized incomplete beta (Lentz).
inline double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 200;
    constexpr double kEps = 3.0e-12;
    constexpr double kTiny = 1.0e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

inline double betai(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                      b * std::log(1.0 - x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

inline double sample_mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sample_variance(std::span<const double> v, double mean) {
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return s / static_cast<double>(v.size() - 1);
}

}  // namespace detail

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 0.0;  // two-sided
};

/// Welch's unequal-variance t-test. Requires n >= 2 on both sides and a
/// nonzero variance somewhere; p comes from the Student-t CDF via the
/// regularized incomplete beta.
inline TTestResult t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) throw Error("t_test: need at least 2 values per sample");
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    double ma = detail::sample_mean(a), mb = detail::sample_mean(b);
    double va = detail::sample_variance(a, ma), vb = detail::sample_variance(b, mb);
    double se2 = va / na + vb / nb;
    if (se2 <= 0.0) throw Error("t_test: zero variance in both samples");
    TTestResult r;
    r.t = (ma - mb) / std::sqrt(se2);
    r.df =
        se2 * se2 / ((va / na) * (va / na) / (na - 1.0) + (vb / nb) * (vb / nb) / (nb - 1.0));
    double x = r.df / (r.df + r.t * r.t);
    r.p = detail::betai(r.df / 2.0, 0.5, x);
    return r;
}

/// Familywise-corrected per-test significance level.
inline double bonferroni(double alpha, std::size_t num_tests) {
    if (num_tests == 0) throw Error("bonferroni: m must be >= 1");
    if (alpha <= 0.0 || alpha > 1.0) throw Error("bonferroni: alpha must be in (0, 1]");
    return alpha / static_cast<double>(num_tests);
}

inline constexpr std::string_view kRecordsHeader =
    "book_1\tchapter_1\tverse_1\tnum_1\tbook_2\tchapter_2\tverse_2\tnum_2\tsimilarity";

/// Records TSV, similarity fixed to 2 decimals.
inline std::string write_records_tsv(const std::vector<SimilarityRecord>& records) {
    std::string out = std::string(kRecordsHeader) + "\n";
    char buf[48];
    for (const SimilarityRecord& r : records) {
        out += r.left.book;
        out += '\t';
        out += std::to_string(r.left.chapter);
        out += '\t';
        out += std::to_string(r.left.verse);
        out += '\t';
        out += std::to_string(r.left.sentence);
        out += '\t';
        out += r.right.book;
        out += '\t';
        out += std::to_string(r.right.chapter);
        out += '\t';
        out += std::to_string(r.right.verse);
        out += '\t';
        out += std::to_string(r.right.sentence);
        out += '\t';
        std::snprintf(buf, sizeof buf, "%.2f", r.similarity);
        out += buf;
        out += '\n';
    }
    return out;
}

/// Parse a records TSV back into memory.
inline std::vector<SimilarityRecord> parse_records_tsv(const std::string& text) {
    std::vector<SimilarityRecord> records;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool header_seen = false;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::size_t end = (nl == std::string::npos) ? text.size() : nl;
        std::string_view line(text.data() + start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kRecordsHeader)
                throw ParseError(line_no, "bad header, expected: " + std::string(kRecordsHeader));
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> f = detail::split_tabs(line);
        if (f.size() != 9)
            throw ParseError(line_no,
                             "expected 9 tab-separated fields, got " + std::to_string(f.size()));
        if (f[0].empty() || f[4].empty()) throw ParseError(line_no, "empty book name");
        long c1, v1, n1, c2, v2, n2;
        if (!detail::parse_int(f[1], c1) || !detail::parse_int(f[2], v1) ||
            !detail::parse_int(f[3], n1) || !detail::parse_int(f[5], c2) ||
            !detail::parse_int(f[6], v2) || !detail::parse_int(f[7], n2))
            throw ParseError(line_no, "bad integer field");
        if (c1 <= 0 || v1 <= 0 || c2 <= 0 || v2 <= 0 || n1 < 0 || n2 < 0)
            throw ParseError(line_no, "address out of range");
        std::string sim(f[8]);
        char* endp = nullptr;
        double s = std::strtod(sim.c_str(), &endp);
        if (endp == sim.c_str() || *endp != '\0' || s < 0.0 || s > 100.0)
            throw ParseError(line_no, "similarity must be a number in [0, 100]");
        SimilarityRecord r;
        r.left = Reference{std::string(f[0]), static_cast<int>(c1), static_cast<int>(v1),
                           Half::none, static_cast<int>(n1)};
        r.right = Reference{std::string(f[4]), static_cast<int>(c2), static_cast<int>(v2),
                            Half::none, static_cast<int>(n2)};
        r.similarity = s;
        records.push_back(std::move(r));
    }
    if (!header_seen) throw ParseError(0, "no records");
    return records;
}

/// Summary report rows, TSV form: one row per named sample.
inline std::string write_summary_tsv(
    const std::vector<std::pair<std::string, DistributionSummary>>& rows) {
    std::string out = "group\tcount\tmean\tmin\tq1\tmedian\tq3\tmax\n";
    char buf[160];
    for (const auto& [name, s] : rows) {
        std::snprintf(buf, sizeof buf, "%s\t%zu\t%.4f\t%.4f\t%.4f\t%.4f\t%.4f\t%.4f\n",
                      name.c_str(), s.count, s.mean, s.min, s.q1, s.median, s.q3, s.max);
        out += buf;
    }
    return out;
}

/// Same report as an aligned plain-text table.
inline std::string format_summary_text(
    const std::vector<std::pair<std::string, DistributionSummary>>& rows) {
    std::size_t name_width = 5;
    for (const auto& [name, s] : rows) name_width = std::max(name_width, name.size());
    char buf[224];
    std::string out;
    std::snprintf(buf, sizeof buf, "%-*s %8s %9s %9s %9s %9s %9s %9s\n",
                  static_cast<int>(name_width), "group", "count", "mean", "min", "q1", "median",
                  "q3", "max");
    out += buf;
    for (const auto& [name, s] : rows) {
        std::snprintf(buf, sizeof buf, "%-*s %8zu %9.2f %9.2f %9.2f %9.2f %9.2f %9.2f\n",
                      static_cast<int>(name_width), name.c_str(), s.count, s.mean, s.min, s.q1,
                      s.median, s.q3, s.max);
        out += buf;
    }
    return out;
}

}  // namespace parallax
