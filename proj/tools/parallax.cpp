// parallax: corpus-agnostic text-reuse experiments on annotated corpora.
//
// Subcommands: validate, experiments, compare, casestudy. Every command is
// deterministic (same inputs and flags give byte-identical outputs) and
// commands that write files leave a manifest.json describing the run.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include <parallax/parallax.hpp>
#include <parallax/detail/io.hpp>

namespace fs = std::filesystem;
using namespace parallax;

namespace {

/// Flag values that pass CLI11 but fail semantic checks (bad granularity
/// name, malformed range spec) are usage errors, not data errors.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedCorpus {
    Corpus corpus;
    std::string path;    // as given on the command line
    std::string digest;  // content digest of the raw bytes
};

LoadedCorpus load_corpus(const std::string& path) {
    std::string bytes = detail::read_file(path);
    std::istringstream in(bytes);
    LoadedCorpus out{Corpus::parse(in, fs::path(path).stem().string()), path,
                     fnv1a64_hex(bytes)};
    return out;
}

/// Collects written files (relative to the output root) for the manifest.
struct OutputSink {
    fs::path root;
    std::vector<std::string> written;

    void write(const std::string& rel, std::string_view content) {
        detail::write_file(root / rel, content);
        written.push_back(rel);
    }
};

void finish_manifest(OutputSink& sink, RunManifest manifest) {
    manifest.outputs = sink.written;
    manifest.outputs.push_back("manifest.json");
    detail::write_file(sink.root / "manifest.json", manifest.to_json());
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

TokenMode mode_from_flag(const std::string& mode) {
    return mode == "surface" ? TokenMode::surface : TokenMode::lexeme;
}

/// "Book:3-7" or "Book:5" (single chapter). The book name may contain
/// anything but the final ':'.
PassageRange parse_range_spec(const std::string& spec) {
    std::size_t colon = spec.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
        throw UsageError("bad range '" + spec + "' (want BOOK:FROM-TO or BOOK:CHAPTER)");
    std::string book = spec.substr(0, colon);
    std::string chapters = spec.substr(colon + 1);
    long from = 0, to = 0;
    std::size_t dash = chapters.find('-');
    bool ok;
    if (dash == std::string::npos) {
        ok = detail::parse_int(chapters, from);
        to = from;
    } else {
        ok = detail::parse_int(chapters.substr(0, dash), from) &&
             detail::parse_int(chapters.substr(dash + 1), to);
    }
    if (!ok || from <= 0 || to < from)
        throw UsageError("bad range '" + spec + "' (want BOOK:FROM-TO or BOOK:CHAPTER)");
    PassageRange r;
    r.name = spec;
    r.from = Reference{book, static_cast<int>(from), 0, Half::none, -1};
    r.to = Reference{book, static_cast<int>(to), 0, Half::none, -1};
    return r;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& corpus_path) {
    LoadedCorpus loaded = load_corpus(corpus_path);
    const Corpus& c = loaded.corpus;
    std::size_t chapters = 0, verses = 0, sentences = 0;
    for (const Book& b : c.books()) {
        chapters += b.chapters.size();
        for (const Chapter& ch : b.chapters) {
            verses += ch.verses.size();
            for (const Verse& v : ch.verses) sentences += v.sentences.size();
        }
    }
    std::printf("id: %s\n", c.id.c_str());
    std::printf("rtl: %s\n", c.rtl ? "yes" : "no");
    std::printf("books: %zu\n", c.books().size());
    std::printf("chapters: %zu\n", chapters);
    std::printf("verses: %zu\n", verses);
    std::printf("sentences: %zu\n", sentences);
    std::printf("words: %zu\n", c.size());
    std::printf("lexemes: %u\n", c.lexeme_count());
    std::printf("surface_forms: %u\n", c.surface_count());
    return 0;
}

// ------------------------------------------------------------- experiments

struct ExperimentsArgs {
    std::string corpus_path;
    std::string out_dir;
    std::vector<std::string> granularities;
    std::vector<std::string> methods;
    std::vector<double> thresholds;
    std::string mode = "lexeme";
    std::string cmp = "ge";
    double quality_cut = 1.5;
    int jobs = 1;
};

/// Chapter pair key in canonical order: (book index, chapter) twice.
using PairKey = std::tuple<int, int, int, int>;

struct ChapterPairLinks {
    std::string left_book, right_book;
    int left_chapter = 0, right_chapter = 0;
    std::map<std::pair<int, int>, double> links;  // (left verse, right verse) -> best score
};

/// Derive the chapter pairs connected by a result's edges, with scored
/// verse links for pairing. Sub-chapter chunks contribute their start
/// verse; chapter chunks get verse links from verse-level rescoring.
std::map<PairKey, ChapterPairLinks> chapter_pairs_of(const Corpus& corpus,
                                                     const ExperimentResult& result,
                                                     const std::vector<Chunk>& chunks,
                                                     const std::vector<Chunk>& verse_chunks,
                                                     TokenMode) {
    std::map<PairKey, ChapterPairLinks> pairs;
    bool chapter_level = result.config.granularity.kind == GranularityKind::chapter;
    for (const SimilarityEdge& e : result.edges) {
        const Chunk& x = chunks[static_cast<std::size_t>(e.a)];
        const Chunk& y = chunks[static_cast<std::size_t>(e.b)];
        int bx = corpus.book_index(x.start.book);
        int by = corpus.book_index(y.start.book);
        std::tuple<int, int> cx{bx, x.start.chapter}, cy{by, y.start.chapter};
        if (cx == cy) continue;  // same chapter: nothing to lay side by side
        const Chunk* l = &x;
        const Chunk* r = &y;
        if (cy < cx) std::swap(l, r);
        PairKey key{corpus.book_index(l->start.book), l->start.chapter,
                    corpus.book_index(r->start.book), r->start.chapter};
        ChapterPairLinks& entry = pairs[key];
        entry.left_book = l->start.book;
        entry.left_chapter = l->start.chapter;
        entry.right_book = r->start.book;
        entry.right_chapter = r->start.chapter;
        if (!chapter_level) {
            std::pair<int, int> lk{l->start.verse, r->start.verse};
            double& best = entry.links[lk];
            best = std::max(best, e.score);
        }
    }
    if (chapter_level) {
        for (auto& [key, entry] : pairs) {
            for (const Chunk& lv : verse_chunks) {
                if (lv.start.book != entry.left_book || lv.start.chapter != entry.left_chapter)
                    continue;
                for (const Chunk& rv : verse_chunks) {
                    if (rv.start.book != entry.right_book ||
                        rv.start.chapter != entry.right_chapter)
                        continue;
                    double s = chunk_similarity(lv, rv, result.config.method);
                    if (s > 0.0) {
                        double& best = entry.links[{lv.start.verse, rv.start.verse}];
                        best = std::max(best, s);
                    }
                }
            }
        }
    }
    return pairs;
}

int cmd_experiments(const ExperimentsArgs& args) {
    std::vector<std::string> gran_flags = args.granularities;
    if (gran_flags.empty())
        gran_flags = {"fixed_10", "fixed_20",  "fixed_50", "fixed_100",
                      "sentence", "half_verse", "verse",    "chapter"};
    std::vector<GranularitySpec> grans;
    for (const std::string& g : gran_flags) {
        try {
            grans.push_back(GranularitySpec::parse(g));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    std::vector<std::string> method_flags = args.methods;
    if (method_flags.empty()) method_flags = {"SET", "LCS"};
    std::vector<Method> methods;
    for (const std::string& m : method_flags) {
        try {
            methods.push_back(parse_method(m));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    std::vector<double> thresholds = args.thresholds;
    if (thresholds.empty())
        for (int t = 30; t <= 100; t += 10) thresholds.push_back(t);
    for (double t : thresholds)
        if (t < 0.0 || t > 100.0) throw UsageError("threshold must be in [0, 100]");

    LoadedCorpus loaded = load_corpus(args.corpus_path);
    const Corpus& corpus = loaded.corpus;

    std::vector<ExperimentConfig> configs;
    for (const GranularitySpec& g : grans)
        for (Method m : methods)
            for (double t : thresholds) configs.push_back({g, m, t});

    GridOptions options;
    options.mode = mode_from_flag(args.mode);
    options.jobs = args.jobs;
    options.quality_cut = args.quality_cut;
    options.cmp = parse_cmp(args.cmp);
    GridRun run = run_grid(corpus, configs, options);

    OutputSink sink{fs::path(args.out_dir), {}};
    sink.write("results.tsv", write_results_tsv(run));
    sink.write("results.html", render_results_html(run));

    // per-experiment clique listings
    for (const ExperimentResult& r : run.results) {
        const std::vector<Chunk>& chunks = run.inventories.at(r.config.granularity);
        std::string tsv = "clique_id\tsize\tmember_ids\tmember_refs\n";
        for (const Clique& c : r.cliques) {
            std::vector<std::string> ids, refs;
            for (int m : c.members) {
                ids.push_back(std::to_string(m));
                const Chunk& ch = chunks[static_cast<std::size_t>(m)];
                std::string ref = format_reference(ch.start);
                if (!(ch.start == ch.end)) ref += " .. " + format_reference(ch.end);
                refs.push_back(ref);
            }
            tsv += std::to_string(c.id) + "\t" + std::to_string(c.members.size()) + "\t" +
                   join(ids, ",") + "\t" + join(refs, "|") + "\n";
        }
        sink.write("experiments/" + r.config.label() + "_cliques.tsv", tsv);
    }

    // chapter comparisons for good cells; first experiment in canonical
    // order wins a file name
    std::vector<Chunk> verse_chunks = chunk_by_object(corpus, GranularityKind::verse,
                                                      options.mode);
    std::set<std::string> files_written;
    std::map<std::string, std::vector<std::string>> comparisons_by_label;
    for (const ExperimentResult& r : run.results) {
        if (!r.good) continue;
        const std::vector<Chunk>& chunks = run.inventories.at(r.config.granularity);
        std::map<PairKey, ChapterPairLinks> pairs =
            chapter_pairs_of(corpus, r, chunks, verse_chunks, options.mode);
        for (const auto& [key, entry] : pairs) {
            std::string file = comparison_file_name(entry.left_book, entry.left_chapter,
                                                    entry.right_book, entry.right_chapter);
            comparisons_by_label[r.config.label()].push_back(file);
            if (files_written.count(file)) continue;
            files_written.insert(file);
            std::vector<ScoredVerseLink> links;
            for (const auto& [lr, score] : entry.links)
                links.push_back({lr.first, lr.second, score});
            Reference left_chap{entry.left_book, entry.left_chapter, 0, Half::none, -1};
            Reference right_chap{entry.right_book, entry.right_chapter, 0, Half::none, -1};
            std::vector<std::pair<Reference, Reference>> verse_pairs;
            for (const auto& [lv, rv] : pair_verses(links)) {
                Reference l = left_chap, rr = right_chap;
                l.verse = lv;
                rr.verse = rv;
                verse_pairs.push_back({l, rr});
            }
            sink.write("chapters/" + file,
                       render_chapter_comparison(corpus, corpus, left_chap, right_chap,
                                                 verse_pairs, options.mode));
        }
    }
    sink.write("experiments/index.html", render_index(run, comparisons_by_label));

    RunManifest manifest;
    manifest.command = "experiments";
    manifest.inputs = {{loaded.path, loaded.digest}};
    std::vector<std::string> tstrings;
    for (double t : thresholds) tstrings.push_back(format_double(t));
    manifest.parameters = {
        {"cmp", args.cmp},
        {"granularities", join(gran_flags, ",")},
        {"methods", join(method_flags, ",")},
        {"mode", args.mode},
        {"quality_cut", format_double(args.quality_cut)},
        {"thresholds", join(tstrings, ",")},
    };
    finish_manifest(sink, std::move(manifest));

    std::size_t good = 0;
    for (const ExperimentResult& r : run.results) good += r.good ? 1 : 0;
    std::printf("experiments: %zu\n", run.results.size());
    std::printf("good: %zu\n", good);
    std::printf("comparisons: %zu\n", files_written.size());
    return 0;
}

// ----------------------------------------------------------------- compare

int cmd_compare(const std::string& left_path, const std::string& right_path,
                const std::string& book, const std::string& out_dir, const std::string& mode) {
    LoadedCorpus left = load_corpus(left_path);
    LoadedCorpus right = load_corpus(right_path);
    auto book_list = [](const Corpus& c) {
        std::vector<std::string> names;
        for (const Book& b : c.books()) names.push_back(b.name);
        return join(names, ", ");
    };
    if (!left.corpus.find_book(book))
        throw Error("corpus '" + left.corpus.id + "' has no book '" + book +
                    "'; available books: " + book_list(left.corpus));
    if (!right.corpus.find_book(book))
        throw Error("corpus '" + right.corpus.id + "' has no book '" + book +
                    "'; available books: " + book_list(right.corpus));

    CrossManuscriptReport report =
        render_cross_manuscript(left.corpus, right.corpus, book, mode_from_flag(mode));

    OutputSink sink{fs::path(out_dir), {}};
    std::string body = "<h1>" + html_escape(left.corpus.id + " vs " + right.corpus.id + ": " +
                                            book) +
                       "</h1>\n<table class=\"synopsis\">\n"
                       "<tr><td class=\"ref\">chapter</td><td class=\"ref\">differences</td>"
                       "<td>comparison</td></tr>\n";
    for (const ChapterComparison& c : report.chapters) {
        sink.write("chapters/" + c.file_name, c.html);
        body += "<tr><td class=\"ref\">" + std::to_string(c.chapter) + "</td><td class=\"ref\">" +
                std::to_string(c.differences) + "</td><td><a href=\"chapters/" +
                html_escape(c.file_name) + "\">" + html_escape(c.file_name) + "</a></td></tr>\n";
        std::printf("chapter %d: %zu differences\n", c.chapter, c.differences);
    }
    body += "</table>\n";
    if (!report.uncompared.empty()) {
        body += "<h2>Uncompared chapters</h2>\n<ul>\n";
        for (const auto& [chapter, side] : report.uncompared) {
            std::string where = side == 'L' ? left.corpus.id : right.corpus.id;
            body += "<li>chapter " + std::to_string(chapter) + " only in " + html_escape(where) +
                    "</li>\n";
            std::printf("chapter %d: only in %s\n", chapter, where.c_str());
        }
        body += "</ul>\n";
    }
    sink.write("index.html", html_page(left.corpus.id + " vs " + right.corpus.id, body));

    RunManifest manifest;
    manifest.command = "compare";
    manifest.inputs = {{left.path, left.digest}, {right.path, right.digest}};
    manifest.parameters = {{"book", book}, {"mode", mode}};
    finish_manifest(sink, std::move(manifest));
    return 0;
}

// --------------------------------------------------------------- casestudy

struct CasestudyArgs {
    std::string corpus_path;
    std::string out_dir;
    std::string range_spec;
    std::vector<std::string> target_specs;
    std::vector<double> thresholds = {60.0, 80.0};
    double inventory_threshold = 60.0;
    std::string inventory_cmp = "ge";
    std::string cmp = "gt";
    double alpha = 0.05;
    std::string mode = "lexeme";
    int jobs = 1;
};

int cmd_casestudy(const CasestudyArgs& args) {
    PassageRange range = parse_range_spec(args.range_spec);
    std::vector<PassageRange> targets;
    for (const std::string& spec : args.target_specs) targets.push_back(parse_range_spec(spec));
    if (targets.empty()) throw UsageError("casestudy needs at least one --target");
    for (double t : args.thresholds)
        if (t < 0.0 || t > 100.0) throw UsageError("threshold must be in [0, 100]");

    LoadedCorpus loaded = load_corpus(args.corpus_path);
    const Corpus& corpus = loaded.corpus;
    TokenMode mode = mode_from_flag(args.mode);
    Cmp filter_cmp = parse_cmp(args.cmp);
    Cmp inv_cmp = parse_cmp(args.inventory_cmp);

    OutputSink sink{fs::path(args.out_dir), {}};

    // verse-level parallels of the range against the rest of the corpus
    std::vector<InventoryEntry> inventory = inventory_parallels(
        corpus, range.from, range.to, args.inventory_threshold, inv_cmp, mode, args.jobs);
    {
        std::string tsv =
            "book_1\tchapter_1\tverse_1\tbook_2\tchapter_2\tverse_2\tscore\ttext_1\ttext_2\n";
        char buf[32];
        for (const InventoryEntry& e : inventory) {
            std::snprintf(buf, sizeof buf, "%.2f", e.score);
            tsv += e.inside.book + "\t" + std::to_string(e.inside.chapter) + "\t" +
                   std::to_string(e.inside.verse) + "\t" + e.outside.book + "\t" +
                   std::to_string(e.outside.chapter) + "\t" + std::to_string(e.outside.verse) +
                   "\t" + buf + "\t" + e.inside_text + "\t" + e.outside_text + "\n";
        }
        sink.write("inventory.tsv", tsv);
    }

    // sentence-pair similarity table, range x targets
    std::vector<SimilarityRecord> records =
        sentence_similarity_table(corpus, range, targets, mode, args.jobs);
    sink.write("sentences.tsv", write_records_tsv(records));

    // distribution summaries, one per target plus the pooled table
    auto target_of = [&](const SimilarityRecord& r) -> const PassageRange* {
        for (const PassageRange& t : targets)
            if (r.right.book == t.from.book && r.right.chapter >= t.from.chapter &&
                r.right.chapter <= t.to.chapter)
                return &t;
        return nullptr;
    };
    std::map<std::string, std::vector<double>> values_by_target;
    std::vector<double> all_values;
    for (const SimilarityRecord& r : records) {
        const PassageRange* t = target_of(r);
        if (t) values_by_target[t->name].push_back(r.similarity);
        all_values.push_back(r.similarity);
    }
    std::vector<std::pair<std::string, DistributionSummary>> summary_rows;
    for (const PassageRange& t : targets)
        summary_rows.push_back({t.name, summarize(values_by_target.at(t.name))});
    summary_rows.push_back({"all", summarize(all_values)});
    sink.write("summary.tsv", write_summary_tsv(summary_rows));
    sink.write("summary.txt", format_summary_text(summary_rows));

    // threshold filters: surviving records and per-book counts
    for (double t : args.thresholds) {
        FilterResult f = filter_group(records, t, filter_cmp);
        sink.write("above_" + format_double(t) + ".tsv", write_records_tsv(f.records));
        std::string counts = "book\tcount\n";
        for (const auto& [book, n] : f.counts)
            counts += book + "\t" + std::to_string(n) + "\n";
        sink.write("counts_" + format_double(t) + ".tsv", counts);
    }

    // pairwise Welch t-tests across targets, Bonferroni-corrected
    if (targets.size() >= 2) {
        std::size_t num_tests = targets.size() * (targets.size() - 1) / 2;
        double corrected = bonferroni(args.alpha, num_tests);
        std::string tsv = "group_1\tgroup_2\tt\tdf\tp\talpha\talpha_corrected\tsignificant\n";
        char buf[128];
        for (std::size_t i = 0; i < targets.size(); ++i) {
            for (std::size_t j = i + 1; j < targets.size(); ++j) {
                const std::vector<double>& a = values_by_target.at(targets[i].name);
                const std::vector<double>& b = values_by_target.at(targets[j].name);
                TTestResult r = t_test(a, b);
                std::snprintf(buf, sizeof buf, "%s\t%s\t%.6f\t%.4f\t%.6g\t%g\t%.6g\t%d\n",
                              targets[i].name.c_str(), targets[j].name.c_str(), r.t, r.df, r.p,
                              args.alpha, corrected, r.p < corrected ? 1 : 0);
                tsv += buf;
            }
        }
        sink.write("ttests.tsv", tsv);
    }

    // parallel map over the inventory
    std::vector<MapEdge> map_edges;
    for (const InventoryEntry& e : inventory) map_edges.push_back({e.inside, e.outside, e.score});
    std::string map_name = sanitize_name(range.from.book) + "_" +
                           std::to_string(range.from.chapter) + "-" +
                           std::to_string(range.to.chapter) + ".svg";
    sink.write("maps/" + map_name,
               render_parallel_map(corpus, range.from.book, range.from.chapter,
                                   range.to.chapter, map_edges));

    RunManifest manifest;
    manifest.command = "casestudy";
    manifest.inputs = {{loaded.path, loaded.digest}};
    std::vector<std::string> tstrings;
    for (double t : args.thresholds) tstrings.push_back(format_double(t));
    manifest.parameters = {
        {"alpha", format_double(args.alpha)},
        {"cmp", args.cmp},
        {"inventory_cmp", args.inventory_cmp},
        {"inventory_threshold", format_double(args.inventory_threshold)},
        {"mode", args.mode},
        {"range", args.range_spec},
        {"targets", join(args.target_specs, ",")},
        {"thresholds", join(tstrings, ",")},
    };
    finish_manifest(sink, std::move(manifest));

    std::printf("inventory: %zu parallels\n", inventory.size());
    std::printf("sentence pairs: %zu\n", records.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Text-reuse experiments on annotated corpora"};
    app.require_subcommand(1);

    std::string corpus_path, out_dir, book, left_path, right_path;

    CLI::App* validate = app.add_subcommand("validate", "Parse and validate a corpus file");
    validate->add_option("--corpus", corpus_path, "Corpus TSV file")->required();

    ExperimentsArgs ex;
    CLI::App* experiments =
        app.add_subcommand("experiments", "Run the granularity/method/threshold grid");
    experiments->add_option("--corpus", ex.corpus_path, "Corpus TSV file")->required();
    experiments->add_option("--out", ex.out_dir, "Output directory")->required();
    experiments->add_option("--granularity", ex.granularities,
                            "Granularities (fixed_N, sentence, half_verse, verse, chapter); "
                            "default: the full grid");
    experiments->add_option("--method", ex.methods, "Methods (SET, LCS); default: both");
    experiments->add_option("--threshold", ex.thresholds,
                            "Thresholds in [0,100]; default: 30..100 step 10");
    experiments->add_option("--mode", ex.mode, "Token mode")
        ->check(CLI::IsMember({"lexeme", "surface"}));
    experiments->add_option("--cmp", ex.cmp, "Edge threshold comparator")
        ->check(CLI::IsMember({"ge", "gt"}));
    experiments->add_option("--quality-cut", ex.quality_cut,
                            "Quality needed for a cell to count as good (default 1.5)");
    experiments->add_option("--jobs", ex.jobs, "Worker threads")->check(CLI::Range(1, 256));

    std::string cmp_mode = "lexeme";
    CLI::App* compare =
        app.add_subcommand("compare", "Compare one book across two manuscripts");
    compare->add_option("--left", left_path, "Left corpus TSV file")->required();
    compare->add_option("--right", right_path, "Right corpus TSV file")->required();
    compare->add_option("--book", book, "Book present in both corpora")->required();
    compare->add_option("--out", out_dir, "Output directory")->required();
    compare->add_option("--mode", cmp_mode, "Token mode for alignment")
        ->check(CLI::IsMember({"lexeme", "surface"}));

    CasestudyArgs cs;
    CLI::App* casestudy =
        app.add_subcommand("casestudy", "Statistics pipeline for one reference range");
    casestudy->add_option("--corpus", cs.corpus_path, "Corpus TSV file")->required();
    casestudy->add_option("--out", cs.out_dir, "Output directory")->required();
    casestudy->add_option("--range", cs.range_spec, "Reference range, BOOK:FROM-TO")->required();
    casestudy->add_option("--target", cs.target_specs, "Comparison range, repeatable")
        ->required();
    casestudy->add_option("--thresholds", cs.thresholds,
                          "Filter thresholds (default 60 80)");
    casestudy->add_option("--inventory-threshold", cs.inventory_threshold,
                          "Verse-parallel threshold (default 60)");
    casestudy->add_option("--inventory-cmp", cs.inventory_cmp,
                          "Inventory comparator (default ge)")
        ->check(CLI::IsMember({"ge", "gt"}));
    casestudy->add_option("--cmp", cs.cmp, "Filter comparator (default gt)")
        ->check(CLI::IsMember({"ge", "gt"}));
    casestudy->add_option("--alpha", cs.alpha, "Familywise significance level (default 0.05)");
    casestudy->add_option("--mode", cs.mode, "Token mode")
        ->check(CLI::IsMember({"lexeme", "surface"}));
    casestudy->add_option("--jobs", cs.jobs, "Worker threads")->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(corpus_path);
        if (app.got_subcommand(experiments)) return cmd_experiments(ex);
        if (app.got_subcommand(compare))
            return cmd_compare(left_path, right_path, book, out_dir, cmp_mode);
        if (app.got_subcommand(casestudy)) return cmd_casestudy(cs);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
