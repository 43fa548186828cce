// clique.hpp
//
// Single-linkage clustering of similarity edges into "cliques" (connected
// components of the threshold graph; the traditional name survives even
// though the components are not maximal cliques), plus the experiment grid
// that sweeps granularity x method x threshold and grades each cell.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "similarity.hpp"

namespace parallax {

struct Clique {
    int id = 0;
    std::vector<int> members;  // chunk ids, ascending
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Connected components of the edge graph over 0..num_chunks-1, keeping
/// only components with >= 2 members. Members ascend within a clique;
/// cliques are ordered by smallest member and numbered from 0.
inline std::vector<Clique> build_cliques(std::size_t num_chunks,
                                         const std::vector<SimilarityEdge>& edges) {
    detail::UnionFind uf(num_chunks);
    for (const SimilarityEdge& e : edges) {
        if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= num_chunks ||
            static_cast<std::size_t>(e.b) >= num_chunks)
            throw Error("edge references unknown chunk id " +
                        std::to_string(std::max(e.a, e.b)));
        uf.unite(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b));
    }
    std::map<std::size_t, std::vector<int>> groups;
    for (const SimilarityEdge& e : edges) {
        groups[uf.find(static_cast<std::size_t>(e.a))];
        groups[uf.find(static_cast<std::size_t>(e.b))];
    }
    for (std::size_t i = 0; i < num_chunks; ++i) {
        auto it = groups.find(uf.find(i));
        if (it != groups.end()) it->second.push_back(static_cast<int>(i));
    }
    std::vector<Clique> cliques;
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;  // isolated chunks are not parallels
        cliques.push_back(Clique{0, std::move(members)});
    }
    std::sort(cliques.begin(), cliques.end(),
              [](const Clique& a, const Clique& b) { return a.members[0] < b.members[0]; });
    for (std::size_t i = 0; i < cliques.size(); ++i) cliques[i].id = static_cast<int>(i);
    return cliques;
}

inline std::vector<Clique> build_cliques(const std::vector<Chunk>& chunks,
                                         const std::vector<SimilarityEdge>& edges) {
    return build_cliques(chunks.size(), edges);
}

/// Grid cell quality: cliques per member of the largest one. Many small,
/// tight cliques score high; one giant blob scores near zero.
inline double experiment_quality(const std::vector<Clique>& cliques) {
    if (cliques.empty()) return 0.0;
    std::size_t longest = 0;
    for (const Clique& c : cliques) longest = std::max(longest, c.members.size());
    return static_cast<double>(cliques.size()) / static_cast<double>(longest);
}

struct ExperimentConfig {
    GranularitySpec granularity;
    Method method = Method::SET;
    double threshold = 0.0;

    std::string label() const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", threshold);
        return granularity.label() + "_" + method_label(method) + "_" + buf;
    }
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<Clique> cliques;
    std::vector<SimilarityEdge> edges;
    std::size_t num_cliques = 0;
    std::size_t longest = 0;
    double quality = 0.0;
    bool good = false;
};

/// The grid swept by default: every granularity from the study, both
/// methods, thresholds 30..100 step 10.
inline std::vector<ExperimentConfig> default_grid() {
    std::vector<GranularitySpec> grans = {
        {GranularityKind::fixed, 10},  {GranularityKind::fixed, 20},
        {GranularityKind::fixed, 50},  {GranularityKind::fixed, 100},
        {GranularityKind::sentence, 0}, {GranularityKind::half_verse, 0},
        {GranularityKind::verse, 0},    {GranularityKind::chapter, 0},
    };
    std::vector<ExperimentConfig> grid;
    for (const GranularitySpec& g : grans)
        for (Method m : {Method::SET, Method::LCS})
            for (int t = 30; t <= 100; t += 10)
                grid.push_back(ExperimentConfig{g, m, static_cast<double>(t)});
    return grid;
}

struct GridOptions {
    TokenMode mode = TokenMode::lexeme;
    int jobs = 1;
    double quality_cut = 1.5;  // a cell is "good" when quality >= cut
    Cmp cmp = Cmp::ge;         // how edges meet the threshold
};

struct GridRun {
    std::vector<ExperimentResult> results;  // same order as the config list
    std::map<GranularitySpec, std::vector<Chunk>> inventories;
};

/// Run every config against one corpus. Configs sharing (granularity,
/// method) reuse one edge computation at their minimum threshold; higher
/// thresholds just filter, which is sound because an edge at threshold t
/// is an edge at every threshold <= t.
inline GridRun run_grid(const Corpus& corpus, const std::vector<ExperimentConfig>& configs,
                        const GridOptions& options = {}) {
    GridRun run;
    run.results.resize(configs.size());
    for (const ExperimentConfig& c : configs)
        if (!run.inventories.count(c.granularity))
            run.inventories.emplace(c.granularity,
                                    make_inventory(corpus, c.granularity, options.mode));

    std::map<std::pair<GranularitySpec, Method>, std::vector<std::size_t>> by_pass;
    for (std::size_t i = 0; i < configs.size(); ++i)
        by_pass[{configs[i].granularity, configs[i].method}].push_back(i);

    for (auto& [key, indices] : by_pass) {
        const std::vector<Chunk>& chunks = run.inventories.at(key.first);
        double min_threshold = 100.0;
        for (std::size_t i : indices) min_threshold = std::min(min_threshold, configs[i].threshold);
        std::vector<SimilarityEdge> base =
            all_pairs(chunks, key.second, min_threshold, options.jobs);
        for (std::size_t i : indices) {
            ExperimentResult& r = run.results[i];
            r.config = configs[i];
            for (const SimilarityEdge& e : base)
                if (cmp_apply(options.cmp, e.score, configs[i].threshold)) r.edges.push_back(e);
            r.cliques = build_cliques(chunks.size(), r.edges);
            r.num_cliques = r.cliques.size();
            for (const Clique& c : r.cliques) r.longest = std::max(r.longest, c.members.size());
            r.quality = experiment_quality(r.cliques);
            r.good = r.quality >= options.quality_cut;
        }
    }
    std::sort(run.results.begin(), run.results.end(),
              [](const ExperimentResult& a, const ExperimentResult& b) {
                  if (a.config.granularity != b.config.granularity)
                      return a.config.granularity < b.config.granularity;
                  if (a.config.method != b.config.method)
                      return static_cast<int>(a.config.method) < static_cast<int>(b.config.method);
                  return a.config.threshold < b.config.threshold;
              });
    return run;
}

/// TSV summary, one row per experiment, config order.
inline std::string write_results_tsv(const GridRun& run) {
    std::string out = "granularity\tmethod\tthreshold\tnum_cliques\tlongest\tquality\tgood\n";
    char buf[160];
    for (const ExperimentResult& r : run.results) {
        std::snprintf(buf, sizeof buf, "%s\t%s\t%g\t%zu\t%zu\t%.4f\t%d\n",
                      r.config.granularity.label().c_str(),
                      method_label(r.config.method).c_str(), r.config.threshold, r.num_cliques,
                      r.longest, r.quality, r.good ? 1 : 0);
        out += buf;
    }
    return out;
}

}  // namespace parallax
