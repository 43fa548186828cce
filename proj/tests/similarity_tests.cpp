// Tests for the similarity engine: the two scoring methods and the
// all-pairs enumeration, checked against literal reference
// implementations (see support/oracles.hpp).

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <parallax/similarity.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace parallax;
using namespace testsupport;

namespace {

std::vector<std::uint32_t> toks(std::initializer_list<std::uint32_t> list) { return list; }

double score_pair(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                  Method m) {
    auto chunks = fake_chunks({a, b});
    return chunk_similarity(chunks[0], chunks[1], m);
}

}  // namespace

TEST_CASE("SET similarity is 100 times the Jaccard index of lexeme sets") {
    // |{1,2,3} n {2,3,4}| / |{1,2,3} u {2,3,4}| = 2/4
    CHECK(score_pair(toks({1, 2, 3}), toks({2, 3, 4}), Method::SET) == 50.0);
    // repetition inside a chunk does not change its set
    CHECK(score_pair(toks({1, 1, 2, 3, 3}), toks({2, 3, 4}), Method::SET) == 50.0);
    CHECK(score_pair(toks({7}), toks({7}), Method::SET) == 100.0);
    CHECK(score_pair(toks({7}), toks({8}), Method::SET) == 0.0);
    // order is irrelevant
    CHECK(score_pair(toks({3, 1, 2}), toks({1, 2, 3}), Method::SET) == 100.0);
}

TEST_CASE("LCS similarity is 100 times one minus normalized edit distance") {
    // distance(abc, abd) = 1, max length 3 -> 100 * (1 - 1/3)
    CHECK_THAT(score_pair(toks({1, 2, 3}), toks({1, 2, 4}), Method::LCS),
               Catch::Matchers::WithinAbs(100.0 * 2.0 / 3.0, 1e-12));
    CHECK(score_pair(toks({1, 2, 3}), toks({1, 2, 3}), Method::LCS) == 100.0);
    CHECK(score_pair(toks({1, 2}), toks({3, 4}), Method::LCS) == 0.0);
    // unlike SET, LCS sees order: reversal costs edits
    CHECK(score_pair(toks({1, 2, 3}), toks({3, 2, 1}), Method::LCS) < 100.0);
    // length mismatch: distance(ab, abcd) = 2, max 4 -> 50
    CHECK(score_pair(toks({1, 2}), toks({1, 2, 3, 4}), Method::LCS) == 50.0);
}

TEST_CASE("scoring requires non-empty chunks") {
    auto chunks = fake_chunks({{}, {1}});
    CHECK_THROWS_AS(chunk_similarity(chunks[0], chunks[1], Method::SET), Error);
    CHECK_THROWS_AS(chunk_similarity(chunks[0], chunks[1], Method::LCS), Error);
}

TEST_CASE("levenshtein agrees with the memoized recurrence") {
    std::mt19937 rng(20240901);
    auto lists = random_token_lists(rng, 40, 12, 6);
    for (std::size_t i = 0; i + 1 < lists.size(); i += 2) {
        const auto& a = lists[i];
        const auto& b = lists[i + 1];
        CHECK(levenshtein(a, b) == static_cast<std::size_t>(oracle_levenshtein(a, b)));
    }
}

TEST_CASE("set scores agree with set-algebra Jaccard on random data") {
    std::mt19937 rng(77);
    auto lists = random_token_lists(rng, 40, 10, 8);
    auto chunks = fake_chunks(lists);
    for (std::size_t i = 0; i + 1 < chunks.size(); i += 2) {
        double got = chunk_similarity(chunks[i], chunks[i + 1], Method::SET);
        double want = oracle_set_score(lists[i], lists[i + 1]);
        CHECK_THAT(got, Catch::Matchers::WithinAbs(want, 1e-12));
    }
}

TEST_CASE("method parsing accepts the two canonical names") {
    CHECK(parse_method("SET") == Method::SET);
    CHECK(parse_method("LCS") == Method::LCS);
    CHECK_THROWS_AS(parse_method("JACCARD"), Error);
    CHECK(method_label(Method::SET) == "SET");
    CHECK(method_label(Method::LCS) == "LCS");
}

TEST_CASE("cmp helpers") {
    CHECK(cmp_apply(Cmp::ge, 50.0, 50.0));
    CHECK_FALSE(cmp_apply(Cmp::gt, 50.0, 50.0));
    CHECK(cmp_apply(Cmp::gt, 50.1, 50.0));
    CHECK(parse_cmp("ge") == Cmp::ge);
    CHECK(parse_cmp("gt") == Cmp::gt);
    CHECK_THROWS_AS(parse_cmp("le"), Error);
}

TEST_CASE("all_pairs at threshold zero enumerates every overlapping pair") {
    std::mt19937 rng(4242);
    auto lists = random_token_lists(rng, 25, 8, 5);
    auto chunks = fake_chunks(lists);

    for (Method m : {Method::SET, Method::LCS}) {
        auto got = all_pairs(chunks, m, 0.0);
        auto want = oracle_all_pairs(chunks, m, 0.0);
        INFO("method " << method_label(m));
        CHECK(edges_match(got, want));
    }
}

TEST_CASE("all_pairs with a positive threshold matches exhaustive filtering") {
    std::mt19937 rng(987);
    auto lists = random_token_lists(rng, 60, 10, 12);
    auto chunks = fake_chunks(lists);

    for (Method m : {Method::SET, Method::LCS}) {
        for (double t : {10.0, 33.0, 50.0, 75.0, 100.0}) {
            auto got = all_pairs(chunks, m, t);
            auto want = oracle_all_pairs(chunks, m, t);
            INFO("method " << method_label(m) << " threshold " << t);
            CHECK(edges_match(got, want));
        }
    }
}

TEST_CASE("all_pairs keeps boundary pairs that score exactly the threshold") {
    // {1,2} vs {1,3}: Jaccard 1/3 -> 100/3; LCS distance 1 of 2 -> 50
    auto chunks = fake_chunks({{1, 2}, {1, 3}});
    auto set_edges = all_pairs(chunks, Method::SET, 100.0 / 3.0);
    REQUIRE(set_edges.size() == 1);
    CHECK_THAT(set_edges[0].score, Catch::Matchers::WithinAbs(100.0 / 3.0, 1e-12));

    auto lcs_edges = all_pairs(chunks, Method::LCS, 50.0);
    REQUIRE(lcs_edges.size() == 1);
    CHECK(lcs_edges[0].score == 50.0);

    // the LCS length screen must not evict pairs exactly at the cap:
    // sizes 2 and 4 cap the score at 50, and {1,2} vs {1,2,3,4} hits it
    auto caps = fake_chunks({{1, 2}, {1, 2, 3, 4}});
    auto cap_edges = all_pairs(caps, Method::LCS, 50.0);
    REQUIRE(cap_edges.size() == 1);
    CHECK(cap_edges[0].score == 50.0);
}

TEST_CASE("all_pairs output is canonically ordered and normalized") {
    std::mt19937 rng(5150);
    auto lists = random_token_lists(rng, 30, 6, 4);
    auto chunks = fake_chunks(lists);
    auto edges = all_pairs(chunks, Method::SET, 20.0);
    REQUIRE_FALSE(edges.empty());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(edges[i].a < edges[i].b);
        if (i > 0)
            CHECK((edges[i - 1].a < edges[i].a ||
                   (edges[i - 1].a == edges[i].a && edges[i - 1].b < edges[i].b)));
    }
}

TEST_CASE("all_pairs is indifferent to the worker count") {
    std::mt19937 rng(31337);
    auto lists = random_token_lists(rng, 120, 10, 10);
    auto chunks = fake_chunks(lists);
    for (Method m : {Method::SET, Method::LCS}) {
        auto serial = all_pairs(chunks, m, 25.0, 1);
        auto threaded = all_pairs(chunks, m, 25.0, 8);
        REQUIRE(serial.size() == threaded.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].a == threaded[i].a);
            CHECK(serial[i].b == threaded[i].b);
            CHECK(serial[i].score == threaded[i].score);
        }
    }
}

TEST_CASE("all_pairs validates its inputs") {
    auto chunks = fake_chunks({{1}, {2}});
    CHECK_THROWS_AS(all_pairs(chunks, Method::SET, -1.0), Error);
    CHECK_THROWS_AS(all_pairs(chunks, Method::SET, 100.5), Error);
    CHECK(all_pairs({}, Method::SET, 50.0).empty());
    CHECK(all_pairs(chunks, Method::SET, 50.0).empty());  // disjoint pair
}

TEST_CASE("one chunk yields no pairs; identical twins survive threshold 100") {
    auto solo = fake_chunks({{1, 2, 3}});
    CHECK(all_pairs(solo, Method::SET, 0.0).empty());
    CHECK(all_pairs(solo, Method::LCS, 0.0).empty());

    auto twins = fake_chunks({{5, 6, 7}, {5, 6, 7}});
    for (Method m : {Method::SET, Method::LCS}) {
        auto edges = all_pairs(twins, m, 100.0);
        REQUIRE(edges.size() == 1);
        CHECK(edges[0].score == 100.0);
    }
}

TEST_CASE("property: both measures are symmetric and bounded") {
    std::mt19937 rng(1123);
    auto lists = random_token_lists(rng, 60, 9, 7);
    auto chunks = fake_chunks(lists);
    for (std::size_t i = 0; i + 1 < chunks.size(); i += 2) {
        for (Method m : {Method::SET, Method::LCS}) {
            double xy = chunk_similarity(chunks[i], chunks[i + 1], m);
            double yx = chunk_similarity(chunks[i + 1], chunks[i], m);
            CHECK(xy == yx);
            CHECK(xy >= 0.0);
            CHECK(xy <= 100.0);
        }
    }
}

TEST_CASE("property: 100 exactly characterizes equality") {
    // SET: equal sets (even with different multiplicity/order)
    CHECK(score_pair(toks({2, 1, 1}), toks({1, 2, 2}), Method::SET) == 100.0);
    CHECK(score_pair(toks({2, 1, 1}), toks({1, 2, 2}), Method::LCS) < 100.0);
    // LCS: equal sequences only
    CHECK(score_pair(toks({1, 2, 2}), toks({1, 2, 2}), Method::LCS) == 100.0);

    std::mt19937 rng(400);
    auto lists = random_token_lists(rng, 40, 6, 3);
    auto chunks = fake_chunks(lists);
    for (std::size_t i = 0; i + 1 < chunks.size(); i += 2) {
        double lcs = chunk_similarity(chunks[i], chunks[i + 1], Method::LCS);
        bool equal_seq = lists[i] == lists[i + 1];
        CHECK((lcs == 100.0) == equal_seq);
        double set = chunk_similarity(chunks[i], chunks[i + 1], Method::SET);
        bool equal_set = chunks[i].token_set == chunks[i + 1].token_set;
        CHECK((set == 100.0) == equal_set);
    }
}

TEST_CASE("property: levenshtein satisfies the metric axioms") {
    std::mt19937 rng(90210);
    auto lists = random_token_lists(rng, 30, 8, 4);
    for (std::size_t i = 0; i + 2 < lists.size(); i += 3) {
        const auto& x = lists[i];
        const auto& y = lists[i + 1];
        const auto& z = lists[i + 2];
        CHECK(levenshtein(x, x) == 0);
        CHECK(levenshtein(x, y) == levenshtein(y, x));
        CHECK(levenshtein(x, z) <= levenshtein(x, y) + levenshtein(y, z));
        CHECK(levenshtein(x, y) <= std::max(x.size(), y.size()));
    }
}

TEST_CASE("property: edge sets shrink monotonically with the threshold") {
    std::mt19937 rng(60606);
    auto lists = random_token_lists(rng, 50, 8, 6);
    auto chunks = fake_chunks(lists);
    for (Method m : {Method::SET, Method::LCS}) {
        auto loose = all_pairs(chunks, m, 20.0);
        auto tight = all_pairs(chunks, m, 65.0);
        CHECK(tight.size() <= loose.size());
        for (const SimilarityEdge& e : tight) {
            bool found = false;
            for (const SimilarityEdge& l : loose)
                if (l.a == e.a && l.b == e.b && l.score == e.score) { found = true; break; }
            CHECK(found);
        }
    }
}

TEST_CASE("edges cite chunks by id even when ids are not positional") {
    auto chunks = fake_chunks({{1, 2, 3}, {1, 2, 3}});
    chunks[0].id = 9;
    chunks[1].id = 4;
    auto edges = all_pairs(chunks, Method::SET, 90.0);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].a == 4);
    CHECK(edges[0].b == 9);
    CHECK(edges[0].method == Method::SET);
}
