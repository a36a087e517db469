#include <doctest.h>

#include <random>

#include "authornet/crossplatform.hpp"
#include "authornet/errors.hpp"
#include "support.hpp"

using namespace authornet;
using testsupport::FixtureBuilder;
using testsupport::TempDir;

TEST_CASE("usernames: normalization") {
    CHECK(crossplatform::normalize_username("  Alice ") == "alice");
    CHECK(crossplatform::normalize_username("3vilp4wn") == "3vilp4wn");
    // idempotent
    CHECK(crossplatform::normalize_username(crossplatform::normalize_username("  MiXeD ")) ==
          "mixed");
}

TEST_CASE("match_usernames: case-insensitive exact matching") {
    TempDir dir("match");
    FixtureBuilder fx;
    fx.author("a1", "3vilp4wn");
    fx.author("a2", "Alice");
    fx.author("a3", "bob");
    fx.repo("r1", "a1");
    fx.post("hts", "t1", "p1", "3vilp4wn");
    fx.post("hts", "t1", "p2", "alice");
    fx.post("oc", "t9", "p3", "Alicia");  // prefix, not a match
    Corpus corpus = fx.load(dir);
    ForumCorpus forums = fx.load_forums(dir);

    auto matches = crossplatform::match_usernames(corpus, forums);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].username == "3vilp4wn");
    CHECK(matches[0].forums == std::set<std::string>{"hts"});
    CHECK(matches[1].username == "alice");
    CHECK(matches[1].author_ids == std::vector<std::string>{"a2"});
}

TEST_CASE("match_usernames: disjoint name sets") {
    TempDir dir("match_none");
    FixtureBuilder fx;
    fx.author("a1", "solo");
    fx.repo("r1", "a1");
    fx.post("ws", "t", "p", "other");
    CHECK(crossplatform::match_usernames(fx.load(dir), fx.load_forums(dir)).empty());
}

TEST_CASE("forum_egonet: co-thread neighbors, deduped, ego excluded") {
    TempDir dir("egonet_forum");
    FixtureBuilder fx;
    fx.author("a1", "ego");
    fx.repo("r1", "a1");
    fx.post("hts", "t1", "p1", "ego");
    fx.post("hts", "t1", "p2", "x");
    fx.post("hts", "t2", "p3", "Ego");  // same person, case-folded
    fx.post("hts", "t2", "p4", "x");
    fx.post("hts", "t2", "p5", "z");
    fx.post("hts", "t3", "p6", "stranger");  // ego absent from t3
    ForumCorpus forums = fx.load_forums(dir);

    auto neighbors = crossplatform::forum_egonet("ego", forums);
    CHECK(neighbors ==
          std::set<std::pair<std::string, std::string>>{{"hts", "x"}, {"hts", "z"}});

    CHECK(crossplatform::forum_egonet("nobody", forums).empty());
}

TEST_CASE("forum_egonet: same third-party name on two forums counts per forum") {
    TempDir dir("egonet_two_forums");
    FixtureBuilder fx;
    fx.author("a1", "ego");
    fx.repo("r1", "a1");
    fx.post("hts", "t1", "p1", "ego");
    fx.post("hts", "t1", "p2", "x");
    fx.post("oc", "t1", "p1", "ego");
    fx.post("oc", "t1", "p2", "x");
    auto neighbors = crossplatform::forum_egonet("ego", fx.load_forums(dir));
    CHECK(neighbors.size() == 2);
}

TEST_CASE("cross_egonet: combines AA neighborhood with forum neighbors") {
    TempDir dir("egonet_cross");
    FixtureBuilder fx;
    fx.author("a1", "ego");
    fx.author("a2", "peer");
    fx.author("a3", "fan");
    fx.repo("r1", "a1");
    fx.repo("r2", "a2");
    fx.interaction("fork", "a1", "r2");   // out-neighbor a2
    fx.interaction("follow", "a3", "a1"); // in-neighbor a3
    fx.post("hts", "t1", "p1", "ego");
    fx.post("hts", "t1", "p2", "buddy");
    Corpus corpus = fx.load(dir);
    ForumCorpus forums = fx.load_forums(dir);
    auto aa = graph::apply_weights(graph::build_aa_graph(corpus),
                                   graph::calibrate_weights(graph::build_aa_graph(corpus)));

    auto ego = crossplatform::cross_egonet("ego", aa, corpus, forums);
    CHECK(ego.github_neighbors == std::set<std::string>{"a2", "a3"});
    CHECK(ego.forum_neighbors ==
          std::set<std::pair<std::string, std::string>>{{"hts", "buddy"}});
    CHECK(ego.forums_active == std::set<std::string>{"hts"});
    CHECK(ego.post_count == 1);
    CHECK(ego.github_neighbors.count("a1") == 0);

    CHECK_THROWS_AS(crossplatform::cross_egonet("peer", aa, corpus, forums), Error);
}

TEST_CASE("cross_egonet: co-thread relation is symmetric") {
    TempDir dir("egonet_sym");
    FixtureBuilder fx;
    fx.author("a1", "u1");
    fx.repo("r1", "a1");
    std::mt19937 rng(64);
    const char* users[] = {"u1", "u2", "u3", "u4"};
    for (int forum = 0; forum < 2; ++forum)
        for (int t = 0; t < 4; ++t)
            for (int p = 0; p < 3; ++p)
                fx.post("f" + std::to_string(forum), "t" + std::to_string(t),
                        "p" + std::to_string(t * 10 + p) + std::to_string(forum),
                        users[rng() % 4]);
    ForumCorpus forums = fx.load_forums(dir);
    for (const char* x : users) {
        for (const char* y : users) {
            if (std::string(x) == y) continue;
            auto ex = crossplatform::forum_egonet(x, forums);
            auto ey = crossplatform::forum_egonet(y, forums);
            for (int forum = 0; forum < 2; ++forum) {
                std::string f = "f" + std::to_string(forum);
                CHECK(ex.count({f, y}) == ey.count({f, x}));
            }
        }
    }
}

TEST_CASE("scatter_series: no matches yields an empty series") {
    TempDir dir("scatter_empty");
    FixtureBuilder fx;
    fx.author("a1", "solo");
    fx.repo("r1", "a1");
    fx.post("ws", "t", "p", "other");
    Corpus corpus = fx.load(dir);
    ForumCorpus forums = fx.load_forums(dir);
    auto aa = graph::build_aa_graph(corpus);
    auto matches = crossplatform::match_usernames(corpus, forums);
    CHECK(crossplatform::scatter_series(matches, aa, corpus, forums).empty());
}

TEST_CASE("scatter_series: rows sorted by username") {
    TempDir dir("scatter");
    FixtureBuilder fx;
    fx.author("a1", "zed");
    fx.author("a2", "amy");
    fx.author("a3", "noise");
    fx.repo("r1", "a1");
    fx.repo("r2", "a2");
    fx.interaction("comment", "a3", "r1");  // zed gets one neighbor
    fx.post("hts", "t1", "p1", "zed");
    fx.post("hts", "t1", "p2", "q1");
    fx.post("hts", "t1", "p3", "q2");
    fx.post("oc", "t2", "p4", "amy");
    Corpus corpus = fx.load(dir);
    ForumCorpus forums = fx.load_forums(dir);
    auto aa = graph::apply_weights(graph::build_aa_graph(corpus),
                                   graph::calibrate_weights(graph::build_aa_graph(corpus)));
    auto matches = crossplatform::match_usernames(corpus, forums);
    auto series = crossplatform::scatter_series(matches, aa, corpus, forums);

    REQUIRE(series.size() == 2);
    CHECK(series[0].username == "amy");
    CHECK(series[0].github_degree == 0);
    CHECK(series[0].forum_degree == 0);
    CHECK(series[1].username == "zed");
    CHECK(series[1].github_degree == 1);
    CHECK(series[1].forum_degree == 2);
}
