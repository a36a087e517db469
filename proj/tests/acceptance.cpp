// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "authornet/community.hpp"
#include "authornet/crossplatform.hpp"
#include "authornet/graph.hpp"
#include "authornet/influence.hpp"
#include "authornet/ingest.hpp"
#include "authornet/pipeline.hpp"
#include "authornet/stats.hpp"
#include "support.hpp"

using namespace authornet;
using graph::AaLabel;
using testsupport::FixtureBuilder;
using testsupport::TempDir;
namespace fs = std::filesystem;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& what) {
    if (!condition) throw CheckFailure(what);
}

void expect_near(double actual, double wanted, double tolerance, const std::string& what) {
    if (!(std::fabs(actual - wanted) <= tolerance)) {
        std::ostringstream msg;
        msg << what << ": got " << actual << ", wanted " << wanted << " +- " << tolerance;
        throw CheckFailure(msg.str());
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

graph::AuthorAuthorGraph weighted_graph(
    std::size_t n, const std::vector<std::tuple<int, int, AaLabel, double>>& edges) {
    graph::AuthorAuthorGraph g;
    for (std::size_t i = 0; i < n; ++i) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "n%02zu", i);
        g.nodes.push_back(buf);
        g.node_index[buf] = static_cast<std::uint32_t>(i);
    }
    for (const auto& [s, d, label, w] : edges)
        g.edges.push_back(
            {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(d), label, w});
    g.weighted = true;
    return g;
}

graph::AuthorAuthorGraph random_weighted_graph(std::mt19937& rng, std::size_t max_nodes) {
    std::size_t n = 2 + rng() % (max_nodes - 1);
    std::vector<std::tuple<int, int, AaLabel, double>> edges;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d) {
            if (s == d) continue;
            for (AaLabel label : graph::kAaLabels)
                if (rng() % 100 < 25)
                    edges.emplace_back(static_cast<int>(s), static_cast<int>(d), label,
                                       0.05 + static_cast<double>(rng() % 1000) / 1000.0);
        }
    if (edges.empty()) edges.emplace_back(0, 1, AaLabel::follower, 1.0);
    return weighted_graph(n, edges);
}

// Dense alternation oracle, independent of the solver's CSR/kernels path.
void dense_oracle(const graph::AuthorAuthorGraph& g, double tolerance, std::size_t max_iter,
                  std::vector<double>& phs, std::vector<double>& chs) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges) w[e.src][e.dst] += e.weight;
    phs.assign(n, 1.0);
    chs.assign(n, 1.0);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::vector<double> p(n, 0.0), c(n, 0.0);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) p[u] += w[v][u] * chs[v];
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t z = 0; z < n; ++z) c[u] += w[u][z] * p[z];
        double ps = std::accumulate(p.begin(), p.end(), 0.0);
        double cs = std::accumulate(c.begin(), c.end(), 0.0);
        expect(ps > 0.0 && cs > 0.0, "oracle vector collapsed");
        for (double& x : p) x /= ps;
        for (double& x : c) x /= cs;
        double delta = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            delta = std::max({delta, std::fabs(p[u] - phs[u]), std::fabs(c[u] - chs[u])});
        phs = p;
        chs = c;
        if (delta < tolerance) break;
    }
}

graph::AuthorRepoGraph make_ar(std::size_t n_authors, std::size_t n_repos,
                               const std::vector<std::pair<int, int>>& pairs) {
    graph::AuthorRepoGraph g;
    for (std::size_t i = 0; i < n_authors; ++i) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "a%02zu", i);
        g.authors.push_back(buf);
        g.author_index[buf] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t i = 0; i < n_repos; ++i) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "r%02zu", i);
        g.repos.push_back(buf);
        g.repo_index[buf] = static_cast<std::uint32_t>(i);
    }
    for (auto [a, r] : pairs)
        g.edges.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(r),
                           {Kind::watch}});
    return g;
}

double partition_modularity(const graph::AuthorRepoGraph& g,
                            const std::vector<community::CommunityProfile>& communities) {
    std::vector<int> ac(g.authors.size()), rc(g.repos.size());
    for (const auto& c : communities) {
        for (const std::string& a : c.authors)
            ac[g.author_index.at(a)] = static_cast<int>(c.id);
        for (const std::string& r : c.repos) rc[g.repo_index.at(r)] = static_cast<int>(c.id);
    }
    return community::bipartite_modularity(g, ac, rc);
}

double oracle_best_modularity(const graph::AuthorRepoGraph& g) {
    const std::size_t n = g.authors.size() + g.repos.size();
    std::vector<int> assign(n, 0);
    std::vector<int> ac(g.authors.size()), rc(g.repos.size());
    double best = -1e9;
    auto evaluate = [&] {
        for (std::size_t i = 0; i < g.authors.size(); ++i) ac[i] = assign[i];
        for (std::size_t i = 0; i < g.repos.size(); ++i) rc[i] = assign[g.authors.size() + i];
        best = std::max(best, community::bipartite_modularity(g, ac, rc));
    };
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int max_used) {
        if (pos == n) {
            evaluate();
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            assign[pos] = c;
            rec(pos + 1, std::max(max_used, c));
        }
    };
    rec(0, -1);
    return best;
}

Corpus random_corpus(std::mt19937& rng, const TempDir& dir) {
    FixtureBuilder fx;
    std::size_t n_authors = 1 + rng() % 12;
    std::size_t n_repos = 1 + rng() % 14;
    for (std::size_t i = 0; i < n_authors; ++i)
        fx.author("a" + std::to_string(10 + i), "user" + std::to_string(10 + i));
    for (std::size_t i = 0; i < n_repos; ++i) {
        std::string created;
        if (rng() % 4 != 0)
            created = std::to_string(2010 + rng() % 10) + "-06-0" + std::to_string(1 + rng() % 9);
        fx.repo("r" + std::to_string(10 + i), "a" + std::to_string(10 + rng() % n_authors),
                created);
    }
    static const char* kinds[] = {"star", "watch", "fork", "comment", "contribute", "follow"};
    for (std::size_t i = 0, n = rng() % 50; i < n; ++i) {
        std::string kind = kinds[rng() % 6];
        std::string actor = "a" + std::to_string(10 + rng() % n_authors);
        if (kind == "follow") {
            std::string target = "a" + std::to_string(10 + rng() % n_authors);
            if (target == actor) continue;
            fx.interaction(kind, actor, target);
        } else {
            fx.interaction(kind, actor, "r" + std::to_string(10 + rng() % n_repos));
        }
    }
    return fx.load(dir);
}

// ---------------------------------------------------------------- criteria

void criterion_1_weight_calibration() {
    std::map<AaLabel, double> degrees = {{AaLabel::follower, 12.21},
                                         {AaLabel::fork, 4.67},
                                         {AaLabel::contribution, 0.53},
                                         {AaLabel::comment, 0.49}};
    auto exact = graph::calibration_from_degrees(degrees, graph::WeightMode::exact);
    expect_near(exact.weights.at(AaLabel::follower), 0.49 / 12.21, 1e-9, "follower weight");
    expect_near(exact.weights.at(AaLabel::follower), 0.040131040, 1e-9, "follower weight value");
    expect_near(exact.weights.at(AaLabel::fork), 0.104925053, 1e-9, "fork weight value");
    expect_near(exact.weights.at(AaLabel::contribution), 0.924528301, 1e-9,
                "contribution weight value");
    expect(exact.weights.at(AaLabel::comment) == 1.0, "comment weight is exactly 1");
    expect(exact.d_min == 0.49, "d_min");

    auto rounded = graph::calibration_from_degrees(degrees, graph::WeightMode::paper_rounded);
    expect(rounded.weights.at(AaLabel::follower) == 0.04, "rounded follower");
    expect(rounded.weights.at(AaLabel::fork) == 0.1, "rounded fork");
    expect(rounded.weights.at(AaLabel::contribution) == 1.0, "rounded contribution");
    expect(rounded.weights.at(AaLabel::comment) == 1.0, "rounded comment");
}

void criterion_2_fixed_points() {
    // warm-up so the timed solves measure steady-state cost
    auto warm = weighted_graph(2, {{0, 1, AaLabel::follower, 1.0}});
    influence::hacker_score(warm, 1e-9, 100);

    auto start = std::chrono::steady_clock::now();
    auto single = influence::hacker_score(warm, 1e-9, 100);
    auto cycle = weighted_graph(
        2, {{0, 1, AaLabel::comment, 1.0}, {1, 0, AaLabel::comment, 1.0}});
    auto both = influence::hacker_score(cycle, 1e-9, 100);
    double elapsed = seconds_since(start);

    expect(single.converged && single.iterations <= 100, "single edge converges in <= 100");
    expect_near(single.phs[0], 0.0, 1e-9, "phs[0]");
    expect_near(single.phs[1], 1.0, 1e-9, "phs[1]");
    expect_near(single.chs[0], 1.0, 1e-9, "chs[0]");
    expect_near(single.chs[1], 0.0, 1e-9, "chs[1]");

    expect(both.converged && both.iterations <= 100, "two-cycle converges in <= 100");
    for (double v : both.phs) expect_near(v, 0.5, 1e-9, "cycle phs");
    for (double v : both.chs) expect_near(v, 0.5, 1e-9, "cycle chs");

    expect(elapsed < 0.001, "two fixed-point solves in < 1 ms (took " +
                                std::to_string(elapsed * 1000) + " ms)");
}

double g_worst_norm_error = 0.0;  // fed by criterion 3, checked by criterion 4

void criterion_3_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        graph::AuthorAuthorGraph g = random_weighted_graph(rng, 8);
        auto table = influence::hacker_score(g, 1e-9, 10000);
        g_worst_norm_error = std::max(g_worst_norm_error, table.max_norm_error);
        std::vector<double> phs, chs;
        dense_oracle(g, 1e-9, 10000, phs, chs);
        for (std::size_t i = 0; i < phs.size(); ++i) {
            expect_near(table.phs[i], phs[i], 1e-6,
                        "phs vs oracle (trial " + std::to_string(trial) + ")");
            expect_near(table.chs[i], chs[i], 1e-6,
                        "chs vs oracle (trial " + std::to_string(trial) + ")");
        }
    }
    double elapsed = seconds_since(start);
    expect(elapsed < 5.0, "oracle suite under 5 s (took " + std::to_string(elapsed) + " s)");
}

void criterion_4_normalization_invariant() {
    // per-iteration |sum - 1| tracked by the solver across criterion 3's
    // fifty graphs, plus the fixtures here
    auto chain = weighted_graph(4, {{0, 1, AaLabel::follower, 0.5},
                                    {1, 2, AaLabel::fork, 0.25},
                                    {2, 3, AaLabel::comment, 1.0},
                                    {3, 0, AaLabel::contribution, 0.75}});
    auto table = influence::hacker_score(chain, 1e-9, 10000);
    double worst = std::max(g_worst_norm_error, table.max_norm_error);
    expect(worst < 1e-9,
           "post-normalization sums stay within 1e-9 (worst " + std::to_string(worst) + ")");
}

void criterion_5_bipartite_communities() {
    auto start = std::chrono::steady_clock::now();

    // two disjoint K(2,2) bicliques
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 2; ++a)
        for (int r = 0; r < 2; ++r) pairs.emplace_back(a, r);
    for (int a = 2; a < 4; ++a)
        for (int r = 2; r < 4; ++r) pairs.emplace_back(a, r);
    auto disjoint = make_ar(4, 4, pairs);
    auto communities = community::detect_communities(disjoint);
    expect(communities.size() == 2, "two disjoint bicliques give two communities");
    for (const auto& c : communities)
        expect(c.modularity_score == 1.0, "biclique community has MS exactly 1");

    // ten-node fixture: two K(2,3) bicliques joined by one bridge edge
    std::vector<std::pair<int, int>> bridged;
    for (int a = 0; a < 2; ++a)
        for (int r = 0; r < 3; ++r) bridged.emplace_back(a, r);
    for (int a = 2; a < 4; ++a)
        for (int r = 3; r < 6; ++r) bridged.emplace_back(a, r);
    bridged.emplace_back(1, 3);  // bridge
    auto g = make_ar(4, 6, bridged);
    auto detected = community::detect_communities(g);
    double greedy_q = partition_modularity(g, detected);
    double best_q = oracle_best_modularity(g);
    expect(greedy_q == best_q, "greedy modularity equals the exhaustive oracle exactly (" +
                                   std::to_string(greedy_q) + " vs " + std::to_string(best_q) +
                                   ")");

    double elapsed = seconds_since(start);
    expect(elapsed < 30.0, "oracle suite under 30 s (took " + std::to_string(elapsed) + " s)");
}

void criterion_6_modularity_formula() {
    auto g = make_ar(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    community::CommunityProfile c;
    c.authors = {"a00", "a01"};
    c.repos = {"r00", "r01", "r02"};
    expect_near(community::modularity_score(c, g), 0.666667, 1e-6 + 1e-9, "MS of 4/(2*3)");
    expect_near(community::modularity_score(c, g), 4.0 / 6.0, 1e-9, "MS exact ratio");

    auto biclique = make_ar(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    community::CommunityProfile whole;
    whole.authors = {"a00", "a01"};
    whole.repos = {"r00", "r01"};
    expect(community::modularity_score(whole, biclique) == 1.0, "biclique MS is exactly 1");
}

void criterion_7_sop() {
    {
        TempDir dir("acc_sop");
        FixtureBuilder fx;
        fx.author("a1", "u1");
        fx.repo("k1", "a1", "", "keylogger one");
        fx.repo("k2", "a1", "", "keylogger two");
        fx.repo("v1", "a1", "", "virus here");
        Corpus corpus = fx.load(dir);
        community::CommunityProfile c;
        c.authors = {"a1"};
        c.repos = {"k1", "k2", "v1"};
        community::sop_profile(c, corpus, ingest::default_keyword_config());
        expect_near(c.sop_malware.at("keylogger"), 0.6667, 1e-4, "SOP keylogger");
        expect_near(c.sop_malware.at("virus"), 0.3333, 1e-4, "SOP virus");
        double sum = 0.0;
        for (const auto& [kw, v] : c.sop_malware) sum += v;
        expect_near(sum, 1.0, 1e-9, "SOP sums to one");
    }
    {
        // 100 keyword-bearing repo counts, 44 of them ransomware
        TempDir dir("acc_sop44");
        FixtureBuilder fx;
        fx.author("a1", "u1");
        for (int i = 0; i < 44; ++i)
            fx.repo("ra" + std::to_string(100 + i), "a1", "", "ransomware kit for windows");
        for (int i = 0; i < 30; ++i)
            fx.repo("rb" + std::to_string(100 + i), "a1", "", "virus sample");
        for (int i = 0; i < 26; ++i)
            fx.repo("rc" + std::to_string(100 + i), "a1", "", "trojan loader");
        Corpus corpus = fx.load(dir);
        community::CommunityProfile c;
        c.authors = {"a1"};
        for (const auto& r : corpus.repos) c.repos.insert(r.repo_id);
        community::sop_profile(c, corpus, ingest::default_keyword_config());
        expect(community::dominant_keyword(c.sop_malware) == "ransomware",
               "dominant type is ransomware");
        expect_near(c.sop_malware.at("ransomware"), 0.44, 1e-9, "SOP(ransomware)");
        double sum = 0.0;
        for (const auto& [kw, v] : c.sop_malware) sum += v;
        expect_near(sum, 1.0, 1e-9, "SOP sums to one");

        // Table-style row: id,n_authors,n_repos,ms,...,dominant_type,type_sop
        std::string dom = community::dominant_keyword(c.sop_malware);
        std::string row = std::to_string(c.authors.size()) + "," +
                          std::to_string(c.repos.size()) + "," + dom + "," +
                          pipeline::format_double(c.sop_malware.at(dom));
        expect(row == "1,100,ransomware,0.44", "schema row is '" + row + "'");
    }
}

void criterion_8_reciprocity() {
    TempDir dir("acc_recip");
    FixtureBuilder fx;
    fx.author("a", "ua");
    fx.author("b", "ub");
    fx.author("c", "uc");
    fx.repo("r", "a");
    fx.interaction("follow", "a", "b");
    fx.interaction("follow", "b", "a");
    fx.interaction("follow", "c", "a");
    auto follow = stats::reciprocity(fx.load(dir)).by_kind.at(Kind::follow);
    expect(follow.pair_count == 2 && follow.mutual_count == 1, "pair bookkeeping");
    expect(follow.ri.has_value() && *follow.ri == 0.5, "RI_follow is exactly 0.5");

    std::mt19937 rng(140);
    for (int trial = 0; trial < 100; ++trial) {
        TempDir rdir("acc_recip_prop");
        Corpus corpus = random_corpus(rng, rdir);
        stats::ReciprocityReport report = stats::reciprocity(corpus);
        for (const auto& [kind, entry] : report.by_kind) {
            expect(entry.mutual_count <= entry.pair_count, "mutual <= pairs");
            if (entry.ri) expect(*entry.ri >= 0.0 && *entry.ri <= 1.0, "RI within [0,1]");
        }
    }
}

void criterion_9_ccdf_and_cohorts() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(9000);
    for (int trial = 0; trial < 100; ++trial) {
        TempDir dir("acc_ccdf");
        Corpus corpus = random_corpus(rng, dir);
        for (auto metric : {stats::CcdfMetric::repos_created, stats::CcdfMetric::followers,
                            stats::CcdfMetric::total_forks_received}) {
            stats::CcdfSeries series = stats::ccdf(metric, corpus);
            expect(!series.points.empty(), "ccdf nonempty");
            expect(series.points.front().second == 1.0, "ccdf anchored at 1");
            for (std::size_t i = 1; i < series.points.size(); ++i) {
                expect(series.points[i].second <= series.points[i - 1].second,
                       "ccdf non-increasing");
                expect(series.points[i].second >= 0.0 && series.points[i].second <= 1.0,
                       "ccdf in [0,1]");
            }
        }
        stats::YearlyCohorts yc = stats::yearly_cohorts(corpus);
        std::size_t authors = yc.undated_authors, repos = yc.undated_repos;
        for (const auto& [year, counts] : yc.by_year) {
            authors += counts.new_authors;
            repos += counts.new_repos;
        }
        expect(authors == corpus.authors.size(), "cohort author conservation");
        expect(repos == corpus.repos.size(), "cohort repo conservation");
    }
    double elapsed = seconds_since(start);
    expect(elapsed < 10.0, "property suite under 10 s (took " + std::to_string(elapsed) + " s)");
}

void criterion_10_cross_platform() {
    TempDir dir("acc_cross");
    FixtureBuilder fx;
    fx.author("m0", "misterch0c");
    const int kGithub = 898;
    for (int i = 0; i < kGithub; ++i)
        fx.author("g" + std::to_string(1000 + i), "ghdev" + std::to_string(i));
    fx.author("al", "Alice");
    fx.repo("r1", "m0");
    for (int i = 0; i < kGithub; ++i)
        fx.interaction("follow", "g" + std::to_string(1000 + i), "m0");

    const int kForum = 224;
    for (int i = 0; i < kForum; ++i)
        fx.post("ws", "t" + std::to_string(i % 8), "p" + std::to_string(i),
                "wsuser" + std::to_string(i));
    for (int t = 0; t < 8; ++t)
        fx.post("ws", "t" + std::to_string(t), "ego" + std::to_string(t), "misterch0c");
    // separate thread: these must not inflate the ego's forum degree
    fx.post("ws", "t_side", "alice_post", "alice");    // matches author "Alice"
    fx.post("ws", "t_side", "alicia_post", "Alicia");  // must not match

    Corpus corpus = fx.load(dir);
    ForumCorpus forums = fx.load_forums(dir);
    auto aa = graph::apply_weights(graph::build_aa_graph(corpus),
                                   graph::calibrate_weights(graph::build_aa_graph(corpus)));
    auto matches = crossplatform::match_usernames(corpus, forums);
    std::vector<std::string> names;
    for (const auto& m : matches) names.push_back(m.username);
    expect(names == std::vector<std::string>{"alice", "misterch0c"},
           "case-insensitive exact matching only");

    auto series = crossplatform::scatter_series(matches, aa, corpus, forums);
    expect(series.size() == 2, "two scatter rows");
    expect(series[1].username == "misterch0c", "scatter sorted by username");
    expect(series[1].github_degree == 898,
           "github degree (got " + std::to_string(series[1].github_degree) + ")");
    expect(series[1].forum_degree == 224,
           "forum degree (got " + std::to_string(series[1].forum_degree) + ")");
    // isolated-on-GitHub profile shape: zero GitHub neighbors, active on forums
    expect(series[0].username == "alice" && series[0].github_degree == 0 &&
               series[0].forum_degree == 1,
           "isolated-on-GitHub ego row");
}

void criterion_11_end_to_end_determinism() {
    fs::path data = fs::path(AUTHORNET_DATA_DIR) / "synthetic";
    TempDir out("acc_e2e");

    // identical config both times: same output directory, snapshot between
    pipeline::RunConfig config;
    config.authors_path = (data / "authors.csv").string();
    config.repos_path = (data / "repos.jsonl").string();
    config.interactions_path = (data / "interactions.csv").string();
    config.forums_path = (data / "forums.csv").string();
    config.output_dir = out.file("bundle");

    auto timed_run = [&] {
        auto start = std::chrono::steady_clock::now();
        pipeline::run_pipeline(config);
        double elapsed = seconds_since(start);
        expect(elapsed < 10.0, "pipeline run under 10 s (took " + std::to_string(elapsed) + ")");
    };
    timed_run();
    fs::path snapshot = out.file("snapshot");
    fs::copy(config.output_dir, snapshot);
    timed_run();

    std::set<std::string> names;
    for (const auto& entry : fs::directory_iterator(config.output_dir))
        names.insert(entry.path().filename().string());
    std::set<std::string> names2;
    for (const auto& entry : fs::directory_iterator(snapshot))
        names2.insert(entry.path().filename().string());
    expect(names == names2, "bundles contain the same files");
    expect(names.size() > 20, "bundle is substantial");

    for (const std::string& name : names) {
        std::string a = testsupport::read_file(config.output_dir + "/" + name);
        std::string b = testsupport::read_file((snapshot / name).string());
        if (name == "manifest.json") {
            nlohmann::json ja = nlohmann::json::parse(a);
            nlohmann::json jb = nlohmann::json::parse(b);
            ja.erase("timing");
            jb.erase("timing");
            expect(ja.dump() == jb.dump(), "manifest identical outside timing");
        } else {
            expect(a == b, "byte-identical report: " + name);
        }
    }
}

void criterion_12_scale_invariance() {
    std::mt19937 rng(7300);
    graph::AuthorAuthorGraph g = random_weighted_graph(rng, 30);
    auto base = influence::hacker_score(g, 1e-9, 10000);

    graph::AuthorAuthorGraph scaled = g;
    for (auto& e : scaled.edges) e.weight *= 7.3;
    auto multiplied = influence::hacker_score(scaled, 1e-9, 10000);

    auto ranking = [](const std::vector<double>& s, const std::vector<std::string>& ids) {
        std::vector<std::size_t> order(s.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (s[x] != s[y]) return s[x] > s[y];
            return ids[x] < ids[y];
        });
        return order;
    };
    for (std::size_t i = 0; i < base.phs.size(); ++i) {
        expect_near(multiplied.phs[i], base.phs[i], 1e-9, "phs under x7.3");
        expect_near(multiplied.chs[i], base.chs[i], 1e-9, "chs under x7.3");
    }
    expect(ranking(base.phs, base.authors) == ranking(multiplied.phs, multiplied.authors),
           "phs ranking unchanged");
    expect(ranking(base.chs, base.authors) == ranking(multiplied.chs, multiplied.authors),
           "chs ranking unchanged");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "weight calibration from reference degrees", criterion_1_weight_calibration},
        {2, "two-node fixed points within 1e-9, <= 100 iterations, < 1 ms",
         criterion_2_fixed_points},
        {3, "iterative solver matches dense oracle on 50 random graphs (1e-6)",
         criterion_3_oracle_equivalence},
        {4, "score sums stay within 1e-9 of 1 after every iteration",
         criterion_4_normalization_invariant},
        {5, "bipartite communities: bicliques and oracle-checked bridge fixture",
         criterion_5_bipartite_communities},
        {6, "modularity score formula (0.666667, biclique = 1)", criterion_6_modularity_formula},
        {7, "SOP ratios, unit sums, dominant-keyword schema row", criterion_7_sop},
        {8, "reciprocity: exact fixture and [0,1] bounds on 100 corpora",
         criterion_8_reciprocity},
        {9, "ccdf monotonicity and cohort conservation on 100 corpora",
         criterion_9_ccdf_and_cohorts},
        {10, "cross-platform egonet degrees and username matching", criterion_10_cross_platform},
        {11, "end-to-end determinism on the bundled synthetic corpus",
         criterion_11_end_to_end_determinism},
        {12, "scale invariance of scores under weight scaling (x7.3)",
         criterion_12_scale_invariance},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.fn();
            std::printf("PASS %2d  %s\n", criterion.id, criterion.name);
        } catch (const std::exception& e) {
            std::printf("FAIL %2d  %s\n         %s\n", criterion.id, criterion.name, e.what());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
