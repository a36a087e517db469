#include "authornet/community.hpp"

#include <algorithm>
#include <cmath>

#include "authornet/errors.hpp"
#include "authornet/ingest.hpp"

namespace authornet::community {

namespace {

// Live state of one community during agglomeration.
struct Cluster {
    std::vector<std::uint32_t> authors;  // author node indices
    std::vector<std::uint32_t> repos;    // repo node indices
    double author_degree = 0.0;          // K_C
    double repo_degree = 0.0;            // D_C
    std::size_t intra_edges = 0;
    std::map<int, std::size_t> cross;    // neighbor community id -> edge count
};

double merge_gain(const Cluster& x, const Cluster& y, std::size_t cross_edges, double m) {
    return static_cast<double>(cross_edges) / m -
           (x.author_degree * y.repo_degree + y.author_degree * x.repo_degree) / (m * m);
}

}  // namespace

double bipartite_modularity(const graph::AuthorRepoGraph& g,
                            const std::vector<int>& author_community,
                            const std::vector<int>& repo_community) {
    const double m = static_cast<double>(g.edges.size());
    if (m == 0) throw Error("empty graph");

    std::map<int, double> k_sum, d_sum;
    for (const auto& e : g.edges) {
        k_sum[author_community[e.author]] += 1.0;
        d_sum[repo_community[e.repo]] += 1.0;
    }
    double q = 0.0;
    for (const auto& e : g.edges)
        if (author_community[e.author] == repo_community[e.repo]) q += 1.0 / m;
    for (const auto& [c, k] : k_sum) {
        auto it = d_sum.find(c);
        if (it != d_sum.end()) q -= k * it->second / (m * m);
    }
    return q;
}

std::vector<CommunityProfile> detect_communities(const graph::AuthorRepoGraph& g,
                                                 std::vector<double>* merge_gains) {
    const std::size_t n_authors = g.authors.size();
    const std::size_t n_nodes = n_authors + g.repos.size();
    if (n_nodes == 0 || g.edges.empty()) throw Error("empty graph");
    const double m = static_cast<double>(g.edges.size());

    // Singletons: authors take ids [0, n_authors), repos follow.
    std::map<int, Cluster> live;
    for (std::size_t a = 0; a < n_authors; ++a)
        live[static_cast<int>(a)].authors.push_back(static_cast<std::uint32_t>(a));
    for (std::size_t r = 0; r < g.repos.size(); ++r)
        live[static_cast<int>(n_authors + r)].repos.push_back(static_cast<std::uint32_t>(r));

    for (const auto& e : g.edges) {
        int ca = static_cast<int>(e.author);
        int cr = static_cast<int>(n_authors + e.repo);
        live[ca].author_degree += 1.0;
        live[cr].repo_degree += 1.0;
        live[ca].cross[cr]++;
        live[cr].cross[ca]++;
    }

    // Greedy agglomeration over connected pairs. Merges with strictly
    // positive gain come first by construction of the max; zero-gain merges
    // of connected pairs are also taken (they keep modularity unchanged and
    // complete bicliques into single communities). Ties resolve to the
    // lexicographically smallest id pair via the ascending scan.
    while (live.size() > 1) {
        double best_gain = -1.0;
        int best_x = -1, best_y = -1;
        for (const auto& [xid, x] : live) {
            for (const auto& [yid, cross_edges] : x.cross) {
                if (yid <= xid) continue;
                double gain = merge_gain(x, live.at(yid), cross_edges, m);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_x = xid;
                    best_y = yid;
                }
            }
        }
        if (best_x < 0 || best_gain < 0.0) break;
        if (merge_gains) merge_gains->push_back(best_gain);

        Cluster& x = live.at(best_x);
        Cluster y = std::move(live.at(best_y));
        live.erase(best_y);

        x.authors.insert(x.authors.end(), y.authors.begin(), y.authors.end());
        x.repos.insert(x.repos.end(), y.repos.begin(), y.repos.end());
        x.author_degree += y.author_degree;
        x.repo_degree += y.repo_degree;
        x.intra_edges += y.intra_edges + x.cross.at(best_y);
        x.cross.erase(best_y);
        for (const auto& [zid, cnt] : y.cross) {
            if (zid == best_x) continue;
            x.cross[zid] += cnt;
            Cluster& z = live.at(zid);
            z.cross.erase(best_y);
            z.cross[best_x] += cnt;
        }
    }

    std::vector<CommunityProfile> out;
    out.reserve(live.size());
    for (const auto& [cid, cluster] : live) {
        CommunityProfile c;
        for (std::uint32_t a : cluster.authors) c.authors.insert(g.authors[a]);
        for (std::uint32_t r : cluster.repos) c.repos.insert(g.repos[r]);
        c.edge_count = cluster.intra_edges;
        modularity_score(c, g);
        out.push_back(std::move(c));
    }

    auto min_member = [](const CommunityProfile& c) -> const std::string& {
        if (c.authors.empty()) return *c.repos.begin();
        if (c.repos.empty()) return *c.authors.begin();
        return std::min(*c.authors.begin(), *c.repos.begin());
    };
    std::sort(out.begin(), out.end(), [&](const CommunityProfile& a, const CommunityProfile& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return min_member(a) < min_member(b);
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i + 1;
    return out;
}

double modularity_score(CommunityProfile& c, const graph::AuthorRepoGraph& g) {
    if (c.authors.empty() || c.repos.empty()) {
        c.ms_undefined = true;
        c.modularity_score = 0.0;
        c.edge_count = 0;
        return 0.0;
    }
    std::size_t intra = 0;
    for (const auto& e : g.edges)
        if (c.authors.count(g.authors[e.author]) && c.repos.count(g.repos[e.repo])) ++intra;
    c.edge_count = intra;
    c.ms_undefined = false;
    c.modularity_score =
        static_cast<double>(intra) / (static_cast<double>(c.authors.size()) * c.repos.size());
    return c.modularity_score;
}

void community_leaders(CommunityProfile& c, const influence::HackerScoreTable& scores,
                       std::size_t min_size) {
    c.producer_leaders.clear();
    c.connector_leaders.clear();
    if (c.authors.size() < min_size) return;

    auto top_two = [&](const std::vector<double>& score) {
        std::vector<std::string> members(c.authors.begin(), c.authors.end());
        std::stable_sort(members.begin(), members.end(),
                         [&](const std::string& a, const std::string& b) {
                             double sa = score[scores.index_of(a)];
                             double sb = score[scores.index_of(b)];
                             if (sa != sb) return sa > sb;
                             return a < b;
                         });
        if (members.size() > 2) members.resize(2);
        return members;
    };

    c.producer_leaders = top_two(scores.phs);
    for (const std::string& id : top_two(scores.chs)) {
        if (std::find(c.producer_leaders.begin(), c.producer_leaders.end(), id) ==
            c.producer_leaders.end())
            c.connector_leaders.push_back(id);
    }
}

void sop_profile(CommunityProfile& c, const Corpus& corpus, const KeywordConfig& config) {
    std::map<std::string, std::size_t> counts;  // keyword -> repos containing it
    for (const std::string& repo_id : c.repos) {
        auto kws = ingest::extract_keyword_set(corpus.repo(repo_id), config);
        for (const std::string& kw : kws) counts[kw]++;
    }

    auto fill = [&](const std::vector<std::string>& keyword_set, std::map<std::string, double>& sop,
                    bool& empty_flag) {
        sop.clear();
        std::size_t total = 0;
        for (const std::string& kw : keyword_set) {
            auto it = counts.find(kw);
            if (it != counts.end()) total += it->second;
        }
        empty_flag = total == 0;
        if (empty_flag) return;
        for (const std::string& kw : keyword_set) {
            auto it = counts.find(kw);
            if (it != counts.end())
                sop[kw] = static_cast<double>(it->second) / static_cast<double>(total);
        }
    };
    fill(config.malware_types, c.sop_malware, c.no_malware_keywords);
    fill(config.platforms, c.sop_platform, c.no_platform_keywords);
}

std::map<std::string, double> wordcloud_weights(const CommunityProfile& c) {
    std::map<std::string, double> merged;
    for (const auto& [kw, v] : c.sop_malware) merged[kw] = v;
    for (const auto& [kw, v] : c.sop_platform) merged[kw] = v;
    if (merged.empty()) return merged;
    double max_v = 0.0;
    for (const auto& [kw, v] : merged) max_v = std::max(max_v, v);
    for (auto& [kw, v] : merged) v /= max_v;
    return merged;
}

std::string dominant_keyword(const std::map<std::string, double>& sop) {
    std::string best;
    double best_v = -1.0;
    for (const auto& [kw, v] : sop) {
        if (v > best_v) {
            best_v = v;
            best = kw;
        }
    }
    return best;
}

}  // namespace authornet::community
