#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "authornet/graph.hpp"
#include "authornet/influence.hpp"
#include "authornet/model.hpp"

namespace authornet::community {

/// One bipartite community: member sets, cohesiveness, leaders, and the
/// keyword profile. Communities partition the AR node set.
struct CommunityProfile {
    std::size_t id = 0;                // 1-based, assigned after size ordering
    std::set<std::string> authors;
    std::set<std::string> repos;
    std::size_t edge_count = 0;        // intra-community AR edges
    double modularity_score = 0.0;     // edge_count / (|authors| * |repos|)
    bool ms_undefined = false;         // one side empty; score reported as 0

    std::vector<std::string> producer_leaders;   // top 2 by PHS
    std::vector<std::string> connector_leaders;  // top 2 by CHS, deduped

    std::map<std::string, double> sop_malware;
    std::map<std::string, double> sop_platform;
    bool no_malware_keywords = false;
    bool no_platform_keywords = false;

    std::size_t size() const { return authors.size() + repos.size(); }
};

/// A partition of the AR node set (structure only), sorted by community
/// size descending. Greedy agglomerative maximization of bipartite
/// (Barber null model) modularity: start from singletons, repeatedly apply
/// the merge with the largest non-negative gain among connected pairs, stop
/// when none remains. Zero-gain merges are taken so complete bicliques end
/// up whole. Equal gains resolve to the lexicographically smallest
/// community-id pair. When `merge_gains` is given it receives the gain of
/// every applied merge, in order.
std::vector<CommunityProfile> detect_communities(const graph::AuthorRepoGraph& g,
                                                 std::vector<double>* merge_gains = nullptr);

/// Barber bipartite modularity of a full partition (each node mapped to a
/// community index). Exposed for the oracle tests.
double bipartite_modularity(const graph::AuthorRepoGraph& g,
                            const std::vector<int>& author_community,
                            const std::vector<int>& repo_community);

/// Intra-community edge density n_C(E) / (|A_C| * |R_C|); 0 with the
/// undefined flag when either side is empty.
double modularity_score(CommunityProfile& c, const graph::AuthorRepoGraph& g);

/// Fills producer/connector leaders (top 2 by PHS and CHS, deduplicated)
/// for communities with at least `min_size` authors; smaller communities
/// get none.
void community_leaders(CommunityProfile& c, const influence::HackerScoreTable& scores,
                       std::size_t min_size = 20);

/// Strength-of-presence per keyword set: the fraction of the community's
/// keyword-bearing repo counts attributable to each keyword, with S1 and
/// S2 normalized independently.
void sop_profile(CommunityProfile& c, const Corpus& corpus, const KeywordConfig& config);

/// Merged S1+S2 SOP map rescaled so the largest entry is 1.
std::map<std::string, double> wordcloud_weights(const CommunityProfile& c);

/// Highest-SOP keyword of a map (lexicographically smallest on ties).
/// Returns an empty string for an empty map.
std::string dominant_keyword(const std::map<std::string, double>& sop);

}  // namespace authornet::community
