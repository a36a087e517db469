#pragma once

#include <set>
#include <string>
#include <vector>

#include "authornet/graph.hpp"
#include "authornet/model.hpp"

namespace authornet::crossplatform {

/// Lowercased, whitespace-trimmed form used for identity matching.
std::string normalize_username(std::string_view username);

struct Match {
    std::string username;                  // normalized form
    std::vector<std::string> author_ids;   // GitHub authors with this username
    std::set<std::string> forums;          // forums where it appears
};

/// Usernames present on both platforms after normalization, sorted.
std::vector<Match> match_usernames(const Corpus& corpus, const ForumCorpus& forums);

/// Distinct (forum, username) co-thread neighbors of a forum user. The ego
/// never appears in its own egonet; the same third-party name on two forums
/// counts once per forum.
std::set<std::pair<std::string, std::string>> forum_egonet(const std::string& username,
                                                           const ForumCorpus& forums);

/// A user's combined neighborhood across both platforms.
struct CrossPlatformEgonet {
    std::string username;  // normalized
    std::set<std::string> github_neighbors;  // union of AA in- and out-neighbors
    std::set<std::pair<std::string, std::string>> forum_neighbors;  // (forum, username)
    std::set<std::string> forums_active;
    std::size_t post_count = 0;
};

/// Builds the egonet of a username matched on both platforms; throws for
/// unmatched names.
CrossPlatformEgonet cross_egonet(const std::string& username,
                                 const graph::AuthorAuthorGraph& aa, const Corpus& corpus,
                                 const ForumCorpus& forums);

struct ScatterPoint {
    std::string username;
    std::size_t github_degree = 0;
    std::size_t forum_degree = 0;
};

/// Plot-ready (username, |github_neighbors|, |forum_neighbors|) rows,
/// sorted by username.
std::vector<ScatterPoint> scatter_series(const std::vector<Match>& matches,
                                         const graph::AuthorAuthorGraph& aa,
                                         const Corpus& corpus, const ForumCorpus& forums);

}  // namespace authornet::crossplatform
