#include "authornet/crossplatform.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "authornet/errors.hpp"

namespace authornet::crossplatform {

std::string normalize_username(std::string_view username) {
    std::size_t b = 0, e = username.size();
    while (b < e && std::isspace(static_cast<unsigned char>(username[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(username[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(username[i]))));
    return out;
}

std::vector<Match> match_usernames(const Corpus& corpus, const ForumCorpus& forums) {
    std::map<std::string, std::vector<std::string>> github;  // normalized -> author ids
    for (const AuthorRef& a : corpus.authors) {
        std::string norm = normalize_username(a.username);
        if (!norm.empty()) github[norm].push_back(a.author_id);
    }
    std::map<std::string, std::set<std::string>> forum_names;  // normalized -> forums
    for (const ForumPost& p : forums.posts) {
        std::string norm = normalize_username(p.username);
        if (!norm.empty()) forum_names[norm].insert(p.forum_id);
    }

    std::vector<Match> matches;
    for (const auto& [name, author_ids] : github) {
        auto it = forum_names.find(name);
        if (it == forum_names.end()) continue;
        matches.push_back({name, author_ids, it->second});
    }
    return matches;  // map order keeps usernames sorted
}

std::set<std::pair<std::string, std::string>> forum_egonet(const std::string& username,
                                                           const ForumCorpus& forums) {
    const std::string ego = normalize_username(username);
    // Threads the ego posted in, then everyone else posting there.
    std::set<std::pair<std::string, std::string>> ego_threads;  // (forum, thread)
    for (const ForumPost& p : forums.posts)
        if (normalize_username(p.username) == ego) ego_threads.emplace(p.forum_id, p.thread_id);

    std::set<std::pair<std::string, std::string>> neighbors;
    for (const ForumPost& p : forums.posts) {
        if (!ego_threads.count({p.forum_id, p.thread_id})) continue;
        std::string other = normalize_username(p.username);
        if (other == ego) continue;
        neighbors.emplace(p.forum_id, other);
    }
    return neighbors;
}

CrossPlatformEgonet cross_egonet(const std::string& username,
                                 const graph::AuthorAuthorGraph& aa, const Corpus& corpus,
                                 const ForumCorpus& forums) {
    CrossPlatformEgonet ego;
    ego.username = normalize_username(username);

    std::vector<std::uint32_t> ego_nodes;
    for (std::size_t i = 0; i < corpus.authors.size(); ++i)
        if (normalize_username(corpus.authors[i].username) == ego.username)
            ego_nodes.push_back(aa.node_index.at(corpus.authors[i].author_id));

    bool on_forums = false;
    for (const ForumPost& p : forums.posts) {
        if (normalize_username(p.username) != ego.username) continue;
        on_forums = true;
        ego.forums_active.insert(p.forum_id);
        ego.post_count++;
    }
    if (ego_nodes.empty() || !on_forums)
        throw Error("username not matched on both platforms: " + username);

    std::set<std::uint32_t> ego_set(ego_nodes.begin(), ego_nodes.end());
    for (const auto& e : aa.edges) {
        if (ego_set.count(e.src) && !ego_set.count(e.dst))
            ego.github_neighbors.insert(aa.nodes[e.dst]);
        if (ego_set.count(e.dst) && !ego_set.count(e.src))
            ego.github_neighbors.insert(aa.nodes[e.src]);
    }
    ego.forum_neighbors = forum_egonet(ego.username, forums);
    return ego;
}

std::vector<ScatterPoint> scatter_series(const std::vector<Match>& matches,
                                         const graph::AuthorAuthorGraph& aa,
                                         const Corpus& corpus, const ForumCorpus& forums) {
    std::vector<ScatterPoint> series;
    series.reserve(matches.size());
    for (const Match& match : matches) {
        CrossPlatformEgonet ego = cross_egonet(match.username, aa, corpus, forums);
        series.push_back({match.username, ego.github_neighbors.size(), ego.forum_neighbors.size()});
    }
    std::sort(series.begin(), series.end(),
              [](const ScatterPoint& a, const ScatterPoint& b) { return a.username < b.username; });
    return series;
}

}  // namespace authornet::crossplatform
