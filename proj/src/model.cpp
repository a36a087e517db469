#include "authornet/model.hpp"

#include "authornet/errors.hpp"

namespace authornet {

std::string_view to_string(Kind k) {
    switch (k) {
        case Kind::create: return "create";
        case Kind::star: return "star";
        case Kind::watch: return "watch";
        case Kind::fork: return "fork";
        case Kind::comment: return "comment";
        case Kind::contribute: return "contribute";
        case Kind::follow: return "follow";
    }
    return "?";
}

std::optional<Kind> kind_from_string(std::string_view s) {
    for (Kind k : kAllKinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

const AuthorRef& Corpus::author(const std::string& id) const {
    auto it = author_index.find(id);
    if (it == author_index.end()) throw Error("unknown author: " + id);
    return authors[it->second];
}

const RepositoryRecord& Corpus::repo(const std::string& id) const {
    auto it = repo_index.find(id);
    if (it == repo_index.end()) throw Error("unknown repo: " + id);
    return repos[it->second];
}

const std::string& Corpus::owner_of(const std::string& repo_id) const {
    return repo(repo_id).owner_id;
}

ForumStats ForumCorpus::totals() const {
    ForumStats t;
    for (const auto& [forum, s] : per_forum) {
        t.users += s.users;
        t.threads += s.threads;
        t.posts += s.posts;
    }
    return t;
}

}  // namespace authornet
