#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "authornet/timeparse.hpp"

namespace authornet {

/// All interaction kinds. `follow` targets an author; every other kind
/// targets a repository.
enum class Kind : std::uint8_t { create, star, watch, fork, comment, contribute, follow };

inline constexpr std::array<Kind, 7> kAllKinds = {Kind::create,  Kind::star,    Kind::watch,
                                                  Kind::fork,    Kind::comment, Kind::contribute,
                                                  Kind::follow};

std::string_view to_string(Kind k);
std::optional<Kind> kind_from_string(std::string_view s);

struct AuthorRef {
    std::string author_id;
    std::string username;
};

struct RepositoryRecord {
    std::string repo_id;
    std::string owner_id;
    std::optional<Timestamp> created_at;  // absent when the source field was empty
    std::string metadata_text;            // title + description + readme, space-joined
};

struct InteractionRecord {
    Kind kind = Kind::create;
    std::string actor_id;
    std::string target_id;  // repo_id, or author_id for follow
    std::optional<Timestamp> timestamp;
};

struct ForumPost {
    std::string forum_id;
    std::string thread_id;
    std::string post_id;
    std::string username;
    std::string content;
};

/// Keyword sets used to profile repositories: malware types (S1) and
/// target platforms (S2). Order is the config file order.
struct KeywordConfig {
    std::vector<std::string> malware_types;
    std::vector<std::string> platforms;
};

/// One rejected input row.
struct Reject {
    std::string file;
    std::size_t row = 0;
    std::string reason;
};

/// Validated, canonically ordered dataset. Immutable after loading.
struct Corpus {
    std::vector<AuthorRef> authors;               // sorted by author_id
    std::vector<RepositoryRecord> repos;          // sorted by repo_id
    std::vector<InteractionRecord> interactions;  // sorted by (kind, actor, target, timestamp)

    std::vector<Reject> rejects;
    std::size_t rows_accepted = 0;
    std::size_t rows_rejected = 0;

    std::unordered_map<std::string, std::uint32_t> author_index;  // author_id -> authors[]
    std::unordered_map<std::string, std::uint32_t> repo_index;    // repo_id -> repos[]

    bool has_author(const std::string& id) const { return author_index.count(id) != 0; }
    bool has_repo(const std::string& id) const { return repo_index.count(id) != 0; }
    const AuthorRef& author(const std::string& id) const;
    const RepositoryRecord& repo(const std::string& id) const;

    /// Owner author_id of a repo, by repo_id.
    const std::string& owner_of(const std::string& repo_id) const;
};

struct ForumStats {
    std::size_t users = 0;
    std::size_t threads = 0;
    std::size_t posts = 0;
};

/// Forum posts grouped by (forum_id, thread_id), canonically ordered.
struct ForumCorpus {
    std::vector<ForumPost> posts;  // sorted by (forum_id, thread_id, post_id)

    std::vector<Reject> rejects;
    std::size_t rows_accepted = 0;
    std::size_t rows_rejected = 0;

    std::map<std::string, ForumStats> per_forum;  // forum_id -> counts

    ForumStats totals() const;
};

}  // namespace authornet
