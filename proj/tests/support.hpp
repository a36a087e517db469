#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "authornet/csv.hpp"
#include "authornet/ingest.hpp"
#include "authornet/model.hpp"

namespace testsupport {

namespace fs = std::filesystem;

/// Self-deleting scratch directory under the system temp root.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path_ = fs::temp_directory_path() /
                ("authornet_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Accumulates dataset rows and materializes them as input files, so every
/// test corpus goes through the production loader.
class FixtureBuilder {
public:
    void author(const std::string& id, const std::string& username) {
        authors_.push_back(authornet::csv::join({id, username}));
    }

    void repo(const std::string& id, const std::string& owner, const std::string& created_at = "",
              const std::string& title = "", const std::string& description = "",
              const std::string& readme = "") {
        nlohmann::json obj = {{"repo_id", id},           {"owner_id", owner},
                              {"created_at", created_at}, {"title", title},
                              {"description", description}, {"readme", readme}};
        repos_.push_back(obj.dump());
    }

    void interaction(const std::string& kind, const std::string& actor, const std::string& target,
                     const std::string& ts = "") {
        interactions_.push_back(authornet::csv::join({kind, actor, target, ts}));
    }

    void post(const std::string& forum, const std::string& thread, const std::string& post_id,
              const std::string& username, const std::string& content = "") {
        posts_.push_back(authornet::csv::join({forum, thread, post_id, username, content}));
    }

    void write(const TempDir& dir) const {
        write_file(dir.file("authors.csv"), join("author_id,username", authors_));
        write_file(dir.file("repos.jsonl"), join_bare(repos_));
        write_file(dir.file("interactions.csv"),
                   join("kind,actor_id,target_id,timestamp", interactions_));
        write_file(dir.file("forums.csv"),
                   join("forum_id,thread_id,post_id,username,content", posts_));
    }

    authornet::Corpus load(const TempDir& dir) const {
        write(dir);
        return authornet::ingest::load_dataset(dir.file("authors.csv"), dir.file("repos.jsonl"),
                                               dir.file("interactions.csv"));
    }

    authornet::ForumCorpus load_forums(const TempDir& dir) const {
        write(dir);
        return authornet::ingest::load_forums(dir.file("forums.csv"));
    }

    std::vector<std::string> authors_, repos_, interactions_, posts_;

private:
    static std::string join(const std::string& header, const std::vector<std::string>& rows) {
        std::string out = header + "\n";
        for (const auto& r : rows) out += r + "\n";
        return out;
    }
    static std::string join_bare(const std::vector<std::string>& rows) {
        std::string out;
        for (const auto& r : rows) out += r + "\n";
        return out;
    }
};

/// Deterministic integer in [0, n) from a raw engine draw.
inline std::size_t pick(std::mt19937& rng, std::size_t n) { return rng() % n; }

}  // namespace testsupport
