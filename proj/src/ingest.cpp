#include "authornet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "authornet/csv.hpp"
#include "authornet/errors.hpp"

namespace authornet::ingest {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    return in;
}

void expect_header(csv::Reader& reader, const std::vector<std::string>& expected,
                   const std::string& path) {
    csv::Record rec;
    if (!reader.next(rec) || rec.fields != expected)
        throw InputError("bad header in " + path + " (expected " + csv::join(expected) + ")");
}

bool blank(const csv::Record& rec) {
    return rec.fields.size() == 1 && rec.fields[0].empty();
}

std::vector<std::string> tokenize_lower(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::int64_t ts_key(const std::optional<Timestamp>& t) {
    // Missing timestamps order before any dated record.
    return t ? t->epoch_s : std::numeric_limits<std::int64_t>::min();
}

}  // namespace

Corpus load_dataset(const std::string& authors_path, const std::string& repos_path,
                    const std::string& interactions_path) {
    Corpus corpus;

    // Authors: CSV `author_id,username`.
    {
        auto in = open_or_throw(authors_path);
        csv::Reader reader(in);
        expect_header(reader, {"author_id", "username"}, authors_path);
        std::unordered_set<std::string> seen;
        csv::Record rec;
        while (reader.next(rec)) {
            if (blank(rec)) continue;
            auto reject = [&](const char* why) {
                corpus.rejects.push_back({authors_path, rec.line, why});
            };
            if (rec.fields.size() != 2) {
                reject("wrong field count");
                continue;
            }
            const std::string& id = rec.fields[0];
            const std::string& name = rec.fields[1];
            if (id.empty()) {
                reject("empty author_id");
                continue;
            }
            if (name.empty()) {
                reject("empty username");
                continue;
            }
            if (!seen.insert(id).second) {
                reject("duplicate author_id");
                continue;
            }
            corpus.authors.push_back({id, name});
        }
    }
    if (corpus.authors.empty()) throw InputError("empty author set: " + authors_path);

    std::sort(corpus.authors.begin(), corpus.authors.end(),
              [](const AuthorRef& a, const AuthorRef& b) { return a.author_id < b.author_id; });
    for (std::uint32_t i = 0; i < corpus.authors.size(); ++i)
        corpus.author_index[corpus.authors[i].author_id] = i;

    // Repositories: JSON lines.
    {
        auto in = open_or_throw(repos_path);
        std::string line;
        std::size_t lineno = 0;
        std::unordered_set<std::string> seen;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            auto reject = [&](const std::string& why) {
                corpus.rejects.push_back({repos_path, lineno, why});
            };
            nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
            if (!obj.is_object()) {
                reject("invalid JSON");
                continue;
            }
            RepositoryRecord repo;
            try {
                repo.repo_id = obj.at("repo_id").get<std::string>();
                repo.owner_id = obj.at("owner_id").get<std::string>();
                std::string created = obj.at("created_at").get<std::string>();
                std::string title = obj.value("title", std::string{});
                std::string desc = obj.value("description", std::string{});
                std::string readme = obj.value("readme", std::string{});
                repo.metadata_text = title + " " + desc + " " + readme;
                if (!created.empty()) {
                    auto ts = parse_iso8601(created);
                    if (!ts) {
                        reject("bad timestamp");
                        continue;
                    }
                    repo.created_at = *ts;
                }
            } catch (const nlohmann::json::exception&) {
                reject("missing field");
                continue;
            }
            if (repo.repo_id.empty()) {
                reject("empty repo_id");
                continue;
            }
            if (!corpus.has_author(repo.owner_id)) {
                reject("unknown owner");
                continue;
            }
            if (!seen.insert(repo.repo_id).second) {
                reject("duplicate repo_id");
                continue;
            }
            corpus.repos.push_back(std::move(repo));
        }
    }
    std::sort(corpus.repos.begin(), corpus.repos.end(),
              [](const RepositoryRecord& a, const RepositoryRecord& b) {
                  return a.repo_id < b.repo_id;
              });
    for (std::uint32_t i = 0; i < corpus.repos.size(); ++i)
        corpus.repo_index[corpus.repos[i].repo_id] = i;

    // Interactions: CSV `kind,actor_id,target_id,timestamp`.
    {
        auto in = open_or_throw(interactions_path);
        csv::Reader reader(in);
        expect_header(reader, {"kind", "actor_id", "target_id", "timestamp"}, interactions_path);
        csv::Record rec;
        while (reader.next(rec)) {
            if (blank(rec)) continue;
            auto reject = [&](const char* why) {
                corpus.rejects.push_back({interactions_path, rec.line, why});
            };
            if (rec.fields.size() != 4) {
                reject("wrong field count");
                continue;
            }
            auto kind = kind_from_string(rec.fields[0]);
            if (!kind) {
                reject("unknown kind");
                continue;
            }
            InteractionRecord it;
            it.kind = *kind;
            it.actor_id = rec.fields[1];
            it.target_id = rec.fields[2];
            if (!corpus.has_author(it.actor_id)) {
                reject("unknown actor");
                continue;
            }
            if (it.kind == Kind::follow) {
                if (it.target_id == it.actor_id) {
                    reject("self-follow");
                    continue;
                }
                if (!corpus.has_author(it.target_id)) {
                    reject("unknown author target");
                    continue;
                }
            } else if (!corpus.has_repo(it.target_id)) {
                reject("unknown repo");
                continue;
            }
            if (!rec.fields[3].empty()) {
                auto ts = parse_iso8601(rec.fields[3]);
                if (!ts) {
                    reject("bad timestamp");
                    continue;
                }
                it.timestamp = *ts;
            }
            corpus.interactions.push_back(std::move(it));
        }
    }
    std::sort(corpus.interactions.begin(), corpus.interactions.end(),
              [](const InteractionRecord& a, const InteractionRecord& b) {
                  using Key = std::tuple<Kind, const std::string&, const std::string&,
                                         std::int64_t>;
                  return Key(a.kind, a.actor_id, a.target_id, ts_key(a.timestamp)) <
                         Key(b.kind, b.actor_id, b.target_id, ts_key(b.timestamp));
              });

    std::sort(corpus.rejects.begin(), corpus.rejects.end(), [](const Reject& a, const Reject& b) {
        return std::tie(a.file, a.row) < std::tie(b.file, b.row);
    });
    corpus.rows_accepted =
        corpus.authors.size() + corpus.repos.size() + corpus.interactions.size();
    corpus.rows_rejected = corpus.rejects.size();
    return corpus;
}

ForumCorpus load_forums(const std::string& forums_path) {
    ForumCorpus fc;
    auto in = open_or_throw(forums_path);
    csv::Reader reader(in);
    expect_header(reader, {"forum_id", "thread_id", "post_id", "username", "content"},
                  forums_path);
    std::unordered_set<std::string> seen;  // forum\0thread\0post
    csv::Record rec;
    while (reader.next(rec)) {
        if (blank(rec)) continue;
        auto reject = [&](const char* why) { fc.rejects.push_back({forums_path, rec.line, why}); };
        if (rec.fields.size() != 5) {
            reject("wrong field count");
            continue;
        }
        ForumPost post{rec.fields[0], rec.fields[1], rec.fields[2], rec.fields[3], rec.fields[4]};
        if (post.forum_id.empty() || post.thread_id.empty() || post.post_id.empty()) {
            reject("missing field");
            continue;
        }
        std::string key = post.forum_id + '\0' + post.thread_id + '\0' + post.post_id;
        if (!seen.insert(key).second) {
            reject("duplicate post");
            continue;
        }
        fc.posts.push_back(std::move(post));
    }
    std::sort(fc.posts.begin(), fc.posts.end(), [](const ForumPost& a, const ForumPost& b) {
        return std::tie(a.forum_id, a.thread_id, a.post_id) <
               std::tie(b.forum_id, b.thread_id, b.post_id);
    });
    fc.rows_accepted = fc.posts.size();
    fc.rows_rejected = fc.rejects.size();

    std::map<std::string, std::unordered_set<std::string>> users, threads;
    for (const ForumPost& p : fc.posts) {
        users[p.forum_id].insert(p.username);
        threads[p.forum_id].insert(p.thread_id);
        fc.per_forum[p.forum_id].posts++;
    }
    for (auto& [forum, s] : fc.per_forum) {
        s.users = users[forum].size();
        s.threads = threads[forum].size();
    }
    return fc;
}

namespace {

void validate_keyword_set(const std::vector<std::string>& set, const char* name) {
    if (set.empty()) throw ConfigError(std::string("keyword set '") + name + "' is empty");
    std::unordered_set<std::string> seen;
    for (const std::string& kw : set) {
        bool all_space = true;
        for (char c : kw) {
            if (std::isupper(static_cast<unsigned char>(c)))
                throw ConfigError("keyword not lowercase: " + kw);
            if (!std::isspace(static_cast<unsigned char>(c))) all_space = false;
        }
        if (kw.empty() || all_space)
            throw ConfigError(std::string("whitespace-only keyword in '") + name + "'");
        if (!seen.insert(kw).second) throw ConfigError("duplicate keyword: " + kw);
    }
}

void validate_config(const KeywordConfig& config) {
    validate_keyword_set(config.malware_types, "malware_types");
    validate_keyword_set(config.platforms, "platforms");
    std::unordered_set<std::string> s1(config.malware_types.begin(), config.malware_types.end());
    for (const std::string& kw : config.platforms)
        if (s1.count(kw)) throw ConfigError("keyword in both sets: " + kw);
}

}  // namespace

KeywordConfig load_keyword_config(const std::string& path) {
    auto in = open_or_throw(path);
    nlohmann::json obj = nlohmann::json::parse(in, nullptr, false);
    if (!obj.is_object() || !obj.contains("malware_types") || !obj.contains("platforms"))
        throw ConfigError("keyword config must be {\"malware_types\":[...],\"platforms\":[...]}: " +
                          path);
    KeywordConfig config;
    try {
        config.malware_types = obj.at("malware_types").get<std::vector<std::string>>();
        config.platforms = obj.at("platforms").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad keyword config " + path + ": " + e.what());
    }
    validate_config(config);
    return config;
}

KeywordConfig default_keyword_config() {
    KeywordConfig config;
    config.malware_types = {"keylogger", "virus",  "ransomware", "spyware",
                            "trojan",    "botnet", "backdoor"};
    config.platforms = {"linux", "windows", "mac", "android"};
    validate_config(config);
    return config;
}

std::set<std::string> extract_keyword_set(const RepositoryRecord& repo,
                                          const KeywordConfig& config) {
    std::vector<std::string> tokens = tokenize_lower(repo.metadata_text);
    std::set<std::string> found;
    auto match = [&](const std::string& keyword) {
        std::vector<std::string> kw = tokenize_lower(keyword);
        if (kw.empty() || kw.size() > tokens.size()) return false;
        for (std::size_t i = 0; i + kw.size() <= tokens.size(); ++i) {
            if (std::equal(kw.begin(), kw.end(), tokens.begin() + i)) return true;
        }
        return false;
    };
    for (const std::string& kw : config.malware_types)
        if (match(kw)) found.insert(kw);
    for (const std::string& kw : config.platforms)
        if (match(kw)) found.insert(kw);
    return found;
}

void write_rejects(const std::string& path, const std::vector<Reject>& corpus_rejects,
                   const std::vector<Reject>& forum_rejects) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << "file,row,reason\n";
    auto emit = [&](const Reject& r) {
        out << csv::join({r.file, std::to_string(r.row), r.reason}) << "\n";
    };
    for (const Reject& r : corpus_rejects) emit(r);
    for (const Reject& r : forum_rejects) emit(r);
}

std::string serialize(const Corpus& corpus) {
    std::ostringstream out;
    for (const AuthorRef& a : corpus.authors) out << "A " << a.author_id << " " << a.username << "\n";
    for (const RepositoryRecord& r : corpus.repos) {
        out << "R " << r.repo_id << " " << r.owner_id << " "
            << (r.created_at ? std::to_string(r.created_at->epoch_s) : "-") << " "
            << r.metadata_text << "\n";
    }
    for (const InteractionRecord& it : corpus.interactions) {
        out << "I " << to_string(it.kind) << " " << it.actor_id << " " << it.target_id << " "
            << (it.timestamp ? std::to_string(it.timestamp->epoch_s) : "-") << "\n";
    }
    return out.str();
}

}  // namespace authornet::ingest
