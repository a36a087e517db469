// Writes the bundled synthetic corpus: 50 authors, ~85 repositories, a few
// hundred interactions, and four small forums. Fully deterministic (fixed
// seed, no library distributions), so regenerating reproduces the committed
// files byte for byte.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "authornet/csv.hpp"

namespace fs = std::filesystem;

namespace {

std::mt19937 rng(42);

std::size_t pick(std::size_t n) { return rng() % n; }

// Product of two uniforms: skews toward low indices.
std::size_t pick_skewed(std::size_t n) { return (pick(n) * pick(n)) / n; }

// Cube of a uniform: concentrates hard on the first few indices, so score
// curves develop a real elbow.
std::size_t pick_star(std::size_t n) { return (pick(n) * pick(n) * pick(n)) / (n * n); }

const std::vector<std::string> kHandles = {"nightowl", "bytewise",  "zer0cool",
                                           "packet_rat", "quietstorm", "hexhound",
                                           "lockpick",  "smokescreen"};

const std::vector<std::string> kTypes = {"keylogger", "virus",  "ransomware", "spyware",
                                         "trojan",    "botnet", "backdoor"};
const std::vector<std::string> kPlatforms = {"linux", "windows", "mac", "android"};
const std::vector<std::string> kFiller = {"tool",   "builder", "poc",     "framework",
                                          "script", "demo",    "crypter", "loader"};

std::string repo_text() {
    std::string text = kTypes[pick(kTypes.size())];
    text += " " + kFiller[pick(kFiller.size())];
    if (pick(100) < 70) text += " for " + kPlatforms[pick(kPlatforms.size())];
    if (pick(100) < 30) text += " " + kTypes[pick(kTypes.size())];
    return text;
}

std::string random_date(bool with_time = true) {
    int year = 2012 + static_cast<int>(pick(8));
    int month = 1 + static_cast<int>(pick(12));
    int day = 1 + static_cast<int>(pick(28));
    char buf[40];
    if (with_time)
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", year, month, day,
                      static_cast<int>(pick(24)), static_cast<int>(pick(60)),
                      static_cast<int>(pick(60)));
    else
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

void write(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "cannot write %s\n", path.string().c_str());
        std::exit(1);
    }
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate the bundled synthetic corpus"};
    std::string out_dir = "data/synthetic";
    app.add_option("--out", out_dir, "output directory");
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(out_dir);
    fs::path dir(out_dir);

    const std::size_t n_authors = 50;
    const std::size_t n_repos = 85;

    std::vector<std::string> author_ids, usernames;
    std::string authors_csv = "author_id,username\n";
    for (std::size_t i = 0; i < n_authors; ++i) {
        char id[16];
        std::snprintf(id, sizeof(id), "a%02zu", i);
        author_ids.push_back(id);
        std::string name =
            i < kHandles.size() ? kHandles[i] : "dev_" + std::string(id + 1);
        usernames.push_back(name);
        authors_csv += authornet::csv::join({id, name}) + "\n";
    }
    write(dir / "authors.csv", authors_csv);

    std::vector<std::string> repo_ids;
    std::string repos_jsonl;
    for (std::size_t i = 0; i < n_repos; ++i) {
        char id[16];
        std::snprintf(id, sizeof(id), "r%03zu", i);
        repo_ids.push_back(id);
        // the first six repos belong to the star producers a00..a05; the
        // rest stay off the stars so their balanced traffic is undisturbed
        std::string owner =
            i < 6 ? author_ids[i] : author_ids[6 + pick_skewed(n_authors - 6)];
        std::string created = pick(100) < 90 ? random_date() : "";
        std::string title = repo_text();
        std::string desc = pick(100) < 60 ? repo_text() : "";
        std::string readme = pick(100) < 40 ? repo_text() : "";
        repos_jsonl += "{\"repo_id\":\"" + std::string(id) + "\",\"owner_id\":\"" + owner +
                       "\",\"created_at\":\"" + created + "\",\"title\":\"" + title +
                       "\",\"description\":\"" + desc + "\",\"readme\":\"" + readme + "\"}\n";
    }
    write(dir / "repos.jsonl", repos_jsonl);

    std::string interactions_csv = "kind,actor_id,target_id,timestamp\n";

    // Star traffic. Producer stars a00..a05 (repos r000..r005) each receive
    // ten events of each kind from a rotating mid-tier pool, so the
    // producer score curve gets a flat six-author top followed by a cliff.
    for (int j = 0; j < 240; ++j) {
        static const char* star_kinds[] = {"follow", "fork", "comment", "star"};
        std::string kind = star_kinds[j % 4];
        int target_idx = (j / 4) % 6;
        std::string actor = author_ids[8 + (j % 31)];
        std::string target =
            kind == std::string("follow") ? author_ids[target_idx] : repo_ids[target_idx];
        interactions_csv += authornet::csv::join({kind, actor, target, random_date()}) + "\n";
    }
    // Heavy connectors: a40..a44 plus the crossover a05. Each engages five
    // of the six star repos (one skipped, rotated so every star hears from
    // exactly five connectors; a05 skips its own repo) plus a small tail
    // slice. This gives the connector curve a flat six-author top too.
    {
        const int connectors[] = {40, 41, 42, 43, 44, 5};
        for (int i = 0; i < 6; ++i) {
            std::string actor = author_ids[connectors[i]];
            int skip = i == 5 ? 5 : i;
            for (int s = 0; s < 6; ++s) {
                if (s == skip) continue;
                interactions_csv +=
                    authornet::csv::join({"comment", actor, repo_ids[s], random_date()}) + "\n";
                interactions_csv +=
                    authornet::csv::join({"contribute", actor, repo_ids[s], random_date()}) +
                    "\n";
            }
            for (int k = 0; k < 3; ++k) {
                std::string target = repo_ids[6 + ((i * 13 + k) % 79)];
                interactions_csv +=
                    authornet::csv::join({"comment", actor, target, random_date()}) + "\n";
            }
        }
    }

    // Irregular background over the non-star population.
    const char* kinds[] = {"follow", "fork", "star", "watch", "comment", "contribute"};
    const int kind_weights[] = {18, 22, 20, 14, 16, 10};
    for (int i = 0; i < 320; ++i) {
        int roll = static_cast<int>(pick(100));
        int kind_idx = 0;
        for (int acc = 0; kind_idx < 6; ++kind_idx) {
            acc += kind_weights[kind_idx];
            if (roll < acc) break;
        }
        if (kind_idx == 6) kind_idx = 5;
        std::string kind = kinds[kind_idx];
        // background actors sit strictly between the star sets
        std::string actor = author_ids[6 + pick(34)];
        std::string target;
        if (kind == "follow") {
            target = author_ids[6 + pick_skewed(n_authors - 6)];
            if (target == actor) continue;
        } else {
            target = repo_ids[6 + pick_skewed(n_repos - 6)];
        }
        std::string ts = pick(100) < 80 ? random_date() : "";
        interactions_csv += authornet::csv::join({kind, actor, target, ts}) + "\n";
    }
    // dirty rows the loader must reject
    interactions_csv += "follow,a03,a03,\n";
    interactions_csv += "fork,ghost,r001,\n";
    interactions_csv += "star,a01,r000,2015-19-99\n";
    interactions_csv += "shout,a01,r000,\n";
    write(dir / "interactions.csv", interactions_csv);

    const std::vector<std::string> forums = {"offensive_comm", "ethical_hacker",
                                             "hack_this_site", "wilders_security"};
    std::string forums_csv = "forum_id,thread_id,post_id,username,content\n";
    int post_id = 0;
    for (const std::string& forum : forums) {
        std::size_t n_threads = 5 + pick(5);
        for (std::size_t t = 0; t < n_threads; ++t) {
            std::size_t n_posts = 2 + pick(6);
            for (std::size_t p = 0; p < n_posts; ++p) {
                std::string user = pick(100) < 35
                                       ? kHandles[pick(kHandles.size())]
                                       : "lurker_" + std::to_string(pick(25));
                std::string content = repo_text();
                forums_csv += authornet::csv::join({forum, "t" + std::to_string(t),
                                                    "p" + std::to_string(post_id++), user,
                                                    content}) +
                              "\n";
            }
        }
    }
    write(dir / "forums.csv", forums_csv);

    std::printf("wrote %s: %zu authors, %zu repos, %d posts\n", out_dir.c_str(), n_authors,
                n_repos, post_id);
    return 0;
}
