#include "authornet/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "authornet/community.hpp"
#include "authornet/crossplatform.hpp"
#include "authornet/csv.hpp"
#include "authornet/errors.hpp"
#include "authornet/hash.hpp"
#include "authornet/influence.hpp"
#include "authornet/ingest.hpp"
#include "authornet/kernels.hpp"
#include "authornet/stats.hpp"

namespace fs = std::filesystem;

namespace authornet::pipeline {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void RunConfig::validate() const {
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
    if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (min_community_size < 1) throw ConfigError("min_community_size must be >= 1");
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (phs_knee && !(*phs_knee > 0.0)) throw ConfigError("phs_knee must be > 0");
    if (chs_knee && !(*chs_knee > 0.0)) throw ConfigError("chs_knee must be > 0");
    if (authors_path.empty() || repos_path.empty() || interactions_path.empty() ||
        forums_path.empty())
        throw ConfigError("authors, repos, interactions, and forums paths are required");
    if (output_dir.empty()) throw ConfigError("output_dir is required");
}

void RunConfig::apply_json(const nlohmann::json& obj) {
    if (!obj.is_object()) throw ConfigError("config must be a JSON object");
    auto get_str = [&](const char* key, std::string& out) {
        if (obj.contains(key)) out = obj.at(key).get<std::string>();
    };
    try {
        get_str("authors", authors_path);
        get_str("repos", repos_path);
        get_str("interactions", interactions_path);
        get_str("forums", forums_path);
        get_str("keywords", keywords_path);
        get_str("output_dir", output_dir);
        if (obj.contains("weight_mode")) {
            std::string mode = obj.at("weight_mode").get<std::string>();
            if (mode == "exact")
                weight_mode = graph::WeightMode::exact;
            else if (mode == "paper-rounded")
                weight_mode = graph::WeightMode::paper_rounded;
            else
                throw ConfigError("weight_mode must be 'exact' or 'paper-rounded'");
        }
        if (obj.contains("tolerance")) tolerance = obj.at("tolerance").get<double>();
        if (obj.contains("max_iter")) max_iter = obj.at("max_iter").get<std::size_t>();
        if (obj.contains("phs_knee") && !obj.at("phs_knee").is_null())
            phs_knee = obj.at("phs_knee").get<double>();
        if (obj.contains("chs_knee") && !obj.at("chs_knee").is_null())
            chs_knee = obj.at("chs_knee").get<double>();
        if (obj.contains("min_community_size"))
            min_community_size = obj.at("min_community_size").get<std::size_t>();
        if (obj.contains("threads")) threads = obj.at("threads").get<unsigned>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json obj = nlohmann::json::parse(in, nullptr, false);
    if (obj.is_discarded()) throw ConfigError("config file is not valid JSON: " + path);
    RunConfig config;
    config.apply_json(obj);
    return config;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json obj;
    obj["authors"] = authors_path;
    obj["repos"] = repos_path;
    obj["interactions"] = interactions_path;
    obj["forums"] = forums_path;
    obj["keywords"] = keywords_path;
    obj["output_dir"] = output_dir;
    obj["weight_mode"] = std::string(graph::to_string(weight_mode));
    obj["tolerance"] = tolerance;
    obj["max_iter"] = max_iter;
    obj["phs_knee"] = phs_knee ? nlohmann::json(*phs_knee) : nlohmann::json(nullptr);
    obj["chs_knee"] = chs_knee ? nlohmann::json(*chs_knee) : nlohmann::json(nullptr);
    obj["min_community_size"] = min_community_size;
    obj["threads"] = threads;
    return obj;
}

namespace {

std::string utc_now_iso() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string sanitize_filename(std::string_view name) {
    std::string out;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                  c == '.';
        out.push_back(ok ? c : '_');
    }
    if (out.empty()) out = "_";
    return out;
}

// Collects report files, digests them, and renames everything written so
// far to *.partial when a stage dies.
class Bundle {
public:
    explicit Bundle(fs::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw InputError("cannot create output directory: " + dir_.string());
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw InputError("cannot write report file: " + (dir_ / name).string());
        out << content;
        out.close();
        digests_[name] = digest_string(content);
    }

    void mark_partial() {
        std::error_code ec;
        for (const auto& [name, digest] : digests_)
            fs::rename(dir_ / name, dir_ / (name + ".partial"), ec);
    }

    const std::map<std::string, std::string>& digests() const { return digests_; }
    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
    std::map<std::string, std::string> digests_;
};

std::string scores_csv(const influence::HackerScoreTable& table,
                       const influence::RegionClassification& rc, bool hig_only) {
    std::ostringstream out;
    out << "author,phs,chs,region\n";
    for (std::size_t i = 0; i < table.authors.size(); ++i) {
        if (hig_only && rc.region[i] == influence::Region::D) continue;
        out << csv::join({table.authors[i], format_double(table.phs[i]),
                          format_double(table.chs[i]),
                          std::string(influence::to_string(rc.region[i]))})
            << "\n";
    }
    return out.str();
}

}  // namespace

nlohmann::json run_pipeline(const RunConfig& config) {
    config.validate();

    nlohmann::json manifest;
    manifest["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    manifest["config"] = config.to_json();
    nlohmann::json stage_ms = nlohmann::json::object();

    Bundle bundle{fs::path(config.output_dir)};

    std::string current_stage = "ingest";
    auto stage_clock = std::chrono::steady_clock::now();
    auto finish_stage = [&](const std::string& next) {
        auto now = std::chrono::steady_clock::now();
        stage_ms[current_stage] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - stage_clock).count();
        stage_clock = now;
        current_stage = next;
    };

    try {
        // ingest
        Corpus corpus = ingest::load_dataset(config.authors_path, config.repos_path,
                                             config.interactions_path);
        ForumCorpus forums = ingest::load_forums(config.forums_path);
        KeywordConfig keywords = config.keywords_path.empty()
                                     ? ingest::default_keyword_config()
                                     : ingest::load_keyword_config(config.keywords_path);
        {
            std::ostringstream out;
            out << "file,row,reason\n";
            for (const Reject& r : corpus.rejects)
                out << csv::join({r.file, std::to_string(r.row), r.reason}) << "\n";
            for (const Reject& r : forums.rejects)
                out << csv::join({r.file, std::to_string(r.row), r.reason}) << "\n";
            bundle.write("rejects.csv", out.str());
        }
        manifest["inputs"] = {
            {"authors", {{"path", config.authors_path}, {"digest", file_digest(config.authors_path)}}},
            {"repos", {{"path", config.repos_path}, {"digest", file_digest(config.repos_path)}}},
            {"interactions",
             {{"path", config.interactions_path}, {"digest", file_digest(config.interactions_path)}}},
            {"forums", {{"path", config.forums_path}, {"digest", file_digest(config.forums_path)}}}};
        if (!config.keywords_path.empty())
            manifest["inputs"]["keywords"] = {{"path", config.keywords_path},
                                              {"digest", file_digest(config.keywords_path)}};
        manifest["stages"]["ingest"] = {
            {"authors", corpus.authors.size()},
            {"repos", corpus.repos.size()},
            {"interactions", corpus.interactions.size()},
            {"forum_posts", forums.posts.size()},
            {"rows_accepted", corpus.rows_accepted + forums.rows_accepted},
            {"rows_rejected", corpus.rows_rejected + forums.rows_rejected}};
        finish_stage("graphs");

        // graphs
        graph::AuthorAuthorGraph aa = graph::build_aa_graph(corpus);
        graph::EdgeWeightCalibration calib = graph::calibrate_weights(aa, config.weight_mode);
        aa = graph::apply_weights(aa, calib);
        graph::AuthorRepoGraph ar = graph::build_ar_graph(corpus);
        graph::GraphExport aa_export = graph::render_aa_export(aa);
        graph::GraphExport ar_export = graph::render_ar_export(ar);
        bundle.write("aa_edges.jsonl", aa_export.edges);
        bundle.write("aa_nodes.jsonl", aa_export.nodes);
        bundle.write("ar_edges.jsonl", ar_export.edges);
        bundle.write("ar_nodes.jsonl", ar_export.nodes);
        nlohmann::json avg_degree, weight_json;
        for (graph::AaLabel label : graph::kAaLabels) {
            avg_degree[std::string(graph::to_string(label))] = calib.avg_degree.at(label);
            weight_json[std::string(graph::to_string(label))] = calib.weights.at(label);
        }
        manifest["stages"]["graphs"] = {{"aa_nodes", aa.nodes.size()},
                                        {"aa_edges", aa.edges.size()},
                                        {"ar_authors", ar.authors.size()},
                                        {"ar_repos", ar.repos.size()},
                                        {"ar_edges", ar.edges.size()}};
        finish_stage("influence");

        // influence
        influence::HackerScoreTable table =
            influence::hacker_score(aa, config.tolerance, config.max_iter, config.threads);
        std::vector<double> phs_sorted = table.phs;
        std::vector<double> chs_sorted = table.chs;
        std::sort(phs_sorted.rbegin(), phs_sorted.rend());
        std::sort(chs_sorted.rbegin(), chs_sorted.rend());
        bool phs_weak = false, chs_weak = false;
        double phs_knee, chs_knee;
        if (config.phs_knee) {
            phs_knee = *config.phs_knee;
        } else {
            influence::KneeResult knee = influence::detect_knee(phs_sorted);
            phs_knee = knee.value;
            phs_weak = knee.weak;
        }
        if (config.chs_knee) {
            chs_knee = *config.chs_knee;
        } else {
            influence::KneeResult knee = influence::detect_knee(chs_sorted);
            chs_knee = knee.value;
            chs_weak = knee.weak;
        }
        influence::RegionClassification rc =
            influence::classify_regions(table, phs_knee, chs_knee);
        bundle.write("scores.csv", scores_csv(table, rc, /*hig_only=*/false));
        bundle.write("hig.csv", scores_csv(table, rc, /*hig_only=*/true));
        manifest["stages"]["influence"] = {{"iterations", table.iterations},
                                           {"converged", table.converged},
                                           {"hig_size", rc.hig.size()}};
        manifest["decisions"] = {
            {"weight_mode", std::string(graph::to_string(config.weight_mode))},
            {"avg_degree", avg_degree},
            {"weights", weight_json},
            {"avg_degree_definition", "label edge count / node count"},
            {"phs_knee", phs_knee},
            {"chs_knee", chs_knee},
            {"phs_knee_weak", phs_weak},
            {"chs_knee_weak", chs_weak},
            {"knee_source", config.phs_knee || config.chs_knee ? "override" : "detected"},
            {"github_egonet", "union of in- and out-neighbors over all labels"},
            {"modularity_null_model", "barber bipartite"},
            {"kernels", kernels::active().name},
            {"threads", config.threads}};
        finish_stage("communities");

        // communities
        std::vector<community::CommunityProfile> communities = community::detect_communities(ar);
        for (auto& c : communities) {
            community::community_leaders(c, table, config.min_community_size);
            community::sop_profile(c, corpus, keywords);
        }
        {
            std::ostringstream out;
            out << "id,n_authors,n_repos,ms,dominant_platform,platform_sop,dominant_type,"
                   "type_sop\n";
            for (const auto& c : communities) {
                std::string dom_platform = community::dominant_keyword(c.sop_platform);
                std::string dom_type = community::dominant_keyword(c.sop_malware);
                out << csv::join(
                           {std::to_string(c.id), std::to_string(c.authors.size()),
                            std::to_string(c.repos.size()), format_double(c.modularity_score),
                            dom_platform,
                            dom_platform.empty() ? ""
                                                 : format_double(c.sop_platform.at(dom_platform)),
                            dom_type,
                            dom_type.empty() ? "" : format_double(c.sop_malware.at(dom_type))})
                    << "\n";
            }
            bundle.write("communities.csv", out.str());
        }
        {
            std::ostringstream out;
            out << "node,side,community_id\n";
            std::map<std::pair<std::string, std::string>, std::size_t> rows;
            for (const auto& c : communities) {
                for (const std::string& a : c.authors) rows[{std::string("author"), a}] = c.id;
                for (const std::string& r : c.repos) rows[{std::string("repo"), r}] = c.id;
            }
            for (const auto& [key, id] : rows)
                out << csv::join({key.second, key.first, std::to_string(id)}) << "\n";
            bundle.write("membership.csv", out.str());
        }
        {
            std::ostringstream out;
            out << "community_id,role,author_id\n";
            for (const auto& c : communities) {
                for (const std::string& a : c.producer_leaders)
                    out << csv::join({std::to_string(c.id), "producer", a}) << "\n";
                for (const std::string& a : c.connector_leaders)
                    out << csv::join({std::to_string(c.id), "connector", a}) << "\n";
            }
            bundle.write("leaders.csv", out.str());
        }
        for (const auto& c : communities) {
            nlohmann::json cloud = nlohmann::json::object();
            for (const auto& [kw, w] : community::wordcloud_weights(c)) cloud[kw] = w;
            bundle.write("wordcloud_" + std::to_string(c.id) + ".json", cloud.dump(2) + "\n");
        }
        manifest["stages"]["communities"] = {{"count", communities.size()}};
        {
            // size-curve knee (communities are already size-sorted); skipped
            // when the curve has too few distinct sizes
            std::vector<double> sizes;
            sizes.reserve(communities.size());
            for (const auto& c : communities) sizes.push_back(static_cast<double>(c.size()));
            try {
                influence::KneeResult knee = influence::detect_knee(sizes);
                manifest["stages"]["communities"]["size_knee"] = knee.value;
                manifest["stages"]["communities"]["size_knee_weak"] = knee.weak;
            } catch (const Error&) {
            }
        }
        finish_stage("stats");

        // stats
        for (stats::CcdfMetric metric :
             {stats::CcdfMetric::repos_created, stats::CcdfMetric::followers,
              stats::CcdfMetric::total_forks_received}) {
            stats::CcdfSeries series = stats::ccdf(metric, corpus);
            std::ostringstream out;
            out << "value,fraction\n";
            for (const auto& [x, p] : series.points)
                out << format_double(x) << "," << format_double(p) << "\n";
            bundle.write("ccdf_" + std::string(stats::to_string(metric)) + ".csv", out.str());
        }
        {
            stats::ForkStats fs = stats::fork_stats(corpus);
            nlohmann::json obj = {{"mean_forks_per_repo", fs.mean_forks_per_repo},
                                  {"fraction_forked_at_least_once", fs.fraction_forked_at_least_once},
                                  {"total_fork_events", fs.total_fork_events}};
            bundle.write("fork_stats.json", obj.dump(2) + "\n");
        }
        {
            stats::YearlyCohorts yc = stats::yearly_cohorts(corpus);
            std::ostringstream out;
            out << "year,new_authors,new_repos\n";
            for (const auto& [year, counts] : yc.by_year)
                out << year << "," << counts.new_authors << "," << counts.new_repos << "\n";
            out << "undated," << yc.undated_authors << "," << yc.undated_repos << "\n";
            bundle.write("cohorts.csv", out.str());
        }
        {
            stats::ReciprocityReport report = stats::reciprocity(corpus);
            std::ostringstream out;
            out << "relationship,pair_count,mutual_count,ri\n";
            for (const auto& [kind, entry] : report.by_kind)
                out << csv::join({std::string(to_string(kind)), std::to_string(entry.pair_count),
                                  std::to_string(entry.mutual_count),
                                  entry.ri ? format_double(*entry.ri) : "n/a"})
                    << "\n";
            bundle.write("reciprocity.csv", out.str());
        }
        finish_stage("crossplatform");

        // crossplatform
        std::vector<crossplatform::Match> matches = crossplatform::match_usernames(corpus, forums);
        {
            std::ostringstream out;
            out << "username,author_ids,forums\n";
            for (const auto& m : matches) {
                std::string ids, fsv;
                for (const std::string& id : m.author_ids) ids += (ids.empty() ? "" : ";") + id;
                for (const std::string& f : m.forums) fsv += (fsv.empty() ? "" : ";") + f;
                out << csv::join({m.username, ids, fsv}) << "\n";
            }
            bundle.write("matches.csv", out.str());
        }
        std::vector<crossplatform::ScatterPoint> series =
            crossplatform::scatter_series(matches, aa, corpus, forums);
        {
            std::ostringstream out;
            out << "username,github_degree,forum_degree\n";
            for (const auto& p : series)
                out << csv::join({p.username, std::to_string(p.github_degree),
                                  std::to_string(p.forum_degree)})
                    << "\n";
            bundle.write("scatter.csv", out.str());
        }
        for (const auto& m : matches) {
            crossplatform::CrossPlatformEgonet ego =
                crossplatform::cross_egonet(m.username, aa, corpus, forums);
            nlohmann::json obj;
            obj["username"] = ego.username;
            obj["github_neighbors"] = ego.github_neighbors;
            obj["forums_active"] = ego.forums_active;
            obj["post_count"] = ego.post_count;
            nlohmann::json fn = nlohmann::json::array();
            for (const auto& [forum, user] : ego.forum_neighbors)
                fn.push_back({{"forum", forum}, {"username", user}});
            obj["forum_neighbors"] = fn;
            bundle.write("egonet_" + sanitize_filename(m.username) + ".json", obj.dump(2) + "\n");
        }
        manifest["stages"]["crossplatform"] = {{"matches", matches.size()}};
        finish_stage("manifest");
    } catch (const std::exception& e) {
        bundle.mark_partial();
        // Config and input problems keep their own exit-code category;
        // everything else becomes a stage-tagged failure.
        if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const InputError*>(&e) ||
            dynamic_cast<const StageError*>(&e))
            throw;
        throw StageError(current_stage, e.what());
    }

    nlohmann::json reports = nlohmann::json::object();
    for (const auto& [name, digest] : bundle.digests()) reports[name] = digest;
    manifest["reports"] = reports;
    manifest["timing"] = {{"generated_at", utc_now_iso()}, {"stage_ms", stage_ms}};

    std::ofstream out(bundle.dir() / "manifest.json", std::ios::binary);
    if (!out) throw InputError("cannot write manifest.json");
    out << manifest.dump(2) << "\n";
    return manifest;
}

namespace {

std::vector<csv::Record> read_report(const fs::path& dir, const std::string& name) {
    std::ifstream in(dir / name, std::ios::binary);
    if (!in) throw InputError("missing report file: " + name);
    csv::Reader reader(in);
    std::vector<csv::Record> rows;
    csv::Record rec;
    bool header = true;
    while (reader.next(rec)) {
        if (header) {
            header = false;
            continue;
        }
        if (rec.fields.size() == 1 && rec.fields[0].empty()) continue;
        rows.push_back(rec);
    }
    return rows;
}

}  // namespace

std::string summarize(const std::string& bundle_dir) {
    fs::path dir(bundle_dir);
    std::ostringstream out;

    auto scores = read_report(dir, "scores.csv");
    auto top_by = [&](std::size_t col) {
        std::vector<csv::Record> sorted = scores;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [col](const csv::Record& a, const csv::Record& b) {
                             double va = std::stod(a.fields[col]);
                             double vb = std::stod(b.fields[col]);
                             if (va != vb) return va > vb;
                             return a.fields[0] < b.fields[0];
                         });
        if (sorted.size() > 10) sorted.resize(10);
        return sorted;
    };
    out << "top producers (phs):\n";
    for (const auto& r : top_by(1))
        out << "  " << r.fields[0] << "  phs=" << r.fields[1] << "  chs=" << r.fields[2]
            << "  region=" << r.fields[3] << "\n";
    out << "top connectors (chs):\n";
    for (const auto& r : top_by(2))
        out << "  " << r.fields[0] << "  chs=" << r.fields[2] << "  phs=" << r.fields[1]
            << "  region=" << r.fields[3] << "\n";

    auto communities = read_report(dir, "communities.csv");
    out << "largest communities:\n";
    out << "  ID, Authors, Repos, MS, Dominant Platform, SOP, Dominant type, SOP\n";
    for (std::size_t i = 0; i < communities.size() && i < 5; ++i) {
        const auto& f = communities[i].fields;
        out << "  " << f[0] << ", " << f[1] << ", " << f[2] << ", " << f[3] << ", "
            << (f[4].empty() ? "-" : f[4]) << ", " << (f[5].empty() ? "-" : f[5]) << ", "
            << (f[6].empty() ? "-" : f[6]) << ", " << (f[7].empty() ? "-" : f[7]) << "\n";
    }

    auto reciprocity = read_report(dir, "reciprocity.csv");
    out << "reciprocity index:\n";
    for (const auto& r : reciprocity)
        out << "  " << r.fields[0] << "  pairs=" << r.fields[1] << "  mutual=" << r.fields[2]
            << "  ri=" << r.fields[3] << "\n";

    auto cohorts = read_report(dir, "cohorts.csv");
    out << "yearly cohorts (year: new authors, new repos):\n";
    for (const auto& r : cohorts)
        out << "  " << r.fields[0] << ": " << r.fields[1] << ", " << r.fields[2] << "\n";

    auto matches = read_report(dir, "matches.csv");
    out << "cross-platform matches: " << matches.size() << "\n";
    return out.str();
}

}  // namespace authornet::pipeline
