#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "authornet/community.hpp"
#include "authornet/crossplatform.hpp"
#include "authornet/csv.hpp"
#include "authornet/errors.hpp"
#include "authornet/influence.hpp"
#include "authornet/ingest.hpp"
#include "authornet/pipeline.hpp"
#include "authornet/stats.hpp"

namespace fs = std::filesystem;
using namespace authornet;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitStage = 4;

std::optional<unsigned> env_threads() {
    const char* env = std::getenv("AUTHORNET_THREADS");
    if (!env) return std::nullopt;
    long v = std::strtol(env, nullptr, 10);
    return v >= 1 ? std::optional<unsigned>(static_cast<unsigned>(v)) : std::nullopt;
}

struct CommonFlags {
    std::string config_path;
    std::string authors, repos, interactions, forums, keywords, out;
    std::string weight_mode;
    double tolerance = 0.0;
    long max_iter = 0;
    double phs_knee = 0.0, chs_knee = 0.0;
    long min_size = 0;
    unsigned threads = 0;

    CLI::Option* tolerance_opt = nullptr;
    CLI::Option* max_iter_opt = nullptr;
    CLI::Option* phs_knee_opt = nullptr;
    CLI::Option* chs_knee_opt = nullptr;
    CLI::Option* min_size_opt = nullptr;
    CLI::Option* threads_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (flags override it)");
        cmd->add_option("--authors", authors, "authors CSV (author_id,username)");
        cmd->add_option("--repos", repos, "repositories JSON-lines file");
        cmd->add_option("--interactions", interactions,
                        "interactions CSV (kind,actor_id,target_id,timestamp)");
        cmd->add_option("--forums", forums, "forum posts CSV");
        cmd->add_option("--keywords", keywords, "keyword config JSON (default: built-in sets)");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--weight-mode", weight_mode, "edge weighting: exact or paper-rounded")
            ->check(CLI::IsMember({"exact", "paper-rounded"}));
        tolerance_opt = cmd->add_option("--tolerance", tolerance, "score convergence tolerance");
        max_iter_opt = cmd->add_option("--max-iter", max_iter, "score iteration cap");
        phs_knee_opt = cmd->add_option("--phs-knee", phs_knee, "override detected PHS knee");
        chs_knee_opt = cmd->add_option("--chs-knee", chs_knee, "override detected CHS knee");
        min_size_opt =
            cmd->add_option("--min-size", min_size, "min community author count for leaders");
        threads_opt = cmd->add_option("--threads", threads, "worker thread count");
    }

    pipeline::RunConfig build() const {
        pipeline::RunConfig config;
        if (!config_path.empty()) config = pipeline::RunConfig::from_json_file(config_path);
        if (!authors.empty()) config.authors_path = authors;
        if (!repos.empty()) config.repos_path = repos;
        if (!interactions.empty()) config.interactions_path = interactions;
        if (!forums.empty()) config.forums_path = forums;
        if (!keywords.empty()) config.keywords_path = keywords;
        if (!out.empty()) config.output_dir = out;
        if (!weight_mode.empty())
            config.weight_mode = weight_mode == "exact" ? graph::WeightMode::exact
                                                        : graph::WeightMode::paper_rounded;
        if (tolerance_opt && tolerance_opt->count()) config.tolerance = tolerance;
        if (max_iter_opt && max_iter_opt->count())
            config.max_iter = static_cast<std::size_t>(max_iter);
        if (phs_knee_opt && phs_knee_opt->count()) config.phs_knee = phs_knee;
        if (chs_knee_opt && chs_knee_opt->count()) config.chs_knee = chs_knee;
        if (min_size_opt && min_size_opt->count())
            config.min_community_size = static_cast<std::size_t>(min_size);
        // thread precedence: flag > environment > config file > default
        if (threads_opt && threads_opt->count())
            config.threads = threads;
        else if (auto env = env_threads())
            config.threads = *env;
        return config;
    }
};

void require_inputs(const pipeline::RunConfig& config, bool need_forums) {
    if (config.authors_path.empty() || config.repos_path.empty() ||
        config.interactions_path.empty())
        throw ConfigError("--authors, --repos, and --interactions are required");
    if (need_forums && config.forums_path.empty()) throw ConfigError("--forums is required");
    if (config.output_dir.empty()) throw ConfigError("--out is required");
    if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
    if (config.max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (config.min_community_size < 1) throw ConfigError("min_community_size must be >= 1");
    if (config.threads < 1) throw ConfigError("threads must be >= 1");
}

struct Loaded {
    Corpus corpus;
    ForumCorpus forums;
    KeywordConfig keywords;
};

Loaded load(const pipeline::RunConfig& config, bool with_forums) {
    Loaded data;
    data.corpus = ingest::load_dataset(config.authors_path, config.repos_path,
                                       config.interactions_path);
    if (with_forums) data.forums = ingest::load_forums(config.forums_path);
    data.keywords = config.keywords_path.empty()
                        ? ingest::default_keyword_config()
                        : ingest::load_keyword_config(config.keywords_path);
    return data;
}

graph::AuthorAuthorGraph weighted_aa(const Corpus& corpus, const pipeline::RunConfig& config) {
    graph::AuthorAuthorGraph aa = graph::build_aa_graph(corpus);
    graph::EdgeWeightCalibration calib = graph::calibrate_weights(aa, config.weight_mode);
    return graph::apply_weights(aa, calib);
}

influence::HackerScoreTable score(const graph::AuthorAuthorGraph& aa,
                                  const pipeline::RunConfig& config) {
    return influence::hacker_score(aa, config.tolerance, config.max_iter, config.threads);
}

std::pair<double, double> knees(const influence::HackerScoreTable& table,
                                const pipeline::RunConfig& config) {
    auto knee_of = [](std::vector<double> values) {
        std::sort(values.rbegin(), values.rend());
        return influence::detect_knee(values).value;
    };
    double pk = config.phs_knee ? *config.phs_knee : knee_of(table.phs);
    double ck = config.chs_knee ? *config.chs_knee : knee_of(table.chs);
    return {pk, ck};
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path.string());
    out << content;
}

int cmd_ingest(const CommonFlags& flags) {
    pipeline::RunConfig config = flags.build();
    require_inputs(config, /*need_forums=*/false);
    fs::create_directories(config.output_dir);

    Loaded data = load(config, !config.forums_path.empty());
    ingest::write_rejects((fs::path(config.output_dir) / "rejects.csv").string(),
                          data.corpus.rejects, data.forums.rejects);

    graph::AuthorAuthorGraph aa = weighted_aa(data.corpus, config);
    graph::AuthorRepoGraph ar = graph::build_ar_graph(data.corpus);
    fs::path dir(config.output_dir);
    write_aa_export(aa, (dir / "aa_edges.jsonl").string(), (dir / "aa_nodes.jsonl").string());
    write_ar_export(ar, (dir / "ar_edges.jsonl").string(), (dir / "ar_nodes.jsonl").string());

    std::cout << "authors: " << data.corpus.authors.size() << "\n"
              << "repos: " << data.corpus.repos.size() << "\n"
              << "interactions: " << data.corpus.interactions.size() << "\n"
              << "rows accepted: " << data.corpus.rows_accepted + data.forums.rows_accepted
              << "\n"
              << "rows rejected: " << data.corpus.rows_rejected + data.forums.rows_rejected
              << "\n"
              << "aa edges: " << aa.edges.size() << "\n"
              << "ar edges: " << ar.edges.size() << "\n";
    for (const auto& [forum, s] : data.forums.per_forum)
        std::cout << "forum " << forum << ": users=" << s.users << " threads=" << s.threads
                  << " posts=" << s.posts << "\n";
    return 0;
}

int cmd_influence(const CommonFlags& flags) {
    pipeline::RunConfig config = flags.build();
    require_inputs(config, /*need_forums=*/false);
    fs::create_directories(config.output_dir);

    Loaded data = load(config, false);
    graph::AuthorAuthorGraph aa = weighted_aa(data.corpus, config);
    influence::HackerScoreTable table = score(aa, config);
    auto [pk, ck] = knees(table, config);
    influence::RegionClassification rc = influence::classify_regions(table, pk, ck);

    std::ostringstream scores_csv, hig_csv;
    scores_csv << "author,phs,chs,region\n";
    hig_csv << "author,phs,chs,region\n";
    for (std::size_t i = 0; i < table.authors.size(); ++i) {
        std::string line = csv::join({table.authors[i], pipeline::format_double(table.phs[i]),
                                      pipeline::format_double(table.chs[i]),
                                      std::string(to_string(rc.region[i]))}) +
                           "\n";
        scores_csv << line;
        if (rc.region[i] != influence::Region::D) hig_csv << line;
    }
    fs::path dir(config.output_dir);
    write_file(dir / "scores.csv", scores_csv.str());
    write_file(dir / "hig.csv", hig_csv.str());

    std::size_t n = table.authors.size();
    std::cout << "iterations: " << table.iterations
              << (table.converged ? " (converged)" : " (max_iter reached)") << "\n"
              << "phs knee: " << pipeline::format_double(pk)
              << "  chs knee: " << pipeline::format_double(ck) << "\n"
              << "regions: A=" << rc.count[0] << " B=" << rc.count[1] << " C=" << rc.count[2]
              << " D=" << rc.count[3] << "  (HIG " << rc.hig.size() << "/" << n << ")\n";
    return 0;
}

int cmd_communities(const CommonFlags& flags) {
    pipeline::RunConfig config = flags.build();
    require_inputs(config, /*need_forums=*/false);
    fs::create_directories(config.output_dir);

    Loaded data = load(config, false);
    graph::AuthorAuthorGraph aa = weighted_aa(data.corpus, config);
    influence::HackerScoreTable table = score(aa, config);
    graph::AuthorRepoGraph ar = graph::build_ar_graph(data.corpus);

    std::vector<community::CommunityProfile> communities = community::detect_communities(ar);
    for (auto& c : communities) {
        community::community_leaders(c, table, config.min_community_size);
        community::sop_profile(c, data.corpus, data.keywords);
    }

    fs::path dir(config.output_dir);
    std::ostringstream ccsv;
    ccsv << "id,n_authors,n_repos,ms,dominant_platform,platform_sop,dominant_type,type_sop\n";
    for (const auto& c : communities) {
        std::string dp = community::dominant_keyword(c.sop_platform);
        std::string dt = community::dominant_keyword(c.sop_malware);
        ccsv << csv::join({std::to_string(c.id), std::to_string(c.authors.size()),
                           std::to_string(c.repos.size()),
                           pipeline::format_double(c.modularity_score), dp,
                           dp.empty() ? "" : pipeline::format_double(c.sop_platform.at(dp)), dt,
                           dt.empty() ? "" : pipeline::format_double(c.sop_malware.at(dt))})
             << "\n";
    }
    write_file(dir / "communities.csv", ccsv.str());

    std::ostringstream mcsv;
    mcsv << "node,side,community_id\n";
    std::map<std::pair<std::string, std::string>, std::size_t> rows;
    for (const auto& c : communities) {
        for (const std::string& a : c.authors) rows[{std::string("author"), a}] = c.id;
        for (const std::string& r : c.repos) rows[{std::string("repo"), r}] = c.id;
    }
    for (const auto& [key, id] : rows)
        mcsv << csv::join({key.second, key.first, std::to_string(id)}) << "\n";
    write_file(dir / "membership.csv", mcsv.str());

    std::ostringstream lcsv;
    lcsv << "community_id,role,author_id\n";
    for (const auto& c : communities) {
        for (const std::string& a : c.producer_leaders)
            lcsv << csv::join({std::to_string(c.id), "producer", a}) << "\n";
        for (const std::string& a : c.connector_leaders)
            lcsv << csv::join({std::to_string(c.id), "connector", a}) << "\n";
    }
    write_file(dir / "leaders.csv", lcsv.str());

    for (const auto& c : communities) {
        nlohmann::json cloud = nlohmann::json::object();
        for (const auto& [kw, w] : community::wordcloud_weights(c)) cloud[kw] = w;
        write_file(dir / ("wordcloud_" + std::to_string(c.id) + ".json"), cloud.dump(2) + "\n");
    }

    std::cout << "communities: " << communities.size() << "\n";
    for (std::size_t i = 0; i < communities.size() && i < 5; ++i) {
        const auto& c = communities[i];
        std::cout << "  #" << c.id << " authors=" << c.authors.size()
                  << " repos=" << c.repos.size()
                  << " ms=" << pipeline::format_double(c.modularity_score) << "\n";
    }
    return 0;
}

int cmd_stats(const CommonFlags& flags) {
    pipeline::RunConfig config = flags.build();
    require_inputs(config, /*need_forums=*/false);
    fs::create_directories(config.output_dir);
    fs::path dir(config.output_dir);

    Loaded data = load(config, false);
    for (stats::CcdfMetric metric :
         {stats::CcdfMetric::repos_created, stats::CcdfMetric::followers,
          stats::CcdfMetric::total_forks_received}) {
        stats::CcdfSeries series = stats::ccdf(metric, data.corpus);
        std::ostringstream out;
        out << "value,fraction\n";
        for (const auto& [x, p] : series.points)
            out << pipeline::format_double(x) << "," << pipeline::format_double(p) << "\n";
        write_file(dir / ("ccdf_" + std::string(to_string(metric)) + ".csv"), out.str());
    }
    stats::ForkStats fstats = stats::fork_stats(data.corpus);
    nlohmann::json fork_json = {
        {"mean_forks_per_repo", fstats.mean_forks_per_repo},
        {"fraction_forked_at_least_once", fstats.fraction_forked_at_least_once},
        {"total_fork_events", fstats.total_fork_events}};
    write_file(dir / "fork_stats.json", fork_json.dump(2) + "\n");

    stats::YearlyCohorts yc = stats::yearly_cohorts(data.corpus);
    std::ostringstream cohorts;
    cohorts << "year,new_authors,new_repos\n";
    for (const auto& [year, counts] : yc.by_year)
        cohorts << year << "," << counts.new_authors << "," << counts.new_repos << "\n";
    cohorts << "undated," << yc.undated_authors << "," << yc.undated_repos << "\n";
    write_file(dir / "cohorts.csv", cohorts.str());

    stats::ReciprocityReport report = stats::reciprocity(data.corpus);
    std::ostringstream rcsv;
    rcsv << "relationship,pair_count,mutual_count,ri\n";
    for (const auto& [kind, entry] : report.by_kind)
        rcsv << csv::join({std::string(to_string(kind)), std::to_string(entry.pair_count),
                           std::to_string(entry.mutual_count),
                           entry.ri ? pipeline::format_double(*entry.ri) : "n/a"})
             << "\n";
    write_file(dir / "reciprocity.csv", rcsv.str());

    std::cout << "mean forks/repo: " << pipeline::format_double(fstats.mean_forks_per_repo)
              << "\n"
              << "fraction forked >=1: "
              << pipeline::format_double(fstats.fraction_forked_at_least_once) << "\n";
    for (const auto& [kind, entry] : report.by_kind)
        std::cout << "ri[" << to_string(kind)
                  << "]: " << (entry.ri ? pipeline::format_double(*entry.ri) : "n/a") << "\n";
    return 0;
}

int cmd_egonet(const CommonFlags& flags, const std::string& username, bool all_matched) {
    pipeline::RunConfig config = flags.build();
    require_inputs(config, /*need_forums=*/true);
    if (username.empty() && !all_matched)
        throw ConfigError("egonet needs --username <name> or --all-matched");
    fs::create_directories(config.output_dir);
    fs::path dir(config.output_dir);

    Loaded data = load(config, true);
    graph::AuthorAuthorGraph aa = weighted_aa(data.corpus, config);
    std::vector<crossplatform::Match> matches =
        crossplatform::match_usernames(data.corpus, data.forums);

    std::ostringstream mcsv;
    mcsv << "username,author_ids,forums\n";
    for (const auto& m : matches) {
        std::string ids, forums_joined;
        for (const std::string& id : m.author_ids) ids += (ids.empty() ? "" : ";") + id;
        for (const std::string& f : m.forums)
            forums_joined += (forums_joined.empty() ? "" : ";") + f;
        mcsv << csv::join({m.username, ids, forums_joined}) << "\n";
    }
    write_file(dir / "matches.csv", mcsv.str());

    auto write_egonet = [&](const std::string& name) {
        crossplatform::CrossPlatformEgonet ego =
            crossplatform::cross_egonet(name, aa, data.corpus, data.forums);
        nlohmann::json obj;
        obj["username"] = ego.username;
        obj["github_neighbors"] = ego.github_neighbors;
        obj["forums_active"] = ego.forums_active;
        obj["post_count"] = ego.post_count;
        nlohmann::json fn = nlohmann::json::array();
        for (const auto& [forum, user] : ego.forum_neighbors)
            fn.push_back({{"forum", forum}, {"username", user}});
        obj["forum_neighbors"] = fn;
        std::string fname = "egonet_";
        for (char c : ego.username)
            fname.push_back(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                             c == '_' || c == '.')
                                ? c
                                : '_');
        write_file(dir / (fname + ".json"), obj.dump(2) + "\n");
        std::cout << ego.username << ": github=" << ego.github_neighbors.size()
                  << " forum=" << ego.forum_neighbors.size() << " posts=" << ego.post_count
                  << "\n";
    };

    if (all_matched) {
        std::vector<crossplatform::ScatterPoint> series =
            crossplatform::scatter_series(matches, aa, data.corpus, data.forums);
        std::ostringstream scsv;
        scsv << "username,github_degree,forum_degree\n";
        for (const auto& p : series)
            scsv << csv::join({p.username, std::to_string(p.github_degree),
                               std::to_string(p.forum_degree)})
                 << "\n";
        write_file(dir / "scatter.csv", scsv.str());
        for (const auto& m : matches) write_egonet(m.username);
        std::cout << "matched usernames: " << matches.size() << "\n";
    } else {
        write_egonet(username);
    }
    return 0;
}

int cmd_run(const CommonFlags& flags) {
    pipeline::RunConfig config = flags.build();
    nlohmann::json manifest = pipeline::run_pipeline(config);
    std::cout << "bundle written to " << config.output_dir << " ("
              << manifest["reports"].size() << " report files)\n";
    return 0;
}

int cmd_summarize(const std::string& bundle_dir) {
    std::cout << pipeline::summarize(bundle_dir);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"author ecosystem network analysis"};
    app.require_subcommand(1);

    CommonFlags ingest_flags, influence_flags, communities_flags, stats_flags, egonet_flags,
        run_flags;
    std::string egonet_username, bundle_dir;
    bool all_matched = false;

    CLI::App* ingest_cmd =
        app.add_subcommand("ingest", "validate inputs, write rejects and graph exports");
    ingest_flags.attach(ingest_cmd);
    CLI::App* influence_cmd =
        app.add_subcommand("influence", "producer/connector scores, knees, regions");
    influence_flags.attach(influence_cmd);
    CLI::App* communities_cmd =
        app.add_subcommand("communities", "bipartite communities and profiles");
    communities_flags.attach(communities_cmd);
    CLI::App* stats_cmd = app.add_subcommand("stats", "ccdf, forks, cohorts, reciprocity");
    stats_flags.attach(stats_cmd);
    CLI::App* egonet_cmd = app.add_subcommand("egonet", "cross-platform matching and egonets");
    egonet_flags.attach(egonet_cmd);
    egonet_cmd->add_option("--username", egonet_username, "one username to profile");
    egonet_cmd->add_flag("--all-matched", all_matched, "profile every matched username");
    CLI::App* run_cmd = app.add_subcommand("run", "full pipeline with manifest");
    run_flags.attach(run_cmd);
    CLI::App* summarize_cmd = app.add_subcommand("summarize", "print a bundle digest");
    summarize_cmd->add_option("--bundle", bundle_dir, "bundle directory")->required();

    try {
        app.parse(argc, argv);
        if (ingest_cmd->parsed()) return cmd_ingest(ingest_flags);
        if (influence_cmd->parsed()) return cmd_influence(influence_flags);
        if (communities_cmd->parsed()) return cmd_communities(communities_flags);
        if (stats_cmd->parsed()) return cmd_stats(stats_flags);
        if (egonet_cmd->parsed()) return cmd_egonet(egonet_flags, egonet_username, all_matched);
        if (run_cmd->parsed()) return cmd_run(run_flags);
        if (summarize_cmd->parsed()) return cmd_summarize(bundle_dir);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const StageError& e) {
        std::cerr << "stage failure: " << e.what() << "\n";
        return kExitStage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStage;
    }
    return 0;
}
